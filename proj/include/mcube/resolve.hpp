#pragma once

// Name resolution: surface syntax to core terms. Binders get de Bruijn
// indices (term and interval variables count separately); free names resolve
// against the module's definitions and registered evidence. Derived
// operators expand here.

#include "mcube/macros.hpp"
#include "mcube/surface.hpp"
#include "mcube/term.hpp"

#include <set>
#include <string>
#include <vector>

namespace mcube {

struct GlobalNames {
  std::set<std::string> defs;
  std::set<std::string> evidence;
};

class Resolver {
 public:
  explicit Resolver(const GlobalNames& globals) : globals_(globals) {}

  Term term(const SExpr& e) { return resolve(e); }

  IExpr interval(const SIExpr& e) { return resolve_ie(e); }

  // Enter a pre-existing scope (used when resolving a term inside a context).
  void push_term_binder(const std::string& name) { locals_.push_back({name, false}); }
  void push_interval_binder(const std::string& name) { locals_.push_back({name, true}); }

 private:
  struct Entry {
    std::string name;
    bool is_interval;
  };
  const GlobalNames& globals_;
  std::vector<Entry> locals_;

  [[noreturn]] void err(const SrcSpan& sp, const std::string& msg) { fail_at(sp.line, sp.col, msg); }

  Term resolve_var(const std::string& name, const SrcSpan& sp) {
    uint32_t tcount = 0;
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it) {
      if (it->name == name) {
        if (it->is_interval) err(sp, "interval variable '" + name + "' used as a term");
        return t_var(tcount);
      }
      if (!it->is_interval) ++tcount;
    }
    if (globals_.defs.count(name)) return t_ref(name, RefKind::Def);
    if (globals_.evidence.count(name)) return t_ref(name, RefKind::Evidence);
    err(sp, "unbound identifier '" + name + "'");
  }

  IExpr resolve_ivar(const std::string& name, const SrcSpan& sp) {
    uint32_t icount = 0;
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it) {
      if (it->name == name) {
        if (!it->is_interval) err(sp, "term variable '" + name + "' used as an interval expression");
        return ivar(icount);
      }
      if (it->is_interval) ++icount;
    }
    err(sp, "unbound interval variable '" + name + "'");
  }

  IExpr resolve_ie(const SIExpr& e) {
    switch (e->tag) {
      case SITag::Zero: return izero();
      case SITag::One: return ione();
      case SITag::Var: return resolve_ivar(e->name, e->span);
      case SITag::Meet: return imeet(resolve_ie(e->a), resolve_ie(e->b));
      case SITag::Join: return ijoin(resolve_ie(e->a), resolve_ie(e->b));
      case SITag::Neg: return ineg(resolve_ie(e->a));
    }
    throw InternalError("resolve_ie: bad tag");
  }

  Term under_term(const std::string& name, const SExpr& body) {
    locals_.push_back({name, false});
    Term t = resolve(body);
    locals_.pop_back();
    return t;
  }
  Term under_interval(const std::string& name, const SExpr& body) {
    locals_.push_back({name, true});
    Term t = resolve(body);
    locals_.pop_back();
    return t;
  }

  System resolve_system(const std::vector<SBranch>& sys) {
    System out;
    for (const SBranch& br : sys) {
      Face face;
      for (const SFaceAtom& fa : br.face) {
        IExpr v = resolve_ivar(fa.var, SrcSpan{});
        face.push_back(FaceAtom{v->var, fa.is_one});
      }
      // reject contradictory constraints
      for (size_t i = 0; i < face.size(); ++i)
        for (size_t j = i + 1; j < face.size(); ++j)
          if (face[i].var == face[j].var && face[i].is_one != face[j].is_one)
            fail_at(0, 0, "face constrains a variable to both endpoints");
      out.push_back(Branch{std::move(face), under_interval(br.iname, br.side), br.iname});
    }
    return out;
  }

  Term resolve(const SExpr& e) {
    Span core_span{e->span.line, e->span.col};
    Term t = resolve_raw(e);
    if (core_span.valid() && !t->span.valid()) t = with_span(t, core_span);
    return t;
  }

  Term resolve_raw(const SExpr& e) {
    switch (e->tag) {
      case STag::Var: return resolve_var(e->name, e->span);
      case STag::U: return t_u();
      case STag::Unit: return t_unit();
      case STag::TT: return t_tt();
      case STag::Empty: return t_empty();
      case STag::Bool: return t_bool();
      case STag::True: return t_true();
      case STag::False: return t_false();
      case STag::Pi: return t_pi(e->name, resolve(e->a), under_term(e->name, e->b));
      case STag::Lam: return t_lam(e->name, under_term(e->name, e->a));
      case STag::App: return t_app(resolve(e->a), resolve(e->b));
      case STag::Sigma: return t_sigma(e->name, resolve(e->a), under_term(e->name, e->b));
      case STag::Pair: return t_pair(resolve(e->a), resolve(e->b));
      case STag::Fst: return t_fst(resolve(e->a));
      case STag::Snd: return t_snd(resolve(e->a));
      case STag::Sum: return t_sum(resolve(e->a), resolve(e->b));
      case STag::Inl: return t_inl(resolve(e->a));
      case STag::Inr: return t_inr(resolve(e->a));
      case STag::Case:
        return t_case(resolve(e->a), resolve(e->b), resolve(e->c), resolve(e->d));
      case STag::PathP:
        return t_pathp(e->name, under_interval(e->name, e->a), resolve(e->b), resolve(e->c));
      case STag::Path:
        return t_pathp("_", under_interval("", e->a), resolve(e->b), resolve(e->c));
      case STag::Plam: return t_plam(e->name, under_interval(e->name, e->a));
      case STag::Papp: return t_papp(resolve(e->a), resolve_ie(e->ie));
      case STag::Absurd: return t_absurd(resolve(e->a), resolve(e->b));
      case STag::If:
        return t_if(resolve(e->a), resolve(e->b), resolve(e->c), resolve(e->d));
      case STag::Transp:
        return t_transp(e->name, under_interval(e->name, e->a), resolve_ie(e->ie), resolve(e->b));
      case STag::HComp: {
        Term type = resolve(e->a);
        System sys = resolve_system(e->sys);
        Term base = resolve(e->b);
        return t_hcomp(std::move(type), system_extent(sys), std::move(sys), std::move(base));
      }
      case STag::Let:
        return t_let(e->name, resolve(e->a), resolve(e->b), under_term(e->name, e->c));
      // ----- derived operators -----
      case STag::Transport:
        return m_transport(e->name, under_interval(e->name, e->a), resolve(e->b));
      case STag::TranspFiller:
        return m_transp_filler(under_interval(e->name, e->a), resolve_ie(e->ie), resolve(e->b));
      case STag::Comp:
        return m_comp(e->name, under_interval(e->name, e->a), resolve_system(e->sys),
                      resolve(e->b));
      case STag::HFill:
        return m_hfill(resolve(e->a), resolve_system(e->sys), resolve(e->b), resolve_ie(e->ie));
      case STag::Refl: return m_refl(resolve(e->a));
      case STag::J: return m_J(resolve(e->a), resolve(e->b), resolve(e->c));
      case STag::TransportRefl: return m_transport_refl(resolve(e->a), resolve(e->b));
    }
    throw InternalError("resolve: bad tag");
  }
};

}  // namespace mcube
