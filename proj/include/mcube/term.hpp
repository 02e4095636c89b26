#pragma once

// Core term language: binders with de Bruijn indices (separate spaces for
// term and interval variables), partial-element systems, substitution and
// shifting, alpha equality, and the Kan-operation counter.

#include "mcube/interval.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mcube {

struct Span {
  uint32_t line = 0, col = 0;
  bool valid() const { return line > 0; }
};

enum class TTag : uint8_t {
  U,
  Pi,     // a = domain, b = codomain (binds 1 term var)
  Lam,    // a = body (binds 1 term var)
  App,    // a = function, b = argument
  Sigma,  // a = first, b = second (binds 1 term var)
  Pair,   // a, b
  Fst,    // a
  Snd,    // a
  Sum,    // a, b
  Inl,    // a
  Inr,    // a
  Case,   // a = scrutinee, b = motive, c = left branch, d = right branch
  PathP,  // a = line (binds 1 interval var), b = left, c = right
  PLam,   // a = body (binds 1 interval var)
  PApp,   // a = path, ie = interval argument
  Unit,
  TT,
  Empty,
  Absurd,  // a = motive, b = element of Empty
  Bool,
  True,
  False,
  If,      // a = motive, b = scrutinee, c = then, d = else
  Transp,  // a = line (binds 1 interval var), ie = phi, b = argument
  HComp,   // a = type, ie = phi, sys = sides, b = base
  Var,     // idx
  Let,     // a = annotation, b = bound, c = body (binds 1 term var)
  Ref,     // name + kind: top-level definition or registered evidence
};

enum class RefKind : uint8_t { Def, Evidence };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct FaceAtom {
  uint32_t var;  // interval variable index
  bool is_one;   // constraint var = 1 (else var = 0)
  friend bool operator==(const FaceAtom&, const FaceAtom&) = default;
};
using Face = std::vector<FaceAtom>;  // conjunction of constraints

struct Branch {
  Face face;
  Term side;          // binds 1 interval var (the composition direction)
  std::string iname;  // binder hint
};
using System = std::vector<Branch>;

struct TermNode {
  TTag tag;
  Term a, b, c, d;
  IExpr ie;
  System sys;
  uint32_t idx = 0;
  RefKind ref = RefKind::Def;
  std::string name;  // binder hint or reference name
  Span span;
};

// --------------------------------------------------------------------------
// Constructors

namespace detail {
inline Term node(TTag tag, Term a = nullptr, Term b = nullptr, Term c = nullptr,
                 Term d = nullptr) {
  auto n = std::make_shared<TermNode>();
  n->tag = tag;
  n->a = std::move(a);
  n->b = std::move(b);
  n->c = std::move(c);
  n->d = std::move(d);
  return n;
}
}  // namespace detail

inline Term t_u() { return detail::node(TTag::U); }
inline Term t_unit() { return detail::node(TTag::Unit); }
inline Term t_tt() { return detail::node(TTag::TT); }
inline Term t_empty() { return detail::node(TTag::Empty); }
inline Term t_bool() { return detail::node(TTag::Bool); }
inline Term t_true() { return detail::node(TTag::True); }
inline Term t_false() { return detail::node(TTag::False); }

inline Term t_pi(std::string name, Term dom, Term cod) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Pi;
  n->a = std::move(dom);
  n->b = std::move(cod);
  n->name = std::move(name);
  return n;
}
inline Term t_lam(std::string name, Term body) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Lam;
  n->a = std::move(body);
  n->name = std::move(name);
  return n;
}
inline Term t_app(Term f, Term x) { return detail::node(TTag::App, std::move(f), std::move(x)); }
inline Term t_sigma(std::string name, Term fst, Term snd) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Sigma;
  n->a = std::move(fst);
  n->b = std::move(snd);
  n->name = std::move(name);
  return n;
}
inline Term t_pair(Term a, Term b) { return detail::node(TTag::Pair, std::move(a), std::move(b)); }
inline Term t_fst(Term p) { return detail::node(TTag::Fst, std::move(p)); }
inline Term t_snd(Term p) { return detail::node(TTag::Snd, std::move(p)); }
inline Term t_sum(Term a, Term b) { return detail::node(TTag::Sum, std::move(a), std::move(b)); }
inline Term t_inl(Term a) { return detail::node(TTag::Inl, std::move(a)); }
inline Term t_inr(Term a) { return detail::node(TTag::Inr, std::move(a)); }
inline Term t_case(Term scrut, Term motive, Term l, Term r) {
  return detail::node(TTag::Case, std::move(scrut), std::move(motive), std::move(l), std::move(r));
}
inline Term t_pathp(std::string iname, Term line, Term l, Term r) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::PathP;
  n->a = std::move(line);
  n->b = std::move(l);
  n->c = std::move(r);
  n->name = std::move(iname);
  return n;
}
inline Term t_plam(std::string iname, Term body) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::PLam;
  n->a = std::move(body);
  n->name = std::move(iname);
  return n;
}
inline Term t_papp(Term p, IExpr at) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::PApp;
  n->a = std::move(p);
  n->ie = std::move(at);
  return n;
}
inline Term t_absurd(Term motive, Term e) {
  return detail::node(TTag::Absurd, std::move(motive), std::move(e));
}
inline Term t_if(Term motive, Term scrut, Term thenB, Term elseB) {
  return detail::node(TTag::If, std::move(motive), std::move(scrut), std::move(thenB),
                      std::move(elseB));
}
inline Term t_transp(std::string iname, Term line, IExpr phi, Term arg) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Transp;
  n->a = std::move(line);
  n->ie = std::move(phi);
  n->b = std::move(arg);
  n->name = std::move(iname);
  return n;
}
inline Term t_hcomp(Term type, IExpr phi, System sys, Term base) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::HComp;
  n->a = std::move(type);
  n->ie = std::move(phi);
  n->sys = std::move(sys);
  n->b = std::move(base);
  return n;
}
inline Term t_var(uint32_t idx) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Var;
  n->idx = idx;
  return n;
}
inline Term t_let(std::string name, Term annot, Term bound, Term body) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Let;
  n->a = std::move(annot);
  n->b = std::move(bound);
  n->c = std::move(body);
  n->name = std::move(name);
  return n;
}
inline Term t_ref(std::string name, RefKind kind) {
  auto n = std::make_shared<TermNode>();
  n->tag = TTag::Ref;
  n->name = std::move(name);
  n->ref = kind;
  return n;
}

inline Term with_span(Term t, Span sp) {
  auto n = std::make_shared<TermNode>(*t);
  n->span = sp;
  return n;
}

inline IExpr face_to_iexpr(const Face& f) {
  IExpr acc = ione();
  for (const FaceAtom& fa : f) {
    IExpr lit = fa.is_one ? ivar(fa.var) : ineg(ivar(fa.var));
    acc = acc->tag == ITag::One ? lit : imeet(acc, lit);
  }
  return acc;
}

inline IExpr system_extent(const System& sys) {
  IExpr acc = izero();
  for (const Branch& br : sys) {
    IExpr f = face_to_iexpr(br.face);
    acc = acc->tag == ITag::Zero ? f : ijoin(acc, f);
  }
  return acc;
}

// --------------------------------------------------------------------------
// Generic traversal: rebuild a term, mapping variables and embedded interval
// expressions. Callbacks receive the number of term/interval binders crossed.

namespace detail {

using VarFn = std::function<Term(uint32_t idx, uint32_t tdepth, uint32_t idepth)>;
using IvarFn = std::function<IExpr(const IExpr&, uint32_t tdepth, uint32_t idepth)>;

inline Term transform(const Term& t, uint32_t td, uint32_t id, const VarFn& fv,
                      const IvarFn& fi) {
  auto go = [&](const Term& s, uint32_t dtd, uint32_t did) {
    return transform(s, td + dtd, id + did, fv, fi);
  };
  switch (t->tag) {
    case TTag::U:
    case TTag::Unit:
    case TTag::TT:
    case TTag::Empty:
    case TTag::Bool:
    case TTag::True:
    case TTag::False:
    case TTag::Ref:
      return t;
    case TTag::Var:
      return fv(t->idx, td, id);
    case TTag::Pi: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 0);
      n->b = go(t->b, 1, 0);
      return n;
    }
    case TTag::Lam: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 1, 0);
      return n;
    }
    case TTag::App:
    case TTag::Pair:
    case TTag::Sum:
      return detail::node(t->tag, go(t->a, 0, 0), go(t->b, 0, 0));
    case TTag::Sigma: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 0);
      n->b = go(t->b, 1, 0);
      return n;
    }
    case TTag::Fst:
    case TTag::Snd:
    case TTag::Inl:
    case TTag::Inr:
      return detail::node(t->tag, go(t->a, 0, 0));
    case TTag::Case:
    case TTag::If:
      return detail::node(t->tag, go(t->a, 0, 0), go(t->b, 0, 0), go(t->c, 0, 0),
                          go(t->d, 0, 0));
    case TTag::Absurd:
      return detail::node(t->tag, go(t->a, 0, 0), go(t->b, 0, 0));
    case TTag::PathP: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 1);
      n->b = go(t->b, 0, 0);
      n->c = go(t->c, 0, 0);
      return n;
    }
    case TTag::PLam: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 1);
      return n;
    }
    case TTag::PApp: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 0);
      n->ie = fi(t->ie, td, id);
      return n;
    }
    case TTag::Transp: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 1);
      n->ie = fi(t->ie, td, id);
      n->b = go(t->b, 0, 0);
      return n;
    }
    case TTag::HComp: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 0);
      n->ie = fi(t->ie, td, id);
      n->b = go(t->b, 0, 0);
      System sys;
      for (const Branch& br : t->sys) {
        Face face;
        for (const FaceAtom& fa : br.face) {
          IExpr mapped = fi(ivar(fa.var), td, id);
          // faces stay literal: the callback must send face vars to vars
          if (mapped->tag != ITag::Var)
            throw std::logic_error("transform: face variable mapped to non-variable");
          face.push_back(FaceAtom{mapped->var, fa.is_one});
        }
        sys.push_back(Branch{std::move(face), go(br.side, 0, 1), br.iname});
      }
      n->sys = std::move(sys);
      return n;
    }
    case TTag::Let: {
      auto n = std::make_shared<TermNode>(*t);
      n->a = go(t->a, 0, 0);
      n->b = go(t->b, 0, 0);
      n->c = go(t->c, 1, 0);
      return n;
    }
  }
  throw std::logic_error("transform: bad tag");
}

}  // namespace detail

// Shift term variables >= cutoff by delta.
inline Term tshift_term(const Term& t, int delta, uint32_t cutoff = 0) {
  if (delta == 0) return t;
  return detail::transform(
      t, 0, 0,
      [&](uint32_t idx, uint32_t td, uint32_t) -> Term {
        if (idx < cutoff + td) return t_var(idx);
        return t_var(static_cast<uint32_t>(static_cast<int64_t>(idx) + delta));
      },
      [](const IExpr& e, uint32_t, uint32_t) { return e; });
}

// Shift interval variables >= cutoff by delta.
inline Term tshift_ivar(const Term& t, int delta, uint32_t cutoff = 0) {
  if (delta == 0) return t;
  return detail::transform(
      t, 0, 0, [](uint32_t idx, uint32_t, uint32_t) { return t_var(idx); },
      [&](const IExpr& e, uint32_t, uint32_t id) { return ishift(e, delta, cutoff + id); });
}

// Capture-avoiding substitution of term variable `j`, lowering higher indices.
inline Term subst_term(const Term& t, uint32_t j, const Term& s) {
  return detail::transform(
      t, 0, 0,
      [&](uint32_t idx, uint32_t td, uint32_t id) -> Term {
        if (idx == j + td) return tshift_ivar(tshift_term(s, static_cast<int>(td)), static_cast<int>(id));
        if (idx > j + td) return t_var(idx - 1);
        return t_var(idx);
      },
      [](const IExpr& e, uint32_t, uint32_t) { return e; });
}

// Capture-avoiding substitution of interval variable `j`, lowering higher
// interval indices. The replacement is shifted under interval binders.
inline Term subst_interval(const Term& t, uint32_t j, const IExpr& s) {
  return detail::transform(
      t, 0, 0, [](uint32_t idx, uint32_t, uint32_t) { return t_var(idx); },
      [&](const IExpr& e, uint32_t, uint32_t id) -> IExpr {
        return isubst_lower(e, j + id, ishift(s, static_cast<int>(id)));
      });
}

// Instantiate the bound variable of a one-binder body.
inline Term inst_term(const Term& body, const Term& arg) { return subst_term(body, 0, arg); }
inline Term inst_ivar(const Term& body, const IExpr& arg) { return subst_interval(body, 0, arg); }

// --------------------------------------------------------------------------
// Structural equality up to binder names and spans (alpha equality, since
// variables are de Bruijn indices). Interval expressions compare as trees.

inline bool iexpr_equal(const IExpr& x, const IExpr& y) {
  if (x.get() == y.get()) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case ITag::Zero:
    case ITag::One:
      return true;
    case ITag::Var:
      return x->var == y->var;
    case ITag::Neg:
      return iexpr_equal(x->a, y->a);
    case ITag::Meet:
    case ITag::Join:
      return iexpr_equal(x->a, y->a) && iexpr_equal(x->b, y->b);
  }
  return false;
}

inline bool term_equal(const Term& x, const Term& y) {
  if (x.get() == y.get()) return true;
  if (!x || !y) return x == y;
  if (x->tag != y->tag) return false;
  if (x->idx != y->idx) return false;
  if (x->tag == TTag::Ref && (x->name != y->name || x->ref != y->ref)) return false;
  if ((x->ie != nullptr) != (y->ie != nullptr)) return false;
  if (x->ie && !iexpr_equal(x->ie, y->ie)) return false;
  if (x->sys.size() != y->sys.size()) return false;
  for (size_t i = 0; i < x->sys.size(); ++i) {
    if (x->sys[i].face != y->sys[i].face) return false;
    if (!term_equal(x->sys[i].side, y->sys[i].side)) return false;
  }
  for (auto pick : {&TermNode::a, &TermNode::b, &TermNode::c, &TermNode::d}) {
    const Term& xa = (*x).*pick;
    const Term& ya = (*y).*pick;
    if ((xa != nullptr) != (ya != nullptr)) return false;
    if (xa && !term_equal(xa, ya)) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Syntactic analyses

struct KanCount {
  uint64_t hcomp = 0;
  uint64_t transp = 0;
  friend bool operator==(const KanCount&, const KanCount&) = default;
  KanCount& operator+=(const KanCount& o) {
    hcomp += o.hcomp;
    transp += o.transp;
    return *this;
  }
  uint64_t total() const { return hcomp + transp; }
};

inline void kan_count_rec(const Term& t, KanCount& acc) {
  if (!t) return;
  if (t->tag == TTag::HComp) ++acc.hcomp;
  if (t->tag == TTag::Transp) ++acc.transp;
  kan_count_rec(t->a, acc);
  kan_count_rec(t->b, acc);
  kan_count_rec(t->c, acc);
  kan_count_rec(t->d, acc);
  for (const Branch& br : t->sys) kan_count_rec(br.side, acc);
}

inline KanCount kan_count(const Term& t) {
  KanCount acc;
  kan_count_rec(t, acc);
  return acc;
}

// Does the term mention interval variable `idx` (relative to its root)?
inline bool tmentions_ivar(const Term& t, uint32_t idx) {
  if (!t) return false;
  bool found = false;
  detail::transform(
      t, 0, 0, [](uint32_t i, uint32_t, uint32_t) { return t_var(i); },
      [&](const IExpr& e, uint32_t, uint32_t id) {
        if (mentions_ivar(e, idx + id)) found = true;
        return e;
      });
  return found;
}

// Does the term mention term variable `idx` (relative to its root)?
inline bool tmentions_var(const Term& t, uint32_t idx) {
  if (!t) return false;
  bool found = false;
  detail::transform(
      t, 0, 0,
      [&](uint32_t i, uint32_t td, uint32_t) {
        if (i == idx + td) found = true;
        return t_var(i);
      },
      [](const IExpr& e, uint32_t, uint32_t) { return e; });
  return found;
}

inline void collect_refs(const Term& t, std::set<std::pair<std::string, RefKind>>& out) {
  if (!t) return;
  if (t->tag == TTag::Ref) out.emplace(t->name, t->ref);
  collect_refs(t->a, out);
  collect_refs(t->b, out);
  collect_refs(t->c, out);
  collect_refs(t->d, out);
  for (const Branch& br : t->sys) collect_refs(br.side, out);
}

}  // namespace mcube
