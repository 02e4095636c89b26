#pragma once

// Pretty-printer: core terms back to surface syntax, then to text. The
// grammar matches the parser, so printing and re-parsing is identity up to
// alpha equivalence.

#include "mcube/surface.hpp"
#include "mcube/term.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mcube {

// ----- core -> surface -----

class SurfaceBuilder {
 public:
  SurfaceBuilder(std::vector<std::string> tnames, std::vector<std::string> inames,
                 std::set<std::string> used)
      : tnames_(std::move(tnames)), inames_(std::move(inames)), used_(std::move(used)) {
    for (const auto& n : tnames_) used_.insert(n);
    for (const auto& n : inames_) used_.insert(n);
  }

  SExpr term(const Term& t) { return go(t); }

  SIExpr interval(const IExpr& e) { return go_ie(e); }

 private:
  std::vector<std::string> tnames_, inames_;
  std::set<std::string> used_;
  uint64_t counter_ = 0;

  static bool plain_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return s != "_";
  }

  std::string fresh(const std::string& hint, const char* pool) {
    std::string base = plain_ident(hint) ? hint : std::string(1, pool[0]);
    if (!used_.count(base)) {
      used_.insert(base);
      return base;
    }
    for (;;) {
      std::string cand = base + "'" + (counter_ ? std::to_string(counter_) : "");
      if (counter_ == 0) cand = base + "'";
      if (!used_.count(cand)) {
        used_.insert(cand);
        return cand;
      }
      ++counter_;
    }
  }

  std::string tname(uint32_t idx) const {
    if (idx < tnames_.size()) return tnames_[tnames_.size() - 1 - idx];
    return "!t" + std::to_string(idx);
  }
  std::string iname(uint32_t idx) const {
    if (idx < inames_.size()) return inames_[inames_.size() - 1 - idx];
    return "!i" + std::to_string(idx);
  }

  struct TScope {
    SurfaceBuilder& b;
    TScope(SurfaceBuilder& sb, std::string n) : b(sb) { b.tnames_.push_back(std::move(n)); }
    ~TScope() { b.tnames_.pop_back(); }
  };
  struct IScope {
    SurfaceBuilder& b;
    IScope(SurfaceBuilder& sb, std::string n) : b(sb) { b.inames_.push_back(std::move(n)); }
    ~IScope() { b.inames_.pop_back(); }
  };

  SIExpr go_ie(const IExpr& e) {
    switch (e->tag) {
      case ITag::Zero: return si0();
      case ITag::One: return si1();
      case ITag::Var: return siv(iname(e->var));
      case ITag::Neg: return sineg(go_ie(e->a));
      case ITag::Meet: return simeet(go_ie(e->a), go_ie(e->b));
      case ITag::Join: return sijoin(go_ie(e->a), go_ie(e->b));
    }
    throw InternalError("go_ie: bad tag");
  }

  std::vector<SBranch> go_system(const System& sys) {
    std::vector<SBranch> out;
    for (const Branch& br : sys) {
      SBranch sbr;
      for (const FaceAtom& fa : br.face) sbr.face.push_back(SFaceAtom{iname(fa.var), fa.is_one});
      sbr.iname = fresh(br.iname, "jk");
      {
        IScope s(*this, sbr.iname);
        sbr.side = go(br.side);
      }
      out.push_back(std::move(sbr));
    }
    return out;
  }

  SExpr go(const Term& t) {
    switch (t->tag) {
      case TTag::U: return su();
      case TTag::Unit: return sunit();
      case TTag::TT: return stt();
      case TTag::Empty: return sempty();
      case TTag::Bool: return sbool();
      case TTag::True: return strue();
      case TTag::False: return sfalse();
      case TTag::Var: return sv(tname(t->idx));
      case TTag::Ref: return sv(t->name);
      case TTag::Pi: {
        SExpr dom = go(t->a);
        if (!tmentions_var(t->b, 0)) {
          TScope s(*this, "");
          return sarrow(dom, go(t->b));
        }
        std::string n = fresh(t->name, "xyzavw");
        TScope s(*this, n);
        return spi(n, dom, go(t->b));
      }
      case TTag::Lam: {
        std::string n = fresh(t->name, "xyzavw");
        TScope s(*this, n);
        return slam(n, go(t->a));
      }
      case TTag::App: return sapp(go(t->a), go(t->b));
      case TTag::Sigma: {
        SExpr fst = go(t->a);
        if (!tmentions_var(t->b, 0)) {
          TScope s(*this, "");
          return ssigma("", fst, go(t->b));
        }
        std::string n = fresh(t->name, "xyzavw");
        TScope s(*this, n);
        return ssigma(n, fst, go(t->b));
      }
      case TTag::Pair: return spair(go(t->a), go(t->b));
      case TTag::Fst: return sfst(go(t->a));
      case TTag::Snd: return ssnd(go(t->a));
      case TTag::Sum: return ssum(go(t->a), go(t->b));
      case TTag::Inl: return sinl(go(t->a));
      case TTag::Inr: return sinr(go(t->a));
      case TTag::Case: return scase(go(t->a), go(t->b), go(t->c), go(t->d));
      case TTag::PathP: {
        if (!tmentions_ivar(t->a, 0)) {
          Term plain = inst_ivar(t->a, izero());
          return spath(go(plain), go(t->b), go(t->c));
        }
        std::string n = fresh(t->name, "ijkmn");
        SExpr l = go(t->b), r = go(t->c);
        IScope s(*this, n);
        return spathp(n, go(t->a), l, r);
      }
      case TTag::PLam: {
        std::string n = fresh(t->name, "ijkmn");
        IScope s(*this, n);
        return splam(n, go(t->a));
      }
      case TTag::PApp: return spapp(go(t->a), go_ie(t->ie));
      case TTag::Absurd: return sabsurd(go(t->a), go(t->b));
      case TTag::If: return sif(go(t->a), go(t->b), go(t->c), go(t->d));
      case TTag::Transp: {
        std::string n = fresh(t->name, "ijkmn");
        SIExpr phi = go_ie(t->ie);
        SExpr arg = go(t->b);
        IScope s(*this, n);
        return stransp(n, go(t->a), phi, arg);
      }
      case TTag::HComp: {
        SExpr ty = go(t->a);
        auto sys = go_system(t->sys);
        return shcomp(ty, std::move(sys), go(t->b));
      }
      case TTag::Let: {
        SExpr annot = go(t->a), bound = go(t->b);
        std::string n = fresh(t->name, "xyzavw");
        TScope s(*this, n);
        return slet(n, annot, bound, go(t->c));
      }
    }
    throw InternalError("go: bad tag");
  }
};

// ----- surface -> text -----

namespace detail {

inline int slevel(const SExpr& e) {
  switch (e->tag) {
    case STag::Lam:
    case STag::Plam:
    case STag::Let:
      return 0;
    case STag::Pi:
      return 1;
    case STag::Sigma:
      return 2;
    case STag::Sum:
      return 3;
    case STag::Papp:
      return 4;
    case STag::App:
    case STag::Case:
    case STag::If:
    case STag::Absurd:
    case STag::Inl:
    case STag::Inr:
    case STag::Path:
    case STag::PathP:
    case STag::Transp:
    case STag::HComp:
    case STag::Transport:
    case STag::TranspFiller:
    case STag::Comp:
    case STag::HFill:
    case STag::Refl:
    case STag::J:
    case STag::TransportRefl:
      return 5;
    case STag::Fst:
    case STag::Snd:
      return 6;
    default:
      return 7;
  }
}

inline void show_ie(std::ostream& os, const SIExpr& e, int level) {
  int mine;
  switch (e->tag) {
    case SITag::Join: mine = 1; break;
    case SITag::Meet: mine = 2; break;
    default: mine = 3; break;
  }
  if (mine < level) os << "(";
  switch (e->tag) {
    case SITag::Zero: os << "0"; break;
    case SITag::One: os << "1"; break;
    case SITag::Var: os << e->name; break;
    case SITag::Neg:
      os << "~";
      show_ie(os, e->a, 3);
      break;
    case SITag::Meet:
      show_ie(os, e->a, 2);
      os << " /\\ ";
      show_ie(os, e->b, 3);
      break;
    case SITag::Join:
      show_ie(os, e->a, 1);
      os << " \\/ ";
      show_ie(os, e->b, 2);
      break;
  }
  if (mine < level) os << ")";
}

inline void show(std::ostream& os, const SExpr& e, int level);

inline void show_line(std::ostream& os, const std::string& iname, const SExpr& body) {
  os << "(\\" << (iname.empty() ? "_" : iname) << ". ";
  show(os, body, 0);
  os << ")";
}

inline void show_system(std::ostream& os, const std::vector<SBranch>& sys) {
  os << "[ ";
  bool first = true;
  for (const SBranch& br : sys) {
    if (!first) os << " , ";
    first = false;
    for (size_t k = 0; k < br.face.size(); ++k) {
      if (k) os << " ";
      os << "(" << br.face[k].var << "=" << (br.face[k].is_one ? "1" : "0") << ")";
    }
    os << " -> \\" << br.iname << ". ";
    show(os, br.side, 0);
  }
  os << " ]";
}

inline void show(std::ostream& os, const SExpr& e, int level) {
  int mine = slevel(e);
  if (mine < level) os << "(";
  switch (e->tag) {
    case STag::Var: os << e->name; break;
    case STag::U: os << "U"; break;
    case STag::Unit: os << "Unit"; break;
    case STag::TT: os << "tt"; break;
    case STag::Empty: os << "Empty"; break;
    case STag::Bool: os << "Bool"; break;
    case STag::True: os << "true"; break;
    case STag::False: os << "false"; break;
    case STag::Lam:
      os << "\\" << (e->name.empty() ? "_" : e->name) << ". ";
      show(os, e->a, 0);
      break;
    case STag::Plam:
      os << "<" << (e->name.empty() ? "_" : e->name) << "> ";
      show(os, e->a, 0);
      break;
    case STag::Let:
      os << "let " << e->name << " : ";
      show(os, e->a, 0);
      os << " := ";
      show(os, e->b, 0);
      os << " in ";
      show(os, e->c, 0);
      break;
    case STag::Pi:
      if (e->name.empty()) {
        show(os, e->a, 2);
        os << " -> ";
        show(os, e->b, 1);
      } else {
        os << "(" << e->name << " : ";
        show(os, e->a, 0);
        os << ") -> ";
        show(os, e->b, 1);
      }
      break;
    case STag::Sigma:
      if (e->name.empty()) {
        show(os, e->a, 3);
        os << " * ";
        show(os, e->b, 2);
      } else {
        os << "(" << e->name << " : ";
        show(os, e->a, 0);
        os << ") * ";
        show(os, e->b, 2);
      }
      break;
    case STag::Sum:
      show(os, e->a, 4);
      os << " + ";
      show(os, e->b, 3);
      break;
    case STag::Papp:
      show(os, e->a, 4);
      os << " @ ";
      show_ie(os, e->ie, 3);
      break;
    case STag::App:
      show(os, e->a, 5);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::Fst:
      show(os, e->a, 6);
      os << " .1";
      break;
    case STag::Snd:
      show(os, e->a, 6);
      os << " .2";
      break;
    case STag::Pair:
      os << "(";
      show(os, e->a, 0);
      os << " , ";
      show(os, e->b, 0);
      os << ")";
      break;
    case STag::Inl:
      os << "inl ";
      show(os, e->a, 6);
      break;
    case STag::Inr:
      os << "inr ";
      show(os, e->a, 6);
      break;
    case STag::Case:
      os << "case ";
      show(os, e->a, 6);
      os << " ";
      show(os, e->b, 6);
      os << " ";
      show(os, e->c, 6);
      os << " ";
      show(os, e->d, 6);
      break;
    case STag::If:
      os << "if ";
      show(os, e->a, 6);
      os << " ";
      show(os, e->b, 6);
      os << " ";
      show(os, e->c, 6);
      os << " ";
      show(os, e->d, 6);
      break;
    case STag::Absurd:
      os << "absurd ";
      show(os, e->a, 6);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::Path:
      os << "Path ";
      show(os, e->a, 6);
      os << " ";
      show(os, e->b, 6);
      os << " ";
      show(os, e->c, 6);
      break;
    case STag::PathP:
      os << "PathP ";
      show_line(os, e->name, e->a);
      os << " ";
      show(os, e->b, 6);
      os << " ";
      show(os, e->c, 6);
      break;
    case STag::Transp:
      os << "transp ";
      show_line(os, e->name, e->a);
      os << " ";
      show_ie(os, e->ie, 3);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::HComp:
      os << "hcomp ";
      show(os, e->a, 6);
      os << " ";
      show_system(os, e->sys);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::Transport:
      os << "transport ";
      show_line(os, e->name, e->a);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::TranspFiller:
      os << "transpFiller ";
      show_line(os, e->name, e->a);
      os << " ";
      show_ie(os, e->ie, 3);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::Comp:
      os << "comp ";
      show_line(os, e->name, e->a);
      os << " ";
      show_system(os, e->sys);
      os << " ";
      show(os, e->b, 6);
      break;
    case STag::HFill:
      os << "hfill ";
      show(os, e->a, 6);
      os << " ";
      show_system(os, e->sys);
      os << " ";
      show(os, e->b, 6);
      os << " ";
      show_ie(os, e->ie, 3);
      break;
    case STag::Refl:
      os << "refl ";
      show(os, e->a, 6);
      break;
    case STag::J:
      os << "J ";
      show(os, e->a, 6);
      os << " ";
      show(os, e->b, 6);
      os << " ";
      show(os, e->c, 6);
      break;
    case STag::TransportRefl:
      os << "transportRefl ";
      show(os, e->a, 6);
      os << " ";
      show(os, e->b, 6);
      break;
  }
  if (mine < level) os << ")";
}

}  // namespace detail

inline std::string show_surface(const SExpr& e) {
  std::ostringstream os;
  detail::show(os, e, 0);
  return os.str();
}

inline std::string print_term(const Term& t, std::set<std::string> avoid = {},
                              std::vector<std::string> tnames = {},
                              std::vector<std::string> inames = {}) {
  SurfaceBuilder b(std::move(tnames), std::move(inames), std::move(avoid));
  return show_surface(b.term(t));
}

inline std::string print_iexpr(const IExpr& e, std::vector<std::string> inames = {}) {
  SurfaceBuilder b({}, std::move(inames), {});
  std::ostringstream os;
  detail::show_ie(os, b.interval(e), 0);
  return os.str();
}

}  // namespace mcube
