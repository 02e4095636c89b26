#pragma once

// Named surface syntax shared by the parser, the pretty-printer, and the
// synthesizer's term builders. Resolution turns it into core terms; derived
// operators (transport, transp-filler, comp, hfill, refl, J, transportRefl)
// exist only here and expand during resolution.

#include "mcube/diagnostics.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mcube {

// ----- surface interval expressions -----

struct SIExprNode;
using SIExpr = std::shared_ptr<const SIExprNode>;

enum class SITag : uint8_t { Zero, One, Var, Meet, Join, Neg };

struct SIExprNode {
  SITag tag;
  std::string name;
  SIExpr a, b;
  SrcSpan span;
};

inline SIExpr si0() {
  static const SIExpr e = std::make_shared<SIExprNode>(SIExprNode{SITag::Zero, "", nullptr, nullptr, {}});
  return e;
}
inline SIExpr si1() {
  static const SIExpr e = std::make_shared<SIExprNode>(SIExprNode{SITag::One, "", nullptr, nullptr, {}});
  return e;
}
inline SIExpr siv(std::string name) {
  return std::make_shared<SIExprNode>(SIExprNode{SITag::Var, std::move(name), nullptr, nullptr, {}});
}
inline SIExpr simeet(SIExpr a, SIExpr b) {
  return std::make_shared<SIExprNode>(SIExprNode{SITag::Meet, "", std::move(a), std::move(b), {}});
}
inline SIExpr sijoin(SIExpr a, SIExpr b) {
  return std::make_shared<SIExprNode>(SIExprNode{SITag::Join, "", std::move(a), std::move(b), {}});
}
inline SIExpr sineg(SIExpr a) {
  return std::make_shared<SIExprNode>(SIExprNode{SITag::Neg, "", std::move(a), nullptr, {}});
}

// coe_k(from, to) = ((~k \/ to) /\ from) \/ ((k \/ from) /\ to)
inline SIExpr sicoe(const SIExpr& from, const SIExpr& to, const SIExpr& k) {
  return sijoin(simeet(sijoin(sineg(k), to), from), simeet(sijoin(k, from), to));
}

// ----- surface terms -----

enum class STag : uint8_t {
  Var,
  U,
  Pi,     // name (may be empty), a = dom, b = cod
  Lam,    // name, a = body
  App,    // a, b
  Sigma,  // name (may be empty), a, b
  Pair,
  Fst,
  Snd,
  Sum,
  Inl,
  Inr,
  Case,  // a = scrutinee, b = motive, c = left, d = right
  PathP,  // name = interval binder, a = line, b = left, c = right
  Path,   // a = type, b = left, c = right
  Plam,   // name, a = body
  Papp,   // a = path, ie
  Unit,
  TT,
  Empty,
  Absurd,  // a = motive, b = element
  Bool,
  True,
  False,
  If,      // a = motive, b = scrutinee, c = then, d = else
  Transp,  // name, a = line, ie = phi, b = arg
  HComp,   // a = type, sys, b = base
  Let,     // name, a = annot, b = bound, c = body
  // derived operators
  Transport,      // name, a = line, b = arg
  TranspFiller,   // name, a = line, ie = phi, b = arg
  Comp,           // name, a = line, sys, b = base
  HFill,          // a = type, sys, b = base, ie = direction (a variable)
  Refl,           // a
  J,              // a = motive (two-argument function), b = base, c = path
  TransportRefl,  // a = type, b = arg
};

struct SExprNode;
using SExpr = std::shared_ptr<const SExprNode>;

struct SFaceAtom {
  std::string var;
  bool is_one;
};

struct SBranch {
  std::vector<SFaceAtom> face;
  std::string iname;  // the side's interval binder
  SExpr side;
};

struct SExprNode {
  STag tag;
  std::string name;
  SExpr a, b, c, d;
  SIExpr ie;
  std::vector<SBranch> sys;
  SrcSpan span;
};

namespace detail {
inline SExpr snode(STag tag, SExpr a = nullptr, SExpr b = nullptr, SExpr c = nullptr,
                   SExpr d = nullptr) {
  auto n = std::make_shared<SExprNode>();
  n->tag = tag;
  n->a = std::move(a);
  n->b = std::move(b);
  n->c = std::move(c);
  n->d = std::move(d);
  return n;
}
inline SExpr snamed(STag tag, std::string name, SExpr a = nullptr, SExpr b = nullptr,
                    SExpr c = nullptr, SExpr d = nullptr) {
  auto n = std::make_shared<SExprNode>();
  n->tag = tag;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  n->c = std::move(c);
  n->d = std::move(d);
  return n;
}
}  // namespace detail

inline SExpr sv(std::string name) { return detail::snamed(STag::Var, std::move(name)); }
inline SExpr su() { return detail::snode(STag::U); }
inline SExpr sunit() { return detail::snode(STag::Unit); }
inline SExpr stt() { return detail::snode(STag::TT); }
inline SExpr sempty() { return detail::snode(STag::Empty); }
inline SExpr sbool() { return detail::snode(STag::Bool); }
inline SExpr strue() { return detail::snode(STag::True); }
inline SExpr sfalse() { return detail::snode(STag::False); }

inline SExpr spi(std::string name, SExpr dom, SExpr cod) {
  return detail::snamed(STag::Pi, std::move(name), std::move(dom), std::move(cod));
}
inline SExpr sarrow(SExpr dom, SExpr cod) { return spi("", std::move(dom), std::move(cod)); }
inline SExpr slam(std::string name, SExpr body) {
  return detail::snamed(STag::Lam, std::move(name), std::move(body));
}
inline SExpr sapp(SExpr f, SExpr x) { return detail::snode(STag::App, std::move(f), std::move(x)); }
template <class... Rest>
inline SExpr sapp(SExpr f, SExpr x, SExpr y, Rest... rest) {
  return sapp(sapp(std::move(f), std::move(x)), std::move(y), std::move(rest)...);
}
inline SExpr ssigma(std::string name, SExpr fst, SExpr snd) {
  return detail::snamed(STag::Sigma, std::move(name), std::move(fst), std::move(snd));
}
inline SExpr spair(SExpr a, SExpr b) {
  return detail::snode(STag::Pair, std::move(a), std::move(b));
}
inline SExpr sfst(SExpr p) { return detail::snode(STag::Fst, std::move(p)); }
inline SExpr ssnd(SExpr p) { return detail::snode(STag::Snd, std::move(p)); }
inline SExpr ssum(SExpr a, SExpr b) { return detail::snode(STag::Sum, std::move(a), std::move(b)); }
inline SExpr sinl(SExpr a) { return detail::snode(STag::Inl, std::move(a)); }
inline SExpr sinr(SExpr a) { return detail::snode(STag::Inr, std::move(a)); }
inline SExpr scase(SExpr scrut, SExpr motive, SExpr l, SExpr r) {
  return detail::snode(STag::Case, std::move(scrut), std::move(motive), std::move(l), std::move(r));
}
inline SExpr spathp(std::string iname, SExpr line, SExpr l, SExpr r) {
  return detail::snamed(STag::PathP, std::move(iname), std::move(line), std::move(l), std::move(r));
}
inline SExpr spath(SExpr type, SExpr l, SExpr r) {
  return detail::snode(STag::Path, std::move(type), std::move(l), std::move(r));
}
inline SExpr splam(std::string iname, SExpr body) {
  return detail::snamed(STag::Plam, std::move(iname), std::move(body));
}
inline SExpr spapp(SExpr p, SIExpr at) {
  auto n = std::make_shared<SExprNode>();
  n->tag = STag::Papp;
  n->a = std::move(p);
  n->ie = std::move(at);
  return n;
}
inline SExpr sabsurd(SExpr motive, SExpr e) {
  return detail::snode(STag::Absurd, std::move(motive), std::move(e));
}
inline SExpr sif(SExpr motive, SExpr scrut, SExpr thenB, SExpr elseB) {
  return detail::snode(STag::If, std::move(motive), std::move(scrut), std::move(thenB),
                       std::move(elseB));
}
inline SExpr stransp(std::string iname, SExpr line, SIExpr phi, SExpr arg) {
  auto n = std::make_shared<SExprNode>();
  n->tag = STag::Transp;
  n->name = std::move(iname);
  n->a = std::move(line);
  n->ie = std::move(phi);
  n->b = std::move(arg);
  return n;
}
inline SExpr shcomp(SExpr type, std::vector<SBranch> sys, SExpr base) {
  auto n = std::make_shared<SExprNode>();
  n->tag = STag::HComp;
  n->a = std::move(type);
  n->sys = std::move(sys);
  n->b = std::move(base);
  return n;
}
inline SExpr slet(std::string name, SExpr annot, SExpr bound, SExpr body) {
  return detail::snamed(STag::Let, std::move(name), std::move(annot), std::move(bound),
                        std::move(body));
}
inline SExpr stransport(std::string iname, SExpr line, SExpr arg) {
  return detail::snamed(STag::Transport, std::move(iname), std::move(line), std::move(arg));
}
inline SExpr stranspfiller(std::string iname, SExpr line, SIExpr phi, SExpr arg) {
  auto n = std::make_shared<SExprNode>();
  n->tag = STag::TranspFiller;
  n->name = std::move(iname);
  n->a = std::move(line);
  n->ie = std::move(phi);
  n->b = std::move(arg);
  return n;
}
inline SExpr scomp(std::string iname, SExpr line, std::vector<SBranch> sys, SExpr base) {
  auto n = std::make_shared<SExprNode>();
  n->tag = STag::Comp;
  n->name = std::move(iname);
  n->a = std::move(line);
  n->sys = std::move(sys);
  n->b = std::move(base);
  return n;
}
inline SExpr shfill(SExpr type, std::vector<SBranch> sys, SExpr base, SIExpr dir) {
  auto n = std::make_shared<SExprNode>();
  n->tag = STag::HFill;
  n->a = std::move(type);
  n->sys = std::move(sys);
  n->b = std::move(base);
  n->ie = std::move(dir);
  return n;
}
inline SExpr srefl(SExpr a) { return detail::snode(STag::Refl, std::move(a)); }
inline SExpr sJ(SExpr motive, SExpr base, SExpr path) {
  return detail::snode(STag::J, std::move(motive), std::move(base), std::move(path));
}
inline SExpr stransportrefl(SExpr type, SExpr arg) {
  return detail::snode(STag::TransportRefl, std::move(type), std::move(arg));
}

// ----- declarations -----

enum class EvidenceKind : uint8_t { SqFill, SqPFill };

struct SDecl {
  enum class Kind : uint8_t { Def, Evidence } kind;
  std::string name;
  SExpr type;              // Def: declared type
  EvidenceKind evidence;   // Evidence only
  SExpr subject;           // Evidence: the type (sqfill) or type square (sqpfill)
  SExpr body;
  SrcSpan span;
};

struct SModule {
  std::string path;
  std::vector<SDecl> decls;
};

}  // namespace mcube
