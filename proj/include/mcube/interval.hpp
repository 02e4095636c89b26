#pragma once

// Free De Morgan algebra over interval variables: expression trees, the
// canonical antichain-DNF normal form, substitution, the four-element
// evaluation oracle, and the coercion / equality probe formulas.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcube {

// ---------------------------------------------------------------------------
// Expressions

enum class ITag : uint8_t { Zero, One, Var, Meet, Join, Neg };

struct IExprNode;
using IExpr = std::shared_ptr<const IExprNode>;

struct IExprNode {
  ITag tag;
  uint32_t var = 0;  // Var only
  IExpr a, b;        // Meet/Join: both; Neg: a
};

inline IExpr izero() {
  static const IExpr e = std::make_shared<IExprNode>(IExprNode{ITag::Zero, 0, nullptr, nullptr});
  return e;
}
inline IExpr ione() {
  static const IExpr e = std::make_shared<IExprNode>(IExprNode{ITag::One, 0, nullptr, nullptr});
  return e;
}
inline IExpr ivar(uint32_t v) {
  return std::make_shared<IExprNode>(IExprNode{ITag::Var, v, nullptr, nullptr});
}
inline IExpr imeet(IExpr a, IExpr b) {
  return std::make_shared<IExprNode>(IExprNode{ITag::Meet, 0, std::move(a), std::move(b)});
}
inline IExpr ijoin(IExpr a, IExpr b) {
  return std::make_shared<IExprNode>(IExprNode{ITag::Join, 0, std::move(a), std::move(b)});
}
inline IExpr ineg(IExpr a) {
  return std::make_shared<IExprNode>(IExprNode{ITag::Neg, 0, std::move(a), nullptr});
}
inline IExpr iconst(bool one) { return one ? ione() : izero(); }

// ---------------------------------------------------------------------------
// Normal form: an irredundant antichain of clauses. A clause is a sorted set
// of literals, a literal is a variable with a polarity. Both polarities of
// one variable may share a clause (i /\ ~i is not 0 here). The empty clause
// set is 0; the set holding the empty clause is 1.

struct ILit {
  uint32_t var;
  bool neg;  // positive literals sort before negative ones
  friend bool operator==(const ILit&, const ILit&) = default;
  friend bool operator<(const ILit& x, const ILit& y) {
    return x.var != y.var ? x.var < y.var : x.neg < y.neg;
  }
};

using IClause = std::vector<ILit>;

struct INf {
  std::vector<IClause> clauses;
  friend bool operator==(const INf&, const INf&) = default;
  bool is_zero() const { return clauses.empty(); }
  bool is_one() const { return clauses.size() == 1 && clauses[0].empty(); }
};

namespace detail {

inline bool clause_subset(const IClause& small, const IClause& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Sort, deduplicate, and drop every clause that contains another one.
inline void nf_reduce(std::vector<IClause>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<IClause> kept;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < cs.size() && !absorbed; ++j)
      if (i != j && cs[j].size() <= cs[i].size() && cs[j] != cs[i] &&
          clause_subset(cs[j], cs[i]))
        absorbed = true;
    if (!absorbed) kept.push_back(cs[i]);
  }
  cs = std::move(kept);
}

inline std::vector<IClause> nf_or(std::vector<IClause> x, const std::vector<IClause>& y) {
  x.insert(x.end(), y.begin(), y.end());
  nf_reduce(x);
  return x;
}

inline std::vector<IClause> nf_and(const std::vector<IClause>& x, const std::vector<IClause>& y) {
  std::vector<IClause> out;
  out.reserve(x.size() * y.size());
  for (const IClause& c : x)
    for (const IClause& d : y) {
      IClause u;
      u.reserve(c.size() + d.size());
      std::merge(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(u));
      u.erase(std::unique(u.begin(), u.end()), u.end());
      out.push_back(std::move(u));
    }
  nf_reduce(out);
  return out;
}

inline std::vector<IClause> norm_rec(const IExpr& e, bool positive) {
  switch (e->tag) {
    case ITag::Zero:
      return positive ? std::vector<IClause>{} : std::vector<IClause>{IClause{}};
    case ITag::One:
      return positive ? std::vector<IClause>{IClause{}} : std::vector<IClause>{};
    case ITag::Var:
      return {IClause{ILit{e->var, !positive}}};
    case ITag::Neg:
      return norm_rec(e->a, !positive);
    case ITag::Meet: {
      auto l = norm_rec(e->a, positive), r = norm_rec(e->b, positive);
      return positive ? nf_and(l, r) : nf_or(std::move(l), r);
    }
    case ITag::Join: {
      auto l = norm_rec(e->a, positive), r = norm_rec(e->b, positive);
      return positive ? nf_or(std::move(l), r) : nf_and(l, r);
    }
  }
  throw std::logic_error("norm_rec: bad tag");
}

}  // namespace detail

inline INf normalize(const IExpr& e) { return INf{detail::norm_rec(e, true)}; }

inline IExpr nf_to_expr(const INf& nf) {
  if (nf.is_zero()) return izero();
  if (nf.is_one()) return ione();
  IExpr acc;
  for (const IClause& c : nf.clauses) {
    IExpr m;
    for (const ILit& l : c) {
      IExpr lit = l.neg ? ineg(ivar(l.var)) : ivar(l.var);
      m = m ? imeet(m, lit) : lit;
    }
    if (!m) m = ione();  // unreachable for reduced non-one forms
    acc = acc ? ijoin(acc, m) : m;
  }
  return acc;
}

inline IExpr icanon(const IExpr& e) { return nf_to_expr(normalize(e)); }

inline bool nf_equal(const IExpr& x, const IExpr& y) { return normalize(x) == normalize(y); }

inline bool is_top(const IExpr& e) { return normalize(e).is_one(); }
inline bool is_bot(const IExpr& e) { return normalize(e).is_zero(); }

// ---------------------------------------------------------------------------
// Substitution and shifting (IExpr has no binders of its own; binder
// bookkeeping lives at the term level).

inline IExpr isubst(const IExpr& e, uint32_t target, const IExpr& replacement) {
  switch (e->tag) {
    case ITag::Zero:
    case ITag::One:
      return e;
    case ITag::Var:
      return e->var == target ? replacement : e;
    case ITag::Neg:
      return ineg(isubst(e->a, target, replacement));
    case ITag::Meet:
      return imeet(isubst(e->a, target, replacement), isubst(e->b, target, replacement));
    case ITag::Join:
      return ijoin(isubst(e->a, target, replacement), isubst(e->b, target, replacement));
  }
  throw std::logic_error("isubst: bad tag");
}

// Substitute variable j by s and lower every variable above j by one (the
// binder-instantiating form).
inline IExpr isubst_lower(const IExpr& e, uint32_t j, const IExpr& s) {
  switch (e->tag) {
    case ITag::Zero:
    case ITag::One:
      return e;
    case ITag::Var:
      if (e->var == j) return s;
      return e->var > j ? ivar(e->var - 1) : e;
    case ITag::Neg:
      return ineg(isubst_lower(e->a, j, s));
    case ITag::Meet:
      return imeet(isubst_lower(e->a, j, s), isubst_lower(e->b, j, s));
    case ITag::Join:
      return ijoin(isubst_lower(e->a, j, s), isubst_lower(e->b, j, s));
  }
  throw std::logic_error("isubst_lower: bad tag");
}

// Shift all variables >= cutoff by delta (delta may be negative).
inline IExpr ishift(const IExpr& e, int delta, uint32_t cutoff = 0) {
  switch (e->tag) {
    case ITag::Zero:
    case ITag::One:
      return e;
    case ITag::Var:
      if (e->var < cutoff) return e;
      return ivar(static_cast<uint32_t>(static_cast<int64_t>(e->var) + delta));
    case ITag::Neg:
      return ineg(ishift(e->a, delta, cutoff));
    case ITag::Meet:
      return imeet(ishift(e->a, delta, cutoff), ishift(e->b, delta, cutoff));
    case ITag::Join:
      return ijoin(ishift(e->a, delta, cutoff), ishift(e->b, delta, cutoff));
  }
  throw std::logic_error("ishift: bad tag");
}

inline void free_ivars(const IExpr& e, std::set<uint32_t>& out) {
  switch (e->tag) {
    case ITag::Zero:
    case ITag::One:
      return;
    case ITag::Var:
      out.insert(e->var);
      return;
    case ITag::Neg:
      free_ivars(e->a, out);
      return;
    case ITag::Meet:
    case ITag::Join:
      free_ivars(e->a, out);
      free_ivars(e->b, out);
      return;
  }
}

inline bool mentions_ivar(const IExpr& e, uint32_t v) {
  std::set<uint32_t> fv;
  free_ivars(e, fv);
  return fv.count(v) > 0;
}

// ---------------------------------------------------------------------------
// Four-element De Morgan algebra {bot, a, b, top}: the independent equality
// oracle. Encoded as two bits, meet = and, join = or, negation swaps the
// bits; a and b are the self-negating middle elements.

enum class Dm4 : uint8_t { Bot = 0, B = 1, A = 2, Top = 3 };

inline Dm4 dm4_meet(Dm4 x, Dm4 y) {
  return static_cast<Dm4>(static_cast<uint8_t>(x) & static_cast<uint8_t>(y));
}
inline Dm4 dm4_join(Dm4 x, Dm4 y) {
  return static_cast<Dm4>(static_cast<uint8_t>(x) | static_cast<uint8_t>(y));
}
inline Dm4 dm4_neg(Dm4 x) {
  uint8_t v = static_cast<uint8_t>(x);
  return static_cast<Dm4>((((~v) & 1u) << 1) | ((~(v >> 1)) & 1u));
}

struct IScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Assignment: index into the vector by variable number.
inline Dm4 eval_dm4(const IExpr& e, const std::vector<Dm4>& rho) {
  switch (e->tag) {
    case ITag::Zero:
      return Dm4::Bot;
    case ITag::One:
      return Dm4::Top;
    case ITag::Var:
      if (e->var >= rho.size())
        throw IScopeError("eval_dm4: unassigned interval variable " + std::to_string(e->var));
      return rho[e->var];
    case ITag::Neg:
      return dm4_neg(eval_dm4(e->a, rho));
    case ITag::Meet:
      return dm4_meet(eval_dm4(e->a, rho), eval_dm4(e->b, rho));
    case ITag::Join:
      return dm4_join(eval_dm4(e->a, rho), eval_dm4(e->b, rho));
  }
  throw std::logic_error("eval_dm4: bad tag");
}

// ---------------------------------------------------------------------------
// The coercion function on the interval (constant when both endpoints agree)
// and the equality probe that documents the De Morgan negative result.

inline IExpr icoe(const IExpr& from, const IExpr& to, const IExpr& k) {
  return ijoin(imeet(ijoin(ineg(k), to), from), imeet(ijoin(k, from), to));
}

inline IExpr ieq_probe(const IExpr& x, const IExpr& y) {
  return ijoin(imeet(x, y), imeet(ineg(x), ineg(y)));
}

}  // namespace mcube
