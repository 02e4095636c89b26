#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcube/interval.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

using namespace mcube;

namespace {

IExpr v(uint32_t n) { return ivar(n); }

// All 4^n assignments for n variables.
std::vector<std::vector<Dm4>> all_assignments(uint32_t nvars) {
  std::vector<std::vector<Dm4>> out;
  size_t total = 1;
  for (uint32_t k = 0; k < nvars; ++k) total *= 4;
  for (size_t code = 0; code < total; ++code) {
    std::vector<Dm4> rho(nvars);
    size_t c = code;
    for (uint32_t k = 0; k < nvars; ++k) {
      rho[k] = static_cast<Dm4>(c & 3);
      c >>= 2;
    }
    out.push_back(std::move(rho));
  }
  return out;
}

// Signature of an expression under every assignment: equal signatures mean
// equal elements of the free algebra (the four-element algebra generates the
// De Morgan variety).
std::vector<uint8_t> dm4_signature(const IExpr& e, const std::vector<std::vector<Dm4>>& rhos) {
  std::vector<uint8_t> sig;
  sig.reserve(rhos.size());
  for (const auto& rho : rhos) sig.push_back(static_cast<uint8_t>(eval_dm4(e, rho)));
  return sig;
}

IExpr random_expr(std::mt19937& rng, uint32_t nvars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 6);
  switch (pick(rng)) {
    case 0: return izero();
    case 1: return ione();
    case 2:
    case 3: {
      std::uniform_int_distribution<uint32_t> pv(0, nvars - 1);
      return v(pv(rng));
    }
    case 4: return imeet(random_expr(rng, nvars, depth - 1), random_expr(rng, nvars, depth - 1));
    case 5: return ijoin(random_expr(rng, nvars, depth - 1), random_expr(rng, nvars, depth - 1));
    default: return ineg(random_expr(rng, nvars, depth - 1));
  }
}

}  // namespace

TEST_CASE("De Morgan laws normalize definitionally") {
  // ~(i /\ j) = ~i \/ ~j
  CHECK(nf_equal(ineg(imeet(v(0), v(1))), ijoin(ineg(v(0)), ineg(v(1)))));
  // ~(i \/ j) = ~i /\ ~j
  CHECK(nf_equal(ineg(ijoin(v(0), v(1))), imeet(ineg(v(0)), ineg(v(1)))));
  // involution
  CHECK(nf_equal(ineg(ineg(v(0))), v(0)));
}

TEST_CASE("excluded middle and absurdity are not applied") {
  CHECK_FALSE(nf_equal(ijoin(v(0), ineg(v(0))), ione()));
  CHECK_FALSE(nf_equal(imeet(v(0), ineg(v(0))), izero()));
  // i \/ ~i normalizes to itself
  INf nf = normalize(ijoin(v(0), ineg(v(0))));
  CHECK(nf.clauses.size() == 2);
  CHECK(normalize(nf_to_expr(nf)) == nf);
}

TEST_CASE("lattice identities") {
  CHECK(nf_equal(imeet(v(0), ijoin(v(0), v(1))), v(0)));       // absorption
  CHECK(nf_equal(ijoin(izero(), imeet(ione(), v(0))), v(0)));  // bound constants
  CHECK(nf_equal(imeet(v(0), v(1)), imeet(v(1), v(0))));       // commutativity
  CHECK(nf_equal(ineg(ineg(v(0))), v(0)));
  CHECK(nf_equal(imeet(v(0), imeet(v(1), v(2))), imeet(imeet(v(0), v(1)), v(2))));
  CHECK(nf_equal(imeet(v(0), ijoin(v(1), v(2))),
                 ijoin(imeet(v(0), v(1)), imeet(v(0), v(2)))));
}

TEST_CASE("normalization is idempotent on read-back forms") {
  std::mt19937 rng(7);
  for (int n = 0; n < 500; ++n) {
    IExpr e = random_expr(rng, 3, 5);
    INf nf = normalize(e);
    CHECK(normalize(nf_to_expr(nf)) == nf);
  }
}

TEST_CASE("substitution implements endpoint evaluation") {
  // isubst(i /\ j, i, 1) normalizes to j
  CHECK(nf_equal(isubst(imeet(v(0), v(1)), 0, ione()), v(1)));
  // isubst(~i, i, j \/ k) = ~(j \/ k)
  IExpr s = isubst(ineg(v(0)), 0, ijoin(v(1), v(2)));
  CHECK(s->tag == ITag::Neg);
  CHECK(nf_equal(s, imeet(ineg(v(1)), ineg(v(2)))));
  // substituting an absent variable is identity
  IExpr e = imeet(v(0), ineg(v(1)));
  CHECK(normalize(isubst(e, 5, izero())) == normalize(e));
}

TEST_CASE("four-element algebra refutes excluded middle pointwise") {
  std::vector<Dm4> rho{Dm4::A};
  CHECK(eval_dm4(ijoin(v(0), ineg(v(0))), rho) == Dm4::A);
  CHECK(eval_dm4(imeet(v(0), ineg(v(0))), rho) == Dm4::A);
  CHECK(eval_dm4(ione(), rho) == Dm4::Top);
  CHECK_THROWS_AS(eval_dm4(v(3), rho), IScopeError);
}

TEST_CASE("coe endpoints and eta") {
  IExpr i = v(0), j = v(1), k = v(2);
  // coe(i, i', 0) = i ; coe(i, i', 1) = i'
  CHECK(nf_equal(isubst(icoe(i, j, k), 2, izero()), i));
  CHECK(nf_equal(isubst(icoe(i, j, k), 2, ione()), j));
  // eta: coe(x, x, k) = x, also for compound x
  CHECK(nf_equal(icoe(i, i, k), i));
  IExpr x = ijoin(imeet(i, j), ineg(j));
  CHECK(nf_equal(icoe(x, x, k), x));
  // reversal symmetry: coe(x, y, ~k) = coe(y, x, k)
  CHECK(nf_equal(isubst(icoe(i, j, k), 2, ineg(v(3))),
                 isubst(icoe(j, i, k), 2, v(3))));
}

TEST_CASE("naive coercion lacks the eta property") {
  IExpr i = v(0), k = v(2);
  IExpr naive = ijoin(imeet(ineg(k), i), imeet(k, i));
  CHECK_FALSE(nf_equal(naive, i));
  // the canonical shape is (i /\ k) \/ (i /\ ~k)
  INf nf = normalize(naive);
  REQUIRE(nf.clauses.size() == 2);
  CHECK(nf.clauses[0] == IClause{ILit{0, false}, ILit{2, false}});
  CHECK(nf.clauses[1] == IClause{ILit{0, false}, ILit{2, true}});
}

TEST_CASE("equality probe gives i \\/ ~i on the diagonal") {
  IExpr i = v(0);
  CHECK(normalize(ieq_probe(i, i)) == normalize(ijoin(i, ineg(i))));
  CHECK_FALSE(is_top(ieq_probe(i, i)));
  CHECK(nf_equal(ieq_probe(izero(), ione()), izero()));
  CHECK(nf_equal(ieq_probe(izero(), izero()), ione()));
  CHECK(nf_equal(ieq_probe(ione(), ione()), ione()));
}

TEST_CASE("is_top decides the trivial constraint") {
  CHECK(is_top(ione()));
  CHECK(is_top(ineg(izero())));
  CHECK_FALSE(is_top(ijoin(v(0), ineg(v(0)))));
  CHECK(is_top(ijoin(ione(), v(0))));
}

TEST_CASE("normal form equality coincides with the four-element oracle") {
  // Random sweep; the exhaustive sweep lives in the acceptance suite.
  std::mt19937 rng(99);
  auto rhos = all_assignments(3);
  std::map<std::vector<uint8_t>, INf> seen;
  for (int n = 0; n < 2000; ++n) {
    IExpr e = random_expr(rng, 3, 5);
    INf nf = normalize(e);
    auto sig = dm4_signature(e, rhos);
    // the normal form denotes the same algebra element
    CHECK(dm4_signature(nf_to_expr(nf), rhos) == sig);
    auto [it, inserted] = seen.emplace(sig, nf);
    if (!inserted) CHECK(it->second == nf);
  }
}

TEST_CASE("shift moves free variables above the cutoff") {
  IExpr e = imeet(v(0), ijoin(v(1), ineg(v(2))));
  IExpr s = ishift(e, 2, 1);
  CHECK(nf_equal(s, imeet(v(0), ijoin(v(3), ineg(v(4))))));
  CHECK(nf_equal(ishift(s, -2, 1), e));
}
