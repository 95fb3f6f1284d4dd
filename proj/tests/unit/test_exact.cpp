#include <random>

#include "doctest.h"
#include "isomono/errors.hpp"
#include "isomono/exact/frac.hpp"
#include "isomono/exact/linsolve.hpp"
#include "isomono/exact/matrix2.hpp"
#include "isomono/exact/parse.hpp"
#include "isomono/exact/univariate.hpp"

using namespace isomono;
using namespace isomono::exact;

using P = Poly<LaxVars>;
using F = Frac<LaxVars>;
using M2 = Mat2<F>;

namespace {

F f(const char* s) { return parse_frac<LaxVars>(s); }
P pp(const char* s) { return parse_poly<LaxVars>(s); }

// Determinant by cofactor expansion along the first row.
F cofactor_det(const std::vector<std::vector<F>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  F acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<F>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<F> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    F term = m[0][j] * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

P random_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), var(1, 3);
  P r;
  for (int k = 0; k < terms; ++k) {
    P t(coef(rng));
    t *= P::var(static_cast<VarId>(var(rng)), ex(rng));
    t *= P::var(static_cast<VarId>(var(rng)), ex(rng));
    r += t;
  }
  return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  CHECK(pp("(z+1)*(z-1)") == pp("z^2-1"));
  CHECK((pp("p") * P(0)).is_zero());
  CHECK((pp("q*t+th0") * pp("q*t+th0")) == pp("q^2*t^2 + 2*q*t*th0 + th0^2"));
}

TEST_CASE("partial derivatives") {
  CHECK(pp("z^2*t").diff(VarId::z) == pp("2*z*t"));
  CHECK(pp("z^2").diff(VarId::t).is_zero());
  CHECK(pp("q^3+p*q").diff(VarId::q) == pp("3*q^2+p"));
}

TEST_CASE("rational function zero test") {
  CHECK((f("(z^2-1)/(z-1)") - f("z+1")).is_zero());
  CHECK_FALSE((f("1/q") - f("1/p")).is_zero());
  CHECK((f("(p^2-th0^2/4)/q") - f("(p-th0/2)*(p+th0/2)/q")).is_zero());
  CHECK(equal(f("(z^2-1)/(z-1)"), f("z+1")));
}

TEST_CASE("monomial overflow is detected") {
  P a = P::var(VarId::q, 200);
  CHECK_THROWS_AS(a * a, std::overflow_error);
}

TEST_CASE("matrix operations") {
  M2 a(f("p"), f("t+q^2"), f("-q"), f("-p"));
  M2 b(f("z"), f("1/q"), f("t"), f("-z"));
  auto c = commutator(a, a);
  for (const auto& x : c.e) CHECK(x.is_zero());
  CHECK(commutator(a, b).trace().is_zero());
  // PI matrix at z = q, p = 0, t = 0: A0 + A1 z + A2 z^2 with A2 = [[0,1],[0,0]].
  M2 pi(f("p"), f("q^2+t+q*z+z^2"), f("z-q"), f("-p"));
  F d = pi.det();
  d = d.subs(VarId::z, Rational(0) + 0).subs(VarId::p, Rational(0)).subs(VarId::t, Rational(0));
  // independent cofactor expansion of the same specialized matrix
  std::vector<std::vector<F>> m = {{f("0"), f("q^2")}, {f("-q"), f("0")}};
  CHECK(equal(d, cofactor_det(m)));
}

TEST_CASE("linear solve examples") {
  std::vector<std::vector<F>> id = {{F(1), F(0)}, {F(0), F(1)}};
  auto x = linsolve_fraction_free(id, {f("p"), f("q/t")});
  CHECK(equal(x[0], f("p")));
  CHECK(equal(x[1], f("q/t")));

  std::vector<std::vector<F>> diag = {{f("t"), F(0)}, {F(0), f("q")}};
  x = linsolve_fraction_free(diag, {f("2*p"), F(1)});
  CHECK(equal(x[0], f("2*p/t")));
  CHECK(equal(x[1], f("1/q")));
}

TEST_CASE("linear solve errors") {
  std::vector<std::vector<F>> sing = {{f("q"), f("t")}, {f("2*q"), f("2*t")}};
  CHECK_THROWS_AS(linsolve_fraction_free(sing, {F(1), F(2)}), Error);
  std::vector<std::vector<F>> over = {{F(1), F(0)}, {F(0), F(1)}, {F(1), F(1)}};
  CHECK_NOTHROW(linsolve_fraction_free(over, {f("p"), f("q"), f("p+q")}));
  try {
    linsolve_fraction_free(over, {f("p"), f("q"), f("p")});
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentSystem);
  }
}

TEST_CASE("linear solve agrees with Cramer's rule on random systems") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<std::vector<F>> m(n, std::vector<F>(n));
    std::vector<F> rhs(n);
    for (auto& row : m)
      for (auto& e : row) e = F(random_poly(rng, 2));
    for (auto& r : rhs) r = F(random_poly(rng, 2));
    F det = cofactor_det(m);
    if (det.is_zero()) continue;
    auto x = linsolve_fraction_free(m, rhs);
    for (std::size_t j = 0; j < n; ++j) {
      auto mj = m;
      for (std::size_t i = 0; i < n; ++i) mj[i][j] = rhs[i];
      CHECK(equal(x[j], cofactor_det(mj) / det));
    }
  }
}

TEST_CASE("properties: commutativity, mixed partials, equality transitivity") {
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    P a = random_poly(rng, 4), b = random_poly(rng, 4);
    CHECK((a * b - b * a).is_zero());
    CHECK(a.diff(VarId::p).diff(VarId::q) == a.diff(VarId::q).diff(VarId::p));
    CHECK(a.diff(VarId::t).diff(VarId::q) == a.diff(VarId::q).diff(VarId::t));
    P c = random_poly(rng, 2);
    if (c.is_zero()) continue;
    // three representations of the same function
    F x(a, c), y(a * b, c * b), w(a * (b + P(1)), c * (b + P(1)));
    if (b.is_zero() || (b + P(1)).is_zero()) continue;
    CHECK(equal(x, y));
    CHECK(equal(y, w));
    CHECK(equal(x, w));
  }
}

TEST_CASE("rational function derivative matches quotient rule") {
  F a = f("(p^2 - th0^2/4)/(q*(q-1))");
  F expect = (F(pp("p^2 - th0^2/4")).diff(VarId::q) * f("q*(q-1)") -
              f("p^2 - th0^2/4") * f("q*(q-1)").diff(VarId::q)) /
             f("q*(q-1)").pow(2);
  CHECK(equal(a.diff(VarId::q), expect));
  CHECK(equal(a.diff(VarId::p), f("2*p/(q*(q-1))")));
}

TEST_CASE("substitution") {
  F a = f("p^2/q + t");
  F s = a.subs(VarId::p, f("(q*qdot - 1)/t"));
  CHECK(equal(s, f("(q*qdot-1)^2/(t^2*q) + t")));
}

TEST_CASE("univariate helpers") {
  UPoly a({Rational(-6), Rational(11), Rational(-6), Rational(1)});  // (x-1)(x-2)(x-3)
  auto r = rational_roots(a);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == 1);
  CHECK(r[2] == 3);
  UPoly b = a * UPoly({Rational(-1), Rational(1)});
  CHECK(b.multiplicity(Rational(1)) == 2);
  CHECK(gcd(a, b) == a.monic());
  UPoly c({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  CHECK(rational_roots(c).empty());
  UPoly d({Rational(3, 4), Rational(-2), Rational(1)});  // (x-1/2)(x-3/2)
  auto rd = rational_roots(d);
  REQUIRE(rd.size() == 2);
  CHECK(rd[0] == Rational(1, 2));
}
