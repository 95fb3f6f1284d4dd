#include "doctest.h"
#include "isomono/exact/parse.hpp"
#include "isomono/report.hpp"
#include "isomono/scalarform.hpp"

using namespace isomono;
using exact::UPoly;

namespace {

RF f(const char* s) { return exact::parse_frac<LaxVars>(s); }

UPoly up(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return UPoly(r);
}

}  // namespace

TEST_CASE("scalar operator of a hand-worked matrix") {
  // A = ((z, 1), (z^2, -z)): a1 = -2/z, a0 = -1 - z^2 - z^2 + 2 = 1 - 2 z^2.
  const Mat2S a(f("z"), f("1"), f("z^2"), f("-z"));
  const auto L = scalar_operator(a);
  CHECK(equal(L.a1, f("-2/z")));
  CHECK(equal(L.a0, f("1 - 2*z^2")));
}

TEST_CASE("scalar operator needs a nonzero lower-left entry") {
  try {
    scalar_operator(Mat2S(f("z"), f("1"), f("0"), f("-z")));
    FAIL("expected NotCyclic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCyclic);
  }
}

TEST_CASE("apparent singularities of a wedge") {
  // A_num = ((0, 1), (z, 0)), v = e1: v ^ A v = z.
  const UMat a{up({0}), up({1}), up({0, 1}), up({0})};
  const auto r = apparent_b_polynomial(a, {Rational(1), Rational(0)}, {});
  CHECK(r.b_poly == up({0, 1}));
  CHECK(r.apparent_points == 1);
  CHECK(apparent_b_polynomial(a, {Rational(1), Rational(0)}, {Rational(0)}).apparent_points == 0);
}

TEST_CASE("eigenvector of the constant term gives no apparent points away from 0") {
  // A_num = A0 + z A1 with A0 e1 = 2 e1: the wedge is z (e1 ^ A1 e1).
  const UMat a{up({2, 0}), up({0, 3}), up({0, 1}), up({-2, 0})};
  const auto r = apparent_b_polynomial(a, {Rational(1), Rational(0)}, {Rational(0)});
  CHECK(r.apparent_points == 0);
  CHECK(r.b_poly == up({0, 1}));
}

TEST_CASE("common eigenvector has a vanishing wedge") {
  const UMat a{up({2, 1}), up({0, 3}), up({0}), up({-2, -1})};
  try {
    apparent_b_polynomial(a, {Rational(1), Rational(0)}, {});
    FAIL("expected ZeroWedge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroWedge);
  }
}

TEST_CASE("good cyclic vector counts") {
  const auto& want = expected_cyclic_counts();
  for (std::size_t i = 0; i < kLaxFamilies.size(); ++i) {
    const auto& fam = get_family(kLaxFamilies[i]);
    CAPTURE(fam.key);
    for (std::uint64_t seed : {11u, 12u, 13u}) CHECK(good_cyclic_count(fam, seed).good == want[i]);
  }
}

TEST_CASE("candidates sit at the singular points") {
  const auto c = good_cyclic_count(get_family(FamilyId::pv), 5);
  int at_zero = 0, at_one = 0, at_inf = 0;
  for (const auto& x : c.candidates) {
    at_zero += x.point == PointKind::zero;
    at_one += x.point == PointKind::one;
    at_inf += x.point == PointKind::infinity;
  }
  CHECK(at_zero == 2);
  CHECK(at_one == 2);
  CHECK(at_inf == 2);
}

TEST_CASE("q and p are recovered from the connection") {
  for (auto id : kLaxFamilies) {
    const auto& fam = get_family(id);
    CAPTURE(fam.key);
    const auto [q, p] = recover_pq(fam);
    CHECK(equal(q, RF::var(VarId::q)));
    CHECK(equal(p, RF::var(VarId::p)));
  }
}

TEST_CASE("recovery needs a single zero") {
  const Mat2S a(f("p"), f("1"), f("z^2 - q"), f("-p"));
  try {
    recover_pq(a, exact::parse_poly<LaxVars>("1"));
    FAIL("expected MultipleZeros");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MultipleZeros);
  }
}

TEST_CASE("random samples avoid the excluded values") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto x = random_sample(s);
    CHECK(sgn(x[VarId::t]) != 0);
    CHECK(sgn(x[VarId::q]) != 0);
    CHECK(x[VarId::q] != Rational(1));
  }
  CHECK(random_sample(7).to_string() == random_sample(7).to_string());
}

TEST_CASE("specialization rejects vanishing denominators") {
  ParamSample s;
  s[VarId::q] = 1;
  s[VarId::t] = 2;
  try {
    specialize_in_z(f("z/(q - 1)"), s);
    FAIL("expected DegenerateSample");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateSample);
  }
  CHECK(specialize_in_z(f("z*t + q"), s) == up({1, 2}));
}
