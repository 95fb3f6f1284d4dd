#include <algorithm>

#include "doctest.h"
#include "isomono/exact/parse.hpp"
#include "isomono/families.hpp"

using namespace isomono;

namespace {

RF f(const char* s) { return exact::parse_frac<LaxVars>(s); }

std::size_t slot_of(PointKind k) {
  switch (k) {
    case PointKind::zero: return 0;
    case PointKind::one: return 1;
    case PointKind::infinity: return 2;
    case PointKind::movable: return 3;
  }
  return 3;
}

}  // namespace

TEST_CASE("katz contributions") {
  CHECK(katz_contribution(Rational(1)) == 1);
  CHECK(katz_contribution(Rational(5, 2)) == 3);
  CHECK(katz_contribution(Rational(0)) == 0);
  CHECK(katz_contribution(Rational(1, 2)) == 1);
  CHECK_THROWS_AS(katz_contribution(Rational(-1)), Error);
  CHECK_THROWS_AS(katz_contribution(Rational(1, 3)), Error);
}

TEST_CASE("fibre dimension by hand") {
  // Four regular points: 4 - 3 = 1.
  CHECK(fibre_dimension({Rational(0), Rational(0), Rational(0), Rational(0)}) == 1);
  // One point of invariant 5/2: 3 - 2.
  CHECK(fibre_dimension({Rational(5, 2)}) == 1);
  // Two points (1, 1): 1 + 1 - 1.
  CHECK(fibre_dimension({Rational(1), Rational(1)}) == 1);
  CHECK(fibre_dimension({Rational(2), Rational(1)}) == 2);
}

TEST_CASE("enumeration reproduces the registry signatures") {
  const auto found = enumerate_families(Rational(3), 4);
  REQUIRE(found.size() == 10);
  std::vector<KatzSignature> reg;
  for (auto id : kAllFamilies) reg.push_back(get_family(id).katz);
  std::sort(reg.begin(), reg.end());
  CHECK(found == reg);
  for (auto id : kAllFamilies) {
    const auto& fam = get_family(id);
    CHECK_MESSAGE(parameter_dimension(fam.katz) == fam.dim_p, fam.key);
  }
  CHECK(std::find_if(found.begin(), found.end(), [](const KatzSignature& k) { return k.to_string() == "(0,0,0,0)"; }) !=
        found.end());
  CHECK(std::find_if(found.begin(), found.end(), [](const KatzSignature& k) { return k.to_string() == "(-,-,5/2)"; }) !=
        found.end());
}

TEST_CASE("enumeration is stable in the bounds") {
  CHECK(enumerate_families(Rational(3), 4) == enumerate_families(Rational(4), 5));
}

TEST_CASE("registry spot values") {
  CHECK(equal(get_family(FamilyId::pv).qprime, f("2*p/t")));
  CHECK(equal(get_family(FamilyId::pi).second_order, f("6*q^2 + 2*t")));
  CHECK(equal(get_family(FamilyId::piii_d6).qprime, f("(4*p + q)/t")));
  CHECK(equal(get_family(FamilyId::pi).pprime, f("3*q^2 + t")));
  CHECK(get_family(FamilyId::piii_d6).f_factor == exact::parse_poly<LaxVars>("q^2"));
  CHECK(get_family(FamilyId::pv).f_factor == exact::parse_poly<LaxVars>("q^2 - q"));
  CHECK_FALSE(get_family(FamilyId::pvi).has_lax);
}

TEST_CASE("family keys round-trip") {
  for (auto id : kAllFamilies) CHECK(parse_family_id(family_key(id)) == id);
  try {
    parse_family_id("pviii");
    FAIL("expected UnknownFamily");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFamily);
  }
}

TEST_CASE("structural invariants of the Lax data") {
  for (auto id : kLaxFamilies) {
    const auto& fam = get_family(id);
    CAPTURE(fam.key);
    CHECK(fam.a_full().trace().is_zero());
    // q' is affine in p.
    CHECK(fam.qprime.diff(VarId::p).diff(VarId::p).is_zero());
    // Leading exponent degree equals the Katz invariant at irregular points.
    for (const auto& e : fam.exponents) {
      const auto& r = fam.katz.r[slot_of(e.point)];
      REQUIRE(r.has_value());
      if (sgn(*r) > 0) CHECK(e.leading_degree() == *r);
    }
  }
}
