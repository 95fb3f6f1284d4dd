#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isomono/exact/frac.hpp"
#include "isomono/exact/poly.hpp"
#include "isomono/families.hpp"

namespace isomono {

using exact::CubicVarId;
using exact::CubicVars;
using CP = exact::Poly<CubicVars>;
using CF = exact::Frac<CubicVars>;

// A named parameter of a family, stored in one of the slot variables s1..s4.
struct ParamSlot {
  std::string name;
  CubicVarId var;
  bool nonzero;  // parameter lives in C^*
};

struct CubicSurface {
  FamilyId id;
  CP equation;  // in x1, x2, x3 and the slot variables
  std::vector<ParamSlot> params;
};

using ParamValues = std::vector<Rational>;  // aligned with CubicSurface::params
using Point3 = std::array<Rational, 3>;

const CubicSurface& surface(FamilyId id);

// The PVI parameters s1..s4 as functions of the local traces a1..a4.
ParamValues pvi_parameters(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4);

// Equation restricted to the fibre; throws Error(DomainViolation) when a
// C^* parameter is zero or the arity is wrong.
CP fibre_equation(const CubicSurface& s, const ParamValues& values);

struct PointEval {
  Rational value;
  std::array<Rational, 3> gradient;
  bool singular() const;
};
PointEval eval_and_gradient(const CubicSurface& s, const ParamValues& values, const Point3& x);

// A_n classification of an isolated singular point of f (a polynomial in
// x1, x2, x3 only). Returns n. Throws Error(DomainViolation) if the point is
// not singular, Error(NotADE) if the Hessian rank is below 2 and
// Error(NotIsolated) if the residual function vanishes to order > 8.
int classify_singularity(const CP& f, const Point3& point);
std::string ade_label(int n);

// One row of a singular-fibre table.
struct SingularRow {
  std::string anchor;  // stratum label, e.g. "PV table: s1=2, s2=2, R1=0"
  std::function<std::optional<ParamValues>(std::mt19937_64&)> sample;
  std::function<std::vector<Point3>(const ParamValues&)> points;
  std::vector<int> types;  // A_n index per point
  // Set when the published coordinates are not singular points; `points` then
  // holds the solved coordinates and `printed` the published ones.
  std::function<std::vector<Point3>(const ParamValues&)> printed;
  std::string correction;
};

std::vector<SingularRow> singularity_table(FamilyId id);

struct RowReport {
  std::string anchor;
  int samples = 0;
  int passed = 0;
  std::vector<std::string> failures;
  std::string correction;
  int printed_singular = 0;  // samples where the published points were singular
  bool ok() const { return samples > 0 && passed == samples; }
};

struct TableReport {
  FamilyId id;
  std::vector<RowReport> rows;
  bool ok() const;
};

TableReport verify_singularity_table(FamilyId id, int samples_per_row, std::uint64_t seed);

// Sylvester resultant with respect to v.
CP resultant(const CP& a, const CP& b, CubicVarId v);

// Reduced Groebner basis (lex, x1 > x2 > x3 > slots) of the ideal generated by gens.
std::vector<CP> groebner_basis(std::vector<CP> gens);

struct SmoothnessResult {
  bool smooth = false;
  std::string method;  // "resultant" or "groebner"
};

// Decides whether the fibre over the given parameters has an affine singular point.
SmoothnessResult smoothness_probe(FamilyId id, const ParamValues& values);

// Polynomial in the slot variables vanishing exactly on the parameters with
// singular fibres, when the family has one (nullopt for PVI).
std::optional<CP> fibre_discriminant(FamilyId id);
bool discriminant_vanishes(FamilyId id, const ParamValues& values);

// Substitutes the map (x1,x2) -> (x1, x2, x1x2 + 1/(x1x2), x1 + 1/x1, x2 + 1/x2, x1x2)
// into the PV equation and its x-gradient; true when all four vanish identically.
// `perturbed` replaces the x3 slot by x1x2 (a negative control).
bool pv_singular_locus_identity(bool perturbed = false);

// Random rational in [-bound, bound] with denominator at most max_den.
Rational random_rational(std::mt19937_64& rng, long bound, long max_den);

}  // namespace isomono
