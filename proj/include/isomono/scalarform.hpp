#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isomono/exact/univariate.hpp"
#include "isomono/families.hpp"

namespace isomono {

// Monic L = (d/dz)^2 + a1 d/dz + a0 attached to the first basis vector.
struct ScalarOperator {
  RF a1;
  RF a0;
};

// A_full = ((a, b), (c, -a)); throws Error(NotCyclic) when c vanishes.
ScalarOperator scalar_operator(const Mat2S& a_full);

// Rational values for the non-z variables, indexed like VarId.
struct ParamSample {
  std::array<Rational, exact::LaxVars::count> values{};

  Rational& operator[](VarId v) { return values[static_cast<std::size_t>(v)]; }
  const Rational& operator[](VarId v) const { return values[static_cast<std::size_t>(v)]; }
  std::string to_string() const;
};

// Random sample with small-height rationals, avoiding q in {0, 1}, t = 0 and
// resonant exponents (an integer among the signed sums of th0, th1, thinf).
ParamSample random_sample(std::uint64_t seed);

// Specializes every non-z variable; throws Error(DegenerateSample) on a vanishing denominator.
exact::UPoly specialize_in_z(const RF& x, const ParamSample& s);

using UMat = std::array<exact::UPoly, 4>;  // row-major, entries in Q[z]
using QVec = std::array<Rational, 2>;

UMat specialize_matrix(const Mat2S& m, const ParamSample& s);

struct ApparentReport {
  exact::UPoly b_poly;  // v ^ A_num(z) v
  int apparent_points = 0;
};

// Apparent singularities of the cyclic vector v for d/dz + a_num / weight.
// Zeros of the wedge at the listed singular points are not counted.
// Throws Error(ZeroWedge) when v is an eigenvector of A_num(z) for all z.
ApparentReport apparent_b_polynomial(const UMat& a_num, const QVec& v,
                                     const std::vector<Rational>& singular_points);

struct CyclicCandidate {
  PointKind point;
  QVec v;
  int apparent_points;
};

struct CyclicCount {
  int good = 0;
  ParamSample sample;
  int attempts = 0;
  std::vector<CyclicCandidate> candidates;
};

// Eigenvectors of the leading matrices at the singular points, with their
// apparent-singularity counts. Throws Error(DegenerateSample) if the sample
// is not generic enough (irrational eigenvalues, scalar leading matrix,
// coinciding candidates).
CyclicCount good_cyclic_count(const FamilySpec& fam, const ParamSample& sample);

// Draws samples from the seed until one is generic; throws Error(DegenerateSample)
// after max_attempts.
CyclicCount good_cyclic_count(const FamilySpec& fam, std::uint64_t seed, int max_attempts = 64);

// q = zero of c(z), p = F * Res_{z=q} a0. Throws Error(MultipleZeros) unless the
// numerator of c is linear in z.
std::pair<RF, RF> recover_pq(const Mat2S& a_full, const RP& f_factor);
std::pair<RF, RF> recover_pq(const FamilySpec& fam);

}  // namespace isomono
