#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isomono/errors.hpp"
#include "isomono/exact/frac.hpp"
#include "isomono/exact/matrix2.hpp"

namespace isomono {

using exact::LaxVars;
using exact::Rational;
using exact::VarId;
using RP = exact::Poly<LaxVars>;
using RF = exact::Frac<LaxVars>;
using Mat2S = exact::Mat2<RF>;

enum class FamilyId { pvi, pv, pv_deg, piii_d6, piii_d7, piii_d8, piv, pii_fn, pii, pi };

inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::pvi,     FamilyId::pv,  FamilyId::pv_deg, FamilyId::piii_d6, FamilyId::piii_d7,
    FamilyId::piii_d8, FamilyId::piv, FamilyId::pii_fn, FamilyId::pii,     FamilyId::pi};
inline constexpr std::array<FamilyId, 9> kLaxFamilies = {
    FamilyId::pv,  FamilyId::pv_deg, FamilyId::piii_d6, FamilyId::piii_d7, FamilyId::piii_d8,
    FamilyId::piv, FamilyId::pii_fn, FamilyId::pii,     FamilyId::pi};

std::string_view family_key(FamilyId id);
// Throws Error(UnknownFamily).
FamilyId parse_family_id(std::string_view key);

enum class PointKind { zero, one, infinity, movable };
std::string_view point_name(PointKind k);

// Katz invariants at the slots 0, 1, infinity, t; nullopt marks an absent point.
struct KatzSignature {
  std::array<std::optional<Rational>, 4> r;

  int num_points() const;
  std::vector<Rational> sorted_invariants() const;  // decreasing
  std::string to_string() const;                    // e.g. "(0,-,2)" or "(0,0,0,0)"
  friend bool operator==(const KatzSignature& a, const KatzSignature& b) { return a.r == b.r; }
  friend bool operator<(const KatzSignature& a, const KatzSignature& b);
};

struct ExponentTerm {
  Rational power;     // power of z (negative at 0, positive at infinity)
  std::string coeff;  // display form of the coefficient
};

// Generalized local exponent +-(sum of terms) at one singular point.
struct ExponentDescriptor {
  PointKind point;
  std::vector<ExponentTerm> terms;
  bool leading_depends_on_t;

  // Degree in the inverse local parameter of the leading term.
  Rational leading_degree() const;
};

struct FamilySpec {
  FamilyId id;
  std::string key;
  std::string painleve;
  std::string dynkin;
  KatzSignature katz;
  int dim_p;
  bool has_lax;

  // Connection d/dz + A_num(z) / weight(z), with A_num polynomial in z.
  Mat2S a_num;
  RP weight;
  // Displayed deformation matrix B = sum_k z^k * b_terms[k].
  std::map<int, Mat2S> b_terms;
  RP f_factor;
  RF qprime, pprime;
  RF second_order;  // q'' in terms of q, qdot, t, theta
  RF hamiltonian;
  std::vector<RF> hamiltonian_alternates;
  std::vector<ExponentDescriptor> exponents;
  std::vector<Rational> finite_singular_points;

  Mat2S a_full() const;
  Mat2S b_full() const;
  std::vector<int> b_powers() const;
};

const FamilySpec& get_family(FamilyId id);

// Fibre-dimension contribution of a point with Katz invariant r.
int katz_contribution(const Rational& r);

// Contribution of the position/automorphism data for #S points.
int position_contribution(int num_points);

int fibre_dimension(const std::vector<Rational>& invariants);

// All configurations with fibre dimension 1, placed canonically in the slots
// (largest invariant at infinity, then 0, 1, t).
std::vector<KatzSignature> enumerate_families(const Rational& max_r, int max_points);

// Parameter-space dimension: one trace parameter per point with integral r.
int parameter_dimension(const KatzSignature& k);

}  // namespace isomono
