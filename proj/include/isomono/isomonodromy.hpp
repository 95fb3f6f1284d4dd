#pragma once

#include <map>
#include <string>
#include <vector>

#include "isomono/families.hpp"

namespace isomono {

struct DeformationResult {
  std::map<int, Mat2S> b_terms;  // B = sum_k z^k * b_terms[k]
  RF qprime;
  RF pprime;
  Mat2S residual;
  std::size_t equations = 0;
  std::size_t unknowns = 0;

  Mat2S b_full() const;
};

// Total t-derivative of an expression in (p, q, t) along the flow.
RF total_t_derivative(const RF& expr, const RF& qprime, const RF& pprime);

// dA/dt - dB/dz - [A, B] for the plain d/dz normal form A = a_num / weight.
Mat2S zero_curvature_residual(const FamilySpec& fam, const Mat2S& b, const RF& qprime, const RF& pprime);

// Solve the zero-curvature identity for the B coefficients and (q', p').
DeformationResult derive_deformation(const FamilySpec& fam);

// Residual of the registry's own B and flow.
Mat2S verify_zero_curvature(const FamilySpec& fam);

bool is_zero_matrix(const Mat2S& m);

struct HamiltonianCheck {
  RF pprime_residual;  // p' - F dH/dq
  RF qprime_residual;  // q' + F dH/dp
  bool alternates_agree = true;
  bool holds() const { return pprime_residual.is_zero() && qprime_residual.is_zero() && alternates_agree; }
};
HamiltonianCheck verify_hamiltonian(const FamilySpec& fam);

struct SecondOrderCheck {
  RF derived;   // q'' from the flow, in (q, qdot, t, theta)
  RF residual;  // derived - registry display
  bool holds() const { return residual.is_zero(); }
};
// Throws Error(NotAffineInP).
SecondOrderCheck verify_second_order(const FamilySpec& fam);

// dH/dt along the flow minus the explicit partial derivative.
RF hamiltonian_drift_residual(const FamilySpec& fam);

// Checks each B power against the pole-order bounds derived from the Katz data.
struct PoleBoundReport {
  bool ok = true;
  std::vector<std::string> notes;
};
PoleBoundReport check_pole_bounds(const FamilySpec& fam);

}  // namespace isomono
