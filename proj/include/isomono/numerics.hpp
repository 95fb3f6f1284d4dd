#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "isomono/families.hpp"

namespace isomono {

using cplx = std::complex<double>;
using CMat2 = std::array<cplx, 4>;  // row-major

CMat2 cmat_identity();
CMat2 cmat_mul(const CMat2& a, const CMat2& b);
CMat2 cmat_inverse(const CMat2& a);
cplx cmat_det(const CMat2& a);
cplx cmat_trace(const CMat2& a);
double cmat_max_diff(const CMat2& a, const CMat2& b);

// Floating-point evaluator compiled from an exact rational function.
class NumericFrac {
 public:
  using Point = std::array<cplx, exact::LaxVars::count>;

  NumericFrac() = default;
  explicit NumericFrac(const RF& f);

  cplx operator()(const Point& x) const;
  // Smallest modulus among the denominator factors at x.
  double min_denominator(const Point& x) const;

 private:
  struct Term {
    cplx coeff;
    std::array<unsigned char, exact::LaxVars::count> exps;
  };
  struct Poly {
    std::vector<Term> terms;
    cplx eval(const Point& x) const;
  };
  Poly num_;
  std::vector<std::pair<Poly, unsigned>> den_;
};

struct Theta {
  cplx th0{0}, th1{0}, thinf{0};
};

// Embedded Dormand-Prince 5(4) pair with per-step error control.
struct OdeOptions {
  double tol = 1e-10;
  double h_min = 1e-14;   // relative to the parameter interval
  double max_abs = 1e8;   // state modulus treated as blow-up
  long max_steps = 2000000;
};

enum class OdeStatus { completed, blowup_detected, step_underflow };

template <std::size_t N>
using CVec = std::array<cplx, N>;

// Integrates dy/ds = f(s, y) from s0 to s1 (real parameter, complex state).
// obs(s, y) is called after every accepted step; returning false stops the run
// with status blowup_detected.
template <std::size_t N, class Rhs, class Obs>
OdeStatus dopri45(Rhs&& f, double s0, double s1, CVec<N>& y, const OdeOptions& o, Obs&& obs, long* steps = nullptr) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double span = s1 - s0;
  if (span == 0) return OdeStatus::completed;
  const double dir = span > 0 ? 1.0 : -1.0;
  double s = s0;
  double h = dir * std::min(std::abs(span), 1e-2 * std::abs(span) + 1e-3);
  const double hmin = o.h_min * std::abs(span);
  CVec<N> k1 = f(s, y), k2, k3, k4, k5, k6, k7, tmp, ynew;
  long count = 0;
  while (dir * (s1 - s) > 0) {
    if (dir * (s + h - s1) > 0) h = s1 - s;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a21 * k1[i]);
    k2 = f(s + c2 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(s + c3 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(s + c4 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(s + c5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = f(s + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = f(s + h, ynew);
    double err = 0;
    bool finite = true;
    for (std::size_t i = 0; i < N; ++i) {
      const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = o.tol * (1.0 + std::max(std::abs(y[i]), std::abs(ynew[i])));
      err = std::max(err, std::abs(e) / scale);
      finite = finite && std::isfinite(ynew[i].real()) && std::isfinite(ynew[i].imag());
    }
    if (!finite) err = 1e10;
    if (err <= 1.0) {
      s += h;
      y = ynew;
      k1 = k7;
      ++count;
      double big = 0;
      for (const auto& v : y) big = std::max(big, std::abs(v));
      if (big > o.max_abs || !obs(s, y)) {
        if (steps) *steps = count;
        return OdeStatus::blowup_detected;
      }
      if (count > o.max_steps) break;
    }
    const double fac = err == 0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
    h *= fac;
    if (std::abs(h) < hmin && dir * (s1 - s) > hmin) {
      if (steps) *steps = count;
      return OdeStatus::step_underflow;
    }
  }
  if (steps) *steps = count;
  return dir * (s1 - s) > 0 ? OdeStatus::step_underflow : OdeStatus::completed;
}

// ---- Painleve flows ---------------------------------------------------------

struct TrajSample {
  cplx t, q, p, H;
};

struct Trajectory {
  FamilyId id;
  Theta theta;
  std::vector<TrajSample> samples;
  OdeStatus status = OdeStatus::completed;
  long steps = 0;
};

// Integrates (q', p') along the polygonal t-path. Throws Error(DomainViolation)
// when the flow's denominators vanish at the start or along the way.
Trajectory integrate_flow(const FamilySpec& fam, const Theta& theta, const std::vector<cplx>& t_path, cplx q0,
                          cplx p0, double tol, OdeOptions opts = {});

// dH/dt by Richardson-extrapolated central differences of H along the flow
// (steps delta and delta/2 each side) against the symbolic partial dH/dt;
// returns the max pointwise gap.
double hamiltonian_drift(const FamilySpec& fam, const Trajectory& traj, double delta = 1e-3);

// ---- Linear transport and monodromy -----------------------------------------

struct FlowPoint {
  cplx t, q, p;
};

// Integrates dY/dz = -A(z) Y along the polygon z_path. Throws Error(PathTooClose)
// if the path comes within `clearance` of a finite singular point and
// Error(StepUnderflow) if the integrator stalls.
CMat2 linear_transport(const FamilySpec& fam, const Theta& theta, const FlowPoint& at, const std::vector<cplx>& z_path,
                       const CMat2& y0, double tol, double clearance = 1e-3);

// Default loop radius: half the smallest distance between finite singular
// points, capped at 0.25.
double default_clearance(const FamilySpec& fam);

// Counterclockwise regular polygon around `center` starting and ending at
// center + radius.
std::vector<cplx> polygon_loop(cplx center, double radius, int vertices = 16);

// Monodromy Y0^{-1} Y(end) of the loop in the frame Y0.
CMat2 loop_monodromy(const FamilySpec& fam, const Theta& theta, const FlowPoint& at, const std::vector<cplx>& loop,
                     const CMat2& frame, double tol);

struct MonodromyRun {
  cplx base_point;
  std::vector<cplx> loop;
  std::vector<cplx> t_samples;
  std::vector<CMat2> monodromy;
  double residual = 0;     // max entrywise deviation from the first matrix
  double max_det_gap = 0;  // max |det M - 1|
  OdeStatus status = OdeStatus::completed;
};

struct InvarianceOptions {
  double tol = 1e-10;
  int t_samples = 5;
  bool co_evolve_frame = true;  // false drops B (negative control)
  int loop_vertices = 16;
};

// Follows (q, p) along the straight t-segment [t0, t1] together with the frame
// dY0/dt = -B(z0, t) Y0, and computes the monodromy around `center` at
// t_samples equally spaced times.
MonodromyRun isomonodromy_invariance(const FamilySpec& fam, const Theta& theta, cplx t0, cplx t1, cplx q0, cplx p0,
                                     cplx center, const InvarianceOptions& opts = {});

// Reference runs used by the test suites and the CLI.
struct Benchmark {
  FamilyId id;
  Theta theta;
  cplx t0, t1, q0, p0;
};
const std::vector<Benchmark>& flow_benchmarks();  // one per Lax family

}  // namespace isomono
