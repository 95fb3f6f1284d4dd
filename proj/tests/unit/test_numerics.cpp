#include <cmath>

#include "doctest.h"
#include "isomono/numerics.hpp"

using namespace isomono;

namespace {

const Benchmark& bench(FamilyId id) {
  for (const auto& b : flow_benchmarks())
    if (b.id == id) return b;
  throw std::logic_error("no benchmark");
}

// Taylor coefficients of q with q'' = 6 q^2 + 2 t, q(0) = q'(0) = 0.
std::vector<double> pi_series(int order) {
  std::vector<double> c(order + 1, 0.0);
  for (int n = 2; n <= order; ++n) {
    // n (n-1) c_n = [6 q^2 + 2 t]_{n-2}
    double rhs = (n - 2 == 1) ? 2.0 : 0.0;
    for (int i = 0; i <= n - 2; ++i) rhs += 6.0 * c[i] * c[n - 2 - i];
    c[n] = rhs / (n * (n - 1.0));
  }
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

}  // namespace

TEST_CASE("PI flow against its Taylor series") {
  const auto c = pi_series(60);
  CHECK(c[3] == doctest::Approx(1.0 / 3));
  const auto& pi = get_family(FamilyId::pi);
  const auto short_run = integrate_flow(pi, {}, {0.0, 1e-3}, 0.0, 0.0, 1e-14);
  CHECK(std::abs(short_run.samples.back().q - horner(c, 1e-3)) <= 1e-15);
  const auto long_run = integrate_flow(pi, {}, {0.0, 0.5}, 0.0, 0.0, 1e-12);
  CHECK(std::abs(long_run.samples.back().q - horner(c, 0.5)) <= 1e-9);
}

TEST_CASE("PII equilibrium") {
  const auto tr = integrate_flow(get_family(FamilyId::pii), {0.0, 0.0, -1.0}, {0.0, 1.0}, 0.0, 0.0, 1e-10);
  CHECK(tr.status == OdeStatus::completed);
  for (const auto& s : tr.samples) {
    CHECK(std::abs(s.q) == 0.0);
    CHECK(std::abs(s.p) == 0.0);
  }
}

TEST_CASE("trajectories record ordered samples and H") {
  const auto& b = bench(FamilyId::pv);
  const auto tr = integrate_flow(get_family(b.id), b.theta, {b.t0, b.t1}, b.q0, b.p0, 1e-10);
  REQUIRE(tr.samples.size() > 2);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].t.real() > tr.samples[i - 1].t.real());
  CHECK(tr.samples.back().t == b.t1);
}

TEST_CASE("movable poles halt the integration") {
  const auto tr = integrate_flow(get_family(FamilyId::pi), {}, {0.0, 5.0}, 3.0, 3.0, 1e-10);
  CHECK(tr.status == OdeStatus::blowup_detected);
  CHECK(tr.samples.back().t.real() < 5.0);
}

TEST_CASE("flows refuse singular starting data") {
  const auto& b = bench(FamilyId::pv);
  try {
    integrate_flow(get_family(FamilyId::pv), b.theta, {1.0, 2.0}, 1.0, 0.3, 1e-10);
    FAIL("expected DomainViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainViolation);
  }
}

TEST_CASE("Hamiltonian drift on every benchmark") {
  const double tol = 1e-10;
  for (const auto& b : flow_benchmarks()) {
    const auto& fam = get_family(b.id);
    CAPTURE(fam.key);
    const auto tr = integrate_flow(fam, b.theta, {b.t0, b.t1}, b.q0, b.p0, tol);
    REQUIRE(tr.status == OdeStatus::completed);
    CHECK(hamiltonian_drift(fam, tr) <= 1e3 * tol);
  }
}

TEST_CASE("linear transport basics") {
  const auto& fam = get_family(FamilyId::pv);
  const FlowPoint at{1.5, {0.4, 0.3}, {0.2, -0.1}};
  const Theta th{1.0 / 3, 1.0 / 5, 1.0 / 7};
  const CMat2 y0{2.0, 1.0, 1.0, 1.0};
  CHECK(cmat_max_diff(linear_transport(fam, th, at, {0.5, 0.5}, y0, 1e-10), y0) == 0.0);
  const CMat2 m = loop_monodromy(fam, th, at, polygon_loop(0.5, 0.2), cmat_identity(), 1e-11);
  CHECK(cmat_max_diff(m, cmat_identity()) < 1e-8);
  try {
    linear_transport(fam, th, at, {-0.5, 0.5}, y0, 1e-10);
    FAIL("expected PathTooClose");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PathTooClose);
  }
}

TEST_CASE("monodromy depends only on the homotopy class") {
  const auto& fam = get_family(FamilyId::pv);
  const FlowPoint at{1.5, {0.4, 0.3}, {0.2, -0.1}};
  const Theta th{1.0 / 3, 1.0 / 5, 1.0 / 7};
  const CMat2 a = loop_monodromy(fam, th, at, polygon_loop(0.0, 0.25), cmat_identity(), 1e-12);
  const std::vector<cplx> square{0.25, {0.25, 0.4}, {-0.4, 0.4}, {-0.4, -0.4}, {0.25, -0.4}, 0.25};
  const CMat2 b = loop_monodromy(fam, th, at, square, cmat_identity(), 1e-12);
  CHECK(cmat_max_diff(a, b) < 1e-8);
  CHECK(std::abs(cmat_det(a) - 1.0) < 1e-8);
  // Exponents +-theta0/2 at 0.
  CHECK(std::abs(cmat_trace(a) - 2 * std::cos(M_PI / 3)) < 1e-8);
}

TEST_CASE("PIV traces around z = 0") {
  const auto& fam = get_family(FamilyId::piv);
  for (double th0 : {1.0 / 3, 1.0 / 5}) {
    const CMat2 m = loop_monodromy(fam, {th0, 0.0, 0.2}, {0.7, {0.3, 0.2}, {0.1, 0.4}},
                                   polygon_loop(0.0, default_clearance(fam)), cmat_identity(), 1e-12);
    CHECK(std::abs(cmat_trace(m) - 2 * std::cos(M_PI * th0)) <= 1e-8);
  }
}

TEST_CASE("default clearance") {
  CHECK(default_clearance(get_family(FamilyId::pv)) == 0.25);
  CHECK(default_clearance(get_family(FamilyId::piii_d6)) == 0.25);
  const auto loop = polygon_loop({1.0, 0.0}, 0.25, 8);
  REQUIRE(loop.size() == 9);
  CHECK(loop.front() == loop.back());
  CHECK(std::abs(loop.front() - cplx(1.25, 0.0)) < 1e-15);
  CHECK(loop[2].imag() > 0);  // counterclockwise
}

TEST_CASE("isomonodromy invariance with a negative control") {
  for (auto id : {FamilyId::pv, FamilyId::piii_d6, FamilyId::piv, FamilyId::pv_deg}) {
    const auto& b = bench(id);
    const auto& fam = get_family(id);
    CAPTURE(fam.key);
    const auto run = isomonodromy_invariance(fam, b.theta, b.t0, b.t1, b.q0, b.p0, 0.0);
    CHECK(run.status == OdeStatus::completed);
    CHECK(run.residual <= 1e-6);
    CHECK(run.max_det_gap <= 1e-8);
    CHECK(run.t_samples.size() == 5);
    InvarianceOptions frozen;
    frozen.co_evolve_frame = false;
    CHECK(isomonodromy_invariance(fam, b.theta, b.t0, b.t1, b.q0, b.p0, 0.0, frozen).residual >= 1e-2);
  }
}

TEST_CASE("PV loop around z = 1") {
  const auto& b = bench(FamilyId::pv);
  const auto run = isomonodromy_invariance(get_family(FamilyId::pv), b.theta, b.t0, b.t1, b.q0, b.p0, 1.0);
  CHECK(run.residual <= 1e-6);
  // Exponents +-theta1/2 at 1.
  CHECK(std::abs(cmat_trace(run.monodromy.front()) - 2 * std::cos(M_PI / 5)) < 1e-8);
}

TEST_CASE("tightening the tolerance shrinks the residual") {
  for (auto id : {FamilyId::pv, FamilyId::piii_d6}) {
    const auto& b = bench(id);
    InvarianceOptions coarse, fine;
    coarse.tol = 1e-9;
    fine.tol = 1e-9 / 32;
    const double r1 = isomonodromy_invariance(get_family(id), b.theta, b.t0, b.t1, b.q0, b.p0, 0.0, coarse).residual;
    const double r2 = isomonodromy_invariance(get_family(id), b.theta, b.t0, b.t1, b.q0, b.p0, 0.0, fine).residual;
    CAPTURE(family_key(id));
    CHECK(r1 >= 4 * r2);
  }
}
