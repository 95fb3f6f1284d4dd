#include "isomono/numerics.hpp"

#include <map>
#include <mutex>

#include "isomono/isomonodromy.hpp"

namespace isomono {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Compiled {
  std::array<NumericFrac, 4> a;  // A_full entries
  std::array<NumericFrac, 4> b;  // B entries
  NumericFrac qprime, pprime, h, h_t;
  std::vector<NumericFrac> flow_dens;
};

const Compiled& compiled(const FamilySpec& fam) {
  static std::mutex mu;
  static std::map<FamilyId, Compiled> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(fam.id);
  if (it != cache.end()) return it->second;
  if (!fam.has_lax) throw Error(ErrorKind::UsageError, fam.key + " carries no Lax data");
  Compiled c;
  const Mat2S a = fam.a_full(), b = fam.b_full();
  for (int e = 0; e < 4; ++e) {
    c.a[e] = NumericFrac(a.e[e]);
    c.b[e] = NumericFrac(b.e[e]);
  }
  c.qprime = NumericFrac(fam.qprime);
  c.pprime = NumericFrac(fam.pprime);
  c.h = NumericFrac(fam.hamiltonian);
  c.h_t = NumericFrac(fam.hamiltonian.diff(VarId::t));
  return cache.emplace(fam.id, std::move(c)).first->second;
}

NumericFrac::Point point(const Theta& th, cplx z, cplx t, cplx q, cplx p) {
  NumericFrac::Point x{};
  x[static_cast<std::size_t>(VarId::z)] = z;
  x[static_cast<std::size_t>(VarId::p)] = p;
  x[static_cast<std::size_t>(VarId::q)] = q;
  x[static_cast<std::size_t>(VarId::t)] = t;
  x[static_cast<std::size_t>(VarId::th0)] = th.th0;
  x[static_cast<std::size_t>(VarId::th1)] = th.th1;
  x[static_cast<std::size_t>(VarId::thinf)] = th.thinf;
  return x;
}

CMat2 eval_mat(const std::array<NumericFrac, 4>& m, const NumericFrac::Point& x) {
  return {m[0](x), m[1](x), m[2](x), m[3](x)};
}

double segment_distance(cplx a, cplx b, cplx c) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0) return std::abs(c - a);
  const double u = std::clamp(((c - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(a + u * d - c);
}

}  // namespace

// ---- small complex matrices ------------------------------------------------

CMat2 cmat_identity() { return {1.0, 0.0, 0.0, 1.0}; }
CMat2 cmat_mul(const CMat2& a, const CMat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
cplx cmat_det(const CMat2& a) { return a[0] * a[3] - a[1] * a[2]; }
cplx cmat_trace(const CMat2& a) { return a[0] + a[3]; }
CMat2 cmat_inverse(const CMat2& a) {
  const cplx d = cmat_det(a);
  return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
}
double cmat_max_diff(const CMat2& a, const CMat2& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// ---- NumericFrac --------------------------------------------------------------

NumericFrac::NumericFrac(const RF& f) {
  auto compile = [](const RP& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
      Term t{cplx(c.get_d(), 0.0), {}};
      for (std::size_t i = 0; i < exact::LaxVars::count; ++i)
        t.exps[i] = static_cast<unsigned char>(exact::exponent(m, i));
      out.terms.push_back(t);
    }
    return out;
  };
  num_ = compile(f.num());
  for (const auto& [fac, k] : f.den_factors()) den_.emplace_back(compile(fac), k);
}

cplx NumericFrac::Poly::eval(const Point& x) const {
  cplx s = 0;
  for (const auto& t : terms) {
    cplx v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (unsigned k = 0; k < t.exps[i]; ++k) v *= x[i];
    s += v;
  }
  return s;
}

cplx NumericFrac::operator()(const Point& x) const {
  cplx r = num_.eval(x);
  for (const auto& [p, k] : den_) {
    const cplx d = p.eval(x);
    for (unsigned i = 0; i < k; ++i) r /= d;
  }
  return r;
}

double NumericFrac::min_denominator(const Point& x) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [p, k] : den_) m = std::min(m, std::abs(p.eval(x)));
  return m;
}

// ---- flows ------------------------------------------------------------------

Trajectory integrate_flow(const FamilySpec& fam, const Theta& theta, const std::vector<cplx>& t_path, cplx q0,
                          cplx p0, double tol, OdeOptions opts) {
  if (t_path.size() < 2) throw Error(ErrorKind::UsageError, "t-path needs at least two vertices");
  if (!(tol > 0)) throw Error(ErrorKind::UsageError, "tol must be positive");
  const Compiled& c = compiled(fam);
  opts.tol = tol;
  Trajectory tr;
  tr.id = fam.id;
  tr.theta = theta;
  auto check_domain = [&](cplx t, cplx q, cplx p) {
    const auto x = point(theta, 0.0, t, q, p);
    if (std::min(c.qprime.min_denominator(x), c.pprime.min_denominator(x)) < 1e-12)
      throw Error(ErrorKind::DomainViolation, "flow is singular at t=" + std::to_string(t.real()) + "+" +
                                                  std::to_string(t.imag()) + "i");
  };
  auto record = [&](cplx t, cplx q, cplx p) {
    tr.samples.push_back({t, q, p, c.h(point(theta, 0.0, t, q, p))});
  };
  check_domain(t_path.front(), q0, p0);
  record(t_path.front(), q0, p0);
  CVec<2> y{q0, p0};
  for (std::size_t seg = 0; seg + 1 < t_path.size(); ++seg) {
    const cplx ta = t_path[seg], dt = t_path[seg + 1] - ta;
    auto rhs = [&](double s, const CVec<2>& v) -> CVec<2> {
      const auto x = point(theta, 0.0, ta + s * dt, v[0], v[1]);
      return {dt * c.qprime(x), dt * c.pprime(x)};
    };
    auto obs = [&](double s, const CVec<2>& v) {
      const cplx t = ta + s * dt;
      check_domain(t, v[0], v[1]);
      record(t, v[0], v[1]);
      return true;
    };
    long steps = 0;
    tr.status = dopri45<2>(rhs, 0.0, 1.0, y, opts, obs, &steps);
    tr.steps += steps;
    if (tr.status != OdeStatus::completed) break;
  }
  return tr;
}

double hamiltonian_drift(const FamilySpec& fam, const Trajectory& traj, double delta) {
  const Compiled& c = compiled(fam);
  const auto& S = traj.samples;
  double worst = 0;
  OdeOptions fine;
  fine.tol = 1e-14;
  for (std::size_t k = 0; k < S.size(); ++k) {
    const std::size_t lo = k == 0 ? 0 : k - 1, hi = k + 1 < S.size() ? k + 1 : k;
    cplx dir = S[hi].t - S[lo].t;
    if (std::abs(dir) == 0) continue;
    dir /= std::abs(dir);
    const cplx step = delta * dir;
    auto h_at = [&](cplx sgn_step) {
      CVec<2> y{S[k].q, S[k].p};
      auto rhs = [&](double s, const CVec<2>& v) -> CVec<2> {
        const auto x = point(traj.theta, 0.0, S[k].t + s * sgn_step, v[0], v[1]);
        return {sgn_step * c.qprime(x), sgn_step * c.pprime(x)};
      };
      dopri45<2>(rhs, 0.0, 1.0, y, fine, [](double, const CVec<2>&) { return true; });
      return c.h(point(traj.theta, 0.0, S[k].t + sgn_step, y[0], y[1]));
    };
    // Richardson combination of central differences at step and step/2.
    const cplx d1 = (h_at(step) - h_at(-step)) / (2.0 * step);
    const cplx d2 = (h_at(0.5 * step) - h_at(-0.5 * step)) / step;
    const cplx dhdt = (4.0 * d2 - d1) / 3.0;
    const cplx partial = c.h_t(point(traj.theta, 0.0, S[k].t, S[k].q, S[k].p));
    worst = std::max(worst, std::abs(dhdt - partial));
  }
  return worst;
}

// ---- transport --------------------------------------------------------------

CMat2 linear_transport(const FamilySpec& fam, const Theta& theta, const FlowPoint& at, const std::vector<cplx>& z_path,
                       const CMat2& y0, double tol, double clearance) {
  const Compiled& c = compiled(fam);
  for (std::size_t i = 0; i + 1 < z_path.size(); ++i)
    for (const auto& sp : fam.finite_singular_points) {
      const cplx sc(sp.get_d(), 0.0);
      if (segment_distance(z_path[i], z_path[i + 1], sc) < clearance)
        throw Error(ErrorKind::PathTooClose, "path passes within " + std::to_string(clearance) + " of z=" +
                                                 sp.get_str());
    }
  CVec<4> y{y0[0], y0[1], y0[2], y0[3]};
  OdeOptions opts;
  opts.tol = tol;
  opts.max_abs = 1e200;
  for (std::size_t seg = 0; seg + 1 < z_path.size(); ++seg) {
    const cplx za = z_path[seg], dz = z_path[seg + 1] - za;
    if (std::abs(dz) == 0) continue;
    auto rhs = [&](double s, const CVec<4>& v) -> CVec<4> {
      const CMat2 A = eval_mat(c.a, point(theta, za + s * dz, at.t, at.q, at.p));
      const CMat2 r = cmat_mul(A, {v[0], v[1], v[2], v[3]});
      return {-dz * r[0], -dz * r[1], -dz * r[2], -dz * r[3]};
    };
    const OdeStatus st = dopri45<4>(rhs, 0.0, 1.0, y, opts, [](double, const CVec<4>&) { return true; });
    if (st != OdeStatus::completed) throw Error(ErrorKind::StepUnderflow, "linear transport stalled");
  }
  return {y[0], y[1], y[2], y[3]};
}

double default_clearance(const FamilySpec& fam) {
  double d = 0.5;
  const auto& pts = fam.finite_singular_points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::min(d, std::abs(Rational(pts[i] - pts[j]).get_d()));
  return std::min(d / 2, 0.25);
}

std::vector<cplx> polygon_loop(cplx center, double radius, int vertices) {
  std::vector<cplx> out;
  for (int k = 0; k <= vertices; ++k) out.push_back(center + std::polar(radius, 2 * kPi * (k % vertices) / vertices));
  return out;
}

CMat2 loop_monodromy(const FamilySpec& fam, const Theta& theta, const FlowPoint& at, const std::vector<cplx>& loop,
                     const CMat2& frame, double tol) {
  // Clearance: the loop may come no closer than a tenth of its own distance to the nearest singular point.
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < loop.size(); ++i)
    for (const auto& sp : fam.finite_singular_points)
      nearest = std::min(nearest, segment_distance(loop[i], loop[i + 1], cplx(sp.get_d(), 0.0)));
  const double clearance = std::isfinite(nearest) ? std::min(1e-3, nearest / 10) : 0.0;
  const CMat2 end = linear_transport(fam, theta, at, loop, frame, tol, clearance);
  return cmat_mul(cmat_inverse(frame), end);
}

MonodromyRun isomonodromy_invariance(const FamilySpec& fam, const Theta& theta, cplx t0, cplx t1, cplx q0, cplx p0,
                                     cplx center, const InvarianceOptions& opts) {
  const Compiled& c = compiled(fam);
  if (fam.finite_singular_points.empty())
    throw Error(ErrorKind::UsageError, fam.key + " has no finite singular point to loop around");
  MonodromyRun run;
  const double radius = default_clearance(fam);
  run.loop = polygon_loop(center, radius, opts.loop_vertices);
  run.base_point = run.loop.front();
  const cplx z0 = run.base_point;

  // State: q, p, frame Y0 (row-major).
  CVec<6> y{q0, p0, 1.0, 0.0, 0.0, 1.0};
  OdeOptions ode;
  ode.tol = opts.tol;
  const int n = std::max(2, opts.t_samples);
  for (int j = 0; j < n; ++j) {
    const cplx tj = t0 + (t1 - t0) * (static_cast<double>(j) / (n - 1));
    if (j > 0) {
      const cplx ta = t0 + (t1 - t0) * (static_cast<double>(j - 1) / (n - 1));
      const cplx dt = tj - ta;
      auto rhs = [&](double s, const CVec<6>& v) -> CVec<6> {
        const auto x = point(theta, z0, ta + s * dt, v[0], v[1]);
        CVec<6> d{dt * c.qprime(x), dt * c.pprime(x), 0.0, 0.0, 0.0, 0.0};
        if (opts.co_evolve_frame) {
          const CMat2 r = cmat_mul(eval_mat(c.b, x), {v[2], v[3], v[4], v[5]});
          for (int e = 0; e < 4; ++e) d[2 + e] = -dt * r[e];
        }
        return d;
      };
      run.status = dopri45<6>(rhs, 0.0, 1.0, y, ode, [](double, const CVec<6>&) { return true; });
      if (run.status != OdeStatus::completed) break;
    }
    const CMat2 frame{y[2], y[3], y[4], y[5]};
    const CMat2 m = loop_monodromy(fam, theta, {tj, y[0], y[1]}, run.loop, frame, opts.tol);
    run.t_samples.push_back(tj);
    run.monodromy.push_back(m);
    run.max_det_gap = std::max(run.max_det_gap, std::abs(cmat_det(m) - 1.0));
    run.residual = std::max(run.residual, cmat_max_diff(m, run.monodromy.front()));
  }
  return run;
}

const std::vector<Benchmark>& flow_benchmarks() {
  static const std::vector<Benchmark> all = {
      {FamilyId::pv, {1.0 / 3, 1.0 / 5, 1.0 / 7}, 1.0, 2.0, {0.4, 0.3}, {0.2, -0.1}},
      {FamilyId::pv_deg, {1.0 / 3, 1.0 / 5, 0.0}, 1.0, 1.5, {0.4, 0.3}, {0.2, -0.1}},
      {FamilyId::piii_d6, {1.0 / 3, 0.0, 1.0 / 5}, 1.0, 1.5, {-0.5, 0.3}, {-0.2, 0.05}},
      {FamilyId::piii_d7, {0.0, 0.0, 1.0 / 5}, 1.0, 1.5, {-0.5, 0.3}, {-0.2, 0.05}},
      {FamilyId::piii_d8, {0.0, 0.0, 0.0}, 1.0, 1.5, {-0.5, 0.3}, {-0.2, 0.05}},
      {FamilyId::piv, {1.0 / 3, 0.0, 1.0 / 5}, 0.5, 1.0, {0.6, 0.2}, {0.1, 0.1}},
      {FamilyId::pii_fn, {1.0 / 3, 0.0, 0.0}, 0.5, 1.0, {0.6, 0.2}, {0.1, 0.1}},
      {FamilyId::pii, {0.0, 0.0, 1.0 / 5}, 0.0, 0.5, {0.3, 0.1}, {0.1, 0.1}},
      {FamilyId::pi, {0.0, 0.0, 0.0}, 0.0, 0.5, {0.3, 0.1}, {0.1, 0.1}},
  };
  return all;
}

}  // namespace isomono
