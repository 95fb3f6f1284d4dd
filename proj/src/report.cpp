#include "isomono/report.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include "json.hpp"

#include "isomono/cubics.hpp"
#include "isomono/isomonodromy.hpp"
#include "isomono/numerics.hpp"
#include "isomono/scalarform.hpp"

namespace isomono {

namespace {

using Records = std::vector<CheckRecord>;

constexpr double kInvarianceBudget = 1e-6;
constexpr double kNegativeControlFloor = 1e-2;
constexpr double kTraceTol = 1e-8;

CheckRecord rec(std::string id, bool ok, std::string anchor, std::string detail = {},
                std::optional<double> residual = std::nullopt) {
  return {std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(anchor), std::move(detail), residual};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

std::string first_nonzero(const Mat2S& m) {
  for (const auto& e : m.e)
    if (!e.is_zero()) return e.to_string();
  return "0";
}

// Runs one job per item, concurrently if asked, and concatenates in item order.
template <class T>
Records fan_out(const std::vector<T>& items, bool parallel, const std::function<Records(const T&)>& job) {
  std::vector<Records> parts(items.size());
  if (parallel) {
    std::vector<std::future<Records>> fut;
    for (const auto& it : items) fut.push_back(std::async(std::launch::async, job, std::cref(it)));
    for (std::size_t i = 0; i < items.size(); ++i) parts[i] = fut[i].get();
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) parts[i] = job(items[i]);
  }
  Records out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<FamilyId> lax_ids() { return {kLaxFamilies.begin(), kLaxFamilies.end()}; }

std::string label(const FamilySpec& f) { return f.painleve; }

// ---- lax -----------------------------------------------------------------

Records lax_family(const FamilySpec& f) {
  Records out;
  const std::string p = "lax/" + f.key + "/";
  const Mat2S zc = verify_zero_curvature(f);
  out.push_back(rec(p + "zero-curvature", is_zero_matrix(zc), label(f) + " Lax pair",
                    is_zero_matrix(zc) ? "residual 0" : "residual entry " + first_nonzero(zc)));
  try {
    const DeformationResult d = derive_deformation(f);
    bool same = equal(d.qprime, f.qprime) && equal(d.pprime, f.pprime);
    for (const auto& [k, m] : f.b_terms) {
      const auto it = d.b_terms.find(k);
      for (int e = 0; e < 4; ++e) same = same && it != d.b_terms.end() && equal(it->second.e[e], m.e[e]);
    }
    for (const auto& [k, m] : d.b_terms)
      if (!f.b_terms.count(k)) same = same && is_zero_matrix(m);
    out.push_back(rec(p + "derive", same, label(f) + " deformation matrix and flow",
                      std::to_string(d.equations) + " equations, " + std::to_string(d.unknowns) + " unknowns; q' = " +
                          d.qprime.to_string()));
  } catch (const Error& e) {
    out.push_back(rec(p + "derive", false, label(f) + " deformation matrix and flow", e.what()));
  }
  const auto pb = check_pole_bounds(f);
  std::string notes;
  for (const auto& n : pb.notes) notes += (notes.empty() ? "" : "; ") + n;
  out.push_back(rec(p + "pole-bounds", pb.ok, label(f) + " deformation pole orders", notes));
  const auto [q, pp] = recover_pq(f);
  const bool pq = equal(q, RF::var(VarId::q)) && equal(pp, RF::var(VarId::p));
  out.push_back(rec(p + "recover-pq", pq, label(f) + " apparent singularity and residue",
                    "q = " + q.to_string() + ", p = " + pp.to_string()));
  return out;
}

Records suite_lax(const SuiteOptions& o) {
  return fan_out<FamilyId>(lax_ids(), o.parallel, [](const FamilyId& id) { return lax_family(get_family(id)); });
}

// ---- hamiltonian / second order -------------------------------------------

Records suite_hamiltonian(const SuiteOptions& o) {
  return fan_out<FamilyId>(lax_ids(), o.parallel, [](const FamilyId& id) {
    const auto& f = get_family(id);
    Records out;
    const auto h = verify_hamiltonian(f);
    std::string detail = "F = " + f.f_factor.to_string();
    if (!h.pprime_residual.is_zero()) detail += "; p' residual " + h.pprime_residual.to_string();
    if (!h.qprime_residual.is_zero()) detail += "; q' residual " + h.qprime_residual.to_string();
    if (!h.alternates_agree) detail += "; alternate Hamiltonian disagrees";
    out.push_back(rec("hamiltonian/" + f.key + "/form", h.holds(), label(f) + " Hamiltonian and symplectic form",
                      detail));
    const RF drift = hamiltonian_drift_residual(f);
    out.push_back(rec("hamiltonian/" + f.key + "/drift-identity", drift.is_zero(),
                      label(f) + " Hamiltonian time dependence", drift.is_zero() ? "0" : drift.to_string()));
    return out;
  });
}

Records suite_second_order(const SuiteOptions& o) {
  return fan_out<FamilyId>(lax_ids(), o.parallel, [](const FamilyId& id) {
    const auto& f = get_family(id);
    try {
      const auto s = verify_second_order(f);
      return Records{rec("second-order/" + f.key, s.holds(), label(f) + " second-order equation",
                         s.holds() ? "q'' = " + s.derived.to_string() : "residual " + s.residual.to_string())};
    } catch (const Error& e) {
      return Records{rec("second-order/" + f.key, false, label(f) + " second-order equation", e.what())};
    }
  });
}

// ---- cubics ---------------------------------------------------------------

ParamValues random_values(FamilyId id, std::mt19937_64& rng) {
  ParamValues v;
  for (const auto& slot : surface(id).params) {
    Rational r;
    do r = random_rational(rng, 3, 2);
    while (slot.nonzero && sgn(r) == 0);
    v.push_back(r);
  }
  return v;
}

// Every fifth sample is forced onto a component of the displayed discriminant.
ParamValues discriminant_biased(FamilyId id, std::mt19937_64& rng, int k) {
  ParamValues v = random_values(id, rng);
  if (k % 5 != 0) return v;
  if (id == FamilyId::piii_d6) {
    if (k % 10 == 0) v[1] = v[0];
    else v[1] = Rational(1) / v[0];
  } else if (id == FamilyId::piv) {
    if (k % 15 == 0) v[0] = 2;
    else if (k % 15 == 5) v[0] = -2;
    else v[0] = v[1] + Rational(1) / v[1];
  }
  return v;
}

std::string values_string(const ParamValues& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

Records cubic_tables(FamilyId id, const SuiteOptions& o) {
  Records out;
  const auto rep = verify_singularity_table(id, o.table_samples, o.seed);
  int i = 0;
  for (const auto& r : rep.rows) {
    std::string detail = std::to_string(r.passed) + "/" + std::to_string(r.samples) + " samples";
    if (!r.failures.empty()) detail += "; first failure: " + r.failures.front();
    if (!r.correction.empty())
      detail += "; corrected coordinates (" + r.correction + "), printed coordinates singular at " +
                std::to_string(r.printed_singular) + "/" + std::to_string(r.samples);
    out.push_back(rec("cubics/" + std::string(family_key(id)) + "/row-" + std::to_string(++i), r.ok(), r.anchor,
                      detail));
  }
  return out;
}

Records cubic_smooth(FamilyId id, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed * 7919 + static_cast<std::uint64_t>(id));
  const bool has_params = !surface(id).params.empty();
  const int n = has_params ? o.smooth_samples : 1;
  int ok = 0;
  std::string witness;
  for (int k = 0; k < n; ++k) {
    const ParamValues v = random_values(id, rng);
    if (smoothness_probe(id, v).smooth) ++ok;
    else if (witness.empty()) witness = "; singular at " + values_string(v);
  }
  const auto& f = get_family(id);
  return {rec("cubics/" + f.key + "/smooth", ok == n, label(f) + " monodromy space smoothness",
              std::to_string(ok) + "/" + std::to_string(n) + " samples smooth" + witness)};
}

Records cubic_discriminant(FamilyId id, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed * 7919 + static_cast<std::uint64_t>(id));
  int agree = 0, singular = 0;
  std::string witness;
  for (int k = 0; k < o.smooth_samples; ++k) {
    const ParamValues v = discriminant_biased(id, rng, k);
    const bool smooth = smoothness_probe(id, v).smooth;
    const bool disc = discriminant_vanishes(id, v);
    if (!smooth) ++singular;
    if (smooth != disc) ++agree;
    else if (witness.empty()) witness = "; disagreement at " + values_string(v);
  }
  const auto& f = get_family(id);
  return {rec("cubics/" + f.key + "/discriminant", agree == o.smooth_samples,
              label(f) + " singular-fibre discriminant",
              std::to_string(agree) + "/" + std::to_string(o.smooth_samples) + " samples agree, " +
                  std::to_string(singular) + " singular" + witness)};
}

Records suite_cubics(const SuiteOptions& o) {
  std::vector<std::function<Records()>> jobs;
  for (auto id : {FamilyId::pv, FamilyId::pv_deg, FamilyId::piii_d6, FamilyId::piv, FamilyId::pii_fn, FamilyId::pii})
    jobs.push_back([id, &o] { return cubic_tables(id, o); });
  for (auto id : {FamilyId::piii_d7, FamilyId::piii_d8, FamilyId::pi})
    jobs.push_back([id, &o] { return cubic_smooth(id, o); });
  for (auto id : {FamilyId::piii_d6, FamilyId::piv}) jobs.push_back([id, &o] { return cubic_discriminant(id, o); });
  jobs.push_back([] {
    const bool id_ok = pv_singular_locus_identity(false);
    const bool control = !pv_singular_locus_identity(true);
    return Records{rec("cubics/pv/singular-locus", id_ok, "PV singular locus parametrization",
                       id_ok ? "F and grad F vanish identically" : "identity fails"),
                   rec("cubics/pv/singular-locus-control", control, "PV singular locus parametrization",
                       control ? "perturbed map rejected" : "perturbed map accepted")};
  });
  return fan_out<std::function<Records()>>(jobs, o.parallel, [](const std::function<Records()>& j) { return j(); });
}

// ---- cyclic ----------------------------------------------------------------

Records suite_cyclic(const SuiteOptions& o) {
  std::vector<std::size_t> idx(kLaxFamilies.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return fan_out<std::size_t>(idx, o.parallel, [&o](const std::size_t& i) {
    const auto& f = get_family(kLaxFamilies[i]);
    const int want = expected_cyclic_counts()[i];
    int match = 0;
    std::string witness;
    for (int k = 0; k < o.cyclic_samples; ++k) {
      const std::uint64_t seed = o.seed * 1000003ULL + i * 1009ULL + static_cast<std::uint64_t>(k);
      try {
        const auto c = good_cyclic_count(f, seed);
        if (c.good == want) ++match;
        else if (witness.empty()) witness = "; got " + std::to_string(c.good) + " at " + c.sample.to_string();
      } catch (const Error& e) {
        if (witness.empty()) witness = std::string("; ") + e.what();
      }
    }
    return Records{rec("cyclic/" + f.key, match == o.cyclic_samples, label(f) + " good cyclic vectors",
                       std::to_string(match) + "/" + std::to_string(o.cyclic_samples) + " samples give " +
                           std::to_string(want) + witness)};
  });
}

// ---- enumerate --------------------------------------------------------------

Records suite_enumerate(const SuiteOptions&) {
  Records out;
  const auto found = enumerate_families(Rational(3), 4);
  out.push_back(rec("enumerate/count", found.size() == kAllFamilies.size(), "family table",
                    std::to_string(found.size()) + " signatures with fibre dimension 1"));
  for (auto id : kAllFamilies) {
    const auto& f = get_family(id);
    const auto it = std::find(found.begin(), found.end(), f.katz);
    const bool present = it != found.end();
    const int dim = present ? parameter_dimension(*it) : -1;
    out.push_back(rec("enumerate/" + f.key, present && dim == f.dim_p, "family table row " + f.painleve,
                      f.katz.to_string() + (present ? " found" : " missing") + ", dim P " + std::to_string(dim) +
                          " (table " + std::to_string(f.dim_p) + ")"));
  }
  return out;
}

// ---- numerics ---------------------------------------------------------------

Records numeric_family(const Benchmark& b, const SuiteOptions& o) {
  Records out;
  const auto& f = get_family(b.id);
  const std::string p = "numeric/" + f.key + "/";
  const auto traj = integrate_flow(f, b.theta, {b.t0, b.t1}, b.q0, b.p0, o.tol);
  if (traj.status == OdeStatus::completed) {
    const double drift = hamiltonian_drift(f, traj);
    out.push_back(rec(p + "drift", drift <= 1e3 * o.tol, label(f) + " Hamiltonian flow",
                      fmt(drift) + " over " + std::to_string(traj.samples.size()) + " samples", drift));
  } else {
    out.push_back({p + "drift", CheckStatus::skip, label(f) + " Hamiltonian flow", "trajectory did not complete", std::nullopt});
  }
  for (const auto& c : f.finite_singular_points) {
    const std::string at = "z" + c.get_str();
    InvarianceOptions io;
    io.tol = o.tol;
    const auto run = isomonodromy_invariance(f, b.theta, b.t0, b.t1, b.q0, b.p0, cplx(c.get_d(), 0.0), io);
    const bool done = run.status == OdeStatus::completed;
    out.push_back(rec(p + "invariance-" + at, done && run.residual <= kInvarianceBudget,
                      label(f) + " isomonodromy", "residual " + fmt(run.residual), run.residual));
    out.push_back(rec(p + "unimodular-" + at, done && run.max_det_gap <= 100 * o.tol, label(f) + " trace-free connection",
                      "max |det M - 1| " + fmt(run.max_det_gap), run.max_det_gap));
    io.co_evolve_frame = false;
    const auto neg = isomonodromy_invariance(f, b.theta, b.t0, b.t1, b.q0, b.p0, cplx(c.get_d(), 0.0), io);
    out.push_back(rec(p + "negative-control-" + at, neg.residual >= kNegativeControlFloor,
                      label(f) + " isomonodromy", "frame frozen: residual " + fmt(neg.residual), neg.residual));
  }
  return out;
}

Records piv_traces(const SuiteOptions& o) {
  Records out;
  const auto& f = get_family(FamilyId::piv);
  const std::pair<const char*, double> cases[] = {{"1/3", 1.0 / 3}, {"1/5", 1.0 / 5}};
  for (const auto& [name, th0] : cases) {
    const CMat2 m = loop_monodromy(f, {th0, 0.0, 0.2}, {0.7, {0.3, 0.2}, {0.1, 0.4}},
                                   polygon_loop(0.0, default_clearance(f)), cmat_identity(), o.tol * 1e-2);
    const double gap = std::abs(cmat_trace(m) - 2 * std::cos(M_PI * th0));
    out.push_back(rec(std::string("numeric/piv/trace-theta0-") + name, gap <= kTraceTol, "PIV local exponents at 0",
                      "|tr M - 2cos(pi theta0)| = " + fmt(gap), gap));
  }
  return out;
}

Records suite_numeric(const SuiteOptions& o) {
  std::vector<std::function<Records()>> jobs;
  for (const auto& b : flow_benchmarks()) jobs.push_back([&b, &o] { return numeric_family(b, o); });
  jobs.push_back([&o] { return piv_traces(o); });
  return fan_out<std::function<Records()>>(jobs, o.parallel, [](const std::function<Records()>& j) { return j(); });
}

using SuiteFn = Records (*)(const SuiteOptions&);
const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t = {
      {"enumerate", suite_enumerate}, {"lax", suite_lax},       {"hamiltonian", suite_hamiltonian},
      {"second-order", suite_second_order}, {"cubics", suite_cubics}, {"cyclic", suite_cyclic},
      {"numeric-isomonodromy", suite_numeric},
  };
  return t;
}

}  // namespace

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

int VerificationReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "isomono-report/1";
  j["suite"] = suite;
  j["seed"] = seed;
  j["tol"] = tol;
  j["summary"] = {{"pass", count(CheckStatus::pass)}, {"fail", count(CheckStatus::fail)},
                  {"skip", count(CheckStatus::skip)}};
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json x{{"id", r.id}, {"status", status_name(r.status)}, {"anchor", r.anchor}, {"detail", r.detail}};
    if (r.residual) x["residual"] = *r.residual;
    j["records"].push_back(std::move(x));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) os << status_name(r.status) << "  " << r.id << "  [" << r.anchor << "]  " << r.detail << "\n";
  os << suite << ": " << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail) << " fail, "
     << count(CheckStatus::skip) << " skip\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, fn] : suite_table()) n.push_back(k);
    n.push_back("all");
    return n;
  }();
  return names;
}

const std::vector<int>& expected_cyclic_counts() {
  static const std::vector<int> counts = {6, 5, 4, 3, 2, 4, 3, 2, 1};
  return counts;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = std::string(name);
  rep.seed = opts.seed;
  rep.tol = opts.tol;
  bool found = false;
  for (const auto& [k, fn] : suite_table())
    if (name == "all" || name == k) {
      found = true;
      auto r = fn(opts);
      rep.records.insert(rep.records.end(), r.begin(), r.end());
    }
  if (!found) throw Error(ErrorKind::UsageError, "unknown suite '" + std::string(name) + "'");
  return rep;
}

}  // namespace isomono
