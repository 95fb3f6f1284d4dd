// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "isomono/cubics.hpp"
#include "isomono/exact/parse.hpp"
#include "isomono/isomonodromy.hpp"
#include "isomono/numerics.hpp"
#include "isomono/report.hpp"
#include "isomono/scalarform.hpp"

using namespace isomono;

namespace {

// Pinned tolerances and budgets.
constexpr double kEnumerateSeconds = 1.0;
constexpr double kDeriveSeconds = 30.0;
constexpr double kTablesSeconds = 60.0;
constexpr int kTableSamples = 10;
constexpr int kSmoothSamples = 50;
constexpr int kCyclicSamples = 20;
constexpr double kFlowTol = 1e-10;
constexpr double kInvarianceBudget = 1e-6;
constexpr double kNegativeControlFloor = 1e-2;
constexpr double kRunSeconds = 60.0;
constexpr double kTraceTol = 1e-8;
constexpr double kDriftFactor = 1e3;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

RF frac(const char* s) { return exact::parse_frac<LaxVars>(s); }

// ---- 1 --------------------------------------------------------------------
Outcome enumerator() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto found = enumerate_families(Rational(3), 4);
  const double dt = seconds_since(t0);
  // Expected rows: signature and parameter dimension.
  const std::vector<std::pair<std::string, int>> table = {
      {"(0,0,0,0)", 4}, {"(0,0,1)", 3}, {"(0,0,1/2)", 2}, {"(1,-,1)", 2},    {"(1/2,-,1)", 1},
      {"(1/2,-,1/2)", 0}, {"(0,-,2)", 2}, {"(0,-,3/2)", 1}, {"(-,-,3)", 1}, {"(-,-,5/2)", 0}};
  bool ok = found.size() == table.size() && dt < kEnumerateSeconds;
  for (const auto& [sig, dim] : table) {
    bool hit = false;
    for (const auto& k : found) hit = hit || (k.to_string() == sig && parameter_dimension(k) == dim);
    ok = ok && hit;
  }
  return {ok, std::to_string(found.size()) + " signatures in " + fmt(dt) + " s"};
}

// ---- 2 --------------------------------------------------------------------
Outcome lax_derivation() {
  const auto t0 = std::chrono::steady_clock::now();
  // Flows as printed, written out independently of the registry.
  const std::vector<std::tuple<FamilyId, const char*, const char*>> spot = {
      {FamilyId::pv, "2*p/t", nullptr},
      {FamilyId::piii_d6, "(4*p + q)/t", nullptr},
      {FamilyId::pi, "2*p", "3*q^2 + t"},
      {FamilyId::pii, "p", "2*q^3 + q*t + (thinf + 1)/2"},
  };
  int matched = 0;
  bool ok = true;
  for (auto id : kLaxFamilies) {
    const auto& fam = get_family(id);
    const auto d = derive_deformation(fam);
    bool same = equal(d.qprime, fam.qprime) && equal(d.pprime, fam.pprime);
    for (const auto& [k, m] : fam.b_terms) {
      const auto it = d.b_terms.find(k);
      for (int e = 0; e < 4; ++e) same = same && it != d.b_terms.end() && equal(it->second.e[e], m.e[e]);
    }
    for (const auto& [sid, qp, pp] : spot)
      if (sid == id) {
        same = same && equal(d.qprime, frac(qp));
        if (pp) same = same && equal(d.pprime, frac(pp));
      }
    matched += same;
    ok = ok && same;
  }
  const double dt = seconds_since(t0);
  return {ok && dt < kDeriveSeconds, std::to_string(matched) + "/9 families in " + fmt(dt) + " s"};
}

// ---- 3 --------------------------------------------------------------------
Outcome zero_curvature() {
  int zero = 0;
  for (auto id : kLaxFamilies) zero += is_zero_matrix(verify_zero_curvature(get_family(id)));
  return {zero == 9, std::to_string(zero) + "/9 residuals identically zero"};
}

// ---- 4 --------------------------------------------------------------------
Outcome hamiltonian_form() {
  // F per family: q(q-1) for PV and PVdeg, q^2 for the three PIII types, q for PIV and PIIFN, 1 for PII and PI.
  const std::vector<std::pair<FamilyId, const char*>> factors = {
      {FamilyId::pv, "q^2 - q"}, {FamilyId::pv_deg, "q^2 - q"}, {FamilyId::piii_d6, "q^2"},
      {FamilyId::piii_d7, "q^2"}, {FamilyId::piii_d8, "q^2"},   {FamilyId::piv, "q"},
      {FamilyId::pii_fn, "q"},   {FamilyId::pii, "1"},          {FamilyId::pi, "1"}};
  int ok = 0;
  for (const auto& [id, fstr] : factors) {
    const auto& fam = get_family(id);
    const RF F = frac(fstr);
    const RF& H = fam.hamiltonian;
    const bool p_ok = (fam.pprime - F * H.diff(VarId::q)).is_zero();
    const bool q_ok = (fam.qprime + F * H.diff(VarId::p)).is_zero();
    ok += p_ok && q_ok && verify_hamiltonian(fam).holds();
  }
  return {ok == 9, std::to_string(ok) + "/9 families"};
}

// ---- 5 --------------------------------------------------------------------
Outcome second_order() {
  int ok = 0;
  std::string failed;
  for (auto id : kLaxFamilies) {
    const auto& fam = get_family(id);
    if (verify_second_order(fam).holds()) ++ok;
    else failed += (failed.empty() ? "" : ",") + fam.key;
  }
  // The PI display, independently of the registry.
  const bool pi_ok = equal(verify_second_order(get_family(FamilyId::pi)).derived, frac("6*q^2 + 2*t"));
  return {ok == 9 && pi_ok, std::to_string(ok) + "/9 displays match" + (failed.empty() ? "" : "; mismatch: " + failed)};
}

// ---- 6 --------------------------------------------------------------------
Outcome cubic_tables() {
  const auto t0 = std::chrono::steady_clock::now();
  int rows = 0, good = 0, corrected = 0;
  for (auto id : {FamilyId::pv, FamilyId::piv, FamilyId::piii_d6, FamilyId::pv_deg, FamilyId::pii_fn, FamilyId::pii}) {
    const auto rep = verify_singularity_table(id, kTableSamples, kSeed);
    for (const auto& r : rep.rows) {
      ++rows;
      good += r.ok() && r.samples >= kTableSamples;
      corrected += !r.correction.empty();
    }
  }
  const double dt = seconds_since(t0);
  return {good == rows && dt < kTablesSeconds,
          std::to_string(good) + "/" + std::to_string(rows) + " rows at " + std::to_string(kTableSamples) +
              " samples (" + std::to_string(corrected) + " with corrected coordinates) in " + fmt(dt) + " s"};
}

// ---- 7 --------------------------------------------------------------------
Rational rnd(std::mt19937_64& rng, bool nonzero) {
  Rational r;
  do r = random_rational(rng, 4, 3);
  while (nonzero && sgn(r) == 0);
  return r;
}

Outcome smoothness() {
  std::mt19937_64 rng(kSeed);
  int smooth_ok = 0;
  for (int k = 0; k < kSmoothSamples; ++k) smooth_ok += smoothness_probe(FamilyId::piii_d7, {rnd(rng, true)}).smooth;
  const bool fixed = smoothness_probe(FamilyId::piii_d8, {}).smooth && smoothness_probe(FamilyId::pi, {}).smooth;

  // Displayed discriminants, evaluated directly.
  auto d6 = [](const ParamValues& v) {
    const Rational a = v[0], b = v[1];
    return sgn((a - b) * (a - b) * (a * b - 1) * (a * b - 1)) == 0;
  };
  auto piv = [](const ParamValues& v) {
    const Rational s1 = v[0], s2 = v[1];
    return sgn((s1 - 2) * (s1 + 2) * (s2 * s2 - s1 * s2 + 1)) == 0;
  };
  int d6_agree = 0, piv_agree = 0, d6_sing = 0, piv_sing = 0;
  for (int k = 0; k < kSmoothSamples; ++k) {
    ParamValues v{rnd(rng, true), rnd(rng, true)};
    if (k % 4 == 1) v[1] = v[0];
    if (k % 4 == 2) v[1] = Rational(1) / v[0];
    const bool s = smoothness_probe(FamilyId::piii_d6, v).smooth;
    d6_agree += s != d6(v);
    d6_sing += !s;
  }
  for (int k = 0; k < kSmoothSamples; ++k) {
    ParamValues v{rnd(rng, false), rnd(rng, true)};
    if (k % 6 == 1) v[0] = 2;
    if (k % 6 == 2) v[0] = -2;
    if (k % 6 == 3) v[0] = v[1] + Rational(1) / v[1];
    const bool s = smoothness_probe(FamilyId::piv, v).smooth;
    piv_agree += s != piv(v);
    piv_sing += !s;
  }
  const bool ok = smooth_ok == kSmoothSamples && fixed && d6_agree == kSmoothSamples && piv_agree == kSmoothSamples;
  return {ok, "D7 " + std::to_string(smooth_ok) + "/" + std::to_string(kSmoothSamples) + " smooth, D8 and PI " +
                  (fixed ? "smooth" : "NOT smooth") + "; D6 " + std::to_string(d6_agree) + " agree (" +
                  std::to_string(d6_sing) + " singular), PIV " + std::to_string(piv_agree) + " agree (" +
                  std::to_string(piv_sing) + " singular)"};
}

// ---- 8 --------------------------------------------------------------------
Outcome pv_locus() {
  const bool id = pv_singular_locus_identity(false);
  const bool control = !pv_singular_locus_identity(true);
  return {id && control, std::string(id ? "identity holds" : "identity fails") +
                             (control ? ", perturbed map rejected" : ", perturbed map accepted")};
}

// ---- 9 --------------------------------------------------------------------
Outcome cyclic() {
  const std::vector<int> want = {6, 5, 4, 3, 2, 4, 3, 2, 1};
  std::string got;
  bool ok = true;
  for (std::size_t i = 0; i < kLaxFamilies.size(); ++i) {
    int match = 0;
    for (int k = 0; k < kCyclicSamples; ++k)
      match += good_cyclic_count(get_family(kLaxFamilies[i]), kSeed + 97 * i + k).good == want[i];
    ok = ok && match == kCyclicSamples;
    got += (i ? "," : "") + std::to_string(match);
  }
  return {ok, "samples matching per family: " + got};
}

// ---- 10 -------------------------------------------------------------------
Outcome numeric_isomonodromy() {
  std::string detail;
  bool ok = true;
  for (auto id : {FamilyId::pv, FamilyId::piii_d6}) {
    const Benchmark* b = nullptr;
    for (const auto& x : flow_benchmarks())
      if (x.id == id) b = &x;
    const auto& fam = get_family(id);
    InvarianceOptions o;
    o.tol = kFlowTol;
    const auto t0 = std::chrono::steady_clock::now();
    const auto run = isomonodromy_invariance(fam, b->theta, b->t0, b->t1, b->q0, b->p0, 0.0, o);
    const double dt = seconds_since(t0);
    o.co_evolve_frame = false;
    const auto neg = isomonodromy_invariance(fam, b->theta, b->t0, b->t1, b->q0, b->p0, 0.0, o);
    const bool this_ok = run.status == OdeStatus::completed && std::abs(b->t1 - b->t0) >= 0.5 &&
                         run.residual <= kInvarianceBudget && neg.residual >= kNegativeControlFloor &&
                         dt < kRunSeconds;
    ok = ok && this_ok;
    detail += (detail.empty() ? "" : "; ") + fam.key + " residual " + fmt(run.residual) + ", control " +
              fmt(neg.residual) + ", " + fmt(dt) + " s";
  }
  return {ok, detail};
}

// ---- 11 -------------------------------------------------------------------
Outcome traces() {
  const auto& fam = get_family(FamilyId::piv);
  std::string detail;
  bool ok = true;
  for (double th0 : {1.0 / 3, 1.0 / 5}) {
    const CMat2 m = loop_monodromy(fam, {th0, 0.0, 0.2}, {0.7, {0.3, 0.2}, {0.1, 0.4}},
                                   polygon_loop(0.0, default_clearance(fam)), cmat_identity(), 1e-12);
    const double gap = std::abs(cmat_trace(m) - 2 * std::cos(M_PI * th0));
    ok = ok && gap <= kTraceTol;
    detail += (detail.empty() ? "" : ", ") + fmt(gap);
  }
  return {ok, "trace gaps " + detail};
}

// ---- 12 -------------------------------------------------------------------
Outcome drift() {
  double worst = 0;
  int completed = 0;
  for (const auto& b : flow_benchmarks()) {
    const auto& fam = get_family(b.id);
    const auto tr = integrate_flow(fam, b.theta, {b.t0, b.t1}, b.q0, b.p0, kFlowTol);
    if (tr.status != OdeStatus::completed) continue;
    ++completed;
    worst = std::max(worst, hamiltonian_drift(fam, tr));
  }
  return {completed == 9 && worst <= kDriftFactor * kFlowTol,
          std::to_string(completed) + "/9 completed, max drift " + fmt(worst)};
}

// ---- 13 -------------------------------------------------------------------
Outcome determinism() {
  SuiteOptions o;
  o.seed = kSeed;
  const std::string a = run_suite("all", o).to_json();
  const std::string b = run_suite("all", o).to_json();
  SuiteOptions seq = o;
  seq.parallel = false;
  const std::string c = run_suite("cyclic", seq).to_json();
  const bool ok = a == b && c == run_suite("cyclic", o).to_json();
  return {ok, std::to_string(a.size()) + "-byte report " + (a == b ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"enumerator", enumerator},
      {"lax derivation", lax_derivation},
      {"zero curvature", zero_curvature},
      {"hamiltonian form", hamiltonian_form},
      {"second-order equivalence", second_order},
      {"cubic singular-fibre tables", cubic_tables},
      {"smoothness", smoothness},
      {"PV singular locus", pv_locus},
      {"good cyclic vectors", cyclic},
      {"numerical isomonodromy", numeric_isomonodromy},
      {"local exponent traces", traces},
      {"hamiltonian drift", drift},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.ok;
    std::printf("%s criterion %2zu (%s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
