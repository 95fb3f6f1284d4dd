#include "isomono/serialize.hpp"

#include <iomanip>

namespace isomono {

using nlohmann::ordered_json;

namespace {

ordered_json matrix_json(const Mat2S& m) {
  ordered_json out = ordered_json::array();
  for (const auto& e : m.e) out.push_back(to_json(e));
  return out;
}

}  // namespace

std::string_view ode_status_name(OdeStatus s) {
  switch (s) {
    case OdeStatus::completed: return "completed";
    case OdeStatus::blowup_detected: return "blowup_detected";
    case OdeStatus::step_underflow: return "step_underflow";
  }
  return "unknown";
}

ordered_json to_json(const RP& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json exps = ordered_json::object();
    for (std::size_t i = 0; i < LaxVars::count; ++i)
      if (const unsigned e = exact::exponent(m, i)) exps[std::string(LaxVars::names[i])] = e;
    terms.push_back({{"coeff", {c.get_num().get_str(), c.get_den().get_str()}}, {"exps", exps}});
  }
  return terms;
}

ordered_json to_json(const RF& f) {
  ordered_json den = ordered_json::array();
  for (const auto& [fac, k] : f.den_factors()) den.push_back({{"factor", to_json(fac)}, {"mult", k}});
  return {{"num", to_json(f.num())}, {"den", den}, {"display", f.to_string()}};
}

ordered_json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ordered_json to_json(const CMat2& m) {
  ordered_json out = ordered_json::array();
  for (const auto& e : m) out.push_back(to_json(e));
  return out;
}

ordered_json to_json(const MonodromyRun& run) {
  ordered_json j;
  j["base_point"] = to_json(run.base_point);
  j["loop"] = ordered_json::array();
  for (const auto& z : run.loop) j["loop"].push_back(to_json(z));
  j["samples"] = ordered_json::array();
  for (std::size_t i = 0; i < run.t_samples.size(); ++i)
    j["samples"].push_back({{"t", to_json(run.t_samples[i])}, {"monodromy", to_json(run.monodromy[i])}});
  j["residual"] = run.residual;
  j["max_det_gap"] = run.max_det_gap;
  j["status"] = ode_status_name(run.status);
  return j;
}

ordered_json to_json(const Trajectory& traj) {
  ordered_json j;
  j["family"] = family_key(traj.id);
  j["theta"] = {to_json(traj.theta.th0), to_json(traj.theta.th1), to_json(traj.theta.thinf)};
  j["status"] = ode_status_name(traj.status);
  j["steps"] = traj.steps;
  j["samples"] = ordered_json::array();
  for (const auto& s : traj.samples)
    j["samples"].push_back({{"t", to_json(s.t)}, {"q", to_json(s.q)}, {"p", to_json(s.p)}, {"H", to_json(s.H)}});
  return j;
}

ordered_json to_json(const TableReport& rep) {
  ordered_json j;
  j["family"] = family_key(rep.id);
  j["ok"] = rep.ok();
  j["rows"] = ordered_json::array();
  for (const auto& r : rep.rows) {
    ordered_json row{{"anchor", r.anchor}, {"samples", r.samples}, {"passed", r.passed}, {"failures", r.failures}};
    if (!r.correction.empty()) {
      row["correction"] = r.correction;
      row["printed_singular"] = r.printed_singular;
    }
    j["rows"].push_back(row);
  }
  return j;
}

ordered_json to_json(const CyclicCount& c) {
  ordered_json j;
  j["good"] = c.good;
  j["attempts"] = c.attempts;
  j["sample"] = c.sample.to_string();
  j["candidates"] = ordered_json::array();
  for (const auto& cand : c.candidates)
    j["candidates"].push_back({{"point", point_name(cand.point)},
                               {"v", {cand.v[0].get_str(), cand.v[1].get_str()}},
                               {"apparent_points", cand.apparent_points}});
  return j;
}

ordered_json to_json(const FamilySpec& fam) {
  ordered_json j;
  j["schema"] = "isomono-family/1";
  j["key"] = fam.key;
  j["painleve"] = fam.painleve;
  j["dynkin"] = fam.dynkin;
  j["katz"] = fam.katz.to_string();
  j["dim_p"] = fam.dim_p;
  j["has_lax"] = fam.has_lax;
  if (!fam.has_lax) return j;
  j["a"] = matrix_json(fam.a_full());
  j["b"] = matrix_json(fam.b_full());
  j["qprime"] = to_json(fam.qprime);
  j["pprime"] = to_json(fam.pprime);
  j["hamiltonian"] = to_json(fam.hamiltonian);
  j["f_factor"] = to_json(fam.f_factor);
  j["second_order"] = to_json(fam.second_order);
  return j;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  const auto old = os.precision(17);
  os << "t_re,t_im,q_re,q_im,p_re,p_im,H_re,H_im\n";
  for (const auto& s : traj.samples)
    os << s.t.real() << ',' << s.t.imag() << ',' << s.q.real() << ',' << s.q.imag() << ',' << s.p.real() << ','
       << s.p.imag() << ',' << s.H.real() << ',' << s.H.imag() << '\n';
  os.precision(old);
}

}  // namespace isomono
