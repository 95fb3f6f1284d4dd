// Command-line front end: verification suites, derivations, cubic-surface
// checks and numerical flows. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "isomono/cubics.hpp"
#include "isomono/isomonodromy.hpp"
#include "isomono/numerics.hpp"
#include "isomono/report.hpp"
#include "isomono/scalarform.hpp"
#include "isomono/serialize.hpp"

using namespace isomono;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(ErrorKind::UsageError, "cannot write " + g.out);
  f << text;
}

int report_exit(const Globals& g, VerificationReport rep) {
  emit(g, g.format == "json" ? rep.to_json() : rep.to_text());
  return rep.exit_code();
}

// Renders records for a verify subcommand restricted to the chosen families.
int verify(const Globals& g, const std::string& suite, const std::string& family) {
  SuiteOptions o;
  o.seed = g.seed;
  o.tol = g.tol;
  VerificationReport full = run_suite(suite, o);
  if (family == "all") return report_exit(g, full);
  const std::string key(family_key(parse_family_id(family)));
  VerificationReport rep = full;
  rep.records.clear();
  for (const auto& r : full.records)
    if (r.id.find("/" + key + "/") != std::string::npos || r.id == suite + "/" + key) rep.records.push_back(r);
  return report_exit(g, rep);
}

ParamValues parse_values(const std::string& s) {
  ParamValues v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      v.emplace_back(item);
      v.back().canonicalize();
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "not a rational: " + item);
    }
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomonodromic families: exact verification and numerics"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("ISOMONO_FORMAT");
  app.add_option("--seed", g.seed, "Random seed")->envname("ISOMONO_SEED");
  app.add_option("--tol", g.tol, "Integration tolerance")->envname("ISOMONO_TOL");
  app.add_option("--out", g.out, "Write output to this file");
  auto global = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  // suite
  std::string suite_name;
  auto* suite = global(app.add_subcommand("suite", "Run a verification suite"));
  suite->add_option("name", suite_name, "lax, hamiltonian, second-order, cubics, cyclic, enumerate, "
                                        "numeric-isomonodromy or all")
      ->required();

  // enumerate
  auto* enumerate = global(app.add_subcommand("enumerate", "Families with one-dimensional fibres"));

  // families dump
  std::string dump_id;
  auto* families = global(app.add_subcommand("families", "Family registry"));
  families->require_subcommand(1);
  auto* dump = global(families->add_subcommand("dump", "Serialize a family"));
  dump->add_option("--id", dump_id)->required();

  // verify
  std::string verify_family = "all";
  auto* verify_cmd = global(app.add_subcommand("verify", "Exact identity checks"));
  verify_cmd->require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::string>> verify_subs;
  for (const char* s : {"lax", "hamiltonian", "second-order"}) {
    auto* sub = global(verify_cmd->add_subcommand(s, std::string("Verify ") + s + " identities"));
    sub->add_option("--family", verify_family);
    verify_subs.emplace_back(sub, s);
  }

  // derive
  std::string derive_family;
  auto* derive = global(app.add_subcommand("derive", "Solve zero curvature for B and the flow"));
  derive->add_option("--family", derive_family)->required();

  // cyclic
  std::string cyclic_family;
  auto* cyclic = global(app.add_subcommand("cyclic", "Cyclic vectors and scalar form"));
  cyclic->require_subcommand(1);
  auto* cyc_count = global(cyclic->add_subcommand("count", "Count good cyclic vectors"));
  cyc_count->add_option("--family", cyclic_family)->required();
  auto* cyc_op = global(cyclic->add_subcommand("scalar-op", "Scalar operator of the first basis vector"));
  cyc_op->add_option("--family", cyclic_family)->required();

  // cubic
  std::string cubic_family = "all", cubic_params, cubic_point;
  int cubic_samples = 10;
  auto* cubic = global(app.add_subcommand("cubic", "Monodromy cubic surfaces"));
  cubic->require_subcommand(1);
  auto* cubic_verify = global(cubic->add_subcommand("verify", "Check singular-fibre tables"));
  cubic_verify->add_option("--family", cubic_family);
  cubic_verify->add_option("--samples", cubic_samples)->check(CLI::PositiveNumber);
  auto* cubic_eval = global(cubic->add_subcommand("eval", "Evaluate F and its gradient at a point"));
  cubic_eval->add_option("--family", cubic_family)->required();
  cubic_eval->add_option("--params", cubic_params, "Comma-separated rationals");
  cubic_eval->add_option("--point", cubic_point, "x1,x2,x3 as rationals")->required();

  // flow integrate
  std::string flow_family;
  double th0 = 0, th1 = 0, thinf = 0, t0 = 1, t1 = 2, q0re = 0.5, q0im = 0, p0re = 0, p0im = 0;
  auto* flow = global(app.add_subcommand("flow", "Painleve flows"));
  flow->require_subcommand(1);
  auto* integrate = global(flow->add_subcommand("integrate", "Integrate (q, p) along a real t-segment"));
  auto add_flow_opts = [&](CLI::App* sub) {
    sub->add_option("--family", flow_family)->required();
    sub->add_option("--theta0", th0);
    sub->add_option("--theta1", th1);
    sub->add_option("--thetainf", thinf);
    sub->add_option("--t0", t0);
    sub->add_option("--t1", t1);
    sub->add_option("--q0-re", q0re);
    sub->add_option("--q0-im", q0im);
    sub->add_option("--p0-re", p0re);
    sub->add_option("--p0-im", p0im);
  };
  add_flow_opts(integrate);

  // mono check
  int loop_point = 0;
  double budget = 1e-6;
  auto* mono = global(app.add_subcommand("mono", "Monodromy along Painleve trajectories"));
  mono->require_subcommand(1);
  auto* mono_check = global(mono->add_subcommand("check", "Isomonodromy invariance run"));
  add_flow_opts(mono_check);
  mono_check->add_option("--loops", loop_point, "Index of the finite singular point to loop around");
  mono_check->add_option("--budget", budget, "Residual budget for exit code 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*suite) {
      SuiteOptions o;
      o.seed = g.seed;
      o.tol = g.tol;
      return report_exit(g, run_suite(suite_name, o));
    }
    if (*enumerate) return verify(g, "enumerate", "all");
    if (*dump) {
      emit(g, to_json(get_family(parse_family_id(dump_id))).dump(2) + "\n");
      return 0;
    }
    for (const auto& [sub, name] : verify_subs)
      if (*sub) return verify(g, name, verify_family);
    if (*derive) {
      const auto& f = get_family(parse_family_id(derive_family));
      if (!f.has_lax) throw Error(ErrorKind::UsageError, f.key + " carries no Lax data");
      const auto d = derive_deformation(f);
      ordered_json j;
      j["family"] = f.key;
      j["b_terms"] = ordered_json::array();
      for (const auto& [k, m] : d.b_terms) {
        ordered_json entries = ordered_json::array();
        for (const auto& e : m.e) entries.push_back(to_json(e));
        j["b_terms"].push_back({{"power", k}, {"matrix", entries}});
      }
      j["qprime"] = to_json(d.qprime);
      j["pprime"] = to_json(d.pprime);
      j["residual_zero"] = is_zero_matrix(d.residual);
      if (g.format == "json") {
        emit(g, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        for (const auto& [k, m] : d.b_terms)
          for (int e = 0; e < 4; ++e) os << "B[z^" << k << "][" << e / 2 << "," << e % 2 << "] = " << m.e[e].to_string() << "\n";
        os << "q' = " << d.qprime.to_string() << "\np' = " << d.pprime.to_string() << "\n";
        emit(g, os.str());
      }
      return is_zero_matrix(d.residual) ? 0 : 1;
    }
    if (*cyc_count) {
      const auto& f = get_family(parse_family_id(cyclic_family));
      const auto c = good_cyclic_count(f, g.seed);
      emit(g, g.format == "json" ? to_json(c).dump(2) + "\n" : std::to_string(c.good) + "\n");
      return 0;
    }
    if (*cyc_op) {
      const auto& f = get_family(parse_family_id(cyclic_family));
      const auto op = scalar_operator(f.a_full());
      if (g.format == "json") {
        emit(g, ordered_json{{"family", f.key}, {"a1", to_json(op.a1)}, {"a0", to_json(op.a0)}}.dump(2) + "\n");
      } else {
        emit(g, "a1 = " + op.a1.to_string() + "\na0 = " + op.a0.to_string() + "\n");
      }
      return 0;
    }
    if (*cubic_verify) {
      VerificationReport rep;
      rep.suite = "cubic-verify";
      rep.seed = g.seed;
      std::vector<FamilyId> ids;
      if (cubic_family == "all") ids = {FamilyId::pv, FamilyId::pv_deg, FamilyId::piii_d6, FamilyId::piv,
                                        FamilyId::pii_fn, FamilyId::pii};
      else ids = {parse_family_id(cubic_family)};
      for (auto id : ids) {
        const auto t = verify_singularity_table(id, cubic_samples, g.seed);
        int i = 0;
        for (const auto& r : t.rows) {
          std::string detail = std::to_string(r.passed) + "/" + std::to_string(r.samples);
          if (!r.failures.empty()) detail += "; " + r.failures.front();
          if (!r.correction.empty()) detail += "; corrected: " + r.correction;
          rep.records.push_back({"cubic/" + std::string(family_key(id)) + "/row-" + std::to_string(++i),
                                 r.ok() ? CheckStatus::pass : CheckStatus::fail, r.anchor, detail, std::nullopt});
        }
      }
      return report_exit(g, rep);
    }
    if (*cubic_eval) {
      const FamilyId id = parse_family_id(cubic_family);
      const ParamValues v = parse_values(cubic_params);
      const ParamValues x = parse_values(cubic_point);
      if (x.size() != 3) throw Error(ErrorKind::UsageError, "--point needs three coordinates");
      const Point3 pt{x[0], x[1], x[2]};
      const auto ev = eval_and_gradient(surface(id), v, pt);
      ordered_json j{{"family", family_key(id)},
                     {"value", ev.value.get_str()},
                     {"gradient", {ev.gradient[0].get_str(), ev.gradient[1].get_str(), ev.gradient[2].get_str()}},
                     {"singular", ev.singular()}};
      if (ev.singular()) {
        try {
          j["type"] = ade_label(classify_singularity(fibre_equation(surface(id), v), pt));
        } catch (const Error& e) {
          j["type"] = e.what();
        }
      }
      if (g.format == "json") {
        emit(g, j.dump(2) + "\n");
      } else {
        std::string t = "F = " + ev.value.get_str() + ", grad F = (" + ev.gradient[0].get_str() + ", " +
                        ev.gradient[1].get_str() + ", " + ev.gradient[2].get_str() + ")";
        if (ev.singular()) t += ", singular: " + j["type"].get<std::string>();
        emit(g, t + "\n");
      }
      return 0;
    }
    if (*integrate) {
      const auto& f = get_family(parse_family_id(flow_family));
      const auto tr = integrate_flow(f, {th0, th1, thinf}, {t0, t1}, {q0re, q0im}, {p0re, p0im}, g.tol);
      std::ostringstream os;
      write_trajectory_csv(os, tr);
      emit(g, os.str());
      std::cerr << "status " << ode_status_name(tr.status) << ", " << tr.samples.size() << " samples\n";
      return tr.status == OdeStatus::completed ? 0 : 1;
    }
    if (*mono_check) {
      const auto& f = get_family(parse_family_id(flow_family));
      if (loop_point < 0 || loop_point >= static_cast<int>(f.finite_singular_points.size()))
        throw Error(ErrorKind::UsageError, "--loops out of range for " + f.key);
      InvarianceOptions io;
      io.tol = g.tol;
      const auto run = isomonodromy_invariance(f, {th0, th1, thinf}, t0, t1, {q0re, q0im}, {p0re, p0im},
                                               f.finite_singular_points[loop_point].get_d(), io);
      ordered_json j = to_json(run);
      j["family"] = f.key;
      j["budget"] = budget;
      if (g.format == "json") {
        emit(g, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << f.key << " loop around z = " << f.finite_singular_points[loop_point].get_str() << ": "
           << ode_status_name(run.status) << ", residual " << run.residual << ", max |det M - 1| "
           << run.max_det_gap << " (budget " << budget << ")\n";
        emit(g, os.str());
      }
      return run.status == OdeStatus::completed && run.residual <= budget ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::UsageError || e.kind() == ErrorKind::UnknownFamily ||
                   e.kind() == ErrorKind::ParseError
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
