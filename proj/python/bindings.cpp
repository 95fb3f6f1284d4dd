#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isomono/cubics.hpp"
#include "isomono/isomonodromy.hpp"
#include "isomono/numerics.hpp"
#include "isomono/report.hpp"
#include "isomono/scalarform.hpp"
#include "isomono/serialize.hpp"

namespace py = pybind11;
using namespace isomono;

namespace {

const FamilySpec& fam(const std::string& key) { return get_family(parse_family_id(key)); }

Theta theta_of(const std::tuple<cplx, cplx, cplx>& th) {
  return {std::get<0>(th), std::get<1>(th), std::get<2>(th)};
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) {
    out.emplace_back(x);
    out.back().canonicalize();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_isomono, m) {
  m.doc() = "Isomonodromic families: exact verification and numerics";

  static py::exception<Error> error(m, "IsomonoError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("family_keys", [] {
    std::vector<std::string> keys;
    for (auto id : kAllFamilies) keys.emplace_back(family_key(id));
    return keys;
  });
  m.def("family_json", [](const std::string& key) { return to_json(fam(key)).dump(); });
  m.def("enumerate_families", [] {
    std::vector<std::string> out;
    for (const auto& k : enumerate_families(Rational(3), 4)) out.push_back(k.to_string());
    return out;
  });

  m.def("zero_curvature_holds", [](const std::string& key) { return is_zero_matrix(verify_zero_curvature(fam(key))); });
  m.def("hamiltonian_holds", [](const std::string& key) { return verify_hamiltonian(fam(key)).holds(); });
  m.def("second_order_holds", [](const std::string& key) { return verify_second_order(fam(key)).holds(); });
  m.def("derived_flow", [](const std::string& key) {
    const auto d = derive_deformation(fam(key));
    return std::make_pair(d.qprime.to_string(), d.pprime.to_string());
  });

  m.def("good_cyclic_count", [](const std::string& key, std::uint64_t seed) {
    return good_cyclic_count(fam(key), seed).good;
  }, py::arg("key"), py::arg("seed") = 1);

  m.def("cubic_eval", [](const std::string& key, const std::vector<std::string>& params,
                         const std::vector<std::string>& point) {
    const auto x = rationals(point);
    if (x.size() != 3) throw Error(ErrorKind::UsageError, "point needs three coordinates");
    const auto ev = eval_and_gradient(surface(parse_family_id(key)), rationals(params), {x[0], x[1], x[2]});
    py::dict d;
    d["value"] = ev.value.get_str();
    d["gradient"] = std::vector<std::string>{ev.gradient[0].get_str(), ev.gradient[1].get_str(),
                                             ev.gradient[2].get_str()};
    d["singular"] = ev.singular();
    if (ev.singular())
      d["type"] = ade_label(classify_singularity(fibre_equation(surface(parse_family_id(key)), rationals(params)),
                                                 {x[0], x[1], x[2]}));
    return d;
  }, py::arg("key"), py::arg("params"), py::arg("point"));
  m.def("smooth_fibre", [](const std::string& key, const std::vector<std::string>& params) {
    return smoothness_probe(parse_family_id(key), rationals(params)).smooth;
  });

  m.def("integrate_flow", [](const std::string& key, std::tuple<cplx, cplx, cplx> theta, cplx t0, cplx t1, cplx q0,
                             cplx p0, double tol) {
    const auto tr = integrate_flow(fam(key), theta_of(theta), {t0, t1}, q0, p0, tol);
    std::vector<std::tuple<cplx, cplx, cplx, cplx>> rows;
    for (const auto& s : tr.samples) rows.emplace_back(s.t, s.q, s.p, s.H);
    return std::make_pair(std::string(ode_status_name(tr.status)), rows);
  }, py::arg("key"), py::arg("theta"), py::arg("t0"), py::arg("t1"), py::arg("q0"), py::arg("p0"),
     py::arg("tol") = 1e-10);

  m.def("isomonodromy_residual", [](const std::string& key, std::tuple<cplx, cplx, cplx> theta, cplx t0, cplx t1,
                                    cplx q0, cplx p0, cplx center, bool co_evolve, double tol) {
    InvarianceOptions o;
    o.tol = tol;
    o.co_evolve_frame = co_evolve;
    return isomonodromy_invariance(fam(key), theta_of(theta), t0, t1, q0, p0, center, o).residual;
  }, py::arg("key"), py::arg("theta"), py::arg("t0"), py::arg("t1"), py::arg("q0"), py::arg("p0"),
     py::arg("center") = cplx(0.0), py::arg("co_evolve") = true, py::arg("tol") = 1e-10);

  m.def("run_suite", [](const std::string& name, std::uint64_t seed, double tol) {
    SuiteOptions o;
    o.seed = seed;
    o.tol = tol;
    return run_suite(name, o).to_json();
  }, py::arg("name"), py::arg("seed") = 1, py::arg("tol") = 1e-10);
}
