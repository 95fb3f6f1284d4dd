#include "isomono/cubics.hpp"

#include <map>

#include "isomono/exact/parse.hpp"

namespace isomono {

namespace {

using V = CubicVarId;

CP cp(const char* s) { return exact::parse_poly<CubicVars>(s); }
Rational inv(const Rational& x) { return 1 / x; }

CubicSurface make_surface(FamilyId id, const char* eq, std::vector<ParamSlot> params) {
  CubicSurface s{id, cp(eq), std::move(params)};
  if (s.equation.coeff(V::x1, 1).coeff(V::x2, 1).coeff(V::x3, 1).constant_value() != 1)
    throw std::logic_error("cubic term must have coefficient 1");
  return s;
}

std::map<FamilyId, CubicSurface> build_surfaces() {
  std::map<FamilyId, CubicSurface> m;
  auto put = [&](CubicSurface s) { m.emplace(s.id, std::move(s)); };
  put(make_surface(FamilyId::pvi, "x1*x2*x3 + x1^2 + x2^2 + x3^2 - s1*x1 - s2*x2 - s3*x3 + s4",
                   {{"s1", V::s1, false}, {"s2", V::s2, false}, {"s3", V::s3, false}, {"s4", V::s4, false}}));
  put(make_surface(FamilyId::pv,
                   "x1*x2*x3 + x1^2 + x2^2 - (s1 + s2*s3)*x1 - (s2 + s1*s3)*x2 - s3*x3 + s3^2 + s1*s2*s3 + 1",
                   {{"s1", V::s1, false}, {"s2", V::s2, false}, {"s3", V::s3, true}}));
  put(make_surface(FamilyId::pv_deg, "x1*x2*x3 + x1^2 + x2^2 + s1*x1 + s2*x2 + 1",
                   {{"s0", V::s1, false}, {"s1", V::s2, false}}));
  put(make_surface(FamilyId::piii_d6, "x1*x2*x3 + x1^2 + x2^2 + (1 + s1*s2)*x1 + (s1 + s2)*x2 + s1*s2",
                   {{"alpha", V::s1, true}, {"beta", V::s2, true}}));
  put(make_surface(FamilyId::piii_d7, "x1*x2*x3 + x1^2 + x2^2 + s1*x1 + x2", {{"alpha", V::s1, true}}));
  put(make_surface(FamilyId::piii_d8, "x1*x2*x3 + x1^2 - x2^2 - 1", {}));
  put(make_surface(FamilyId::piv,
                   "x1*x2*x3 + x1^2 - (s2^2 + s1*s2)*x1 - s2^2*x2 - s2^2*x3 + s2^2 + s1*s2^3",
                   {{"s1", V::s1, false}, {"s2", V::s2, true}}));
  put(make_surface(FamilyId::pii_fn, "x1*x2*x3 + x1 - x2 + x3 + s1", {{"s", V::s1, false}}));
  put(make_surface(FamilyId::pii, "x1*x2*x3 - x1 - s1*x2 - x3 + s1 + 1", {{"alpha", V::s1, true}}));
  put(make_surface(FamilyId::pi, "x1*x2*x3 + x1 + x2 + 1", {}));
  return m;
}

constexpr V kX[3] = {V::x1, V::x2, V::x3};

// ---- sampling helpers -------------------------------------------------------

// a + 1/a for a random a, so that the two roots of y^2 - s y + 1 are rational.
struct SplitTrace {
  Rational a, s;
};
SplitTrace split_trace(std::mt19937_64& rng) {
  Rational a;
  do a = random_rational(rng, 6, 4);
  while (sgn(a) == 0 || a == 1 || a == -1);
  return {a, a + inv(a)};
}

Rational nonzero(std::mt19937_64& rng) {
  Rational r;
  do r = random_rational(rng, 6, 4);
  while (sgn(r) == 0);
  return r;
}

bool pm2(const Rational& x) { return x == 2 || x == -2; }

Rational pv_r1(const Rational& s1, const Rational& s2, const Rational& s3) {
  const Rational u = s3 + inv(s3);
  return u * u - s1 * s2 * u + s1 * s1 + s2 * s2 - 4;
}

SingularRow row(std::string anchor,
                std::function<std::optional<ParamValues>(std::mt19937_64&)> sample,
                std::function<std::vector<Point3>(const ParamValues&)> points, std::vector<int> types) {
  return SingularRow{std::move(anchor), std::move(sample), std::move(points), std::move(types), {}, {}};
}

// Table rows for PV. Parameters (s1, s2, s3).
std::vector<SingularRow> pv_rows() {
  std::vector<SingularRow> rows;
  using PV = ParamValues;
  const auto A = [](const char* cond) { return std::string("PV table: ") + cond; };
  auto s3_free = [](std::mt19937_64& g) {
    Rational s3;
    do s3 = nonzero(g);
    while (s3 == 1 || s3 == -1);
    return s3;
  };

  for (int e : {1, -1}) {
    const Rational c(2 * e);
    const std::string sc = e > 0 ? "2" : "-2";
    // s1 = c, s2 generic, R1 != 0
    rows.push_back(row(A(("s1=" + sc + ", s2!=+-2, R1!=0").c_str()), [=](std::mt19937_64& g) -> std::optional<PV> {
      Rational s2 = random_rational(g, 6, 4), s3 = nonzero(g);
      if (pm2(s2) || sgn(pv_r1(c, s2, s3)) == 0) return std::nullopt;
      return PV{c, s2, s3};
    }, [=](const PV& s) { return std::vector<Point3>{{Rational(e), e * s[2], e * s[1]}}; }, {1}));
    // s1 = c, s2 = +-2, R1 != 0 and R1 = 0
    for (int f : {1, -1}) {
      const Rational d(2 * f);
      const std::string sd = f > 0 ? "2" : "-2";
      rows.push_back(row(A(("s1=" + sc + ", s2=" + sd + ", R1!=0").c_str()), [=](std::mt19937_64& g) -> std::optional<PV> {
        Rational s3 = s3_free(g);
        if (sgn(pv_r1(c, d, s3)) == 0) return std::nullopt;
        return PV{c, d, s3};
      }, [=](const PV& s) -> std::vector<Point3> {
        const Rational s3 = s[2];
        if (e > 0 && f > 0) return {{1, s3, 2}, {s3, 1, 2}};
        if (e > 0 && f < 0) return {{-s3, -1, -2}, {1, s3, -2}};
        if (e < 0 && f > 0) return {{-1, -s3, -2}, {s3, 1, -2}};
        return {{-1, -s3, 2}, {-s3, -1, 2}};
      }, {1, 1}));
      if (e < 0 && f < 0) {
        rows.back().printed = [](const PV& s) { return std::vector<Point3>{{-1, -s[2], 2}, {-s[2], -1, -2}}; };
        rows.back().correction = "published second point (-s3,-1,-2); solved (-s3,-1,2)";
      }
      // R1 = 0 forces s3 = e*f.
      rows.push_back(row(A(("s1=" + sc + ", s2=" + sd + ", R1=0").c_str()),
                         [=](std::mt19937_64&) -> std::optional<PV> { return PV{c, d, Rational(e * f)}; },
                         [=](const PV&) -> std::vector<Point3> {
                           if (e > 0 && f > 0) return {{1, 1, 2}};
                           if (e > 0 && f < 0) return {{1, -1, -2}};
                           if (e < 0 && f > 0) return {{-1, 1, -2}};
                           return {{-1, -1, 2}};
                         }, {3}));
      if (e < 0 && f > 0) {
        rows.back().printed = [](const PV&) { return std::vector<Point3>{{-1, -1, -2}}; };
        rows.back().correction = "published (-1,-1,-2); solved (-1,1,-2)";
      }
    }
    // s1 = c, s2 != +-2, R1 = 0: s2 = e (s3 + 1/s3)
    rows.push_back(row(A(("s1=" + sc + ", s2!=+-2, R1=0").c_str()), [=](std::mt19937_64& g) -> std::optional<PV> {
      Rational s3 = s3_free(g);
      Rational s2 = e * (s3 + inv(s3));
      if (pm2(s2)) return std::nullopt;
      return PV{c, s2, s3};
    }, [=](const PV& s) { return std::vector<Point3>{{Rational(e), e * s[2], s[2] + inv(s[2])}}; }, {2}));
  }

  // s1 != +-2, s2 = +-2.
  rows.push_back(row(A("s1!=+-2, s2=2, R1!=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    Rational s1 = random_rational(g, 6, 4), s3 = nonzero(g);
    if (pm2(s1) || sgn(pv_r1(s1, 2, s3)) == 0) return std::nullopt;
    return PV{s1, 2, s3};
  }, [](const PV& s) {
    // Third coordinate solved from dF/dx1 = x2 x3 + 2 x1 - s1 - s2 s3 = 0 at (s3, 1, x3).
    return std::vector<Point3>{{s[2], 1, s[0] + s[1] * s[2] - 2 * s[2]}};
  }, {1}));
  rows.back().correction = "published third coordinate truncated; solved x3 = s1";
  rows.push_back(row(A("s1!=+-2, s2=2, R1=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    Rational s3 = s3_free(g);
    Rational s1 = s3 + inv(s3);
    if (pm2(s1)) return std::nullopt;
    return PV{s1, 2, s3};
  }, [](const PV& s) { return std::vector<Point3>{{s[2], 1, s[2] + inv(s[2])}}; }, {2}));
  rows.push_back(row(A("s1!=+-2, s2=-2, R1!=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    Rational s1 = random_rational(g, 6, 4), s3 = nonzero(g);
    if (pm2(s1) || sgn(pv_r1(s1, -2, s3)) == 0) return std::nullopt;
    return PV{s1, -2, s3};
  }, [](const PV& s) { return std::vector<Point3>{{-s[2], -1, -s[0]}}; }, {1}));
  rows.push_back(row(A("s1!=+-2, s2=-2, R1=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    Rational s3 = s3_free(g);
    Rational s1 = -(s3 + inv(s3));
    if (pm2(s1)) return std::nullopt;
    return PV{s1, -2, s3};
  }, [](const PV& s) { return std::vector<Point3>{{-s[2], -1, s[2] + inv(s[2])}}; }, {2}));

  // Generic reducible stratum: s1 = a + 1/a, s3 = b, s2 a rational root of R1.
  rows.push_back(row(A("s1!=+-2, s2!=+-2, R1=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    const SplitTrace st = split_trace(g);
    const Rational s3 = s3_free(g);
    const Rational u = s3 + inv(s3);
    // s2^2 - s1 u s2 + (u^2 + s1^2 - 4) = 0, discriminant (s1^2 - 4)(u^2 - 4).
    const Rational root = (st.a - inv(st.a)) * (s3 - inv(s3));
    const Rational s2 = (st.s * u + (g() % 2 ? root : -root)) / 2;
    if (pm2(s2) || sgn(s2 * s3 - st.s) == 0) return std::nullopt;
    return PV{st.s, s2, s3};
  }, [](const PV& s) {
    const Rational a1 = (s[2] * s[2] - 1) / (s[1] * s[2] - s[0]);
    const Rational a2 = s[2] * (s[1] * s[2] - s[0]) / (s[2] * s[2] - 1);
    return std::vector<Point3>{{a1, a2, s[2] + inv(s[2])}};
  }, {1}));
  rows.push_back(row(A("s1!=+-2, s2=s1, R1=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    const SplitTrace st = split_trace(g);
    return PV{st.s, st.s, Rational(1), st.a};
  }, [](const PV& s) {
    const Rational al = s[3], be = inv(s[3]);
    return std::vector<Point3>{{al, be, 2}, {be, al, 2}};
  }, {1, 1}));
  rows.push_back(row(A("s1!=+-2, s2=-s1, R1=0"), [=](std::mt19937_64& g) -> std::optional<PV> {
    const SplitTrace st = split_trace(g);
    return PV{st.s, -st.s, Rational(-1), st.a};
  }, [](const PV& s) {
    const Rational al = s[3], be = inv(s[3]);
    return std::vector<Point3>{{al, -be, -2}, {be, -al, -2}};
  }, {1, 1}));
  rows.back().printed = [](const PV& s) {
    const Rational al = s[3], be = inv(s[3]);
    return std::vector<Point3>{{al, -be, 2}, {-be, al, 2}};
  };
  rows.back().correction = "published (alpha,-beta,2),(-beta,alpha,2); solved (alpha,-beta,-2),(beta,-alpha,-2)";
  return rows;
}

std::vector<SingularRow> pv_deg_rows() {
  std::vector<SingularRow> rows;
  using PV = ParamValues;
  // Resonance at 0: s0 = +-2 gives (-s0/2, 0, 2 s1/s0); at 1: s1 = +-2 gives (0, -s1/2, 2 s0/s1).
  auto at0 = [](const PV& s) { return Point3{-s[0] / 2, 0, 2 * s[1] / s[0]}; };
  auto at1 = [](const PV& s) { return Point3{0, -s[1] / 2, 2 * s[0] / s[1]}; };
  for (int e : {2, -2}) {
    rows.push_back(row("PVdeg: s0=" + std::to_string(e) + ", s1!=+-2", [=](std::mt19937_64& g) -> std::optional<PV> {
      Rational s1 = random_rational(g, 6, 4);
      if (pm2(s1)) return std::nullopt;
      return PV{Rational(e), s1};
    }, [=](const PV& s) { return std::vector<Point3>{at0(s)}; }, {1}));
    rows.push_back(row("PVdeg: s0!=+-2, s1=" + std::to_string(e), [=](std::mt19937_64& g) -> std::optional<PV> {
      Rational s0 = random_rational(g, 6, 4);
      if (pm2(s0)) return std::nullopt;
      return PV{s0, Rational(e)};
    }, [=](const PV& s) { return std::vector<Point3>{at1(s)}; }, {1}));
  }
  for (int e : {2, -2})
    for (int f : {2, -2})
      rows.push_back(row("PVdeg: s0=" + std::to_string(e) + ", s1=" + std::to_string(f),
                         [=](std::mt19937_64&) -> std::optional<PV> { return PV{Rational(e), Rational(f)}; },
                         [=](const PV& s) { return std::vector<Point3>{at0(s), at1(s)}; }, {1, 1}));
  return rows;
}

std::vector<SingularRow> piii_d6_rows() {
  using PV = ParamValues;
  std::vector<SingularRow> rows;
  rows.push_back(row("PIII(D6) line L1: alpha=beta!=+-1", [](std::mt19937_64& g) -> std::optional<PV> {
    Rational a = nonzero(g);
    if (a == 1 || a == -1) return std::nullopt;
    return PV{a, a};
  }, [](const PV& s) { return std::vector<Point3>{{0, -s[0], s[0] + inv(s[0])}}; }, {1}));
  rows.push_back(row("PIII(D6) line L2: alpha=1/beta!=+-1", [](std::mt19937_64& g) -> std::optional<PV> {
    Rational a = nonzero(g);
    if (a == 1 || a == -1) return std::nullopt;
    return PV{a, inv(a)};
  }, [](const PV& s) { return std::vector<Point3>{{-1, 0, s[0] + inv(s[0])}}; }, {1}));
  for (int e : {1, -1})
    rows.push_back(row("PIII(D6) L1 and L2: alpha=beta=" + std::to_string(e),
                       [=](std::mt19937_64&) -> std::optional<PV> { return PV{Rational(e), Rational(e)}; },
                       [=](const PV&) { return std::vector<Point3>{{0, -e, 2 * e}, {-1, 0, 2 * e}}; }, {1, 1}));
  return rows;
}

std::vector<SingularRow> piv_rows() {
  using PV = ParamValues;
  std::vector<SingularRow> rows;
  rows.push_back(row("PIV table: D1+ not Dred", [](std::mt19937_64& g) -> std::optional<PV> {
    Rational s2 = nonzero(g);
    if (s2 == 1) return std::nullopt;
    return PV{2, s2};
  }, [](const PV& s) { return std::vector<Point3>{{s[1], s[1], s[1]}}; }, {1}));
  rows.push_back(row("PIV table: D1- not Dred", [](std::mt19937_64& g) -> std::optional<PV> {
    Rational s2 = nonzero(g);
    if (s2 == -1) return std::nullopt;
    return PV{-2, s2};
  }, [](const PV& s) { return std::vector<Point3>{{-s[1], -s[1], -s[1]}}; }, {1}));
  rows.push_back(row("PIV table: Dred not D1", [](std::mt19937_64& g) -> std::optional<PV> {
    Rational s2 = nonzero(g);
    if (s2 == 1 || s2 == -1) return std::nullopt;
    return PV{s2 + inv(s2), s2};
  }, [](const PV& s) { return std::vector<Point3>{{s[1] * s[1], 1, 1}}; }, {1}));
  rows.push_back(row("PIV table: D1+ and Dred", [](std::mt19937_64&) -> std::optional<PV> { return PV{2, 1}; },
                     [](const PV&) { return std::vector<Point3>{{1, 1, 1}}; }, {2}));
  rows.push_back(row("PIV table: D1- and Dred", [](std::mt19937_64&) -> std::optional<PV> { return PV{-2, -1}; },
                     [](const PV&) { return std::vector<Point3>{{1, 1, 1}}; }, {2}));
  return rows;
}

std::vector<SingularRow> pii_fn_rows() {
  using PV = ParamValues;
  return {row("PIIFN: s=2", [](std::mt19937_64&) -> std::optional<PV> { return PV{2}; },
              [](const PV&) { return std::vector<Point3>{{-1, 1, -1}}; }, {1}),
          row("PIIFN: s=-2", [](std::mt19937_64&) -> std::optional<PV> { return PV{-2}; },
              [](const PV&) { return std::vector<Point3>{{1, -1, 1}}; }, {1})};
}

std::vector<SingularRow> pii_rows() {
  using PV = ParamValues;
  return {row("PII: Cayley point alpha=1", [](std::mt19937_64&) -> std::optional<PV> { return PV{1}; },
              [](const PV&) { return std::vector<Point3>{{1, 1, 1}}; }, {1})};
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-bound * d, bound * d);
  return exact::make_rational(num(rng), d);
}

const CubicSurface& surface(FamilyId id) {
  static const std::map<FamilyId, CubicSurface> all = build_surfaces();
  return all.at(id);
}

ParamValues pvi_parameters(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  return {a1 * a4 + a2 * a3, a2 * a4 + a3 * a1, a3 * a4 + a1 * a2,
          a1 * a2 * a3 * a4 + a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 - 4};
}

CP fibre_equation(const CubicSurface& s, const ParamValues& values) {
  if (values.size() < s.params.size())
    throw Error(ErrorKind::DomainViolation, "expected " + std::to_string(s.params.size()) + " parameters");
  CP f = s.equation;
  for (std::size_t i = 0; i < s.params.size(); ++i) {
    if (s.params[i].nonzero && sgn(values[i]) == 0)
      throw Error(ErrorKind::DomainViolation, "parameter " + s.params[i].name + " must be nonzero");
    f = f.subs(s.params[i].var, values[i]);
  }
  return f;
}

bool PointEval::singular() const {
  return sgn(value) == 0 && sgn(gradient[0]) == 0 && sgn(gradient[1]) == 0 && sgn(gradient[2]) == 0;
}

PointEval eval_and_gradient(const CubicSurface& s, const ParamValues& values, const Point3& x) {
  const CP f = fibre_equation(s, values);
  std::vector<Rational> at(CubicVars::count);
  for (int i = 0; i < 3; ++i) at[i] = x[i];
  PointEval r;
  r.value = f.eval<Rational>(at);
  for (int i = 0; i < 3; ++i) r.gradient[i] = f.diff(kX[i]).eval<Rational>(at);
  return r;
}

std::string ade_label(int n) { return "A" + std::to_string(n); }

std::vector<SingularRow> singularity_table(FamilyId id) {
  switch (id) {
    case FamilyId::pv: return pv_rows();
    case FamilyId::pv_deg: return pv_deg_rows();
    case FamilyId::piii_d6: return piii_d6_rows();
    case FamilyId::piv: return piv_rows();
    case FamilyId::pii_fn: return pii_fn_rows();
    case FamilyId::pii: return pii_rows();
    default: return {};
  }
}

bool TableReport::ok() const {
  for (const auto& r : rows)
    if (!r.ok()) return false;
  return true;
}

TableReport verify_singularity_table(FamilyId id, int samples_per_row, std::uint64_t seed) {
  const CubicSurface& surf = surface(id);
  TableReport rep{id, {}};
  std::mt19937_64 rng(seed);
  for (const auto& r : singularity_table(id)) {
    RowReport rr;
    rr.anchor = r.anchor;
    rr.correction = r.correction;
    for (int k = 0; k < samples_per_row; ++k) {
      std::optional<ParamValues> s;
      for (int tries = 0; tries < 1000 && !s; ++tries) s = r.sample(rng);
      if (!s) {
        rr.failures.push_back("no parameter sample found");
        break;
      }
      ++rr.samples;
      const ParamValues params(s->begin(), s->begin() + static_cast<long>(surf.params.size()));
      const CP f = fibre_equation(surf, params);
      const auto pts = r.points(*s);
      bool good = true;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string where = "point " + std::to_string(i) + " at params (";
        for (std::size_t j = 0; j < params.size(); ++j) where += (j ? "," : "") + params[j].get_str();
        where += ")";
        const PointEval ev = eval_and_gradient(surf, params, pts[i]);
        if (!ev.singular()) {
          rr.failures.push_back(where + ": not a singular point");
          good = false;
          continue;
        }
        try {
          const int n = classify_singularity(f, pts[i]);
          if (n != r.types[i]) {
            rr.failures.push_back(where + ": type " + ade_label(n) + ", expected " + ade_label(r.types[i]));
            good = false;
          }
        } catch (const Error& e) {
          rr.failures.push_back(where + ": " + e.what());
          good = false;
        }
      }
      if (good) ++rr.passed;
      if (r.printed) {
        bool all = true;
        for (const auto& p : r.printed(*s)) all = all && eval_and_gradient(surf, params, p).singular();
        if (all) ++rr.printed_singular;
      }
    }
    rep.rows.push_back(std::move(rr));
  }
  return rep;
}

std::optional<CP> fibre_discriminant(FamilyId id) {
  switch (id) {
    case FamilyId::pvi: return std::nullopt;
    case FamilyId::pv:
      // (s1^2 - 4)(s2^2 - 4) s3^2 R1
      return cp("(s1^2 - 4)*(s2^2 - 4)*((s3^2 + 1)^2 - s1*s2*s3*(s3^2 + 1) + (s1^2 + s2^2 - 4)*s3^2)");
    case FamilyId::pv_deg: return cp("(s1^2 - 4)*(s2^2 - 4)");
    case FamilyId::piii_d6: return cp("(s1 - s2)^2*(s1*s2 - 1)^2");
    case FamilyId::piv: return cp("(s1 - 2)*(s1 + 2)*(s2^2 - s1*s2 + 1)");
    case FamilyId::pii_fn: return cp("s1^2 - 4");
    case FamilyId::pii: return cp("s1 - 1");
    default: return CP(1);
  }
}

bool discriminant_vanishes(FamilyId id, const ParamValues& values) {
  const auto d = fibre_discriminant(id);
  if (!d) throw Error(ErrorKind::UsageError, "no discriminant for " + std::string(family_key(id)));
  const CubicSurface& s = surface(id);
  CP r = *d;
  for (std::size_t i = 0; i < s.params.size(); ++i) r = r.subs(s.params[i].var, values[i]);
  return r.is_zero();
}

bool pv_singular_locus_identity(bool perturbed) {
  const CubicSurface& s = surface(FamilyId::pv);
  const CF x1 = CF::var(V::x1), x2 = CF::var(V::x2);
  const CF x3 = perturbed ? x1 * x2 : x1 * x2 + (x1 * x2).inverse();
  const CF s1 = x1 + x1.inverse(), s2 = x2 + x2.inverse(), s3 = x1 * x2;
  auto image = [&](const CP& p) {
    return CF(p).subs(V::x3, x3).subs(V::s1, s1).subs(V::s2, s2).subs(V::s3, s3);
  };
  if (!image(s.equation).is_zero()) return false;
  for (V v : kX)
    if (!image(s.equation.diff(v)).is_zero()) return false;
  return true;
}

}  // namespace isomono
