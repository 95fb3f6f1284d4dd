#include "isomono/families.hpp"

#include <algorithm>
#include <functional>

#include "isomono/exact/parse.hpp"

namespace isomono {

namespace {

using exact::parse_frac;
using exact::parse_poly;

RF f(const char* s) { return parse_frac<LaxVars>(s); }
RP poly(const char* s) { return parse_poly<LaxVars>(s); }

Mat2S mat(const char* a, const char* b, const char* c, const char* d) {
  return Mat2S(f(a), f(b), f(c), f(d));
}

Mat2S scale(const RF& s, const Mat2S& m) { return s * m; }

Rational rat(long n, long d = 1) { return exact::make_rational(n, d); }

ExponentDescriptor expo(PointKind k, std::vector<ExponentTerm> terms, bool tdep) {
  return ExponentDescriptor{k, std::move(terms), tdep};
}

KatzSignature katz(std::optional<Rational> r0, std::optional<Rational> r1,
                   std::optional<Rational> rinf, std::optional<Rational> rt = std::nullopt) {
  KatzSignature k;
  k.r = {r0, r1, rinf, rt};
  return k;
}

// A_num for d/dz + A0/z + A1/(z-1) + Ainf.
Mat2S three_point(const Mat2S& a0, const Mat2S& a1, const Mat2S& ainf) {
  return scale(f("z*(z-1)"), ainf) + scale(f("z-1"), a0) + scale(f("z"), a1);
}

// A_num = A0 + A1 z + A2 z^2.
Mat2S quadratic(const Mat2S& a0, const Mat2S& a1, const Mat2S& a2) {
  return a0 + scale(f("z"), a1) + scale(f("z^2"), a2);
}

FamilySpec make_pvi() {
  FamilySpec s;
  s.id = FamilyId::pvi;
  s.key = "pvi";
  s.painleve = "PVI";
  s.dynkin = "~D4";
  s.katz = katz(rat(0), rat(0), rat(0), rat(0));
  s.dim_p = 4;
  s.has_lax = false;
  return s;
}

FamilySpec make_pv() {
  FamilySpec s;
  s.id = FamilyId::pv;
  s.key = "pv";
  s.painleve = "PV";
  s.dynkin = "~D5";
  s.katz = katz(rat(0), rat(0), rat(1));
  s.dim_p = 3;
  s.has_lax = true;
  Mat2S a0 = mat("-p - q*(q*t - t + thinf)/2",
                 "(q-1)*((p + q*(q*t - t + thinf)/2)^2 - th0^2/4)/q",
                 "-q/(q-1)",
                 "p + q*(q*t - t + thinf)/2");
  Mat2S a1 = mat("p + (q-1)*(q*t + thinf)/2",
                 "th1^2/4 - (p + (q-1)*(q*t + thinf)/2)^2",
                 "1",
                 "-(p + (q-1)*(q*t + thinf)/2)");
  Mat2S ainf = mat("-t/2", "0", "0", "t/2");
  s.a_num = three_point(a0, a1, ainf);
  s.weight = poly("z*(z-1)");
  s.b_terms[1] = mat("-1/2", "0", "0", "1/2");
  s.b_terms[0] = scale(f("1/t"),
                       mat("-p/(q-1) - (q-1)*t/2 - thinf/2",
                           "-((p + (q-1)*q*t/2)^2 - th1^2/4 + (q-1)*(th0^2/4 - th1^2/4 - q*thinf^2/4))/q",
                           "-1/(q-1)",
                           "p/(q-1) + (q-1)*t/2 + thinf/2"));
  s.f_factor = poly("q*(q-1)");
  s.qprime = f("2*p/t");
  s.pprime = f("(2*q-1)*p^2/((q-1)*q*t) + (th0^2*(q-1)^2 - th1^2*q^2)/(4*q*(q-1)*t)"
               " + (q-1)*q*(2*q*t - t + 2*thinf - 2)/4");
  s.second_order = f("(2*q-1)*qdot^2/(2*(q-1)*q) - qdot/t + (q-1)*q*(2*q*t - t + 2*thinf - 2)/(2*t)"
                     " + th0^2/(2*q*t^2) + th1^2/(2*(q-1)*t^2)");
  s.hamiltonian = f("-p^2/((q-1)*q*t) - th0^2/(4*q*t) + th1^2/(4*(q-1)*t) + q*(q*t - t + 2*thinf - 2)/4");
  s.exponents = {expo(PointKind::zero, {{rat(0), "th0/2"}}, false),
                 expo(PointKind::one, {{rat(0), "th1/2"}}, false),
                 expo(PointKind::infinity, {{rat(1), "t/2"}, {rat(0), "thinf/2"}}, true)};
  s.finite_singular_points = {rat(0), rat(1)};
  return s;
}

FamilySpec make_pv_deg() {
  FamilySpec s;
  s.id = FamilyId::pv_deg;
  s.key = "pv_deg";
  s.painleve = "PVdeg";
  s.dynkin = "~D6";
  s.katz = katz(rat(0), rat(0), rat(1, 2));
  s.dim_p = 2;
  s.has_lax = true;
  Mat2S a0 = mat("-p", "(th0^2 - 4*p^2)/(4*q)", "q", "p");
  Mat2S a1 = mat("p", "(4*p^2 - th1^2)/(4*(q-1))", "1-q", "-p");
  Mat2S ainf = mat("0", "t^2", "0", "0");
  s.a_num = three_point(a0, a1, ainf);
  s.weight = poly("z*(z-1)");
  s.b_terms[1] = mat("0", "2*t", "0", "0");
  s.b_terms[0] = mat("0", "2*p^2/((q-1)*q*t) + th0^2/(2*q*t) - th1^2/(2*(q-1)*t) + 2*(q-1)*t",
                     "2/t", "0");
  s.f_factor = poly("q*(q-1)");
  s.qprime = f("4*p/t");
  s.pprime = f("2*(2*q-1)*p^2/((q-1)*q*t) + (q-1)*th0^2/(2*q*t) - q*th1^2/(2*(q-1)*t) + 2*q*(q-1)*t");
  s.second_order = f("(2*q-1)*qdot^2/(2*(q-1)*q) - qdot/t + 2*(q-1)*th0^2/(q*t^2)"
                     " - 2*q*th1^2/((q-1)*t^2) + 8*(q-1)*q");
  s.hamiltonian = f("-2*p^2/((q-1)*q*t) - th0^2/(2*q*t) + th1^2/(2*(q-1)*t) + 2*q*t");
  s.hamiltonian_alternates = {f("2*(p^2 - th0^2/4)/(t*q) - 2*(p^2 - th1^2/4)/(t*(q-1)) + 2*q*t")};
  s.exponents = {expo(PointKind::zero, {{rat(0), "th0/2"}}, false),
                 expo(PointKind::one, {{rat(0), "th1/2"}}, false),
                 expo(PointKind::infinity, {{rat(1, 2), "t"}}, true)};
  s.finite_singular_points = {rat(0), rat(1)};
  return s;
}

FamilySpec make_piii_d6() {
  FamilySpec s;
  s.id = FamilyId::piii_d6;
  s.key = "piii_d6";
  s.painleve = "PIII(D6)";
  s.dynkin = "~D6";
  s.katz = katz(rat(1), std::nullopt, rat(1));
  s.dim_p = 2;
  s.has_lax = true;
  Mat2S a0 = mat("(-t*q^2 - thinf*q + 2*p)/2",
                 "(t^2*q^4 + 2*t*thinf*q^3 + thinf^2*q^2 - 4*p*t*q^2 - 4*p*thinf*q + 4*p^2 - t^2)/(4*q)",
                 "-q",
                 "(t*q^2 + thinf*q - 2*p)/2");
  Mat2S a1 = mat("thinf/2",
                 "(t^2*q^4 - thinf^2*q^2 - 4*p*t*q^2 - 2*t*th0*q + 4*p^2 - t^2)/(4*q^2)",
                 "1",
                 "-thinf/2");
  Mat2S a2 = mat("t/2", "0", "0", "-t/2");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("z^2");
  s.b_terms[1] = mat("1/2", "0", "0", "-1/2");
  s.b_terms[0] = mat("q + thinf/(2*t)",
                     "(t^2*q^4 - thinf^2*q^2 - 4*p*t*q^2 - 2*t*th0*q + 4*p^2 - t^2)/(4*q^2*t)",
                     "1/t",
                     "-q - thinf/(2*t)");
  s.b_terms[-1] = mat("(t*q^2 + thinf*q - 2*p)/(2*t)",
                      "(-4*p^2 + (1 - q^4)*t^2 + 2*q^2*t*(2*p - q*thinf) + q*thinf*(4*p - q*thinf))/(4*q*t)",
                      "q/t",
                      "(-t*q^2 - thinf*q + 2*p)/(2*t)");
  s.f_factor = poly("q^2");
  s.qprime = f("(4*p + q)/t");
  s.pprime = f("4*p^2/(q*t) + p/t + t*q^3 + q^2 - t/q - th0 + q^2*thinf");
  s.second_order = f("qdot^2/q - qdot/t - 4*th0/t + 4*(thinf + 1)*q^2/t + 4*q^3 - 4/q");
  s.hamiltonian = f("-2*p^2/(q^2*t) - p/(q*t) + q + q^2*t/2 + t/(2*q^2) + th0/q + q*thinf");
  s.exponents = {expo(PointKind::zero, {{rat(-1), "t/2"}, {rat(0), "th0/2"}}, true),
                 expo(PointKind::infinity, {{rat(1), "t/2"}, {rat(0), "thinf/2"}}, true)};
  s.finite_singular_points = {rat(0)};
  return s;
}

FamilySpec make_piii_d7() {
  FamilySpec s;
  s.id = FamilyId::piii_d7;
  s.key = "piii_d7";
  s.painleve = "PIII(D7)";
  s.dynkin = "~D7";
  s.katz = katz(rat(1, 2), std::nullopt, rat(1));
  s.dim_p = 1;
  s.has_lax = true;
  Mat2S a0 = mat("(-t*q^2 - thinf*q + 2*p)/2", "(t*q^2 + thinf*q - 2*p)^2/(4*q)", "-q",
                 "(t*q^2 + thinf*q - 2*p)/2");
  Mat2S a1 = mat("thinf/2", "(t^2*q^4 - thinf^2*q^2 - 4*p*t*q^2 - 4*q + 4*p^2)/(4*q^2)", "1",
                 "-thinf/2");
  Mat2S a2 = mat("t/2", "0", "0", "-t/2");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("z^2");
  s.b_terms[1] = mat("1/2", "0", "0", "-1/2");
  s.b_terms[0] = mat("q/2 + thinf/(2*t)",
                     "(t^2*q^4 - (thinf^2 + 4*p*t)*q^2 - 4*q + 4*p^2)/(4*q^2*t)",
                     "1/t",
                     "-q/2 - thinf/(2*t)");
  s.f_factor = poly("q^2");
  s.qprime = f("2*p/t");
  s.pprime = f("2*p^2/(t*q) + t*q^3/2 + (thinf + 1)*q^2/2 - 1/t");
  s.second_order = f("qdot^2/q - qdot/t + (thinf + 1)*q^2/t + q^3 - 2/t^2");
  s.hamiltonian = f("-p^2/(q^2*t) + q^2*t/4 + q*(thinf + 1)/2 + 1/(q*t)");
  s.exponents = {expo(PointKind::zero, {{rat(-1, 2), "1"}}, false),
                 expo(PointKind::infinity, {{rat(1), "t/2"}, {rat(0), "thinf/2"}}, true)};
  s.finite_singular_points = {rat(0)};
  return s;
}

FamilySpec make_piii_d8() {
  FamilySpec s;
  s.id = FamilyId::piii_d8;
  s.key = "piii_d8";
  s.painleve = "PIII(D8)";
  s.dynkin = "~D8";
  s.katz = katz(rat(1, 2), std::nullopt, rat(1, 2));
  s.dim_p = 0;
  s.has_lax = true;
  Mat2S a0 = mat("0", "0", "-q", "0");
  Mat2S a1 = mat("p/q", "-t/q", "1", "-p/q");
  Mat2S a2 = mat("0", "1", "0", "0");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("z^2");
  s.b_terms[0] = mat("0", "1/q", "0", "0");
  s.b_terms[-1] = mat("0", "0", "q/t", "0");
  s.f_factor = poly("q^2");
  s.qprime = f("(2*p + q)/t");
  s.pprime = f("2*p^2/(q*t) + p/t + q^2/t - 1");
  s.second_order = f("qdot^2/q - qdot/t + 2*q^2/t^2 - 2/t");
  s.hamiltonian = f("-p^2/(q^2*t) - p/(q*t) + 1/q + q/t");
  s.exponents = {expo(PointKind::zero, {{rat(-1, 2), "sqrt(t)"}}, true),
                 expo(PointKind::infinity, {{rat(1, 2), "1"}}, false)};
  s.finite_singular_points = {rat(0)};
  return s;
}

FamilySpec make_piv() {
  FamilySpec s;
  s.id = FamilyId::piv;
  s.key = "piv";
  s.painleve = "PIV";
  s.dynkin = "~E6";
  s.katz = katz(rat(0), std::nullopt, rat(2));
  s.dim_p = 2;
  s.has_lax = true;
  Mat2S a0 = mat("-q^2 - t*q/2 + p",
                 "(q^4 + t*q^3 + t^2*q^2/4 - 2*p*q^2 - t*p*q + p^2 - th0^2/4)/q",
                 "-q",
                 "q^2 + t*q/2 - p");
  Mat2S a1 = mat("t/2", "2*q^2 + t*q - 2*p + thinf", "1", "-t/2");
  Mat2S a2 = mat("1", "0", "0", "-1");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("z");
  s.b_terms[1] = mat("1/2", "0", "0", "-1/2");
  s.b_terms[0] = mat("q/2 + t/4", "q^2 + t*q/2 - p + thinf/2", "1/2", "-q/2 - t/4");
  s.f_factor = poly("q");
  s.qprime = f("p");
  s.pprime = f("3*q^3/2 + t*q^2 + (t^2 + 4*thinf + 4)*q/8 + (4*p^2 - th0^2)/(8*q)");
  s.second_order = f("qdot^2/(2*q) + 3*q^3/2 + t*q^2 + (t^2 + 4*thinf + 4)*q/8 - th0^2/(8*q)");
  s.hamiltonian = f("-p^2/(2*q) + q^3/2 + t*q^2/2 + (t^2 + 4*thinf + 4)*q/8 + th0^2/(8*q)");
  s.exponents = {expo(PointKind::zero, {{rat(0), "th0/2"}}, false),
                 expo(PointKind::infinity, {{rat(2), "1"}, {rat(1), "t/2"}, {rat(0), "thinf/2"}}, false)};
  s.finite_singular_points = {rat(0)};
  return s;
}

FamilySpec make_pii_fn() {
  FamilySpec s;
  s.id = FamilyId::pii_fn;
  s.key = "pii_fn";
  s.painleve = "PIIFN";
  s.dynkin = "~E7";
  s.katz = katz(rat(0), std::nullopt, rat(3, 2));
  s.dim_p = 1;
  s.has_lax = true;
  Mat2S a0 = mat("p", "(p^2 - th0^2/4)/q", "-q", "-p");
  Mat2S a1 = mat("0", "q + t", "1", "0");
  Mat2S a2 = mat("0", "1", "0", "0");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("z");
  s.b_terms[0] = mat("0", "2*q + t", "1", "0");
  s.b_terms[1] = mat("0", "1", "0", "0");
  s.f_factor = poly("q");
  s.qprime = f("2*p");
  s.pprime = f("2*q^2 + t*q + (p^2 - th0^2/4)/q");
  s.second_order = f("qdot^2/(2*q) + 4*q^2 + 2*t*q - th0^2/(2*q)");
  s.hamiltonian = f("-(p^2 - th0^2/4)/q + q^2 + t*q");
  s.exponents = {expo(PointKind::zero, {{rat(0), "th0/2"}}, false),
                 expo(PointKind::infinity, {{rat(3, 2), "1"}, {rat(1, 2), "t/2"}}, false)};
  s.finite_singular_points = {rat(0)};
  return s;
}

FamilySpec make_pii() {
  FamilySpec s;
  s.id = FamilyId::pii;
  s.key = "pii";
  s.painleve = "PII";
  s.dynkin = "~E7";
  s.katz = katz(std::nullopt, std::nullopt, rat(3));
  s.dim_p = 1;
  s.has_lax = true;
  Mat2S a0 = mat("p - q^2", "2*q^3 - 2*p*q + t*q + thinf", "-q", "q^2 - p");
  Mat2S a1 = mat("0", "2*q^2 - 2*p + t", "1", "0");
  Mat2S a2 = mat("1", "0", "0", "-1");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("1");
  s.b_terms[0] = mat("q/2", "q^2 - p + t/2", "1/2", "-q/2");
  s.b_terms[1] = mat("1/2", "0", "0", "-1/2");
  s.f_factor = poly("1");
  s.qprime = f("p");
  s.pprime = f("2*q^3 + t*q + (thinf + 1)/2");
  s.second_order = f("2*q^3 + q*t + (thinf + 1)/2");
  s.hamiltonian = f("(-p^2 + q^4 + t*q^2 + (thinf + 1)*q)/2");
  s.exponents = {expo(PointKind::infinity, {{rat(3), "1"}, {rat(1), "t/2"}, {rat(0), "thinf/2"}}, false)};
  return s;
}

FamilySpec make_pi() {
  FamilySpec s;
  s.id = FamilyId::pi;
  s.key = "pi";
  s.painleve = "PI";
  s.dynkin = "~E8";
  s.katz = katz(std::nullopt, std::nullopt, rat(5, 2));
  s.dim_p = 0;
  s.has_lax = true;
  Mat2S a0 = mat("p", "q^2 + t", "-q", "-p");
  Mat2S a1 = mat("0", "q", "1", "0");
  Mat2S a2 = mat("0", "1", "0", "0");
  s.a_num = quadratic(a0, a1, a2);
  s.weight = poly("1");
  s.b_terms[0] = mat("0", "2*q", "1", "0");
  s.b_terms[1] = mat("0", "1", "0", "0");
  s.f_factor = poly("1");
  s.qprime = f("2*p");
  s.pprime = f("3*q^2 + t");
  s.second_order = f("6*q^2 + 2*t");
  s.hamiltonian = f("-p^2 + q^3 + t*q");
  s.exponents = {expo(PointKind::infinity, {{rat(5, 2), "1"}, {rat(1, 2), "t/2"}}, false)};
  return s;
}

const std::array<FamilySpec, 10>& registry() {
  static const std::array<FamilySpec, 10> reg = {make_pvi(),     make_pv(),      make_pv_deg(),
                                                 make_piii_d6(), make_piii_d7(), make_piii_d8(),
                                                 make_piv(),     make_pii_fn(),  make_pii(),
                                                 make_pi()};
  return reg;
}

constexpr std::array<std::string_view, 10> kKeys = {"pvi",     "pv",  "pv_deg", "piii_d6", "piii_d7",
                                                    "piii_d8", "piv", "pii_fn", "pii",     "pi"};

}  // namespace

std::string_view family_key(FamilyId id) { return kKeys[static_cast<std::size_t>(id)]; }

FamilyId parse_family_id(std::string_view key) {
  for (std::size_t i = 0; i < kKeys.size(); ++i)
    if (kKeys[i] == key) return static_cast<FamilyId>(i);
  throw Error(ErrorKind::UnknownFamily, std::string(key));
}

std::string_view point_name(PointKind k) {
  switch (k) {
    case PointKind::zero: return "0";
    case PointKind::one: return "1";
    case PointKind::infinity: return "inf";
    case PointKind::movable: return "t";
  }
  return "?";
}

int KatzSignature::num_points() const {
  int n = 0;
  for (const auto& x : r) n += x.has_value();
  return n;
}

std::vector<Rational> KatzSignature::sorted_invariants() const {
  std::vector<Rational> v;
  for (const auto& x : r)
    if (x) v.push_back(*x);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::string KatzSignature::to_string() const {
  std::string s = "(";
  const int slots = r[3] ? 4 : 3;
  for (int i = 0; i < slots; ++i) {
    if (i) s += ",";
    s += r[i] ? r[i]->get_str() : std::string("-");
  }
  return s + ")";
}

bool operator<(const KatzSignature& a, const KatzSignature& b) {
  if (a.num_points() != b.num_points()) return a.num_points() > b.num_points();
  for (int i = 0; i < 4; ++i) {
    const auto& x = a.r[i];
    const auto& y = b.r[i];
    if (x.has_value() != y.has_value()) return x.has_value();
    if (x && *x != *y) return *x < *y;
  }
  return false;
}

Rational ExponentDescriptor::leading_degree() const {
  Rational d(0);
  for (const auto& t : terms) {
    Rational e = point == PointKind::infinity ? t.power : Rational(-t.power);
    if (e > d) d = e;
  }
  return d;
}

Mat2S FamilySpec::a_full() const {
  RF inv = RF(1) / RF(weight);
  return inv * a_num;
}

Mat2S FamilySpec::b_full() const {
  Mat2S b;
  for (const auto& [k, m] : b_terms) b += RF::var(VarId::z).pow(k) * m;
  return b;
}

std::vector<int> FamilySpec::b_powers() const {
  std::vector<int> v;
  for (const auto& [k, m] : b_terms) v.push_back(k);
  return v;
}

const FamilySpec& get_family(FamilyId id) {
  const auto i = static_cast<std::size_t>(id);
  if (i >= registry().size()) throw Error(ErrorKind::UnknownFamily, std::to_string(i));
  return registry()[i];
}

int katz_contribution(const Rational& r) {
  if (sgn(r) < 0) throw Error(ErrorKind::BadKatz, "negative Katz invariant " + r.get_str());
  Rational twice = 2 * r;
  if (twice.get_den() != 1) throw Error(ErrorKind::BadKatz, "not a half-integer: " + r.get_str());
  if (r.get_den() == 1) return static_cast<int>(r.get_num().get_si());
  Rational up = r + Rational(1, 2);
  return static_cast<int>(up.get_num().get_si());
}

int position_contribution(int num_points) {
  int quotient = 0;
  if (num_points == 2) quotient = 1;
  if (num_points == 1) quotient = 2;
  return std::max(num_points - 3, 0) - quotient;
}

int fibre_dimension(const std::vector<Rational>& invariants) {
  int d = position_contribution(static_cast<int>(invariants.size()));
  for (const auto& r : invariants) d += katz_contribution(r);
  return d;
}

std::vector<KatzSignature> enumerate_families(const Rational& max_r, int max_points) {
  std::vector<Rational> values;
  for (Rational r(0); r <= max_r; r += Rational(1, 2)) values.push_back(r);
  std::vector<KatzSignature> out;
  std::vector<std::size_t> idx;
  // Multisets as non-increasing index sequences.
  std::function<void(std::size_t, int)> rec = [&](std::size_t max_idx, int remaining) {
    if (!idx.empty()) {
      std::vector<Rational> inv;
      for (auto i : idx) inv.push_back(values[i]);
      const int n = static_cast<int>(inv.size());
      const int irregular = static_cast<int>(std::count_if(inv.begin(), inv.end(), [](const Rational& r) { return sgn(r) > 0; }));
      bool admissible = n <= 4;
      if (n == 4) admissible = admissible && irregular == 0;
      if (n == 3) admissible = admissible && irregular == 1;
      if (admissible && fibre_dimension(inv) == 1) {
        KatzSignature k;
        // inv is non-increasing: infinity, 0, 1, t.
        const int slot_order[4] = {2, 0, 1, 3};
        for (int i = 0; i < n; ++i) k.r[slot_order[i]] = inv[i];
        out.push_back(k);
      }
    }
    if (remaining == 0) return;
    for (std::size_t i = 0; i <= max_idx && i < values.size(); ++i) {
      idx.push_back(i);
      rec(i, remaining - 1);
      idx.pop_back();
    }
  };
  for (std::size_t top = 0; top < values.size(); ++top) {
    idx.push_back(top);
    rec(top, max_points - 1);
    idx.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

int parameter_dimension(const KatzSignature& k) {
  int d = 0;
  for (const auto& r : k.r)
    if (r && r->get_den() == 1) ++d;
  return d;
}

}  // namespace isomono
