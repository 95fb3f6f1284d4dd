#include "isomono/scalarform.hpp"

#include <random>
#include <sstream>

namespace isomono {

using exact::UPoly;

namespace {

const RF kZ = RF::var(VarId::z);

constexpr VarId kParams[] = {VarId::p, VarId::q, VarId::t, VarId::th0, VarId::th1, VarId::thinf};

bool parallel(const QVec& a, const QVec& b) { return sgn(a[0] * b[1] - a[1] * b[0]) == 0; }

// Eigenvectors of a rational 2x2 matrix, one per eigenline. Empty optional when
// the eigenvalues are irrational or the matrix is scalar.
std::optional<std::vector<QVec>> eigenvectors(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d) {
  if (sgn(b) == 0 && sgn(c) == 0 && a == d) return std::nullopt;
  const Rational disc = (a - d) * (a - d) + 4 * b * c;
  Rational root;
  if (sgn(disc) < 0 || !exact::rational_sqrt(disc, root)) return std::nullopt;
  std::vector<QVec> out;
  auto vec_for = [&](const Rational& lam) -> QVec {
    if (sgn(b) != 0) return {b, lam - a};
    if (sgn(c) != 0) return {lam - d, c};
    return lam == a ? QVec{Rational(1), Rational(0)} : QVec{Rational(0), Rational(1)};
  };
  const Rational tr = a + d;
  out.push_back(vec_for((tr + root) / 2));
  if (sgn(disc) != 0) out.push_back(vec_for((tr - root) / 2));
  return out;
}

Rational entry_at(const UMat& m, int e, const Rational& z) { return m[e].eval(z); }

}  // namespace

ScalarOperator scalar_operator(const Mat2S& a_full) {
  const RF& a = a_full(0, 0);
  const RF& b = a_full(0, 1);
  const RF& c = a_full(1, 0);
  if (c.is_zero()) throw Error(ErrorKind::NotCyclic, "lower-left entry vanishes identically");
  const RF dc_over_c = c.diff(VarId::z) / c;
  ScalarOperator L;
  L.a1 = -dc_over_c;
  L.a0 = -a.diff(VarId::z) - a * a - b * c + a * dc_over_c;
  return L;
}

std::string ParamSample::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (VarId v : kParams) {
    if (!first) os << ", ";
    first = false;
    os << exact::LaxVars::names[static_cast<std::size_t>(v)] << "=" << (*this)[v].get_str();
  }
  return os.str();
}

namespace {

// Some signed sum of a nonempty subset of the exponents is an integer.
bool resonant(const ParamSample& s) {
  const Rational th[3] = {s[VarId::th0], s[VarId::th1], s[VarId::thinf]};
  for (int mask = 1; mask < 27; ++mask) {
    Rational sum;
    int m = mask;
    for (int i = 0; i < 3; ++i, m /= 3) {
      if (m % 3 == 1) sum += th[i];
      if (m % 3 == 2) sum -= th[i];
    }
    if (sum.get_den() == 1) return true;
  }
  return false;
}

}  // namespace

ParamSample random_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  ParamSample s;
  do {
    for (VarId v : kParams) {
      Rational r;
      do {
        r = exact::make_rational(num(rng), den(rng));
      } while ((v == VarId::t && sgn(r) == 0) || (v == VarId::q && (sgn(r) == 0 || r == 1)));
      s[v] = r;
    }
  } while (resonant(s));
  return s;
}

UPoly specialize_in_z(const RF& x, const ParamSample& s) {
  RF r = x;
  try {
    for (VarId v : kParams) r = r.subs(v, s[v]);
  } catch (const std::domain_error&) {
    throw Error(ErrorKind::DegenerateSample, "denominator vanishes at " + s.to_string());
  }
  if (!r.is_polynomial()) throw Error(ErrorKind::DegenerateSample, "entry is not polynomial in z");
  return UPoly::from_poly(r.num(), VarId::z);
}

UMat specialize_matrix(const Mat2S& m, const ParamSample& s) {
  UMat out;
  for (int e = 0; e < 4; ++e) out[e] = specialize_in_z(m.e[e], s);
  return out;
}

ApparentReport apparent_b_polynomial(const UMat& a_num, const QVec& v,
                                     const std::vector<Rational>& singular_points) {
  if (sgn(v[0]) == 0 && sgn(v[1]) == 0) throw Error(ErrorKind::NotCyclic, "zero vector");
  // A(z) v, then v ^ A(z) v.
  const UPoly w0 = a_num[0] * UPoly(v[0]) + a_num[1] * UPoly(v[1]);
  const UPoly w1 = a_num[2] * UPoly(v[0]) + a_num[3] * UPoly(v[1]);
  ApparentReport rep;
  rep.b_poly = UPoly(v[0]) * w1 - UPoly(v[1]) * w0;
  if (rep.b_poly.is_zero()) throw Error(ErrorKind::ZeroWedge, "v is an eigenvector of A(z) for every z");
  int count = rep.b_poly.degree();
  for (const auto& c : singular_points) count -= static_cast<int>(rep.b_poly.multiplicity(c));
  rep.apparent_points = count;
  return rep;
}

CyclicCount good_cyclic_count(const FamilySpec& fam, const ParamSample& sample) {
  if (!fam.has_lax) throw Error(ErrorKind::UsageError, fam.key + " carries no Lax data");
  const UMat a = specialize_matrix(fam.a_num, sample);
  const auto degenerate = [&](const std::string& why) {
    return Error(ErrorKind::DegenerateSample, why + " at " + sample.to_string());
  };

  std::vector<std::pair<PointKind, QVec>> cands;
  auto add_from = [&](PointKind pk, const Rational& m00, const Rational& m01, const Rational& m10,
                      const Rational& m11) {
    auto ev = eigenvectors(m00, m01, m10, m11);
    if (!ev) throw degenerate(std::string("leading matrix at ") + std::string(point_name(pk)) + " is not split");
    for (const auto& v : *ev) cands.emplace_back(pk, v);
  };

  for (const auto& c : fam.finite_singular_points) {
    const PointKind pk = sgn(c) == 0 ? PointKind::zero : PointKind::one;
    add_from(pk, entry_at(a, 0, c), entry_at(a, 1, c), entry_at(a, 2, c), entry_at(a, 3, c));
  }
  // At infinity the leading matrix is the top z-coefficient of A_num.
  int top = 0;
  for (const auto& x : a) top = std::max(top, x.degree());
  add_from(PointKind::infinity, a[0].coeff(top), a[1].coeff(top), a[2].coeff(top), a[3].coeff(top));

  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (parallel(cands[i].second, cands[j].second)) throw degenerate("coinciding candidates");

  CyclicCount out;
  out.sample = sample;
  out.attempts = 1;
  for (const auto& [pk, v] : cands) {
    ApparentReport rep;
    try {
      rep = apparent_b_polynomial(a, v, fam.finite_singular_points);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroWedge) throw;
      throw degenerate("candidate is a global eigenvector");
    }
    // Generic position: the wedge vanishes simply at the candidate's own finite point and nowhere else
    // among the singular points, and loses exactly one degree when the candidate sits at infinity.
    for (const auto& c : fam.finite_singular_points) {
      const PointKind at = sgn(c) == 0 ? PointKind::zero : PointKind::one;
      if (rep.b_poly.multiplicity(c) != (at == pk ? 1u : 0u)) throw degenerate("apparent point meets a singular point");
    }
    if (rep.b_poly.degree() != (pk == PointKind::infinity ? top - 1 : top))
      throw degenerate("apparent point escapes to infinity");
    const int n = rep.apparent_points;
    out.candidates.push_back({pk, v, n});
    if (n == 1) ++out.good;
  }
  return out;
}

CyclicCount good_cyclic_count(const FamilySpec& fam, std::uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  for (int k = 1; k <= max_attempts; ++k) {
    try {
      CyclicCount r = good_cyclic_count(fam, random_sample(rng()));
      r.attempts = k;
      return r;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateSample) throw;
    }
  }
  throw Error(ErrorKind::DegenerateSample, fam.key + ": no generic sample in " + std::to_string(max_attempts) +
                                               " attempts");
}

std::pair<RF, RF> recover_pq(const Mat2S& a_full, const RP& f_factor) {
  const RF& c = a_full(1, 0);
  if (c.is_zero()) throw Error(ErrorKind::NotCyclic, "lower-left entry vanishes identically");
  const RP& cn = c.num();
  if (cn.degree(VarId::z) != 1)
    throw Error(ErrorKind::MultipleZeros, "c(z) has " + std::to_string(cn.degree(VarId::z)) + " zeros");
  const RF lin(cn.coeff(VarId::z, 1));
  const RF con(cn.coeff(VarId::z, 0));
  const RF q = -con / lin;
  const ScalarOperator L = scalar_operator(a_full);
  const RF res = ((kZ - q) * L.a0).subs(VarId::z, q);
  return {q, RF(f_factor) * res};
}

std::pair<RF, RF> recover_pq(const FamilySpec& fam) {
  if (!fam.has_lax) throw Error(ErrorKind::UsageError, fam.key + " carries no Lax data");
  return recover_pq(fam.a_full(), fam.f_factor);
}

}  // namespace isomono
