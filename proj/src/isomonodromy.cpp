#include "isomono/isomonodromy.hpp"

#include <algorithm>

#include "isomono/exact/linsolve.hpp"

namespace isomono {

namespace {

const RF kZ = RF::var(VarId::z);

Mat2S diff(const Mat2S& m, VarId v) {
  return m.map([v](const RF& x) { return x.diff(v); });
}

Mat2S unit(int e) {
  Mat2S u;
  u.e[e] = RF(1);
  return u;
}

// Multiplicity of the factor z in the denominator.
unsigned z_pole_order(const RF& x) {
  unsigned m = 0;
  const RP z = RP::var(VarId::z);
  for (const auto& [fac, k] : x.den_factors()) {
    if (fac == z) m = std::max(m, k);
    else if (fac.depends_on(VarId::z))
      throw std::logic_error("unexpected z-dependent denominator " + fac.to_string());
  }
  return m;
}

// Coefficient of z^j of a rational function whose denominator is free of z.
RF z_coeff(const RF& x, unsigned j) {
  return RF(x.num().coeff(VarId::z, j)) / RF(x.den());
}

void require_lax(const FamilySpec& fam) {
  if (!fam.has_lax) throw Error(ErrorKind::UsageError, fam.key + " carries no Lax data");
}

}  // namespace

Mat2S DeformationResult::b_full() const {
  Mat2S b;
  for (const auto& [k, m] : b_terms) b += kZ.pow(k) * m;
  return b;
}

bool is_zero_matrix(const Mat2S& m) {
  return std::all_of(m.e.begin(), m.e.end(), [](const RF& x) { return x.is_zero(); });
}

RF total_t_derivative(const RF& expr, const RF& qprime, const RF& pprime) {
  return expr.diff(VarId::t) + expr.diff(VarId::q) * qprime + expr.diff(VarId::p) * pprime;
}

Mat2S zero_curvature_residual(const FamilySpec& fam, const Mat2S& b, const RF& qprime,
                              const RF& pprime) {
  require_lax(fam);
  const Mat2S a = fam.a_full();
  Mat2S dadt = a.map([&](const RF& x) { return total_t_derivative(x, qprime, pprime); });
  return dadt - diff(b, VarId::z) - commutator(a, b);
}

Mat2S verify_zero_curvature(const FamilySpec& fam) {
  return zero_curvature_residual(fam, fam.b_full(), fam.qprime, fam.pprime);
}

DeformationResult derive_deformation(const FamilySpec& fam) {
  require_lax(fam);
  const std::vector<int> powers = fam.b_powers();
  const RF w(fam.weight);
  const Mat2S& an = fam.a_num;

  // Identity multiplied by the weight:
  //   A_t + A_p p' + A_q q' - w dB/dz - [A_num, B] = 0
  // Each unknown contributes a matrix; the constant part is A_t.
  std::vector<Mat2S> contrib;
  for (int k : powers)
    for (int e = 0; e < 4; ++e) {
      Mat2S zk = kZ.pow(k) * unit(e);
      Mat2S dz = (RF(k) * kZ.pow(k - 1)) * unit(e);
      contrib.push_back(-(w * dz) - commutator(an, zk));
    }
  contrib.push_back(diff(an, VarId::q));
  contrib.push_back(diff(an, VarId::p));
  Mat2S constant = diff(an, VarId::t);

  unsigned shift = 0;
  for (const auto& m : contrib)
    for (const auto& x : m.e) shift = std::max(shift, z_pole_order(x));
  const RF zs = kZ.pow(static_cast<int>(shift));
  for (auto& m : contrib) m = zs * m;
  constant = zs * constant;

  unsigned top = 0;
  auto track = [&](const Mat2S& m) {
    for (const auto& x : m.e) top = std::max(top, x.num().degree(VarId::z));
  };
  for (const auto& m : contrib) track(m);
  track(constant);

  const std::size_t n = contrib.size();
  std::vector<std::vector<RF>> rows;
  std::vector<RF> rhs;
  for (int e = 0; e < 4; ++e)
    for (unsigned j = 0; j <= top; ++j) {
      std::vector<RF> row(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = z_coeff(contrib[i].e[e], j);
        any = any || !row[i].is_zero();
      }
      RF r = -z_coeff(constant.e[e], j);
      if (!any && r.is_zero()) continue;
      if (!any) throw Error(ErrorKind::InconsistentSystem, "equation without unknowns is not satisfied");
      rows.push_back(std::move(row));
      rhs.push_back(std::move(r));
    }
  // Tracelessness of each coefficient of B.
  for (std::size_t t = 0; t < powers.size(); ++t) {
    std::vector<RF> row(n);
    row[4 * t] = RF(1);
    row[4 * t + 3] = RF(1);
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }

  auto x = exact::linsolve_fraction_free(rows, rhs);

  DeformationResult res;
  for (std::size_t t = 0; t < powers.size(); ++t)
    res.b_terms[powers[t]] = Mat2S(x[4 * t], x[4 * t + 1], x[4 * t + 2], x[4 * t + 3]);
  res.qprime = x[n - 2];
  res.pprime = x[n - 1];
  res.equations = rows.size();
  res.unknowns = n;
  res.residual = zero_curvature_residual(fam, res.b_full(), res.qprime, res.pprime);
  if (!is_zero_matrix(res.residual)) throw std::logic_error("derived deformation leaves a residual");
  return res;
}

HamiltonianCheck verify_hamiltonian(const FamilySpec& fam) {
  require_lax(fam);
  HamiltonianCheck c;
  const RF F(fam.f_factor);
  const RF& h = fam.hamiltonian;
  c.pprime_residual = fam.pprime - F * h.diff(VarId::q);
  c.qprime_residual = fam.qprime + F * h.diff(VarId::p);
  for (const auto& alt : fam.hamiltonian_alternates) c.alternates_agree = c.alternates_agree && equal(alt, h);
  return c;
}

SecondOrderCheck verify_second_order(const FamilySpec& fam) {
  require_lax(fam);
  const RF& qp = fam.qprime;
  if (qp.num().degree(VarId::p) > 1 ||
      std::any_of(qp.den_factors().begin(), qp.den_factors().end(),
                  [](const auto& fm) { return fm.first.depends_on(VarId::p); }))
    throw Error(ErrorKind::NotAffineInP, fam.key);
  const RF den(qp.den());
  const RF slope = RF(qp.num().coeff(VarId::p, 1)) / den;
  const RF offset = RF(qp.num().coeff(VarId::p, 0)) / den;
  if (slope.is_zero()) throw Error(ErrorKind::NotAffineInP, fam.key + ": q' does not involve p");
  const RF p_of_qdot = (RF::var(VarId::qdot) - offset) / slope;

  SecondOrderCheck c;
  c.derived = total_t_derivative(qp, qp, fam.pprime).subs(VarId::p, p_of_qdot);
  c.residual = c.derived - fam.second_order;
  return c;
}

RF hamiltonian_drift_residual(const FamilySpec& fam) {
  require_lax(fam);
  const RF& h = fam.hamiltonian;
  return total_t_derivative(h, fam.qprime, fam.pprime) - h.diff(VarId::t);
}

PoleBoundReport check_pole_bounds(const FamilySpec& fam) {
  PoleBoundReport rep;
  if (!fam.has_lax) return rep;
  const auto powers = fam.b_powers();
  const int kmin = *std::min_element(powers.begin(), powers.end());
  const int kmax = *std::max_element(powers.begin(), powers.end());

  // Lower bound on ord_c(B) for a singular point with Katz invariant r.
  auto bound = [&](PointKind pk, const std::optional<Rational>& r) -> int {
    if (!r || sgn(*r) == 0) return 0;
    bool tdep = false;
    for (const auto& ex : fam.exponents)
      if (ex.point == pk) tdep = ex.leading_depends_on_t;
    if (r->get_den() == 1) {
      const int ri = static_cast<int>(r->get_num().get_si());
      return tdep ? -ri : -ri + 1;
    }
    const Rational half_less = *r - Rational(1, 2);
    const int m = static_cast<int>(half_less.get_num().get_si());
    return -m - 1;
  };
  const int b0 = bound(PointKind::zero, fam.katz.r[0]);
  const int binf = bound(PointKind::infinity, fam.katz.r[2]);
  // ord_0(z^k) = k, ord_inf(z^k) = -k.
  if (kmin < b0) {
    rep.ok = false;
    rep.notes.push_back("power z^" + std::to_string(kmin) + " violates ord_0 >= " + std::to_string(b0));
  }
  if (-kmax < binf) {
    rep.ok = false;
    rep.notes.push_back("power z^" + std::to_string(kmax) + " violates ord_inf >= " + std::to_string(binf));
  }
  rep.notes.push_back("ord_0 bound " + std::to_string(b0) + ", ord_inf bound " + std::to_string(binf));
  return rep;
}

}  // namespace isomono
