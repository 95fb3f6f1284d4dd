#include <algorithm>
#include <deque>

#include "isomono/cubics.hpp"

namespace isomono {

namespace {

using V = CubicVarId;
using exact::Monomial;

CP exact_div(const CP& a, const CP& b) {
  auto q = a.divide(b);
  if (!q) throw std::logic_error("inexact division in fraction-free determinant");
  return *q;
}

// Fraction-free determinant with row pivoting.
CP bareiss_det(std::vector<std::vector<CP>> m) {
  const std::size_t n = m.size();
  if (n == 0) return CP(1);
  CP prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return CP();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Monomial mono_lcm(Monomial a, Monomial b) { return exact::mono_mul(a, exact::mono_div(b, exact::mono_gcd(a, b))); }

CP monic(const CP& p) { return p * (Rational(1) / p.leading_coeff()); }

CP normal_form(CP p, const std::vector<CP>& G) {
  CP rem;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    bool reduced = false;
    for (const auto& g : G) {
      if (!exact::mono_divides(g.leading_monomial(), lm)) continue;
      p = p - g.times_term(exact::mono_div(lm, g.leading_monomial()), p.leading_coeff() / g.leading_coeff());
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem + CP::monomial(lm, p.leading_coeff());
      p = p - CP::monomial(lm, p.leading_coeff());
    }
  }
  return rem;
}

CP s_poly(const CP& f, const CP& g) {
  const Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(exact::mono_div(l, f.leading_monomial()), Rational(1) / f.leading_coeff()) -
         g.times_term(exact::mono_div(l, g.leading_monomial()), Rational(1) / g.leading_coeff());
}

bool is_unit(const CP& p) { return !p.is_zero() && p.is_constant(); }

}  // namespace

CP resultant(const CP& a, const CP& b, CubicVarId v) {
  if (a.is_zero() || b.is_zero()) return CP();
  const unsigned m = a.degree(v), n = b.degree(v);
  if (m == 0) return a.pow(n);
  if (n == 0) return b.pow(m);
  const auto ca = a.coefficients(v), cb = b.coefficients(v);  // index = power
  const std::size_t N = m + n;
  std::vector<std::vector<CP>> S(N, std::vector<CP>(N));
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned k = 0; k <= m; ++k) S[i][i + (m - k)] = ca[k];
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned k = 0; k <= n; ++k) S[n + i][i + (n - k)] = cb[k];
  return bareiss_det(std::move(S));
}

std::vector<CP> groebner_basis(std::vector<CP> gens) {
  std::vector<CP> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(monic(g));
  for (const auto& g : G)
    if (is_unit(g)) return {CP(1)};
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    // Coprime leading monomials reduce to zero.
    if (exact::mono_gcd(G[i].leading_monomial(), G[j].leading_monomial()) == 0) continue;
    CP r = normal_form(s_poly(G[i], G[j]), G);
    if (r.is_zero()) continue;
    r = monic(r);
    if (is_unit(r)) return {CP(1)};
    G.push_back(r);
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // Minimal, then reduced.
  std::vector<CP> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !exact::mono_divides(G[j].leading_monomial(), G[i].leading_monomial())) continue;
      redundant = G[j].leading_monomial() != G[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CP> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const CP lead = CP::monomial(minimal[i].leading_monomial(), Rational(1));
    minimal[i] = lead + normal_form(minimal[i] - lead, others);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const CP& a, const CP& b) { return a.leading_monomial() > b.leading_monomial(); });
  return minimal;
}

SmoothnessResult smoothness_probe(FamilyId id, const ParamValues& values) {
  const CP f = fibre_equation(surface(id), values);
  std::vector<CP> system{f, f.diff(V::x1), f.diff(V::x2), f.diff(V::x3)};

  // Successive resultants stay inside the ideal; a nonzero constant certifies
  // that the system has no common zero.
  std::vector<CP> cur = system;
  for (V v : {V::x3, V::x2, V::x1}) {
    std::vector<CP> with, without;
    for (const auto& p : cur) {
      if (p.is_zero()) continue;
      if (is_unit(p)) return {true, "resultant"};
      (p.degree(v) > 0 ? with : without).push_back(p);
    }
    if (with.size() > 1) {
      const auto piv = std::min_element(with.begin(), with.end(),
                                        [v](const CP& a, const CP& b) { return a.degree(v) < b.degree(v); });
      for (auto it = with.begin(); it != with.end(); ++it)
        if (it != piv) without.push_back(resultant(*piv, *it, v));
    }
    cur = std::move(without);
  }
  for (const auto& p : cur)
    if (is_unit(p)) return {true, "resultant"};

  // Elimination did not certify; decide exactly.
  const auto gb = groebner_basis(system);
  const bool unit = gb.size() == 1 && is_unit(gb.front());
  return {unit, "groebner"};
}

}  // namespace isomono
