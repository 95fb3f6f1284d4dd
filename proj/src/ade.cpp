#include "isomono/cubics.hpp"

namespace isomono {

namespace {

using V = CubicVarId;
constexpr V kX[3] = {V::x1, V::x2, V::x3};
constexpr V kTmp[3] = {V::s1, V::s2, V::s3};

// Highest order kept in the one-variable residual.
constexpr int kMaxOrder = 8;
constexpr int kTrunc = kMaxOrder + 1;

using Series = std::vector<Rational>;  // truncated power series in w, length kTrunc + 1

Series mul(const Series& a, const Series& b) {
  Series r(kTrunc + 1);
  for (int i = 0; i <= kTrunc; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= kTrunc; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Evaluates g(U(w), V(w), w) where g is a polynomial in x1, x2, x3.
Series compose(const CP& g, const Series& U, const Series& Vs) {
  std::vector<Series> pu{Series(kTrunc + 1)}, pv{Series(kTrunc + 1)};
  pu[0][0] = 1;
  pv[0][0] = 1;
  Series out(kTrunc + 1);
  for (const auto& [m, c] : g.terms()) {
    const unsigned a = exact::exponent(m, 0), b = exact::exponent(m, 1), e = exact::exponent(m, 2);
    if (e > static_cast<unsigned>(kTrunc)) continue;
    while (pu.size() <= a) pu.push_back(mul(pu.back(), U));
    while (pv.size() <= b) pv.push_back(mul(pv.back(), Vs));
    const Series t = mul(pu[a], pv[b]);
    for (int i = 0; i + static_cast<int>(e) <= kTrunc; ++i) out[i + e] += c * t[i];
  }
  return out;
}

// Linear substitution x_i -> sum_j M[i][j] y_j, with y renamed back to x.
CP linear_change(const CP& f, const std::array<std::array<Rational, 3>, 3>& M) {
  CP g = f;
  for (int i = 0; i < 3; ++i) {
    CP form;
    for (int j = 0; j < 3; ++j) form = form + M[i][j] * CP::var(kTmp[j]);
    g = g.subs(kX[i], form);
  }
  for (int j = 0; j < 3; ++j) g = g.subs(kTmp[j], CP::var(kX[j]));
  return g;
}

Rational coeff_of(const CP& f, unsigned a, unsigned b, unsigned c) {
  return f.coeff(V::x1, a).coeff(V::x2, b).coeff(V::x3, c).constant_value();
}

int rank3(std::array<std::array<Rational, 3>, 3> h) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (sgn(h[r][col]) != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(h[piv], h[rank]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || sgn(h[r][col]) == 0) continue;
      const Rational k = h[r][col] / h[rank][col];
      for (int c = 0; c < 3; ++c) h[r][c] -= k * h[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int classify_singularity(const CP& f, const Point3& point) {
  for (const auto& [m, c] : f.terms())
    for (int i = 3; i < static_cast<int>(CubicVars::count); ++i)
      if (exact::exponent(m, i) != 0) throw Error(ErrorKind::DomainViolation, "equation still has parameters");

  // Move the point to the origin.
  CP g = f;
  for (int i = 0; i < 3; ++i) g = g.subs(kX[i], CP::var(kX[i]) + CP(point[i]));
  if (sgn(coeff_of(g, 0, 0, 0)) != 0 || sgn(coeff_of(g, 1, 0, 0)) != 0 || sgn(coeff_of(g, 0, 1, 0)) != 0 ||
      sgn(coeff_of(g, 0, 0, 1)) != 0)
    throw Error(ErrorKind::DomainViolation, "not a singular point");

  std::array<std::array<Rational, 3>, 3> H{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::array<unsigned, 3> e{0, 0, 0};
      ++e[i];
      ++e[j];
      const Rational c = coeff_of(g, e[0], e[1], e[2]);
      H[i][j] = i == j ? 2 * c : c;
    }
  const int r = rank3(H);
  if (r == 3) return 1;
  if (r < 2) throw Error(ErrorKind::NotADE, "Hessian rank " + std::to_string(r));

  // Kernel of a rank-2 symmetric matrix: cross product of two independent rows.
  std::array<Rational, 3> k{};
  for (int a = 0; a < 3 && sgn(k[0]) == 0 && sgn(k[1]) == 0 && sgn(k[2]) == 0; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const auto& x = H[a];
      const auto& y = H[b];
      k = {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
      if (sgn(k[0]) != 0 || sgn(k[1]) != 0 || sgn(k[2]) != 0) break;
    }
  // Complement spanned by the two unit vectors other than one where k is nonzero.
  int l = 0;
  while (sgn(k[l]) == 0) ++l;
  const int i0 = l == 0 ? 1 : 0;
  const int j0 = l == 2 ? 1 : 2;
  std::array<std::array<Rational, 3>, 3> M{};
  M[i0][0] = 1;
  M[j0][1] = 1;
  for (int i = 0; i < 3; ++i) M[i][2] = k[i];
  const CP h = linear_change(g, M);

  // Quadratic part in (u, v) is [[2a, b], [b, 2c]] / 2; w does not appear in it.
  const Rational a2 = 2 * coeff_of(h, 2, 0, 0), bb = coeff_of(h, 1, 1, 0), c2 = 2 * coeff_of(h, 0, 2, 0);
  const Rational det = a2 * c2 - bb * bb;
  if (sgn(det) == 0) throw std::logic_error("complement of the kernel is degenerate");

  // Critical point (u(w), v(w)) of h in (u, v) by fixed-point iteration:
  // [u, v] = -Q^{-1} (grad h - Q [u, v]).
  const CP hu = h.diff(V::x1), hv = h.diff(V::x2);
  const CP nu = hu - a2 * CP::var(V::x1) - bb * CP::var(V::x2);
  const CP nv = hv - bb * CP::var(V::x1) - c2 * CP::var(V::x2);
  Series U(kTrunc + 1), W(kTrunc + 1);
  for (int it = 0; it <= kTrunc + 1; ++it) {
    const Series su = compose(nu, U, W), sv = compose(nv, U, W);
    Series U2(kTrunc + 1), W2(kTrunc + 1);
    for (int i = 0; i <= kTrunc; ++i) {
      U2[i] = -(c2 * su[i] - bb * sv[i]) / det;
      W2[i] = -(-bb * su[i] + a2 * sv[i]) / det;
    }
    U = std::move(U2);
    W = std::move(W2);
  }
  const Series res = compose(h, U, W);
  for (int m = 0; m <= kMaxOrder; ++m)
    if (sgn(res[m]) != 0) {
      if (m < 3) throw std::logic_error("residual of order below 3");
      return m - 1;
    }
  throw Error(ErrorKind::NotIsolated, "residual vanishes to order > " + std::to_string(kMaxOrder));
}

}  // namespace isomono
