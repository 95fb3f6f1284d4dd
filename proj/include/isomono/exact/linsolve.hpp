#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "isomono/errors.hpp"
#include "isomono/exact/frac.hpp"

namespace isomono::exact {

// Clear the denominators of a row: returns polynomials proportional to the
// entries with a shared (equality-matched) common denominator.
template <class Vars>
std::vector<Poly<Vars>> clear_row(const std::vector<Frac<Vars>>& row) {
  using P = Poly<Vars>;
  std::vector<std::pair<P, unsigned>> common;
  for (const auto& x : row)
    for (const auto& [f, m] : x.den_factors()) {
      bool found = false;
      for (auto& [g, k] : common)
        if (g == f) {
          k = std::max(k, m);
          found = true;
        }
      if (!found) common.emplace_back(f, m);
    }
  std::vector<P> out;
  out.reserve(row.size());
  for (const auto& x : row) {
    P c = x.num();
    for (const auto& [g, k] : common) {
      unsigned have = 0;
      for (const auto& [f, m] : x.den_factors())
        if (f == g) have = m;
      if (k > have) c *= g.pow(k - have);
    }
    out.push_back(std::move(c));
  }
  // Remove the row content so that entries stay small.
  Integer g = 0, l = 1;
  for (const auto& p : out)
    if (!p.is_zero()) {
      Rational c = p.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
  if (g != 0) {
    Rational s(l, g);
    s.canonicalize();
    for (auto& p : out) p = p * s;
  }
  return out;
}

struct LinsolveStats {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t max_pivot_terms = 0;
};

// Solve M x = rhs for the unique x, by fraction-free elimination with row
// pivoting on the entry with the fewest terms. Overdetermined systems are
// accepted when consistent. The solution is checked against every row.
template <class Vars>
std::vector<Frac<Vars>> linsolve_fraction_free(const std::vector<std::vector<Frac<Vars>>>& M,
                                               const std::vector<Frac<Vars>>& rhs,
                                               LinsolveStats* stats = nullptr) {
  using P = Poly<Vars>;
  using F = Frac<Vars>;
  const std::size_t m = M.size();
  if (rhs.size() != m) throw std::invalid_argument("rhs size mismatch");
  if (m == 0) return {};
  const std::size_t n = M[0].size();
  if (m < n) throw Error(ErrorKind::SingularSystem, "fewer equations than unknowns");

  std::vector<std::vector<P>> A;
  A.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (M[i].size() != n) throw std::invalid_argument("ragged matrix");
    std::vector<F> row = M[i];
    row.push_back(rhs[i]);
    A.push_back(clear_row(row));
  }

  P prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = m;
    for (std::size_t r = k; r < m; ++r) {
      if (A[r][k].is_zero()) continue;
      if (best == m) {
        best = r;
        continue;
      }
      const auto& a = A[r][k];
      const auto& b = A[best][k];
      if (a.size() < b.size() || (a.size() == b.size() && a.total_degree() < b.total_degree())) best = r;
    }
    if (best == m)
      throw Error(ErrorKind::SingularSystem, "no pivot in column " + std::to_string(k));
    std::swap(A[k], A[best]);
    if (stats) stats->max_pivot_terms = std::max(stats->max_pivot_terms, A[k][k].size());
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        P v = A[k][k] * A[i][j] - A[i][k] * A[k][j];
        auto q = v.divide(prev);
        if (!q) throw std::logic_error("fraction-free step lost exactness");
        A[i][j] = std::move(*q);
      }
      A[i][k] = P();
    }
    prev = A[k][k];
  }
  for (std::size_t i = n; i < m; ++i)
    if (!A[i][n].is_zero())
      throw Error(ErrorKind::InconsistentSystem, "row " + std::to_string(i) + " is inconsistent");

  std::vector<F> x(n);
  for (std::size_t k = n; k-- > 0;) {
    F acc(A[k][n]);
    for (std::size_t j = k + 1; j < n; ++j)
      if (!A[k][j].is_zero()) acc -= F(A[k][j]) * x[j];
    x[k] = acc / F(A[k][k]);
  }

  for (std::size_t i = 0; i < m; ++i) {
    F r = -rhs[i];
    for (std::size_t j = 0; j < n; ++j)
      if (!M[i][j].is_zero()) r += M[i][j] * x[j];
    if (!r.is_zero()) throw std::logic_error("linear solve failed its back-substitution check");
  }
  if (stats) {
    stats->rows = m;
    stats->cols = n;
  }
  return x;
}

}  // namespace isomono::exact
