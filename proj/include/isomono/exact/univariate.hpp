#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "isomono/exact/poly.hpp"
#include "isomono/exact/rational.hpp"

namespace isomono::exact {

// Dense univariate polynomial over Q, coefficients in increasing degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  UPoly(const Rational& c) : c_{c} { trim(); }  // NOLINT

  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  template <class Vars>
  static UPoly from_poly(const Poly<Vars>& p, typename Vars::Id v) {
    std::vector<Rational> c(p.degree(v) + 1);
    for (const auto& [m, k] : p.terms()) {
      if (m != var_monomial(index<Vars>(v), exponent(m, index<Vars>(v))))
        throw std::invalid_argument("polynomial is not univariate in the requested variable");
      c[exponent(m, index<Vars>(v))] += k;
    }
    return UPoly(std::move(c));
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }

  // Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> r = a.c_;
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    const Rational inv = 1 / b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Rational f = r[k + b.degree()] * inv;
      q[k] = f;
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) r[k + j] -= f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> r = c_;
    const Rational inv = 1 / lead();
    for (auto& x : r) x *= inv;
    return UPoly(std::move(r));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
  }

  // Multiplicity of x = a as a root.
  unsigned multiplicity(const Rational& a) const {
    if (is_zero()) throw std::domain_error("multiplicity in zero polynomial");
    unsigned k = 0;
    UPoly cur = *this;
    const UPoly lin({-a, Rational(1)});
    for (;;) {
      auto [q, r] = divmod(cur, lin);
      if (!r.is_zero()) return k;
      ++k;
      cur = q;
    }
  }

  std::string to_string(const char* var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& a);
// Rational roots of a (each listed once), found from numerical root
// approximations and confirmed by exact evaluation.
std::vector<Rational> rational_roots(const UPoly& a);
// Numerical roots via companion-matrix eigenvalues.
std::vector<std::complex<double>> numeric_roots(const UPoly& a);
// Best rational approximations to x with denominator at most max_den.
std::vector<Rational> rational_candidates(double x, long max_den);

}  // namespace isomono::exact
