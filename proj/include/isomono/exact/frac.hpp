#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isomono/exact/poly.hpp"

namespace isomono::exact {

// Rational function num / (product of den factors). Each factor is a
// non-constant primitive polynomial with positive leading coefficient;
// rational constants live in num. There is no multivariate gcd: common
// factors are removed only by trial division of num by the stored factors.
template <class Vars>
class Frac {
 public:
  using P = Poly<Vars>;
  using Id = typename Vars::Id;
  using Factor = std::pair<P, unsigned>;

  Frac() = default;
  Frac(long c) : num_(c) {}  // NOLINT
  Frac(const Rational& c) : num_(c) {}  // NOLINT
  Frac(P p) : num_(std::move(p)) {}  // NOLINT
  Frac(const P& num, const P& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    num_ = num;
    absorb_den(den, 1);
    reduce();
  }

  static Frac var(Id v) { return Frac(P::var(v)); }

  const P& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  P den() const {
    P d(1);
    for (const auto& [f, m] : den_) d *= f.pow(m);
    return d;
  }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  // Equality by cross-multiplication.
  friend bool equal(const Frac& a, const Frac& b) { return (a.num_ * b.den() - b.num_ * a.den()).is_zero(); }

  Frac operator-() const {
    Frac r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Frac operator+(const Frac& a, const Frac& b) { return add(a, b, false); }
  friend Frac operator-(const Frac& a, const Frac& b) { return add(a, b, true); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac();
    Frac r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, m] : b.den_) insert_factor(r.den_, f, m);
    r.reduce();
    return r;
  }
  friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }

  Frac& operator+=(const Frac& b) { return *this = *this + b; }
  Frac& operator-=(const Frac& b) { return *this = *this - b; }
  Frac& operator*=(const Frac& b) { return *this = *this * b; }
  Frac& operator/=(const Frac& b) { return *this = *this / b; }

  Frac inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    Frac r;
    r.num_ = P(1);
    for (const auto& [f, m] : den_) r.num_ *= f.pow(m);
    r.absorb_den(num_, 1);
    r.reduce();
    return r;
  }

  Frac pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Frac r(1), base = *this;
    unsigned k = static_cast<unsigned>(n);
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  // d(n/D) with D = prod f_i^m_i:
  //   (n' * prod f_i - n * sum m_i f_i' prod_{j != i} f_j) / (D * prod f_i)
  Frac diff(Id v) const {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < den_.size(); ++i)
      if (den_[i].first.depends_on(v)) live.push_back(i);
    if (live.empty()) {
      Frac r = *this;
      r.num_ = num_.diff(v);
      r.reduce();
      return r;
    }
    P prod(1);
    for (auto i : live) prod *= den_[i].first;
    P top = num_.diff(v) * prod;
    for (auto i : live) {
      P others(1);
      for (auto j : live)
        if (j != i) others *= den_[j].first;
      top -= num_ * den_[i].first.diff(v) * others * Rational(den_[i].second);
    }
    Frac r;
    r.num_ = std::move(top);
    r.den_ = den_;
    for (auto i : live) r.den_[i].second += 1;
    r.reduce();
    return r;
  }

  unsigned num_degree(Id v) const { return num_.degree(v); }
  bool depends_on(Id v) const {
    if (num_.depends_on(v)) return true;
    for (const auto& f : den_)
      if (f.first.depends_on(v)) return true;
    return false;
  }

  Frac subs(Id v, const Frac& value) const {
    Frac r = subs_poly(num_, v, value);
    for (const auto& [f, m] : den_) r /= subs_poly(f, v, value).pow(static_cast<int>(m));
    return r;
  }
  Frac subs(Id v, const Rational& value) const {
    Frac r(num_.subs(v, value));
    for (const auto& [f, m] : den_) {
      P fs = f.subs(v, value);
      if (fs.is_zero()) throw std::domain_error("denominator vanishes under substitution");
      r /= Frac(fs).pow(static_cast<int>(m));
    }
    return r;
  }

  template <class Scalar>
  Scalar eval(const std::vector<Scalar>& values) const {
    Scalar r = num_.template eval<Scalar>(values);
    for (const auto& [f, m] : den_) {
      Scalar d = f.template eval<Scalar>(values);
      for (unsigned k = 0; k < m; ++k) r /= d;
    }
    return r;
  }

  std::string to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string s = "(" + num_.to_string() + ")/(";
    bool first = true;
    for (const auto& [f, m] : den_) {
      if (!first) s += "*";
      first = false;
      s += "(" + f.to_string() + ")";
      if (m > 1) s += "^" + std::to_string(m);
    }
    return s + ")";
  }

 private:
  static Frac subs_poly(const P& p, Id v, const Frac& value) {
    auto cs = p.coefficients(v);
    Frac r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + Frac(cs[k]);
    return r;
  }

  // Multiply the denominator by d^m, moving constants and monomials out.
  void absorb_den(const P& d, unsigned m) {
    const Rational c = d.content() * (sgn(d.leading_coeff()) < 0 ? -1 : 1);
    const Rational cinv = 1 / c;
    for (unsigned k = 0; k < m; ++k) num_ = num_ * cinv;
    P prim = d * cinv;
    const Monomial g = prim.monomial_gcd();
    for (std::size_t i = 0; i < Vars::count; ++i) {
      const unsigned e = exponent(g, i);
      if (e) insert_factor(den_, P::var(static_cast<Id>(i)), e * m);
    }
    prim = prim.div_monomial(g);
    if (!prim.is_constant()) insert_factor(den_, prim, m);
  }

  static void insert_factor(std::vector<Factor>& den, const P& f, unsigned m) {
    for (auto& [g, k] : den)
      if (g == f) {
        k += m;
        return;
      }
    den.emplace_back(f, m);
  }

  // Cancel factors that divide the numerator.
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    std::vector<Factor> kept;
    for (auto& [f, m] : den_) {
      while (m > 0) {
        auto q = num_.divide(f);
        if (!q) break;
        num_ = std::move(*q);
        --m;
      }
      if (m > 0) kept.emplace_back(std::move(f), m);
    }
    den_ = std::move(kept);
  }

  static Frac add(const Frac& a, const Frac& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    // Common denominator: factors matched by equality, multiplicity = max.
    std::vector<Factor> common = a.den_;
    for (const auto& [f, m] : b.den_) {
      bool found = false;
      for (auto& [g, k] : common)
        if (g == f) {
          k = std::max(k, m);
          found = true;
          break;
        }
      if (!found) common.emplace_back(f, m);
    }
    auto cofactor = [&](const std::vector<Factor>& own) {
      P c(1);
      for (const auto& [g, k] : common) {
        unsigned have = 0;
        for (const auto& [f, m] : own)
          if (f == g) have = m;
        if (k > have) c *= g.pow(k - have);
      }
      return c;
    };
    Frac r;
    P na = a.num_ * cofactor(a.den_);
    P nb = b.num_ * cofactor(b.den_);
    r.num_ = subtract ? na - nb : na + nb;
    r.den_ = std::move(common);
    r.reduce();
    return r;
  }

  P num_;
  std::vector<Factor> den_;
};

template <class Vars>
bool is_zero(const Frac<Vars>& f) {
  return f.is_zero();
}

}  // namespace isomono::exact
