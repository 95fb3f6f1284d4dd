#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "isomono/exact/monomial.hpp"
#include "isomono/exact/rational.hpp"
#include "isomono/exact/vars.hpp"

namespace isomono::exact {

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// sorted by decreasing monomial (lex order) with no zero coefficients.
template <class Vars>
class Poly {
 public:
  using Id = typename Vars::Id;
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(long c) { if (c != 0) terms_.emplace_back(0, Rational(c)); }  // NOLINT
  Poly(const Rational& c) { if (sgn(c) != 0) terms_.emplace_back(0, c); }  // NOLINT

  static Poly var(Id v, unsigned e = 1) {
    Poly r;
    r.terms_.emplace_back(var_monomial(index<Vars>(v), e), Rational(1));
    return r;
  }
  static Poly monomial(Monomial m, const Rational& c) {
    Poly r;
    if (sgn(c) != 0) r.terms_.emplace_back(m, c);
    return r;
  }
  // Terms may be unsorted and contain duplicates.
  static Poly from_terms(std::vector<Term> terms) {
    Poly r;
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rational constant_value() const {
    if (terms_.empty() || terms_.back().first != 0) return Rational(0);
    return terms_.back().second;
  }
  Monomial leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.terms_.size() == 1 && a.terms_[0].first == 0) return b * a.terms_[0].second;
    if (b.terms_.size() == 1 && b.terms_[0].first == 0) return a * b.terms_[0].second;
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.emplace_back(mono_mul(ma, mb), ca * cb);
    return from_terms(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Rational& c) {
    if (sgn(c) == 0) return Poly();
    Poly r = a;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly pow(unsigned n) const {
    Poly r(1), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return r;
  }

  Poly diff(Id v) const {
    const std::size_t i = index<Vars>(v);
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      const unsigned e = exponent(m, i);
      if (e == 0) continue;
      out.emplace_back(m - var_monomial(i, 1), c * e);
    }
    // Lowering one exponent preserves relative lex order.
    Poly r;
    r.terms_ = std::move(out);
    return r;
  }

  unsigned degree(Id v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, exponent(t.first, index<Vars>(v)));
    return d;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, exact::total_degree(t.first));
    return d;
  }
  bool depends_on(Id v) const { return degree(v) > 0; }

  // Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coeff(Id v, unsigned k) const {
    const std::size_t i = index<Vars>(v);
    std::vector<Term> out;
    for (const auto& [m, c] : terms_)
      if (exponent(m, i) == k) out.emplace_back(with_exponent(m, i, 0), c);
    // All selected terms share exponent k in v, so order is preserved.
    Poly r;
    r.terms_ = std::move(out);
    return r;
  }
  std::vector<Poly> coefficients(Id v) const {
    std::vector<Poly> out(degree(v) + 1);
    const std::size_t i = index<Vars>(v);
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& [m, c] : terms_) buckets[exponent(m, i)].emplace_back(with_exponent(m, i, 0), c);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = from_terms(std::move(buckets[k]));
    return out;
  }

  // Substitute a polynomial for one variable.
  Poly subs(Id v, const Poly& value) const {
    auto cs = coefficients(v);
    Poly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
  }
  Poly subs(Id v, const Rational& value) const {
    const std::size_t i = index<Vars>(v);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      const unsigned e = exponent(m, i);
      Rational f = c;
      if (e) {
        Rational pw;
        mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
        mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
        f *= pw;
      }
      out.emplace_back(with_exponent(m, i, 0), f);
    }
    return from_terms(std::move(out));
  }

  template <class Scalar>
  Scalar eval(const std::vector<Scalar>& values) const {
    Scalar acc(0);
    for (const auto& [m, c] : terms_) {
      Scalar term = to_scalar<Scalar>(c);
      for (std::size_t i = 0; i < Vars::count; ++i) {
        const unsigned e = exponent(m, i);
        for (unsigned k = 0; k < e; ++k) term *= values[i];
      }
      acc += term;
    }
    return acc;
  }

  // Positive rational c with this = c * (integer polynomial with coprime
  // coefficients); the sign is absorbed into the primitive part.
  Rational content() const {
    if (terms_.empty()) return Rational(1);
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    return c;
  }
  // Primitive part normalized to a positive leading coefficient.
  Poly primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (sgn(leading_coeff()) < 0) c = -c;
    Rational inv = 1 / c;
    return *this * inv;
  }
  Monomial monomial_gcd() const {
    if (terms_.empty()) return 0;
    Monomial g = terms_[0].first;
    for (const auto& t : terms_) g = mono_gcd(g, t.first);
    return g;
  }
  Poly div_monomial(Monomial d) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.first = mono_div(t.first, d);
    return r;
  }

  // Exact division; nullopt if b does not divide this.
  std::optional<Poly> divide(const Poly& b) const {
    if (b.is_zero()) return std::nullopt;
    if (is_zero()) return Poly();
    if (b.is_constant()) return *this * (1 / b.constant_value());
    for (std::size_t i = 0; i < Vars::count; ++i) {
      const Id v = static_cast<Id>(i);
      if (b.degree(v) > degree(v)) return std::nullopt;
    }
    std::vector<Term> quot;
    Poly rem = *this;
    const Monomial lb = b.leading_monomial();
    const Rational inv = 1 / b.leading_coeff();
    while (!rem.is_zero()) {
      const Monomial lr = rem.leading_monomial();
      if (!mono_divides(lb, lr)) return std::nullopt;
      const Monomial qm = mono_div(lr, lb);
      const Rational qc = rem.leading_coeff() * inv;
      quot.emplace_back(qm, qc);
      rem = rem - b.times_term(qm, qc);
    }
    Poly q;
    q.terms_ = std::move(quot);  // generated in decreasing order
    return q;
  }

  Poly times_term(Monomial m, const Rational& c) const {
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.first = mono_mul(t.first, m);
      t.second *= c;
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = abs(c);
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = (a == 1);
      if (!unit || m == 0) {
        os << a.get_str();
        if (m != 0) os << "*";
      }
      bool firstv = true;
      for (std::size_t i = 0; i < Vars::count; ++i) {
        const unsigned e = exponent(m, i);
        if (!e) continue;
        if (!firstv) os << "*";
        firstv = false;
        os << Vars::names[i];
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  template <class Scalar>
  static Scalar to_scalar(const Rational& c) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      return c;
    } else {
      return Scalar(c.get_d());
    }
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first > ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first > ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
        ++ib;
      } else {
        Rational c = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
        if (sgn(c) != 0) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace isomono::exact
