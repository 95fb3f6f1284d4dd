#pragma once

#include <gmpxx.h>

#include <string>

namespace isomono::exact {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Exact square root of a non-negative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  Integer n = r.get_num(), d = r.get_den();
  Integer sn, sd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

}  // namespace isomono::exact
