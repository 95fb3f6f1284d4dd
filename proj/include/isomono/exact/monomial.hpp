#pragma once

#include <cstdint>
#include <stdexcept>

namespace isomono::exact {

// Exponent vector packed one byte per variable. Variable 0 occupies the most
// significant byte, so integer order on the packed word is lex order.
using Monomial = std::uint64_t;

inline constexpr int kMaxVars = 8;
inline constexpr Monomial kHighBits = 0x8080808080808080ULL;

constexpr int shift_of(std::size_t var) { return 8 * (kMaxVars - 1 - static_cast<int>(var)); }

constexpr unsigned exponent(Monomial m, std::size_t var) {
  return static_cast<unsigned>((m >> shift_of(var)) & 0xFFu);
}

inline Monomial with_exponent(Monomial m, std::size_t var, unsigned e) {
  if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
  const int s = shift_of(var);
  return (m & ~(Monomial{0xFF} << s)) | (Monomial{e} << s);
}

constexpr Monomial var_monomial(std::size_t var, unsigned e = 1) {
  return Monomial{e} << shift_of(var);
}

// Bytewise addition; throws if any byte overflows.
inline Monomial mono_mul(Monomial a, Monomial b) {
  const Monomial low = (a & ~kHighBits) + (b & ~kHighBits);
  const Monomial sum = low ^ ((a ^ b) & kHighBits);
  const Monomial carry = ((a & b) | ((a | b) & ~sum)) & kHighBits;
  if (carry) throw std::overflow_error("monomial exponent overflow");
  return sum;
}

inline bool mono_divides(Monomial d, Monomial m) {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(d, i) > exponent(m, i)) return false;
  return true;
}

// Caller guarantees mono_divides(d, m).
constexpr Monomial mono_div(Monomial m, Monomial d) { return m - d; }

inline Monomial mono_gcd(Monomial a, Monomial b) {
  Monomial r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    const unsigned e = exponent(a, i) < exponent(b, i) ? exponent(a, i) : exponent(b, i);
    r |= var_monomial(i, e);
  }
  return r;
}

inline unsigned total_degree(Monomial m) {
  unsigned d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += exponent(m, i);
  return d;
}

}  // namespace isomono::exact
