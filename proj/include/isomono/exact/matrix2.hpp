#pragma once

#include <array>
#include <string>

namespace isomono::exact {

// 2x2 matrix over a ring T (rational functions or complex floats).
template <class T>
struct Mat2 {
  std::array<T, 4> e{};  // row-major: (0,0) (0,1) (1,0) (1,1)

  Mat2() : e{T(0), T(0), T(0), T(0)} {}
  Mat2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity() { return Mat2(T(1), T(0), T(0), T(1)); }
  static Mat2 diag(const T& a, const T& d) { return Mat2(a, T(0), T(0), d); }

  T& operator()(int i, int j) { return e[2 * i + j]; }
  const T& operator()(int i, int j) const { return e[2 * i + j]; }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return Mat2(a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]);
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2(a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]);
  }
  Mat2 operator-() const { return Mat2(-e[0], -e[1], -e[2], -e[3]); }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2(a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]);
  }
  friend Mat2 operator*(const T& s, const Mat2& a) {
    return Mat2(s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]);
  }
  Mat2& operator+=(const Mat2& b) { return *this = *this + b; }
  Mat2& operator-=(const Mat2& b) { return *this = *this - b; }

  T trace() const { return e[0] + e[3]; }
  T det() const { return e[0] * e[3] - e[1] * e[2]; }

  template <class F>
  Mat2 map(F&& f) const {
    return Mat2(f(e[0]), f(e[1]), f(e[2]), f(e[3]));
  }
};

// [a, b] = ab - ba
template <class T>
Mat2<T> commutator(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b - b * a;
}

}  // namespace isomono::exact
