#include "isomono/exact/univariate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isomono::exact {

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << (sgn(c_[i]) < 0 ? " - " : " + ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    Rational a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.get_str() << (i ? "*" : "");
    if (i) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a;
  UPoly g = gcd(a, a.derivative());
  return divmod(a, g).first.monic();
}

std::vector<std::complex<double>> numeric_roots(const UPoly& a) {
  const int n = a.degree();
  std::vector<std::complex<double>> out;
  if (n <= 0) return out;
  UPoly m = a.monic();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -m.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

std::vector<Rational> rational_candidates(double x, long max_den) {
  std::vector<Rational> out;
  if (!std::isfinite(x)) return out;
  // Continued-fraction convergents.
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double fl = std::floor(r);
    if (std::abs(fl) > 1e15) break;
    Integer a(fl);
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    Rational c(h2, k2);
    c.canonicalize();
    out.push_back(c);
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - fl;
    if (std::abs(frac) < 1e-13) break;
    r = 1.0 / frac;
  }
  return out;
}

std::vector<Rational> rational_roots(const UPoly& a) {
  std::vector<Rational> out;
  if (a.degree() <= 0) return out;
  UPoly sf = squarefree_part(a);
  // Peel off the exact root 0 first.
  if (sgn(sf.coeff(0)) == 0) {
    out.emplace_back(0);
    sf = divmod(sf, UPoly::x()).first;
  }
  for (const auto& z : numeric_roots(sf)) {
    if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z.real()))) continue;
    for (const auto& c : rational_candidates(z.real(), 1000000000L)) {
      if (std::abs(c.get_d() - z.real()) > 1e-7 * (1 + std::abs(z.real()))) continue;
      if (sgn(sf.eval(c)) == 0) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isomono::exact
