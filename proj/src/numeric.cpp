#include "lerch/numeric.hpp"

#include <cstdio>

namespace lerch {

void SeriesParams::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw DomainError("tolerance must be a positive finite number");
  if (max_terms < 1) throw DomainError("max_terms must be at least 1");
  if (quadrature_cutoff < 0.0) throw DomainError("quadrature_cutoff must be nonnegative");
}

Complex complex_expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

Complex i_power(double phi, int k) {
  const Complex base = k >= 0 ? Complex(0.0, phi) : Complex(0.0, -1.0 / phi);
  Complex r = 1.0;
  for (int j = 0; j < std::abs(k); ++j) r *= base;
  return r;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace lerch
