#include "lerch/identity_check.hpp"

#include <algorithm>
#include <cmath>

namespace lerch {

IdentityCheck IdentityCheck::make(std::string name, ParamMap params, Complex lhs, Complex rhs, std::size_t lhs_terms,
                                  std::size_t rhs_terms) {
  IdentityCheck c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = std::abs(lhs - rhs);
  c.rel_err = c.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1.0});
  c.lhs_terms = lhs_terms;
  c.rhs_terms = rhs_terms;
  return c;
}

std::string IdentityCheck::params_string() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + '=' + v;
  }
  return out;
}

std::string label(long n) { return std::to_string(n); }

std::string label(const BigRational& r) { return r.str(); }

std::string angle_label(double phi) {
  const double m = phi / kPi * 120.0;
  const double rounded = std::round(m);
  if (std::fabs(m - rounded) < 1e-9 && rounded != 0.0) {
    const BigRational q(static_cast<long>(rounded), 120);
    if (q == BigRational(1)) return "pi";
    if (q == BigRational(-1)) return "-pi";
    if (q.denominator() == 1) return q.str() + "*pi";
    if (q.numerator() == 1) return "pi/" + BigRational(q.denominator()).str();
    if (q.numerator() == -1) return "-pi/" + BigRational(q.denominator()).str();
    return q.numerator().get_str() + "*pi/" + q.denominator().get_str();
  }
  return format_double(phi);
}

std::string real_label(double x) {
  if (x == std::round(x) && std::fabs(x) < 1e15) return std::to_string(static_cast<long>(x));
  return format_double(x);
}

std::string complex_label(Complex z) {
  if (z.imag() == 0.0) return real_label(z.real());
  if (z.real() == 0.0) {
    if (z.imag() == 1.0) return "i";
    if (z.imag() == -1.0) return "-i";
    return real_label(z.imag()) + "i";
  }
  const std::string im = real_label(z.imag());
  return real_label(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

}  // namespace lerch
