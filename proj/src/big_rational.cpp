#include "lerch/big_rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lerch {

ScaledDouble ScaledDouble::from(double x) {
  ScaledDouble s;
  if (x == 0.0) return s;
  int e = 0;
  s.mantissa = std::frexp(x, &e);
  s.exponent = e;
  return s;
}

ScaledDouble& ScaledDouble::operator*=(const ScaledDouble& other) {
  int e = 0;
  mantissa = std::frexp(mantissa * other.mantissa, &e);
  exponent = mantissa == 0.0 ? 0 : exponent + other.exponent + e;
  return *this;
}

ScaledDouble& ScaledDouble::operator*=(double x) { return *this *= from(x); }

double ScaledDouble::value() const {
  if (mantissa == 0.0) return 0.0;
  if (exponent > std::numeric_limits<double>::max_exponent)
    return std::copysign(std::numeric_limits<double>::infinity(), mantissa);
  if (exponent < std::numeric_limits<double>::min_exponent - 60) return 0.0;
  return std::ldexp(mantissa, static_cast<int>(exponent));
}

double ScaledDouble::log2_abs() const {
  if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_.canonicalize();
}

BigRational::BigRational(long numerator, long denominator)
    : BigRational(BigInt(numerator), BigInt(denominator)) {}

BigRational BigRational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("BigRational: non-finite double");
  return BigRational(mpq_class(x));
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      return BigRational(num, den);
    }
    if (s.find_first_of(".eE") == std::string::npos) return BigRational(BigInt(s));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  // Decimal literal: read the exact decimal value, not its binary rounding.
  std::string mant = s;
  long exp10 = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    mant = s.substr(0, e);
    try {
      exp10 = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
  }
  if (const auto dot = mant.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+") throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (mant.front() == '+') mant.erase(0, 1);
  BigInt digits;
  if (digits.set_str(mant, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  return exp10 >= 0 ? BigRational(BigInt(digits * scale)) : BigRational(digits, scale);
}

double BigRational::to_double() const { return to_scaled().value(); }

ScaledDouble BigRational::to_scaled() const {
  if (is_zero()) return {};
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, value_.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, value_.get_den_mpz_t());
  ScaledDouble s = ScaledDouble::from(mn / md);
  s.exponent += en - ed;
  return s;
}

std::string BigRational::str() const { return value_.get_str(); }

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRational(mpq_class(num, den));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_canonical(const BigRational& r) {
  const BigInt den = r.denominator();
  if (den <= 0) return false;
  BigInt g;
  const BigInt num = r.numerator();
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1;
}

}  // namespace lerch
