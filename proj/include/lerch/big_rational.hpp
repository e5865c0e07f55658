#ifndef LERCH_BIG_RATIONAL_HPP
#define LERCH_BIG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace lerch {

using BigInt = mpz_class;

/// A double carried as mantissa * 2^exponent so that very large and very
/// small magnitudes (B_k / k!, phi^k for k in the hundreds) can be
/// multiplied together before being collapsed into an ordinary double.
struct ScaledDouble {
  double mantissa = 0.0;
  long exponent = 0;

  static ScaledDouble from(double x);

  ScaledDouble& operator*=(const ScaledDouble& other);
  ScaledDouble& operator*=(double x);
  friend ScaledDouble operator*(ScaledDouble a, const ScaledDouble& b) { return a *= b; }
  friend ScaledDouble operator*(ScaledDouble a, double b) { return a *= b; }

  /// Collapses to a double; underflows to 0 and overflows to +-inf.
  double value() const;
  /// log2 of the magnitude, -inf for zero.
  double log2_abs() const;
};

/// Exact rational number in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& numerator, const BigInt& denominator);
  BigRational(long numerator, long denominator);

  /// Exact binary value of a finite double.
  static BigRational from_double(double x);
  /// Parses "p", "p/q" or a decimal literal such as "-0.75" or "1e-3".
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const;
  ScaledDouble to_scaled() const;
  std::string str() const;

  BigRational pow(unsigned exponent) const;
  BigRational abs() const;

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// True when gcd(|numerator|, denominator) == 1 and denominator > 0.
bool is_canonical(const BigRational& r);

}  // namespace lerch

#endif
