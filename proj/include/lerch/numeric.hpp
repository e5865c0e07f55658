#ifndef LERCH_NUMERIC_HPP
#define LERCH_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lerch {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Argument outside the domain where the requested quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested tolerance not reached within the term/interval budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeriesParams {
  double tolerance = 1e-13;
  std::size_t max_terms = 10'000'000;
  /// Upper limit T of half-line integrals; 0 selects it from b.
  double quadrature_cutoff = 0.0;

  /// Throws DomainError unless tolerance > 0 and max_terms >= 1.
  void validate() const;
};

struct EvalResult {
  Complex value;
  std::size_t terms_used = 0;
  double error_estimate = 0.0;
};

/// e^z - 1 without cancellation for small |z|.
Complex complex_expm1(Complex z);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(Complex x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  struct Part {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
      const double t = sum + x;
      carry += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    double value() const { return sum + carry; }
  };
  Part re_, im_;
};

/// (i*phi)^k for integer k of either sign.
Complex i_power(double phi, int k);

std::string format_double(double x);

}  // namespace lerch

#endif
