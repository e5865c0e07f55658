#ifndef LERCH_IDENTITY_CHECK_HPP
#define LERCH_IDENTITY_CHECK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "lerch/big_rational.hpp"
#include "lerch/numeric.hpp"

namespace lerch {

using ParamMap = std::map<std::string, std::string>;

/// One identity evaluated at one parameter point. Both sides are computed
/// independently; the discrepancy fields are derived from them.
struct IdentityCheck {
  std::string name;
  ParamMap params;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / max(|lhs|, |rhs|, 1)
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;

  static IdentityCheck make(std::string name, ParamMap params, Complex lhs, Complex rhs, std::size_t lhs_terms = 0,
                            std::size_t rhs_terms = 0);

  /// "key=value,key=value" in key order.
  std::string params_string() const;
};

/// Multiplies the coefficient with the given index by factor. Used to show
/// that a check notices a single wrong printed coefficient.
struct Perturbation {
  std::size_t coefficient = 0;
  double factor = 1.0 + 1e-6;
};

/// Applies an optional perturbation to coefficients as they are visited
/// in a fixed order.
class CoefficientTape {
 public:
  explicit CoefficientTape(std::optional<Perturbation> p) : perturbation_(p) {}

  double operator()(double c) {
    const std::size_t i = next_++;
    return perturbation_ && perturbation_->coefficient == i ? c * perturbation_->factor : c;
  }
  std::size_t visited() const { return next_; }

 private:
  std::optional<Perturbation> perturbation_;
  std::size_t next_ = 0;
};

/// Parameter labels: integers verbatim, rationals as p/q, angles as
/// rational multiples of pi when they are one.
std::string label(long n);
std::string label(const BigRational& r);
std::string angle_label(double phi);
std::string real_label(double x);
std::string complex_label(Complex z);

}  // namespace lerch

#endif
