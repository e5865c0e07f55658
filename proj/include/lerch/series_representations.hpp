#ifndef LERCH_SERIES_REPRESENTATIONS_HPP
#define LERCH_SERIES_REPRESENTATIONS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/big_rational.hpp"
#include "lerch/identity_check.hpp"
#include "lerch/numeric.hpp"

namespace lerch {

class UnknownSeries : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kernel K(k) multiplying the k-th rational term.
enum class Kernel {
  zeta_even,       // zeta(2k), zeta(0) = -1/2
  half_zeta_even,  // (2^{2k-1} - 1) zeta(2k)
  beta_odd,        // beta(2k+1)
};

/// slope * k + constant
struct LinearFactor {
  long slope;
  long constant;
};

/// value = prefactor * pi^pi_power * sqrt(2)^sqrt2_power
///         * (log2_coefficient * log 2
///            + series_coefficient * sum_k K(k) P(k) / (base^k prod_i L_i(k)))
struct SeriesSpec {
  std::string name;
  std::string anchor;
  std::string target;
  BigRational prefactor;
  int pi_power = 0;
  int sqrt2_power = 0;
  BigRational log2_coefficient;
  BigRational series_coefficient;
  Kernel kernel = Kernel::zeta_even;
  long base = 4;
  std::vector<long> numerator;  // P(k), index = power of k
  std::vector<LinearFactor> denominator;

  /// Asymptotic ratio of consecutive terms.
  double ratio() const;
  /// Printed coefficients in perturbation order: prefactor, log 2
  /// coefficient (when present), series coefficient, numerator
  /// coefficients, each denominator factor's slope and constant, base.
  std::size_t coefficient_count() const;
  std::string formula() const;
};

const std::vector<SeriesSpec>& catalog();
/// Throws UnknownSeries.
const SeriesSpec& find_series(std::string_view name);

EvalResult evaluate_named_series(std::string_view name, const SeriesParams& params = {},
                                 std::optional<Perturbation> perturbation = std::nullopt);

/// Value of the first n_terms terms (k < n_terms) with the outer factors
/// applied.
double partial_named_series(std::string_view name, std::size_t n_terms);

struct ReferenceValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::string method;
};

/// Independent value of a catalog target: zeta3, zeta5, beta2, beta4,
/// log2, log1p_sqrt2, l1chi2, neg_half_log2.
ReferenceValue reference_value(std::string_view target);
std::vector<std::string> reference_targets();

/// Series value against the reference of its target.
IdentityCheck series_check(std::string_view name, const SeriesParams& params = {},
                           std::optional<Perturbation> perturbation = std::nullopt);

struct ProfileRow {
  std::size_t terms_used = 0;
  double abs_error = 0.0;        // against the reference value
  double correct_digits = 0.0;   // -log10(relative error), capped at 17
  double truncation_error = 0.0;  // |omitted tail|, summed directly
};

struct ConvergenceProfile {
  std::string name;
  std::vector<ProfileRow> rows;
};

/// Throws UnknownSeries, or DomainError if checkpoints decrease or
/// contain 0.
ConvergenceProfile convergence_profile(std::string_view name, const std::vector<std::size_t>& checkpoints);

/// Decimal digits of truncation error gained per series index between
/// n1 and n2 terms.
double digits_per_index(std::string_view name, std::size_t n1, std::size_t n2);

}  // namespace lerch

#endif
