#include "lerch/series_representations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "lerch/mellin_oracle.hpp"
#include "lerch/special_functions.hpp"

namespace lerch {

namespace {

constexpr std::size_t kMaxTerms = 2000;

SeriesSpec make(std::string name, std::string anchor, std::string target, BigRational prefactor, int pi_power,
                BigRational log2_coefficient, BigRational series_coefficient, Kernel kernel, long base,
                std::vector<long> numerator, std::vector<LinearFactor> denominator, int sqrt2_power = 0) {
  SeriesSpec s;
  s.name = std::move(name);
  s.anchor = std::move(anchor);
  s.target = std::move(target);
  s.prefactor = std::move(prefactor);
  s.pi_power = pi_power;
  s.sqrt2_power = sqrt2_power;
  s.log2_coefficient = std::move(log2_coefficient);
  s.series_coefficient = std::move(series_coefficient);
  s.kernel = kernel;
  s.base = base;
  s.numerator = std::move(numerator);
  s.denominator = std::move(denominator);
  return s;
}

std::vector<SeriesSpec> build_catalog() {
  using K = Kernel;
  const BigRational q0(0);
  std::vector<SeriesSpec> c;
  c.push_back(make("euler_zeta3", "Euler's classical series for zeta(3)", "zeta3", BigRational(-4, 7), 2, q0, 1,
                   K::zeta_even, 4, {1}, {{2, 1}, {2, 2}}));
  c.push_back(make("zeta3_log_a", "omega = 2 relation, n = 2", "zeta3", BigRational(2, 9), 2, 1, 2, K::zeta_even, 4,
                   {1}, {{2, 3}}));
  c.push_back(make("zeta3_log_b", "omega = 2 relation, n = 1", "zeta3", BigRational(2, 7), 2, 1, 2, K::zeta_even, 4,
                   {1}, {{2, 2}}));
  c.push_back(make("zeta3_combined", "omega = 2 pair with log 2 eliminated", "zeta3", BigRational(-2), 2, q0, 1,
                   K::zeta_even, 4, {1}, {{2, 2}, {2, 3}}));
  c.push_back(make("log2_combined", "omega = 2 pair with zeta(3) eliminated", "log2", BigRational(-1), 0, q0, 1,
                   K::zeta_even, 4, {13, 4}, {{2, 2}, {2, 3}}));
  c.push_back(make("catalan_omega4", "omega = 4 ladder, Catalan's constant", "beta2", BigRational(-1, 4), 1, 1, 4,
                   K::zeta_even, 16, {1}, {{2, 1}}));
  c.push_back(make("zeta3_omega4", "omega = 4 ladder, zeta(3)", "zeta3", BigRational(-2, 35), 2, 1, 4, K::zeta_even,
                   16, {3, 2}, {{2, 1}, {2, 2}}));
  c.push_back(make("beta4_omega4", "omega = 4 ladder, beta(4)", "beta4", BigRational(-1, 10080), 3, 183, 12,
                   K::zeta_even, 16, {479, 732, 244}, {{2, 1}, {2, 2}, {2, 3}}));
  c.push_back(make("zeta5_omega4", "omega = 4 ladder, zeta(5)", "zeta5", BigRational(-1, 166005), 4, 942, 48,
                   K::zeta_even, 16, {2581, 5111, 3140, 628}, {{2, 1}, {2, 2}, {2, 3}, {2, 4}}));
  c.push_back(make("beta2_half", "b = 1/2 relation, n = 0", "beta2", BigRational(1), 1, q0, 1, K::half_zeta_even, 16,
                   {1}, {{2, 1}}));
  c.push_back(make("beta4_half", "b = 1/2 relation, n = 1", "beta4", BigRational(1, 6), 3, q0, 1, K::half_zeta_even,
                   16, {2, 1}, {{2, 1}, {2, 3}}));
  c.push_back(make("zeta3_half", "b = 1/2 relation for zeta(3)", "zeta3", BigRational(2, 7), 2, q0, 1,
                   K::half_zeta_even, 16, {3, 2}, {{2, 1}, {2, 2}}));
  c.push_back(make("zeta5_half", "b = 1/2 relation for zeta(5)", "zeta5", BigRational(1, 186), 4, q0, 1,
                   K::half_zeta_even, 16, {83, 80, 20}, {{2, 1}, {2, 3}, {2, 4}}));
  c.push_back(make("beta_sum_log", "omega = -2 relation, sum of beta(2k+1)", "log1p_sqrt2", BigRational(1), 0, q0, 1,
                   K::beta_odd, 4, {1}, {{2, 1}}));
  c.push_back(make("l1chi2_sum", "omega = -2 relation, L(1, chi_2)", "l1chi2", BigRational(1), 0, q0, 1, K::beta_odd,
                   4, {1}, {{2, 1}}, -1));
  c.push_back(make("zeta_sum_log2", "zeta(2k) counterpart of the beta sum", "neg_half_log2", BigRational(1), 0, q0, 1,
                   K::zeta_even, 4, {1}, {{2, 1}}));
  return c;
}

// Doubles of every printed coefficient after an optional perturbation.
struct Coefficients {
  double outer = 1.0;  // prefactor * pi^p * sqrt2^q
  double log2 = 0.0;
  double series = 1.0;
  std::vector<double> numerator;
  std::vector<std::pair<double, double>> denominator;
  double base = 4.0;
};

Coefficients coefficients(const SeriesSpec& s, std::optional<Perturbation> perturbation) {
  CoefficientTape tape(perturbation);
  Coefficients c;
  c.outer = tape(s.prefactor.to_double()) * std::pow(kPi, s.pi_power) * std::pow(std::sqrt(2.0), s.sqrt2_power);
  if (!s.log2_coefficient.is_zero()) c.log2 = tape(s.log2_coefficient.to_double());
  c.series = tape(s.series_coefficient.to_double());
  for (long a : s.numerator) c.numerator.push_back(tape(static_cast<double>(a)));
  for (const auto& f : s.denominator) {
    const double slope = tape(static_cast<double>(f.slope));
    const double constant = tape(static_cast<double>(f.constant));
    c.denominator.emplace_back(slope, constant);
  }
  c.base = tape(static_cast<double>(s.base));
  return c;
}

double kernel_over_base(Kernel kernel, int k, double base) {
  const double scale = std::pow(base, -k);
  switch (kernel) {
    case Kernel::zeta_even: return zeta_even_value(k) * scale;
    case Kernel::half_zeta_even: return (std::ldexp(1.0, 2 * k - 1) - 1.0) * scale * zeta_even_value(k);
    case Kernel::beta_odd: return beta_odd_value(k) * scale;
  }
  return 0.0;
}

double term(const SeriesSpec& s, const Coefficients& c, int k) {
  double p = 0.0;
  for (std::size_t j = c.numerator.size(); j-- > 0;) p = p * k + c.numerator[j];
  double q = 1.0;
  for (const auto& [slope, constant] : c.denominator) q *= slope * k + constant;
  return kernel_over_base(s.kernel, k, c.base) * p / q;
}

double tail_sum(const SeriesSpec& s, const Coefficients& c, std::size_t from) {
  CompensatedSum sum;
  for (std::size_t k = from; k < from + kMaxTerms; ++k) {
    const double t = term(s, c, static_cast<int>(k));
    sum.add(t);
    if (std::fabs(t) <= 1e-20 * std::fabs(sum.value().real())) break;
  }
  return sum.value().real();
}

std::string kernel_text(Kernel k) {
  switch (k) {
    case Kernel::zeta_even: return "zeta(2k)";
    case Kernel::half_zeta_even: return "(2^(2k-1)-1) zeta(2k)";
    case Kernel::beta_odd: return "beta(2k+1)";
  }
  return {};
}

std::string polynomial_text(const std::vector<long>& p) {
  std::string out;
  for (std::size_t j = p.size(); j-- > 0;) {
    if (p[j] == 0) continue;
    if (!out.empty()) out += p[j] < 0 ? "-" : "+";
    else if (p[j] < 0) out += "-";
    const long a = std::labs(p[j]);
    if (j == 0 || a != 1) out += std::to_string(a);
    if (j >= 1) out += "k";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out;
}

}  // namespace

double SeriesSpec::ratio() const {
  return kernel == Kernel::half_zeta_even ? 4.0 / static_cast<double>(base) : 1.0 / static_cast<double>(base);
}

std::size_t SeriesSpec::coefficient_count() const {
  return 1 + (log2_coefficient.is_zero() ? 0 : 1) + 1 + numerator.size() + 2 * denominator.size() + 1;
}

std::string SeriesSpec::formula() const {
  std::string out = prefactor == BigRational(1) ? std::string("1") : prefactor.str();
  if (pi_power == 1) out += " pi";
  if (pi_power > 1) out += " pi^" + std::to_string(pi_power);
  if (sqrt2_power != 0) out += " 2^(" + std::to_string(sqrt2_power) + "/2)";
  out += " (";
  if (!log2_coefficient.is_zero())
    out += (log2_coefficient == BigRational(1) ? std::string() : log2_coefficient.str() + " ") + "log 2 + ";
  if (series_coefficient != BigRational(1)) out += series_coefficient.str() + " ";
  out += "sum_k " + kernel_text(kernel);
  if (!(numerator.size() == 1 && numerator[0] == 1)) out += " (" + polynomial_text(numerator) + ")";
  out += " / (" + std::to_string(base) + "^k";
  for (const auto& f : denominator) out += " (" + polynomial_text({f.constant, f.slope}) + ")";
  out += "))";
  return out;
}

const std::vector<SeriesSpec>& catalog() {
  static const std::vector<SeriesSpec> c = build_catalog();
  return c;
}

const SeriesSpec& find_series(std::string_view name) {
  for (const auto& s : catalog())
    if (s.name == name) return s;
  throw UnknownSeries("unknown series '" + std::string(name) + "'; run the 'catalog' command for the list");
}

EvalResult evaluate_named_series(std::string_view name, const SeriesParams& params,
                                 std::optional<Perturbation> perturbation) {
  params.validate();
  const SeriesSpec& s = find_series(name);
  const Coefficients c = coefficients(s, perturbation);
  const double r = s.ratio();
  CompensatedSum sum;
  const std::size_t budget = std::min(kMaxTerms, params.max_terms);
  for (std::size_t k = 0; k < budget; ++k) {
    const double t = term(s, c, static_cast<int>(k));
    sum.add(t);
    // Past the first few indices the terms shrink at least geometrically.
    const double rest = 2.0 * std::fabs(t) * r / (1.0 - r);
    const double total = std::fabs(c.outer * (c.log2 * std::log(2.0) + c.series * sum.value().real()));
    if (k >= 2 && std::fabs(c.outer * c.series) * rest <= params.tolerance / 10 * std::max(total, 1e-300)) {
      const double value = c.outer * (c.log2 * std::log(2.0) + c.series * sum.value().real());
      return {value, k + 1, std::fabs(c.outer * c.series) * rest + 4e-16 * std::fabs(value)};
    }
  }
  throw NonConvergence("series " + s.name + " did not reach tolerance within " + std::to_string(budget) + " terms");
}

double partial_named_series(std::string_view name, std::size_t n_terms) {
  const SeriesSpec& s = find_series(name);
  const Coefficients c = coefficients(s, std::nullopt);
  CompensatedSum sum;
  for (std::size_t k = 0; k < n_terms; ++k) sum.add(term(s, c, static_cast<int>(k)));
  return c.outer * (c.log2 * std::log(2.0) + c.series * sum.value().real());
}

std::vector<std::string> reference_targets() {
  return {"beta2", "beta4", "l1chi2", "log1p_sqrt2", "log2", "neg_half_log2", "zeta3", "zeta5"};
}

ReferenceValue reference_value(std::string_view target) {
  static std::mutex mutex;
  static std::map<std::string, ReferenceValue, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(target); it != cache.end()) return it->second;

  ReferenceValue v;
  auto from = [&](const BruteForceResult& r, double scale, const char* method) {
    v.value = (r.value.real() + r.tail_estimate.real()) * scale;
    v.error_bound = r.tail_bound.value_or(0.0) * scale + 1e-16 * std::fabs(v.value);
    v.method = method;
  };
  if (target == "zeta3") {
    from(brute_force_lerch(1.0, 3, 1.0, 2'000'000), 1.0, "partial sum of Phi(1, 3, 1), 2e6 terms, plus midpoint tail");
  } else if (target == "zeta5") {
    from(brute_force_lerch(1.0, 5, 1.0, 100'000), 1.0, "partial sum of Phi(1, 5, 1), 1e5 terms, plus midpoint tail");
  } else if (target == "beta2") {
    from(brute_force_lerch(-1.0, 2, 0.5, 4'000'000), 0.25, "partial sum of Phi(-1, 2, 1/2) / 4, 4e6 terms, plus Euler-transform tail");
  } else if (target == "beta4") {
    from(brute_force_lerch(-1.0, 4, 0.5, 100'000), 1.0 / 16, "partial sum of Phi(-1, 4, 1/2) / 16, 1e5 terms, plus Euler-transform tail");
  } else if (target == "l1chi2") {
    from(brute_force_l_series(Character::chi2, 1, 1'000'000), 1.0, "partial sum of L(1, chi_2), 1e6 periods");
  } else if (target == "log2") {
    v = {std::log(2.0), 2e-16, "std::log(2)"};
  } else if (target == "neg_half_log2") {
    v = {-0.5 * std::log(2.0), 1e-16, "-std::log(2) / 2"};
  } else if (target == "log1p_sqrt2") {
    v = {std::asinh(1.0), 2e-16, "std::asinh(1) = log(1 + sqrt 2)"};
  } else {
    throw UnknownSeries("unknown reference target '" + std::string(target) + "'");
  }
  cache.emplace(std::string(target), v);
  return v;
}

IdentityCheck series_check(std::string_view name, const SeriesParams& params,
                           std::optional<Perturbation> perturbation) {
  const SeriesSpec& s = find_series(name);
  const auto value = evaluate_named_series(name, params, perturbation);
  const auto ref = reference_value(s.target);
  ParamMap p{{"target", s.target}};
  if (perturbation) p["perturbed"] = label(static_cast<long>(perturbation->coefficient));
  auto check = IdentityCheck::make("series_" + s.name, p, value.value, ref.value, value.terms_used, 0);
  // plain relative error against the reference
  check.rel_err = check.abs_err / std::max(std::abs(value.value), std::fabs(ref.value));
  return check;
}

ConvergenceProfile convergence_profile(std::string_view name, const std::vector<std::size_t>& checkpoints) {
  const SeriesSpec& s = find_series(name);
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0) throw DomainError("checkpoints must be positive term counts");
    if (i > 0 && checkpoints[i] < checkpoints[i - 1]) throw DomainError("checkpoints must be non-decreasing");
  }
  const Coefficients c = coefficients(s, std::nullopt);
  const auto ref = reference_value(s.target);
  ConvergenceProfile profile{s.name, {}};
  for (std::size_t n : checkpoints) {
    ProfileRow row;
    row.terms_used = n;
    const double value = partial_named_series(name, n);
    row.abs_error = std::fabs(value - ref.value);
    const double rel = row.abs_error / std::fabs(ref.value);
    row.correct_digits = rel > 0.0 ? std::min(17.0, -std::log10(rel)) : 17.0;
    row.truncation_error = std::fabs(c.outer * c.series * tail_sum(s, c, n));
    profile.rows.push_back(row);
  }
  return profile;
}

double digits_per_index(std::string_view name, std::size_t n1, std::size_t n2) {
  if (n2 <= n1) throw DomainError("digits_per_index requires n2 > n1");
  const auto p = convergence_profile(name, {n1, n2});
  return (std::log10(p.rows[0].truncation_error) - std::log10(p.rows[1].truncation_error)) /
         static_cast<double>(n2 - n1);
}

}  // namespace lerch
