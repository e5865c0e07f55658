#include "lerch/recurrence_identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lerch/bernoulli_euler.hpp"
#include "lerch/special_functions.hpp"

namespace lerch {

namespace {

constexpr std::size_t kMaxSeriesTerms = 5000;
constexpr double kZeta2Bound = 1.6449340668482264;  // zeta(2k) <= zeta(2) for k >= 1

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

double fact(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

double binom(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

double pow2(int e) { return std::ldexp(1.0, e); }

// B_k(x)/k! or E_k(x)/k! for k = 0 .. K, extended on demand.
class PolynomialTable {
 public:
  enum class Kind { bernoulli, euler };

  std::vector<ScaledDouble> get(Kind kind, const BigRational& x, std::size_t count) {
    std::lock_guard lock(mutex_);
    auto& v = tables_[{kind == Kind::bernoulli ? 0 : 1, x.str()}];
    BigRational fk = v.empty() ? BigRational(1) : BigRational(factorial(static_cast<unsigned>(v.size() - 1)));
    while (v.size() < count) {
      const auto k = static_cast<unsigned>(v.size());
      if (k > 0) fk = fk * BigRational(static_cast<long>(k));
      const BigRational p = kind == Kind::bernoulli ? bernoulli_polynomial_value(k, x) : euler_polynomial_value(k, x);
      v.push_back((p / fk).to_scaled());
    }
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count)};
  }

  static PolynomialTable& instance() {
    static PolynomialTable t;
    return t;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, std::string>, std::vector<ScaledDouble>> tables_;
};

// Sums term(k) for k = 0, 1, ... until both the current term and
// tail(k+1), a bound on the remaining terms, are below tolerance/10.
EvalResult sum_series(const std::function<Complex(int)>& term, const std::function<double(int)>& tail,
                      const SeriesParams& params, const char* what) {
  CompensatedSum sum;
  for (int k = 0; k < static_cast<int>(std::min(kMaxSeriesTerms, params.max_terms)); ++k) {
    const Complex t = term(k);
    sum.add(t);
    const double target = params.tolerance / 10 * std::max(1.0, std::abs(sum.value()));
    const double rest = tail(k + 1);
    if (std::abs(t) <= target && rest <= target) return {sum.value(), static_cast<std::size_t>(k + 1), rest};
  }
  throw NonConvergence(std::string(what) + ": series did not reach tolerance within the term budget");
}

// i^k
Complex i_unit(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Smallest K with c r^K / (1 - r) <= target.
std::size_t terms_for(double c, double r, double target) {
  if (r <= 0.0) return 2;
  const double k = std::log(target * (1.0 - r) / c) / std::log(r);
  return static_cast<std::size_t>(std::max(2.0, std::ceil(k) + 2.0));
}

struct Accumulator {
  CompensatedSum sum;
  double error = 0.0;
  std::size_t terms = 0;

  void add(Complex coeff, const EvalResult& r) {
    sum.add(coeff * r.value);
    error += std::abs(coeff) * r.error_estimate;
    terms += r.terms_used;
  }
  EvalResult result() const { return {sum.value(), terms, error}; }
};

ParamMap master_params(int n, double phi, const BigRational& b) {
  return {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}};
}

EvalResult master_rhs(PolynomialTable::Kind kind, int n, double phi, const BigRational& b,
                      const SeriesParams& params) {
  params.validate();
  const bool bern = kind == PolynomialTable::Kind::bernoulli;
  const double r = std::fabs(phi) / (bern ? 2.0 * kPi : kPi);
  // |B_k(x)|/k! <= 2 zeta(2)/(2 pi)^k < 3.3/(2 pi)^k and |E_k(x)|/k! <= 2/pi^k on [0, 1].
  const double c = bern ? 3.3 : 2.0;
  const std::size_t need = terms_for(c, r, params.tolerance / 10);
  if (need > std::min(kMaxSeriesTerms, params.max_terms))
    throw NonConvergence("master identity series needs " + std::to_string(need) + " terms");
  const auto table = PolynomialTable::instance().get(kind, BigRational(1) - b, need);
  const ScaledDouble phi_abs = ScaledDouble::from(std::fabs(phi));
  ScaledDouble power = ScaledDouble::from(1.0);
  const int shift = bern ? 0 : 1;
  auto term = [&](int k) {
    const double mag = (table[k] * power).value();
    power *= phi_abs;
    const int sign_k = phi < 0 && k % 2 == 1 ? -1 : 1;
    return i_unit(k + shift) * (sign_k * mag / (k + n + shift));
  };
  auto tail = [&](int k) { return c * std::pow(r, k) / ((k + n + shift) * (1.0 - r)); };
  EvalResult res = sum_series(term, tail, params, bern ? "master_bernoulli" : "master_euler");
  if (!bern) {
    res.value *= 0.5 * (phi < 0 ? -1.0 : 1.0) * std::fabs(phi);
    res.error_estimate *= 0.5 * std::fabs(phi);
  }
  return res;
}

}  // namespace

EvalResult master_bernoulli_lhs(int n, double phi, const BigRational& b, const SeriesParams& params) {
  require(n >= 1, "master_bernoulli requires n >= 1");
  require(phi != 0.0 && std::fabs(phi) < 2 * kPi, "master_bernoulli requires 0 < |phi| < 2 pi");
  require(b.sign() > 0, "master_bernoulli requires b > 0");
  const double bd = b.to_double();
  Accumulator acc;
  acc.add(fact(n) * i_power(phi, -n), hurwitz_zeta(n + 1, bd, params));
  const Complex a = std::polar(1.0, -phi);
  const Complex rot = std::polar(1.0, -bd * phi);
  for (int k = 0; k <= n; ++k)
    acc.add(-rot * binom(n, k) * i_power(phi, -k) * fact(k), lerch_phi(a, k + 1, bd, params));
  return acc.result();
}

EvalResult master_bernoulli_rhs(int n, double phi, const BigRational& b, const SeriesParams& params) {
  require(n >= 1, "master_bernoulli requires n >= 1");
  require(phi != 0.0 && std::fabs(phi) < 2 * kPi, "master_bernoulli requires 0 < |phi| < 2 pi");
  return master_rhs(PolynomialTable::Kind::bernoulli, n, phi, b, params);
}

IdentityCheck master_bernoulli(int n, double phi, const BigRational& b, const SeriesParams& params) {
  const auto l = master_bernoulli_lhs(n, phi, b, params);
  const auto r = master_bernoulli_rhs(n, phi, b, params);
  return IdentityCheck::make("master_bernoulli", master_params(n, phi, b), l.value, r.value, l.terms_used,
                             r.terms_used);
}

EvalResult master_euler_lhs(int n, double phi, const BigRational& b, const SeriesParams& params) {
  require(n >= 0, "master_euler requires n >= 0");
  require(phi != 0.0 && std::fabs(phi) < kPi, "master_euler requires 0 < |phi| < pi");
  require(b.sign() > 0, "master_euler requires b > 0");
  const double bd = b.to_double();
  Accumulator acc;
  acc.add(fact(n) * i_power(phi, -n), lerch_phi(-1.0, n + 1, bd, params));
  const Complex a = -std::polar(1.0, -phi);
  const Complex rot = std::polar(1.0, -bd * phi);
  for (int k = 0; k <= n; ++k)
    acc.add(-rot * binom(n, k) * i_power(phi, -k) * fact(k), lerch_phi(a, k + 1, bd, params));
  return acc.result();
}

EvalResult master_euler_rhs(int n, double phi, const BigRational& b, const SeriesParams& params) {
  require(n >= 0, "master_euler requires n >= 0");
  require(phi != 0.0 && std::fabs(phi) < kPi, "master_euler requires 0 < |phi| < pi");
  return master_rhs(PolynomialTable::Kind::euler, n, phi, b, params);
}

IdentityCheck master_euler(int n, double phi, const BigRational& b, const SeriesParams& params) {
  const auto l = master_euler_lhs(n, phi, b, params);
  const auto r = master_euler_rhs(n, phi, b, params);
  return IdentityCheck::make("master_euler", master_params(n, phi, b), l.value, r.value, l.terms_used, r.terms_used);
}

EvalResult srivastava_lhs(int n, double omega, const SeriesParams& params) {
  require(n >= 1, "srivastava_unification requires n >= 1");
  require(std::fabs(omega) > 1.0, "srivastava_unification requires |omega| > 1");
  params.validate();
  const double r = 1.0 / (omega * omega);
  auto term = [&](int k) { return Complex(zeta_even_value(k) * std::pow(r, k) / (2 * k + n)); };
  auto tail = [&](int k) { return kZeta2Bound * std::pow(r, k) / ((2 * k + n) * (1.0 - r)); };
  return sum_series(term, tail, params, "srivastava_unification");
}

EvalResult srivastava_rhs(int n, double omega, bool corrected, const SeriesParams& params) {
  require(n >= 1, "srivastava_unification requires n >= 1");
  require(std::fabs(omega) > 1.0, "srivastava_unification requires |omega| > 1");
  const double theta = 2 * kPi / omega;
  const Complex c(0.0, omega / (2 * kPi));
  Accumulator acc;
  acc.sum.add(kI * kPi / (2.0 * (n + 1) * omega));
  acc.sum.add(-0.5 * std::log(-complex_expm1(Complex(0.0, theta))));
  acc.add(-0.5 * fact(n) * std::pow(c, n), hurwitz_zeta(n + 1, 1.0, params));
  for (int k = 1; k <= n; ++k)
    acc.add(0.5 * binom(n, k) * fact(k) * std::pow(c, k), polylog_unit(corrected ? k + 1 : k, theta, params));
  return acc.result();
}

IdentityCheck srivastava_unification(int n, double omega, bool corrected, const SeriesParams& params) {
  const auto l = srivastava_lhs(n, omega, params);
  const auto r = srivastava_rhs(n, omega, corrected, params);
  return IdentityCheck::make(corrected ? "srivastava_unification" : "srivastava_unification_uncorrected",
                             {{"n", label(n)}, {"omega", real_label(omega)}}, l.value, r.value, l.terms_used,
                             r.terms_used);
}

Parity parse_parity(std::string_view name) {
  if (name == "odd") return Parity::odd;
  if (name == "even") return Parity::even;
  throw DomainError("unknown parity '" + std::string(name) + "' (expected odd or even)");
}

std::string_view to_string(Parity parity) { return parity == Parity::odd ? "odd" : "even"; }

std::size_t omega4_coefficient_count(int n, Parity parity) {
  // odd: n+1 beta terms, n zeta terms; even: one leading zeta term, n beta terms, n zeta terms.
  (void)parity;
  return static_cast<std::size_t>(2 * n + 3);
}

namespace {

// 2^{2k} (2^{2k} - 1) (-1)^k (2k)! / (2^{4k+1} pi^{2k}) zeta(2k+1)
double omega4_zeta_coefficient(int k) {
  return pow2(2 * k) * (pow2(2 * k) - 1) * (k % 2 ? -1.0 : 1.0) * fact(2 * k) / (pow2(4 * k + 1) * std::pow(kPi, 2 * k));
}

EvalResult omega4_rhs(int n, Parity parity, CoefficientTape& tape, const SeriesParams& params) {
  const double log_coeff = tape(-0.5);
  const double prefactor = tape(-2.0);
  const int offset = parity == Parity::odd ? 2 * n + 1 : 2 * n;
  const double r = 1.0 / 16.0;
  auto term = [&](int k) { return Complex(zeta_even_value(k) * std::pow(r, k) / (2 * k + offset)); };
  auto tail = [&](int k) { return kZeta2Bound * std::pow(r, k) / ((2 * k + offset) * (1.0 - r)); };
  EvalResult s = sum_series(term, tail, params, "omega4");
  s.value = log_coeff * std::log(2.0) + prefactor * s.value;
  s.error_estimate *= std::fabs(prefactor);
  return s;
}

}  // namespace

IdentityCheck omega4_real_part_odd(int n, const SeriesParams& params, std::optional<Perturbation> perturbation) {
  require(n >= 0, "omega4_real_part_odd requires n >= 0");
  CoefficientTape tape(perturbation);
  Accumulator acc;
  for (int k = 0; k <= n; ++k) {
    const double c = binom(2 * n + 1, 2 * k + 1) * pow2(2 * k + 1) * (k % 2 ? -1.0 : 1.0) * fact(2 * k + 1) /
                     std::pow(kPi, 2 * k + 1);
    acc.add(tape(c), dirichlet_beta(2 * k + 2, params));
  }
  for (int k = 1; k <= n; ++k)
    acc.add(tape(binom(2 * n + 1, 2 * k) * omega4_zeta_coefficient(k)), hurwitz_zeta(2 * k + 1, 1.0, params));
  const auto l = acc.result();
  const auto r = omega4_rhs(n, Parity::odd, tape, params);
  ParamMap p{{"n", label(n)}};
  if (perturbation) p["perturbed"] = label(static_cast<long>(perturbation->coefficient));
  return IdentityCheck::make("omega4_real_part_odd", p, l.value, r.value, l.terms_used, r.terms_used);
}

IdentityCheck omega4_real_part_even(int n, const SeriesParams& params, std::optional<Perturbation> perturbation) {
  require(n >= 1, "omega4_real_part_even requires n >= 1");
  CoefficientTape tape(perturbation);
  Accumulator acc;
  acc.add(tape((n % 2 ? -1.0 : 1.0) * std::pow(2.0 / kPi, 2 * n) * fact(2 * n)), hurwitz_zeta(2 * n + 1, 1.0, params));
  for (int k = 1; k <= n; ++k) {
    const double c = binom(2 * n, 2 * k - 1) * std::pow(kPi, 1 - 2 * k) * ((1 - k) % 2 ? -1.0 : 1.0) *
                     fact(2 * k - 1) / pow2(1 - 2 * k);
    acc.add(tape(c), dirichlet_beta(2 * k, params));
  }
  for (int k = 1; k <= n; ++k)
    acc.add(tape(binom(2 * n, 2 * k) * omega4_zeta_coefficient(k)), hurwitz_zeta(2 * k + 1, 1.0, params));
  const auto l = acc.result();
  const auto r = omega4_rhs(n, Parity::even, tape, params);
  ParamMap p{{"n", label(n)}};
  if (perturbation) p["perturbed"] = label(static_cast<long>(perturbation->coefficient));
  return IdentityCheck::make("omega4_real_part_even", p, l.value, r.value, l.terms_used, r.terms_used);
}

IdentityCheck beta_recurrence(int n, const SeriesParams& params) {
  require(n >= 1, "beta_recurrence requires n >= 1");
  Accumulator acc;
  for (int k = 0; k <= n; ++k)
    acc.add(pow2(2 * k) * (k % 2 ? -1.0 : 1.0) / (fact(2 * n - 2 * k) * std::pow(kPi, 2 * k)),
            dirichlet_beta(2 * k + 1, params));
  return IdentityCheck::make("beta_recurrence", {{"n", label(n)}}, acc.sum.value(), 0.0, acc.terms, 0);
}

IdentityCheck beta_recurrence_exact(int n) {
  require(n >= 1, "beta_recurrence_exact requires n >= 1");
  BigRational residual;
  for (int k = 0; k <= n; ++k) {
    BigRational t = BigRational(2).pow(2u * k) * beta_odd_exact(k).coefficient /
                    BigRational(factorial(static_cast<unsigned>(2 * n - 2 * k)));
    residual += k % 2 ? -t : t;
  }
  return IdentityCheck::make("beta_recurrence_exact", {{"n", label(n)}}, residual.to_double(), 0.0,
                             static_cast<std::size_t>(n + 1), 0);
}

IdentityCheck zeta_from_beta(int n, const SeriesParams& params) {
  require(n >= 0, "zeta_from_beta requires n >= 0");
  Accumulator acc;
  for (int k = 0; k <= n; ++k)
    acc.add(pow2(2 * k + 1) * (k % 2 ? -1.0 : 1.0) / (fact(2 * n - 2 * k + 1) * std::pow(kPi, 2 * k)),
            dirichlet_beta(2 * k + 1, params));
  const double pre = (n % 2 ? -1.0 : 1.0) * std::pow(kPi, 2 * n + 1) / (pow2(2 * n + 2) - 1);
  return IdentityCheck::make("zeta_from_beta", {{"n", label(n)}}, riemann_zeta_even(n + 1).value(),
                             pre * acc.sum.value(), 1, acc.terms);
}

namespace {

// sum_k (2^{2k-1} - 1) zeta(2k) / (2^{4k} (2k + offset)), ratio 1/4
EvalResult half_zeta_series(int offset, const SeriesParams& params) {
  auto term = [&](int k) {
    return Complex((pow2(2 * k - 1) - 1) * zeta_even_value(k) / pow2(4 * k) / (2 * k + offset));
  };
  auto tail = [&](int k) { return 0.5 * kZeta2Bound * std::pow(0.25, k) / ((2 * k + offset) * 0.75); };
  return sum_series(term, tail, params, "half-argument series");
}

}  // namespace

IdentityCheck beta_even_series(int n, const SeriesParams& params) {
  require(n >= 0, "beta_even_series requires n >= 0");
  Accumulator acc;
  for (int k = 0; k <= n; ++k)
    acc.add(binom(2 * n + 1, 2 * k + 1) * pow2(2 * k + 1) * fact(2 * k + 1) / std::pow(kPi, 2 * k + 1) *
                (k % 2 ? -1.0 : 1.0),
            dirichlet_beta(2 * k + 2, params));
  // 1/2^{4k-1} = 2/2^{4k}
  auto r = half_zeta_series(2 * n + 1, params);
  return IdentityCheck::make("beta_even_series", {{"n", label(n)}}, acc.sum.value(), 2.0 * r.value, acc.terms,
                             r.terms_used);
}

IdentityCheck zeta_odd_series(int n, const SeriesParams& params) {
  require(n >= 1, "zeta_odd_series requires n >= 1");
  const auto l = hurwitz_zeta(2 * n + 1, 1.0, params);
  // 1/2^{4k-2} = 4/2^{4k}
  const auto series = half_zeta_series(2 * n, params);
  Accumulator acc;
  acc.sum.add(4.0 * series.value);
  for (int k = 0; k < n; ++k)
    acc.add(-binom(2 * n, 2 * k + 1) * pow2(2 * k + 2) * fact(2 * k + 1) / std::pow(kPi, 2 * k + 1) *
                (k % 2 ? -1.0 : 1.0),
            dirichlet_beta(2 * k + 2, params));
  const double pre = (n % 2 ? -1.0 : 1.0) * std::pow(kPi, 2 * n) / (fact(2 * n) * (pow2(2 * n + 1) - 1));
  return IdentityCheck::make("zeta_odd_series", {{"n", label(n)}}, l.value, pre * acc.sum.value(), l.terms_used,
                             series.terms_used + acc.terms);
}

IdentityCheck companion_beta_series(int n, double omega, const SeriesParams& params) {
  require(n >= 1, "companion_beta_series requires n >= 1");
  require(std::fabs(omega) > 1.0, "companion_beta_series requires |omega| > 1");
  const double r = 1.0 / (omega * omega);
  auto term = [&](int k) { return Complex(beta_odd_value(k) / std::pow(omega, 2 * k + 1) / (2 * k + n + 1)); };
  auto tail = [&](int k) { return std::pow(r, k) / std::fabs(omega) / ((2 * k + n + 1) * (1.0 - r)); };
  const auto lhs = sum_series(term, tail, params, "companion_beta_series");

  Accumulator acc;
  acc.add(-fact(n) * std::pow(Complex(0.0, 2 * omega / kPi), n), dirichlet_beta(n + 1, params));
  const Complex a = -std::polar(1.0, kPi / omega);
  const Complex rot = 0.5 * std::polar(1.0, kPi / (2 * omega));
  for (int k = 0; k <= n; ++k)
    acc.add(rot * binom(n, k) * std::pow(Complex(0.0, omega / kPi), k) * fact(k), lerch_phi(a, k + 1, 0.5, params));
  return IdentityCheck::make("companion_beta_series", {{"n", label(n)}, {"omega", real_label(omega)}},
                             kI * lhs.value, acc.sum.value(), lhs.terms_used, acc.terms);
}

IdentityCheck l_series_relations(int n, Parity parity, const SeriesParams& params) {
  require(n >= 0, "l_series_relations requires n >= 0");
  const bool odd = parity == Parity::odd;
  const int m = odd ? 2 * n : 2 * n + 1;
  Accumulator acc;
  if (!odd)
    acc.add((n % 2 ? 1.0 : -1.0) * pow2(4 * n + 3) * fact(2 * n + 1) / std::pow(kPi, 2 * n + 1),
            dirichlet_beta(2 * n + 2, params));
  for (int k = 0; 2 * k + 1 <= m; ++k)
    acc.add(binom(m, 2 * k + 1) * (k % 2 ? -1.0 : 1.0) * std::pow(2.0, 4 * k + 2.5) * fact(2 * k + 1) /
                std::pow(kPi, 2 * k + 1),
            l_series(Character::chi1, 2 * k + 2, params));
  for (int k = 0; 2 * k <= m; ++k)
    acc.add(binom(m, 2 * k) * (k % 2 ? -1.0 : 1.0) * std::pow(2.0, 4 * k + 0.5) * fact(2 * k) / std::pow(kPi, 2 * k),
            l_series(Character::chi2, 2 * k + 1, params));

  const int offset = odd ? 2 * n + 1 : 2 * n + 2;
  auto term = [&](int k) { return Complex(beta_odd_value(k) * std::pow(0.25, k) / (2 * k + offset)); };
  auto tail = [&](int k) { return std::pow(0.25, k) / ((2 * k + offset) * 0.75); };
  const auto rhs = sum_series(term, tail, params, "l_series_relations");
  return IdentityCheck::make("l_series_relations", {{"n", label(n)}, {"parity", std::string(to_string(parity))}},
                             acc.sum.value(), rhs.value, acc.terms, rhs.terms_used);
}

std::array<IdentityCheck, 2> reflection_s1(int n, double phi, const BigRational& b, const SeriesParams& params) {
  require(b.sign() > 0 && b < BigRational(1), "reflection_s1 requires 0 < b < 1");
  const BigRational rb = BigRational(1) - b;
  const auto p = master_params(n, phi, b);
  const auto l1 = master_bernoulli_lhs(n, phi, b, params);
  const auto r1 = master_bernoulli_lhs(n, phi, rb, params);
  const auto l2 = master_bernoulli_rhs(n, phi, b, params);
  const auto r2 = master_bernoulli_rhs(n, -phi, rb, params);
  return {IdentityCheck::make("reflection_s1_conj", p, l1.value, std::conj(r1.value), l1.terms_used, r1.terms_used),
          IdentityCheck::make("reflection_s1_neg", p, l2.value, r2.value, l2.terms_used, r2.terms_used)};
}

std::array<IdentityCheck, 2> reflection_s2(int n, double phi, const BigRational& b, const SeriesParams& params) {
  require(b.sign() > 0 && b < BigRational(1), "reflection_s2 requires 0 < b < 1");
  const BigRational rb = BigRational(1) - b;
  const auto p = master_params(n, phi, b);
  const auto l1 = master_euler_lhs(n, phi, b, params);
  const auto r1 = master_euler_lhs(n, phi, rb, params);
  const auto l2 = master_euler_rhs(n, phi, b, params);
  const auto r2 = master_euler_rhs(n, -phi, rb, params);
  return {IdentityCheck::make("reflection_s2_conj", p, l1.value, -std::conj(r1.value), l1.terms_used, r1.terms_used),
          IdentityCheck::make("reflection_s2_neg", p, l2.value, -r2.value, l2.terms_used, r2.terms_used)};
}

}  // namespace lerch
