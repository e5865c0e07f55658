#include "lerch/special_functions.hpp"

#include <array>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "lerch/bernoulli_euler.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxEulerMaclaurinOrder = 40;

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// B_{2j} / (2j)! for j = 0 .. kMaxEulerMaclaurinOrder as doubles.
const std::vector<double>& bernoulli_over_factorial() {
  static const std::vector<double> table = [] {
    const auto b = bernoulli_numbers(2 * kMaxEulerMaclaurinOrder);
    std::vector<double> t(kMaxEulerMaclaurinOrder + 1);
    for (int j = 0; j <= kMaxEulerMaclaurinOrder; ++j)
      t[j] = (b[2 * j] / BigRational(factorial(2 * j))).to_double();
    return t;
  }();
  return table;
}

// z^{-s} for integer s >= 0.
Complex inverse_power(Complex z, int s) {
  if (z.imag() == 0.0 && z.real() > 0.0) return std::pow(z.real(), -s);
  Complex r = 1.0;
  Complex base = z;
  for (int e = s; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return 1.0 / r;
}

bool is_one(Complex a) { return std::abs(a - 1.0) <= 4 * kEps; }
bool on_unit_circle(Complex a) { return std::fabs(std::abs(a) - 1.0) <= 8 * kEps; }

// sum_{k>=N} (k+b)^{-s}, s >= 2, via Euler-Maclaurin around c = N + b.
struct Tail {
  Complex value;
  double error;
  int order;
};

Tail euler_maclaurin_tail(int s, Complex c, double tolerance) {
  const auto& bf = bernoulli_over_factorial();
  const Complex cs = inverse_power(c, s);
  Complex value = cs * c / static_cast<double>(s - 1) + 0.5 * cs;
  Complex cpow = cs / c;           // c^{-s-2j+1}, j = 1
  double rising = s;               // (s)_{2j-1}
  const Complex inv_c2 = 1.0 / (c * c);
  double last = std::numeric_limits<double>::infinity();
  int j = 1;
  for (; j <= kMaxEulerMaclaurinOrder; ++j) {
    const Complex term = bf[j] * rising * cpow;
    const double mag = std::abs(term);
    if (mag > last) break;  // asymptotic series started to diverge
    value += term;
    last = mag;
    if (mag <= tolerance * std::abs(value)) break;
    rising *= static_cast<double>(s + 2 * j - 1) * static_cast<double>(s + 2 * j);
    cpow *= inv_c2;
  }
  return {value, last, j};
}

// Regularized sum_{k>=N} (k+c0)^{-1} up to an additive constant
// independent of c0: -psi(c) ~ -log c + 1/(2c) + sum_j B_{2j} / (2j c^{2j}).
// The log is returned separately so callers can cancel it across residues.
struct HarmonicTail {
  double without_log;
  double error;
};

HarmonicTail harmonic_tail(double c, double tolerance) {
  const auto b = bernoulli_numbers(2 * kMaxEulerMaclaurinOrder);
  double value = 0.5 / c;
  double inv = 1.0 / (c * c);
  double pw = inv;
  double last = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= kMaxEulerMaclaurinOrder; ++j) {
    const double term = b[2 * j].to_double() / (2.0 * j) * pw;
    if (std::fabs(term) > last) break;
    value += term;
    last = std::fabs(term);
    if (last <= tolerance * 1e-3) break;
    pw *= inv;
  }
  return {value, last};
}

EvalResult unit_circle_aitken(Complex a, int s, Complex b, const SeriesParams& params) {
  const double theta = std::arg(a);
  const double radius = std::abs(a);
  auto term = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return std::polar(std::pow(radius, kd), kd * theta) * inverse_power(kd + b, s);
  };

  CompensatedSum partial;
  double abs_sum = 0.0;
  std::size_t k = 0;
  std::size_t n = 32;
  while (true) {
    for (; k < n; ++k) {
      const Complex t = term(k);
      partial.add(t);
      abs_sum += std::abs(t);
    }
    // Offsets of the partial sums S_n .. S_{n+6} relative to S_n; the
    // transform commutes with the shift, so S_n itself is added back later.
    std::array<Complex, 7> level{};
    for (std::size_t j = 1; j < level.size(); ++j) level[j] = level[j - 1] + term(n + j - 1);
    std::size_t len = level.size();
    Complex previous_last = level[len - 1];
    for (int round = 0; round < 3; ++round) {
      previous_last = level[len - 1];
      for (std::size_t i = 0; i + 2 < len; ++i) {
        const Complex d1 = level[i + 2] - level[i + 1];
        const Complex d2 = level[i + 2] - 2.0 * level[i + 1] + level[i];
        level[i] = std::abs(d2) > 0.0 ? level[i + 2] - d1 * d1 / d2 : level[i + 2];
      }
      len -= 2;
    }
    const Complex accelerated = partial.value() + level[0];
    const double rounding = 4 * kEps * abs_sum;
    const double estimate = std::abs(level[0] - previous_last) + rounding;
    const double target = params.tolerance * std::max(1.0, std::abs(accelerated));
    if (estimate <= target) return {accelerated, n + 6, estimate};

    // Plain partial sum with the absolute-convergence tail bound.
    const double raw_bound =
        std::pow(static_cast<double>(n) + b.real(), 1.0 - s) / static_cast<double>(s - 1) + rounding;
    if (raw_bound <= target) return {partial.value(), n, raw_bound};

    if (2 * n + 6 > params.max_terms)
      throw NonConvergence("lerch_phi: unit-circle sum did not reach tolerance within " +
                           std::to_string(params.max_terms) + " terms");
    n *= 2;
  }
}

EvalResult unit_circle_quadrature(Complex a, Complex b, const SeriesParams& params) {
  const double rb = b.real();
  const double cutoff = params.quadrature_cutoff > 0.0 ? params.quadrature_cutoff : std::max(50.0, 38.0 / rb);
  const Complex log_a = std::log(a);
  auto integrand = [&](double t) { return std::exp(-b * t) / -complex_expm1(log_a - t); };
  QuadratureOptions opts;
  opts.abs_tol = params.tolerance / 10;
  opts.rel_tol = params.tolerance / 10;
  const auto q = integrate(integrand, 0.0, cutoff, opts);
  const double tail = std::exp(-rb * cutoff) / (rb * -std::expm1(-cutoff));
  return {q.value, q.intervals_used * 15, q.error_estimate + tail};
}

EvalResult inside_disk(Complex a, int s, Complex b, const SeriesParams& params) {
  const double r = std::abs(a);
  CompensatedSum sum;
  Complex ak = 1.0;
  std::size_t k = 0;
  while (true) {
    sum.add(ak * inverse_power(static_cast<double>(k) + b, s));
    ++k;
    ak *= a;
    const double kd = static_cast<double>(k);
    const double bound = std::pow(r, kd) / (std::pow(kd + b.real(), s) * (1.0 - r));
    if (bound <= params.tolerance * std::max(1.0, std::abs(sum.value())) / 10)
      return {sum.value(), k, bound + 2 * kEps * static_cast<double>(k) * std::abs(sum.value())};
    if (k >= params.max_terms)
      throw NonConvergence("lerch_phi: |a| < 1 sum did not reach tolerance within " +
                           std::to_string(params.max_terms) + " terms");
  }
}

}  // namespace

double PiMultiple::value() const {
  ScaledDouble v = coefficient.to_scaled();
  for (int p = 0; p < pi_power; ++p) v *= kPi;
  return v.value();
}

EvalResult hurwitz_zeta(int s, Complex b, const SeriesParams& params) {
  params.validate();
  require(s >= 2, "hurwitz_zeta requires s >= 2");
  require(b.real() > 0.0, "hurwitz_zeta requires Re(b) > 0");

  // Shift far enough that the Euler-Maclaurin terms fall off quickly.
  const double reach = 12.0 + s + std::fabs(b.imag());
  const std::size_t n = b.real() >= reach ? 0 : static_cast<std::size_t>(std::ceil(reach - b.real()));
  Complex direct = 0.0;
  for (std::size_t k = n; k-- > 0;) direct += inverse_power(static_cast<double>(k) + b, s);
  const Tail tail = euler_maclaurin_tail(s, static_cast<double>(n) + b, params.tolerance * 1e-2);
  const Complex value = direct + tail.value;
  const double error = tail.error + 4 * kEps * (static_cast<double>(n) + 4) * std::abs(value);
  if (tail.error > params.tolerance * std::max(1.0, std::abs(value)))
    throw NonConvergence("hurwitz_zeta: Euler-Maclaurin tail did not reach tolerance");
  return {value, n + static_cast<std::size_t>(tail.order), error};
}

PiMultiple riemann_zeta_even(int k) {
  if (k < 0) throw DomainError("riemann_zeta_even requires k >= 0");
  if (k == 0) return {BigRational(-1, 2), 0};
  const unsigned two_k = 2u * static_cast<unsigned>(k);
  BigRational c = BigRational(2).pow(two_k - 1) * bernoulli_number(two_k) / BigRational(factorial(two_k));
  if (k % 2 == 0) c = -c;
  return {c, static_cast<int>(two_k)};
}

namespace {

class ExactTable {
 public:
  explicit ExactTable(PiMultiple (*f)(int)) : f_(f) {}
  double operator()(int k) {
    require(k >= 0, "index must be nonnegative");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= k) values_.push_back(f_(static_cast<int>(values_.size())).value());
    return values_[k];
  }

 private:
  PiMultiple (*f_)(int);
  std::mutex mutex_;
  std::vector<double> values_;
};

}  // namespace

double zeta_even_value(int k) {
  static ExactTable table(riemann_zeta_even);
  return table(k);
}

double beta_odd_value(int k) {
  static ExactTable table(beta_odd_exact);
  return table(k);
}

EvalResult dirichlet_beta(int s, const SeriesParams& params) {
  params.validate();
  require(s >= 1, "dirichlet_beta requires s >= 1");
  // The weighted partial sum has error at most 2 a_0 / d_n with
  // d_n ~ (3 + sqrt 8)^n / 2, and a_0 = 1 here.
  const double rate = std::log(3.0 + std::sqrt(8.0));
  const auto n = static_cast<std::size_t>(std::ceil(std::log(8.0 / params.tolerance) / rate)) + 3;
  if (n > params.max_terms) throw NonConvergence("dirichlet_beta: term budget below acceleration length");

  double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  CompensatedSum sum;
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    c = b - c;
    sum.add(c * std::pow(2.0 * kd + 1.0, -s));
    b = (kd + nd) * (kd - nd) * b / ((kd + 0.5) * (kd + 1.0));
  }
  const double value = sum.value().real() / d;
  return {value, n, 2.0 / d + 2 * kEps * nd * std::fabs(value)};
}

PiMultiple beta_odd_exact(int k) {
  if (k < 0) throw DomainError("beta_odd_exact requires k >= 0");
  const unsigned two_k = 2u * static_cast<unsigned>(k);
  BigRational c = euler_number(two_k) / (BigRational(2).pow(two_k + 2) * BigRational(factorial(two_k)));
  if (k % 2 == 1) c = -c;
  return {c, static_cast<int>(two_k + 1)};
}

EvalResult lerch_phi(Complex a, int s, Complex b, const SeriesParams& params) {
  params.validate();
  require(s >= 1, "lerch_phi requires s >= 1");
  require(b.real() > 0.0, "lerch_phi requires Re(b) > 0");
  require(std::isfinite(a.real()) && std::isfinite(a.imag()), "lerch_phi requires finite a");
  const double r = std::abs(a);
  require(r <= 1.0 + 8 * kEps, "lerch_phi requires |a| <= 1");

  if (a == 0.0) return {inverse_power(b, s), 1, 0.0};
  if (is_one(a)) {
    require(s >= 2, "lerch_phi at a = 1 requires s >= 2");
    return hurwitz_zeta(s, b, params);
  }
  if (on_unit_circle(a)) return s >= 2 ? unit_circle_aitken(a, s, b, params) : unit_circle_quadrature(a, b, params);
  return inside_disk(a, s, b, params);
}

EvalResult polylog_unit(int s, double phi, const SeriesParams& params) {
  params.validate();
  require(s >= 1, "polylog_unit requires s >= 1");
  require(std::isfinite(phi), "polylog_unit requires finite phi");
  const double reduced = std::remainder(phi, 2 * kPi);
  if (reduced == 0.0) {
    require(s >= 2, "Li_1 diverges at phi = 0 mod 2pi");
    return hurwitz_zeta(s, 1.0, params);
  }
  if (s == 1) {
    const Complex value = -std::log(-complex_expm1(Complex(0.0, reduced)));
    return {value, 1, 4 * kEps * std::max(1.0, std::abs(value))};
  }
  const Complex a = std::polar(1.0, reduced);
  EvalResult r = lerch_phi(a, s, 1.0, params);
  r.value *= a;
  return r;
}

int character_value(Character chi, long n) {
  if (n % 2 == 0) return 0;
  const long r = ((n % 8) + 8) % 8;
  if (chi == Character::chi1) return (r == 1 || r == 3) ? 1 : -1;
  return (r == 1 || r == 7) ? 1 : -1;
}

Character parse_character(std::string_view name) {
  if (name == "chi1" || name == "1") return Character::chi1;
  if (name == "chi2" || name == "2") return Character::chi2;
  throw DomainError("unknown character '" + std::string(name) + "' (expected chi1 or chi2)");
}

EvalResult l_series(Character chi, int s, const SeriesParams& params) {
  params.validate();
  require(s >= 1, "l_series requires s >= 1");
  constexpr std::array<int, 4> residues = {1, 3, 5, 7};
  if (s >= 2) {
    Complex acc = 0.0;
    double err = 0.0;
    std::size_t terms = 0;
    for (int r : residues) {
      const EvalResult z = hurwitz_zeta(s, r / 8.0, params);
      acc += static_cast<double>(character_value(chi, r)) * z.value;
      err += z.error_estimate;
      terms += z.terms_used;
    }
    const double scale = std::pow(8.0, -s);
    return {acc * scale, terms, err * scale};
  }

  // s = 1: sum over N full periods, then sum_{k>=N} 1/(8k+r) =
  // (1/8)(-log(N + r/8) + tail(N + r/8)) + C, where C and log N cancel
  // because the character sums to zero over a period.
  const std::size_t blocks = 64;
  double direct = 0.0;
  for (std::size_t n = 8 * blocks; n >= 1; --n) direct += character_value(chi, static_cast<long>(n)) / static_cast<double>(n);
  double tail = 0.0;
  double err = 0.0;
  const double nb = static_cast<double>(blocks);
  for (int r : residues) {
    const double x = static_cast<double>(character_value(chi, r));
    const HarmonicTail h = harmonic_tail(nb + r / 8.0, params.tolerance);
    tail += x * (h.without_log - std::log1p(r / (8.0 * nb)));
    err += h.error;
  }
  const double value = direct + tail / 8.0;
  return {value, 8 * blocks, err / 8.0 + 8 * kEps * std::fabs(value)};
}

EvalResult lerch_phi_i_half(int s, const SeriesParams& params) {
  params.validate();
  require(s >= 1, "lerch_phi_i_half requires s >= 1");
  if (s == 1) {
    const EvalResult l1 = l_series(Character::chi1, 1, params);
    const EvalResult l2 = l_series(Character::chi2, 1, params);
    const Complex value = std::polar(std::sqrt(2.0), kPi / 4) * (l1.value - kI * l2.value);
    return {value, l1.terms_used + l2.terms_used, std::sqrt(2.0) * (l1.error_estimate + l2.error_estimate)};
  }
  const EvalResult z1 = hurwitz_zeta(s, 1.0 / 8, params);
  const EvalResult z3 = hurwitz_zeta(s, 3.0 / 8, params);
  const EvalResult z5 = hurwitz_zeta(s, 5.0 / 8, params);
  const EvalResult z7 = hurwitz_zeta(s, 7.0 / 8, params);
  const double scale = std::pow(4.0, -s);
  const Complex value = scale * (z1.value - z5.value + kI * (z3.value - z7.value));
  const double err = scale * (z1.error_estimate + z3.error_estimate + z5.error_estimate + z7.error_estimate);
  return {value, z1.terms_used + z3.terms_used + z5.terms_used + z7.terms_used, err};
}

}  // namespace lerch
