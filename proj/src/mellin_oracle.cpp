#include "lerch/mellin_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lerch {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

double cutoff_for(double b, const SeriesParams& params) {
  return params.quadrature_cutoff > 0.0 ? params.quadrature_cutoff : std::max(50.0, 60.0 / b);
}

// int_T^inf t^m e^{-bt} dt = e^{-bT} sum_j m!/(m-j)! T^{m-j} / b^{j+1}
double gamma_tail(int m, double b, double cutoff) {
  double sum = 0.0;
  double falling = 1.0;
  for (int j = 0; j <= m; ++j) {
    sum += falling * std::pow(cutoff, m - j) / std::pow(b, j + 1);
    falling *= m - j;
  }
  return std::exp(-b * cutoff) * sum;
}

QuadratureOptions tight() {
  QuadratureOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-13;
  o.max_intervals = 20000;
  return o;
}

double factorial_double(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

}  // namespace

QuadratureResult mellin_eta(Complex a, int s, double b, const SeriesParams& params) {
  params.validate();
  require(s >= 1, "mellin_eta requires s >= 1");
  require(b > 0.0, "mellin_eta requires b > 0");
  require(std::abs(a) <= 1.0 + 1e-15, "mellin_eta requires |a| <= 1");
  require(!(std::abs(a - 1.0) < 1e-15 && s < 2), "mellin_eta requires s >= 2 when a = 1");

  const double cutoff = cutoff_for(b, params);
  const bool zero = a == 0.0;
  const Complex log_a = zero ? Complex(0.0) : std::log(a);
  auto eta = [&](double t) -> Complex {
    const Complex den = zero ? Complex(1.0) : -complex_expm1(log_a - t);
    return std::pow(t, s - 1) * std::exp(-b * t) / den;
  };
  auto q = integrate(eta, 0.0, cutoff, tight());
  q.error_estimate += gamma_tail(s - 1, b, cutoff) / (1.0 - std::abs(a) * std::exp(-cutoff));
  return q;
}

IdentityCheck mellin_phi_check(Complex a, int s, double b, const SeriesParams& params) {
  const auto q = mellin_eta(a, s, b, params);
  const auto phi = lerch_phi(a, s, b, params);
  const double gamma = factorial_double(s - 1);
  return IdentityCheck::make("mellin_phi", {{"a", complex_label(a)}, {"s", label(s)}, {"b", real_label(b)}}, q.value,
                             gamma * phi.value, q.intervals_used, phi.terms_used);
}

StripKind parse_strip_kind(std::string_view name) {
  if (name == "bernoulli") return StripKind::bernoulli;
  if (name == "euler") return StripKind::euler;
  throw DomainError("unknown strip kind '" + std::string(name) + "' (expected bernoulli or euler)");
}

std::string_view to_string(StripKind kind) { return kind == StripKind::bernoulli ? "bernoulli" : "euler"; }

StripShiftSides strip_shift_sides(StripKind kind, int n, double phi, double b, const SeriesParams& params) {
  params.validate();
  const bool bern = kind == StripKind::bernoulli;
  require(n >= (bern ? 1 : 0), bern ? "strip_shift bernoulli requires n >= 1" : "strip_shift euler requires n >= 0");
  require(std::fabs(phi) < (bern ? 2.0 : 1.0) * kPi,
          bern ? "strip_shift bernoulli requires |phi| < 2 pi" : "strip_shift euler requires |phi| < pi");
  require(b > 0.0, "strip_shift requires b > 0");

  const double cutoff = cutoff_for(b, params);
  const double tail_den = bern ? -std::expm1(-cutoff) : 1.0;

  // g(z) = e^{-bz} / (1 -+ e^{-z})
  auto g = [&](Complex z) -> Complex {
    const Complex den = bern ? -complex_expm1(-z) : 1.0 + std::exp(-z);
    return std::exp(-b * z) / den;
  };
  auto power = [](double t, int k) { return k == 0 ? 1.0 : std::pow(t, k); };

  auto mg = integrate([&](double t) { return power(t, n) * g(t); }, 0.0, cutoff, tight());
  double error = mg.error_estimate + gamma_tail(n, b, cutoff) / tail_den;
  Complex combination = mg.value;
  std::size_t intervals = mg.intervals_used;
  const Complex iphi(0.0, phi);
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    const auto mk = integrate([&](double t) { return power(t, k) * g(Complex(t, phi)); }, 0.0, cutoff, tight());
    const Complex coeff = binom * std::pow(iphi, n - k);
    combination -= coeff * mk.value;
    error += std::abs(coeff) * (mk.error_estimate + gamma_tail(k, b, cutoff) / tail_den);
    intervals += mk.intervals_used;
    binom = binom * (n - k) / (k + 1);
  }

  // i int_0^phi (it)^n g(it) dt = i phi int_0^1 (i y)^n g(i y) du, y = phi u
  auto segment = [&](double u) -> Complex {
    const double y = phi * u;
    const Complex rot = std::exp(Complex(0.0, (0.5 - b) * y));
    if (bern) {
      const double half = 0.5 * y;
      const double ratio = std::fabs(half) < 1e-8 ? 1.0 : half / std::sin(half);
      return std::pow(Complex(0.0, y), n - 1) * rot * ratio;
    }
    return std::pow(Complex(0.0, y), n) * rot / (2.0 * std::cos(0.5 * y));
  };
  auto seg = integrate(segment, 0.0, 1.0, tight());
  seg.value *= iphi;
  seg.error_estimate *= std::fabs(phi);
  return {{combination, intervals, error}, seg};
}

IdentityCheck strip_shift_check(StripKind kind, int n, double phi, double b, const SeriesParams& params) {
  const auto sides = strip_shift_sides(kind, n, phi, b, params);
  return IdentityCheck::make(
      "strip_shift",
      {{"kind", std::string(to_string(kind))}, {"n", label(n)}, {"phi", angle_label(phi)}, {"b", real_label(b)}},
      sides.lhs.value, sides.rhs.value, sides.lhs.intervals_used, sides.rhs.intervals_used);
}

BruteForceResult brute_force_lerch(Complex a, int s, Complex b, std::size_t n_terms) {
  require(n_terms >= 1, "brute_force_lerch requires N >= 1");
  require(s >= 1, "brute_force_lerch requires s >= 1");
  require(b.real() > 0.0, "brute_force_lerch requires Re(b) > 0");
  CompensatedSum sum;
  const bool real_path = b.imag() == 0.0 && (a == 1.0 || a == -1.0);
  if (real_path) {
    const double br = b.real();
    const double sign = a.real();
    double ak = 1.0;
    for (std::size_t k = 0; k < n_terms; ++k) {
      sum.add(ak * std::pow(static_cast<double>(k) + br, -s));
      ak *= sign;
    }
  } else {
    Complex ak = 1.0;
    for (std::size_t k = 0; k < n_terms; ++k) {
      sum.add(ak * std::pow(static_cast<double>(k) + b, -s));
      ak *= a;
    }
  }
  BruteForceResult r{sum.value(), n_terms, std::nullopt};
  const double nd = static_cast<double>(n_terms);
  const double br = b.real();
  if (a == 1.0 && s >= 2 && b.imag() == 0.0) {
    r.tail_bound = std::pow(nd - 1.0 + br, 1.0 - s) / (s - 1);
    r.tail_estimate = std::pow(nd - 0.5 + br, 1.0 - s) / (s - 1);
  } else if (a == -1.0 && b.imag() == 0.0) {
    r.tail_bound = std::pow(nd + br, -s);
    const double f0 = std::pow(nd + br, -s);
    const double f1 = std::pow(nd + 1.0 + br, -s);
    r.tail_estimate = (n_terms % 2 ? -1.0 : 1.0) * (f0 / 2 + (f0 - f1) / 4);
  } else if (std::abs(a) < 1.0) {
    const double m = std::abs(a);
    r.tail_bound = std::pow(m, nd) * std::pow(nd + br, -s) / (1.0 - m);
  }
  return r;
}

BruteForceResult brute_force_l_series(Character chi, int s, std::size_t blocks) {
  require(s >= 1, "brute_force_l_series requires s >= 1");
  require(blocks >= 1, "brute_force_l_series requires at least one block");
  CompensatedSum sum;
  for (std::size_t k = 0; k < blocks; ++k) {
    double block = 0.0;
    for (long r : {1L, 3L, 5L, 7L})
      block += character_value(chi, r) * std::pow(8.0 * static_cast<double>(k) + static_cast<double>(r), -s);
    sum.add(block);
  }
  // Each period sums to O(K^{-s-1}) (chi_1) or O(K^{-s-2}) (chi_2) once
  // expanded in 1/(8K); the bound below is twice the leading tail term.
  const double kd = static_cast<double>(blocks);
  const double lead = chi == Character::chi1 ? 8.0 * s : 8.0 * s * (s + 1);
  const int order = chi == Character::chi1 ? s + 1 : s + 2;
  const double tail = 2.0 * lead / std::pow(8.0, order) / (order - 1) / std::pow(kd, order - 1);
  return {sum.value(), blocks * 4, tail};
}

}  // namespace lerch
