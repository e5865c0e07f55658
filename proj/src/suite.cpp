#include "lerch/suite.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "lerch/bernoulli_euler.hpp"
#include "lerch/mellin_oracle.hpp"
#include "lerch/recurrence_identities.hpp"
#include "lerch/series_representations.hpp"
#include "lerch/special_functions.hpp"

namespace lerch {

namespace {

const std::vector<double> kPhiGrid = {kPi / 4, -kPi / 4, kPi / 2, -kPi / 2, 2 * kPi / 3, -2 * kPi / 3};
const std::vector<BigRational> kBGrid = {BigRational(1), BigRational(3, 4), BigRational(1, 2), BigRational(1, 4)};
const std::vector<BigRational> kReflectionB = {BigRational(1, 4), BigRational(1, 3), BigRational(1, 2)};
const std::vector<BigRational> kExactX = {BigRational(0),    BigRational(1, 4), BigRational(1, 3),
                                          BigRational(1, 2), BigRational(2, 3), BigRational(1)};

IdentityCheck exact_check(std::string name, ParamMap params, const BigRational& residual) {
  return IdentityCheck::make(std::move(name), std::move(params), residual.to_double(), 0.0);
}

BigRational sign_power(unsigned k) { return k % 2 ? BigRational(-1) : BigRational(1); }

void add(std::vector<CheckSpec>& out, std::string name, ParamMap params, Metric metric, double tolerance,
         std::function<IdentityCheck(const SeriesParams&)> run) {
  out.push_back({std::move(name), std::move(params), metric, tolerance, std::move(run)});
}

void add_master(std::vector<CheckSpec>& out) {
  for (int n = 1; n <= 5; ++n)
    for (double phi : kPhiGrid)
      for (const auto& b : kBGrid)
        add(out, "master_bernoulli", {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}}, Metric::rel_le,
            1e-9, [=](const SeriesParams& p) { return master_bernoulli(n, phi, b, p); });
  for (int n = 1; n <= 5; ++n)
    for (double phi : {1.9 * kPi, -1.9 * kPi})
      for (const auto& b : kBGrid)
        add(out, "master_bernoulli_stress", {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}},
            Metric::rel_le, 1e-7, [=](const SeriesParams& p) {
              auto c = master_bernoulli(n, phi, b, p);
              c.name = "master_bernoulli_stress";
              return c;
            });
  for (int n = 0; n <= 5; ++n)
    for (double phi : kPhiGrid)
      for (const auto& b : kBGrid)
        add(out, "master_euler", {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}}, Metric::rel_le, 1e-9,
            [=](const SeriesParams& p) { return master_euler(n, phi, b, p); });
  for (int n = 0; n <= 5; ++n)
    for (double phi : {0.95 * kPi, -0.95 * kPi})
      for (const auto& b : kBGrid)
        add(out, "master_euler_stress", {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}},
            Metric::rel_le, 1e-7, [=](const SeriesParams& p) {
              auto c = master_euler(n, phi, b, p);
              c.name = "master_euler_stress";
              return c;
            });
}

void add_unification(std::vector<CheckSpec>& out) {
  for (int n = 1; n <= 4; ++n)
    for (double w : {2.0, 3.0, 4.0, 8.0, -2.0})
      add(out, "srivastava_unification", {{"n", label(n)}, {"omega", real_label(w)}}, Metric::rel_le, 1e-9,
          [=](const SeriesParams& p) { return srivastava_unification(n, w, true, p); });
  for (int n = 2; n <= 4; ++n)
    for (double w : {2.0, 3.0, 4.0, 8.0})
      add(out, "srivastava_unification_uncorrected", {{"n", label(n)}, {"omega", real_label(w)}}, Metric::rel_gt,
          1e-3, [=](const SeriesParams& p) { return srivastava_unification(n, w, false, p); });
  for (int n = 0; n <= 5; ++n)
    add(out, "omega4_real_part_odd", {{"n", label(n)}}, Metric::rel_le, 1e-9,
        [=](const SeriesParams& p) { return omega4_real_part_odd(n, p); });
  for (int n = 1; n <= 5; ++n)
    add(out, "omega4_real_part_even", {{"n", label(n)}}, Metric::rel_le, 1e-9,
        [=](const SeriesParams& p) { return omega4_real_part_even(n, p); });
}

void add_half_argument(std::vector<CheckSpec>& out) {
  for (int n = 1; n <= 10; ++n)
    add(out, "beta_recurrence", {{"n", label(n)}}, Metric::abs_le, 1e-12,
        [=](const SeriesParams& p) { return beta_recurrence(n, p); });
  for (int n = 1; n <= 25; ++n)
    add(out, "beta_recurrence_exact", {{"n", label(n)}}, Metric::exact, 0.0,
        [=](const SeriesParams&) { return beta_recurrence_exact(n); });
  for (int n = 0; n <= 8; ++n)
    add(out, "zeta_from_beta", {{"n", label(n)}}, Metric::rel_le, 1e-12,
        [=](const SeriesParams& p) { return zeta_from_beta(n, p); });
  for (int n = 0; n <= 5; ++n)
    add(out, "beta_even_series", {{"n", label(n)}}, Metric::rel_le, 1e-9,
        [=](const SeriesParams& p) { return beta_even_series(n, p); });
  for (int n = 1; n <= 5; ++n)
    add(out, "zeta_odd_series", {{"n", label(n)}}, Metric::rel_le, 1e-9,
        [=](const SeriesParams& p) { return zeta_odd_series(n, p); });
  for (int n = 1; n <= 4; ++n)
    for (double w : {-2.0, 2.0, 3.0, 4.0, 8.0})
      add(out, "companion_beta_series", {{"n", label(n)}, {"omega", real_label(w)}}, Metric::rel_le, 1e-9,
          [=](const SeriesParams& p) { return companion_beta_series(n, w, p); });
  for (int n = 0; n <= 3; ++n)
    for (Parity parity : {Parity::odd, Parity::even})
      add(out, "l_series_relations", {{"n", label(n)}, {"parity", std::string(to_string(parity))}}, Metric::rel_le,
          1e-9, [=](const SeriesParams& p) { return l_series_relations(n, parity, p); });
}

void add_reflection(std::vector<CheckSpec>& out) {
  for (int n = 1; n <= 3; ++n)
    for (double phi : {kPi / 4, kPi / 2, -2 * kPi / 3, 3 * kPi / 2})
      for (const auto& b : kReflectionB)
        for (int which : {0, 1})
          add(out, which == 0 ? "reflection_s1_conj" : "reflection_s1_neg",
              {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}}, Metric::abs_le, 1e-10,
              [=](const SeriesParams& p) { return reflection_s1(n, phi, b, p)[which]; });
  for (int n = 0; n <= 3; ++n)
    for (double phi : {kPi / 4, kPi / 3, -kPi / 2, 2 * kPi / 3})
      for (const auto& b : kReflectionB)
        for (int which : {0, 1})
          add(out, which == 0 ? "reflection_s2_conj" : "reflection_s2_neg",
              {{"n", label(n)}, {"phi", angle_label(phi)}, {"b", label(b)}}, Metric::abs_le, 1e-10,
              [=](const SeriesParams& p) { return reflection_s2(n, phi, b, p)[which]; });
}

void add_exact(std::vector<CheckSpec>& out) {
  for (unsigned n = 1; n <= 25; ++n) {
    add(out, "euler_number_recurrence", {{"n", label(static_cast<long>(n))}}, Metric::exact, 0.0,
        [=](const SeriesParams&) {
          BigRational r;
          for (unsigned k = 0; k <= n; ++k) r += BigRational(binomial(2 * n, 2 * k)) * euler_number(2 * k);
          return exact_check("euler_number_recurrence", {{"n", label(static_cast<long>(n))}}, r);
        });
    add(out, "euler_bernoulli_combination", {{"n", label(static_cast<long>(n))}}, Metric::exact, 0.0,
        [=](const SeriesParams&) {
          BigRational r;
          for (unsigned k = 0; k < n; ++k) r += BigRational(binomial(2 * n - 1, 2 * k)) * euler_number(2 * k);
          const BigRational four_n = BigRational(2).pow(2 * n);
          r -= four_n * (four_n - BigRational(1)) * bernoulli_number(2 * n) / BigRational(static_cast<long>(2 * n));
          return exact_check("euler_bernoulli_combination", {{"n", label(static_cast<long>(n))}}, r);
        });
  }
  for (unsigned k = 0; k <= 40; ++k) {
    const ParamMap pk{{"k", label(static_cast<long>(k))}};
    for (const auto& x : kExactX) {
      ParamMap p = pk;
      p["x"] = label(x);
      add(out, "bernoulli_reflection", p, Metric::exact, 0.0, [=](const SeriesParams&) {
        const auto poly = bernoulli_polynomial(k);
        const auto reflected = poly.compose_linear(BigRational(1), BigRational(-1));
        return exact_check("bernoulli_reflection", p, reflected(x) - sign_power(k) * poly(x));
      });
      add(out, "euler_reflection", p, Metric::exact, 0.0, [=](const SeriesParams&) {
        const auto poly = euler_polynomial(k);
        const auto reflected = poly.compose_linear(BigRational(1), BigRational(-1));
        return exact_check("euler_reflection", p, reflected(x) - sign_power(k) * poly(x));
      });
    }
    add(out, "bernoulli_half_argument", pk, Metric::exact, 0.0, [=](const SeriesParams&) {
      const BigRational factor = BigRational(BigInt(2), BigInt(1)) / BigRational(2).pow(k) - BigRational(1);
      return exact_check("bernoulli_half_argument", pk,
                         bernoulli_polynomial(k)(BigRational(1, 2)) - factor * bernoulli_number(k));
    });
    add(out, "euler_half_argument", pk, Metric::exact, 0.0, [=](const SeriesParams&) {
      return exact_check("euler_half_argument", pk,
                         euler_polynomial(k)(BigRational(1, 2)) * BigRational(2).pow(k) - euler_number(k));
    });
  }
}

void add_special(std::vector<CheckSpec>& out) {
  for (int s = 2; s <= 8; ++s)
    for (double b : {1.0, 0.5, 0.25, 0.75}) {
      const ParamMap p{{"s", label(s)}, {"b", real_label(b)}};
      add(out, "hurwitz_vs_brute_force", p, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
        constexpr std::size_t n = 200000;
        const auto h = hurwitz_zeta(s, b, sp);
        const auto bf = brute_force_lerch(1.0, s, b, n);
        // midpoint estimate of the omitted tail, error O(N^{-s-1})
        const double tail = std::pow(static_cast<double>(n) - 0.5 + b, 1.0 - s) / (s - 1);
        return IdentityCheck::make("hurwitz_vs_brute_force", p, h.value, bf.value + tail, h.terms_used, bf.terms);
      });
    }
  for (int n = 2; n <= 10; ++n)
    add(out, "zeta_half_argument", {{"n", label(n)}}, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
      const auto half = hurwitz_zeta(n, 0.5, sp);
      const auto one = hurwitz_zeta(n, 1.0, sp);
      return IdentityCheck::make("zeta_half_argument", {{"n", label(n)}}, half.value, (std::ldexp(1.0, n) - 1) * one.value,
                                 half.terms_used, one.terms_used);
    });
  for (int k = 0; k <= 7; ++k)
    add(out, "phi_minus_one_beta", {{"k", label(k)}}, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
      const auto phi = lerch_phi(Complex(-1.0, 0.0), k + 1, 0.5, sp);
      const auto beta = dirichlet_beta(k + 1, sp);
      return IdentityCheck::make("phi_minus_one_beta", {{"k", label(k)}}, phi.value,
                                 std::ldexp(1.0, k + 1) * beta.value, phi.terms_used, beta.terms_used);
    });
  for (int k = 2; k <= 8; ++k)
    add(out, "polylog_at_i", {{"k", label(k)}}, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
      const auto li = polylog_unit(k, kPi / 2, sp);
      const auto z = hurwitz_zeta(k, 1.0, sp);
      const auto beta = dirichlet_beta(k, sp);
      const double c = (1.0 - std::ldexp(1.0, k - 1)) / std::ldexp(1.0, 2 * k - 1);
      return IdentityCheck::make("polylog_at_i", {{"k", label(k)}}, li.value, c * z.value + kI * beta.value,
                                 li.terms_used, z.terms_used + beta.terms_used);
    });
  for (int k = 1; k <= 8; ++k)
    add(out, "zeta_even_exact", {{"k", label(k)}}, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
      const auto z = hurwitz_zeta(2 * k, 1.0, sp);
      return IdentityCheck::make("zeta_even_exact", {{"k", label(k)}}, riemann_zeta_even(k).value(), z.value, 0,
                                 z.terms_used);
    });
  for (int k = 0; k <= 7; ++k)
    add(out, "beta_odd_exact", {{"k", label(k)}}, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
      const auto b = dirichlet_beta(2 * k + 1, sp);
      return IdentityCheck::make("beta_odd_exact", {{"k", label(k)}}, beta_odd_exact(k).value(), b.value, 0,
                                 b.terms_used);
    });
  for (int s = 1; s <= 5; ++s)
    add(out, "lerch_phi_i_half", {{"s", label(s)}}, Metric::rel_le, 1e-12, [=](const SeriesParams& sp) {
      const auto a = lerch_phi_i_half(s, sp);
      const auto b = lerch_phi(kI, s, 0.5, sp);
      return IdentityCheck::make("lerch_phi_i_half", {{"s", label(s)}}, a.value, b.value, a.terms_used, b.terms_used);
    });
}

void add_oracle(std::vector<CheckSpec>& out) {
  const std::vector<Complex> as = {1.0, -1.0, kI, std::polar(1.0, kPi / 3), 0.5};
  for (Complex a : as)
    for (int s = 1; s <= 5; ++s) {
      if (a == 1.0 && s == 1) continue;
      for (double b : {1.0, 0.5, 0.25})
        add(out, "mellin_phi", {{"a", complex_label(a)}, {"s", label(s)}, {"b", real_label(b)}}, Metric::rel_le, 1e-9,
            [=](const SeriesParams& p) { return mellin_phi_check(a, s, b, p); });
    }
  for (StripKind kind : {StripKind::bernoulli, StripKind::euler})
    for (int n = kind == StripKind::bernoulli ? 1 : 0; n <= 3; ++n)
      for (double phi : kPhiGrid)
        for (double b : {1.0, 0.5})
          add(out, "strip_shift",
              {{"kind", std::string(to_string(kind))}, {"n", label(n)}, {"phi", angle_label(phi)}, {"b", real_label(b)}},
              Metric::rel_le, 1e-8, [=](const SeriesParams& p) { return strip_shift_check(kind, n, phi, b, p); });
}

void add_series(std::vector<CheckSpec>& out) {
  for (const auto& s : catalog()) {
    const std::string name = s.name;
    add(out, "series_" + name, {{"target", s.target}}, Metric::rel_le, 1e-10,
        [=](const SeriesParams& p) { return series_check(name, p); });
  }
}

// Minimal JSON writer with fixed float formatting.
class JsonWriter {
 public:
  void raw(std::string_view s) { out_ += s; }
  void string(std::string_view s) {
    out_ += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out_ += buf;
          } else {
            out_ += ch;
          }
      }
    }
    out_ += '"';
  }
  void number(double x) {
    if (!std::isfinite(x)) {
      out_ += "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out_ += buf;
  }
  void key(std::string_view k) {
    string(k);
    out_ += ": ";
  }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::rel_le: return "rel_le";
    case Metric::abs_le: return "abs_le";
    case Metric::rel_gt: return "rel_gt";
    case Metric::exact: return "exact";
  }
  return "";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : {Metric::rel_le, Metric::abs_le, Metric::rel_gt, Metric::exact})
    if (to_string(m) == name) return m;
  throw DomainError("unknown metric '" + std::string(name) + "'");
}

bool passes(Metric m, double tolerance, double abs_err, double rel_err) {
  switch (m) {
    case Metric::rel_le: return rel_err <= tolerance;
    case Metric::abs_le: return abs_err <= tolerance;
    case Metric::rel_gt: return rel_err > tolerance;
    case Metric::exact: return abs_err == 0.0;
  }
  return false;
}

std::vector<CheckSpec> suite_checks() {
  std::vector<CheckSpec> out;
  add_master(out);
  add_unification(out);
  add_half_argument(out);
  add_reflection(out);
  add_exact(out);
  add_special(out);
  add_oracle(out);
  add_series(out);
  return out;
}

std::vector<std::string> suite_check_names() {
  std::vector<std::string> names;
  for (const auto& c : suite_checks())
    if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
  return names;
}

std::vector<std::pair<std::string, std::string>> suite_grids() {
  return {
      {"master_bernoulli", "n 1..5; phi +-pi/4, +-pi/2, +-2pi/3; b 1, 3/4, 1/2, 1/4; rel 1e-9"},
      {"master_bernoulli_stress", "n 1..5; phi +-1.9pi; b 1, 3/4, 1/2, 1/4; rel 1e-7"},
      {"master_euler", "n 0..5; phi +-pi/4, +-pi/2, +-2pi/3; b 1, 3/4, 1/2, 1/4; rel 1e-9"},
      {"master_euler_stress", "n 0..5; phi +-0.95pi; b 1, 3/4, 1/2, 1/4; rel 1e-7"},
      {"srivastava_unification", "n 1..4; omega 2, 3, 4, 8, -2; rel 1e-9"},
      {"srivastava_unification_uncorrected", "n 2..4; omega 2, 3, 4, 8; must fail, rel > 1e-3"},
      {"omega4_real_part", "odd n 0..5, even n 1..5; rel 1e-9"},
      {"beta_recurrence", "n 1..10 abs 1e-12; exact n 1..25"},
      {"zeta_from_beta", "n 0..8; rel 1e-12"},
      {"beta_even_series", "n 0..5; rel 1e-9"},
      {"zeta_odd_series", "n 1..5; rel 1e-9"},
      {"companion_beta_series", "n 1..4; omega -2, 2, 3, 4, 8; rel 1e-9"},
      {"l_series_relations", "n 0..3; odd and even; rel 1e-9"},
      {"reflection", "S1: n 1..3, phi pi/4, pi/2, -2pi/3, 3pi/2; S2: n 0..3, phi pi/4, pi/3, -pi/2, 2pi/3; "
                     "b 1/4, 1/3, 1/2; abs 1e-10"},
      {"exact", "Euler-number identities n 1..25; reflection k 0..40 at x 0, 1/4, 1/3, 1/2, 2/3, 1; "
                "half-argument k 0..40"},
      {"special", "cross-checks of zeta, beta, Phi, Li at the documented points; rel 1e-12"},
      {"mellin_phi", "a 1, -1, i, e^(i pi/3), 1/2; s 1..5 (s >= 2 at a = 1); b 1, 1/2, 1/4; rel 1e-9"},
      {"strip_shift", "bernoulli n 1..3, euler n 0..3; phi +-pi/4, +-pi/2, +-2pi/3; b 1, 1/2; rel 1e-8"},
      {"series", "every catalog entry against its reference; rel 1e-10"},
  };
}

bool glob_match(std::string_view pattern, std::string_view text) {
  return fnmatch(std::string(pattern).c_str(), std::string(text).c_str(), 0) == 0;
}

SuiteReport run_suite(const SuiteConfig& config) {
  config.params.validate();
  if (config.tolerance && !(*config.tolerance > 0.0 && std::isfinite(*config.tolerance)))
    throw DomainError("tolerance override must be a positive finite number");
  const auto start = std::chrono::steady_clock::now();

  std::vector<CheckSpec> specs;
  for (auto& c : suite_checks())
    if (glob_match(config.filter, c.name)) specs.push_back(std::move(c));

  std::vector<CheckOutcome> outcomes(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      const CheckSpec& spec = specs[i];
      CheckOutcome& o = outcomes[i];
      o.metric = spec.metric;
      o.tolerance = spec.tolerance;
      if (config.tolerance && (spec.metric == Metric::rel_le || spec.metric == Metric::abs_le))
        o.tolerance = *config.tolerance;
      try {
        o.check = spec.run(config.params);
        o.pass = passes(o.metric, o.tolerance, o.check.abs_err, o.check.rel_err);
      } catch (const std::exception& e) {
        o.check = IdentityCheck{};
        o.check.name = spec.name;
        o.check.params = spec.params;
        o.check.abs_err = o.check.rel_err = std::numeric_limits<double>::infinity();
        o.error = e.what();
        o.pass = false;
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(outcomes.begin(), outcomes.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
    if (a.check.name != b.check.name) return a.check.name < b.check.name;
    return a.check.params_string() < b.check.params_string();
  });

  SuiteReport report;
  report.config = config;
  for (const auto& o : outcomes) (o.pass ? report.pass_count : report.fail_count)++;
  report.checks = std::move(outcomes);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& o : report.checks) {
    char line[160];
    const double shown = o.metric == Metric::abs_le || o.metric == Metric::exact ? o.check.abs_err : o.check.rel_err;
    const char* what = o.metric == Metric::abs_le || o.metric == Metric::exact ? "abs_err" : "rel_err";
    const char* op = o.metric == Metric::rel_gt ? ">" : (o.metric == Metric::exact ? "==" : "<=");
    std::snprintf(line, sizeof line, "%s %s=%.3e (%s %.0e)", o.pass ? "PASS" : "FAIL", what, shown, op,
                  o.tolerance);
    os << line << "  " << o.check.name;
    if (!o.check.params.empty()) os << ' ' << o.check.params_string();
    if (!o.error.empty()) os << "  error: " << o.error;
    os << '\n';
  }
  os << report.pass_count << " passed, " << report.fail_count << " failed, " << report.checks.size() << " total\n";
  return os.str();
}

std::string report_json(const SuiteReport& report) {
  JsonWriter w;
  w.raw("{\n  ");
  w.key("checks");
  w.raw("[");
  bool first = true;
  for (const auto& o : report.checks) {
    w.raw(first ? "\n    {" : ",\n    {");
    first = false;
    w.key("name");
    w.string(o.check.name);
    w.raw(", ");
    w.key("params");
    w.raw("{");
    bool first_param = true;
    for (const auto& [k, v] : o.check.params) {
      if (!first_param) w.raw(", ");
      first_param = false;
      w.key(k);
      w.string(v);
    }
    w.raw("}, ");
    w.key("lhs");
    w.raw("[");
    w.number(o.check.lhs.real());
    w.raw(", ");
    w.number(o.check.lhs.imag());
    w.raw("], ");
    w.key("rhs");
    w.raw("[");
    w.number(o.check.rhs.real());
    w.raw(", ");
    w.number(o.check.rhs.imag());
    w.raw("], ");
    w.key("abs_err");
    w.number(o.check.abs_err);
    w.raw(", ");
    w.key("rel_err");
    w.number(o.check.rel_err);
    w.raw(", ");
    w.key("metric");
    w.string(to_string(o.metric));
    w.raw(", ");
    w.key("tolerance");
    w.number(o.tolerance);
    w.raw(", ");
    w.key("pass");
    w.raw(o.pass ? "true" : "false");
    if (!o.error.empty()) {
      w.raw(", ");
      w.key("error");
      w.string(o.error);
    }
    w.raw("}");
  }
  w.raw(report.checks.empty() ? "],\n  " : "\n  ],\n  ");
  w.key("pass_count");
  w.raw(std::to_string(report.pass_count));
  w.raw(",\n  ");
  w.key("fail_count");
  w.raw(std::to_string(report.fail_count));
  w.raw(",\n  ");
  w.key("total");
  w.raw(std::to_string(report.checks.size()));
  w.raw(",\n  ");
  w.key("wall_time");
  w.number(report.wall_time);
  w.raw(",\n  ");
  w.key("config");
  w.raw("{");
  w.key("filter");
  w.string(report.config.filter);
  w.raw(", ");
  w.key("tolerance");
  if (report.config.tolerance) w.number(*report.config.tolerance);
  else w.raw("null");
  w.raw(", ");
  w.key("series_tolerance");
  w.number(report.config.params.tolerance);
  w.raw(", ");
  w.key("max_terms");
  w.raw(std::to_string(report.config.params.max_terms));
  w.raw(", ");
  w.key("grids");
  w.raw("{");
  bool first_grid = true;
  for (const auto& [k, v] : suite_grids()) {
    if (!first_grid) w.raw(", ");
    first_grid = false;
    w.key(k);
    w.string(v);
  }
  w.raw("}}\n}\n");
  return w.str();
}

}  // namespace lerch
