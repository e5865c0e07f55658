#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "lerch/mellin_oracle.hpp"
#include "lerch/special_functions.hpp"
#include "test_util.hpp"

using namespace lerch;

TEST_CASE("hurwitz zeta") {
  CHECK(rel_diff(hurwitz_zeta(2, 1.0).value, oracle::zeta2) < 1e-15);
  CHECK(rel_diff(hurwitz_zeta(3, 1.0).value, oracle::zeta3) < 1e-15);
  CHECK(rel_diff(hurwitz_zeta(7, 1.0).value, oracle::zeta7) < 1e-15);
  CHECK(rel_diff(hurwitz_zeta(3, 0.25).value, oracle::hurwitz3_quarter) < 1e-14);
  CHECK(rel_diff(hurwitz_zeta(4, Complex(0.5, 0.75)).value, oracle::hurwitz4_b) < 1e-13);
  for (int n = 2; n <= 10; ++n)
    CHECK(rel_diff(hurwitz_zeta(n, 0.5).value, (std::ldexp(1.0, n) - 1) * hurwitz_zeta(n, 1.0).value) < 1e-12);
  CHECK_THROWS_AS(hurwitz_zeta(1, 1.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2, -0.5), DomainError);
  const auto r = hurwitz_zeta(3, 1.0);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.terms_used <= SeriesParams{}.max_terms);
}

TEST_CASE("exact zeta and beta values") {
  CHECK(riemann_zeta_even(0).value() == -0.5);
  CHECK(riemann_zeta_even(1).coefficient == BigRational(1, 6));
  CHECK(riemann_zeta_even(1).pi_power == 2);
  CHECK(riemann_zeta_even(2).coefficient == BigRational(1, 90));
  CHECK(beta_odd_exact(0).coefficient == BigRational(1, 4));
  CHECK(beta_odd_exact(1).coefficient == BigRational(1, 32));
  CHECK(beta_odd_exact(2).coefficient == BigRational(5, 1536));
  CHECK(beta_odd_exact(2).pi_power == 5);
  for (int k = 1; k <= 8; ++k) CHECK(rel_diff(riemann_zeta_even(k).value(), hurwitz_zeta(2 * k, 1.0).value) < 1e-12);
  for (int k = 0; k <= 7; ++k)
    CHECK(rel_diff(beta_odd_exact(k).value(), dirichlet_beta(2 * k + 1).value) < 1e-12);
  CHECK(zeta_even_value(3) == riemann_zeta_even(3).value());
  CHECK(beta_odd_value(3) == beta_odd_exact(3).value());
}

TEST_CASE("dirichlet beta") {
  CHECK(rel_diff(dirichlet_beta(1).value, kPi / 4) < 1e-15);
  CHECK(rel_diff(dirichlet_beta(2).value, oracle::catalan) < 1e-15);
  CHECK(rel_diff(dirichlet_beta(3).value, oracle::beta3) < 1e-15);
  CHECK(rel_diff(dirichlet_beta(4).value, oracle::beta4) < 1e-15);
  CHECK(dirichlet_beta(2).terms_used <= 60);
  CHECK_THROWS_AS(dirichlet_beta(0), DomainError);
  SeriesParams tight;
  tight.max_terms = 2;
  CHECK_THROWS_AS(dirichlet_beta(2, tight), NonConvergence);
}

TEST_CASE("polylog on the unit circle") {
  CHECK(rel_diff(polylog_unit(1, -kPi).value, -std::log(2.0)) < 1e-15);
  CHECK(rel_diff(polylog_unit(2, kPi / 2).value, oracle::li2_i) < 1e-14);
  CHECK(rel_diff(polylog_unit(2, 0.0).value, oracle::zeta2) < 1e-14);
  CHECK(rel_diff(polylog_unit(3, 2 * kPi / 3).value, oracle::li3_e2pi3) < 1e-14);
  CHECK(rel_diff(polylog_unit(1, kPi / 4).value, oracle::li1_epi4) < 1e-15);
  CHECK_THROWS_AS(polylog_unit(1, 0.0), DomainError);
  CHECK_THROWS_AS(polylog_unit(1, 2 * kPi), DomainError);
  for (int k = 2; k <= 8; ++k) {
    const double c = (1.0 - std::ldexp(1.0, k - 1)) / std::ldexp(1.0, 2 * k - 1);
    CHECK(rel_diff(polylog_unit(k, kPi / 2).value, c * hurwitz_zeta(k, 1.0).value + kI * dirichlet_beta(k).value) <
          1e-12);
  }
}

TEST_CASE("lerch phi") {
  CHECK(lerch_phi(0.0, 4, 2.0).value == Complex(0.0625));
  CHECK(rel_diff(lerch_phi(-1.0, 1, 0.5).value, kPi / 2) < 1e-14);
  CHECK(rel_diff(lerch_phi(std::polar(1.0, -kPi), 3, 0.5).value, kPi * kPi * kPi / 4) < 1e-12);
  CHECK(rel_diff(lerch_phi(kI, 1, 0.5).value, oracle::phi_i_1_half) < 1e-13);
  CHECK(rel_diff(lerch_phi(kI, 2, 0.5).value, oracle::phi_i_2_half) < 1e-13);
  CHECK(rel_diff(lerch_phi(std::polar(1.0, kPi / 3), 3, 0.25).value, oracle::phi_e3_3_quarter) < 1e-13);
  CHECK(rel_diff(lerch_phi(std::polar(1.0, kPi / 3), 1, 1.0).value, oracle::phi_e3_1_1) < 1e-13);
  CHECK(rel_diff(lerch_phi(0.5, 2, 1.0).value, oracle::phi_half_2_1) < 1e-13);
  CHECK(rel_diff(lerch_phi(-1.0, 1, 1.0).value, std::log(2.0)) < 1e-14);
  for (int s = 2; s <= 8; ++s)
    for (double b : {1.0, 0.5, 0.25, 0.75})
      CHECK(rel_diff(lerch_phi(1.0, s, b).value, hurwitz_zeta(s, b).value) < 1e-12);
  for (int k = 0; k <= 7; ++k)
    CHECK(rel_diff(lerch_phi(-1.0, k + 1, 0.5).value, std::ldexp(1.0, k + 1) * dirichlet_beta(k + 1).value) < 1e-12);
  CHECK_THROWS_AS(lerch_phi(1.0, 1, 1.0), DomainError);
  CHECK_THROWS_AS(lerch_phi(1.5, 2, 1.0), DomainError);
  CHECK_THROWS_AS(lerch_phi(0.5, 2, 0.0), DomainError);
  CHECK_THROWS_AS(lerch_phi(0.5, 0, 1.0), DomainError);
}

TEST_CASE("mod-8 characters and L-series") {
  CHECK(character_value(Character::chi1, 1) == 1);
  CHECK(character_value(Character::chi1, 3) == 1);
  CHECK(character_value(Character::chi1, 13) == -1);
  CHECK(character_value(Character::chi1, 7) == -1);
  CHECK(character_value(Character::chi2, 7) == 1);
  CHECK(character_value(Character::chi2, 11) == -1);
  CHECK(character_value(Character::chi2, 4) == 0);
  CHECK(parse_character("chi2") == Character::chi2);
  CHECK_THROWS_AS(parse_character("chi3"), DomainError);
  CHECK(rel_diff(l_series(Character::chi2, 1).value, oracle::l1chi2) < 1e-15);
  CHECK(rel_diff(l_series(Character::chi1, 1).value, oracle::l1chi1) < 1e-15);
  CHECK(rel_diff(l_series(Character::chi1, 2).value, oracle::l2chi1) < 1e-14);
  CHECK(rel_diff(l_series(Character::chi2, 3).value, oracle::l3chi2) < 1e-14);
  for (Character chi : {Character::chi1, Character::chi2}) {
    const auto bf = brute_force_l_series(chi, 3, 1'000'000);
    CHECK(std::abs(l_series(chi, 3).value - bf.value) <= *bf.tail_bound + 1e-15);
  }
}

TEST_CASE("lerch_phi_i_half two paths") {
  for (int s = 1; s <= 5; ++s) {
    CAPTURE(s);
    CHECK(rel_diff(lerch_phi_i_half(s).value, lerch_phi(kI, s, 0.5).value) < 1e-12);
  }
  const Complex w = std::polar(1.0, -kPi / 4) * lerch_phi_i_half(1).value / std::sqrt(2.0);
  CHECK(std::fabs(w.real() - oracle::l1chi1) < 1e-14);
  CHECK(std::fabs(w.imag() + oracle::l1chi2) < 1e-14);
  const Complex w2 = std::polar(1.0, -kPi / 4) * lerch_phi_i_half(2).value / std::pow(2.0, 1.5);
  CHECK(std::fabs(w2.real() - l_series(Character::chi1, 2).value.real()) < 1e-12);
  CHECK(std::fabs(w2.imag() + l_series(Character::chi2, 2).value.real()) < 1e-12);
}

TEST_CASE("error estimates bound the deviation from brute force on a random grid") {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr std::size_t n = 400'000;
  for (int point = 0; point < 20; ++point) {
    const int kind = point % 4;
    const int s = 2 + static_cast<int>(unit(rng) * 4);
    const double b = 0.25 + 0.75 * unit(rng);
    Complex a;
    if (kind == 0) a = std::polar(0.95 * unit(rng), 2 * kPi * unit(rng));
    else if (kind == 1) a = 1.0;
    else if (kind == 2) a = -1.0;
    else a = std::polar(1.0, kPi * (0.2 + 1.6 * unit(rng)));
    CAPTURE(point);
    CAPTURE(a);
    CAPTURE(s);
    CAPTURE(b);
    const auto v = lerch_phi(a, s, b);
    const auto bf = brute_force_lerch(a, s, b, n);
    double oracle_error = 0.0;
    Complex reference = bf.value;
    if (kind == 1 || kind == 2) {
      reference += bf.tail_estimate;
      oracle_error = s * std::pow(static_cast<double>(n) - 1.0 + b, -s - 1.0);
    } else if (kind == 0) {
      oracle_error = *bf.tail_bound;
    } else {
      // summation by parts: |sum_{k>=N} a^k f(k)| <= 2 f(N) / |1 - a|
      oracle_error = 2.0 * std::pow(static_cast<double>(n) + b, -s) / std::abs(1.0 - a);
    }
    const double rounding = 64 * std::numeric_limits<double>::epsilon() * std::abs(v.value) + 1e-300;
    CHECK(v.error_estimate >= 0.0);
    CHECK(std::abs(v.value - reference) <= v.error_estimate + oracle_error + rounding);
  }
}
