#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lerch/mellin_oracle.hpp"
#include "lerch/recurrence_identities.hpp"
#include "lerch/special_functions.hpp"
#include "test_util.hpp"

using namespace lerch;

namespace {
BigRational q(long p, long d = 1) { return BigRational(p, d); }
}  // namespace

TEST_CASE("identity check record") {
  const auto c = IdentityCheck::make("x", {{"n", "1"}, {"b", "1/2"}}, Complex(3.0, 4.0), 0.0);
  CHECK(c.abs_err == 5.0);
  CHECK(c.rel_err == 1.0);
  CHECK(c.params_string() == "b=1/2,n=1");
  const auto small = IdentityCheck::make("y", {}, 1e-3, 2e-3);
  CHECK(small.rel_err == doctest::Approx(1e-3));
  CHECK(angle_label(kPi / 4) == "pi/4");
  CHECK(angle_label(-2 * kPi / 3) == "-2*pi/3");
  CHECK(angle_label(-kPi) == "-pi");
  CHECK(label(q(3, 4)) == "3/4");
  CHECK(complex_label(kI) == "i");
}

TEST_CASE("master bernoulli sides against frozen sums") {
  CHECK(rel_diff(master_bernoulli_rhs(1, kPi / 4, q(1)).value, oracle::s1_1_pi4_1) < 1e-14);
  CHECK(rel_diff(master_bernoulli_lhs(1, kPi / 4, q(1)).value, oracle::s1_1_pi4_1) < 1e-12);
  CHECK(rel_diff(master_bernoulli_rhs(2, kPi, q(1, 2)).value, oracle::s1_2_pi_half) < 1e-14);
  CHECK(rel_diff(master_bernoulli_lhs(2, kPi, q(1, 2)).value, oracle::s1_2_pi_half) < 1e-10);
  CHECK(rel_diff(master_bernoulli_rhs(3, -2 * kPi / 3, q(1, 4)).value, oracle::s1_3_m2pi3_quarter) < 1e-13);
  CHECK(rel_diff(master_bernoulli_lhs(3, -2 * kPi / 3, q(1, 4)).value, oracle::s1_3_m2pi3_quarter) < 1e-10);
}

TEST_CASE("master euler sides against frozen sums") {
  CHECK(rel_diff(master_euler_rhs(0, kPi / 2, q(1, 2)).value, oracle::s2_0_pi2_half) < 1e-14);
  CHECK(rel_diff(master_euler_lhs(0, kPi / 2, q(1, 2)).value, oracle::s2_0_pi2_half) < 1e-12);
  CHECK(rel_diff(master_euler_rhs(3, -kPi / 3, q(3, 4)).value, oracle::s2_3_mpi3_3quarter) < 1e-13);
  CHECK(rel_diff(master_euler_lhs(3, -kPi / 3, q(3, 4)).value, oracle::s2_3_mpi3_3quarter) < 1e-10);
  CHECK(rel_diff(master_euler_rhs(1, kPi / 2, q(1)).value, oracle::s2_1_pi2_1) < 1e-14);
  CHECK(rel_diff(master_euler_lhs(1, kPi / 2, q(1)).value, oracle::s2_1_pi2_1) < 1e-12);
}

TEST_CASE("master identities at documented points") {
  CHECK(master_bernoulli(1, -kPi, q(1)).rel_err < 1e-9);
  CHECK(master_bernoulli(2, kPi, q(1, 2)).rel_err < 1e-9);
  CHECK(master_bernoulli(1, -kPi / 2, q(1)).rel_err < 1e-9);
  CHECK(master_euler(0, kPi / 2, q(1, 2)).rel_err < 1e-9);
  CHECK(master_euler(1, kPi / 2, q(1)).rel_err < 1e-9);
  CHECK(master_euler(3, -kPi / 3, q(3, 4)).rel_err < 1e-9);
  CHECK(master_bernoulli(4, 1.9 * kPi, q(1, 4)).rel_err < 1e-7);
  CHECK(master_euler(5, -0.95 * kPi, q(3, 4)).rel_err < 1e-7);
  CHECK_THROWS_AS(master_bernoulli(1, 2 * kPi, q(1)), DomainError);
  CHECK_THROWS_AS(master_bernoulli(0, 1.0, q(1)), DomainError);
  CHECK_THROWS_AS(master_euler(0, kPi, q(1)), DomainError);
  CHECK_THROWS_AS(master_euler(-1, 1.0, q(1)), DomainError);
}

TEST_CASE("master bernoulli at b = 1 reproduces the unification formula") {
  for (int n = 1; n <= 4; ++n)
    for (double omega : {2.0, 3.0, 4.0, 8.0, -2.0}) {
      CAPTURE(n);
      CAPTURE(omega);
      const double phi = -2 * kPi / omega;
      const Complex shift(0.0, kPi / (omega * (n + 1)));
      const Complex from_master_rhs = master_bernoulli_rhs(n, phi, q(1)).value;
      const Complex from_master_lhs = master_bernoulli_lhs(n, phi, q(1)).value;
      const Complex via_lhs = -2.0 * srivastava_lhs(n, omega).value + shift;
      const Complex via_rhs = -2.0 * srivastava_rhs(n, omega).value + shift;
      CHECK(rel_diff(from_master_rhs, via_lhs) < 1e-11);
      CHECK(rel_diff(from_master_lhs, via_rhs) < 1e-11);
    }
}

TEST_CASE("unification formula and its uncorrected variant") {
  CHECK(srivastava_unification(1, 2.0).rel_err < 1e-9);
  CHECK(srivastava_unification(3, 4.0).rel_err < 1e-9);
  CHECK(srivastava_unification(2, 4.0, false).rel_err > 1e-3);
  CHECK(srivastava_unification(2, 4.0, false).name == "srivastava_unification_uncorrected");
  CHECK_THROWS_AS(srivastava_unification(1, 0.5), DomainError);
}

TEST_CASE("omega = 4 relations") {
  for (int n = 0; n <= 2; ++n) CHECK(omega4_real_part_odd(n).rel_err < 1e-9);
  for (int n = 1; n <= 3; ++n) CHECK(omega4_real_part_even(n).rel_err < 1e-9);
  CHECK(std::fabs(omega4_real_part_odd(0).lhs.real() - oracle::catalan * 2 / kPi) < 1e-14);
  CHECK(omega4_coefficient_count(2, Parity::odd) == 7);
  for (int n = 0; n <= 3; ++n)
    for (std::size_t c = 0; c < omega4_coefficient_count(n, Parity::odd); ++c) {
      CAPTURE(n);
      CAPTURE(c);
      const auto chk = omega4_real_part_odd(n, {}, Perturbation{c});
      CHECK(chk.rel_err > 1e-9);
      CHECK(chk.params.count("perturbed") == 1);
    }
  for (int n = 1; n <= 3; ++n)
    for (std::size_t c = 0; c < omega4_coefficient_count(n, Parity::even); ++c) {
      CAPTURE(n);
      CAPTURE(c);
      CHECK(omega4_real_part_even(n, {}, Perturbation{c}).rel_err > 1e-9);
    }
  CHECK_THROWS_AS(omega4_real_part_even(0), DomainError);
}

TEST_CASE("half-argument relations") {
  const auto r1 = beta_recurrence(1);
  CHECK(r1.abs_err < 1e-12);
  CHECK(beta_recurrence(2).abs_err < 1e-12);
  CHECK(beta_recurrence_exact(10).abs_err == 0.0);
  for (int n = 1; n <= 25; ++n) CHECK(beta_recurrence_exact(n).abs_err == 0.0);
  CHECK(rel_diff(zeta_from_beta(0).lhs, oracle::zeta2) < 1e-14);
  for (int n = 0; n <= 8; ++n) CHECK(zeta_from_beta(n).rel_err < 1e-12);
  for (int n = 0; n <= 3; ++n) CHECK(beta_even_series(n).rel_err < 1e-9);
  CHECK(zeta_odd_series(1).rel_err < 1e-9);
  CHECK(rel_diff(zeta_odd_series(2).rhs, oracle::zeta5) < 1e-9);
  CHECK(zeta_odd_series(3).rel_err < 1e-9);
}

TEST_CASE("companion series and L-series relations") {
  CHECK(companion_beta_series(1, -2.0).rel_err < 1e-9);
  CHECK(companion_beta_series(2, 3.0).rel_err < 1e-9);
  CHECK(companion_beta_series(1, 4.0).rel_err < 1e-9);
  CHECK_THROWS_AS(companion_beta_series(1, 0.5), DomainError);
  CHECK(l_series_relations(0, Parity::odd).rel_err < 1e-9);
  CHECK(l_series_relations(0, Parity::even).rel_err < 1e-9);
  CHECK(l_series_relations(1, Parity::odd).rel_err < 1e-9);
  CHECK(parse_parity("even") == Parity::even);
  CHECK_THROWS(parse_parity("both"));
}

TEST_CASE("reflection of the master sums") {
  for (const auto& c : reflection_s1(1, kPi / 2, q(1, 4))) CHECK(c.abs_err < 1e-10);
  for (const auto& c : reflection_s1(2, kPi / 3, q(1, 2))) CHECK(c.abs_err < 1e-10);
  for (const auto& c : reflection_s2(2, kPi / 3, q(1, 3))) CHECK(c.abs_err < 1e-10);
  const auto s1 = reflection_s1(1, kPi / 2, q(1, 4));
  CHECK(s1[0].name == "reflection_s1_conj");
  CHECK(s1[1].name == "reflection_s1_neg");
}
