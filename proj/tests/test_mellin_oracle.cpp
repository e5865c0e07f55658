#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lerch/mellin_oracle.hpp"
#include "lerch/recurrence_identities.hpp"
#include "lerch/special_functions.hpp"
#include "test_util.hpp"

using namespace lerch;

TEST_CASE("mellin transform of eta") {
  CHECK(rel_diff(mellin_eta(-1.0, 2, 1.0).value, kPi * kPi / 12) < 1e-12);
  CHECK(rel_diff(mellin_eta(1.0, 2, 1.0).value, oracle::zeta2) < 1e-12);
  CHECK(rel_diff(mellin_eta(kI, 2, 0.5).value, oracle::phi_i_2_half) < 1e-12);
  CHECK(mellin_eta(kI, 3, 0.5).error_estimate >= 0.0);
  CHECK(mellin_phi_check(kI, 3, 0.5).rel_err < 1e-9);
  CHECK(mellin_phi_check(-1.0, 2, 1.0).rel_err < 1e-9);
  CHECK(mellin_phi_check(1.0, 2, 1.0).rel_err < 1e-9);
  CHECK_THROWS_AS(mellin_phi_check(1.0, 1, 1.0), DomainError);
  for (int s = 1; s <= 5; ++s)
    for (double b : {1.0, 0.5, 0.25}) {
      CAPTURE(s);
      CAPTURE(b);
      CHECK(mellin_phi_check(std::polar(1.0, kPi / 3), s, b).rel_err < 1e-9);
      CHECK(mellin_phi_check(0.5, s, b).rel_err < 1e-9);
    }
}

TEST_CASE("strip shift documented points") {
  CHECK(strip_shift_check(StripKind::bernoulli, 1, kPi / 2, 0.5).rel_err < 1e-8);
  CHECK(strip_shift_check(StripKind::euler, 0, kPi / 2, 0.5).rel_err < 1e-8);
  CHECK(strip_shift_check(StripKind::euler, 2, -kPi / 3, 1.0).rel_err < 1e-8);
  CHECK(parse_strip_kind("euler") == StripKind::euler);
  CHECK_THROWS(parse_strip_kind("other"));
  CHECK_THROWS_AS(strip_shift_check(StripKind::bernoulli, 0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(strip_shift_check(StripKind::euler, 1, kPi, 1.0), DomainError);
}

TEST_CASE("quadrature path agrees with the series path") {
  // strip sides are (i phi)^n times the sides of the master identities
  for (StripKind kind : {StripKind::bernoulli, StripKind::euler})
    for (int n = kind == StripKind::bernoulli ? 1 : 0; n <= 3; ++n)
      for (double phi : {kPi / 4, -kPi / 2, 2 * kPi / 3})
        for (long bd : {1L, 2L}) {
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(phi);
          CAPTURE(bd);
          const BigRational b(1, bd);
          const auto sides = strip_shift_sides(kind, n, phi, b.to_double());
          const Complex scale = i_power(phi, n);
          const Complex lhs = kind == StripKind::bernoulli ? master_bernoulli_lhs(n, phi, b).value
                                                           : master_euler_lhs(n, phi, b).value;
          const Complex rhs = kind == StripKind::bernoulli ? master_bernoulli_rhs(n, phi, b).value
                                                           : master_euler_rhs(n, phi, b).value;
          CHECK(rel_diff(sides.lhs.value, scale * lhs) < 1e-8);
          CHECK(rel_diff(sides.rhs.value, scale * rhs) < 1e-8);
        }
}

TEST_CASE("brute force oracles") {
  const auto zero = brute_force_lerch(0.0, 3, 0.5, 1);
  CHECK(zero.value == Complex(8.0));
  const auto z3 = brute_force_lerch(1.0, 3, 1.0, 1'000'000);
  REQUIRE(z3.tail_bound.has_value());
  CHECK(*z3.tail_bound <= 5e-13);
  CHECK(std::fabs(z3.value.real() - oracle::zeta3) <= *z3.tail_bound + 4e-16);
  CHECK(std::fabs(z3.value.real() + z3.tail_estimate.real() - oracle::zeta3) <= 1e-17 + 4e-16);
  const auto leibniz = brute_force_lerch(-1.0, 1, 0.5, 10'000'000);
  CHECK(std::fabs(leibniz.value.real() - kPi / 2) <= *leibniz.tail_bound);
  CHECK(*leibniz.tail_bound <= 2e-7);
  CHECK_THROWS_AS(brute_force_lerch(1.0, 2, 1.0, 0), DomainError);
}

TEST_CASE("doubling N never moves a partial sum by more than its tail bound") {
  struct Case {
    Complex a;
    int s;
    double b;
  };
  for (const Case& c : {Case{1.0, 2, 1.0}, Case{1.0, 4, 0.25}, Case{-1.0, 1, 0.5}, Case{-1.0, 3, 1.0},
                        Case{Complex(0.3, 0.6), 1, 0.5}, Case{0.9, 2, 0.75}})
    for (std::size_t n : {10UL, 1000UL, 100000UL}) {
      CAPTURE(c.a);
      CAPTURE(c.s);
      CAPTURE(n);
      const auto lo = brute_force_lerch(c.a, c.s, c.b, n);
      const auto hi = brute_force_lerch(c.a, c.s, c.b, 2 * n);
      REQUIRE(lo.tail_bound.has_value());
      CHECK(std::abs(hi.value - lo.value) <= *lo.tail_bound * (1 + 1e-12) + 1e-15);
    }
}
