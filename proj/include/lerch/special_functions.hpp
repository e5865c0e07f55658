#ifndef LERCH_SPECIAL_FUNCTIONS_HPP
#define LERCH_SPECIAL_FUNCTIONS_HPP

#include <string_view>

#include "lerch/big_rational.hpp"
#include "lerch/numeric.hpp"

namespace lerch {

/// rational * pi^pi_power, kept exact until value() is asked for.
struct PiMultiple {
  BigRational coefficient;
  int pi_power = 0;

  double value() const;
};

/// Hurwitz zeta sum_{k>=0} (k+b)^{-s} for s >= 2, Re(b) > 0. Direct sum to
/// an index N, then an Euler-Maclaurin tail built from Bernoulli numbers.
EvalResult hurwitz_zeta(int s, Complex b, const SeriesParams& params = {});

/// zeta(2k) = (-1)^{k-1} (2 pi)^{2k} B_{2k} / (2 (2k)!), with zeta(0) = -1/2.
PiMultiple riemann_zeta_even(int k);

/// riemann_zeta_even(k).value(), cached; safe for concurrent callers.
double zeta_even_value(int k);

/// Dirichlet beta sum_{k>=0} (-1)^k (2k+1)^{-s}, s >= 1, by the
/// Cohen-Rodriguez Villegas-Zagier alternating-series acceleration.
EvalResult dirichlet_beta(int s, const SeriesParams& params = {});

/// beta(2k+1) = (-1)^k (pi/2)^{2k+1} E_{2k} / (2 (2k)!).
PiMultiple beta_odd_exact(int k);

/// beta_odd_exact(k).value(), cached; safe for concurrent callers.
double beta_odd_value(int k);

/// Lerch transcendent sum_{k>=0} a^k (k+b)^{-s} for |a| <= 1, Re(b) > 0.
///   |a| < 1          direct sum with a geometric tail bound
///   a = 1            hurwitz_zeta (s >= 2)
///   |a| = 1, s >= 2  partial sums with three rounds of Aitken delta-squared
///   |a| = 1, s = 1   quadrature of int_0^inf e^{-bt} / (1 - a e^{-t}) dt
EvalResult lerch_phi(Complex a, int s, Complex b, const SeriesParams& params = {});

/// Li_s(e^{i phi}). s = 1 uses -log(1 - e^{i phi}) on the principal branch.
EvalResult polylog_unit(int s, double phi, const SeriesParams& params = {});

enum class Character { chi1, chi2 };

/// +1/-1 value of the mod-8 character at an odd residue, 0 at even n.
int character_value(Character chi, long n);
Character parse_character(std::string_view name);

/// L(s, chi) for the two real characters mod 8 used with Phi(i, s, 1/2).
/// s >= 2: 8^{-s} sum_r chi(r) zeta(s, r/8). s = 1: blocked partial sums
/// plus the regularized Euler-Maclaurin tail (digamma asymptotics).
EvalResult l_series(Character chi, int s, const SeriesParams& params = {});

/// Phi(i, s, 1/2) from Hurwitz values at b = 1/8, 3/8, 5/8, 7/8 (s >= 2) or
/// from L(1, chi_1), L(1, chi_2) (s = 1).
EvalResult lerch_phi_i_half(int s, const SeriesParams& params = {});

// Exact n! lives in big_rational.hpp as lerch::factorial.

}  // namespace lerch

#endif
