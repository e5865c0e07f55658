#ifndef LERCH_MELLIN_ORACLE_HPP
#define LERCH_MELLIN_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "lerch/identity_check.hpp"
#include "lerch/numeric.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/special_functions.hpp"

namespace lerch {

/// Quadrature of int_0^T t^{s-1} e^{-bt} / (1 - a e^{-t}) dt plus a bound on
/// the part beyond T, compared with (s-1)! Phi(a, s, b).
IdentityCheck mellin_phi_check(Complex a, int s, double b, const SeriesParams& params = {});

/// M(eta)(s) for eta(t) = e^{(1-b)t} / (e^t - a); the error estimate
/// includes the tail beyond the cutoff.
QuadratureResult mellin_eta(Complex a, int s, double b, const SeriesParams& params = {});

enum class StripKind { bernoulli, euler };

StripKind parse_strip_kind(std::string_view name);
std::string_view to_string(StripKind kind);

/// Both sides of
///   M(g)(n+1) - sum_k C(n,k) (i phi)^{n-k} M(g_phi)(k+1) = i int_0^phi (it)^n g(it) dt
/// with g(z) = e^{(1-b)z} / (e^z -+ 1) and g_phi(z) = g(z + i phi). Every
/// Mellin transform is a real-axis quadrature; the right side is a
/// quadrature along the imaginary segment.
struct StripShiftSides {
  QuadratureResult lhs;
  QuadratureResult rhs;
};

StripShiftSides strip_shift_sides(StripKind kind, int n, double phi, double b, const SeriesParams& params = {});
IdentityCheck strip_shift_check(StripKind kind, int n, double phi, double b, const SeriesParams& params = {});

struct BruteForceResult {
  Complex value;
  std::size_t terms = 0;
  /// Rigorous bound on the omitted tail, when one is known.
  std::optional<double> tail_bound;
  /// Asymptotic estimate of the omitted tail (a = +-1, real b), accurate to
  /// O(N^{-s-1}); zero when not available.
  Complex tail_estimate = 0.0;
};

/// Plain partial sum sum_{k<N} a^k / (k+b)^s. Tail bounds: a = 1 integral
/// bound, a = -1 first omitted term, |a| < 1 geometric. Tail estimates:
/// a = 1 midpoint integral, a = -1 two-term Euler transform.
BruteForceResult brute_force_lerch(Complex a, int s, Complex b, std::size_t n_terms);

/// sum_{n < 8 blocks} chi(n) n^{-s}, summed one period at a time.
BruteForceResult brute_force_l_series(Character chi, int s, std::size_t blocks);

}  // namespace lerch

#endif
