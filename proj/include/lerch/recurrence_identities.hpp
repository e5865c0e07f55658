#ifndef LERCH_RECURRENCE_IDENTITIES_HPP
#define LERCH_RECURRENCE_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "lerch/big_rational.hpp"
#include "lerch/identity_check.hpp"
#include "lerch/numeric.hpp"

namespace lerch {

// Master identities. With S1 and S2 the Phi-side combinations,
//   S1(n, phi, b) = sum_k B_k(1-b) (i phi)^k / (k! (k+n))          n >= 1, 0 < |phi| < 2 pi
//   S2(n, phi, b) = 1/2 sum_k E_k(1-b) (i phi)^{k+1} / (k! (k+n+1))  n >= 0, 0 < |phi| < pi
// The left sides come from hurwitz_zeta and lerch_phi, the right sides
// from exact Bernoulli/Euler polynomial values.
EvalResult master_bernoulli_lhs(int n, double phi, const BigRational& b, const SeriesParams& params = {});
EvalResult master_bernoulli_rhs(int n, double phi, const BigRational& b, const SeriesParams& params = {});
IdentityCheck master_bernoulli(int n, double phi, const BigRational& b, const SeriesParams& params = {});

EvalResult master_euler_lhs(int n, double phi, const BigRational& b, const SeriesParams& params = {});
EvalResult master_euler_rhs(int n, double phi, const BigRational& b, const SeriesParams& params = {});
IdentityCheck master_euler(int n, double phi, const BigRational& b, const SeriesParams& params = {});

/// sum_k zeta(2k) / ((2k+n) omega^{2k}) against
///   pi i/(2(n+1)omega) - log(1 - q)/2 - (n!/2)(i omega/2pi)^n zeta(n+1)
///     + 1/2 sum_{k=1}^n C(n,k) k! (i omega/2pi)^k Li_{k+1}(q),   q = e^{2 pi i/omega}.
/// With corrected = false the polylog index is k instead of k+1.
EvalResult srivastava_lhs(int n, double omega, const SeriesParams& params = {});
EvalResult srivastava_rhs(int n, double omega, bool corrected = true, const SeriesParams& params = {});
IdentityCheck srivastava_unification(int n, double omega, bool corrected = true, const SeriesParams& params = {});

enum class Parity { odd, even };
Parity parse_parity(std::string_view name);
std::string_view to_string(Parity parity);

/// The two omega = 4 relations between beta(2k), zeta(2k+1) and
///   -log(2)/2 - 2 sum_k zeta(2k) / (16^k (2k + 2n + 1))   (odd)
///   -log(2)/2 - 2 sum_k zeta(2k) / (16^k (2k + 2n))       (even)
/// Coefficients are visited left to right: the finite-sum terms, then the
/// log 2 coefficient, then the series prefactor.
IdentityCheck omega4_real_part_odd(int n, const SeriesParams& params = {},
                                   std::optional<Perturbation> perturbation = std::nullopt);
IdentityCheck omega4_real_part_even(int n, const SeriesParams& params = {},
                                    std::optional<Perturbation> perturbation = std::nullopt);
std::size_t omega4_coefficient_count(int n, Parity parity);

/// sum_{k=0}^n 2^{2k} (-1)^k beta(2k+1) / ((2n-2k)! pi^{2k}) = 0, numeric betas.
IdentityCheck beta_recurrence(int n, const SeriesParams& params = {});
/// Same relation with beta(2k+1) = c_k pi^{2k+1}; lhs is the exact
/// rational residual converted to double, so it is 0 exactly when it holds.
IdentityCheck beta_recurrence_exact(int n);

/// zeta(2n+2) from beta(1), beta(3), ..., beta(2n+1).
IdentityCheck zeta_from_beta(int n, const SeriesParams& params = {});

/// sum_k C(2n+1,2k+1) 2^{2k+1} (2k+1)!/pi^{2k+1} (-1)^k beta(2k+2)
///   = sum_k (2^{2k-1}-1) zeta(2k) / (2^{4k-1} (2k+2n+1)).
IdentityCheck beta_even_series(int n, const SeriesParams& params = {});

/// zeta(2n+1) from the half-argument series and beta(2), ..., beta(2n).
IdentityCheck zeta_odd_series(int n, const SeriesParams& params = {});

/// i sum_k beta(2k+1) / (omega^{2k+1} (2k+n+1)) against
///   -n! (2 omega i/pi)^n beta(n+1)
///     + 1/2 e^{i pi/(2 omega)} sum_k C(n,k) (i omega/pi)^k k! Phi(-e^{i pi/omega}, k+1, 1/2),
/// for n >= 1 and |omega| > 1.
IdentityCheck companion_beta_series(int n, double omega, const SeriesParams& params = {});

/// Relations between L(2k+2, chi_1), L(2k+1, chi_2), beta(2n+2) and
/// sum_k beta(2k+1) / (4^k (2k + 2n + 1)) (odd) or (2k + 2n + 2) (even).
IdentityCheck l_series_relations(int n, Parity parity, const SeriesParams& params = {});

/// S1(n, phi, b) = conj(S1(n, phi, 1-b)) and S1(n, phi, b) = S1(n, -phi, 1-b);
/// the first pair uses the Phi side, the second the Bernoulli series.
std::array<IdentityCheck, 2> reflection_s1(int n, double phi, const BigRational& b, const SeriesParams& params = {});
/// S2(n, phi, b) = -conj(S2(n, phi, 1-b)) = -S2(n, -phi, 1-b).
std::array<IdentityCheck, 2> reflection_s2(int n, double phi, const BigRational& b, const SeriesParams& params = {});

}  // namespace lerch

#endif
