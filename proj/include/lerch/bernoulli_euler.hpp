#ifndef LERCH_BERNOULLI_EULER_HPP
#define LERCH_BERNOULLI_EULER_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lerch/big_rational.hpp"

namespace lerch {

/// Polynomial with exact rational coefficients; coefficient i multiplies x^i.
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case no coefficients are stored.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coefficients);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  BigRational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigRational operator()(const BigRational& x) const;

  /// p(c0 + c1 x), exact.
  RationalPolynomial compose_linear(const BigRational& c0, const BigRational& c1) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const BigRational& s);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// B_0 .. B_{n_max}, exact, from sum_{k=0}^{n} C(n+1,k) B_k = 0 with B_0 = 1.
/// Backed by a process-wide table that grows on demand and is safe for
/// concurrent callers.
std::vector<BigRational> bernoulli_numbers(std::size_t n_max);
BigRational bernoulli_number(std::size_t k);

/// E_0 .. E_{n_max} with E_k = 2^k E_k(1/2); odd entries are stored as 0.
/// Even entries come from sum_{k=0}^{n} C(2n,2k) E_{2k} = 0.
std::vector<BigRational> euler_numbers(std::size_t n_max);
BigRational euler_number(std::size_t k);

/// B_k(x) = sum_j C(k,j) B_j x^{k-j}.
RationalPolynomial bernoulli_polynomial(unsigned k);
/// E_k(x) = sum_j C(k,j) (E_j / 2^j) (x - 1/2)^{k-j}.
RationalPolynomial euler_polynomial(unsigned k);

/// B_k(x) and E_k(x) at one rational point without materializing the
/// polynomials; used for the long coefficient tables of the master
/// identities.
BigRational bernoulli_polynomial_value(unsigned k, const BigRational& x);
BigRational euler_polynomial_value(unsigned k, const BigRational& x);

/// Horner evaluation after converting each coefficient to double.
std::complex<double> eval_polynomial(const RationalPolynomial& p, std::complex<double> x);

struct EulerIdentityResult {
  bool recurrence_holds = false;           // sum_{k=0}^{n} C(2n,2k) E_{2k} = 0
  bool bernoulli_combination_holds = false;  // sum_{k<n} C(2n-1,2k) E_{2k} = 2^{2n}(2^{2n}-1) B_{2n} / (2n)
  bool ok() const { return recurrence_holds && bernoulli_combination_holds; }
  /// Name of the first identity that failed, if any.
  std::optional<std::string> failure() const;
};

/// Both Euler-number identities as exact rational equalities, n >= 1.
EulerIdentityResult check_euler_number_identity(unsigned n);

}  // namespace lerch

#endif
