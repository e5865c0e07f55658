#include "lerch/bernoulli_euler.hpp"

#include <mutex>
#include <sstream>

namespace lerch {

namespace {

// Grow-only tables shared by all callers. Entries never change once
// written, so callers get copies made under the lock.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t initial = 64) {
    values_.emplace_back(1);
    extend(initial);
  }

  std::vector<BigRational> prefix(std::size_t n_max) {
    std::lock_guard lock(mutex_);
    extend(n_max);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
  }

  BigRational at(std::size_t k) {
    std::lock_guard lock(mutex_);
    extend(k);
    return values_[k];
  }

 private:
  void extend(std::size_t n_max) {
    values_.reserve(n_max + 1);
    for (std::size_t n = values_.size(); n <= n_max; ++n) {
      // sum_{k=0}^{n} C(n+1,k) B_k = 0, solved for B_n.
      BigRational acc;
      BigInt c = 1;  // C(n+1, k)
      for (std::size_t k = 0; k < n; ++k) {
        if (!values_[k].is_zero()) acc += BigRational(c) * values_[k];
        c = c * BigInt(static_cast<unsigned long>(n + 1 - k)) / BigInt(static_cast<unsigned long>(k + 1));
      }
      values_.push_back(-acc / BigRational(static_cast<long>(n + 1)));
    }
  }

  std::mutex mutex_;
  std::vector<BigRational> values_;
};

class EulerTable {
 public:
  EulerTable() { values_.emplace_back(1); }

  std::vector<BigRational> prefix(std::size_t n_max) {
    std::lock_guard lock(mutex_);
    extend(n_max);
    std::vector<BigRational> out;
    out.reserve(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) out.push_back(k % 2 ? BigRational() : BigRational(values_[k / 2]));
    return out;
  }

  BigRational at(std::size_t k) {
    if (k % 2) return {};
    std::lock_guard lock(mutex_);
    extend(k);
    return BigRational(values_[k / 2]);
  }

 private:
  // values_[m] holds E_{2m}.
  void extend(std::size_t n_max) {
    const std::size_t m_max = n_max / 2;
    for (std::size_t m = values_.size(); m <= m_max; ++m) {
      // sum_{k=0}^{m} C(2m,2k) E_{2k} = 0, solved for E_{2m}.
      BigInt acc = 0;
      for (std::size_t k = 0; k < m; ++k)
        acc += binomial(static_cast<unsigned>(2 * m), static_cast<unsigned>(2 * k)) * values_[k];
      values_.push_back(-acc);
    }
  }

  std::mutex mutex_;
  std::vector<BigInt> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

EulerTable& euler_table() {
  static EulerTable table;
  return table;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational();
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::compose_linear(const BigRational& c0, const BigRational& c1) const {
  const RationalPolynomial inner({c0, c1});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + RationalPolynomial({*it});
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i];
    if (i > 0) os << "*x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::vector<BigRational> bernoulli_numbers(std::size_t n_max) { return bernoulli_table().prefix(n_max); }

BigRational bernoulli_number(std::size_t k) { return bernoulli_table().at(k); }

std::vector<BigRational> euler_numbers(std::size_t n_max) { return euler_table().prefix(n_max); }

BigRational euler_number(std::size_t k) { return euler_table().at(k); }

RationalPolynomial bernoulli_polynomial(unsigned k) {
  const auto b = bernoulli_numbers(k);
  std::vector<BigRational> coeffs(k + 1);
  for (unsigned j = 0; j <= k; ++j) coeffs[k - j] = BigRational(binomial(k, j)) * b[j];
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial euler_polynomial(unsigned k) {
  // Build the expansion in y = x - 1/2, then shift back to x.
  const auto e = euler_numbers(k);
  std::vector<BigRational> in_y(k + 1);
  for (unsigned j = 0; j <= k; ++j)
    in_y[k - j] = BigRational(binomial(k, j)) * e[j] / BigRational(2).pow(j);
  return RationalPolynomial(std::move(in_y)).compose_linear(BigRational(-1, 2), BigRational(1));
}

BigRational bernoulli_polynomial_value(unsigned k, const BigRational& x) {
  const auto b = bernoulli_numbers(k);
  BigRational acc;
  BigRational xp = 1;  // x^{k-j}, walking j downwards
  BigInt c = 1;        // C(k, j) for j = k, k-1, ...
  for (unsigned j = k + 1; j-- > 0;) {
    if (!b[j].is_zero()) acc += BigRational(c) * b[j] * xp;
    xp *= x;
    if (j > 0) c = c * BigInt(static_cast<unsigned long>(j)) / BigInt(static_cast<unsigned long>(k - j + 1));
  }
  return acc;
}

BigRational euler_polynomial_value(unsigned k, const BigRational& x) {
  const auto e = euler_numbers(k);
  const BigRational y = x - BigRational(1, 2);
  BigRational acc;
  BigRational yp = 1;
  BigInt c = 1;
  for (unsigned j = k + 1; j-- > 0;) {
    if (!e[j].is_zero()) acc += BigRational(c) * e[j] / BigRational(2).pow(j) * yp;
    yp *= y;
    if (j > 0) c = c * BigInt(static_cast<unsigned long>(j)) / BigInt(static_cast<unsigned long>(k - j + 1));
  }
  return acc;
}

std::complex<double> eval_polynomial(const RationalPolynomial& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::optional<std::string> EulerIdentityResult::failure() const {
  if (!recurrence_holds) return "euler_recurrence";
  if (!bernoulli_combination_holds) return "euler_bernoulli_combination";
  return std::nullopt;
}

EulerIdentityResult check_euler_number_identity(unsigned n) {
  const auto e = euler_numbers(2 * n);
  EulerIdentityResult r;
  BigRational first;
  for (unsigned k = 0; k <= n; ++k) first += BigRational(binomial(2 * n, 2 * k)) * e[2 * k];
  r.recurrence_holds = first.is_zero();

  BigRational lhs;
  for (unsigned k = 0; k < n; ++k) lhs += BigRational(binomial(2 * n - 1, 2 * k)) * e[2 * k];
  const BigRational p = BigRational(4).pow(n);
  const BigRational rhs = p * (p - BigRational(1)) * bernoulli_number(2 * n) / BigRational(2L * n);
  r.bernoulli_combination_holds = lhs == rhs;
  return r;
}

}  // namespace lerch
