#include "lerch/quadrature.hpp"

#include <array>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace lerch {

namespace {

// 15-point Kronrod abscissae (xgk[1], xgk[3], ... are the 7-point Gauss
// nodes) and weights, as tabulated in QUADPACK.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  Complex value;
  double error;
  bool at_rounding_floor;

  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<Complex(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = f(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = f(center - dx);
    const Complex f2 = f(center + dx);
    kronrod += (f1 + f2) * kWgk[j];
    abs_sum += (std::abs(f1) + std::abs(f2)) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::fabs(half);
  const double err = std::abs(kronrod - gauss);
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  return {lo, hi, kronrod, std::max(err, floor), err <= floor};
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double lo, double hi,
                           const QuadratureOptions& options) {
  std::priority_queue<Segment> heap;
  std::vector<Segment> frozen;
  heap.push(gauss_kronrod(f, lo, hi));
  std::size_t intervals = 1;
  Complex running_value = heap.top().value;
  double running_error = heap.top().error;

  auto exact_totals = [&](Complex& value, double& error) {
    CompensatedSum sum;
    error = 0.0;
    for (const auto& s : frozen) {
      sum.add(s.value);
      error += s.error;
    }
    auto copy = heap;
    for (; !copy.empty(); copy.pop()) {
      sum.add(copy.top().value);
      error += copy.top().error;
    }
    value = sum.value();
  };

  while (true) {
    double target = std::max(options.abs_tol, options.rel_tol * std::abs(running_value));
    if (running_error <= target || heap.empty()) {
      exact_totals(running_value, running_error);
      target = std::max(options.abs_tol, options.rel_tol * std::abs(running_value));
      if (running_error <= target || heap.empty()) break;
    }
    if (intervals >= options.max_intervals)
      throw NonConvergence("quadrature: " + std::to_string(intervals) + " intervals used, error estimate " +
                           format_double(running_error) + " above target " + format_double(target));
    Segment worst = heap.top();
    heap.pop();
    if (worst.at_rounding_floor) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gauss_kronrod(f, worst.lo, mid);
    Segment right = gauss_kronrod(f, mid, worst.hi);
    running_value += left.value + right.value - worst.value;
    running_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  return {running_value, intervals, running_error};
}

}  // namespace lerch
