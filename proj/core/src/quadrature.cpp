#include "sobolev/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <algorithm>
#include <string>

#include "sobolev/error.hpp"

namespace sobolev {

GaussRule gauss_legendre(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    long double p0 = 1, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

namespace {

const GaussRule& rule15() {
  static const GaussRule rule = gauss_legendre(15);
  return rule;
}

double gauss15(const std::function<double(double)>& f, double lo, double hi) {
  const GaussRule& r = rule15();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
  return sum * half;
}

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double whole = gauss15(f, lo, hi);
  const double halves = gauss15(f, lo, mid) + gauss15(f, mid, hi);
  if (!std::isfinite(whole) || !std::isfinite(halves)) {
    throw NonConvergence("non-finite integrand on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return {lo, hi, halves, std::abs(whole - halves)};
}

// Geometric mesh toward `end`, stopping once the innermost piece is negligible.
void graded_toward(const std::function<double(double)>& f, double end, double other, double tol,
                   std::vector<Segment>& out) {
  double h = 0.5 * (other - end);
  double outer = other;
  // Near a nonzero endpoint, Gauss nodes closer than a few hundred ulps round onto it.
  const double floor = 512 * std::numeric_limits<double>::epsilon() * std::abs(end);
  for (int level = 0; level < 1100; ++level) {
    const double inner = end + h;
    if (inner == end || inner == outer || std::abs(h) < floor) break;
    out.push_back(evaluate(f, std::min(inner, outer), std::max(inner, outer)));
    outer = inner;
    const double tail = std::abs(gauss15(f, std::min(end, inner), std::max(end, inner)));
    if (tail < 1e-3 * tol && level > 8) break;
    h *= 0.5;
  }
  out.push_back(evaluate(f, std::min(end, outer), std::max(end, outer)));
}

}  // namespace

QuadResult quad_numeric(const std::function<double(double)>& f, double a, double b,
                        const QuadOptions& options) {
  if (!(a < b)) {
    if (a == b) return {};
    QuadResult r = quad_numeric(f, b, a, {options.tol, options.singular_at_b, options.singular_at_a,
                                          options.max_intervals});
    r.value = -r.value;
    return r;
  }
  std::vector<Segment> initial;
  if (options.singular_at_a && options.singular_at_b) {
    const double mid = 0.5 * (a + b);
    graded_toward(f, a, mid, options.tol, initial);
    graded_toward(f, b, mid, options.tol, initial);
  } else if (options.singular_at_a) {
    graded_toward(f, a, b, options.tol, initial);
  } else if (options.singular_at_b) {
    graded_toward(f, b, a, options.tol, initial);
  } else {
    initial.push_back(evaluate(f, a, b));
  }

  // Max-heap on the error estimate.
  std::vector<Segment> heap = std::move(initial);
  std::make_heap(heap.begin(), heap.end());
  auto total_error = [&heap]() {
    double e = 0.0;
    for (const auto& s : heap) e += s.error;
    return e;
  };

  double error = total_error();
  std::size_t splits = 0;
  while (error > options.tol) {
    if (heap.size() >= options.max_intervals) {
      throw NonConvergence("quadrature did not reach tolerance " + std::to_string(options.tol) +
                           " within " + std::to_string(options.max_intervals) +
                           " intervals (error estimate " + std::to_string(error) + ")");
    }
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      throw NonConvergence("quadrature interval collapsed near " + std::to_string(worst.lo));
    }
    for (const Segment& half : {evaluate(f, worst.lo, mid), evaluate(f, mid, worst.hi)}) {
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end());
      error += half.error;
    }
    error -= worst.error;
    if (++splits % 64 == 0 || error <= options.tol) error = total_error();
  }

  QuadResult result;
  result.intervals = heap.size();
  for (const auto& s : heap) result.value += s.value;
  result.error = error;
  return result;
}

}  // namespace sobolev
