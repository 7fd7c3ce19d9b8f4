#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sobolev {

struct QuadOptions {
  double tol = 1e-12;
  /// Integrable endpoint singularity (t^-alpha with alpha < 1, log, ...):
  /// the initial mesh is graded geometrically toward that end.
  bool singular_at_a = false;
  bool singular_at_b = false;
  std::size_t max_intervals = 20000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

/// Adaptive Gauss-Legendre quadrature of f over [a, b].
///
/// Each interval is estimated with a 15-point Gauss rule and compared against
/// the same rule on its two halves; the interval with the largest discrepancy
/// is bisected until the summed estimate drops to tol. Nodes are interior, so
/// f is never evaluated at a or b. Throws NonConvergence when max_intervals is
/// exhausted.
QuadResult quad_numeric(const std::function<double(double)>& f, double a, double b,
                        const QuadOptions& options = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(std::size_t n);

}  // namespace sobolev
