#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobolev/linalg.hpp"
#include "sobolev/profile.hpp"
#include "sobolev/weight.hpp"

namespace sobolev {

/// The problem: sharp constant of int |u| rho <= Lambda ||u^(k)||_2 on H_0^k(0,1).
struct ProblemSpec {
  int k = 1;
  Weight rho;
  Mode mode = Mode::Exact;
};

/// Validates k >= 1 and that Exact mode is only requested for weights with exact moments.
ProblemSpec make_problem(int k, Weight rho, Mode mode = Mode::Exact);

/// A[m][j] = (k+m)! / (k+m-j)!, the falling factorials of k+m.
Matrix build_matrix(int k, Mode mode = Mode::Exact);

/// Seeds normalized by mu: s[j] = u^(2k-1-j)(0) / mu, so that A s = b.
struct DerivativeSeeds {
  std::vector<Scalar> s;
};

DerivativeSeeds solve_seeds(const Matrix& a, const MomentVector& b);

/// v = u^(k) / mu = sum_j s[j] x^(k-1-j)/(k-1-j)! + (-1)^k I(x).
Profile assemble_uk(const ProblemSpec& spec, const DerivativeSeeds& seeds, const Profile& iterated);

/// mu = 1 / int_0^1 v^2. Throws ZeroWeight when the integral vanishes.
Scalar compute_mu(const Profile& v);

struct Diagnostics {
  /// max over j < k of |u^(j)(0)| and |u^(j)(1)|.
  double boundary_residual = 0.0;
  /// |int u rho - 1| (Dirac: |u(a) - 1|).
  double normalization_residual = 0.0;
  /// |int (u^(k))^2 / mu^2 - 1/mu|, the second route to mu.
  double dual_mu_residual = 0.0;
  /// Minimum of u over the interior points of a 2^12-cell grid.
  double min_interior_value = 0.0;
  /// Exact mode, piecewise-polynomial u: Sturm-certified u > 0 on (0,1).
  std::optional<bool> positivity_certified;
  bool exact_boundary = false;
  bool exact_normalization = false;
  bool exact_dual_mu = false;
};

struct AssembledMinimizer {
  Profile u;
  Diagnostics diagnostics;
};

/// u = mu * (k-fold antiderivative of v from 0), plus diagnostics. In float
/// mode throws BoundaryResidualExceeded when a boundary value exceeds 1e-8.
AssembledMinimizer assemble_u(const ProblemSpec& spec, const Profile& v, const Scalar& mu);

enum class Method { Pipeline, ClosedForm };
std::string_view to_string(Method method);

/// Known closed forms: constant rho (any k), indicator (k = 1), Dirac (any k), Hardy (k = 1).
struct ClosedForm {
  Scalar mu;
  /// Present when the closed-form extremizer is trusted for comparison.
  std::optional<Profile> u;
  std::string formula;
};

std::optional<ClosedForm> closed_form(const ProblemSpec& spec);

/// The printed Dirac extremizer
///   (1-a)^k x^k H(1-x, 1-a) on [0,a],  a^k (1-x)^k H(x, a) on [a,1],
///   H(x,a) = sum_{n<k} x^n sum_{m<=n} C(2k-1,m) C(k-1+n-m, n-m) a^(k-1-m),
/// rescaled so that its right branch equals 1 at x = a. Kept as a cross-check only.
PiecewisePolynomial dirac_printed_minimizer(int k, const Scalar& a);

struct ExtremalSolution {
  ProblemSpec spec;
  Scalar mu;
  /// mu^(-1/2).
  double lambda = 0.0;
  DerivativeSeeds seeds;
  Profile u;
  /// u^(k) = mu * v.
  Profile u_k;
  Method method = Method::Pipeline;
  Diagnostics diagnostics;
  bool closed_form_checked = false;
  bool outside_theorem_scope = false;
  std::vector<std::string> notes;
};

/// Runs moments -> seeds -> v -> mu -> u and, when a closed form exists,
/// compares both (exactly, or to 1e-10 relative in float mode); disagreement
/// throws ClosedFormMismatch. Hardy k = 1 goes through its closed form.
ExtremalSolution solve(const ProblemSpec& spec);

}  // namespace sobolev
