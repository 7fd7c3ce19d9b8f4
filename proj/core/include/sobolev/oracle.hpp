#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sobolev/profile.hpp"
#include "sobolev/solver.hpp"
#include "sobolev/weight.hpp"

namespace sobolev {

enum class OracleMethod { Galerkin, SignIteration, MaxPrinciple };
std::string_view to_string(OracleMethod method);

/// Trial space span{x^k (1-x)^k x^i : i = 0..degree}. Monomial uses that basis
/// literally (exact LDL^T, or float Cholesky that may report IllConditioned);
/// Legendre uses the same span through functions whose k-th derivatives are
/// shifted Legendre polynomials, which makes the Gram matrix diagonal (float only).
enum class GalerkinBasis { Monomial, Legendre };

struct GalerkinConfig {
  int degree = 16;
  Mode mode = Mode::Exact;
  GalerkinBasis basis = GalerkinBasis::Monomial;
  double quad_tol = 1e-14;
};

struct HistoryPoint {
  double parameter = 0.0;
  double estimate = 0.0;
};

struct OracleReport {
  OracleMethod method = OracleMethod::Galerkin;
  /// Galerkin: Lambda_N; sign iteration: mu_h^(-1/2); max principle: min w.
  double lambda_estimate = 0.0;
  /// Galerkin: (N, Lambda_N^2); sign iteration: (restart, mu_h).
  std::vector<HistoryPoint> history;
  bool sign_definite = false;
  std::map<std::string, double> details;
  /// Exact-mode Galerkin: Lambda_n^2 for n = 0..N.
  std::vector<Scalar> exact_history;
  /// Sign iteration / FD max principle: nodal values at x_i = i/(n+1), i = 1..n.
  std::vector<double> grid_values;
  /// Exact max-principle path: the solution w.
  std::optional<PiecewisePolynomial> exact_solution;
};

/// Lower bounds Lambda_N^2 = r^T G^{-1} r with G_ij = int phi_i^(k) phi_j^(k)
/// and r_i = int phi_i rho, for every N up to cfg.degree.
OracleReport galerkin_lambda(const ProblemSpec& spec, const GalerkinConfig& cfg);

/// phi(x) with phi^(k) = P_n(2x - 1) and phi^(j)(0) = phi^(j)(1) = 0 for j < k (n >= k).
double integrated_legendre(int k, int n, double x);

enum class SignInit { Random, Alternating, Positive };

struct SignIterationConfig {
  int grid = 199;  ///< interior nodes, h = 1/(grid + 1)
  int max_iter = 100;
  int restarts = 10;
  SignInit init = SignInit::Random;
  std::uint64_t seed = 20240917;
};

/// Picard iteration on (-1)^k D^(2k) u = mu rho sign(u), sum |u| rho h = 1,
/// with second-order clamped finite differences (k = 1 or 2). Non-convergence
/// is recorded in details["converged_restarts"], never thrown.
OracleReport sign_iteration(const ProblemSpec& spec, const SignIterationConfig& cfg = {});

enum class MaxPrinciplePath { Exact, FiniteDifference };

struct MaxPrincipleConfig {
  MaxPrinciplePath path = MaxPrinciplePath::Exact;
  int grid = 199;
};

/// Solves (-1)^k w^(2k) = f with clamped data and checks w > 0 on (0,1).
/// Exact path: f piecewise polynomial, any k, Sturm-certified. FD path:
/// k = 1 or 2, any evaluable f or a Dirac mass. Throws PositivityViolated.
OracleReport max_principle_check(int k, const Weight& f, const MaxPrincipleConfig& cfg = {});

}  // namespace sobolev
