#include "sobolev/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <random>

#include "sobolev/error.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev/sturm.hpp"

namespace sobolev {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::Galerkin: return "galerkin";
    case OracleMethod::SignIteration: return "sign_iteration";
    case OracleMethod::MaxPrinciple: return "max_principle";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------- Galerkin

Polynomial bubble(int k, Mode mode) {
  const Scalar one = Scalar::one(mode);
  return (Polynomial::identity(mode) * Polynomial({one, -one}, mode)).pow(k);
}

// r_i = int phi_i rho for a polynomial trial function.
Scalar load_exact(const Weight& rho, const Polynomial& phi) {
  const Scalar scale = rho.scale();
  switch (rho.kind()) {
    case WeightKind::Dirac:
      return scale * phi(std::get<DiracWeight>(rho.data()).a);
    case WeightKind::Power:
      return scale * PowerLogSum::from_polynomial(phi).shifted(-std::get<PowerWeight>(rho.data()).alpha.rational()).integrate();
    case WeightKind::Hardy:
      return scale * PowerLogSum::from_polynomial(phi).shifted(Rational(-std::get<HardyWeight>(rho.data()).order)).integrate();
    default:
      return (rho.as_piecewise(Mode::Exact) * PiecewisePolynomial(phi)).integrate();
  }
}

// r = int f rho by adaptive quadrature, splitting at the weight's breakpoints.
double load_numeric(const Weight& rho, const std::function<double(double)>& f, double tol) {
  switch (rho.kind()) {
    case WeightKind::Dirac:
      return rho.scale().to_double() * f(std::get<DiracWeight>(rho.data()).a.to_double());
    case WeightKind::Power:
    case WeightKind::Hardy: {
      QuadOptions opt;
      opt.tol = tol;
      opt.singular_at_a = true;
      return quad_numeric([&](double x) { return f(x) * eval_weight(rho, x); }, 0.0, 1.0, opt).value;
    }
    default: {
      const PiecewisePolynomial pp = rho.as_piecewise(Mode::Float);
      double total = 0.0;
      QuadOptions opt;
      opt.tol = tol / static_cast<double>(pp.piece_count());
      for (std::size_t i = 0; i < pp.piece_count(); ++i) {
        const Polynomial& piece = pp.piece(i);
        if (piece.is_zero()) continue;
        total += quad_numeric([&](double x) { return f(x) * piece(x); }, pp.breaks()[i].to_double(),
                              pp.breaks()[i + 1].to_double(), opt)
                     .value;
      }
      return total;
    }
  }
}

OracleReport galerkin_monomial_exact(const ProblemSpec& spec, const GalerkinConfig& cfg) {
  const int n = cfg.degree + 1;
  const Polynomial base = bubble(spec.k, Mode::Exact);
  std::vector<Polynomial> phi, dphi;
  for (int i = 0; i < n; ++i) {
    phi.push_back(base * Polynomial::monomial(Scalar::exact(1), i));
    dphi.push_back(phi.back().derivative(spec.k));
  }
  Matrix g(n, n, Mode::Exact);
  std::vector<Scalar> r;
  const Scalar zero = Scalar::exact(0), one = Scalar::exact(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      g(i, j) = (dphi[i] * dphi[j]).integrate(zero, one);
      g(j, i) = g(i, j);
    }
    r.push_back(load_exact(spec.rho, phi[i]));
  }
  OracleReport report;
  report.method = OracleMethod::Galerkin;
  report.exact_history = nested_dual_norms(g, r);
  for (int i = 0; i < n; ++i) report.history.push_back({double(i), report.exact_history[i].to_double()});
  return report;
}

OracleReport galerkin_monomial_float(const ProblemSpec& spec, const GalerkinConfig& cfg) {
  const int n = cfg.degree + 1;
  const Polynomial base = bubble(spec.k, Mode::Float);
  std::vector<Polynomial> phi, dphi;
  for (int i = 0; i < n; ++i) {
    phi.push_back(base * Polynomial::monomial(Scalar::real(1.0), i));
    dphi.push_back(phi.back().derivative(spec.k));
  }
  Eigen::MatrixXd g(n, n);
  Eigen::VectorXd r(n);
  const Scalar zero = Scalar::real(0.0), one = Scalar::real(1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) g(i, j) = g(j, i) = (dphi[i] * dphi[j]).integrate(zero, one).to_double();
    const Polynomial& p = phi[i];
    r(i) = load_numeric(spec.rho, [&p](double x) { return p(x); }, cfg.quad_tol);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) {
    throw IllConditioned("Cholesky of the Galerkin Gram matrix failed at degree " + std::to_string(cfg.degree) +
                         "; lower the degree or use exact mode");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  const double dmax = l.diagonal().cwiseAbs().maxCoeff();
  const double dmin = l.diagonal().cwiseAbs().minCoeff();
  if (dmin * dmin < 1e-13 * dmax * dmax) {
    throw IllConditioned("Galerkin Gram matrix is numerically singular at degree " + std::to_string(cfg.degree) +
                         "; lower the degree or use exact mode");
  }
  const Eigen::VectorXd y = llt.matrixL().solve(r);
  OracleReport report;
  report.method = OracleMethod::Galerkin;
  double running = 0.0;
  for (int i = 0; i < n; ++i) {
    running += y(i) * y(i);
    report.history.push_back({double(i), running});
  }
  return report;
}

OracleReport galerkin_legendre(const ProblemSpec& spec, const GalerkinConfig& cfg) {
  OracleReport report;
  report.method = OracleMethod::Galerkin;
  double running = 0.0;
  for (int i = 0; i <= cfg.degree; ++i) {
    const int n = spec.k + i;
    const double r = load_numeric(
        spec.rho, [&](double x) { return integrated_legendre(spec.k, n, x); }, cfg.quad_tol);
    // Diagonal Gram entry: int_0^1 P_n(2x-1)^2 dx = 1/(2n+1).
    running += (2.0 * n + 1.0) * r * r;
    report.history.push_back({double(i), running});
  }
  return report;
}

// ------------------------------------------------------- finite differences

struct FdSystem {
  Eigen::SparseMatrix<double> matrix;
  double h;
};

FdSystem clamped_operator(int k, int n) {
  if (k != 1 && k != 2) throw DomainError("finite-difference oracles cover k = 1 and k = 2 only");
  if (n < 5) throw DomainError("finite-difference grid needs at least 5 interior nodes");
  const double h = 1.0 / (n + 1);
  std::vector<Eigen::Triplet<double>> t;
  if (k == 1) {
    const double s = 1.0 / (h * h);
    for (int i = 0; i < n; ++i) {
      t.emplace_back(i, i, 2 * s);
      if (i > 0) t.emplace_back(i, i - 1, -s);
      if (i + 1 < n) t.emplace_back(i, i + 1, -s);
    }
  } else {
    // 5-point fourth difference; ghost values u_{-1} = u_1, u_{n+2} = u_n from u' = 0.
    const double s = 1.0 / (h * h * h * h);
    for (int i = 0; i < n; ++i) {
      const bool edge = i == 0 || i == n - 1;
      t.emplace_back(i, i, (edge ? 7.0 : 6.0) * s);
      if (i > 0) t.emplace_back(i, i - 1, -4 * s);
      if (i + 1 < n) t.emplace_back(i, i + 1, -4 * s);
      if (i > 1) t.emplace_back(i, i - 2, s);
      if (i + 2 < n) t.emplace_back(i, i + 2, s);
    }
  }
  FdSystem sys{Eigen::SparseMatrix<double>(n, n), h};
  sys.matrix.setFromTriplets(t.begin(), t.end());
  return sys;
}

// Nodal weights; a Dirac mass is split linearly between its two neighbouring nodes.
Eigen::VectorXd nodal_weight(const Weight& rho, int n, double h) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  if (rho.kind() == WeightKind::Dirac) {
    const double s = std::get<DiracWeight>(rho.data()).a.to_double() / h;
    const int j = static_cast<int>(std::floor(s));
    const double theta = s - j;
    const double mass = rho.scale().to_double();
    if (j >= 1 && j <= n) w(j - 1) += mass * (1 - theta) / h;
    if (j + 1 >= 1 && j + 1 <= n) w(j) += mass * theta / h;
    return w;
  }
  for (int i = 0; i < n; ++i) w(i) = eval_weight(rho, (i + 1) * h);
  return w;
}

// sum (D^k u)^2 h with u_0 = u_{n+1} = 0 (k = 2: trapezoid weights, clamped ghosts).
double discrete_energy(int k, const Eigen::VectorXd& u, double h) {
  const int n = static_cast<int>(u.size());
  auto at = [&](int i) -> double {  // node index 0..n+1, ghosts mirrored
    if (i == 0 || i == n + 1) return 0.0;
    if (i == -1) return u(0);
    if (i == n + 2) return u(n - 1);
    return u(i - 1);
  };
  double e = 0.0;
  if (k == 1) {
    for (int i = 0; i <= n; ++i) {
      const double d = (at(i + 1) - at(i)) / h;
      e += d * d * h;
    }
  } else {
    for (int i = 0; i <= n + 1; ++i) {
      const double d = (at(i + 1) - 2 * at(i) + at(i - 1)) / (h * h);
      e += d * d * h * (i == 0 || i == n + 1 ? 0.5 : 1.0);
    }
  }
  return e;
}

}  // namespace

double integrated_legendre(int k, int n, double x) {
  if (n < k) throw DomainError("integrated Legendre function needs n >= k");
  const int m = n - k;
  const double t = 2 * x - 1;
  const double a = k;
  // Jacobi P_m^(a,a)(t) by the three-term recurrence.
  double p0 = 1.0, p1 = (a + 1) * t;
  double p = m == 0 ? p0 : p1;
  for (int j = 2; j <= m; ++j) {
    const double c = 2 * j + 2 * a;
    const double next = ((c - 1) * c * (c - 2) * t * p1 - 2 * (j + a - 1) * (j + a - 1) * c * p0) /
                        (2 * j * (j + 2 * a) * (c - 2));
    p0 = p1;
    p1 = next;
    p = next;
  }
  // (-1)^k m!/n! x^k (1-x)^k P_m^(k,k)(2x-1)
  double ratio = 1.0;
  for (int j = m + 1; j <= n; ++j) ratio /= j;
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  return sign * ratio * std::pow(x * (1 - x), k) * p;
}

OracleReport galerkin_lambda(const ProblemSpec& spec, const GalerkinConfig& cfg) {
  if (cfg.degree < 0) throw DomainError("Galerkin degree must be non-negative");
  if (spec.rho.kind() == WeightKind::Hardy && spec.k != 1) {
    throw UnsupportedWeight("the Hardy weight 1/x^k is only supported for k = 1");
  }
  OracleReport report;
  if (cfg.basis == GalerkinBasis::Legendre) {
    if (cfg.mode == Mode::Exact) throw ModeMismatch("the Legendre Galerkin basis is float-only");
    report = galerkin_legendre(spec, cfg);
  } else if (cfg.mode == Mode::Exact) {
    report = galerkin_monomial_exact(spec, cfg);
  } else {
    report = galerkin_monomial_float(spec, cfg);
  }
  const double lambda_sq = report.history.back().estimate;
  report.lambda_estimate = std::sqrt(lambda_sq);
  report.sign_definite = true;
  report.details["degree"] = cfg.degree;
  report.details["lambda_sq"] = lambda_sq;
  report.details["basis_legendre"] = cfg.basis == GalerkinBasis::Legendre ? 1.0 : 0.0;
  return report;
}

OracleReport sign_iteration(const ProblemSpec& spec, const SignIterationConfig& cfg) {
  const int n = cfg.grid;
  const FdSystem sys = clamped_operator(spec.k, n);
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(sys.matrix);
  if (solver.info() != Eigen::Success) throw SingularMatrix("finite-difference operator factorization failed");
  const Eigen::VectorXd rho = nodal_weight(spec.rho, n, sys.h);
  if (rho.cwiseAbs().maxCoeff() == 0.0) throw ZeroWeight("the weight vanishes on the grid");

  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution coin(0.5);

  OracleReport report;
  report.method = OracleMethod::SignIteration;
  report.sign_definite = true;
  int converged_restarts = 0;
  int total_iterations = 0;
  double mu_last = 0.0, mu_norm_last = 0.0;
  Eigen::VectorXd u_last;

  for (int restart = 0; restart < std::max(1, cfg.restarts); ++restart) {
    Eigen::VectorXd sigma(n);
    for (int i = 0; i < n; ++i) {
      switch (cfg.init) {
        case SignInit::Random: sigma(i) = coin(rng) ? 1.0 : -1.0; break;
        case SignInit::Alternating: sigma(i) = i % 2 == 0 ? 1.0 : -1.0; break;
        case SignInit::Positive: sigma(i) = 1.0; break;
      }
    }
    bool converged = false;
    Eigen::VectorXd u;
    double mu_norm = 0.0;
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
      ++total_iterations;
      const Eigen::VectorXd w = solver.solve(rho.cwiseProduct(sigma));
      const double mass = (w.cwiseAbs().cwiseProduct(rho)).sum() * sys.h;
      if (mass == 0.0) break;
      mu_norm = 1.0 / mass;
      u = w * mu_norm;
      // Entries at rounding level get sign 0.
      const double floor = 1e-12 * u.cwiseAbs().maxCoeff();
      Eigen::VectorXd next(n);
      for (int i = 0; i < n; ++i) next(i) = u(i) > floor ? 1.0 : (u(i) < -floor ? -1.0 : 0.0);
      if (next == sigma) {
        converged = true;
        break;
      }
      sigma = next;
    }
    if (u.size() == 0) continue;
    const bool definite = (u.array() > 0).all() || (u.array() < 0).all();
    if (converged) ++converged_restarts;
    if (!converged || !definite) report.sign_definite = false;
    if ((u.array() < 0).all()) u = -u;
    mu_last = discrete_energy(spec.k, u, sys.h);
    mu_norm_last = mu_norm;
    u_last = u;
    report.history.push_back({double(restart), mu_last});
  }

  report.lambda_estimate = mu_last > 0 ? 1.0 / std::sqrt(mu_last) : 0.0;
  report.details["mu_h"] = mu_last;
  report.details["mu_normalization"] = mu_norm_last;
  report.details["grid"] = n;
  report.details["restarts"] = std::max(1, cfg.restarts);
  report.details["converged_restarts"] = converged_restarts;
  report.details["iterations"] = total_iterations;
  report.grid_values.assign(u_last.data(), u_last.data() + u_last.size());
  return report;
}

OracleReport max_principle_check(int k, const Weight& f, const MaxPrincipleConfig& cfg) {
  if (k < 1) throw DomainError("k must be at least 1");
  OracleReport report;
  report.method = OracleMethod::MaxPrinciple;

  if (cfg.path == MaxPrinciplePath::FiniteDifference) {
    const FdSystem sys = clamped_operator(k, cfg.grid);
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(sys.matrix);
    const Eigen::VectorXd load = nodal_weight(f, cfg.grid, sys.h);
    if (load.cwiseAbs().maxCoeff() == 0.0) throw DomainError("load vanishes identically");
    // Float sampling of a non-negative load can dip below zero by rounding.
    if (load.minCoeff() < -1e-12 * load.cwiseAbs().maxCoeff()) throw DomainError("load must be non-negative");
    const Eigen::VectorXd w = solver.solve(load.cwiseMax(0.0));
    Eigen::Index at = 0;
    const double lo = w.minCoeff(&at);
    report.lambda_estimate = lo;
    report.details["min_value"] = lo;
    report.details["grid"] = cfg.grid;
    report.grid_values.assign(w.data(), w.data() + w.size());
    if (!(lo > 0)) throw PositivityViolated("finite-difference solution is not positive", (at + 1) * sys.h);
    report.sign_definite = true;
    return report;
  }

  if (!f.is_piecewise_polynomial()) {
    throw UnsupportedWeight("the exact maximum-principle path needs a piecewise-polynomial load");
  }
  const PiecewisePolynomial load = f.as_piecewise(Mode::Exact);
  bool nonzero = false;
  for (const auto& p : load.pieces()) nonzero = nonzero || !p.is_zero();
  if (!nonzero) throw DomainError("load vanishes identically");

  // Particular solution: (-1)^k times the 2k-fold integral from 0.
  PiecewisePolynomial particular = load;
  for (int i = 0; i < 2 * k; ++i) particular = particular.cumulative_integral();
  if (k % 2 == 1) particular = particular.scaled(Scalar::exact(-1));

  // Homogeneous correction sum_{i<2k} c_i x^i fitted to all 2k clamped conditions.
  const int dim = 2 * k;
  Matrix system(dim, dim, Mode::Exact);
  std::vector<Scalar> rhs(dim);
  const std::size_t last = particular.piece_count() - 1;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < dim; ++i) {
      system(j, i) = i == j ? Scalar(Rational(factorial(j))) : Scalar::exact(0);
      system(k + j, i) = i >= j ? Scalar(Rational(factorial(i) / factorial(i - j))) : Scalar::exact(0);
    }
    rhs[j] = -particular.left_end_value(0, j);
    rhs[k + j] = -particular.right_end_value(last, j);
  }
  const std::vector<Scalar> c = solve_linear(system, rhs);
  const PiecewisePolynomial w = particular + PiecewisePolynomial(Polynomial(c, Mode::Exact));

  double lo = std::numeric_limits<double>::infinity();
  double lo_at = 0.5;
  for (int i = 1; i < 4096; ++i) {
    const double x = i / 4096.0;
    const double v = w(x);
    if (v < lo) lo = v, lo_at = x;
  }
  report.lambda_estimate = lo;
  report.details["min_value"] = lo;
  report.exact_solution = w;
  const bool certified = certify_positive_open(w);
  report.details["certified"] = certified ? 1.0 : 0.0;
  if (!certified) throw PositivityViolated("exact solution is not positive on (0,1)", lo_at);
  report.sign_definite = true;
  return report;
}

}  // namespace sobolev
