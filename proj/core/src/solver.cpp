#include "sobolev/solver.hpp"

#include <algorithm>
#include <cmath>

#include "sobolev/error.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev/sturm.hpp"

namespace sobolev {

namespace {

Scalar from_integer(const Integer& n, Mode mode) { return Scalar(Rational(n)).to_mode(mode); }

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool agree(const Scalar& a, const Scalar& b) {
  if (a.is_exact()) return a == b;
  const double x = a.to_double(), y = b.to_double();
  return std::abs(x - y) <= 1e-10 * std::max(std::abs(x), std::abs(y));
}

// Float monomial products cancel badly once k grows; integrate the square by
// Gauss-Legendre on each piece instead (exact for the degree involved).
Scalar squared_norm(const Profile& f) {
  const auto* pp = std::get_if<PiecewisePolynomial>(&f);
  if (pp == nullptr || pp->mode() == Mode::Exact) return integrate(multiply(f, f));
  const GaussRule rule = gauss_legendre(static_cast<std::size_t>(std::max(pp->max_degree(), 0)) + 1);
  const auto& breaks = pp->breaks();
  double total = 0.0;
  for (std::size_t i = 0; i < pp->piece_count(); ++i) {
    const double a = breaks[i].to_double(), b = breaks[i + 1].to_double();
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double value = pp->piece(i)(mid + half * rule.nodes[q]);
      acc += rule.weights[q] * value * value;
    }
    total += half * acc;
  }
  return Scalar::real(total);
}

constexpr int kGridCells = 1 << 12;

double grid_min(const Profile& u) {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kGridCells; ++i) lo = std::min(lo, evaluate(u, static_cast<double>(i) / kGridCells));
  return lo;
}

double grid_max_abs(const Profile& f) {
  double hi = 0.0;
  for (int i = 1; i < kGridCells; ++i) hi = std::max(hi, std::abs(evaluate(f, static_cast<double>(i) / kGridCells)));
  return hi;
}

// u = -x ln x, u' = -ln x - 1.
ExtremalSolution solve_hardy(const ProblemSpec& spec) {
  if (spec.k != 1) {
    throw UnsupportedWeight("the Hardy weight 1/x^k is only supported for k = 1");
  }
  const Mode mode = spec.mode;
  const Scalar c = spec.rho.scale().to_mode(mode);
  // For c/x the extremizer scales by 1/c and mu by 1/c^2.
  const PowerLogSum base = PowerLogSum::term(-Scalar::one(mode), 1, 1);
  ExtremalSolution sol;
  sol.spec = spec;
  sol.mu = Scalar::one(mode) / (c * c);
  sol.lambda = 1.0 / std::sqrt(sol.mu.to_double());
  sol.u = base.scaled(Scalar::one(mode) / c);
  sol.u_k = std::get<PowerLogSum>(sol.u).derivative();
  sol.method = Method::ClosedForm;
  sol.outside_theorem_scope = true;
  sol.closed_form_checked = true;

  Diagnostics& d = sol.diagnostics;
  const Scalar normalization = integrate_against(spec.rho, sol.u);
  const Scalar energy = integrate(multiply(sol.u_k, sol.u_k));
  d.normalization_residual = std::abs((normalization - Scalar::one(mode)).to_double());
  d.dual_mu_residual = std::abs((energy / (sol.mu * sol.mu) - Scalar::one(mode) / sol.mu).to_double());
  d.boundary_residual = std::abs(value_at_one(sol.u).to_double());  // u(0) = 0 as a limit
  d.exact_normalization = mode == Mode::Exact && normalization == Scalar::one(mode);
  d.exact_dual_mu = mode == Mode::Exact && energy == sol.mu;
  d.exact_boundary = mode == Mode::Exact && value_at_one(sol.u).is_zero();
  d.min_interior_value = grid_min(sol.u);
  sol.notes.push_back("outside_theorem_scope: 1/x is not integrable on (0,1)");
  return sol;
}

}  // namespace

ProblemSpec make_problem(int k, Weight rho, Mode mode) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (k > 12) throw DomainError("k above 12 is outside the supported range");
  if (rho.kind() == WeightKind::Hardy && k != 1) {
    throw UnsupportedWeight("the Hardy weight 1/x^k is only supported for k = 1");
  }
  if (mode == Mode::Exact && !rho.has_exact_moments() && rho.kind() != WeightKind::Hardy) {
    throw DomainError("exact mode requires a weight with exact moments");
  }
  return ProblemSpec{k, std::move(rho), mode};
}

Matrix build_matrix(int k, Mode mode) {
  if (k < 1) throw DomainError("k must be at least 1");
  Matrix a(k, k, mode);
  for (int m = 0; m < k; ++m) {
    for (int j = 0; j < k; ++j) a(m, j) = from_integer(factorial(k + m) / factorial(k + m - j), mode);
  }
  return a;
}

DerivativeSeeds solve_seeds(const Matrix& a, const MomentVector& b) {
  if (a.rows() != b.b.size() || static_cast<int>(b.b.size()) != b.k) {
    throw DomainError("seed system dimensions do not match k");
  }
  return {solve_linear(a, b.b)};
}

Profile assemble_uk(const ProblemSpec& spec, const DerivativeSeeds& seeds, const Profile& iterated) {
  const Mode mode = spec.mode;
  const int k = spec.k;
  std::vector<Scalar> coeffs(k, Scalar::zero(mode));
  for (int j = 0; j < k; ++j) {
    const int power = k - 1 - j;
    coeffs[power] = seeds.s.at(j) / from_integer(factorial(power), mode);
  }
  const Scalar sign = Scalar::integer(k % 2 == 0 ? 1 : -1, mode);
  return add_polynomial(scaled(iterated, sign), Polynomial(std::move(coeffs), mode));
}

Scalar compute_mu(const Profile& v) {
  const Scalar energy = squared_norm(v);
  if (energy.is_zero()) throw ZeroWeight("the weight vanishes identically; the sharp constant is zero");
  return Scalar::one(energy.mode()) / energy;
}

AssembledMinimizer assemble_u(const ProblemSpec& spec, const Profile& v, const Scalar& mu) {
  const Mode mode = spec.mode;
  Profile u = v;
  for (int i = 0; i < spec.k; ++i) u = cumulative_integral(u);
  u = scaled(u, mu);

  Diagnostics d;
  Scalar worst = Scalar::zero(mode);
  for (int j = 0; j < spec.k; ++j) {
    // Float residuals are measured against the size of u^(j), which grows with mu.
    Scalar scale = Scalar::one(mode);
    if (mode == Mode::Float) {
      const Profile dj = derivative(u, j);
      scale = Scalar::real(std::max(1.0, grid_max_abs(dj)));
    }
    worst = std::max(worst, value_at_one(u, j).abs() / scale);
    worst = std::max(worst, value_at_zero(u, j).abs() / scale);
  }
  d.boundary_residual = worst.to_double();
  d.exact_boundary = mode == Mode::Exact && worst.is_zero();

  const Scalar normalization = integrate_against(spec.rho, u);
  d.normalization_residual = std::abs((normalization - Scalar::one(mode)).to_double());
  d.exact_normalization = mode == Mode::Exact && normalization == Scalar::one(mode);

  // Second route to mu: differentiate the assembled u back down.
  const Profile uk = derivative(u, spec.k);
  const Scalar energy = squared_norm(uk) / (mu * mu);
  const Scalar direct = squared_norm(v);
  d.dual_mu_residual = std::abs((energy - direct).to_double());
  d.exact_dual_mu = mode == Mode::Exact && energy == direct;

  d.min_interior_value = grid_min(u);
  if (mode == Mode::Exact) {
    if (const auto* pp = std::get_if<PiecewisePolynomial>(&u)) d.positivity_certified = certify_positive_open(*pp);
  }
  if (mode == Mode::Float && d.boundary_residual > 1e-8) {
    throw BoundaryResidualExceeded("boundary conditions violated by " + format_double(d.boundary_residual),
                                   d.boundary_residual);
  }
  return {std::move(u), d};
}

std::string_view to_string(Method method) { return method == Method::Pipeline ? "pipeline" : "closed_form"; }

std::optional<ClosedForm> closed_form(const ProblemSpec& spec) {
  const Mode mode = spec.mode;
  const int k = spec.k;
  const Weight& rho = spec.rho;
  const Scalar one = Scalar::one(mode);
  const Scalar c = rho.scale().to_mode(mode);

  auto uniform = [&](const Scalar& height) {
    // mu = (2k)!(2k+1)!/(k!)^2 / c^2, u = (2k+1)!/(k!)^2 / c * x^k (1-x)^k.
    const Integer kf = factorial(k);
    const Scalar mu = from_integer(factorial(2 * k) * factorial(2 * k + 1) / (kf * kf), mode) / (height * height);
    const Scalar amplitude = from_integer(factorial(2 * k + 1) / (kf * kf), mode) / height;
    const Polynomial bump = (Polynomial::identity(mode) * Polynomial({one, -one}, mode)).pow(k);
    return ClosedForm{mu, Profile(PiecewisePolynomial(bump.scaled(amplitude))),
                      "mu = (2k)!(2k+1)!/(k!)^2, u ~ x^k (1-x)^k"};
  };

  switch (rho.kind()) {
    case WeightKind::Poly: {
      const Polynomial& p = std::get<PolyWeight>(rho.data()).p;
      if (p.degree() != 0) return std::nullopt;
      return uniform(p.leading().to_mode(mode));
    }
    case WeightKind::Indicator: {
      const auto& w = std::get<IndicatorWeight>(rho.data());
      const Scalar a = w.a.to_mode(mode), b = w.b.to_mode(mode);
      if (a.is_zero() && b == one) return uniform(c);
      if (k != 1) return std::nullopt;
      const Scalar denom = Scalar::integer(4, mode) * (Scalar::integer(2, mode) * a + b) -
                           Scalar::integer(3, mode) * (a + b) * (a + b);
      return ClosedForm{Scalar::integer(12, mode) / denom / (c * c), std::nullopt,
                        "mu = 12 / (4(2a+b) - 3(a+b)^2)"};
    }
    case WeightKind::Dirac: {
      const Scalar a = std::get<DiracWeight>(rho.data()).a.to_mode(mode);
      const Integer km1 = factorial(k - 1);
      const Scalar mu = from_integer((2 * k - 1) * km1 * km1, mode) / (a * (one - a)).pow(2 * k - 1) / (c * c);
      return ClosedForm{mu, std::nullopt, "mu = (2k-1)((k-1)!)^2 / (a(1-a))^(2k-1)"};
    }
    case WeightKind::Hardy: {
      if (k != 1) return std::nullopt;
      return ClosedForm{one / (c * c), Profile(PowerLogSum::term(-one / c, 1, 1)), "Lambda = 1, u = -x ln x"};
    }
    default:
      return std::nullopt;
  }
}

PiecewisePolynomial dirac_printed_minimizer(int k, const Scalar& a) {
  const Mode mode = a.mode();
  const Scalar one = Scalar::one(mode);
  const Polynomial x = Polynomial::identity(mode);
  auto h = [&](const Polynomial& var, const Scalar& param) {
    Polynomial sum(mode);
    for (int n = 0; n < k; ++n) {
      Scalar inner = Scalar::zero(mode);
      for (int m = 0; m <= n; ++m) {
        inner += from_integer(binomial(2 * k - 1, m) * binomial(k - 1 + n - m, n - m), mode) * param.pow(k - 1 - m);
      }
      sum += var.pow(n).scaled(inner);
    }
    return sum;
  };
  const Polynomial one_minus_x({one, -one}, mode);
  const Polynomial left = (x.pow(k) * h(one_minus_x, one - a)).scaled((one - a).pow(k));
  const Polynomial right = (one_minus_x.pow(k) * h(x, a)).scaled(a.pow(k));
  const Scalar peak = right(a);
  return PiecewisePolynomial({Scalar::zero(mode), a, one},
                             {left.scaled(one / peak), right.scaled(one / peak)});
}

ExtremalSolution solve(const ProblemSpec& spec_in) {
  const ProblemSpec spec = make_problem(spec_in.k, spec_in.rho, spec_in.mode);
  if (spec.rho.kind() == WeightKind::Hardy) return solve_hardy(spec);

  const Mode mode = spec.mode;
  ExtremalSolution sol;
  sol.spec = spec;
  sol.outside_theorem_scope = spec.rho.outside_theorem_scope();

  const MomentVector b = moments(spec.rho, spec.k, mode);
  sol.seeds = solve_seeds(build_matrix(spec.k, mode), b);
  const Profile v = assemble_uk(spec, sol.seeds, iterated_integral(spec.rho, spec.k, mode));
  sol.mu = compute_mu(v);
  sol.lambda = 1.0 / std::sqrt(sol.mu.to_double());
  AssembledMinimizer assembled = assemble_u(spec, v, sol.mu);
  sol.u = std::move(assembled.u);
  sol.u_k = scaled(v, sol.mu);
  sol.diagnostics = assembled.diagnostics;
  sol.method = Method::Pipeline;

  if (const auto cf = closed_form(spec)) {
    if (!agree(sol.mu, cf->mu)) {
      throw ClosedFormMismatch("pipeline mu " + sol.mu.str() + " disagrees with closed form " + cf->mu.str() +
                               " (" + cf->formula + ")");
    }
    if (cf->u && mode == Mode::Exact && std::holds_alternative<PiecewisePolynomial>(sol.u)) {
      const auto& expected = std::get<PiecewisePolynomial>(*cf->u);
      const auto diff = std::get<PiecewisePolynomial>(sol.u) - expected;
      for (const auto& piece : diff.pieces()) {
        if (!piece.is_zero()) throw ClosedFormMismatch("pipeline extremizer disagrees with " + cf->formula);
      }
    }
    sol.closed_form_checked = true;
    sol.notes.push_back("closed form checked: " + cf->formula);
  }
  if (sol.outside_theorem_scope) sol.notes.push_back("outside_theorem_scope: the weight is a measure, not L^1");
  return sol;
}

}  // namespace sobolev
