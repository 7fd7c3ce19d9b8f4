#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <json.hpp>

#include "sobolev/error.hpp"
#include "sobolev/oracle.hpp"
#include "sobolev/solver.hpp"

namespace sobolev::cli {

namespace {

using Json = nlohmann::ordered_json;

Mode resolve_mode(const RunConfig& cfg) {
  return cfg.mode && *cfg.mode == "float" ? Mode::Float : Mode::Exact;
}

ProblemSpec problem(const RunConfig& cfg) {
  return make_problem(cfg.k, parse_weight(cfg.weight_spec), resolve_mode(cfg));
}

std::string g17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double finite(double x, const char* what) {
  if (!std::isfinite(x)) throw NonConvergence(std::string("non-finite ") + what + " cannot be written as JSON");
  return x;
}

Json diagnostics_json(const Diagnostics& d) {
  Json j;
  j["boundary_residual"] = finite(d.boundary_residual, "boundary residual");
  j["normalization_residual"] = finite(d.normalization_residual, "normalization residual");
  j["dual_mu_residual"] = finite(d.dual_mu_residual, "dual mu residual");
  j["min_interior_value"] = finite(d.min_interior_value, "minimum");
  j["positivity_certified"] = d.positivity_certified ? Json(*d.positivity_certified) : Json(nullptr);
  j["exact_boundary"] = d.exact_boundary;
  j["exact_normalization"] = d.exact_normalization;
  j["exact_dual_mu"] = d.exact_dual_mu;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Samples f at x_i = i/(n-1); exact profiles are evaluated at the rational point.
double sample(const Profile& f, int i, int n) {
  if (const auto* pp = std::get_if<PiecewisePolynomial>(&f); pp && profile_mode(f) == Mode::Exact) {
    return (*pp)(Scalar::exact(i, n - 1)).to_double();
  }
  return evaluate(f, static_cast<double>(i) / (n - 1));
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) { return cfg.format.value_or(fallback); }

}  // namespace

CommandOutput run_constant(const RunConfig& cfg) {
  if (format_or(cfg, OutputFormat::Json) != OutputFormat::Json) throw DomainError("constant writes JSON only");
  const ExtremalSolution sol = solve(problem(cfg));
  Json j;
  j["k"] = cfg.k;
  j["weight"] = cfg.weight_spec;
  j["mu"] = sol.mu.str();
  j["mu_float"] = finite(sol.mu.to_double(), "mu");
  j["lambda"] = finite(sol.lambda, "lambda");
  j["method"] = to_string(sol.method);
  j["mode"] = sol.spec.mode == Mode::Exact ? "exact" : "float";
  j["diagnostics"] = diagnostics_json(sol.diagnostics);
  j["outside_theorem_scope"] = sol.outside_theorem_scope;
  j["notes"] = sol.notes;
  return {dump(j)};
}

CommandOutput run_minimizer(const RunConfig& cfg) {
  const ExtremalSolution sol = solve(problem(cfg));
  const int n = cfg.samples;
  if (format_or(cfg, OutputFormat::Csv) == OutputFormat::Json) {
    Json xs = Json::array(), us = Json::array(), uks = Json::array();
    for (int i = 0; i < n; ++i) {
      xs.push_back(static_cast<double>(i) / (n - 1));
      us.push_back(finite(sample(sol.u, i, n), "u"));
      uks.push_back(finite(sample(sol.u_k, i, n), "u_k"));
    }
    Json j;
    j["k"] = cfg.k;
    j["weight"] = cfg.weight_spec;
    j["x"] = xs;
    j["u"] = us;
    j["u_k"] = uks;
    return {dump(j)};
  }
  std::string out = "x,u,u_k\n";
  for (int i = 0; i < n; ++i) {
    out += g17(static_cast<double>(i) / (n - 1)) + "," + g17(sample(sol.u, i, n)) + "," + g17(sample(sol.u_k, i, n)) +
           "\n";
  }
  return {out};
}

CommandOutput run_verify(const RunConfig& cfg) {
  if (format_or(cfg, OutputFormat::Json) != OutputFormat::Json) throw DomainError("verify writes JSON only");
  const ProblemSpec spec = problem(cfg);
  const ExtremalSolution sol = solve(spec);
  const double inv_mu = 1.0 / sol.mu.to_double();
  const Weight& rho = spec.rho;
  bool agree = true;

  Json j;
  j["k"] = cfg.k;
  j["weight"] = cfg.weight_spec;
  j["pipeline_mu"] = sol.mu.str();
  j["pipeline_mu_float"] = finite(sol.mu.to_double(), "mu");

  // Galerkin: exact containment for polynomials, Legendre basis otherwise.
  {
    GalerkinConfig gc;
    double tolerance = 1e-5;
    const int degree = rho.polynomial_degree();
    if (degree >= 0) {
      gc.degree = std::max(cfg.galerkin_degree, degree + cfg.k);
      gc.mode = Mode::Exact;
      tolerance = 1e-8;
    } else {
      gc.degree = std::max(cfg.galerkin_degree, 240);
      gc.mode = Mode::Float;
      gc.basis = GalerkinBasis::Legendre;
      if (rho.outside_theorem_scope()) tolerance = 1e-2;
    }
    const OracleReport g = galerkin_lambda(spec, gc);
    Json gj;
    gj["N"] = gc.degree;
    gj["basis"] = gc.basis == GalerkinBasis::Legendre ? "legendre" : "monomial";
    double lambda_sq = g.details.at("lambda_sq");
    double gap = inv_mu - lambda_sq;
    if (!g.exact_history.empty() && sol.mu.is_exact()) {
      const Scalar exact_gap = Scalar(Rational(1)) / sol.mu - g.exact_history.back();
      gj["lambda_sq_exact"] = g.exact_history.back().str();
      gj["gap_exact"] = exact_gap.str();
      gap = exact_gap.to_double();
    }
    const double relative = gap / inv_mu;
    gj["lambda_sq"] = finite(lambda_sq, "Galerkin value");
    gj["gap"] = finite(gap, "Galerkin gap");
    gj["relative_gap"] = finite(relative, "Galerkin gap");
    gj["tolerance"] = tolerance;
    const bool ok = relative >= -1e-10 && relative <= tolerance;
    gj["agree"] = ok;
    agree = agree && ok;
    j["galerkin"] = gj;
  }

  // Sign iteration on the FD grid (k = 1, 2).
  if (cfg.k <= 2) {
    SignIterationConfig sc;
    sc.grid = cfg.grid;
    const OracleReport s = sign_iteration(spec, sc);
    const double mu_h = s.details.at("mu_h");
    const double relative = std::abs(mu_h - sol.mu.to_double()) / sol.mu.to_double();
    Json sj;
    sj["grid"] = cfg.grid;
    sj["mu_h"] = finite(mu_h, "mu_h");
    sj["relative_error"] = finite(relative, "relative error");
    sj["sign_definite"] = s.sign_definite;
    sj["converged_restarts"] = static_cast<int>(s.details.at("converged_restarts"));
    const bool ok = s.sign_definite && relative <= 0.05;
    sj["agree"] = ok;
    agree = agree && ok;
    j["sign_iteration"] = sj;
  } else {
    j["sign_iteration"] = "skipped";
  }

  // Maximum principle with load rho.
  {
    std::string verdict = "skipped";
    MaxPrincipleConfig mc;
    mc.grid = cfg.grid;
    bool run = true;
    if (rho.is_piecewise_polynomial()) mc.path = MaxPrinciplePath::Exact;
    else if (cfg.k <= 2) mc.path = MaxPrinciplePath::FiniteDifference;
    else run = false;
    if (run) {
      try {
        max_principle_check(cfg.k, rho, mc);
        verdict = "pass";
      } catch (const PositivityViolated&) {
        verdict = "fail";
        agree = false;
      }
    }
    j["max_principle"] = verdict;
  }

  j["verdict"] = agree ? "agree" : "disagree";
  return {dump(j), agree ? kExitOk : kExitDisagree};
}

CommandOutput run_sweep(const RunConfig& cfg) {
  const SweepRange& r = cfg.sweep;
  if (r.from.empty() || r.to.empty() || r.step.empty()) throw DomainError("sweep needs --from, --to and --step");
  const Rational from = Scalar::parse_rational(r.from).rational();
  const Rational to = Scalar::parse_rational(r.to).rational();
  Rational step = abs(Scalar::parse_rational(r.step).rational());
  if (sgn(step) == 0) throw DomainError("--step must be non-zero");
  if (to < from) step = -step;

  std::vector<Rational> params;
  for (Rational p = from; sgn(step) > 0 ? p <= to : p >= to; p += step) {
    params.push_back(p);
    if (params.size() > 100000) throw DomainError("sweep has too many points");
  }
  std::sort(params.begin(), params.end());

  const Rational center = Scalar::parse_rational(r.center).rational();
  const Rational width = Scalar::parse_rational(r.width).rational();
  auto weight_at = [&](const Rational& p) -> std::string {
    const auto s = [](const Rational& q) { return Scalar(q).str(); };
    if (r.param == "dirac") return "dirac:" + s(p);
    if (r.param == "pow") return "pow:" + s(p);
    if (r.param == "chi-center") return "chi:" + s(p - width / 2) + "," + s(p + width / 2);
    if (r.param == "chi-width") return "chi:" + s(center - p) + "," + s(center + p);
    throw DomainError("--param must be one of dirac, chi-center, chi-width, pow");
  };

  // Validate every point before launching work so input errors stay exit 2.
  std::vector<ProblemSpec> specs;
  for (const Rational& p : params) {
    specs.push_back(make_problem(cfg.k, parse_weight(weight_at(p)), resolve_mode(cfg)));
  }
  // Fixed worker pool; results land in their own slots, so order is deterministic.
  std::vector<std::optional<ExtremalSolution>> results(specs.size());
  std::vector<std::exception_ptr> failures(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        results[i] = solve(specs[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(specs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  const bool json = format_or(cfg, OutputFormat::Csv) == OutputFormat::Json;
  std::string out = json ? "" : "param,mu,lambda\n";
  Json rows = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    const ExtremalSolution& sol = *results[i];
    const double p = Scalar(params[i]).to_double();
    if (json) {
      Json row;
      row["param"] = Scalar(params[i]).str();
      row["param_float"] = p;
      row["weight"] = weight_at(params[i]);
      row["mu"] = sol.mu.str();
      row["mu_float"] = finite(sol.mu.to_double(), "mu");
      row["lambda"] = finite(sol.lambda, "lambda");
      rows.push_back(row);
    } else {
      out += g17(p) + "," + g17(sol.mu.to_double()) + "," + g17(sol.lambda) + "\n";
    }
  }
  if (json) {
    Json j;
    j["k"] = cfg.k;
    j["param"] = r.param;
    j["rows"] = rows;
    out = dump(j);
  }
  return {out};
}

}  // namespace sobolev::cli
