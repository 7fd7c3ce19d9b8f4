#include <doctest.h>

#include <cmath>
#include <random>

#include "sobolev/solver.hpp"
#include "sobolev/sturm.hpp"
#include "unit/support.hpp"

using namespace sobolev;
using test::q;

namespace {

const char* kExactMatrix[] = {"poly:1",        "poly:1+x",  "poly:x^2",  "chi:0,1/2", "chi:1/5,1/3",
                              "pw:[0,1/2]=1;[1/2,1]=x", "dirac:1/3", "dirac:1/2", "pow:1/2"};

}  // namespace

TEST_CASE("homogeneity: mu(c rho) = mu(rho) / c^2") {
  for (const char* spec : kExactMatrix) {
    const Weight w = parse_weight(spec);
    for (int k = 1; k <= 3; ++k) {
      const Scalar mu = solve(make_problem(k, w)).mu;
      for (const Scalar& c : {q(2), q(3, 7), q(11, 5)}) {
        CAPTURE(spec);
        CHECK(solve(make_problem(k, w.scaled(c))).mu == mu / (c * c));
      }
    }
  }
}

TEST_CASE("reflection: mu(rho(1 - x)) = mu(rho)") {
  for (const char* spec : kExactMatrix) {
    const Weight w = parse_weight(spec);
    if (w.kind() == WeightKind::Power) continue;
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(spec);
      CHECK(solve(make_problem(k, w.reflected())).mu == solve(make_problem(k, w)).mu);
    }
  }
  CHECK(solve(make_problem(2, parse_weight("chi:0,1/2"))).mu == solve(make_problem(2, parse_weight("chi:1/2,1"))).mu);
}

TEST_CASE("dual mu identity and positivity on random polynomial weights") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Weight w = Weight::poly(test::random_nonnegative_poly(rng, 4));
    const int k = 1 + trial % 3;
    const ExtremalSolution s = solve(make_problem(k, w));
    const Scalar energy = integrate(multiply(s.u_k, s.u_k));
    CHECK(energy / (s.mu * s.mu) == q(1) / s.mu);
    CHECK(s.diagnostics.exact_boundary);
    CHECK(s.diagnostics.exact_normalization);
    REQUIRE(s.diagnostics.positivity_certified.has_value());
    CHECK(*s.diagnostics.positivity_certified);
  }
}

TEST_CASE("the sharp inequality holds for random trial functions") {
  // w = x^k (1-x)^k q with q random; check int |w| rho <= Lambda ||w^(k)||.
  std::mt19937_64 rng(5);
  const Polynomial x = Polynomial::identity(Mode::Float);
  const Polynomial one = Polynomial::constant(Scalar::real(1));
  for (const char* spec : {"poly:1+x", "chi:1/4,3/4", "pow:1/2", "dirac:1/3"}) {
    for (int k = 1; k <= 2; ++k) {
      const ProblemSpec p = make_problem(k, parse_weight(spec));
      const double lambda = solve(p).lambda;
      const Polynomial bubble = (x * (one - x)).pow(k);
      for (int trial = 0; trial < 100; ++trial) {
        const Polynomial w = bubble * test::random_poly(rng, trial % 6).to_mode(Mode::Float);
        if (w.is_zero()) continue;
        // Split at the real roots of w on (0,1) via fine sampling so |w| integrates piecewise.
        double lhs = 0;
        if (p.rho.kind() == WeightKind::Dirac) {
          lhs = std::abs(w(std::get<DiracWeight>(p.rho.data()).a.to_double()));
        } else {
          const int cells = 1000;
          for (int i = 0; i < cells; ++i) {
            const double a = double(i) / cells, b = double(i + 1) / cells;
            // 2-point Gauss on each cell, weight evaluated pointwise.
            const double m = (a + b) / 2, r = (b - a) / (2 * std::sqrt(3.0));
            for (double t : {m - r, m + r}) lhs += std::abs(w(t)) * eval_weight(p.rho, t) * (b - a) / 2;
          }
        }
        const Polynomial dk = w.derivative(k);
        const double energy = (dk * dk).integrate(Scalar::real(0), Scalar::real(1)).to_double();
        CHECK(lhs <= lambda * std::sqrt(energy) * (1 + 1e-3));
      }
    }
  }
}

TEST_CASE("shrinking indicators converge to the Dirac value at first order") {
  const Scalar a = q(1, 2);
  const Scalar dirac_mu = solve(make_problem(1, Weight::dirac(a))).mu;
  CHECK(dirac_mu == q(1) / (a * (q(1) - a)));
  double previous = 0;
  for (int j = 2; j <= 12; ++j) {
    const Scalar eps = Scalar(Rational(1, Integer(1) << j));
    const Scalar lo = a - eps, hi = a + eps;
    const Scalar mu = solve(make_problem(1, Weight::indicator(lo, hi))).mu;
    // Both closed forms at once.
    const Scalar formula = q(12) / (q(4) * (q(2) * lo + hi) - q(3) * (lo + hi) * (lo + hi));
    CHECK(mu == formula);
    const double err = (mu - dirac_mu).abs().to_double();
    // Pre-asymptotic for wide intervals.
    if (j >= 6) CHECK(std::log2(previous / err) == doctest::Approx(1.0).epsilon(0.05));
    previous = err;
  }
}
