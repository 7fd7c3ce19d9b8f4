#include <doctest.h>

#include <random>

#include "sobolev/error.hpp"
#include "sobolev/polynomial.hpp"
#include "unit/support.hpp"

using namespace sobolev;
using test::q;

namespace {
const Polynomial x = Polynomial::identity(Mode::Exact);
const Polynomial one = Polynomial::constant(Scalar::exact(1));
}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
  const Polynomial p({q(1), q(0), q(0)}, Mode::Exact);
  CHECK(p.degree() == 0);
  CHECK(Polynomial(Mode::Exact).is_zero());
  CHECK(Polynomial(Mode::Exact).degree() == -1);
  CHECK(Polynomial({q(0)}, Mode::Exact).is_zero());
  CHECK((x - x).is_zero());
}

TEST_CASE("basic arithmetic") {
  CHECK(x * (one - x) == Polynomial::exact({{0, 1}, {1, 1}, {-1, 1}}));
  CHECK((x * x).compose_affine(q(-1), q(1)) == Polynomial::exact({{1, 1}, {-2, 1}, {1, 1}}));
  CHECK((x - x * x).scaled(q(6)) == Polynomial::exact({{0, 1}, {6, 1}, {-6, 1}}));
  CHECK((one - x).pow(3) == Polynomial::exact({{1, 1}, {-3, 1}, {3, 1}, {-1, 1}}));
  CHECK_THROWS_AS(x + Polynomial::identity(Mode::Float), ModeMismatch);
}

TEST_CASE("definite integrals") {
  const Polynomial p = (one - x.scaled(q(2))).pow(2);
  CHECK(p.integrate(q(0), q(1)) == q(1, 3));
  CHECK((x * (one - x)).integrate(q(0), q(1)) == q(1, 6));
  CHECK(Polynomial(Mode::Exact).integrate(q(0), q(1)) == q(0));
  CHECK(x.integrate(q(1, 2), q(1)) == q(3, 8));
}

TEST_CASE("antiderivative vanishes at zero") {
  CHECK(one.antiderivative() == x);
  CHECK(x.antiderivative() == Polynomial::exact({{0, 1}, {0, 1}, {1, 2}}));
  for (unsigned k = 1; k <= 8; ++k) {
    Polynomial p = one;
    for (unsigned i = 0; i < k; ++i) p = p.antiderivative();
    CHECK(p == Polynomial::monomial(Scalar(Rational(1, factorial(k))), k));
  }
}

TEST_CASE("derivatives") {
  const Polynomial p = Polynomial::exact({{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(p.derivative() == Polynomial::exact({{2, 1}, {6, 1}, {12, 1}}));
  CHECK(p.derivative(3) == Polynomial::exact({{24, 1}}));
  CHECK(p.derivative(4).is_zero());
  CHECK(p.antiderivative().derivative() == p);
}

TEST_CASE("evaluation is exact and float evaluation agrees") {
  const Polynomial p = Polynomial::exact({{1, 3}, {-2, 1}, {5, 7}});
  CHECK(p(q(1, 2)) == q(1, 3) - q(1) + q(5, 28));
  CHECK(p(0.5) == doctest::Approx(p(q(1, 2)).to_double()).epsilon(1e-15));
}

TEST_CASE("division and gcd") {
  const Polynomial a = (x - one) * (x - one.scaled(q(2)));
  const Polynomial b = (x - one) * (x + one);
  const auto [quo, rem] = divmod(a * b + x, b);
  CHECK(quo == a);
  CHECK(rem == x);
  CHECK(gcd(a, b) == x - one);
  CHECK_THROWS_AS(divmod(a, Polynomial(Mode::Exact)), DomainError);
}

TEST_CASE("exact ring identities on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = test::random_poly(rng, trial % 9);
    const Polynomial r = test::random_poly(rng, (trial * 5) % 7);
    const Polynomial s = test::random_poly(rng, (trial * 3) % 11);
    CHECK((p + r) * s == p * s + r * s);
    CHECK((p * r) * s == p * (r * s));
    CHECK(p * r == r * p);
    CHECK((p * r).integrate(q(0), q(1)) == (r * p).antiderivative()(q(1)));
  }
}

TEST_CASE("float mode mirrors exact mode") {
  const Polynomial p = Polynomial::exact({{1, 3}, {-2, 1}, {5, 7}});
  const Polynomial pf = p.to_mode(Mode::Float);
  CHECK(pf.mode() == Mode::Float);
  CHECK(pf.integrate(Scalar::real(0), Scalar::real(1)).to_double() ==
        doctest::Approx(p.integrate(q(0), q(1)).to_double()).epsilon(1e-15));
}
