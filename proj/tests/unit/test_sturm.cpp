#include <doctest.h>

#include "sobolev/sturm.hpp"
#include "unit/support.hpp"

using namespace sobolev;
using test::q;

namespace {
const Polynomial x = Polynomial::identity(Mode::Exact);
Polynomial c(long n, long d = 1) { return Polynomial::constant(Scalar::exact(n, d)); }
}  // namespace

TEST_CASE("root counting on open intervals") {
  const Polynomial p = (x - c(1, 3)) * (x - c(1, 2)) * (x - c(2));
  CHECK(count_roots_open(p, q(0), q(1)) == 2);
  CHECK(count_roots_open(p, q(0), q(2)) == 2);
  CHECK(count_roots_open(p, q(0), q(3)) == 3);
  CHECK(count_roots_open(x * x + c(1), q(-5), q(5)) == 0);
  // Roots at the endpoints do not count.
  CHECK(count_roots_open(x * (c(1) - x), q(0), q(1)) == 0);
}

TEST_CASE("positivity certificates") {
  CHECK(certify_positive_open(x * (c(1) - x), q(0), q(1)));
  CHECK_FALSE(certify_positive_open(x - c(1, 2), q(0), q(1)));
  CHECK_FALSE(certify_positive_open(-x, q(0), q(1)));
  // Double root inside: non-negative, not positive.
  const Polynomial sq = (x - c(1, 2)) * (x - c(1, 2));
  CHECK_FALSE(certify_positive_open(sq, q(0), q(1)));
  CHECK(certify_nonnegative(sq, q(0), q(1)));
  CHECK_FALSE(certify_nonnegative(sq * (x - c(1, 4)), q(0), q(1)));
  CHECK(certify_nonnegative(c(0), q(0), q(1)));
}

TEST_CASE("squarefree factorization") {
  const Polynomial p = (x - c(1)) * (x - c(1)) * (x - c(2));
  const auto f = squarefree_factors(p);
  REQUIRE(f.size() >= 2);
  CHECK(f[0].degree() == 1);
  CHECK(f[1].degree() == 1);
}

TEST_CASE("piecewise positivity") {
  const PiecewisePolynomial tent({q(0), q(1, 2), q(1)}, {x, c(1) - x});
  CHECK(certify_positive_open(tent));
  const PiecewisePolynomial touching({q(0), q(1, 2), q(1)}, {x * (c(1, 2) - x), c(1) - x});
  CHECK_FALSE(certify_positive_open(touching));
}
