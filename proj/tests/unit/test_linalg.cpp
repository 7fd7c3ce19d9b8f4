#include <doctest.h>

#include "sobolev/error.hpp"
#include "sobolev/linalg.hpp"
#include "unit/support.hpp"

using namespace sobolev;
using test::q;

TEST_CASE("exact solve of a small system") {
  Matrix a(2, 2, Mode::Exact);
  a(0, 0) = q(1);
  a(0, 1) = q(2);
  a(1, 0) = q(1);
  a(1, 1) = q(3);
  const auto s = solve_linear(a, {q(-1, 3), q(-1, 4)});
  CHECK(s[0] == q(-1, 2));
  CHECK(s[1] == q(1, 12));
  CHECK(a * s == std::vector<Scalar>{q(-1, 3), q(-1, 4)});
}

TEST_CASE("Hilbert matrix solves exactly") {
  const int n = 8;
  Matrix h(n, n, Mode::Exact);
  std::vector<Scalar> ones(n, q(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = q(1, i + j + 1);
  const auto b = h * ones;
  CHECK(solve_linear(h, b) == ones);
}

TEST_CASE("float solve uses pivoting") {
  Matrix a(2, 2, Mode::Float);
  a(0, 0) = Scalar::real(1e-20);
  a(0, 1) = Scalar::real(1);
  a(1, 0) = Scalar::real(1);
  a(1, 1) = Scalar::real(1);
  const auto s = solve_linear(a, {Scalar::real(1), Scalar::real(2)});
  CHECK(s[0].to_double() == doctest::Approx(1.0));
  CHECK(s[1].to_double() == doctest::Approx(1.0));
}

TEST_CASE("singular systems are rejected") {
  Matrix a(2, 2, Mode::Exact);
  a(0, 0) = q(1);
  a(0, 1) = q(2);
  a(1, 0) = q(2);
  a(1, 1) = q(4);
  CHECK_THROWS_AS(solve_linear(a, {q(1), q(1)}), SingularMatrix);
  Matrix f = a.to_mode(Mode::Float);
  CHECK_THROWS_AS(solve_linear(f, {Scalar::real(1), Scalar::real(1)}), SingularMatrix);
}

TEST_CASE("nested dual norms are prefix values of r^T G^-1 r") {
  Matrix g(2, 2, Mode::Exact);
  g(0, 0) = q(2);
  g(0, 1) = q(1);
  g(1, 0) = q(1);
  g(1, 1) = q(2);
  const auto d = nested_dual_norms(g, {q(1), q(1)});
  REQUIRE(d.size() == 2);
  CHECK(d[0] == q(1, 2));
  CHECK(d[1] == q(2, 3));
}
