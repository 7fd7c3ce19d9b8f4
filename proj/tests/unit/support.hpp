#pragma once

#include <random>
#include <string>

#include "sobolev/piecewise.hpp"
#include "sobolev/polynomial.hpp"
#include "sobolev/scalar.hpp"

namespace test {

inline sobolev::Scalar q(const std::string& text) { return sobolev::Scalar::parse_rational(text); }

inline sobolev::Scalar q(long num, long den = 1) { return sobolev::Scalar::exact(num, den); }

/// Random exact polynomial with small rational coefficients.
inline sobolev::Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  std::vector<sobolev::Scalar> c;
  for (int i = 0; i <= degree; ++i) c.push_back(sobolev::Scalar::exact(num(rng), den(rng)));
  return sobolev::Polynomial(c, sobolev::Mode::Exact);
}

/// Random polynomial of degree <= max_degree that is non-negative on [0,1]:
/// a positive constant plus products of squares and factors x, 1-x.
inline sobolev::Polynomial random_nonnegative_poly(std::mt19937_64& rng, int max_degree) {
  using sobolev::Polynomial;
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), shift(-3, 12), pick(0, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int target = deg(rng);
  Polynomial p = Polynomial::constant(sobolev::Scalar::exact(num(rng), den(rng)));
  const Polynomial x = Polynomial::identity(sobolev::Mode::Exact);
  const Polynomial one = Polynomial::constant(sobolev::Scalar::exact(1));
  while (p.degree() < target) {
    const int room = target - p.degree();
    const long choice = pick(rng);
    if (choice == 0 || room == 1) {
      p = p * (choice % 2 == 0 ? x : one - x);
    } else {
      const Polynomial lin = x - Polynomial::constant(sobolev::Scalar::exact(shift(rng), 10));
      p = p * lin * lin;
    }
  }
  return p + Polynomial::constant(sobolev::Scalar::exact(num(rng), 10 * den(rng)));
}

}  // namespace test
