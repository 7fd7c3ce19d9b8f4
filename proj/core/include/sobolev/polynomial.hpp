#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sobolev/scalar.hpp"

namespace sobolev {

/// Dense univariate polynomial; coeffs()[i] multiplies x^i.
///
/// Trailing zeros are stripped on construction, so the zero polynomial has
/// an empty coefficient list and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Mode mode = Mode::Exact) : mode_(mode) {}
  Polynomial(std::vector<Scalar> coeffs, Mode mode);
  /// Mode is taken from the coefficients; an empty list yields the exact zero.
  explicit Polynomial(std::vector<Scalar> coeffs);
  /// Exact polynomial from small rational coefficients, e.g. {{1,1},{-2,1}}.
  static Polynomial exact(std::initializer_list<std::pair<long, long>> coeffs);
  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(const Scalar& c, std::size_t degree);
  static Polynomial identity(Mode mode) { return monomial(Scalar::one(mode), 1); }

  Mode mode() const noexcept { return mode_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Scalar operator()(const Scalar& x) const;
  double operator()(double x) const;

  Polynomial derivative(unsigned order = 1) const;
  /// The antiderivative P with P(0) = 0.
  Polynomial antiderivative() const;
  /// x -> p(a*x + b).
  Polynomial compose_affine(const Scalar& a, const Scalar& b) const;
  Scalar integrate(const Scalar& from, const Scalar& to) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial to_mode(Mode mode) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const { return scaled(-Scalar::one(mode_)); }
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  std::string str() const;

 private:
  void normalize();

  Mode mode_;
  std::vector<Scalar> coeffs_;
  std::vector<double> approx_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
PolyDivision divmod(const Polynomial& num, const Polynomial& den);
/// Monic greatest common divisor (exact mode).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace sobolev
