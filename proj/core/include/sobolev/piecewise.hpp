#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sobolev/polynomial.hpp"

namespace sobolev {

/// Piecewise polynomial on [0,1]: pieces()[i] lives on [breaks[i], breaks[i+1]].
///
/// Breakpoints start at 0, end at 1 and increase strictly. Continuity is not
/// part of the type; use jump() / is_continuous() when it matters. Point
/// evaluation is right-continuous, with x = 1 belonging to the last piece.
class PiecewisePolynomial {
 public:
  /// The zero function on [0,1].
  PiecewisePolynomial() : PiecewisePolynomial(Polynomial(Mode::Exact)) {}
  PiecewisePolynomial(std::vector<Scalar> breaks, std::vector<Polynomial> pieces);
  /// A single polynomial over [0,1].
  explicit PiecewisePolynomial(const Polynomial& p);

  Mode mode() const noexcept { return pieces_.front().mode(); }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  const std::vector<Scalar>& breaks() const noexcept { return breaks_; }
  const std::vector<Polynomial>& pieces() const noexcept { return pieces_; }
  const Polynomial& piece(std::size_t i) const { return pieces_.at(i); }
  int max_degree() const;

  std::size_t locate(double x) const;
  std::size_t locate(const Scalar& x) const;
  Scalar operator()(const Scalar& x) const;
  double operator()(double x) const;

  /// Limits from the left / right of piece i's own polynomial at its ends.
  Scalar left_end_value(std::size_t i, unsigned derivative = 0) const;
  Scalar right_end_value(std::size_t i, unsigned derivative = 0) const;

  /// p_i^(order)(b_i) - p_{i-1}^(order)(b_i) at interior breakpoint i (1 <= i < piece_count()).
  Scalar jump(std::size_t i, unsigned order = 0) const;
  /// All derivatives up to `order` are continuous (exactly, or within tol in float mode).
  bool is_continuous(unsigned order, double tol = 0.0) const;

  PiecewisePolynomial derivative(unsigned order = 1) const;
  /// F(x) = integral of this from 0 to x; continuous by construction.
  PiecewisePolynomial cumulative_integral() const;
  Scalar integrate() const;
  Scalar integrate(const Scalar& from, const Scalar& to) const;

  PiecewisePolynomial refined(const std::vector<Scalar>& extra_breaks) const;
  PiecewisePolynomial scaled(const Scalar& c) const;
  /// x -> f(1 - x).
  PiecewisePolynomial reflected() const;
  PiecewisePolynomial to_mode(Mode mode) const;

  friend PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
  friend PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
  friend PiecewisePolynomial operator*(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
  friend bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

  std::string str() const;

 private:
  std::vector<Scalar> breaks_;
  std::vector<Polynomial> pieces_;
};

/// Sorted union of two breakpoint lists (exact de-duplication).
std::vector<Scalar> merge_breaks(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace sobolev
