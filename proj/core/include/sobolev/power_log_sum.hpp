#pragma once

#include <string>
#include <vector>

#include "sobolev/polynomial.hpp"
#include "sobolev/scalar.hpp"

namespace sobolev {

/// One term c * x^e * (ln x)^q with a rational exponent e.
struct PowerLogTerm {
  Scalar coeff;
  Rational exponent;
  unsigned log_power = 0;
};

/// Finite sum of PowerLogTerms on (0, 1].
///
/// Closed-form home for extremizers of singular weights: x^(-alpha) weights
/// produce fractional powers, the Hardy case produces x ln x. Terms are kept
/// merged and sorted by (exponent, log_power); zero terms are dropped.
class PowerLogSum {
 public:
  explicit PowerLogSum(Mode mode = Mode::Exact) : mode_(mode) {}
  PowerLogSum(std::vector<PowerLogTerm> terms, Mode mode);
  static PowerLogSum from_polynomial(const Polynomial& p);
  static PowerLogSum term(const Scalar& coeff, const Rational& exponent, unsigned log_power = 0);

  Mode mode() const noexcept { return mode_; }
  const std::vector<PowerLogTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Float evaluation for x in [0, 1]; limits at x = 0 may be +-infinity.
  double operator()(double x) const;

  PowerLogSum derivative(unsigned order = 1) const;
  /// Antiderivative vanishing at 0; requires every exponent > -1.
  PowerLogSum antiderivative() const;
  /// Integral over (0, 1]; requires every exponent > -1.
  Scalar integrate() const;
  /// Multiplies by x^shift.
  PowerLogSum shifted(const Rational& shift) const;
  PowerLogSum scaled(const Scalar& c) const;
  PowerLogSum to_mode(Mode mode) const;

  friend PowerLogSum operator+(const PowerLogSum& a, const PowerLogSum& b);
  friend PowerLogSum operator-(const PowerLogSum& a, const PowerLogSum& b);
  friend PowerLogSum operator*(const PowerLogSum& a, const PowerLogSum& b);

  std::string str() const;

 private:
  void normalize();

  Mode mode_;
  std::vector<PowerLogTerm> terms_;
};

/// Exact integral of x^e (ln x)^q over (0, 1]: (-1)^q q! / (e+1)^(q+1).
Scalar integrate_power_log(const Rational& exponent, unsigned log_power, Mode mode);

}  // namespace sobolev
