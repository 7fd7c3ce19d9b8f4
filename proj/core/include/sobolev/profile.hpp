#pragma once

#include <variant>

#include "sobolev/piecewise.hpp"
#include "sobolev/power_log_sum.hpp"

namespace sobolev {

/// A function on [0,1] as the pipeline represents it: piecewise polynomial
/// for regular and measure weights, power-log sum for singular weights.
using Profile = std::variant<PiecewisePolynomial, PowerLogSum>;

Mode profile_mode(const Profile& f);
double evaluate(const Profile& f, double x);
Profile derivative(const Profile& f, unsigned order = 1);
/// x -> integral_0^x f.
Profile cumulative_integral(const Profile& f);
Scalar integrate(const Profile& f);
Profile scaled(const Profile& f, const Scalar& c);
Profile add_polynomial(const Profile& f, const Polynomial& p);
Profile multiply(const Profile& f, const Profile& g);
/// Value or one-sided limit at 1 of the j-th derivative (piece on the left of 1).
Scalar value_at_one(const Profile& f, unsigned derivative = 0);
/// Value at 0 of the j-th derivative; float infinity is not representable exactly, so
/// power-log sums report their finite part only when every exponent is non-negative.
Scalar value_at_zero(const Profile& f, unsigned derivative = 0);

}  // namespace sobolev
