#pragma once

#include <vector>

#include "sobolev/piecewise.hpp"
#include "sobolev/polynomial.hpp"

namespace sobolev {

/// Sturm sequence p, p', -rem(p, p'), ... (exact mode).
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Exact mode only; p must not be identically zero.
int count_roots_open(const Polynomial& p, const Scalar& lo, const Scalar& hi);

/// Proves p > 0 on (lo, hi): no roots inside and positive at the midpoint.
bool certify_positive_open(const Polynomial& p, const Scalar& lo, const Scalar& hi);

/// Proves p >= 0 on [lo, hi]: the odd-multiplicity part of p (Yun's
/// square-free factorization) has no roots in (lo, hi) and p is positive at a
/// point where it does not vanish. The zero polynomial counts as non-negative.
bool certify_nonnegative(const Polynomial& p, const Scalar& lo, const Scalar& hi);

/// Square-free factors f_1, f_2, ... with p = c * prod f_i^i.
std::vector<Polynomial> squarefree_factors(const Polynomial& p);

/// Positivity of a piecewise polynomial on (0,1): every piece positive on
/// its open interval and every interior breakpoint value positive.
bool certify_positive_open(const PiecewisePolynomial& pp);

}  // namespace sobolev
