#include "sobolev/sturm.hpp"

#include "sobolev/error.hpp"

namespace sobolev {

namespace {

void require_exact(const Polynomial& p) {
  if (p.mode() != Mode::Exact) throw ModeMismatch("Sturm certification needs an exact polynomial");
}

int sign_changes(const std::vector<Polynomial>& seq, const Scalar& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Removes every factor (x - c) from p.
Polynomial strip_root(Polynomial p, const Scalar& c) {
  const Polynomial factor({-c, Scalar::one(Mode::Exact)}, Mode::Exact);
  while (!p.is_zero() && p(c).is_zero()) p = divmod(p, factor).quotient;
  return p;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  require_exact(p);
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int count_roots_open(const Polynomial& p, const Scalar& lo, const Scalar& hi) {
  require_exact(p);
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (!(lo < hi)) return 0;
  // Sturm counts distinct roots in (lo, hi] when p(lo) != 0; strip endpoint roots first.
  const Polynomial q = strip_root(strip_root(p, lo), hi);
  if (q.degree() <= 0) return 0;
  const auto seq = sturm_sequence(q);
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

bool certify_positive_open(const Polynomial& p, const Scalar& lo, const Scalar& hi) {
  require_exact(p);
  if (p.is_zero()) return false;
  const Scalar mid = (lo + hi) / Scalar::exact(2);
  return count_roots_open(p, lo, hi) == 0 && p(mid).sign() > 0;
}

std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  require_exact(p);
  std::vector<Polynomial> factors;
  if (p.degree() <= 0) return factors;
  const Polynomial dp = p.derivative();
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = divmod(p, a0).quotient;
  Polynomial c = divmod(dp, a0).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    const Polynomial f = gcd(b, d);
    factors.push_back(f);
    b = divmod(b, f).quotient;
    c = divmod(d, f).quotient;
    d = c - b.derivative();
  }
  return factors;
}

bool certify_nonnegative(const Polynomial& p, const Scalar& lo, const Scalar& hi) {
  require_exact(p);
  if (p.is_zero()) return true;
  if (p.degree() == 0) return p.leading().sign() > 0;
  const auto factors = squarefree_factors(p);
  Polynomial odd = Polynomial::constant(Scalar::exact(1));
  for (std::size_t i = 0; i < factors.size(); i += 2) odd = odd * factors[i];
  if (odd.degree() > 0 && count_roots_open(odd, lo, hi) != 0) return false;
  // p keeps one sign on (lo, hi); probe points until one is not a root.
  const Scalar width = hi - lo;
  for (long den = 2; den < 2 + 2 * (p.degree() + 2); ++den) {
    const Scalar x = lo + width * Scalar::exact(1, den);
    const int s = p(x).sign();
    if (s != 0) return s > 0;
  }
  return false;
}

bool certify_positive_open(const PiecewisePolynomial& pp) {
  for (std::size_t i = 0; i < pp.piece_count(); ++i) {
    if (!certify_positive_open(pp.piece(i), pp.breaks()[i], pp.breaks()[i + 1])) return false;
    if (i > 0) {
      // Interior breakpoint: both one-sided values must be positive.
      if (pp.left_end_value(i).sign() <= 0 || pp.right_end_value(i - 1).sign() <= 0) return false;
    }
  }
  return true;
}

}  // namespace sobolev
