#include "sobolev/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sobolev/error.hpp"

namespace sobolev {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Scalar> breaks, std::vector<Polynomial> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || breaks_.size() != pieces_.size() + 1) {
    throw DomainError("piecewise polynomial needs one more breakpoint than pieces");
  }
  const Mode m = pieces_.front().mode();
  for (const auto& p : pieces_) {
    if (p.mode() != m) throw ModeMismatch("piecewise polynomial pieces of mixed modes");
  }
  for (const auto& b : breaks_) {
    if (b.mode() != m) throw ModeMismatch("breakpoint mode differs from pieces");
  }
  if (!breaks_.front().is_zero() || breaks_.back() != Scalar::one(m)) {
    throw DomainError("breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i - 1] < breaks_[i])) throw DomainError("breakpoints must increase strictly");
  }
}

PiecewisePolynomial::PiecewisePolynomial(const Polynomial& p)
    : PiecewisePolynomial({Scalar::zero(p.mode()), Scalar::one(p.mode())}, {p}) {}

int PiecewisePolynomial::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

std::size_t PiecewisePolynomial::locate(double x) const {
  std::size_t i = 0;
  while (i + 1 < pieces_.size() && breaks_[i + 1].to_double() <= x) ++i;
  return i;
}

std::size_t PiecewisePolynomial::locate(const Scalar& x) const {
  std::size_t i = 0;
  while (i + 1 < pieces_.size() && breaks_[i + 1] <= x) ++i;
  return i;
}

Scalar PiecewisePolynomial::operator()(const Scalar& x) const { return pieces_[locate(x)](x); }

double PiecewisePolynomial::operator()(double x) const { return pieces_[locate(x)](x); }

Scalar PiecewisePolynomial::left_end_value(std::size_t i, unsigned derivative) const {
  return pieces_.at(i).derivative(derivative)(breaks_[i]);
}

Scalar PiecewisePolynomial::right_end_value(std::size_t i, unsigned derivative) const {
  return pieces_.at(i).derivative(derivative)(breaks_[i + 1]);
}

Scalar PiecewisePolynomial::jump(std::size_t i, unsigned order) const {
  if (i == 0 || i >= pieces_.size()) throw DomainError("jump requested at a non-interior breakpoint");
  return left_end_value(i, order) - right_end_value(i - 1, order);
}

bool PiecewisePolynomial::is_continuous(unsigned order, double tol) const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    for (unsigned d = 0; d <= order; ++d) {
      const Scalar j = jump(i, d);
      if (j.is_exact() ? !j.is_zero() : std::abs(j.to_double()) > tol) return false;
    }
  }
  return true;
}

PiecewisePolynomial PiecewisePolynomial::derivative(unsigned order) const {
  std::vector<Polynomial> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.derivative(order));
  return {breaks_, std::move(out)};
}

PiecewisePolynomial PiecewisePolynomial::cumulative_integral() const {
  std::vector<Polynomial> out;
  out.reserve(pieces_.size());
  Scalar running = Scalar::zero(mode());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Polynomial anti = pieces_[i].antiderivative();
    // F on piece i is running + anti(x) - anti(b_i).
    out.push_back(anti + Polynomial::constant(running - anti(breaks_[i])));
    running = out.back()(breaks_[i + 1]);
  }
  return {breaks_, std::move(out)};
}

Scalar PiecewisePolynomial::integrate() const {
  Scalar total = Scalar::zero(mode());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    total += pieces_[i].integrate(breaks_[i], breaks_[i + 1]);
  }
  return total;
}

Scalar PiecewisePolynomial::integrate(const Scalar& from, const Scalar& to) const {
  if (to < from) return -integrate(to, from);
  Scalar total = Scalar::zero(mode());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Scalar lo = std::max(from, breaks_[i], [](const Scalar& a, const Scalar& b) { return a < b; });
    const Scalar hi = std::min(to, breaks_[i + 1], [](const Scalar& a, const Scalar& b) { return a < b; });
    if (lo < hi) total += pieces_[i].integrate(lo, hi);
  }
  return total;
}

std::vector<Scalar> merge_breaks(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  return out;
}

PiecewisePolynomial PiecewisePolynomial::refined(const std::vector<Scalar>& extra_breaks) const {
  std::vector<Scalar> breaks = merge_breaks(breaks_, extra_breaks);
  std::vector<Polynomial> out;
  out.reserve(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) out.push_back(pieces_[locate(breaks[i])]);
  return {std::move(breaks), std::move(out)};
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Scalar& c) const {
  std::vector<Polynomial> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.scaled(c));
  return {breaks_, std::move(out)};
}

PiecewisePolynomial PiecewisePolynomial::reflected() const {
  const Mode m = mode();
  const Scalar one = Scalar::one(m);
  std::vector<Scalar> breaks;
  std::vector<Polynomial> out;
  for (auto it = breaks_.rbegin(); it != breaks_.rend(); ++it) breaks.push_back(one - *it);
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) out.push_back(it->compose_affine(-one, one));
  return {std::move(breaks), std::move(out)};
}

PiecewisePolynomial PiecewisePolynomial::to_mode(Mode m) const {
  std::vector<Scalar> breaks;
  std::vector<Polynomial> out;
  for (const auto& b : breaks_) breaks.push_back(b.to_mode(m));
  for (const auto& p : pieces_) out.push_back(p.to_mode(m));
  return {std::move(breaks), std::move(out)};
}

namespace {

template <typename Op>
PiecewisePolynomial combine(const PiecewisePolynomial& a, const PiecewisePolynomial& b, Op op) {
  if (a.mode() != b.mode()) throw ModeMismatch("combining piecewise polynomials of different modes");
  std::vector<Scalar> breaks = merge_breaks(a.breaks(), b.breaks());
  std::vector<Polynomial> out;
  out.reserve(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    out.push_back(op(a.piece(a.locate(breaks[i])), b.piece(b.locate(breaks[i]))));
  }
  return {std::move(breaks), std::move(out)};
}

}  // namespace

PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, [](const Polynomial& p, const Polynomial& q) { return p + q; });
}

PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, [](const Polynomial& p, const Polynomial& q) { return p - q; });
}

PiecewisePolynomial operator*(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return combine(a, b, [](const Polynomial& p, const Polynomial& q) { return p * q; });
}

bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return a.breaks_ == b.breaks_ && a.pieces_ == b.pieces_;
}

std::string PiecewisePolynomial::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << "; ";
    os << "[" << breaks_[i].str() << "," << breaks_[i + 1].str() << "]=" << pieces_[i].str();
  }
  return os.str();
}

}  // namespace sobolev
