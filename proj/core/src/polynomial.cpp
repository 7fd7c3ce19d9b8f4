#include "sobolev/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "sobolev/error.hpp"

namespace sobolev {

Polynomial::Polynomial(std::vector<Scalar> coeffs, Mode mode)
    : mode_(mode), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.mode() != mode_) throw ModeMismatch("polynomial coefficient mode differs from polynomial");
  }
  normalize();
}

Polynomial::Polynomial(std::vector<Scalar> coeffs)
    : Polynomial(coeffs, coeffs.empty() ? Mode::Exact : coeffs.front().mode()) {}

Polynomial Polynomial::exact(std::initializer_list<std::pair<long, long>> coeffs) {
  std::vector<Scalar> c;
  for (auto [num, den] : coeffs) c.push_back(Scalar::exact(num, den));
  return Polynomial(std::move(c), Mode::Exact);
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}, c.mode()); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.mode()));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs), c.mode());
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  approx_.resize(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), approx_.begin(),
                 [](const Scalar& s) { return s.to_double(); });
}

Scalar Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(mode_);
}

Scalar Polynomial::leading() const {
  if (coeffs_.empty()) return Scalar::zero(mode_);
  return coeffs_.back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  if (x.mode() != mode_) throw ModeMismatch("evaluation point mode differs from polynomial");
  Scalar acc = Scalar::zero(mode_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
  if (order == 0) return *this;
  if (coeffs_.size() <= order) return Polynomial(mode_);
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    Scalar c = coeffs_[i];
    for (std::size_t j = 0; j < order; ++j) c *= Scalar::integer(static_cast<long>(i - j), mode_);
    out.push_back(std::move(c));
  }
  return Polynomial(std::move(out), mode_);
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return *this;
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() + 1);
  out.push_back(Scalar::zero(mode_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] / Scalar::integer(static_cast<long>(i + 1), mode_));
  }
  return Polynomial(std::move(out), mode_);
}

Polynomial Polynomial::compose_affine(const Scalar& a, const Scalar& b) const {
  require_same_mode(a, b);
  if (a.mode() != mode_) throw ModeMismatch("affine map mode differs from polynomial");
  // Horner in the polynomial ring: ((c_n) * (a x + b) + c_{n-1}) * ...
  const Polynomial inner({b, a}, mode_);
  Polynomial acc(mode_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Scalar Polynomial::integrate(const Scalar& from, const Scalar& to) const {
  const Polynomial anti = antiderivative();
  return anti(to) - anti(from);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.mode() != mode_) throw ModeMismatch("scale factor mode differs from polynomial");
  std::vector<Scalar> out(coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out), mode_);
}

Polynomial Polynomial::to_mode(Mode mode) const {
  if (mode == mode_) return *this;
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_mode(mode));
  return Polynomial(std::move(out), mode);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.mode_ != mode_) throw ModeMismatch("adding polynomials of different modes");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(mode_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.mode_ != mode_) throw ModeMismatch("subtracting polynomials of different modes");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(mode_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.mode_ != rhs.mode_) throw ModeMismatch("multiplying polynomials of different modes");
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.mode_);
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(lhs.mode_));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out), lhs.mode_);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Scalar::one(mode_));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.mode_ == rhs.mode_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].str() << ")";
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

PolyDivision divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.mode() != den.mode()) throw ModeMismatch("dividing polynomials of different modes");
  const Mode mode = num.mode();
  std::vector<Scalar> rem = num.coeffs();
  const int dn = den.degree();
  if (num.degree() < dn) return {Polynomial(mode), num};
  std::vector<Scalar> quot(num.degree() - dn + 1, Scalar::zero(mode));
  const Scalar lead = den.leading();
  for (int i = num.degree() - dn; i >= 0; --i) {
    Scalar factor = rem[i + dn] / lead;
    quot[i] = factor;
    for (int j = 0; j <= dn; ++j) rem[i + j] -= factor * den.coeffs()[j];
    rem[i + dn] = Scalar::zero(mode);
  }
  return {Polynomial(std::move(quot), mode), Polynomial(std::move(rem), mode)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Scalar::one(x.mode()) / x.leading());
}

}  // namespace sobolev
