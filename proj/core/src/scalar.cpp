#include "sobolev/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "sobolev/error.hpp"

namespace sobolev {

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

void require_same_mode(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) {
    throw ModeMismatch("mixed exact/float arithmetic (" + std::string(to_string(a.mode())) +
                       " vs " + std::string(to_string(b.mode())) + ")");
  }
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::exact(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::integer(long n, Mode mode) {
  return mode == Mode::Exact ? Scalar(Rational(n)) : real(static_cast<double>(n));
}

Scalar Scalar::parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw SyntaxError("empty number", 0);
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw SyntaxError("expected digits in '" + s + "'", from);
    for (std::size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') throw SyntaxError("unexpected character in '" + s + "'", i);
    }
    return Integer(s.substr(from, to - from));
  };
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = digits(pos, slash);
    Integer den = digits(slash + 1, s.size());
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    Integer whole = dot > pos ? digits(pos, dot) : Integer(0);
    if (dot + 1 >= s.size() && dot == pos) throw SyntaxError("bare '.' in number", dot);
    Integer frac = dot + 1 < s.size() ? digits(dot + 1, s.size()) : Integer(0);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(digits(pos, s.size()));
  }
  value.canonicalize();
  return Scalar(negative ? Rational(-value) : value);
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw ModeMismatch("exact value requested from a float scalar");
  return std::get<Rational>(value_);
}

double to_double_nearest(const Rational& q) {
  if (sgn(q) == 0) return 0.0;
  const Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  // Scale so the integer quotient carries 55 or 56 bits, then round half to even.
  const long shift = 55 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  Integer n = num, d = den;
  if (shift >= 0) mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), shift);
  else mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), -shift);
  Integer quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const long extra = static_cast<long>(mpz_sizeinbase(quo.get_mpz_t(), 2)) - 53;
  Integer kept, dropped;
  mpz_tdiv_q_2exp(kept.get_mpz_t(), quo.get_mpz_t(), extra);
  mpz_tdiv_r_2exp(dropped.get_mpz_t(), quo.get_mpz_t(), extra);
  const Integer half = Integer(1) << (extra - 1);
  const bool above = dropped > half || (dropped == half && sgn(rem) != 0);
  const bool tie = dropped == half && sgn(rem) == 0;
  if (above || (tie && mpz_odd_p(kept.get_mpz_t()))) ++kept;
  const double magnitude = std::ldexp(kept.get_d(), static_cast<int>(extra - shift));
  return sgn(q) < 0 ? -magnitude : magnitude;
}

double Scalar::to_double() const {
  if (is_exact()) return to_double_nearest(std::get<Rational>(value_));
  return std::get<double>(value_);
}

Scalar Scalar::to_mode(Mode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == Mode::Float) return real(to_double());
  throw ModeMismatch("cannot convert a float scalar to exact mode");
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(value_));
  double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(*this, rhs);
  if (is_exact()) {
    std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(*this, rhs);
  if (is_exact()) {
    std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(*this, rhs);
  if (is_exact()) {
    std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(*this, rhs);
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (is_exact()) {
    std::get<Rational>(value_) /= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return real(-std::get<double>(value_));
}

Scalar Scalar::pow(unsigned exponent) const {
  if (is_exact()) {
    const Rational& q = std::get<Rational>(value_);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), exponent);
    return Scalar(Rational(num, den));
  }
  return real(std::pow(std::get<double>(value_), static_cast<double>(exponent)));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  require_same_mode(lhs, rhs);
  if (lhs.is_exact()) return std::get<Rational>(lhs.value_) == std::get<Rational>(rhs.value_);
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  require_same_mode(lhs, rhs);
  if (lhs.is_exact()) {
    int c = cmp(std::get<Rational>(lhs.value_), std::get<Rational>(rhs.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return std::get<double>(lhs.value_) <=> std::get<double>(rhs.value_);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Rational>(value_).get_str();
  return format_double(std::get<double>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace sobolev
