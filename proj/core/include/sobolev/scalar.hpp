#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace sobolev {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Mode { Exact, Float };

std::string_view to_string(Mode mode);

/// Dual-mode real number: a canonical big rational or an IEEE double.
///
/// Binary operations require both operands to share a mode and throw
/// ModeMismatch otherwise. Exact values are always stored reduced with a
/// positive denominator.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(const Rational& q) : value_(q) { std::get<Rational>(value_).canonicalize(); }
  Scalar(Rational&& q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }

  static Scalar exact(long num, long den = 1);
  static Scalar exact(const Integer& num, const Integer& den);
  static Scalar real(double x) { return Scalar(FloatTag{}, x); }
  static Scalar integer(long n, Mode mode);
  static Scalar zero(Mode mode) { return integer(0, mode); }
  static Scalar one(Mode mode) { return integer(1, mode); }
  /// Parses "p", "p/q", "-p/q" or a decimal "1.25" (-> 5/4) exactly.
  static Scalar parse_rational(std::string_view text);

  Mode mode() const noexcept { return is_exact() ? Mode::Exact : Mode::Float; }
  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }

  /// Exact value; throws ModeMismatch for float scalars.
  const Rational& rational() const;
  double to_double() const;
  /// Exact -> Float is lossy but allowed; Float -> Exact throws ModeMismatch.
  Scalar to_mode(Mode mode) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  Scalar pow(unsigned exponent) const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// "p/q" (or "p") in exact mode, 17 significant digits in float mode.
  std::string str() const;

 private:
  struct FloatTag {};
  Scalar(FloatTag, double x) : value_(x) {}

  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

void require_same_mode(const Scalar& a, const Scalar& b);

/// n! as an exact integer.
Integer factorial(unsigned n);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double x);

/// Correctly rounded (nearest, ties to even) conversion of a rational.
double to_double_nearest(const Rational& q);

}  // namespace sobolev
