#include "sobolev/power_log_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sobolev/error.hpp"

namespace sobolev {

namespace {

Scalar as_scalar(const Rational& q, Mode mode) { return Scalar(q).to_mode(mode); }

}  // namespace

PowerLogSum::PowerLogSum(std::vector<PowerLogTerm> terms, Mode mode) : mode_(mode), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.coeff.mode() != mode_) throw ModeMismatch("power-log term mode differs from sum");
  }
  normalize();
}

PowerLogSum PowerLogSum::from_polynomial(const Polynomial& p) {
  std::vector<PowerLogTerm> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    terms.push_back({p.coeffs()[i], Rational(static_cast<long>(i)), 0});
  }
  return PowerLogSum(std::move(terms), p.mode());
}

PowerLogSum PowerLogSum::term(const Scalar& coeff, const Rational& exponent, unsigned log_power) {
  return PowerLogSum({{coeff, exponent, log_power}}, coeff.mode());
}

void PowerLogSum::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const PowerLogTerm& a, const PowerLogTerm& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.log_power < b.log_power;
  });
  std::vector<PowerLogTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent && merged.back().log_power == t.log_power) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const PowerLogTerm& t) { return t.coeff.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

double PowerLogSum::operator()(double x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    const double c = t.coeff.to_double();
    const double e = to_double_nearest(t.exponent);
    if (x == 0.0) {
      if (sgn(t.exponent) > 0) continue;
      if (sgn(t.exponent) == 0 && t.log_power == 0) {
        sum += c;
        continue;
      }
      // x^e (ln x)^q diverges with the sign of (-1)^q when e <= 0.
      const double s = t.log_power % 2 == 1 ? -1.0 : 1.0;
      sum += (c > 0 ? s : -s) * std::numeric_limits<double>::infinity();
      continue;
    }
    double v = c * std::pow(x, e);
    if (t.log_power > 0) v *= std::pow(std::log(x), static_cast<double>(t.log_power));
    sum += v;
  }
  return sum;
}

PowerLogSum PowerLogSum::derivative(unsigned order) const {
  PowerLogSum current = *this;
  for (unsigned o = 0; o < order; ++o) {
    std::vector<PowerLogTerm> out;
    for (const auto& t : current.terms_) {
      const Rational shifted = t.exponent - 1;
      // d/dx x^e L^q = e x^(e-1) L^q + q x^(e-1) L^(q-1)
      if (sgn(t.exponent) != 0) out.push_back({t.coeff * as_scalar(t.exponent, mode_), shifted, t.log_power});
      if (t.log_power > 0) {
        out.push_back({t.coeff * Scalar::integer(t.log_power, mode_), shifted, t.log_power - 1});
      }
    }
    current = PowerLogSum(std::move(out), mode_);
  }
  return current;
}

PowerLogSum PowerLogSum::antiderivative() const {
  std::vector<PowerLogTerm> out;
  for (const auto& t : terms_) {
    if (t.exponent <= -1) throw DomainError("antiderivative of x^e with e <= -1 is not finite at 0");
    // int_0^x t^e L^q = x^(e+1) L^q/(e+1) - q/(e+1) int_0^x t^e L^(q-1)
    const Rational e1 = t.exponent + 1;
    Scalar c = t.coeff;
    for (unsigned q = t.log_power + 1; q-- > 0;) {
      out.push_back({c / as_scalar(e1, mode_), e1, q});
      c = -c * Scalar::integer(q, mode_) / as_scalar(e1, mode_);
      if (q == 0) break;
    }
  }
  return PowerLogSum(std::move(out), mode_);
}

Scalar integrate_power_log(const Rational& exponent, unsigned log_power, Mode mode) {
  if (exponent <= -1) throw DomainError("integral of x^e over (0,1] diverges for e <= -1");
  const Rational e1 = exponent + 1;
  Integer den_num, den_den;
  mpz_pow_ui(den_num.get_mpz_t(), e1.get_num_mpz_t(), log_power + 1);
  mpz_pow_ui(den_den.get_mpz_t(), e1.get_den_mpz_t(), log_power + 1);
  Rational value(factorial(log_power) * den_den, den_num);
  value.canonicalize();
  if (log_power % 2 == 1) value = -value;
  return as_scalar(value, mode);
}

Scalar PowerLogSum::integrate() const {
  Scalar total = Scalar::zero(mode_);
  for (const auto& t : terms_) total += t.coeff * integrate_power_log(t.exponent, t.log_power, mode_);
  return total;
}

PowerLogSum PowerLogSum::shifted(const Rational& shift) const {
  std::vector<PowerLogTerm> out = terms_;
  for (auto& t : out) t.exponent += shift;
  return PowerLogSum(std::move(out), mode_);
}

PowerLogSum PowerLogSum::scaled(const Scalar& c) const {
  std::vector<PowerLogTerm> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return PowerLogSum(std::move(out), mode_);
}

PowerLogSum PowerLogSum::to_mode(Mode mode) const {
  std::vector<PowerLogTerm> out = terms_;
  for (auto& t : out) t.coeff = t.coeff.to_mode(mode);
  return PowerLogSum(std::move(out), mode);
}

PowerLogSum operator+(const PowerLogSum& a, const PowerLogSum& b) {
  if (a.mode_ != b.mode_) throw ModeMismatch("adding power-log sums of different modes");
  std::vector<PowerLogTerm> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return PowerLogSum(std::move(out), a.mode_);
}

PowerLogSum operator-(const PowerLogSum& a, const PowerLogSum& b) {
  return a + b.scaled(-Scalar::one(b.mode()));
}

PowerLogSum operator*(const PowerLogSum& a, const PowerLogSum& b) {
  if (a.mode_ != b.mode_) throw ModeMismatch("multiplying power-log sums of different modes");
  std::vector<PowerLogTerm> out;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back({s.coeff * t.coeff, s.exponent + t.exponent, s.log_power + t.log_power});
    }
  }
  return PowerLogSum(std::move(out), a.mode_);
}

std::string PowerLogSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].coeff.str() << ")*x^(" << terms_[i].exponent.get_str() << ")";
    if (terms_[i].log_power == 1) os << "*ln(x)";
    if (terms_[i].log_power > 1) os << "*ln(x)^" << terms_[i].log_power;
  }
  return os.str();
}

}  // namespace sobolev
