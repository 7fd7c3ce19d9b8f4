#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sobolev/piecewise.hpp"
#include "sobolev/polynomial.hpp"
#include "sobolev/profile.hpp"
#include "sobolev/scalar.hpp"

namespace sobolev {

enum class WeightKind { Poly, PiecewisePoly, Indicator, Dirac, Power, Hardy };

std::string_view to_string(WeightKind kind);

struct PolyWeight {
  Polynomial p;
};
struct PiecewiseWeight {
  PiecewisePolynomial pp;
};
/// chi_[a,b] / (b - a).
struct IndicatorWeight {
  Scalar a, b;
};
/// delta(x - a).
struct DiracWeight {
  Scalar a;
};
/// x^(-alpha), 0 <= alpha < 1.
struct PowerWeight {
  Scalar alpha;
};
/// x^(-order); only order 1 is supported.
struct HardyWeight {
  int order = 1;
};

/// The weight rho on [0,1], always stored with exact data.
///
/// Polynomial data are checked non-negative on their intervals when the
/// weight is built. Non-polynomial kinds carry a positive `scale` factor so
/// that c * rho stays representable (c * delta(x - a), c * x^-alpha, ...).
class Weight {
 public:
  using Data = std::variant<PolyWeight, PiecewiseWeight, IndicatorWeight, DiracWeight, PowerWeight, HardyWeight>;

  /// The uniform weight rho = 1.
  Weight() : Weight(PolyWeight{Polynomial::constant(Scalar::exact(1))}, Scalar::exact(1)) {}

  static Weight poly(const Polynomial& p);
  static Weight piecewise(const PiecewisePolynomial& pp);
  static Weight indicator(const Scalar& a, const Scalar& b);
  static Weight dirac(const Scalar& a);
  static Weight power(const Scalar& alpha);
  static Weight hardy(int order);

  WeightKind kind() const;
  const Data& data() const noexcept { return data_; }
  const Scalar& scale() const noexcept { return scale_; }

  /// Dirac (a measure) and Hardy (not integrable) lie outside the L^1 setting.
  bool outside_theorem_scope() const;
  bool has_exact_moments() const { return kind() != WeightKind::Hardy; }
  /// Poly, PiecewisePoly or Indicator: rho itself is a piecewise polynomial.
  bool is_piecewise_polynomial() const;
  /// Degree of a single-piece polynomial weight, -1 otherwise.
  int polynomial_degree() const;

  /// c * rho for c > 0.
  Weight scaled(const Scalar& c) const;
  /// rho(1 - x). Throws UnsupportedWeight for Power and Hardy.
  Weight reflected() const;

  /// rho as a piecewise polynomial (scale applied); Poly/PiecewisePoly/Indicator only.
  PiecewisePolynomial as_piecewise(Mode mode = Mode::Exact) const;

  /// DSL text that parses back to an equal weight.
  std::string format() const;

  friend bool operator==(const Weight& a, const Weight& b);

 private:
  Weight(Data data, Scalar scale) : data_(std::move(data)), scale_(std::move(scale)) {}

  Data data_;
  Scalar scale_;
};

/// Parses the weight DSL, e.g. "poly:1 - 2*x + x^2", "pw:[0,1/2]=1;[1/2,1]=x",
/// "chi:1/4,3/4", "dirac:0.3", "pow:1/2", "hardy:1", optionally prefixed by a
/// positive factor "3/2*". Throws SyntaxError (with position) or DomainError.
Weight parse_weight(std::string_view spec);

/// Parses a polynomial expression over x; offsets in errors are shifted by `base`.
Polynomial parse_polynomial(std::string_view text, std::size_t base = 0);

/// Right-hand side of the seed system: b[m] = (-1)^(k+1) int_0^1 (1-t)^(k+m) rho(t) dt.
struct MomentVector {
  int k = 0;
  std::vector<Scalar> b;
};

/// Exact for every kind but Hardy (UnsupportedWeight); float mode converts first.
MomentVector moments(const Weight& rho, int k, Mode mode = Mode::Exact);

/// I(x) = int_0^x (x-t)^(k-1)/(k-1)! rho(t) dt. Piecewise polynomial for
/// Poly/PiecewisePoly/Indicator/Dirac, power-log sum for Power.
Profile iterated_integral(const Weight& rho, int k, Mode mode = Mode::Exact);

/// Pointwise rho(x); UnsupportedWeight for Dirac.
double eval_weight(const Weight& rho, double x);

/// int_0^1 f rho dx (Dirac: f(a), times scale).
Scalar integrate_against(const Weight& rho, const Profile& f);

/// Non-negativity of a float-mode polynomial on [lo, hi] by 10^3-point sampling.
bool sampled_nonnegative(const Polynomial& p, double lo, double hi);

}  // namespace sobolev
