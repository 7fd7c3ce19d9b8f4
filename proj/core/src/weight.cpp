#include "sobolev/weight.hpp"

#include <cmath>

#include "sobolev/error.hpp"
#include "sobolev/sturm.hpp"

namespace sobolev {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Scalar& one() {
  static const Scalar value = Scalar::exact(1);
  return value;
}

void require_exact_data(const Scalar& s, const char* what) {
  if (!s.is_exact()) throw ModeMismatch(std::string(what) + " must be given exactly");
}

void require_nonnegative(const Polynomial& p, const Scalar& lo, const Scalar& hi) {
  const bool ok = p.mode() == Mode::Exact ? certify_nonnegative(p, lo, hi)
                                          : sampled_nonnegative(p, lo.to_double(), hi.to_double());
  if (!ok) {
    throw DomainError("weight polynomial " + p.str() + " is negative somewhere on [" + lo.str() + ", " +
                      hi.str() + "]");
  }
}

// prod_{i=1}^{n} (i - alpha)
Scalar shifted_product(const Scalar& alpha, int n) {
  Scalar p = Scalar::one(alpha.mode());
  for (int i = 1; i <= n; ++i) p *= Scalar::integer(i, alpha.mode()) - alpha;
  return p;
}

}  // namespace

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Poly: return "poly";
    case WeightKind::PiecewisePoly: return "pw";
    case WeightKind::Indicator: return "chi";
    case WeightKind::Dirac: return "dirac";
    case WeightKind::Power: return "pow";
    case WeightKind::Hardy: return "hardy";
  }
  return "?";
}

bool sampled_nonnegative(const Polynomial& p, double lo, double hi) {
  constexpr int kSamples = 1000;
  for (int i = 0; i <= kSamples; ++i) {
    const double x = lo + (hi - lo) * i / kSamples;
    if (p(x) < -1e-12) return false;
  }
  return true;
}

Weight Weight::poly(const Polynomial& p) {
  if (p.mode() != Mode::Exact) throw ModeMismatch("weights store exact polynomials");
  require_nonnegative(p, Scalar::exact(0), one());
  return Weight(PolyWeight{p}, one());
}

Weight Weight::piecewise(const PiecewisePolynomial& pp) {
  if (pp.mode() != Mode::Exact) throw ModeMismatch("weights store exact polynomials");
  for (std::size_t i = 0; i < pp.piece_count(); ++i) {
    require_nonnegative(pp.piece(i), pp.breaks()[i], pp.breaks()[i + 1]);
  }
  return Weight(PiecewiseWeight{pp}, one());
}

Weight Weight::indicator(const Scalar& a, const Scalar& b) {
  require_exact_data(a, "indicator endpoints");
  require_exact_data(b, "indicator endpoints");
  if (a.sign() < 0 || !(a < b) || one() < b) {
    throw DomainError("indicator needs 0 <= a < b <= 1, got [" + a.str() + ", " + b.str() + "]");
  }
  return Weight(IndicatorWeight{a, b}, one());
}

Weight Weight::dirac(const Scalar& a) {
  require_exact_data(a, "Dirac location");
  if (a.sign() <= 0 || !(a < one())) throw DomainError("Dirac location must lie in (0,1), got " + a.str());
  return Weight(DiracWeight{a}, one());
}

Weight Weight::power(const Scalar& alpha) {
  require_exact_data(alpha, "power exponent");
  if (alpha.sign() < 0 || !(alpha < one())) {
    throw DomainError("power weight x^-alpha needs 0 <= alpha < 1, got " + alpha.str());
  }
  return Weight(PowerWeight{alpha}, one());
}

Weight Weight::hardy(int order) {
  if (order != 1) throw DomainError("Hardy weight x^-k is only supported for k = 1");
  return Weight(HardyWeight{order}, one());
}

WeightKind Weight::kind() const { return static_cast<WeightKind>(data_.index()); }

bool Weight::outside_theorem_scope() const {
  return kind() == WeightKind::Dirac || kind() == WeightKind::Hardy;
}

bool Weight::is_piecewise_polynomial() const {
  const WeightKind k = kind();
  return k == WeightKind::Poly || k == WeightKind::PiecewisePoly || k == WeightKind::Indicator;
}

int Weight::polynomial_degree() const {
  if (kind() != WeightKind::Poly) return -1;
  return std::get<PolyWeight>(data_).p.degree();
}

Weight Weight::scaled(const Scalar& c) const {
  require_exact_data(c, "weight scale");
  if (c.sign() <= 0) throw DomainError("weights may only be scaled by positive factors");
  return std::visit(Overloaded{
                        [&](const PolyWeight& w) { return Weight(PolyWeight{w.p.scaled(c)}, one()); },
                        [&](const PiecewiseWeight& w) { return Weight(PiecewiseWeight{w.pp.scaled(c)}, one()); },
                        [&](const auto& w) { return Weight(w, scale_ * c); },
                    },
                    data_);
}

Weight Weight::reflected() const {
  const Scalar minus_one = -one();
  return std::visit(Overloaded{
                        [&](const PolyWeight& w) { return Weight(PolyWeight{w.p.compose_affine(minus_one, one())}, scale_); },
                        [&](const PiecewiseWeight& w) { return Weight(PiecewiseWeight{w.pp.reflected()}, scale_); },
                        [&](const IndicatorWeight& w) { return Weight(IndicatorWeight{one() - w.b, one() - w.a}, scale_); },
                        [&](const DiracWeight& w) { return Weight(DiracWeight{one() - w.a}, scale_); },
                        [&](const auto&) -> Weight {
                          throw UnsupportedWeight("reflection of singular weights is not representable");
                        },
                    },
                    data_);
}

PiecewisePolynomial Weight::as_piecewise(Mode mode) const {
  PiecewisePolynomial pp = std::visit(
      Overloaded{
          [](const PolyWeight& w) { return PiecewisePolynomial(w.p); },
          [](const PiecewiseWeight& w) { return w.pp; },
          [](const IndicatorWeight& w) {
            const Scalar height = one() / (w.b - w.a);
            std::vector<Scalar> breaks{Scalar::exact(0)};
            std::vector<Polynomial> pieces;
            if (w.a.sign() > 0) {
              breaks.push_back(w.a);
              pieces.push_back(Polynomial(Mode::Exact));
            }
            breaks.push_back(w.b);
            pieces.push_back(Polynomial::constant(height));
            if (w.b < one()) {
              breaks.push_back(one());
              pieces.push_back(Polynomial(Mode::Exact));
            }
            return PiecewisePolynomial(std::move(breaks), std::move(pieces));
          },
          [this](const auto&) -> PiecewisePolynomial {
            throw UnsupportedWeight(std::string(to_string(kind())) + " weight is not a piecewise polynomial");
          },
      },
      data_);
  if (scale_ != one()) pp = pp.scaled(scale_);
  return pp.to_mode(mode);
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.kind() != b.kind() || a.scale_ != b.scale_) return false;
  return std::visit(Overloaded{
                        [&](const PolyWeight& w) { return w.p == std::get<PolyWeight>(b.data_).p; },
                        [&](const PiecewiseWeight& w) { return w.pp == std::get<PiecewiseWeight>(b.data_).pp; },
                        [&](const IndicatorWeight& w) {
                          const auto& o = std::get<IndicatorWeight>(b.data_);
                          return w.a == o.a && w.b == o.b;
                        },
                        [&](const DiracWeight& w) { return w.a == std::get<DiracWeight>(b.data_).a; },
                        [&](const PowerWeight& w) { return w.alpha == std::get<PowerWeight>(b.data_).alpha; },
                        [&](const HardyWeight& w) { return w.order == std::get<HardyWeight>(b.data_).order; },
                    },
                    a.data_);
}

MomentVector moments(const Weight& rho, int k, Mode mode) {
  if (k < 1) throw DomainError("k must be at least 1");
  MomentVector out{k, {}};
  const Scalar sign = Scalar::integer(k % 2 == 1 ? 1 : -1, mode);  // (-1)^(k+1)
  const Scalar scale = rho.scale().to_mode(mode);
  for (int m = 0; m < k; ++m) {
    const unsigned n = static_cast<unsigned>(k + m);
    Scalar integral = std::visit(
        Overloaded{
            [&](const DiracWeight& w) { return scale * (Scalar::one(mode) - w.a.to_mode(mode)).pow(n); },
            [&](const PowerWeight& w) {
              // Beta(1 - alpha, n + 1) = n! / prod_{i=1}^{n+1} (i - alpha)
              const Scalar alpha = w.alpha.to_mode(mode);
              return scale * Scalar(Rational(factorial(n))).to_mode(mode) / shifted_product(alpha, n + 1);
            },
            [&](const HardyWeight&) -> Scalar {
              throw UnsupportedWeight("the Hardy weight has divergent moments; it has a dedicated closed form");
            },
            [&](const auto&) {
              const Polynomial kernel = Polynomial({Scalar::one(mode), -Scalar::one(mode)}, mode).pow(n);
              return (rho.as_piecewise(mode) * PiecewisePolynomial(kernel)).integrate();
            },
        },
        rho.data());
    out.b.push_back(sign * integral);
  }
  return out;
}

Profile iterated_integral(const Weight& rho, int k, Mode mode) {
  if (k < 1) throw DomainError("k must be at least 1");
  const Scalar scale = rho.scale().to_mode(mode);
  return std::visit(
      Overloaded{
          [&](const DiracWeight& w) -> Profile {
            // First integral of scale * delta(x - a) is a step at a.
            PiecewisePolynomial step({Scalar::zero(mode), w.a.to_mode(mode), Scalar::one(mode)},
                                     {Polynomial(mode), Polynomial::constant(scale)});
            for (int i = 1; i < k; ++i) step = step.cumulative_integral();
            return step;
          },
          [&](const PowerWeight& w) -> Profile {
            const Scalar alpha = w.alpha.to_mode(mode);
            return PowerLogSum::term(scale / shifted_product(alpha, k), Rational(k) - w.alpha.rational());
          },
          [&](const HardyWeight&) -> Profile {
            throw UnsupportedWeight("the Hardy weight has a divergent iterated integral at 0");
          },
          [&](const auto&) -> Profile {
            PiecewisePolynomial f = rho.as_piecewise(mode);
            for (int i = 0; i < k; ++i) f = f.cumulative_integral();
            return f;
          },
      },
      rho.data());
}

double eval_weight(const Weight& rho, double x) {
  const double scale = rho.scale().to_double();
  return std::visit(Overloaded{
                        [&](const DiracWeight&) -> double {
                          throw UnsupportedWeight("a Dirac mass has no pointwise values");
                        },
                        [&](const PowerWeight& w) { return scale * std::pow(x, -w.alpha.to_double()); },
                        [&](const HardyWeight& w) { return scale * std::pow(x, -static_cast<double>(w.order)); },
                        [&](const auto&) { return rho.as_piecewise(Mode::Float)(x); },
                    },
                    rho.data());
}

Scalar integrate_against(const Weight& rho, const Profile& f) {
  const Mode mode = profile_mode(f);
  const Scalar scale = rho.scale().to_mode(mode);
  return std::visit(
      Overloaded{
          [&](const DiracWeight& w) -> Scalar {
            if (const auto* pp = std::get_if<PiecewisePolynomial>(&f)) return scale * (*pp)(w.a.to_mode(mode));
            return Scalar::real(scale.to_double() * evaluate(f, w.a.to_double()));
          },
          [&](const PowerWeight& w) -> Scalar {
            const PowerLogSum g = std::holds_alternative<PowerLogSum>(f)
                                      ? std::get<PowerLogSum>(f)
                                      : std::get<PowerLogSum>(multiply(f, PowerLogSum::term(Scalar::one(mode), 0)));
            return scale * g.shifted(-w.alpha.rational()).integrate();
          },
          [&](const HardyWeight& w) -> Scalar {
            const PowerLogSum g = std::holds_alternative<PowerLogSum>(f)
                                      ? std::get<PowerLogSum>(f)
                                      : std::get<PowerLogSum>(multiply(f, PowerLogSum::term(Scalar::one(mode), 0)));
            return scale * g.shifted(Rational(-w.order)).integrate();
          },
          [&](const auto&) -> Scalar { return integrate(multiply(rho.as_piecewise(mode), f)); },
      },
      rho.data());
}

}  // namespace sobolev
