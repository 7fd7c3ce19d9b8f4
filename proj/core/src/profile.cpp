#include "sobolev/profile.hpp"

#include "sobolev/error.hpp"

namespace sobolev {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

PowerLogSum as_power_log(const PiecewisePolynomial& pp) {
  if (pp.piece_count() != 1) throw DomainError("cannot mix a multi-piece polynomial with a power-log sum");
  return PowerLogSum::from_polynomial(pp.piece(0));
}

}  // namespace

Mode profile_mode(const Profile& f) {
  return std::visit([](const auto& g) { return g.mode(); }, f);
}

double evaluate(const Profile& f, double x) {
  return std::visit([x](const auto& g) { return g(x); }, f);
}

Profile derivative(const Profile& f, unsigned order) {
  return std::visit([order](const auto& g) -> Profile { return g.derivative(order); }, f);
}

Profile cumulative_integral(const Profile& f) {
  return std::visit(Overloaded{
                        [](const PiecewisePolynomial& g) -> Profile { return g.cumulative_integral(); },
                        [](const PowerLogSum& g) -> Profile { return g.antiderivative(); },
                    },
                    f);
}

Scalar integrate(const Profile& f) {
  return std::visit([](const auto& g) { return g.integrate(); }, f);
}

Profile scaled(const Profile& f, const Scalar& c) {
  return std::visit([&c](const auto& g) -> Profile { return g.scaled(c); }, f);
}

Profile add_polynomial(const Profile& f, const Polynomial& p) {
  return std::visit(Overloaded{
                        [&p](const PiecewisePolynomial& g) -> Profile { return g + PiecewisePolynomial(p); },
                        [&p](const PowerLogSum& g) -> Profile { return g + PowerLogSum::from_polynomial(p); },
                    },
                    f);
}

Profile multiply(const Profile& f, const Profile& g) {
  if (std::holds_alternative<PiecewisePolynomial>(f) && std::holds_alternative<PiecewisePolynomial>(g)) {
    return std::get<PiecewisePolynomial>(f) * std::get<PiecewisePolynomial>(g);
  }
  auto lift = [](const Profile& h) {
    return std::visit(Overloaded{
                          [](const PiecewisePolynomial& p) { return as_power_log(p); },
                          [](const PowerLogSum& s) { return s; },
                      },
                      h);
  };
  return lift(f) * lift(g);
}

Scalar value_at_one(const Profile& f, unsigned derivative) {
  return std::visit(Overloaded{
                        [derivative](const PiecewisePolynomial& g) {
                          return g.right_end_value(g.piece_count() - 1, derivative);
                        },
                        [derivative](const PowerLogSum& g) {
                          // ln 1 = 0, x^e = 1: only log-free terms survive.
                          Scalar total = Scalar::zero(g.mode());
                          const PowerLogSum d = g.derivative(derivative);
                          for (const auto& t : d.terms()) {
                            if (t.log_power == 0) total += t.coeff;
                          }
                          return total;
                        },
                    },
                    f);
}

Scalar value_at_zero(const Profile& f, unsigned derivative) {
  return std::visit(Overloaded{
                        [derivative](const PiecewisePolynomial& g) { return g.left_end_value(0, derivative); },
                        [derivative](const PowerLogSum& g) {
                          Scalar total = Scalar::zero(g.mode());
                          const PowerLogSum d = g.derivative(derivative);
                          for (const auto& t : d.terms()) {
                            if (sgn(t.exponent) < 0 || (sgn(t.exponent) == 0 && t.log_power > 0)) {
                              throw DomainError("profile is unbounded at 0");
                            }
                            if (sgn(t.exponent) == 0) total += t.coeff;
                          }
                          return total;
                        },
                    },
                    f);
}

}  // namespace sobolev
