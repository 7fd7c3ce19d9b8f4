#include <cctype>
#include <optional>
#include <sstream>

#include "sobolev/error.hpp"
#include "sobolev/weight.hpp"

namespace sobolev {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// Recursive-descent parser for polynomial expressions over x.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number | 'x' | '(' expr ')'
///
/// Division is only allowed by nonzero constants, which is how "1/4" parses.
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, base_ + pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Polynomial den = unary();
        if (den.degree() != 0) {
          pos_ = at;
          fail("division is only allowed by nonzero constants");
        }
        acc = acc.scaled(Scalar::exact(1) / den.leading());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 3) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return Polynomial::identity(Mode::Exact);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      try {
        return Polynomial::constant(Scalar::parse_rational(text_.substr(start, pos_ - start)));
      } catch (const SyntaxError&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Scalar parse_number(std::string_view text, std::size_t base) {
  std::size_t offset = base;
  const std::string_view t = trim(text, offset);
  if (t.empty()) throw SyntaxError("expected a number", offset);
  try {
    return Scalar::parse_rational(t);
  } catch (const SyntaxError& e) {
    throw SyntaxError("malformed number '" + std::string(t) + "'", offset + e.position());
  }
}

PiecewisePolynomial parse_pieces(std::string_view payload, std::size_t base) {
  const Scalar zero = Scalar::exact(0);
  const Scalar one = Scalar::exact(1);
  std::vector<Scalar> breaks{zero};
  std::vector<Polynomial> pieces;
  std::size_t start = 0;
  while (start <= payload.size()) {
    std::size_t end = payload.find(';', start);
    if (end == std::string_view::npos) end = payload.size();
    std::size_t offset = base + start;
    const std::string_view piece = trim(payload.substr(start, end - start), offset);
    if (piece.empty() || piece.front() != '[') throw SyntaxError("expected '[' to open a piece", offset);
    const std::size_t close = piece.find(']');
    const std::size_t comma = piece.find(',');
    if (close == std::string_view::npos || comma == std::string_view::npos || comma > close) {
      throw SyntaxError("piece interval must look like [a,b]", offset);
    }
    const Scalar lo = parse_number(piece.substr(1, comma - 1), offset + 1);
    const Scalar hi = parse_number(piece.substr(comma + 1, close - comma - 1), offset + comma + 1);
    std::size_t eq_offset = offset + close + 1;
    const std::string_view rest = trim(piece.substr(close + 1), eq_offset);
    if (rest.empty() || rest.front() != '=') throw SyntaxError("expected '=' after piece interval", eq_offset);
    const Polynomial p = parse_polynomial(rest.substr(1), eq_offset + 1);
    if (!(lo < hi)) throw DomainError("piece [" + lo.str() + "," + hi.str() + "] is empty or reversed");
    if (lo < breaks.back()) throw DomainError("pieces must be listed in order without overlap");
    if (hi > one || lo.sign() < 0) throw DomainError("pieces must lie inside [0,1]");
    if (breaks.back() < lo) {
      // Gap: rho vanishes there.
      pieces.push_back(Polynomial(Mode::Exact));
      breaks.push_back(lo);
    }
    pieces.push_back(p);
    breaks.push_back(hi);
    start = end + 1;
  }
  if (breaks.back() < one) {
    pieces.push_back(Polynomial(Mode::Exact));
    breaks.push_back(one);
  }
  return PiecewisePolynomial(std::move(breaks), std::move(pieces));
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Scalar& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    const Scalar mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Scalar::exact(1);
    if (i == 0 || !unit) os << mag.str();
    if (i >= 1) os << (unit ? "" : "*") << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t base) { return PolyParser(text, base).parse(); }

Weight parse_weight(std::string_view spec) {
  std::size_t offset = 0;
  const std::string_view s = trim(spec, offset);
  if (s.empty()) throw SyntaxError("empty weight specification", 0);
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos) throw SyntaxError("expected '<kind>:<payload>'", offset + s.size());

  std::string_view head = s.substr(0, colon);
  std::optional<Scalar> factor;
  if (const std::size_t star = head.rfind('*'); star != std::string_view::npos) {
    factor = parse_number(head.substr(0, star), offset);
    if (factor->sign() <= 0) throw DomainError("weight factor must be positive");
    head = head.substr(star + 1);
  }
  std::size_t kind_offset = offset + (s.substr(0, colon).size() - head.size());
  const std::string_view kind = trim(head, kind_offset);
  const std::string_view payload = s.substr(colon + 1);
  const std::size_t payload_offset = offset + colon + 1;

  Weight w = [&]() -> Weight {
    if (kind == "poly") return Weight::poly(parse_polynomial(payload, payload_offset));
    if (kind == "pw") return Weight::piecewise(parse_pieces(payload, payload_offset));
    if (kind == "chi") {
      const std::size_t comma = payload.find(',');
      if (comma == std::string_view::npos) throw SyntaxError("chi payload must be 'a,b'", payload_offset);
      return Weight::indicator(parse_number(payload.substr(0, comma), payload_offset),
                               parse_number(payload.substr(comma + 1), payload_offset + comma + 1));
    }
    if (kind == "dirac") return Weight::dirac(parse_number(payload, payload_offset));
    if (kind == "pow") return Weight::power(parse_number(payload, payload_offset));
    if (kind == "hardy") {
      const Scalar order = parse_number(payload, payload_offset);
      if (order != Scalar::exact(1)) throw DomainError("hardy payload only accepts 1 (rho = 1/x with k = 1)");
      return Weight::hardy(1);
    }
    throw SyntaxError("unknown weight kind '" + std::string(kind) + "' (expected poly, pw, chi, dirac, pow, hardy)",
                      kind_offset);
  }();
  return factor ? w.scaled(*factor) : w;
}

std::string Weight::format() const {
  std::string body = std::visit(
      Overloaded{
          [](const PolyWeight& w) { return "poly:" + format_polynomial(w.p); },
          [](const PiecewiseWeight& w) {
            std::string out = "pw:";
            for (std::size_t i = 0; i < w.pp.piece_count(); ++i) {
              if (i) out += ";";
              out += "[" + w.pp.breaks()[i].str() + "," + w.pp.breaks()[i + 1].str() + "]=" +
                     format_polynomial(w.pp.piece(i));
            }
            return out;
          },
          [](const IndicatorWeight& w) { return "chi:" + w.a.str() + "," + w.b.str(); },
          [](const DiracWeight& w) { return "dirac:" + w.a.str(); },
          [](const PowerWeight& w) { return "pow:" + w.alpha.str(); },
          [](const HardyWeight& w) { return "hardy:" + std::to_string(w.order); },
      },
      data_);
  if (scale_ != Scalar::exact(1)) body = scale_.str() + "*" + body;
  return body;
}

}  // namespace sobolev
