#include <cctype>

#include "padic/error.hpp"
#include "padic/poly.hpp"

namespace padic {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<BigInt>& p_value, std::size_t degree_cap)
      : text_(text), p_value_(p_value), cap_(degree_cap) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    Polynomial result = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'p' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = scale(acc, BigRational(-1));
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Polynomial t = term();
      acc = c == '+' ? add(acc, t) : sub(acc, t);
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!starts_primary(c)) {
        break;
      }
      Polynomial rhs = factor();
      check_degree(acc, rhs);
      acc = mul(acc, rhs);
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const unsigned long exponent = exponent_literal();
    if (!base.is_zero() && *base.degree() > 0 && exponent > cap_ / *base.degree()) {
      throw ParseError(pos_, "power exceeds the degree cap");
    }
    return pow(base, exponent);
  }

  Polynomial primary() {
    const char c = peek();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return Polynomial::x();
    }
    if (c == 'p') {
      if (!p_value_) throw ParseError(pos_, "symbol 'p' used without a prime");
      ++pos_;
      return Polynomial::constant(BigRational(*p_value_));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = digits();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError(pos_, "expected denominator");
        }
        BigInt den = digits();
        if (den == 0) throw ParseError(den_pos, "zero denominator");
        return Polynomial::constant(BigRational(num, den));
      }
      return Polynomial::constant(BigRational(num));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned long exponent_literal() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, "expected a nonnegative integer exponent");
    }
    const std::size_t start = pos_;
    BigInt e = digits();
    if (!e.fits_ulong_p() || e.get_ui() > cap_) throw ParseError(start, "exponent too large");
    return e.get_ui();
  }

  void check_degree(const Polynomial& a, const Polynomial& b) const {
    if (a.is_zero() || b.is_zero()) return;
    if (*a.degree() + *b.degree() > cap_) throw ParseError(pos_, "product exceeds the degree cap");
  }

  std::string_view text_;
  const std::optional<BigInt>& p_value_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::optional<BigInt>& p_value,
                            std::size_t degree_cap) {
  return Parser(text, p_value, degree_cap).parse();
}

}  // namespace padic
