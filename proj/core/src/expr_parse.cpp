#include <cctype>
#include <charconv>
#include <string>

#include "solvable/error.hpp"
#include "solvable/expr.hpp"

namespace solvable::ir {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (;;) {
      if (eat('+')) {
        lhs = lhs + parse_product();
      } else if (eat('-')) {
        lhs = lhs - parse_product();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      if (eat('*')) {
        lhs = lhs * parse_unary();
      } else if (eat('/')) {
        lhs = lhs / parse_unary();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (eat('^')) return pow(base, parse_exponent());
    return base;
  }

  // Decimal literal as an exact rational, e.g. "1.25" -> 5/4.
  Rational decimal_rational() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t num = 0, den = 1;
    bool digits = false, dot = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (num > 100000000000LL || den > 100000000000LL) throw SyntaxError("exponent literal too long", start);
        num = num * 10 + (c - '0');
        if (dot) den *= 10;
        digits = true;
        ++pos_;
      } else if (c == '.' && !dot) {
        dot = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (!digits) throw NonRationalExponent("exponent must be a rational literal (at position " +
                                           std::to_string(start) + ")");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E'))
      throw NonRationalExponent("scientific notation is not allowed in exponents");
    return Rational(num, den);
  }

  Rational parse_exponent() {
    skip_ws();
    if (eat('(')) {
      const bool neg = eat('-');
      Rational q = decimal_rational();
      if (eat('/')) {
        const Rational d = decimal_rational();
        if (d.num() == 0) throw SyntaxError("zero denominator in exponent", pos_);
        q = q / d;
      }
      if (!eat(')')) throw NonRationalExponent("exponent must be a rational literal (at position " +
                                                std::to_string(pos_) + ")");
      return neg ? -q : q;
    }
    const bool neg = eat('-');
    const Rational q = decimal_rational();
    return neg ? -q : q;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x" || name == "r" || name == "s") return Expr::var();
      expect('(');
      Expr a = parse_sum();
      expect(')');
      if (name == "exp") return exp(a);
      if (name == "sqrt") return sqrt(a);
      if (name == "log") return log(a);
      if (name == "sin") return sin(a);
      if (name == "cos") return cos(a);
      if (name == "sinh") return sinh(a);
      if (name == "cosh") return cosh(a);
      if (name == "atan") return atan(a);
      if (name == "asin") return asin(a);
      if (name == "acosh") return acosh(a);
      if (name == "asinh") return asinh(a);
      throw SyntaxError("unknown identifier '" + std::string(name) + "'", start);
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  Expr parse_number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc()) throw SyntaxError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return Expr::constant(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return simplify(Parser(text).parse_all()); }

}  // namespace solvable::ir
