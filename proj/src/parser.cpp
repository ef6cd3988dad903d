#include "sigsurf/parser.hpp"

#include <cctype>
#include <string>

#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivariatePoly parse() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    BivariatePoly result = expr();
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivariatePoly expr() {
    BivariatePoly lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs += term();
      } else if (accept('-')) {
        lhs -= term();
      } else {
        return lhs;
      }
    }
  }

  BivariatePoly term() {
    BivariatePoly lhs = factor();
    while (accept('*')) lhs = lhs * factor();
    return lhs;
  }

  BivariatePoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  BivariatePoly power() {
    BivariatePoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.empty()) throw SyntaxError(start, "expected a nonnegative integer exponent after '^'");
    if (digits.size() > 9 || std::stoul(digits) > kMaxParsedExponent) {
      throw SyntaxError(start, "exponent " + digits + " is too large");
    }
    return base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
  }

  BivariatePoly primary() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BivariatePoly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      if (name == "x") return BivariatePoly::var_x();
      if (name == "y") return BivariatePoly::var_y();
      throw Error(Errc::unsupported_variable,
                  "unsupported variable '" + name + "' at column " + std::to_string(start + 1) +
                      " (only x and y are allowed)");
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  BivariatePoly number() {
    std::string num = read_digits();
    std::string den = "1";
    std::size_t den_start = pos_;
    if (!at_end() && text_[pos_] == '/') {
      den_start = ++pos_;
      den = read_digits();
      if (den.empty()) throw SyntaxError(den_start, "expected denominator after '/'");
    }
    Integer d(den, 10);
    if (d == 0) throw SyntaxError(den_start, "zero denominator");
    Rational value(Integer(num, 10), d);
    if (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(pos_, "missing '*' between factors");
    }
    return BivariatePoly(value);
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace sigsurf
