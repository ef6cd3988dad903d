#include <doctest.h>

#include "sigsurf/error.hpp"
#include "sigsurf/parser.hpp"

using namespace sigsurf;

namespace {

const char* kG1 =
    "x^15-21*x^14+8*x^13*y-6*x^13-16*x^12*y+20*x^11*y^2-x^12+8*x^11*y-36*x^10*y^2"
    "+24*x^9*y^3+4*x^9*y^2-16*x^8*y^3+26*x^7*y^4-6*x^6*y^4+8*x^5*y^5+4*x^3*y^6-y^8";

}  // namespace

TEST_CASE("parse simple polynomial") {
  BivariatePoly g = parse_polynomial("y^2 - x^3");
  CHECK(g.size() == 2);
  CHECK(g.coefficient(0, 2) == Rational(1));
  CHECK(g.coefficient(3, 0) == Rational(-1));
}

TEST_CASE("parse expands powers of sums") {
  BivariatePoly g = parse_polynomial("(y^2-x^3)^2");
  CHECK(g.size() == 3);
  CHECK(g.coefficient(0, 4) == Rational(1));
  CHECK(g.coefficient(3, 2) == Rational(-2));
  CHECK(g.coefficient(6, 0) == Rational(1));
}

TEST_CASE("parse the g1 fixture") {
  BivariatePoly g = parse_polynomial(kG1);
  CHECK(g.size() == 17);  // 17 distinct monomials as printed
  // -x^12 and -21*x^14 both survive; 8*x^13*y and 8*x^11*y are distinct terms.
  CHECK(g.coefficient(14, 0) == Rational(-21));
  CHECK(g.coefficient(12, 0) == Rational(-1));
  CHECK(g.coefficient(0, 8) == Rational(-1));
  CHECK(g.coefficient(11, 1) == Rational(8));
}

TEST_CASE("rational literals, unary minus, whitespace") {
  BivariatePoly g = parse_polynomial("  -1/2 * x ^ 2 + - ( 3/6*y ) ");
  CHECK(g.coefficient(2, 0) == Rational(-1, 2));
  CHECK(g.coefficient(0, 1) == Rational(-1, 2));
  CHECK(parse_polynomial("x - x").is_zero());
  CHECK(parse_polynomial("(x+y)^0") == BivariatePoly(Rational(1)));
}

TEST_CASE("syntax errors report their position") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_polynomial(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    return SIZE_MAX;
  };
  CHECK(column_of("2x") == 1);       // missing '*'
  CHECK(column_of("x^") == 2);       // missing exponent
  CHECK(column_of("x^-1") == 2);     // negative exponent
  CHECK(column_of("(x+y") == 4);     // unclosed
  CHECK(column_of("x y") == 2);      // juxtaposition
  CHECK(column_of("") == 0);
  CHECK(column_of("x + ") == 4);
  CHECK(column_of("1/0") == 2);
  CHECK(column_of("x^99999") == 2);
}

TEST_CASE("unsupported variables") {
  try {
    parse_polynomial("x^2 + z");
    FAIL("expected UnsupportedVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_variable);
  }
}

TEST_CASE("polynomial printing parses back") {
  BivariatePoly g = parse_polynomial(kG1);
  CHECK(parse_polynomial(g.str()) == g);
  BivariatePoly h = parse_polynomial("1/3*x*y - 2 + y^5");
  CHECK(parse_polynomial(h.str()) == h);
}
