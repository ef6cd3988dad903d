#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "sigsurf/rational.hpp"

namespace sigsurf {

struct Monomial {
  std::uint32_t x = 0;  // exponent of x
  std::uint32_t y = 0;  // exponent of y

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Polynomial in Q[x, y]. Zero coefficients are never stored; the zero
// polynomial has no terms.
class BivariatePoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(const Rational& constant);

  static BivariatePoly var_x();
  static BivariatePoly var_y();
  static BivariatePoly monomial(const Rational& c, std::uint32_t i, std::uint32_t j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(std::uint32_t i, std::uint32_t j) const;

  // Adds c*x^i*y^j, dropping the term if it cancels.
  void add_term(const Rational& c, std::uint32_t i, std::uint32_t j);

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  BivariatePoly pow(std::uint32_t e) const;

  // Exchanges the roles of x and y.
  BivariatePoly swapped() const;

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace sigsurf
