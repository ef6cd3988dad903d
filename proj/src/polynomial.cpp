#include "sigsurf/polynomial.hpp"

#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

std::uint32_t add_exponents(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "polynomial exponent overflow");
  return r;
}

}  // namespace

BivariatePoly::BivariatePoly(const Rational& constant) { add_term(constant, 0, 0); }

BivariatePoly BivariatePoly::var_x() { return monomial(Rational(1), 1, 0); }

BivariatePoly BivariatePoly::var_y() { return monomial(Rational(1), 0, 1); }

BivariatePoly BivariatePoly::monomial(const Rational& c, std::uint32_t i, std::uint32_t j) {
  BivariatePoly p;
  p.add_term(c, i, j);
  return p;
}

Rational BivariatePoly::coefficient(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational() : it->second;
}

void BivariatePoly::add_term(const Rational& c, std::uint32_t i, std::uint32_t j) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(c, m.x, m.y);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(-c, m.x, m.y);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ca * cb, add_exponents(ma.x, mb.x), add_exponents(ma.y, mb.y));
    }
  }
  return r;
}

BivariatePoly BivariatePoly::pow(std::uint32_t e) const {
  BivariatePoly result(Rational(1));
  BivariatePoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BivariatePoly BivariatePoly::swapped() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.y, m.x}, c);
  return r;
}

std::string BivariatePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first reads most naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    std::string factors;
    auto append = [&](const char* v, std::uint32_t e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += v;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    append("x", m.x);
    append("y", m.y);
    if (factors.empty()) {
      out += mag.str();
    } else if (unit) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace sigsurf
