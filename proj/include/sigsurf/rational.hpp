#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sigsurf {

using Integer = mpz_class;

// Exact rational number, always stored reduced with a positive denominator.
// Zero is 0/1. Values are immutable once built and safe to share between
// threads for reading.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& n);
  Rational(const Integer& n, const Integer& d);
  Rational(std::int64_t n, std::int64_t d);

  // Accepts "p", "-p", "p/q" (q != 0, optional sign on p only).
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(q_); }

  // Largest integer <= *this.
  Integer floor() const;

  // "p/q", or "p" when q == 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

// Fractional part {x} in [0, 1).
Rational frac(const Rational& x);

// ((x)) = {x} - 1/2 for non-integral x, 0 for integral x.
Rational sawtooth(const Rational& x);

// 2*den*((num/den)) as an exact integer; den > 0. The hot loops of the eta
// computations accumulate these instead of allocating rationals.
std::int64_t sawtooth_scaled(std::int64_t num, std::int64_t den);

// gcd(a, 0) = a; both zero is rejected.
std::int64_t gcd(std::int64_t a, std::int64_t b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Converts an Integer known to fit into 64 bits; throws Errc::overflow otherwise.
std::int64_t to_int64(const Integer& value);

// eta(N) - N * eta(1), which must be integral for consistent input.
std::int64_t signature_from_eta(const Rational& eta_n, const Rational& eta_1, std::int64_t n);

}  // namespace sigsurf
