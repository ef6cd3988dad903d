#include "sigsurf/rational.hpp"

#include <cctype>
#include <limits>

#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unsupported_variable: return "UnsupportedVariable";
    case Errc::field_extension_required: return "FieldExtensionRequired";
    case Errc::reducible_curve: return "ReducibleCurve";
    case Errc::smooth_branch: return "SmoothBranch";
    case Errc::invalid_pairs: return "InvalidPairs";
    case Errc::invalid_exponents: return "InvalidExponents";
    case Errc::invalid_sequence: return "InvalidSequence";
    case Errc::invalid_graph: return "InvalidGraph";
    case Errc::invalid_spectrum: return "InvalidSpectrum";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::overflow: return "Overflow";
    case Errc::io_error: return "IoError";
    case Errc::non_integer_signature: return "NonIntegerSignature";
    case Errc::no_applicable_engine: return "NoApplicableEngine";
    case Errc::all_engines_failed: return "AllEnginesFailed";
    case Errc::consensus_failure: return "ConsensusFailure";
    case Errc::cancelled: return "Cancelled";
  }
  return "Unknown";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::syntax_error:
    case Errc::unsupported_variable:
    case Errc::invalid_pairs:
    case Errc::invalid_exponents:
    case Errc::invalid_sequence:
    case Errc::invalid_graph:
    case Errc::invalid_spectrum:
    case Errc::io_error:
      return true;
    default:
      return false;
  }
}

Rational::Rational(std::int64_t n) : q_(static_cast<long>(n)) {}

Rational::Rational(const Integer& n) : q_(n) {}

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw Error(Errc::invalid_argument, "rational with zero denominator");
  q_.get_num() = n;
  q_.get_den() = d;
  q_.canonicalize();
}

Rational::Rational(std::int64_t n, std::int64_t d)
    : Rational(Integer(static_cast<long>(n)), Integer(static_cast<long>(d))) {}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num)) {
    throw Error(Errc::invalid_argument, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  if (negative) n = -n;
  Integer d = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) {
      throw Error(Errc::invalid_argument, "malformed rational '" + std::string(text) + "'");
    }
    d = Integer(std::string(den), 10);
  }
  return Rational(n, d);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational();
  return frac(x) - Rational(1, 2);
}

std::int64_t sawtooth_scaled(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r == 0) return 0;
  if (r < 0) r += den;
  return 2 * r - den;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw Error(Errc::invalid_argument, "gcd of negative integer");
  if (a == 0 && b == 0) throw Error(Errc::invalid_argument, "gcd(0, 0) is undefined");
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "64-bit integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "64-bit integer overflow");
  return r;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw Error(Errc::overflow, "integer " + value.get_str() + " exceeds 64 bits");
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return value.get_si();
}

std::int64_t signature_from_eta(const Rational& eta_n, const Rational& eta_1, std::int64_t n) {
  Rational sigma = eta_n - Rational(n) * eta_1;
  if (!sigma.is_integer()) {
    throw Error(Errc::non_integer_signature,
                "eta(g,N) - N*eta(g,1) = " + sigma.str() + " is not an integer; input data is inconsistent");
  }
  return to_int64(sigma.num());
}

}  // namespace sigsurf
