#include "sigsurf/newton_puiseux.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

constexpr int kMaxSteps = 4096;
constexpr std::size_t kMaxTerms = 1U << 20;

[[noreturn]] void reducible(const std::string& why) {
  throw Error(Errc::reducible_curve,
              "curve has more than one branch at the origin (" + why +
                  "); supply a resolution graph file instead");
}

// The exact rational q-th root of v, if there is one.
std::optional<Rational> rational_root(const Rational& v, std::uint64_t q) {
  if (q == 1) return v;
  bool negative = v.sign() < 0;
  if (negative && q % 2 == 0) return std::nullopt;
  Integer num = negative ? Integer(-v.num()) : v.num();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), q) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), v.den().get_mpz_t(), q) == 0) return std::nullopt;
  Rational r(rn, rd);
  return negative ? -r : r;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rational_pow(const Rational& base, std::uint64_t e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

std::uint32_t narrow(std::uint64_t v) {
  if (v > std::numeric_limits<std::uint32_t>::max()) throw Error(Errc::overflow, "polynomial degree overflow");
  return static_cast<std::uint32_t>(v);
}

// G(x^q, x^p * (c + y)) / x^shift.
BivariatePoly substitute(const BivariatePoly& g, std::uint64_t p, std::uint64_t q, const Rational& c,
                         std::uint64_t shift) {
  BivariatePoly out;
  for (const auto& [mono, coef] : g.terms()) {
    std::uint64_t xexp = q * mono.x + p * mono.y - shift;
    // (c + y)^j = sum_k C(j,k) c^(j-k) y^k
    for (std::uint64_t k = 0; k <= mono.y; ++k) {
      Rational term = coef * Rational(binomial(mono.y, k)) * rational_pow(c, mono.y - k);
      out.add_term(term, narrow(xexp), narrow(k));
    }
    if (out.size() > kMaxTerms) throw Error(Errc::overflow, "Newton-Puiseux expansion grew too large");
  }
  return out;
}

struct Axes {
  std::optional<std::uint64_t> height;  // min j with a pure y^j term
  std::optional<std::uint64_t> width;   // min i with a pure x^i term
};

Axes axes_of(const BivariatePoly& g) {
  Axes a;
  for (const auto& [m, c] : g.terms()) {
    if (m.x == 0 && (!a.height || m.y < *a.height)) a.height = m.y;
    if (m.y == 0 && (!a.width || m.x < *a.width)) a.width = m.x;
  }
  return a;
}

}  // namespace

BranchExpansion newton_puiseux_lite(const BivariatePoly& g) {
  if (g.is_zero()) throw Error(Errc::invalid_argument, "zero polynomial does not define a curve");
  if (!g.coefficient(0, 0).is_zero()) {
    throw Error(Errc::invalid_argument, "curve does not pass through the origin (g(0,0) != 0)");
  }

  BranchExpansion out;
  std::uint32_t order = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [m, c] : g.terms()) order = std::min(order, m.x + m.y);
  if (order == 1) return out;

  Axes axes = axes_of(g);
  if (!axes.height) reducible("x divides g");
  if (!axes.width) reducible("y divides g");

  BivariatePoly cur = g;
  // The branch must be expanded in the variable transversal to its tangent.
  if (*axes.width < *axes.height) {
    out.swapped = true;
    cur = g.swapped();
  }

  // y = sum of found terms + x_k^shift * y_k with x_k = x^(1/ramification).
  std::uint64_t shift = 0;
  std::uint64_t ramification = 1;
  struct RawTerm {
    Rational c;
    std::uint64_t s, q;
  };
  std::vector<RawTerm> raw;
  std::vector<PuiseuxPair> pairs;

  for (int step = 0;; ++step) {
    if (step >= kMaxSteps) throw Error(Errc::overflow, "Newton-Puiseux expansion did not terminate");
    Axes ax = axes_of(cur);
    const std::uint64_t height = *ax.height;
    if (height <= 1) break;
    if (!ax.width) reducible("repeated branch");
    const std::uint64_t width = *ax.width;

    // Single edge from (0, height) to (width, 0): every term on or above it.
    std::map<std::uint64_t, Rational> edge;  // y-exponent -> coefficient
    for (const auto& [m, c] : cur.terms()) {
      std::uint64_t weight = static_cast<std::uint64_t>(m.x) * height + static_cast<std::uint64_t>(m.y) * width;
      if (weight < width * height) reducible("Newton polygon has several edges");
      if (weight == width * height) edge.emplace(m.y, c);
    }

    const std::uint64_t g0 = std::gcd(width, height);
    const std::uint64_t p = width / g0;
    const std::uint64_t q = height / g0;
    const std::uint64_t r = height / q;

    // Edge polynomial must be lead * (c^q - lambda)^r.
    const Rational lead = edge.at(height);
    auto coef_at = [&](std::uint64_t j) {
      auto it = edge.find(j);
      return it == edge.end() ? Rational() : it->second;
    };
    const Rational lambda = -coef_at(height - q) / (lead * Rational(static_cast<std::int64_t>(r)));
    for (std::uint64_t k = 0; k <= r; ++k) {
      Rational expected = lead * Rational(binomial(r, k)) * rational_pow(-lambda, k);
      if (coef_at(height - q * k) != expected) reducible("edge equation has distinct roots");
    }
    if (edge.size() != r + 1 || lambda.is_zero()) reducible("edge equation has distinct roots");

    std::optional<Rational> root = rational_root(lambda, q);
    if (!root) {
      throw Error(Errc::field_extension_required,
                  "edge equation c^" + std::to_string(q) + " = " + lambda.str() +
                      " has no rational root; a field extension of Q is required. Supply the Puiseux pairs "
                      "(--pairs) or a resolution graph (--graph) instead");
    }
    // Prefer the positive root when two exist.
    Rational c = *root;
    if (q % 2 == 0 && c.sign() < 0) c = -c;

    shift = q * shift + p;
    ramification *= q;
    raw.push_back({c, shift, ramification});
    if (q > 1) pairs.push_back({static_cast<std::int64_t>(shift), static_cast<std::int64_t>(q)});

    cur = substitute(cur, p, q, c, q * width);
  }

  out.ramification = ramification;
  for (const auto& t : raw) out.terms.push_back({t.c, t.s * (ramification / t.q)});
  out.pairs = PuiseuxPairs(std::move(pairs));
  return out;
}

PuiseuxPairs puiseux_pairs_lite(const BivariatePoly& g) { return newton_puiseux_lite(g).pairs; }

}  // namespace sigsurf
