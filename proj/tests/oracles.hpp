#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the engine code paths it is compared against.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "sigsurf/curve_invariants.hpp"
#include "sigsurf/newton_puiseux.hpp"
#include "sigsurf/polynomial.hpp"
#include "sigsurf/rational.hpp"
#include "sigsurf/resolution_graph.hpp"

namespace oracle {

using sigsurf::Rational;

// Direct evaluation of the resolution eta formula with rational sawtooth
// values, k running 1..m_w inclusive.
inline Rational eta_resolution_reference(const sigsurf::ResolutionGraph& g, std::int64_t k) {
  const std::size_t n = g.vertex_count();
  Rational eta(static_cast<std::int64_t>(g.arrowheads().size()) - 1);
  for (const auto& [u, v] : g.dense_edges()) {
    eta += Rational(std::gcd(k, std::gcd(g.multiplicity(u), g.multiplicity(v))) - 1);
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (g.is_arrowhead(w)) continue;
    std::int64_t big_m = g.multiplicity(w);
    for (std::size_t v : g.neighbors(w)) big_m = std::gcd(big_m, g.multiplicity(v));
    eta -= Rational(std::gcd(k, big_m) - 1);
    if (g.neighbors(w).size() <= 2) continue;
    const std::int64_t mw = g.multiplicity(w);
    for (std::size_t v : g.neighbors(w)) {
      for (std::int64_t j = 1; j <= mw; ++j) {
        eta += Rational(4) * sigsurf::sawtooth(Rational(j * g.multiplicity(v), mw)) *
               sigsurf::sawtooth(Rational(j * k, mw));
      }
    }
  }
  return eta;
}

// Brieskorn lattice counts by rational classification of every triple.
struct Counts {
  std::int64_t s[3] = {0, 0, 0};
  std::int64_t integral = 0;
};

inline Counts brieskorn_counts_rational(std::int64_t c1, std::int64_t c2, std::int64_t c3) {
  Counts out;
  for (std::int64_t a = 1; a < c1; ++a)
    for (std::int64_t b = 1; b < c2; ++b)
      for (std::int64_t c = 1; c < c3; ++c) {
        Rational sum = Rational(a, c1) + Rational(b, c2) + Rational(c, c3);
        if (sum.is_integer()) {
          ++out.integral;
        } else {
          ++out.s[sum.floor().get_si()];
        }
      }
  return out;
}

inline std::int64_t brieskorn_signature_rational(std::int64_t c1, std::int64_t c2, std::int64_t c3) {
  Counts c = brieskorn_counts_rational(c1, c2, c3);
  return c.s[0] - c.s[1] + c.s[2];
}

// Univariate polynomial in t as exponent -> coefficient.
using Series = std::map<std::uint64_t, Rational>;

inline Series series_mul(const Series& a, const Series& b) {
  Series r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      r[ea + eb] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

inline Series series_pow(const Series& a, std::uint32_t e) {
  Series r{{0, Rational(1)}};
  for (std::uint32_t i = 0; i < e; ++i) r = series_mul(r, a);
  return r;
}

// g(x(t), y(t)) for polynomial x(t), y(t).
inline Series substitute(const sigsurf::BivariatePoly& g, const Series& x, const Series& y) {
  Series r;
  for (const auto& [m, c] : g.terms()) {
    Series term = series_mul(series_pow(x, m.x), series_pow(y, m.y));
    for (const auto& [e, v] : term) r[e] += c * v;
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

// Plugs a branch expansion back into g (undoing the variable swap).
inline Series substitute_expansion(const sigsurf::BivariatePoly& g, const sigsurf::BranchExpansion& b) {
  Series x{{b.ramification, Rational(1)}};
  Series y;
  for (const auto& t : b.terms) y[t.exponent] += t.coefficient;
  return b.swapped ? substitute(g, y, x) : substitute(g, x, y);
}

inline std::uint64_t lowest_monomial_order(const sigsurf::BivariatePoly& g, const sigsurf::BranchExpansion& b) {
  std::uint64_t ord_y = b.terms.empty() ? 0 : b.terms.front().exponent;
  std::uint64_t ord_x = b.ramification;
  if (b.swapped) std::swap(ord_x, ord_y);
  std::uint64_t best = UINT64_MAX;
  for (const auto& [m, c] : g.terms()) best = std::min(best, m.x * ord_x + m.y * ord_y);
  return best;
}

// Random valid Puiseux pairs with n_i <= max_n and m_l <= max_last_m.
template <typename Rng>
sigsurf::PuiseuxPairs random_pairs(Rng& rng, std::int64_t max_last_m, std::int64_t max_n, std::size_t max_len = 4) {
  std::uniform_int_distribution<std::int64_t> n_dist(2, max_n);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  for (;;) {
    const std::size_t len = len_dist(rng);
    std::vector<sigsurf::PuiseuxPair> pairs;
    std::int64_t prev_m = 0;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      const std::int64_t n = n_dist(rng);
      const std::int64_t lo = i == 0 ? n + 1 : n * prev_m + 1;
      if (lo > max_last_m) {
        ok = false;
        break;
      }
      std::uniform_int_distribution<std::int64_t> m_dist(lo, std::min(max_last_m, lo + 3 * n * std::max<std::int64_t>(prev_m, 1)));
      std::int64_t m = m_dist(rng);
      while (std::gcd(m, n) != 1) ++m;
      if (m > max_last_m) {
        ok = false;
        break;
      }
      pairs.push_back({m, n});
      prev_m = m;
    }
    if (ok) return sigsurf::PuiseuxPairs(std::move(pairs));
  }
}

}  // namespace oracle
