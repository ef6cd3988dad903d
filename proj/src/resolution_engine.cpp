#include "sigsurf/resolution_engine.hpp"

#include "sigsurf/cancel.hpp"
#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

void require_positive(std::int64_t k) {
  if (k < 1) throw Error(Errc::invalid_argument, "eta needs K >= 1");
}

// 4 m^2 * sum_{k=1}^{m} ((k a / m)) ((k b / m)), exact.
__int128 scaled_dedekind_sum(std::int64_t a, std::int64_t b, std::int64_t m) {
  const std::int64_t ar = a % m;
  const std::int64_t br = b % m;
  __int128 acc = 0;
  for (std::int64_t k = 1; k < m; ++k) {
    acc += static_cast<__int128>(sawtooth_scaled(k * ar, m)) * sawtooth_scaled(k * br, m);
  }
  return acc;
}

Integer to_integer(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

}  // namespace

GcdSums gcd_sums(const ResolutionGraph& g, std::int64_t k) {
  require_positive(k);
  GcdSums s;
  for (const auto& [u, v] : g.dense_edges()) {
    s.edge_sum += gcd(k, gcd(g.multiplicity(u), g.multiplicity(v))) - 1;
  }
  for (std::size_t w = 0; w < g.exceptional_count(); ++w) {
    std::int64_t mw = g.multiplicity(w);
    for (std::size_t v : g.neighbors(w)) mw = gcd(mw, g.multiplicity(v));
    s.vertex_sum += gcd(k, mw) - 1;
  }
  return s;
}

Rational eta_resolution(const ResolutionGraph& g, std::int64_t k, std::stop_token stop) {
  require_positive(k);
  const GcdSums sums = gcd_sums(g, k);
  Rational eta(static_cast<std::int64_t>(g.arrowheads().size()) - 1 + sums.edge_sum - sums.vertex_sum);

  for (std::size_t w = 0; w < g.exceptional_count(); ++w) {
    if (g.neighbors(w).size() < 3) continue;
    throw_if_cancelled(stop);
    const std::int64_t mw = g.multiplicity(w);
    // The k = m_w term vanishes: both sawtooth arguments are integers there.
    __int128 acc = 0;
    for (std::size_t v : g.neighbors(w)) acc += scaled_dedekind_sum(g.multiplicity(v), k % mw, mw);
    // 4 * acc / (4 m_w^2)
    eta += Rational(to_integer(acc), Integer(static_cast<long>(mw)) * Integer(static_cast<long>(mw)));
  }
  return eta;
}

std::int64_t signature_resolution(const ResolutionGraph& g, std::int64_t n, std::stop_token stop) {
  if (n < 2) throw Error(Errc::invalid_argument, "N must be >= 2");
  Rational eta_n = eta_resolution(g, n, stop);
  Rational eta_1 = eta_resolution(g, 1, stop);
  return signature_from_eta(eta_n, eta_1, n);
}

bool irreducible_identity_check(const ResolutionGraph& g, std::int64_t k) {
  const GcdSums s = gcd_sums(g, k);
  return s.edge_sum == s.vertex_sum;
}

}  // namespace sigsurf
