#pragma once

#include <cstdint>
#include <stop_token>

#include "sigsurf/rational.hpp"
#include "sigsurf/resolution_graph.hpp"

namespace sigsurf {

// The two gcd sums of the eta formula:
//   edge_sum   = sum over edges e of (gcd(K, m_e) - 1), m_e = gcd of endpoint multiplicities
//   vertex_sum = sum over divisors w of (gcd(K, M_w) - 1), M_w = gcd of m over w and its neighbours
struct GcdSums {
  std::int64_t edge_sum = 0;
  std::int64_t vertex_sum = 0;
};

GcdSums gcd_sums(const ResolutionGraph& g, std::int64_t k);

// eta(g, K) = #arrowheads - 1 + edge_sum - vertex_sum
//           + 4 * sum_{w of degree >= 3} sum_{v ~ w} sum_{k=1}^{m_w} ((k m_v / m_w)) ((k K / m_w))
Rational eta_resolution(const ResolutionGraph& g, std::int64_t k, std::stop_token stop = {});

// eta(g, N) - N * eta(g, 1); throws Errc::non_integer_signature on inconsistent graphs.
std::int64_t signature_resolution(const ResolutionGraph& g, std::int64_t n, std::stop_token stop = {});

// True iff edge_sum == vertex_sum at K (always the case for one branch).
bool irreducible_identity_check(const ResolutionGraph& g, std::int64_t k);

}  // namespace sigsurf
