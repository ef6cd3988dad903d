#pragma once

#include <cstdint>
#include <stop_token>
#include <vector>

#include "sigsurf/brieskorn.hpp"
#include "sigsurf/curve_invariants.hpp"

namespace sigsurf {

// Decomposition of sigma(z^N + g) for an irreducible g into Brieskorn
// signatures: sigma = sum_i d_i * sigma(x^{a_i} + y^{n_i} + z^{N/d_i}).
struct ReductionPlan {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> d;
  std::vector<BrieskornExponents> summands;
};

// a_1 = m_1, a_{i+1} = m_{i+1} - n_{i+1} (m_i - n_i a_i);
// d_l = 1, d_i = gcd(N, n_{i+1} ... n_l).
ReductionPlan reduction_plan(const PuiseuxPairs& p, std::int64_t n);

std::int64_t signature_puiseux(const PuiseuxPairs& p, std::int64_t n, std::stop_token stop = {});

}  // namespace sigsurf
