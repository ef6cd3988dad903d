#pragma once

#include <cstdint>
#include <stop_token>

namespace sigsurf {

// Exponents of x^c1 + y^c2 + z^c3, each >= 1. The product c1*c2*c3 is
// bounded so the common-denominator arithmetic stays within 64 bits.
struct BrieskornExponents {
  std::int64_t c1 = 1;
  std::int64_t c2 = 1;
  std::int64_t c3 = 1;

  BrieskornExponents() = default;
  BrieskornExponents(std::int64_t a, std::int64_t b, std::int64_t c);

  friend bool operator==(const BrieskornExponents&, const BrieskornExponents&) = default;
};

inline constexpr std::int64_t kMaxBrieskornProduct = std::int64_t{1} << 60;

// Lattice points (k1,k2,k3), 1 <= k_j <= c_j - 1, sorted by the open band
// (t, t+1) containing k1/c1 + k2/c2 + k3/c3; integral sums go to z_integer.
struct SCounts {
  std::int64_t s0 = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::int64_t z_integer = 0;

  std::int64_t total() const { return s0 + s1 + s2 + z_integer; }
  friend bool operator==(const SCounts&, const SCounts&) = default;
};

// Exhaustive triple loop, O(c1*c2*c3).
SCounts s_counts_naive(const BrieskornExponents& c, std::stop_token stop = {});

// Closed-form count over k3 for every (k1, k2), O(c1*c2). `threads` > 1
// splits the k1 range; the result does not depend on the split.
SCounts s_counts_fast(const BrieskornExponents& c, std::stop_token stop = {}, unsigned threads = 1);

// S_0 - S_1 + S_2.
std::int64_t brieskorn_signature(const BrieskornExponents& c, std::stop_token stop = {});

}  // namespace sigsurf
