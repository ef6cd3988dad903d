#pragma once

#include <cstdint>
#include <stop_token>
#include <vector>

#include "sigsurf/rational.hpp"

namespace sigsurf {

struct SpectralEntry {
  Rational alpha;
  int w = 1;
  std::int64_t h = 1;

  friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};

// Spectral pairs (alpha, w) with multiplicities h. Entries with equal
// (alpha, w) are merged on construction and kept sorted by (alpha, w).
// Requires alpha in (-1, 1), w in {0, 1, 2}, h >= 1 and a symmetric
// spectrum: total multiplicity at alpha equals that at -alpha.
class SpectralPairs {
 public:
  SpectralPairs() = default;
  explicit SpectralPairs(std::vector<SpectralEntry> entries);

  const std::vector<SpectralEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool has_weight_two() const;
  std::int64_t total_multiplicity() const;

  friend bool operator==(const SpectralPairs&, const SpectralPairs&) = default;

 private:
  std::vector<SpectralEntry> entries_;
};

// eta(g, K) = sum_{w = 2, alpha != 0, K alpha in Z} h
//           + 2 * sum_{alpha >= 0, K alpha not in Z} h * (1 - 2 {K alpha})
//
// The second sum is oriented so that the cusp spectrum {+-1/6} gives
// eta(1) = 4/3, eta(2) = 2/3, matching the resolution-graph formula.
Rational eta_spectral(const SpectralPairs& s, std::int64_t k, std::stop_token stop = {});

std::int64_t signature_spectral(const SpectralPairs& s, std::int64_t n, std::stop_token stop = {});

// Spectral pairs of x^a + y^b for coprime a, b >= 2:
// alpha = i/a + j/b - 1 with weight 1, 1 <= i < a, 1 <= j < b.
SpectralPairs brieskorn_curve_spectral_pairs(std::int64_t a, std::int64_t b);

}  // namespace sigsurf
