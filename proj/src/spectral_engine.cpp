#include "sigsurf/spectral_engine.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "sigsurf/cancel.hpp"
#include "sigsurf/error.hpp"

namespace sigsurf {

SpectralPairs::SpectralPairs(std::vector<SpectralEntry> entries) {
  std::map<std::pair<Rational, int>, std::int64_t> merged;
  for (const auto& e : entries) {
    if (e.alpha <= Rational(-1) || e.alpha >= Rational(1)) {
      throw Error(Errc::invalid_spectrum, "spectral number " + e.alpha.str() + " is outside (-1, 1)");
    }
    if (e.w < 0 || e.w > 2) throw Error(Errc::invalid_spectrum, "weight " + std::to_string(e.w) + " is not in {0,1,2}");
    if (e.h < 1) throw Error(Errc::invalid_spectrum, "multiplicity must be >= 1");
    auto& h = merged[{e.alpha, e.w}];
    h = checked_add(h, e.h);
  }

  std::map<Rational, std::int64_t> by_alpha;
  for (const auto& [key, h] : merged) {
    entries_.push_back({key.first, key.second, h});
    by_alpha[key.first] += h;
  }
  for (const auto& [alpha, h] : by_alpha) {
    auto mirror = by_alpha.find(-alpha);
    if (mirror == by_alpha.end() || mirror->second != h) {
      throw Error(Errc::invalid_spectrum, "spectrum is not symmetric at alpha = " + alpha.str());
    }
  }
}

bool SpectralPairs::has_weight_two() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const SpectralEntry& e) { return e.w == 2; });
}

std::int64_t SpectralPairs::total_multiplicity() const {
  std::int64_t t = 0;
  for (const auto& e : entries_) t += e.h;
  return t;
}

Rational eta_spectral(const SpectralPairs& s, std::int64_t k, std::stop_token stop) {
  if (k < 1) throw Error(Errc::invalid_argument, "eta needs K >= 1");
  const Rational kk(k);
  Rational weight_two;
  Rational twisted;
  for (const auto& e : s.entries()) {
    throw_if_cancelled(stop);
    const Rational ka = kk * e.alpha;
    if (ka.is_integer()) {
      if (e.w == 2 && !e.alpha.is_zero()) weight_two += Rational(e.h);
    } else if (e.alpha.sign() >= 0) {
      twisted += Rational(e.h) * (Rational(1) - Rational(2) * frac(ka));
    }
  }
  return weight_two + Rational(2) * twisted;
}

std::int64_t signature_spectral(const SpectralPairs& s, std::int64_t n, std::stop_token stop) {
  if (n < 2) throw Error(Errc::invalid_argument, "N must be >= 2");
  Rational eta_n = eta_spectral(s, n, stop);
  Rational eta_1 = eta_spectral(s, 1, stop);
  return signature_from_eta(eta_n, eta_1, n);
}

SpectralPairs brieskorn_curve_spectral_pairs(std::int64_t a, std::int64_t b) {
  if (a < 2 || b < 2) throw Error(Errc::invalid_argument, "curve exponents must be >= 2");
  if (gcd(a, b) != 1) {
    throw Error(Errc::not_coprime, "x^" + std::to_string(a) + " + y^" + std::to_string(b) +
                                       " is reducible (gcd > 1); its spectral pairs are not generated here");
  }
  std::vector<SpectralEntry> entries;
  entries.reserve(static_cast<std::size_t>((a - 1) * (b - 1)));
  for (std::int64_t i = 1; i < a; ++i) {
    for (std::int64_t j = 1; j < b; ++j) {
      entries.push_back({Rational(i, a) + Rational(j, b) - Rational(1), 1, 1});
    }
  }
  return SpectralPairs(std::move(entries));
}

}  // namespace sigsurf
