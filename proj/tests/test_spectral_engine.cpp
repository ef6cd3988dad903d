#include <doctest.h>

#include <map>

#include "sigsurf/curve_invariants.hpp"
#include "sigsurf/error.hpp"
#include "sigsurf/resolution_engine.hpp"
#include "sigsurf/spectral_engine.hpp"

using namespace sigsurf;

namespace {

SpectralPairs cusp() { return SpectralPairs({{Rational(-1, 6), 1, 1}, {Rational(1, 6), 1, 1}}); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::cancelled;
}

}  // namespace

TEST_CASE("validation and merging") {
  SpectralPairs s({{Rational(1, 6), 1, 1}, {Rational(-1, 6), 1, 2}, {Rational(1, 6), 1, 1}});
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0] == SpectralEntry{Rational(-1, 6), 1, 2});
  CHECK(s.entries()[1] == SpectralEntry{Rational(1, 6), 1, 2});
  CHECK(code_of([] { SpectralPairs({{Rational(1), 1, 1}, {Rational(-1), 1, 1}}); }) == Errc::invalid_spectrum);
  CHECK(code_of([] { SpectralPairs({{Rational(1, 3), 1, 1}}); }) == Errc::invalid_spectrum);
  CHECK(code_of([] { SpectralPairs({{Rational(0), 3, 1}}); }) == Errc::invalid_spectrum);
  CHECK(code_of([] { SpectralPairs({{Rational(0), 1, 0}}); }) == Errc::invalid_spectrum);
  // symmetry is on alpha totals, weights may differ
  CHECK_NOTHROW(SpectralPairs({{Rational(-1, 2), 0, 1}, {Rational(1, 2), 2, 1}}));
}

TEST_CASE("cusp calibration fixture") {
  CHECK(eta_spectral(cusp(), 1) == Rational(4, 3));
  CHECK(eta_spectral(cusp(), 2) == Rational(2, 3));
  CHECK(eta_spectral(cusp(), 6) == Rational(0));
  CHECK(signature_spectral(cusp(), 2) == -2);
}

TEST_CASE("empty spectrum") {
  CHECK(eta_spectral(SpectralPairs(), 3) == Rational(0));
  CHECK(signature_spectral(SpectralPairs(), 5) == 0);
}

TEST_CASE("weight-two entries feed the first sum") {
  SpectralPairs s({{Rational(-1, 2), 2, 1}, {Rational(1, 2), 2, 1}});
  CHECK(s.has_weight_two());
  // K = 2: both K*alpha integral, alpha != 0 -> 2; K = 1: 2 * (1 - 2*(1/2)) = 0.
  CHECK(eta_spectral(s, 2) == Rational(2));
  CHECK(eta_spectral(s, 1) == Rational(0));
}

TEST_CASE("generator") {
  CHECK(brieskorn_curve_spectral_pairs(2, 3) == cusp());
  CHECK(code_of([] { brieskorn_curve_spectral_pairs(2, 2); }) == Errc::not_coprime);
  SpectralPairs s = brieskorn_curve_spectral_pairs(3, 4);
  CHECK(s.entries().size() == 6);
  CHECK(s.total_multiplicity() == 6);
  for (const auto& e : s.entries()) CHECK_FALSE(e.alpha.is_integer());
}

TEST_CASE("generator spectra are symmetric and sized (a-1)(b-1)") {
  for (std::int64_t a = 2; a <= 13; ++a)
    for (std::int64_t b = 2; b <= 13; ++b) {
      if (gcd(a, b) != 1) continue;
      SpectralPairs s = brieskorn_curve_spectral_pairs(a, b);
      CHECK(s.total_multiplicity() == (a - 1) * (b - 1));
      std::map<Rational, std::int64_t> h;
      for (const auto& e : s.entries()) h[e.alpha] += e.h;
      for (const auto& [alpha, mult] : h) CHECK(h[-alpha] == mult);
    }
}

TEST_CASE("x^2 + y^5 spectrum agrees with the resolution graph") {
  SpectralPairs s = brieskorn_curve_spectral_pairs(2, 5);
  ResolutionGraph g = resolution_graph_of(PuiseuxPairs({{5, 2}}));
  for (std::int64_t k = 1; k <= 12; ++k) CHECK(eta_spectral(s, k) == eta_resolution(g, k));
  CHECK(signature_spectral(s, 3) == signature_resolution(g, 3));
}
