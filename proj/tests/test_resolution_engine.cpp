#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sigsurf/curve_invariants.hpp"
#include "sigsurf/error.hpp"
#include "sigsurf/puiseux_engine.hpp"
#include "sigsurf/resolution_engine.hpp"

using namespace sigsurf;

namespace {

ResolutionGraph cusp_graph() { return ResolutionGraph({{1, 2}, {2, 3}, {3, 6}}, {4}, {{1, 3}, {2, 3}, {3, 4}}); }

// Same graph with vertex ids relabelled by `perm` and all lists shuffled.
ResolutionGraph relabel(const ResolutionGraph& g, std::mt19937_64& rng) {
  std::vector<std::int64_t> ids;
  for (const auto& v : g.exceptional()) ids.push_back(v.id);
  for (std::int64_t a : g.arrowheads()) ids.push_back(a);
  std::vector<std::int64_t> fresh(ids.size());
  std::iota(fresh.begin(), fresh.end(), 100);
  std::shuffle(fresh.begin(), fresh.end(), rng);
  auto map = [&](std::int64_t id) {
    return fresh[static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin())];
  };
  auto vs = g.exceptional();
  for (auto& v : vs) v.id = map(v.id);
  std::shuffle(vs.begin(), vs.end(), rng);
  std::vector<std::int64_t> arrows;
  for (std::int64_t a : g.arrowheads()) arrows.push_back(map(a));
  std::vector<ResolutionGraph::Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(map(b), map(a));
  std::shuffle(edges.begin(), edges.end(), rng);
  return ResolutionGraph(vs, arrows, edges);
}

}  // namespace

TEST_CASE("graph validation") {
  auto code = [](auto&& build) {
    try {
      build();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::cancelled;
  };
  CHECK(code([] { ResolutionGraph({{0, 2}}, {1}, {}); }) == Errc::invalid_graph);                    // not a tree
  CHECK(code([] { ResolutionGraph({{0, 2}, {1, 3}}, {2}, {{0, 2}, {0, 2}}); }) == Errc::invalid_graph);  // dup edge
  CHECK(code([] { ResolutionGraph({{0, 2}, {1, 3}}, {2}, {{0, 2}, {2, 1}}); }) == Errc::invalid_graph);  // arrow degree 2
  CHECK(code([] { ResolutionGraph({{0, 0}}, {1}, {{0, 1}}); }) == Errc::invalid_graph);             // m = 0
  CHECK(code([] { ResolutionGraph({{0, 2}}, {}, {}); }) == Errc::invalid_graph);                    // no arrow
  CHECK(code([] { ResolutionGraph({{0, 2}}, {0}, {{0, 0}}); }) == Errc::invalid_graph);             // dup id
  CHECK(code([] { ResolutionGraph({{0, 2}}, {1}, {{0, 5}}); }) == Errc::invalid_graph);             // unknown id
  CHECK(code([] { ResolutionGraph({{0, 2}, {1, 2}, {2, 2}}, {3}, {{0, 1}, {1, 0}, {2, 3}}); }) == Errc::invalid_graph);
  CHECK(code([] { ResolutionGraph({{0, 2}, {1, 2}, {2, 2}}, {3}, {{0, 1}, {2, 2}, {2, 3}}); }) == Errc::invalid_graph);
  CHECK_NOTHROW(cusp_graph());
}

TEST_CASE("eta of the cusp graph") {
  ResolutionGraph g = cusp_graph();
  CHECK(eta_resolution(g, 1) == Rational(4, 3));
  CHECK(eta_resolution(g, 2) == Rational(2, 3));
  CHECK(signature_resolution(g, 2) == -2);
}

TEST_CASE("eta of the ordinary 10-fold point") {
  ResolutionGraph g = ordinary_point_graph(10);
  CHECK(eta_resolution(g, 1) == Rational(33));
  CHECK(eta_resolution(g, 6) == Rational(9));
}

TEST_CASE("reference signatures via resolution graphs") {
  CHECK(signature_resolution(ordinary_point_graph(10), 6) == -189);
  CHECK(signature_resolution(ordinary_point_graph(20), 6) == -779);
}

TEST_CASE("irreducible identity on the cusp and ordinary points") {
  ResolutionGraph g = cusp_graph();
  CHECK(irreducible_identity_check(g, 2));
  GcdSums s6 = gcd_sums(g, 6);
  CHECK(s6.edge_sum == 3);
  CHECK(s6.vertex_sum == 3);
  CHECK(irreducible_identity_check(g, 6));
  for (std::int64_t k = 1; k <= 40; ++k) CHECK(irreducible_identity_check(ordinary_point_graph(10), k));
}

TEST_CASE("engine agrees with the direct rational evaluation") {
  std::mt19937_64 rng(23);
  std::vector<ResolutionGraph> graphs{cusp_graph(), ordinary_point_graph(10), ordinary_point_graph(7)};
  for (int i = 0; i < 25; ++i) graphs.push_back(resolution_graph_of(oracle::random_pairs(rng, 60, 3)));
  for (const auto& g : graphs) {
    for (std::int64_t k = 1; k <= 13; ++k) CHECK(eta_resolution(g, k) == oracle::eta_resolution_reference(g, k));
  }
}

TEST_CASE("eta is invariant under relabelling") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    ResolutionGraph g = resolution_graph_of(oracle::random_pairs(rng, 60, 3));
    ResolutionGraph h = relabel(g, rng);
    for (std::int64_t k = 1; k <= 8; ++k) CHECK(eta_resolution(g, k) == eta_resolution(h, k));
  }
}

TEST_CASE("converted single-branch graphs satisfy the irreducible identity and match Puiseux") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    PuiseuxPairs p = oracle::random_pairs(rng, 60, 3);
    ResolutionGraph g = resolution_graph_of(p);
    for (std::int64_t k = 1; k <= 50; ++k) CHECK(irreducible_identity_check(g, k));
    for (std::int64_t n = 2; n <= 6; ++n) CHECK(signature_resolution(g, n) == signature_puiseux(p, n));
  }
}

TEST_CASE("perturbed multiplicity is detected") {
  ResolutionGraph bad({{1, 2}, {2, 3}, {3, 7}}, {4}, {{1, 3}, {2, 3}, {3, 4}});
  bool flagged = false;
  for (std::int64_t n = 2; n <= 6 && !flagged; ++n) {
    try {
      flagged = signature_resolution(bad, n) != signature_resolution(cusp_graph(), n);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::non_integer_signature);
      flagged = true;
    }
  }
  CHECK(flagged);
}
