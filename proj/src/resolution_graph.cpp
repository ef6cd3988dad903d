#include "sigsurf/resolution_graph.hpp"

#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "sigsurf/error.hpp"

namespace sigsurf {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::invalid_graph, "invalid resolution graph: " + what); }

}  // namespace

ResolutionGraph::ResolutionGraph(std::vector<Exceptional> exceptional, std::vector<std::int64_t> arrowheads,
                                 std::vector<Edge> edges)
    : exceptional_(std::move(exceptional)), arrowheads_(std::move(arrowheads)), edges_(std::move(edges)) {
  if (exceptional_.empty()) invalid("no exceptional vertex");
  if (arrowheads_.empty()) invalid("no arrowhead");

  std::unordered_map<std::int64_t, std::size_t> index;
  for (const auto& e : exceptional_) {
    if (e.m < 1) invalid("multiplicity of vertex " + std::to_string(e.id) + " is " + std::to_string(e.m));
    if (!index.emplace(e.id, mult_.size()).second) invalid("duplicate vertex id " + std::to_string(e.id));
    mult_.push_back(e.m);
  }
  for (std::int64_t a : arrowheads_) {
    if (!index.emplace(a, mult_.size()).second) invalid("duplicate vertex id " + std::to_string(a));
    mult_.push_back(1);
  }

  const std::size_t n = mult_.size();
  if (edges_.size() + 1 != n) {
    invalid(std::to_string(edges_.size()) + " edges on " + std::to_string(n) + " vertices is not a tree");
  }
  adjacency_.assign(n, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges_) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      invalid("edge (" + std::to_string(a) + "," + std::to_string(b) + ") names an unknown vertex");
    }
    std::size_t u = ia->second, v = ib->second;
    if (u == v) invalid("self-loop at vertex " + std::to_string(a));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      invalid("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    dense_edges_.emplace_back(u, v);
  }

  for (std::size_t v = exceptional_.size(); v < n; ++v) {
    if (adjacency_[v].size() != 1) {
      invalid("arrowhead " + std::to_string(arrowheads_[v - exceptional_.size()]) + " has degree " +
              std::to_string(adjacency_[v].size()));
    }
    if (is_arrowhead(adjacency_[v][0])) invalid("edge between two arrowheads");
  }

  // n-1 edges plus connectivity makes a tree.
  std::vector<char> reached(n, 0);
  std::vector<std::size_t> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) invalid("graph is not connected");
}

ResolutionGraph ordinary_point_graph(std::int64_t r) {
  if (r < 1) throw Error(Errc::invalid_argument, "ordinary point needs at least one branch");
  std::vector<std::int64_t> arrows(static_cast<std::size_t>(r));
  std::iota(arrows.begin(), arrows.end(), 1);
  std::vector<ResolutionGraph::Edge> edges;
  for (std::int64_t a : arrows) edges.emplace_back(0, a);
  return ResolutionGraph({{0, r}}, std::move(arrows), std::move(edges));
}

}  // namespace sigsurf
