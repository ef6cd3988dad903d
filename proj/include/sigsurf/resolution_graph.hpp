#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sigsurf {

// Dual graph of an embedded resolution of a plane curve: exceptional
// divisors carry their total multiplicity, arrowheads (strict transforms of
// the branches) have multiplicity 1. Validated on construction to be a
// connected tree in which every arrowhead is a leaf.
class ResolutionGraph {
 public:
  struct Exceptional {
    std::int64_t id;
    std::int64_t m;
  };
  using Edge = std::pair<std::int64_t, std::int64_t>;

  ResolutionGraph(std::vector<Exceptional> exceptional, std::vector<std::int64_t> arrowheads,
                  std::vector<Edge> edges);

  // As supplied (file order is preserved for serialization).
  const std::vector<Exceptional>& exceptional() const { return exceptional_; }
  const std::vector<std::int64_t>& arrowheads() const { return arrowheads_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Dense view used by the engines: vertices 0..n-1, exceptional vertices
  // first (in supplied order), then arrowheads.
  std::size_t vertex_count() const { return mult_.size(); }
  std::size_t exceptional_count() const { return exceptional_.size(); }
  bool is_arrowhead(std::size_t v) const { return v >= exceptional_.size(); }
  std::int64_t multiplicity(std::size_t v) const { return mult_[v]; }
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& dense_edges() const { return dense_edges_; }

 private:
  std::vector<Exceptional> exceptional_;
  std::vector<std::int64_t> arrowheads_;
  std::vector<Edge> edges_;

  std::vector<std::int64_t> mult_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> dense_edges_;
};

// Graph of an ordinary r-fold point (r smooth pairwise transversal branches):
// one divisor of multiplicity r carrying r arrowheads.
ResolutionGraph ordinary_point_graph(std::int64_t r);

}  // namespace sigsurf
