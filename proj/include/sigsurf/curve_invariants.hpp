#pragma once

#include <cstdint>
#include <vector>

#include "sigsurf/resolution_graph.hpp"

namespace sigsurf {

struct PuiseuxPair {
  std::int64_t m;
  std::int64_t n;

  friend bool operator==(const PuiseuxPair&, const PuiseuxPair&) = default;
};

// Puiseux pairs (m_1,n_1),...,(m_l,n_l) of an irreducible branch:
// n_i >= 2, gcd(m_i, n_i) = 1, m_1 > n_1 and m_{i+1} > n_{i+1} * m_i.
// The empty list describes a smooth branch.
class PuiseuxPairs {
 public:
  PuiseuxPairs() = default;
  explicit PuiseuxPairs(std::vector<PuiseuxPair> pairs);

  const std::vector<PuiseuxPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const PuiseuxPair& operator[](std::size_t i) const { return pairs_[i]; }

  friend bool operator==(const PuiseuxPairs&, const PuiseuxPairs&) = default;

 private:
  std::vector<PuiseuxPair> pairs_;
};

// Characteristic exponents (beta_0; beta_1, ..., beta_l): strictly increasing
// positive integers with overall gcd 1.
class CharExponents {
 public:
  explicit CharExponents(std::vector<std::int64_t> beta);

  const std::vector<std::int64_t>& values() const { return beta_; }
  std::size_t genus() const { return beta_.size() - 1; }

  friend bool operator==(const CharExponents&, const CharExponents&) = default;

 private:
  std::vector<std::int64_t> beta_;
};

// Multiplicities e_0 >= e_1 >= ... >= e_k = 1 of a branch at its successive
// infinitely near points. Construction checks the proximity (Enriques) law:
// the points proximate to i are the run i+1, ..., i+r whose multiplicities
// sum to exactly e_i; only the final point is exempt.
class MultiplicitySequence {
 public:
  explicit MultiplicitySequence(std::vector<std::int64_t> e);

  const std::vector<std::int64_t>& values() const { return e_; }
  std::size_t size() const { return e_.size(); }

  // For every point, the earlier points it is proximate to (at most two,
  // always including its immediate predecessor).
  const std::vector<std::vector<std::size_t>>& proximate_to() const { return proximate_to_; }

  friend bool operator==(const MultiplicitySequence& a, const MultiplicitySequence& b) { return a.e_ == b.e_; }

 private:
  std::vector<std::int64_t> e_;
  std::vector<std::vector<std::size_t>> proximate_to_;
};

CharExponents pairs_to_char_exponents(const PuiseuxPairs& p);

// Throws Errc::invalid_exponents when the sequence is not realized by any
// Puiseux pairs (some gcd fails to drop).
PuiseuxPairs char_exponents_to_pairs(const CharExponents& c);

// Euclidean division cascade on consecutive characteristic exponents. Needs
// at least one characteristic exponent.
MultiplicitySequence char_exponents_to_mult_sequence(const CharExponents& c);

// Simulates the blowups: divisor i gets total multiplicity e_i plus the
// total multiplicities of the divisors through its center, is joined to
// those divisors (which stop meeting each other), and the final divisor
// carries the single arrowhead. Vertex ids follow blowup order, the
// arrowhead id is the sequence length.
ResolutionGraph mult_sequence_to_resolution_graph(const MultiplicitySequence& e);

// pairs -> exponents -> multiplicities -> graph.
ResolutionGraph resolution_graph_of(const PuiseuxPairs& p);

}  // namespace sigsurf
