#include "sigsurf/curve_invariants.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sigsurf/error.hpp"
#include "sigsurf/rational.hpp"

namespace sigsurf {

namespace {

std::string pair_str(const PuiseuxPair& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

}  // namespace

PuiseuxPairs::PuiseuxPairs(std::vector<PuiseuxPair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (p.n < 2 || p.m < 1) throw Error(Errc::invalid_pairs, "Puiseux pair " + pair_str(p) + " needs m >= 1, n >= 2");
    if (gcd(p.m, p.n) != 1) throw Error(Errc::invalid_pairs, "Puiseux pair " + pair_str(p) + " is not coprime");
    if (i == 0 && p.m <= p.n) throw Error(Errc::invalid_pairs, "first Puiseux pair " + pair_str(p) + " needs m > n");
    if (i > 0 && p.m <= checked_mul(p.n, pairs_[i - 1].m)) {
      throw Error(Errc::invalid_pairs, "Puiseux pair " + pair_str(p) + " needs m > n * " +
                                           std::to_string(pairs_[i - 1].m));
    }
  }
}

CharExponents::CharExponents(std::vector<std::int64_t> beta) : beta_(std::move(beta)) {
  if (beta_.empty()) throw Error(Errc::invalid_exponents, "empty characteristic exponent list");
  std::int64_t g = 0;
  for (std::size_t i = 0; i < beta_.size(); ++i) {
    if (beta_[i] < 1) throw Error(Errc::invalid_exponents, "characteristic exponents must be positive");
    if (i > 0 && beta_[i] <= beta_[i - 1]) {
      throw Error(Errc::invalid_exponents, "characteristic exponents must be strictly increasing");
    }
    g = gcd(g, beta_[i]);
  }
  if (g != 1) throw Error(Errc::invalid_exponents, "characteristic exponents have common divisor " + std::to_string(g));
}

MultiplicitySequence::MultiplicitySequence(std::vector<std::int64_t> e) : e_(std::move(e)) {
  auto bad = [](const std::string& what) { throw Error(Errc::invalid_sequence, "invalid multiplicity sequence: " + what); };
  if (e_.empty()) bad("empty");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < 1) bad("entries must be positive");
    if (i > 0 && e_[i] > e_[i - 1]) bad("entries must be non-increasing");
  }
  if (e_.back() != 1) bad("last entry must be 1");

  proximate_to_.assign(e_.size(), {});
  for (std::size_t i = 0; i + 1 < e_.size(); ++i) {
    std::int64_t sum = 0;
    std::size_t j = i + 1;
    for (; j < e_.size() && sum < e_[i]; ++j) {
      sum += e_[j];
      proximate_to_[j].push_back(i);
    }
    if (sum != e_[i]) {
      bad("proximity law fails at position " + std::to_string(i) + " (" + std::to_string(e_[i]) +
          " != " + std::to_string(sum) + ")");
    }
  }
  for (std::size_t j = 1; j < e_.size(); ++j) {
    if (proximate_to_[j].size() > 2) bad("point " + std::to_string(j) + " lies on more than two divisors");
  }
}

CharExponents pairs_to_char_exponents(const PuiseuxPairs& p) {
  const std::size_t l = p.size();
  std::vector<std::int64_t> beta(l + 1);
  // suffix[i] = n_{i+1} * ... * n_l (1-based pairs)
  std::vector<std::int64_t> suffix(l + 1, 1);
  for (std::size_t i = l; i-- > 0;) suffix[i] = checked_mul(suffix[i + 1], p[i].n);
  beta[0] = suffix[0];
  for (std::size_t i = 0; i < l; ++i) beta[i + 1] = checked_mul(p[i].m, suffix[i + 1]);
  return CharExponents(std::move(beta));
}

PuiseuxPairs char_exponents_to_pairs(const CharExponents& c) {
  const auto& beta = c.values();
  std::vector<PuiseuxPair> pairs;
  std::int64_t prev = beta[0];
  for (std::size_t i = 1; i < beta.size(); ++i) {
    std::int64_t g = gcd(prev, beta[i]);
    PuiseuxPair p{beta[i] / g, prev / g};
    if (p.n < 2 || gcd(p.m, p.n) != 1) {
      throw Error(Errc::invalid_exponents,
                  "characteristic exponent " + std::to_string(beta[i]) + " does not lower the gcd " + std::to_string(prev));
    }
    pairs.push_back(p);
    prev = g;
  }
  return PuiseuxPairs(std::move(pairs));
}

MultiplicitySequence char_exponents_to_mult_sequence(const CharExponents& c) {
  if (c.genus() == 0) throw Error(Errc::smooth_branch, "smooth branch has no characteristic exponent");
  char_exponents_to_pairs(c);  // realizability

  const auto& beta = c.values();
  std::vector<std::int64_t> seq;
  std::int64_t e = beta[0];
  for (std::size_t i = 1; i < beta.size(); ++i) {
    std::int64_t a = beta[i] - (i > 1 ? beta[i - 1] : 0);
    std::int64_t b = e;
    while (b != 0) {
      std::int64_t q = a / b;
      seq.insert(seq.end(), static_cast<std::size_t>(q), b);
      std::int64_t r = a % b;
      a = b;
      b = r;
    }
    e = gcd(e, beta[i]);
  }
  return MultiplicitySequence(std::move(seq));
}

ResolutionGraph mult_sequence_to_resolution_graph(const MultiplicitySequence& e) {
  const auto& mult = e.values();
  const auto& prox = e.proximate_to();
  const std::size_t k = mult.size();

  std::vector<std::int64_t> total(k);
  std::set<std::pair<std::size_t, std::size_t>> adjacent;
  for (std::size_t i = 0; i < k; ++i) {
    total[i] = mult[i];
    for (std::size_t j : prox[i]) total[i] = checked_add(total[i], total[j]);
    if (prox[i].size() == 2) {
      auto key = std::minmax(prox[i][0], prox[i][1]);
      if (adjacent.erase({key.first, key.second}) == 0) {
        throw Error(Errc::invalid_sequence, "point " + std::to_string(i) + " is proximate to two divisors that do not meet");
      }
    }
    for (std::size_t j : prox[i]) adjacent.emplace(j, i);
  }

  std::vector<ResolutionGraph::Exceptional> vertices;
  for (std::size_t i = 0; i < k; ++i) vertices.push_back({static_cast<std::int64_t>(i), total[i]});
  std::vector<ResolutionGraph::Edge> edges;
  for (const auto& [a, b] : adjacent) edges.emplace_back(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  const auto arrow = static_cast<std::int64_t>(k);
  edges.emplace_back(arrow - 1, arrow);
  return ResolutionGraph(std::move(vertices), {arrow}, std::move(edges));
}

ResolutionGraph resolution_graph_of(const PuiseuxPairs& p) {
  return mult_sequence_to_resolution_graph(char_exponents_to_mult_sequence(pairs_to_char_exponents(p)));
}

}  // namespace sigsurf
