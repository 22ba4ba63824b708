#pragma once

#include <optional>

#include "bvnkit/matrix.hpp"

namespace bvnkit {

// Bipartite support graph of a nonnegative matrix: rows on the left,
// columns on the right, edge (i, j) present iff the entry exceeds the
// cutoff.
struct SupportGraph {
  Matrix weights;
  double cutoff = 1e-12;

  std::size_t dim() const { return weights.dim(); }
  bool has_edge(std::size_t i, std::size_t j) const {
    return weights(i, j) > cutoff;
  }
};

SupportGraph make_support_graph(Matrix weights, double cutoff);

struct MatchingResult {
  Permutation perm;
  // Smallest selected entry.
  double min_edge = 0.0;
  // Sum of selected entries.
  double total_weight = 0.0;
};

// Any perfect matching of the support graph (Hopcroft-Karp), or nullopt
// if none exists. Deterministic: ties resolve by ascending index.
std::optional<MatchingResult> perfect_matching(const SupportGraph& g);

// Perfect matching maximizing the total selected weight, or nullopt if
// the graph has no perfect matching at all.
std::optional<MatchingResult> max_weight_perfect_matching(const SupportGraph& g);

// Perfect matching maximizing the minimum selected weight (binary search
// over the distinct edge weights with a feasibility probe per step), or
// nullopt if the graph has no perfect matching at all.
std::optional<MatchingResult> bottleneck_perfect_matching(const SupportGraph& g);

}  // namespace bvnkit
