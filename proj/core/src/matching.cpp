#include "bvnkit/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "bvnkit/errors.hpp"

namespace bvnkit {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp maximum matching on a row-to-column adjacency list.
// Returns row -> column, -1 for unmatched rows.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> match_row(n, -1), match_col(n, -1), dist(n, 0);
  int dist_nil = kInf;

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < n; ++u) {
      if (match_row[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    dist_nil = kInf;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (dist[u] >= dist_nil) continue;
      for (int v : adj[u]) {
        const int w = match_col[v];
        if (w < 0) {
          if (dist_nil == kInf) dist_nil = dist[u] + 1;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return dist_nil != kInf;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      const int w = match_col[v];
      const bool ok = w < 0 ? dist[u] + 1 == dist_nil
                            : dist[w] == dist[u] + 1 && self(self, w);
      if (ok) {
        match_row[u] = v;
        match_col[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < n; ++u)
      if (match_row[u] < 0) dfs(dfs, u);
  }
  return match_row;
}

std::vector<std::vector<int>> adjacency(const SupportGraph& g, double min_weight) {
  const std::size_t n = g.dim();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(i, j) && g.weights(i, j) >= min_weight)
        adj[i].push_back(static_cast<int>(j));
  return adj;
}

// min_edge and total_weight are accumulated in ascending row order in
// every matching flavor, so equal matchings produce bit-identical stats.
MatchingResult make_result(const SupportGraph& g, const std::vector<int>& row_to_col) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> map(n);
  double min_edge = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    map[i] = static_cast<std::size_t>(row_to_col[i]);
    const double w = g.weights(i, map[i]);
    min_edge = std::min(min_edge, w);
    total += w;
  }
  return {Permutation(std::move(map)), min_edge, total};
}

bool complete(const std::vector<int>& row_to_col) {
  return std::none_of(row_to_col.begin(), row_to_col.end(),
                      [](int v) { return v < 0; });
}

// Assignment problem, potentials formulation, O(n^3). cost(i, j) is
// +infinity for absent edges; infinities never leak into the potentials
// because only finite-reduced-cost edges enter the alternating tree.
// Returns row -> column or nullopt when no perfect matching exists on
// the finite edges.
std::optional<std::vector<int>> min_cost_assignment(const SupportGraph& g) {
  const int n = static_cast<int>(g.dim());
  const double inf = std::numeric_limits<double>::infinity();
  auto cost = [&](int i, int j) {
    return g.has_edge(i, j) ? -g.weights(i, j) : inf;
  };

  // Column n is a virtual starting column; p[j] is the row matched to
  // column j, or n when j is free.
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, n);
  std::vector<int> way(static_cast<std::size_t>(n) + 1, n);

  for (int i = 0; i < n; ++i) {
    p[n] = i;
    int j0 = n;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!(delta < inf)) return std::nullopt;
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != n);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != n);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 0; j < n; ++j)
    if (p[j] != n) row_to_col[p[j]] = j;
  return row_to_col;
}

}  // namespace

SupportGraph make_support_graph(Matrix weights, double cutoff) {
  if (weights.dim() == 0) throw InvalidInputError("empty support graph");
  if (!(cutoff >= 0.0)) throw InvalidInputError("cutoff must be nonnegative");
  return {std::move(weights), cutoff};
}

std::optional<MatchingResult> perfect_matching(const SupportGraph& g) {
  const auto match = hopcroft_karp(adjacency(g, 0.0));
  if (!complete(match)) return std::nullopt;
  return make_result(g, match);
}

std::optional<MatchingResult> max_weight_perfect_matching(const SupportGraph& g) {
  const auto match = min_cost_assignment(g);
  if (!match || !complete(*match)) return std::nullopt;
  return make_result(g, *match);
}

std::optional<MatchingResult> bottleneck_perfect_matching(const SupportGraph& g) {
  const std::size_t n = g.dim();
  std::vector<double> levels;
  levels.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(i, j)) levels.push_back(g.weights(i, j));
  if (levels.empty()) return std::nullopt;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Feasibility (a perfect matching using only edges >= level) is
  // monotone decreasing in the level, so binary search for the largest
  // feasible one, keeping the matching that witnessed it.
  auto probe = [&](std::size_t idx) {
    auto match = hopcroft_karp(adjacency(g, levels[idx]));
    return complete(match) ? std::optional(std::move(match)) : std::nullopt;
  };

  auto best = probe(0);
  if (!best) return std::nullopt;
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (auto match = probe(mid)) {
      best = std::move(match);
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return make_result(g, *best);
}

}  // namespace bvnkit
