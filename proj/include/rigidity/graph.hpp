#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "rigidity/errors.hpp"

namespace rigidity {

/// Unordered edge stored canonically with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) {
  if (i == j) throw Error("self-loop edge {" + std::to_string(i) + "}");
  return i < j ? Edge{i, j} : Edge{j, i};
}

/// Hop distance marker for unreachable vertex pairs.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Simple undirected graph over vertices 0..n-1. Edges are kept in a
/// canonical lexicographic order which also fixes the row ordering of
/// every edge-indexed matrix built from the graph.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)), adj_(vertex_count) {
    if (n_ <= 0) throw Error("graph needs at least one vertex");
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [i, j] : edges_) {
      if (i < 0 || j >= n_)
        throw Error("edge endpoint out of range: {" + std::to_string(i) +
                    "," + std::to_string(j) + "}");
      adj_[i].push_back(j);
      adj_[j].push_back(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  static Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
  }

  static Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
  }

  static Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n > 2) e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical edge list, sorted by (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int degree(int i) const { return static_cast<int>(adj_[i].size()); }

  bool has_edge(int i, int j) const {
    if (i == j) return false;
    const auto& nb = adj_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  /// Position of the canonical edge in edges(), -1 if absent.
  int edge_index(int i, int j) const {
    Edge e = make_edge(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// BFS hop counts from a source; kUnreachable marks disconnected vertices.
inline std::vector<int> hop_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  dist[source] = 0;
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

inline std::vector<std::vector<int>> all_hop_distances(const Graph& g) {
  std::vector<std::vector<int>> table(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) table[i] = hop_distances(g, i);
  return table;
}

inline bool is_connected(const Graph& g) {
  auto dist = hop_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

/// Longest shortest path in hops. Throws on disconnected input.
inline int diameter(const Graph& g) {
  int best = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    auto dist = hop_distances(g, i);
    for (int d : dist) {
      if (d == kUnreachable)
        throw DisconnectedGraph("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace rigidity
