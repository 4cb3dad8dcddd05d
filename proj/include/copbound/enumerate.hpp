// Exhaustive iteration over small graphs: all labeled graphs on n vertices,
// connected filtering, isomorphism testing, and one-representative-per-class
// lists built by vertex augmentation. Everything here is brute force on
// purpose; the callers stay below 8 vertices where that is the simplest
// correct tool.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "copbound/graph.hpp"

namespace copbound {

inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("permutation size does not match graph order");
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

// Calls fn for every labeled simple graph on n vertices (2^(n choose 2) of
// them), in edge-mask counting order.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  if (n < 0 || n > 8)
    throw std::invalid_argument(
        "labeled enumeration is limited to n <= 8 (2^28 graphs)");
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph g(n);
    for (int b = 0; b < m; ++b)
      if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
    fn(g);
  }
}

template <typename Fn>
void for_each_labeled_connected_graph(int n, Fn&& fn) {
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (is_connected(g)) fn(g);
  });
}

// Label-respecting isomorphism search: map vertices of a to b in descending
// degree order, pruning on degree and on adjacency to already-mapped
// vertices. Adequate well past the orders used here.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return da[x] > da[y]; });
  std::vector<int> image(n, -1);
  VertexSet used = 0;
  auto extend = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int u = order[idx];
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      if (db[v] != da[u]) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int w = order[j];
        if (a.has_edge(u, w) != b.has_edge(v, image[w])) ok = false;
      }
      if (ok) {
        image[u] = v;
        used |= bit(v);
        if (self(self, idx + 1)) return true;
        used &= ~bit(v);
        image[u] = -1;
      }
    }
    return false;
  };
  return extend(extend, 0);
}

// Smallest upper-triangle edge bitstring over all vertex relabelings. Two
// graphs on the same order get equal codes exactly when isomorphic. Cost is
// n! per call, so capped at n <= 8.
inline std::uint64_t canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > 8)
    throw std::invalid_argument("canonical_code is limited to n <= 8");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (size_t b = 0; b < pairs.size(); ++b)
      if (g.has_edge(perm[pairs[b].first], perm[pairs[b].second]))
        code |= std::uint64_t{1} << b;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Fold the order into the code so graphs of different order never collide.
  return (static_cast<std::uint64_t>(n) << 56) | best;
}

// One representative per isomorphism class of connected graphs on exactly n
// vertices. Built by adding a new last vertex with every nonempty neighbor
// set to each (n-1)-vertex representative; every connected graph has a
// vertex whose removal keeps it connected, so nothing is missed.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument(
        "connected_graphs_up_to_iso is limited to 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& g : level) {
      for (VertexSet nbrs = 1; nbrs < (VertexSet{1} << (k - 1)); ++nbrs) {
        Graph h(k);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int v : set_to_vector(nbrs)) h.add_edge(k - 1, v);
        std::uint64_t code = canonical_code(h);
        if (seen.insert(code).second) next.push_back(h);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace copbound
