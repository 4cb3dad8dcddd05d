// Small simple graphs on dense integer ids, graph6 I/O, and the named
// generators the rest of the library needs. Adjacency is kept as one 64-bit
// mask per vertex, which caps the order at 62 (the single-byte graph6 range)
// and makes set algebra on vertex subsets cheap everywhere else.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copbound {

// Vertex subsets travel as bitmasks; bit v = vertex id v.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 62;

inline VertexSet bit(int v) { return VertexSet{1} << v; }

inline int set_size(VertexSet s) { return std::popcount(s); }

inline VertexSet full_set(int n) {
  return n == 0 ? 0 : (~VertexSet{0} >> (64 - n));
}

inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

template <typename Container>
inline VertexSet set_of(const Container& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

inline VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

// Thrown when an input graph or flag pushes past a configured search or
// memory cap. Callers treat this as "refused", never as an answer.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in [0, 62], got " +
                                  std::to_string(n));
    adj_.assign(static_cast<size_t>(n), 0);
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    int total = 0;
    for (VertexSet row : adj_) total += std::popcount(row);
    return total / 2;
  }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  void check_vertex(int v) const {
    if (!has_vertex(v))
      throw std::invalid_argument("vertex id " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(n_) +
                                  ")");
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  VertexSet neighbors_mask(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::vector<int> neighbors(int v) const {
    return set_to_vector(neighbors_mask(v));
  }

  int degree(int v) const { return std::popcount(neighbors_mask(v)); }

  VertexSet vertex_mask() const { return full_set(n_); }

  // Open neighborhood of a set: vertices outside s with a neighbor in s.
  VertexSet open_neighborhood(VertexSet s) const {
    VertexSet out = 0;
    VertexSet rest = s & vertex_mask();
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out |= adj_[v];
    }
    return out & ~s;
  }

  VertexSet closed_neighborhood(VertexSet s) const {
    return open_neighborhood(s) | (s & vertex_mask());
  }

  // Edges as ascending (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      VertexSet higher = adj_[u] & ~full_set(u + 1);
      for (int v : set_to_vector(higher)) out.emplace_back(u, v);
    }
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// graph6 (format of McKay's gtools; single-byte order field, n <= 62)
// ---------------------------------------------------------------------------

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, size_t byte_offset)
      : std::runtime_error("graph6 parse error at byte " +
                           std::to_string(byte_offset) + ": " + what),
        offset(byte_offset) {}
  size_t offset;
};

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  size_t base = 0;
  if (text.substr(0, header.size()) == header) {
    text.remove_prefix(header.size());
    base = header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6ParseError("empty input", base);
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (first < 63 || first == 126)
    throw Graph6ParseError("unsupported order byte (multi-byte orders not "
                           "needed at this scale)",
                           base);
  int n = first - 63;
  Graph g(n);
  size_t need_bits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t need_bytes = (need_bits + 5) / 6;
  if (text.size() - 1 != need_bytes)
    throw Graph6ParseError("expected " + std::to_string(need_bytes) +
                               " data bytes for order " + std::to_string(n) +
                               ", got " + std::to_string(text.size() - 1),
                           base + text.size());
  size_t bit_index = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("data byte out of printable range", base + i);
    unsigned value = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      bool on = (value >> b) & 1;
      if (bit_index >= need_bits) {
        if (on) throw Graph6ParseError("nonzero padding bits", base + i);
        continue;
      }
      if (on) {
        // Bits run over the upper triangle column by column:
        // (0,1), (0,2), (1,2), (0,3), ...
        size_t k = bit_index;
        int col = 1;
        while (static_cast<size_t>(col) * (col + 1) / 2 <= k) ++col;
        int row = static_cast<int>(k - static_cast<size_t>(col) * (col - 1) / 2);
        g.add_edge(row, col);
      }
    }
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  size_t need_bits = static_cast<size_t>(n) * (n - 1) / 2;
  unsigned value = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      value = (value << 1) | (g.has_edge(row, col) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  }
  if (need_bits % 6 != 0) {
    value <<= 6 - need_bits % 6;
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

inline Graph add_universal(const Graph& g) {
  Graph out(g.vertex_count() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < g.vertex_count(); ++v)
    out.add_edge(g.vertex_count(), v);
  return out;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.vertex_count();
  Graph out(total);
  int offset = 0;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) out.add_edge(offset + u, offset + v);
    offset += p.vertex_count();
  }
  return out;
}

inline Graph disjoint_copies(const Graph& g, int count) {
  if (count < 0) throw std::invalid_argument("copy count must be >= 0");
  return disjoint_union(std::vector<Graph>(static_cast<size_t>(count), g));
}

inline Graph complete_graph(int t) {
  Graph g(t);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(int s, int t) {
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3)
    throw std::invalid_argument("a cycle needs at least 3 vertices, got " +
                                std::to_string(n));
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Rim vertices 0..t-1, hub vertex t.
inline Graph wheel(int t) { return add_universal(cycle_graph(t)); }

// Two hubs joined by `count` internally disjoint paths of `length` edges.
// Hub a = 0, hub b = 1, interiors numbered path by path.
inline Graph theta_graph(int count, int length) {
  if (count < 1 || length < 2)
    throw std::invalid_argument("theta graph needs >= 1 path of length >= 2");
  Graph g(2 + count * (length - 1));
  int next = 2;
  for (int p = 0; p < count; ++p) {
    int prev = 0;
    for (int i = 0; i + 1 < length; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

// Pentagonal dodecahedron skeleton as the generalized Petersen graph
// GP(10, 2): outer 10-cycle 0..9, spokes to 10..19, inner edges i -> i+2.
inline Graph dodecahedron() {
  Graph g(20);
  for (int i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(i, 10 + i);
    g.add_edge(10 + i, 10 + (i + 2) % 10);
  }
  return g;
}

// The seven graphs of the Petersen family, indexed 1..7 by decreasing order,
// transcribed from their standard drawings. 1 is the Petersen graph, 4 is
// K_{3,3} plus a universal vertex, 6 is K_{4,4} minus one edge, 7 is K_6.
// Every member has 15 edges (Delta-Y transforms preserve edge count).
inline Graph petersen_family(int index) {
  using EdgeList = std::vector<std::pair<int, int>>;
  auto build = [](int n, const EdgeList& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  };
  switch (index) {
    case 1:
      return build(10, {{0, 7}, {0, 8}, {0, 9}, {1, 7}, {4, 7},
                        {1, 5}, {1, 6}, {2, 4}, {2, 8}, {5, 8},
                        {2, 6}, {3, 4}, {3, 5}, {3, 9}, {6, 9}});
    case 2:
      return build(9, {{0, 7}, {0, 2}, {0, 5}, {0, 8}, {1, 7},
                       {4, 7}, {1, 5}, {1, 6}, {2, 4}, {2, 5},
                       {2, 6}, {3, 4}, {3, 5}, {3, 8}, {6, 8}});
    case 3:
      return build(8, {{0, 1}, {0, 7}, {0, 3}, {0, 4}, {0, 6},
                       {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 7},
                       {5, 7}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
    case 4:
      return build(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                       {0, 6}, {1, 4}, {1, 5}, {1, 6}, {2, 4},
                       {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
    case 5:
      return build(7, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                       {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4},
                       {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
    case 6:
      return build(8, {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 4},
                       {1, 5}, {1, 6}, {1, 7}, {2, 4}, {2, 5},
                       {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6}});
    case 7:
      return complete_graph(6);
    default:
      throw std::invalid_argument("petersen_family index must be 1..7, got " +
                                  std::to_string(index));
  }
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

// BFS hop counts from src; -1 marks unreachable vertices.
inline std::vector<int> distances(const Graph& g, int src) {
  g.check_vertex(src);
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  dist[src] = 0;
  std::vector<int> frontier{src};
  int d = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    ++d;
    for (int u : frontier)
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = d;
          next.push_back(v);
        }
    frontier = std::move(next);
  }
  return dist;
}

// Distances restricted to the induced subgraph on `allowed` (src must be in
// allowed). Vertices outside `allowed` report -1.
inline std::vector<int> distances_within(const Graph& g, VertexSet allowed,
                                         int src) {
  g.check_vertex(src);
  if (!((allowed >> src) & 1))
    throw std::invalid_argument("source vertex not in the allowed set");
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  dist[src] = 0;
  std::vector<int> frontier{src};
  int d = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    ++d;
    for (int u : frontier) {
      VertexSet candidates = g.neighbors_mask(u) & allowed;
      for (int v : set_to_vector(candidates))
        if (dist[v] < 0) {
          dist[v] = d;
          next.push_back(v);
        }
    }
    frontier = std::move(next);
  }
  return dist;
}

inline VertexSet component_of(const Graph& g, VertexSet allowed, int src) {
  VertexSet seen = bit(src) & allowed;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : set_to_vector(frontier)) next |= g.neighbors_mask(v);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Connected components as vertex lists, ordered by smallest member id.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexSet remaining = g.vertex_mask();
  while (remaining) {
    int v = std::countr_zero(remaining);
    VertexSet comp = component_of(g, remaining, v);
    out.push_back(set_to_vector(comp));
    remaining &= ~comp;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return set_size(component_of(g, g.vertex_mask(), 0)) == g.vertex_count();
}

inline bool is_connected_within(const Graph& g, VertexSet s) {
  if (!s) return false;
  int v = std::countr_zero(s);
  return component_of(g, s, v) == s;
}

// ---------------------------------------------------------------------------
// Deletion and contraction (both relabel to dense ids)
// ---------------------------------------------------------------------------

struct RelabeledGraph {
  Graph graph;
  // old_to_new[v] = new id of old vertex v, or -1 if v was deleted/merged.
  std::vector<int> old_to_new;
};

inline RelabeledGraph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertex_mask();
  std::vector<int> old_to_new(static_cast<size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v : set_to_vector(keep)) old_to_new[v] = next++;
  Graph out(next);
  for (auto [u, v] : g.edges())
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
      out.add_edge(old_to_new[u], old_to_new[v]);
  return {std::move(out), std::move(old_to_new)};
}

inline RelabeledGraph delete_vertices_and_edges(
    const Graph& g, const std::vector<int>& vertices,
    const std::vector<std::pair<int, int>>& edges) {
  VertexSet drop = 0;
  for (int v : vertices) {
    g.check_vertex(v);
    drop |= bit(v);
  }
  Graph pruned = g;
  for (auto [u, v] : edges) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("cannot delete absent edge (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    pruned.remove_edge(u, v);
  }
  return induced_subgraph(pruned, g.vertex_mask() & ~drop);
}

inline RelabeledGraph delete_vertex(const Graph& g, int v) {
  return delete_vertices_and_edges(g, {v}, {});
}

// Identifies u and v (merged vertex keeps min(u, v)'s slot), drops the loop,
// collapses any parallel edges, and relabels ids above max(u, v) down by one.
inline Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("cannot contract absent edge (" +
                                std::to_string(u) + ", " + std::to_string(v) +
                                ")");
  int keep = std::min(u, v), gone = std::max(u, v);
  Graph merged = g;
  for (int w : g.neighbors(gone))
    if (w != keep) merged.add_edge(keep, w);
  merged.remove_edge(keep, gone);
  return induced_subgraph(merged, g.vertex_mask() & ~bit(gone)).graph;
}

// ---------------------------------------------------------------------------
// Paths and rooted cycles
// ---------------------------------------------------------------------------

// A rooted cycle is stored closed: front() == back() == root. That keeps
// length() == edge count uniform across both kinds.
struct PathOrCycle {
  enum class Kind { path, rooted_cycle };

  std::vector<int> vertices;
  Kind kind = Kind::path;

  bool is_cycle() const { return kind == Kind::rooted_cycle; }

  int length() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1;
  }

  int root() const {
    if (!is_cycle())
      throw std::logic_error("root() is only defined for rooted cycles");
    return vertices.front();
  }

  // Both ends for a path (possibly equal for a trivial path); the root twice
  // for a rooted cycle.
  std::pair<int, int> ends() const {
    if (vertices.empty()) throw std::logic_error("empty path has no ends");
    if (is_cycle()) return {root(), root()};
    return {vertices.front(), vertices.back()};
  }

  std::vector<int> interior() const {
    if (vertices.size() <= 2) return {};
    return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
  }

  VertexSet vertex_set() const {
    VertexSet s = 0;
    for (int v : vertices) s |= bit(v);
    return s;
  }

  bool operator==(const PathOrCycle& o) const {
    return kind == o.kind && vertices == o.vertices;
  }
};

// Checks that p is an actual path (distinct vertices, consecutive adjacency)
// or rooted cycle (closed, length >= 3, interior distinct) in g.
inline bool is_valid_path(const Graph& g, const PathOrCycle& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  for (int v : vs)
    if (!g.has_vertex(v)) return false;
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
  if (p.is_cycle()) {
    if (vs.size() < 4 || vs.front() != vs.back()) return false;
    VertexSet seen = 0;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
      if (seen & bit(vs[i])) return false;
      seen |= bit(vs[i]);
    }
    return true;
  }
  VertexSet seen = 0;
  for (int v : vs) {
    if (seen & bit(v)) return false;
    seen |= bit(v);
  }
  return true;
}

}  // namespace copbound
