// Decompositions (h, W, paths, M, f) of a forbidden graph H: validation
// against the defining clauses, evaluation of the cop-count bound they
// certify, exhaustive and greedy optimization over all choices, the
// simplified one-shot bounds (edge count, matching, path count), and the
// non-intertwined order test used by the guarding strategy.
#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "copbound/graph.hpp"
#include "copbound/minor.hpp"

namespace copbound {

// A candidate decomposition of a host graph H. All vertex ids refer to H
// itself; h is excluded from W and from every path. Paths cover H-h, the
// matching holds indices into paths, and the assignment maps each W vertex
// to the index of an incident non-matching path.
struct Decomposition {
  int h = 0;
  VertexSet w = 0;
  std::vector<PathOrCycle> paths;
  std::vector<int> matching;
  std::map<int, int> assignment;
};

// One failed clause of the decomposition definition. Clauses: (b) W shape,
// (c) path system shape and edge coverage, (d) matching shape, (e)
// assignment shape. Structural impossibilities of the covered graph itself
// (an isolated vertex no path can reach) are reported under (c).
struct DecompositionViolation {
  char clause = '?';
  std::string detail;
};

// The bound certified by one decomposition: per-path loads, the indicator
// for the extra cop, and their total. For optimizer output, `feasible`
// records whether any decomposition exists and `partial` whether search
// limits cut the enumeration short (the bound is still valid, just possibly
// not minimal).
struct BoundReport {
  std::vector<int> ell;
  int indicator = 0;
  int bound = 0;
  Decomposition decomposition;
  bool feasible = true;
  bool partial = false;
  std::string note;
};

namespace detail {

// Orientation-independent form used to detect duplicate paths.
inline std::vector<int> path_canonical_form(const PathOrCycle& p) {
  std::vector<int> fwd = p.vertices;
  std::vector<int> rev = fwd;
  if (p.kind == PathOrCycle::Kind::path) {
    std::reverse(rev.begin(), rev.end());
  } else if (rev.size() >= 2) {
    std::reverse(rev.begin() + 1, rev.end() - 1);
  }
  return std::min(fwd, rev);
}

inline int degree_without(const Graph& g, int v, int h) {
  return set_size(g.neighbors_mask(v) & ~bit(h));
}

}  // namespace detail

// Checks every defining clause of a decomposition of `host`. Returns an
// empty list when the decomposition is valid; otherwise one entry per
// failed clause with the offending elements named. Throws only when h
// itself is out of range, since nothing downstream is meaningful then.
inline std::vector<DecompositionViolation> validate_decomposition(
    const Graph& host, const Decomposition& d) {
  const int n = host.vertex_count();
  if (d.h < 0 || d.h >= n) {
    throw std::invalid_argument("validate_decomposition: h is not a vertex of the graph");
  }
  std::vector<DecompositionViolation> out;
  auto add = [&out](char clause, std::string detail) {
    out.push_back(DecompositionViolation{clause, std::move(detail)});
  };

  for (int v = 0; v < n; ++v) {
    if (v != d.h && detail::degree_without(host, v, d.h) == 0) {
      add('c', "vertex " + std::to_string(v) +
                   " is isolated once h is removed, so no path can cover it");
    }
  }

  if (d.w == 0) add('b', "W is empty");
  if ((d.w & bit(d.h)) != 0) add('b', "W contains h");
  if ((d.w & ~full_set(n)) != 0) add('b', "W contains out-of-range vertices");

  const int path_count = static_cast<int>(d.paths.size());
  std::vector<bool> structurally_ok(d.paths.size(), true);
  for (int i = 0; i < path_count; ++i) {
    const PathOrCycle& p = d.paths[static_cast<size_t>(i)];
    bool in_range = true;
    for (int v : p.vertices) {
      if (v < 0 || v >= n) {
        add('c', "path " + std::to_string(i) + " uses an out-of-range vertex");
        in_range = false;
        break;
      }
      if (v == d.h) {
        add('c', "path " + std::to_string(i) + " passes through h");
        in_range = false;
        break;
      }
    }
    if (!in_range) {
      structurally_ok[static_cast<size_t>(i)] = false;
      continue;
    }
    if (!is_valid_path(host, p)) {
      add('c', "path " + std::to_string(i) + " is not a path or rooted cycle of the graph");
      structurally_ok[static_cast<size_t>(i)] = false;
      continue;
    }
    if (p.length() < 1) {
      add('c', "path " + std::to_string(i) + " has no edges");
      structurally_ok[static_cast<size_t>(i)] = false;
      continue;
    }
    auto [end_a, end_b] = p.ends();
    for (int e : {end_a, end_b}) {
      if (((d.w >> e) & 1) == 0) {
        add('c', "end " + std::to_string(e) + " of path " + std::to_string(i) + " is not in W");
      }
      if (end_a == end_b) break;
    }
    for (int v : p.interior()) {
      if (((d.w >> v) & 1) != 0) {
        add('c', "interior vertex " + std::to_string(v) + " of path " + std::to_string(i) +
                     " lies in W");
      }
      if (detail::degree_without(host, v, d.h) != 2) {
        add('c', "interior vertex " + std::to_string(v) + " of path " + std::to_string(i) +
                     " does not have degree 2 once h is removed");
      }
    }
  }

  for (int i = 0; i < path_count; ++i) {
    if (!structurally_ok[static_cast<size_t>(i)]) continue;
    for (int j = i + 1; j < path_count; ++j) {
      if (!structurally_ok[static_cast<size_t>(j)]) continue;
      if (detail::path_canonical_form(d.paths[static_cast<size_t>(i)]) ==
          detail::path_canonical_form(d.paths[static_cast<size_t>(j)])) {
        add('c', "paths " + std::to_string(i) + " and " + std::to_string(j) + " are equal");
      }
      VertexSet inter_i = 0;
      for (int v : d.paths[static_cast<size_t>(i)].interior()) inter_i |= bit(v);
      VertexSet inter_j = 0;
      for (int v : d.paths[static_cast<size_t>(j)].interior()) inter_j |= bit(v);
      if ((inter_i & d.paths[static_cast<size_t>(j)].vertex_set()) != 0 ||
          (inter_j & d.paths[static_cast<size_t>(i)].vertex_set()) != 0) {
        add('c', "paths " + std::to_string(i) + " and " + std::to_string(j) +
                     " are not internally disjoint");
      }
    }
  }

  std::vector<std::vector<int>> cover(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < path_count; ++i) {
    if (!structurally_ok[static_cast<size_t>(i)]) continue;
    const auto& verts = d.paths[static_cast<size_t>(i)].vertices;
    for (size_t k = 0; k + 1 < verts.size(); ++k) {
      cover[static_cast<size_t>(verts[k])][static_cast<size_t>(verts[k + 1])] += 1;
      cover[static_cast<size_t>(verts[k + 1])][static_cast<size_t>(verts[k])] += 1;
    }
  }
  for (auto [u, v] : host.edges()) {
    if (u == d.h || v == d.h) continue;
    int c = cover[static_cast<size_t>(u)][static_cast<size_t>(v)];
    if (c == 0) {
      add('c', "edge " + std::to_string(u) + "-" + std::to_string(v) + " is covered by no path");
    } else if (c > 1) {
      add('c', "edge " + std::to_string(u) + "-" + std::to_string(v) +
                   " is covered more than once");
    }
  }

  std::vector<bool> in_matching(d.paths.size(), false);
  VertexSet matched = 0;
  std::vector<bool> seen_index(d.paths.size(), false);
  for (int idx : d.matching) {
    if (idx < 0 || idx >= path_count) {
      add('d', "matching index " + std::to_string(idx) + " refers to no path");
      continue;
    }
    if (seen_index[static_cast<size_t>(idx)]) {
      add('d', "matching lists path " + std::to_string(idx) + " twice");
      continue;
    }
    seen_index[static_cast<size_t>(idx)] = true;
    in_matching[static_cast<size_t>(idx)] = true;
    const PathOrCycle& p = d.paths[static_cast<size_t>(idx)];
    if (p.kind != PathOrCycle::Kind::path || p.length() != 1) {
      add('d', "matching entry " + std::to_string(idx) + " is not a path of length 1");
      continue;
    }
    VertexSet pv = p.vertex_set();
    if ((pv & matched) != 0) {
      add('d', "matching paths share a vertex (entry " + std::to_string(idx) + ")");
    }
    matched |= pv;
  }

  for (int u : set_to_vector(d.w & full_set(n) & ~bit(d.h))) {
    auto it = d.assignment.find(u);
    if (it == d.assignment.end()) {
      add('e', "W vertex " + std::to_string(u) + " has no assigned path");
    }
  }
  for (const auto& [u, idx] : d.assignment) {
    if (u < 0 || u >= n || ((d.w >> u) & 1) == 0) {
      add('e', "assignment key " + std::to_string(u) + " is not in W");
      continue;
    }
    if (idx < 0 || idx >= path_count) {
      add('e', "assignment for vertex " + std::to_string(u) + " refers to no path");
      continue;
    }
    if (in_matching[static_cast<size_t>(idx)]) {
      add('e', "assignment for vertex " + std::to_string(u) + " lies in the matching");
    }
    if (structurally_ok[static_cast<size_t>(idx)]) {
      auto [end_a, end_b] = d.paths[static_cast<size_t>(idx)].ends();
      if (u != end_a && u != end_b) {
        add('e', "vertex " + std::to_string(u) + " is not an end of its assigned path");
      }
    }
  }

  return out;
}

// Computes the per-path loads and the certified bound for a valid
// decomposition. Throws when the decomposition does not validate.
inline BoundReport evaluate_bound(const Graph& host, const Decomposition& d) {
  auto violations = validate_decomposition(host, d);
  if (!violations.empty()) {
    throw std::invalid_argument(std::string("evaluate_bound: invalid decomposition: (") +
                                violations.front().clause + ") " + violations.front().detail);
  }
  BoundReport report;
  report.decomposition = d;
  report.ell.assign(d.paths.size(), 0);
  std::vector<int> preimages(d.paths.size(), 0);
  for (const auto& [u, idx] : d.assignment) {
    preimages[static_cast<size_t>(idx)] += 1;
    (void)u;
  }
  std::vector<bool> in_matching(d.paths.size(), false);
  for (int idx : d.matching) in_matching[static_cast<size_t>(idx)] = true;
  report.indicator = 0;
  int total = 0;
  for (size_t i = 0; i < d.paths.size(); ++i) {
    int ell = 0;
    if (!in_matching[i]) {
      ell = std::max(d.paths[i].length() - 1 + preimages[i], 1);
    }
    report.ell[i] = ell;
    if (ell != 0 && ell != 1 && ell != 2 && ell != 4) report.indicator = 1;
    total += (ell + 2) / 3;
  }
  report.bound = report.indicator + total;
  report.feasible = true;
  return report;
}

enum class OptimizeMode { exhaustive, greedy };

// Limits for the exhaustive search. `extra_w` caps how many degree-2
// vertices may be toggled into W exhaustively; beyond it only the empty,
// singleton, and full selections are tried and the result is flagged
// partial. `work_budget` caps total search steps the same way.
struct SearchLimits {
  int extra_w = 12;
  long long work_budget = 200'000'000;
};

namespace detail {

// Maximal threads of H-h through degree-2 non-W interiors, each thread a
// path between W vertices or a cycle rooted at one. Returns nullopt when
// the threads cannot cover every edge (a vertex outside W fails to be a
// plain interior, or a component carries no W vertex at all).
inline std::optional<std::vector<PathOrCycle>> build_threads(const Graph& g, int h, VertexSet w) {
  const int n = g.vertex_count();
  std::vector<VertexSet> used(static_cast<size_t>(n), 0);
  auto mark = [&used](int u, int v) {
    used[static_cast<size_t>(u)] |= bit(v);
    used[static_cast<size_t>(v)] |= bit(u);
  };
  std::vector<PathOrCycle> out;
  const VertexSet hbit = bit(h);
  for (int u : set_to_vector(w)) {
    for (int x : g.neighbors(u)) {
      if (x == h || ((used[static_cast<size_t>(u)] >> x) & 1) != 0) continue;
      std::vector<int> seq = {u, x};
      mark(u, x);
      int prev = u;
      int cur = x;
      while (((w >> cur) & 1) == 0) {
        VertexSet cand = g.neighbors_mask(cur) & ~hbit & ~bit(prev);
        if (set_size(cand) != 1) return std::nullopt;
        int nxt = set_to_vector(cand).front();
        mark(cur, nxt);
        seq.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (cur == u) {
        out.push_back(PathOrCycle{seq, PathOrCycle::Kind::rooted_cycle});
      } else {
        out.push_back(PathOrCycle{seq, PathOrCycle::Kind::path});
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    if (u == h || v == h) continue;
    if (((used[static_cast<size_t>(u)] >> v) & 1) == 0) return std::nullopt;
  }
  return out;
}

// Load of a path that carries `preimages` assigned vertices, and the cop
// count it contributes.
inline int path_load(const PathOrCycle& p, int preimages) {
  return std::max(p.length() - 1 + preimages, 1);
}

inline int load_cost(int ell) { return (ell + 2) / 3; }

inline bool load_in_quiet_set(int ell) {
  return ell == 0 || ell == 1 || ell == 2 || ell == 4;
}

// Candidate ordering for deterministic reports: smallest bound, then
// smallest h, then lexicographically smallest W as a sorted vertex list.
inline bool candidate_better(int bound_a, int h_a, const std::vector<int>& w_a, int bound_b,
                             int h_b, const std::vector<int>& w_b) {
  if (bound_a != bound_b) return bound_a < bound_b;
  if (h_a != h_b) return h_a < h_b;
  return w_a < w_b;
}

struct FSearchEntry {
  std::string counts;
  int prev = -1;
  int chosen = -1;
};

// Assignment search for a fixed (h, W, threads, matching). The load of a
// path depends on f only through its preimage count, so states are count
// vectors, deduplicated level by level. Returns the best assignment and its
// bound, or nullopt when some W vertex has no admissible path.
inline std::optional<std::pair<int, std::map<int, int>>> best_assignment(
    const std::vector<PathOrCycle>& paths, const std::vector<int>& w_vertices,
    const std::vector<std::vector<int>>& incident, const std::vector<bool>& in_matching,
    long long* budget) {
  for (size_t i = 0; i < w_vertices.size(); ++i) {
    if (incident[i].empty()) return std::nullopt;
  }
  std::vector<std::vector<FSearchEntry>> levels;
  levels.emplace_back();
  levels.back().push_back(FSearchEntry{std::string(paths.size(), '\0'), -1, -1});
  for (size_t li = 0; li < w_vertices.size(); ++li) {
    std::vector<FSearchEntry> next;
    std::unordered_map<std::string, int> index;
    for (size_t si = 0; si < levels.back().size(); ++si) {
      for (int p : incident[li]) {
        if (--*budget < 0) return std::nullopt;
        std::string key = levels.back()[si].counts;
        key[static_cast<size_t>(p)] += 1;
        if (index.emplace(key, static_cast<int>(next.size())).second) {
          next.push_back(FSearchEntry{std::move(key), static_cast<int>(si), p});
        }
      }
    }
    levels.push_back(std::move(next));
  }
  int best_bound = INT_MAX;
  int best_index = -1;
  for (size_t si = 0; si < levels.back().size(); ++si) {
    const std::string& counts = levels.back()[si].counts;
    int total = 0;
    int indicator = 0;
    for (size_t p = 0; p < paths.size(); ++p) {
      int ell = in_matching[p] ? 0 : path_load(paths[p], counts[p]);
      if (!load_in_quiet_set(ell)) indicator = 1;
      total += load_cost(ell);
    }
    if (total + indicator < best_bound) {
      best_bound = total + indicator;
      best_index = static_cast<int>(si);
    }
  }
  std::map<int, int> assignment;
  int cursor = best_index;
  for (size_t li = levels.size() - 1; li >= 1; --li) {
    const FSearchEntry& e = levels[li][static_cast<size_t>(cursor)];
    assignment[w_vertices[li - 1]] = e.chosen;
    cursor = e.prev;
  }
  return std::make_pair(best_bound, std::move(assignment));
}

}  // namespace detail

// Searches decompositions of `g` for the smallest certified bound.
// Exhaustive mode ranges over every h, every W formed by the forced branch
// vertices plus a subset of degree-2 vertices, every matching among the
// length-1 threads, and every assignment profile; results are deterministic
// with ties broken by (bound, h, lexicographic W, discovery order). Greedy
// mode takes the highest-degree feasible h, W = branch vertices plus one
// representative per bare cycle component, a maximal matching, and a
// balanced assignment. When no h admits a decomposition the report comes
// back infeasible with a hint to bound_via_supergraph.
inline BoundReport optimize(const Graph& g, OptimizeMode mode = OptimizeMode::exhaustive,
                            SearchLimits limits = {}) {
  const int n = g.vertex_count();
  BoundReport best;
  best.feasible = false;
  best.bound = INT_MAX;

  auto finish_infeasible = [&best]() {
    best.bound = 0;
    best.ell.clear();
    best.note =
        "no choice of h admits a decomposition; consider bound_via_supergraph with a larger "
        "graph";
    return best;
  };
  if (n == 0) return finish_infeasible();

  auto try_candidate = [&g, &best](int h, VertexSet w, std::vector<PathOrCycle> paths,
                                   std::vector<int> matching, std::map<int, int> assignment) {
    Decomposition d;
    d.h = h;
    d.w = w;
    d.paths = std::move(paths);
    d.matching = std::move(matching);
    d.assignment = std::move(assignment);
    BoundReport r = evaluate_bound(g, d);
    if (!best.feasible ||
        detail::candidate_better(r.bound, d.h, set_to_vector(d.w), best.bound,
                                 best.decomposition.h, set_to_vector(best.decomposition.w))) {
      bool partial = best.partial;
      best = std::move(r);
      best.partial = partial;
    }
  };

  // Greedy pass: doubles as the greedy mode result and as the pruning seed
  // for the exhaustive search.
  std::vector<int> h_order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) h_order[static_cast<size_t>(i)] = i;
  std::sort(h_order.begin(), h_order.end(), [&g](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  for (int h : h_order) {
    if (n == 1) break;
    bool isolated = false;
    VertexSet branch = 0;
    for (int v = 0; v < n; ++v) {
      if (v == h) continue;
      int deg = detail::degree_without(g, v, h);
      if (deg == 0) isolated = true;
      if (deg != 2) branch |= bit(v);
    }
    if (isolated) continue;
    VertexSet w = branch;
    VertexSet rest = full_set(n) & ~bit(h);
    while (rest != 0) {
      int src = set_to_vector(rest).front();
      VertexSet comp = component_of(g, full_set(n) & ~bit(h), src);
      if ((comp & branch) == 0) w |= bit(src);
      rest &= ~comp;
    }
    if (w == 0) continue;
    auto threads = detail::build_threads(g, h, w);
    if (!threads) continue;
    const auto& paths = *threads;
    std::vector<int> w_vertices = set_to_vector(w);
    std::vector<std::vector<int>> incident(w_vertices.size());
    for (size_t wi = 0; wi < w_vertices.size(); ++wi) {
      for (size_t p = 0; p < paths.size(); ++p) {
        auto [end_a, end_b] = paths[p].ends();
        if (end_a == w_vertices[wi] || end_b == w_vertices[wi]) {
          incident[wi].push_back(static_cast<int>(p));
        }
      }
    }
    auto non_matching_left = [&](const std::vector<bool>& in_m, int vertex_index) {
      int left = 0;
      for (int p : incident[static_cast<size_t>(vertex_index)]) {
        if (!in_m[static_cast<size_t>(p)]) ++left;
      }
      return left;
    };
    std::vector<bool> in_m(paths.size(), false);
    std::vector<int> matching;
    VertexSet matched = 0;
    std::vector<int> index_of_w(static_cast<size_t>(n), -1);
    for (size_t wi = 0; wi < w_vertices.size(); ++wi) {
      index_of_w[static_cast<size_t>(w_vertices[wi])] = static_cast<int>(wi);
    }
    for (size_t p = 0; p < paths.size(); ++p) {
      if (paths[p].kind != PathOrCycle::Kind::path || paths[p].length() != 1) continue;
      int a = paths[p].vertices.front();
      int b = paths[p].vertices.back();
      if (((matched >> a) & 1) != 0 || ((matched >> b) & 1) != 0) continue;
      if (non_matching_left(in_m, index_of_w[static_cast<size_t>(a)]) < 2 ||
          non_matching_left(in_m, index_of_w[static_cast<size_t>(b)]) < 2) {
        continue;
      }
      in_m[p] = true;
      matching.push_back(static_cast<int>(p));
      matched |= bit(a) | bit(b);
    }
    std::map<int, int> assignment;
    std::vector<int> counts(paths.size(), 0);
    for (size_t wi = 0; wi < w_vertices.size(); ++wi) {
      int pick = -1;
      for (int p : incident[wi]) {
        if (in_m[static_cast<size_t>(p)]) continue;
        if (pick == -1 || counts[static_cast<size_t>(p)] < counts[static_cast<size_t>(pick)]) {
          pick = p;
        }
      }
      assignment[w_vertices[wi]] = pick;
      counts[static_cast<size_t>(pick)] += 1;
    }
    try_candidate(h, w, paths, matching, assignment);
    break;
  }

  if (mode == OptimizeMode::greedy) {
    if (!best.feasible) return finish_infeasible();
    return best;
  }

  long long budget = limits.work_budget;
  bool out_of_budget = false;
  for (int h = 0; h < n && !out_of_budget; ++h) {
    if (n == 1) break;
    bool isolated = false;
    VertexSet branch = 0;
    std::vector<int> deg2;
    for (int v = 0; v < n; ++v) {
      if (v == h) continue;
      int deg = detail::degree_without(g, v, h);
      if (deg == 0) isolated = true;
      if (deg != 2) {
        branch |= bit(v);
      } else {
        deg2.push_back(v);
      }
    }
    if (isolated) continue;

    std::vector<VertexSet> selections;
    if (static_cast<int>(deg2.size()) <= limits.extra_w) {
      selections.reserve(size_t{1} << deg2.size());
      for (uint64_t mask = 0; mask < (uint64_t{1} << deg2.size()); ++mask) {
        VertexSet s = 0;
        for (size_t i = 0; i < deg2.size(); ++i) {
          if ((mask >> i) & 1) s |= bit(deg2[i]);
        }
        selections.push_back(s);
      }
    } else {
      best.partial = true;
      selections.push_back(0);
      VertexSet all = 0;
      for (int v : deg2) {
        selections.push_back(bit(v));
        all |= bit(v);
      }
      selections.push_back(all);
    }

    for (VertexSet s : selections) {
      if (--budget < 0) {
        out_of_budget = true;
        break;
      }
      VertexSet w = branch | s;
      if (w == 0) continue;
      auto threads = detail::build_threads(g, h, w);
      if (!threads) continue;
      const auto& paths = *threads;

      std::vector<int> len1;
      int long_base = 0;
      VertexSet len1_vertices = 0;
      for (size_t p = 0; p < paths.size(); ++p) {
        if (paths[p].kind == PathOrCycle::Kind::path && paths[p].length() == 1) {
          len1.push_back(static_cast<int>(p));
          len1_vertices |= paths[p].vertex_set();
        } else {
          long_base += detail::load_cost(std::max(paths[p].length() - 1, 1));
        }
      }
      int matching_upper = set_size(len1_vertices) / 2;
      int lower = long_base + std::max(0, static_cast<int>(len1.size()) - matching_upper);
      if (best.feasible && lower > best.bound) continue;

      std::vector<int> w_vertices = set_to_vector(w);
      std::vector<std::vector<int>> incident(w_vertices.size());
      for (size_t wi = 0; wi < w_vertices.size(); ++wi) {
        for (size_t p = 0; p < paths.size(); ++p) {
          auto [end_a, end_b] = paths[p].ends();
          if (end_a == w_vertices[wi] || end_b == w_vertices[wi]) {
            incident[wi].push_back(static_cast<int>(p));
          }
        }
      }

      std::vector<bool> in_m(paths.size(), false);
      std::vector<int> chosen;
      std::function<void(size_t, VertexSet)> enumerate = [&](size_t from, VertexSet matched) {
        if (out_of_budget) return;
        if (--budget < 0) {
          out_of_budget = true;
          return;
        }
        int lb = long_base;
        for (int p : len1) {
          if (!in_m[static_cast<size_t>(p)]) lb += 1;
        }
        bool admissible = !best.feasible || lb <= best.bound;
        if (admissible) {
          bool f_possible = true;
          std::vector<std::vector<int>> free_incident(w_vertices.size());
          for (size_t wi = 0; wi < w_vertices.size() && f_possible; ++wi) {
            for (int p : incident[wi]) {
              if (!in_m[static_cast<size_t>(p)]) free_incident[wi].push_back(p);
            }
            if (free_incident[wi].empty()) f_possible = false;
          }
          if (f_possible) {
            auto result =
                detail::best_assignment(paths, w_vertices, free_incident, in_m, &budget);
            if (budget < 0) {
              out_of_budget = true;
              return;
            }
            if (result) {
              auto& [bound, assignment] = *result;
              std::vector<int> w_sorted = w_vertices;
              if (!best.feasible ||
                  detail::candidate_better(bound, h, w_sorted, best.bound, best.decomposition.h,
                                           set_to_vector(best.decomposition.w))) {
                try_candidate(h, w, paths, chosen, assignment);
              }
            }
          }
        }
        for (size_t i = from; i < len1.size(); ++i) {
          int p = len1[i];
          int a = paths[static_cast<size_t>(p)].vertices.front();
          int b = paths[static_cast<size_t>(p)].vertices.back();
          if (((matched >> a) & 1) != 0 || ((matched >> b) & 1) != 0) continue;
          in_m[static_cast<size_t>(p)] = true;
          chosen.push_back(p);
          enumerate(i + 1, matched | bit(a) | bit(b));
          chosen.pop_back();
          in_m[static_cast<size_t>(p)] = false;
          if (out_of_budget) return;
        }
      };
      enumerate(0, 0);
      if (out_of_budget) break;
    }
  }

  if (out_of_budget) best.partial = true;
  if (!best.feasible) return finish_infeasible();
  return best;
}

// The one-shot simplified bounds, each minimized over its own search space:
// the plain edge count of H-h, the edge count minus the largest matching
// whose removal leaves no isolated vertex, and one plus the path-size sum
// over induced thread systems. Entries are absent when no h qualifies.
struct CorollaryBounds {
  std::optional<int> andreae;
  std::optional<int> simplematching;
  std::optional<int> simplepaths;
  bool partial = false;
};

inline CorollaryBounds corollary_bounds(const Graph& g, SearchLimits limits = {}) {
  const int n = g.vertex_count();
  CorollaryBounds out;
  long long budget = limits.work_budget;
  for (int h = 0; h < n; ++h) {
    if (n == 1) break;
    bool isolated = false;
    VertexSet branch = 0;
    std::vector<int> deg2;
    int edge_count = 0;
    for (int v = 0; v < n; ++v) {
      if (v == h) continue;
      int deg = detail::degree_without(g, v, h);
      if (deg == 0) isolated = true;
      if (deg != 2) {
        branch |= bit(v);
      } else {
        deg2.push_back(v);
      }
      edge_count += deg;
    }
    edge_count /= 2;
    if (isolated) continue;

    if (!out.andreae || edge_count < *out.andreae) out.andreae = edge_count;

    // Largest matching whose removal keeps minimum degree 1.
    std::vector<std::pair<int, int>> hm_edges;
    for (auto [u, v] : g.edges()) {
      if (u != h && v != h) hm_edges.emplace_back(u, v);
    }
    std::vector<int> deg_left(static_cast<size_t>(n), 0);
    for (auto [u, v] : hm_edges) {
      deg_left[static_cast<size_t>(u)] += 1;
      deg_left[static_cast<size_t>(v)] += 1;
    }
    int best_matching = 0;
    std::function<void(size_t, VertexSet, int)> match_rec = [&](size_t from, VertexSet matched,
                                                                int size) {
      if (--budget < 0) {
        out.partial = true;
        return;
      }
      if (size > best_matching) best_matching = size;
      for (size_t i = from; i < hm_edges.size(); ++i) {
        auto [u, v] = hm_edges[i];
        if (((matched >> u) & 1) != 0 || ((matched >> v) & 1) != 0) continue;
        if (deg_left[static_cast<size_t>(u)] < 2 || deg_left[static_cast<size_t>(v)] < 2) continue;
        deg_left[static_cast<size_t>(u)] -= 1;
        deg_left[static_cast<size_t>(v)] -= 1;
        match_rec(i + 1, matched | bit(u) | bit(v), size + 1);
        deg_left[static_cast<size_t>(u)] += 1;
        deg_left[static_cast<size_t>(v)] += 1;
        if (out.partial) return;
      }
    };
    match_rec(0, 0, 0);
    int sm = edge_count - best_matching;
    if (!out.simplematching || sm < *out.simplematching) out.simplematching = sm;

    std::vector<VertexSet> selections;
    if (static_cast<int>(deg2.size()) <= limits.extra_w) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << deg2.size()); ++mask) {
        VertexSet s = 0;
        for (size_t i = 0; i < deg2.size(); ++i) {
          if ((mask >> i) & 1) s |= bit(deg2[i]);
        }
        selections.push_back(s);
      }
    } else {
      out.partial = true;
      selections.push_back(0);
      VertexSet all = 0;
      for (int v : deg2) {
        selections.push_back(bit(v));
        all |= bit(v);
      }
      selections.push_back(all);
    }
    for (VertexSet s : selections) {
      if (--budget < 0) {
        out.partial = true;
        break;
      }
      VertexSet w = branch | s;
      if (w == 0) continue;
      auto threads = detail::build_threads(g, h, w);
      if (!threads) continue;
      int total = 1;
      for (const auto& p : *threads) {
        int vertex_count = p.kind == PathOrCycle::Kind::path ? p.length() + 1 : p.length();
        total += (vertex_count + 2) / 3;
      }
      if (!out.simplepaths || total < *out.simplepaths) out.simplepaths = total;
    }
  }
  return out;
}

// Bound for H obtained by decomposing a supergraph H' of which H is a
// minor: any graph avoiding an H minor also avoids an H' minor, so the H'
// bound applies. The witness model certifies the containment.
struct SupergraphBound {
  BoundReport report;
  MinorModel witness;
};

inline SupergraphBound bound_via_supergraph(const Graph& g, const Graph& h_prime,
                                            OptimizeMode mode = OptimizeMode::exhaustive,
                                            SearchLimits limits = {},
                                            long long minor_node_budget = 10'000'000) {
  MinorSearchResult found = find_minor_model(g, h_prime, minor_node_budget);
  if (found.status == MinorSearchStatus::budget_exhausted) {
    throw ResourceLimitError("bound_via_supergraph: minor search budget exhausted");
  }
  if (found.status != MinorSearchStatus::found) {
    throw std::invalid_argument(
        "bound_via_supergraph: the graph is not a minor of the proposed supergraph");
  }
  return SupergraphBound{optimize(h_prime, mode, limits), found.model};
}

// Tests whether no element of one family set lies strictly between two
// elements of another along the path. For a rooted cycle the test passes if
// it holds on either path obtained by deleting one of the two root edges.
// Family sets must consist of vertices of p.
inline bool is_non_intertwined(const PathOrCycle& p, const std::vector<VertexSet>& family) {
  VertexSet on_path = p.vertex_set();
  for (VertexSet x : family) {
    if ((x & ~on_path) != 0) {
      throw std::invalid_argument("is_non_intertwined: family element is not on the path");
    }
  }
  auto ordered_clear = [&family](const std::vector<int>& order) {
    std::array<int, 64> pos;
    pos.fill(-1);
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
    for (size_t i = 0; i < family.size(); ++i) {
      auto members = set_to_vector(family[i]);
      if (members.size() < 2) continue;
      int lo = INT_MAX;
      int hi = INT_MIN;
      for (int v : members) {
        lo = std::min(lo, pos[static_cast<size_t>(v)]);
        hi = std::max(hi, pos[static_cast<size_t>(v)]);
      }
      for (size_t j = 0; j < family.size(); ++j) {
        if (j == i) continue;
        for (int v : set_to_vector(family[j])) {
          int pv = pos[static_cast<size_t>(v)];
          if (lo < pv && pv < hi) return false;
        }
      }
    }
    return true;
  };
  if (!p.is_cycle()) return ordered_clear(p.vertices);
  std::vector<int> drop_first(p.vertices.begin() + 1, p.vertices.end());
  std::vector<int> drop_last(p.vertices.begin(), p.vertices.end() - 1);
  return ordered_clear(drop_first) || ordered_clear(drop_last);
}

}  // namespace copbound
