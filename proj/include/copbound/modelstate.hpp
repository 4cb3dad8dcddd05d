// Game-state bookkeeping for the multi-cop strategy on a host graph that
// forbids a decomposed minor: bags of host vertices standing in for the
// decomposition's chosen vertices, realized paths standing in for its paths,
// the robber territory, and per-cop guard sets. validate_state checks every
// machine-checkable condition of the state definition, state_less_than is
// the strict progress order on states, and extract_minor contracts a fully
// initialized state into a verified minor model of the forbidden graph.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copbound/decomp.hpp"
#include "copbound/graph.hpp"
#include "copbound/minor.hpp"

namespace copbound {

// Group id for the extra cop that exists only when the bound's indicator
// term is 1; every other group id is an index into decomposition.paths.
constexpr int kExtraCopGroup = -1;

struct GameState {
  Graph host;
  Graph forbidden;
  Decomposition decomposition;
  // w -> bag of host vertices (missing key = uninitialized).
  std::map<int, VertexSet> bags;
  // path index -> realized host path (missing key = uninitialized).
  std::map<int, PathOrCycle> model_paths;
  VertexSet territory = 0;
  // cop id -> guarded host vertices (missing key = guards nothing).
  std::map<int, VertexSet> guards;
  // cop id -> path index, or kExtraCopGroup.
  std::map<int, int> cop_groups;
};

struct StateViolation {
  // Condition number in the state definition; 0 marks cop-roster
  // bookkeeping (group sizes, extra cop presence).
  int condition = 0;
  std::string detail;
};

namespace detail {

inline bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  for (int v = 0; v < a.vertex_count(); ++v)
    if (a.neighbors_mask(v) != b.neighbors_mask(v)) return false;
  return true;
}

inline VertexSet state_bag(const GameState& st, int w) {
  auto it = st.bags.find(w);
  return it == st.bags.end() ? 0 : it->second;
}

inline VertexSet state_guard(const GameState& st, int cop) {
  auto it = st.guards.find(cop);
  return it == st.guards.end() ? 0 : it->second;
}

inline std::vector<int> cops_of_group(const GameState& st, int group) {
  std::vector<int> out;
  for (const auto& [cop, g] : st.cop_groups)
    if (g == group) out.push_back(cop);
  return out;
}

// Ends of Q aligned so the first vertex lies in the bag of P's first end.
// Returns an empty optional when neither orientation fits (a condition-2
// breach reported by the caller).
inline std::optional<PathOrCycle> align_to_first_end(const GameState& st,
                                                     const PathOrCycle& p,
                                                     const PathOrCycle& q) {
  auto [u, v] = p.ends();
  VertexSet bag_u = state_bag(st, u);
  VertexSet bag_v = state_bag(st, v);
  int front = q.vertices.front();
  int back = q.vertices.back();
  if (u == v) {
    if (((bag_u >> front) & 1) && ((bag_u >> back) & 1)) return q;
    return std::nullopt;
  }
  if (((bag_u >> front) & 1) && ((bag_v >> back) & 1)) return q;
  if (((bag_v >> front) & 1) && ((bag_u >> back) & 1)) {
    PathOrCycle r = q;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
  }
  return std::nullopt;
}

inline void check_state_shape(const GameState& st) {
  int n_paths = static_cast<int>(st.decomposition.paths.size());
  for (const auto& [w, bag] : st.bags) {
    if (!((st.decomposition.w >> w) & 1) || !st.forbidden.has_vertex(w))
      throw std::invalid_argument("state has a bag for vertex " +
                                  std::to_string(w) +
                                  " which is not a chosen vertex");
    if (bag & ~st.host.vertex_mask())
      throw std::invalid_argument("bag of vertex " + std::to_string(w) +
                                  " leaves the host vertex range");
  }
  for (const auto& [pi, q] : st.model_paths) {
    if (pi < 0 || pi >= n_paths)
      throw std::invalid_argument("state realizes path index " +
                                  std::to_string(pi) + " which does not exist");
    if (q.vertices.empty())
      throw std::invalid_argument("realized path " + std::to_string(pi) +
                                  " has no vertices; drop the key instead");
  }
  if (st.territory & ~st.host.vertex_mask())
    throw std::invalid_argument("territory leaves the host vertex range");
  for (const auto& [cop, group] : st.cop_groups) {
    if (group != kExtraCopGroup && (group < 0 || group >= n_paths))
      throw std::invalid_argument("cop " + std::to_string(cop) +
                                  " is assigned to a group that does not exist");
  }
  for (const auto& [cop, s] : st.guards) {
    if (!st.cop_groups.count(cop))
      throw std::invalid_argument("guard set for cop " + std::to_string(cop) +
                                  " which has no group assignment");
    if (s & ~st.host.vertex_mask())
      throw std::invalid_argument("guard set of cop " + std::to_string(cop) +
                                  " leaves the host vertex range");
  }
}

}  // namespace detail

// Checks the machine-checkable conditions of the state definition: (1) bags
// disjoint and connected, (2) realized paths fit the decomposition's paths
// and stay internally off the bags and off each other, (3) matched pairs
// with both ends initialized are realized, (4) the territory is a full
// component of the host minus the model, (5) at most one territory-adjacent
// vertex per bag, (6, the checkable part) guard sets avoid the territory,
// (7) the territory's coboundary is guarded, (8) guards of an initialized
// path's cops form a non-intertwined family on the realized path, (9) cops
// of an uninitialized path guard at most one end-bag vertex, (10) a
// territory-adjacent bag vertex is guarded by its assigned path's cops,
// (11) the extra cop guards nothing, plus the cop-roster sizes (condition 0).
// Throws std::invalid_argument on malformed inputs or an invalid
// decomposition.
inline std::vector<StateViolation> validate_state(const GameState& st) {
  detail::check_state_shape(st);
  BoundReport rep = evaluate_bound(st.forbidden, st.decomposition);
  std::vector<StateViolation> out;
  auto add = [&out](int condition, std::string detail) {
    out.push_back(StateViolation{condition, std::move(detail)});
  };

  const std::vector<PathOrCycle>& paths = st.decomposition.paths;
  int n_paths = static_cast<int>(paths.size());

  // (1) bags pairwise disjoint, each nonempty bag connected.
  VertexSet bag_union = 0;
  for (const auto& [w, bag] : st.bags) {
    if (bag & bag_union)
      add(1, "bag of vertex " + std::to_string(w) + " overlaps another bag");
    bag_union |= bag;
    if (bag && !is_connected_within(st.host, bag))
      add(1, "bag of vertex " + std::to_string(w) + " is not connected");
  }

  // (2) realized paths: structure, ends in the right bags, interiors off all
  // bags, pairwise internally disjoint.
  VertexSet model_vertices = bag_union;
  std::vector<int> realized;
  for (const auto& [pi, q] : st.model_paths) {
    realized.push_back(pi);
    const PathOrCycle& p = paths[static_cast<size_t>(pi)];
    if (!is_valid_path(st.host, q)) {
      add(2, "realized path " + std::to_string(pi) + " is not a path of the host");
      continue;
    }
    if (q.is_cycle() && !p.is_cycle())
      add(2, "realized path " + std::to_string(pi) +
                 " is a cycle but stands in for a path");
    if (!detail::align_to_first_end(st, p, q))
      add(2, "realized path " + std::to_string(pi) +
                 " does not end in the bags of its path's ends");
    for (int x : q.interior()) {
      if ((bag_union >> x) & 1)
        add(2, "realized path " + std::to_string(pi) +
                   " runs through a bag at vertex " + std::to_string(x));
    }
    model_vertices |= q.vertex_set();
  }
  for (size_t i = 0; i < realized.size(); ++i) {
    for (size_t j = i + 1; j < realized.size(); ++j) {
      const PathOrCycle& qi = st.model_paths.at(realized[i]);
      const PathOrCycle& qj = st.model_paths.at(realized[j]);
      VertexSet inter_i = 0, inter_j = 0;
      for (int x : qi.interior()) inter_i |= bit(x);
      for (int x : qj.interior()) inter_j |= bit(x);
      if ((inter_i & qj.vertex_set()) || (inter_j & qi.vertex_set()))
        add(2, "realized paths " + std::to_string(realized[i]) + " and " +
                   std::to_string(realized[j]) + " share an internal vertex");
    }
  }

  // (3) a matched pair with both ends initialized must be realized.
  for (int mi : st.decomposition.matching) {
    auto [u, v] = paths[static_cast<size_t>(mi)].ends();
    if (detail::state_bag(st, u) && detail::state_bag(st, v) &&
        !st.model_paths.count(mi))
      add(3, "matched pair at path " + std::to_string(mi) +
                 " has both ends initialized but is not realized");
  }

  // (4) territory is a full component of the host minus the model.
  if (!st.territory) {
    add(4, "territory is empty");
  } else if (st.territory & model_vertices) {
    add(4, "territory meets the model");
  } else {
    int root = std::countr_zero(st.territory);
    VertexSet component =
        component_of(st.host, st.host.vertex_mask() & ~model_vertices, root);
    if (component != st.territory)
      add(4, "territory is not a full component of the host minus the model");
  }

  // (5) at most one territory-adjacent vertex per bag.
  VertexSet fringe = st.host.open_neighborhood(st.territory);
  for (const auto& [w, bag] : st.bags) {
    if (set_size(bag & fringe) > 1)
      add(5, "bag of vertex " + std::to_string(w) +
                 " has more than one territory-adjacent vertex");
  }

  // (6) guard sets avoid the territory (the checkable fragment).
  VertexSet guard_union = 0;
  for (const auto& [cop, s] : st.guards) {
    if (s & st.territory)
      add(6, "guard set of cop " + std::to_string(cop) +
                 " enters the territory");
    guard_union |= s;
  }

  // (7) the coboundary of the territory is guarded.
  if (fringe & ~guard_union)
    add(7, "territory-adjacent vertex " +
               std::to_string(std::countr_zero(fringe & ~guard_union)) +
               " is unguarded");

  // (8) guards of an initialized path's cops: non-intertwined on the
  // realized path.
  for (const auto& [pi, q] : st.model_paths) {
    std::vector<VertexSet> family;
    bool off_path = false;
    for (int cop : detail::cops_of_group(st, pi)) {
      VertexSet s = detail::state_guard(st, cop);
      if (s & ~q.vertex_set()) off_path = true;
      family.push_back(s);
    }
    if (off_path) {
      add(8, "a cop of path " + std::to_string(pi) +
                 " guards a vertex off its realized path");
    } else if (is_valid_path(st.host, q) &&
               !is_non_intertwined(q, family)) {
      add(8, "guards of path " + std::to_string(pi) + " are intertwined");
    }
  }

  // (9) cops of an uninitialized path guard at most a single end-bag vertex.
  for (int pi = 0; pi < n_paths; ++pi) {
    if (st.model_paths.count(pi)) continue;
    auto [u, v] = paths[static_cast<size_t>(pi)].ends();
    VertexSet end_bags = detail::state_bag(st, u) | detail::state_bag(st, v);
    for (int cop : detail::cops_of_group(st, pi)) {
      VertexSet s = detail::state_guard(st, cop);
      if (s && (set_size(s) > 1 || (s & ~end_bags)))
        add(9, "cop " + std::to_string(cop) +
                   " of unrealized path " + std::to_string(pi) +
                   " guards more than a single end-bag vertex");
    }
  }

  // (10) a territory-adjacent bag vertex is guarded by the assigned group.
  for (const auto& [w, bag] : st.bags) {
    VertexSet adj = bag & fringe;
    if (!adj) continue;
    int x = std::countr_zero(adj);
    int group = st.decomposition.assignment.at(w);
    bool guarded = false;
    for (int cop : detail::cops_of_group(st, group))
      if ((detail::state_guard(st, cop) >> x) & 1) guarded = true;
    if (!guarded)
      add(10, "territory-adjacent bag vertex " + std::to_string(x) +
                  " is not guarded by the cops of its assigned path");
  }

  // (11) the extra cop is inactive.
  for (int cop : detail::cops_of_group(st, kExtraCopGroup)) {
    if (detail::state_guard(st, cop))
      add(11, "extra cop " + std::to_string(cop) + " is active");
  }

  // (0) cop roster: group sizes match the load formula; the extra cop exists
  // exactly when the indicator is 1.
  for (int pi = 0; pi < n_paths; ++pi) {
    int want = (rep.ell[static_cast<size_t>(pi)] + 2) / 3;
    int got = static_cast<int>(detail::cops_of_group(st, pi).size());
    if (got != want)
      add(0, "path " + std::to_string(pi) + " has " + std::to_string(got) +
                 " cops but its load asks for " + std::to_string(want));
  }
  int extras = static_cast<int>(detail::cops_of_group(st, kExtraCopGroup).size());
  if (extras != rep.indicator)
    add(0, "state has " + std::to_string(extras) +
               " extra cops but the indicator is " +
               std::to_string(rep.indicator));

  return out;
}

// Rank tuple whose lexicographic order bounds the progress order from below:
// (|territory|, total guarded vertices, initialized pieces, -total bag size).
inline std::array<long long, 4> state_rank(const GameState& st) {
  long long guard_total = 0;
  for (const auto& entry : st.guards) guard_total += set_size(entry.second);
  long long pieces = static_cast<long long>(st.model_paths.size());
  long long bag_total = 0;
  for (const auto& [w, bag] : st.bags) {
    if (bag) ++pieces;
    bag_total += set_size(bag);
  }
  return {static_cast<long long>(set_size(st.territory)), guard_total, pieces,
          -bag_total};
}

// Strict progress order: (i) the territory shrinks to a proper subset, or,
// with equal territory, (ii) fewer guarded vertices, (iii) fewer initialized
// pieces, (iv) a larger total bag size. Both states must share the same
// host, forbidden graph, and decomposition.
inline bool state_less_than(const GameState& a, const GameState& b) {
  if (!detail::graphs_equal(a.host, b.host) ||
      !detail::graphs_equal(a.forbidden, b.forbidden) ||
      a.decomposition.h != b.decomposition.h ||
      a.decomposition.w != b.decomposition.w ||
      a.decomposition.paths != b.decomposition.paths ||
      a.decomposition.matching != b.decomposition.matching ||
      a.decomposition.assignment != b.decomposition.assignment)
    throw std::invalid_argument(
        "state_less_than: states describe different games");
  if (a.territory != b.territory)
    return (a.territory & ~b.territory) == 0;
  std::array<long long, 4> ra = state_rank(a);
  std::array<long long, 4> rb = state_rank(b);
  if (ra[1] != rb[1]) return ra[1] < rb[1];
  if (ra[2] != rb[2]) return ra[2] < rb[2];
  return ra[3] < rb[3];
}

// Contracts a fully initialized valid state into a minor model of the
// forbidden graph: the territory becomes the branch set of the deleted
// vertex, each bag (plus absorbed realized-path interiors that are not
// territory-adjacent) becomes the branch set of its chosen vertex, and the
// remaining interior stretches are grouped around territory-adjacent
// vertices to become the branch sets of the path interiors. Preconditions
// beyond validity are reported by the name of the failing requirement.
inline MinorModel extract_minor(const GameState& st) {
  {
    std::vector<StateViolation> violations = validate_state(st);
    if (!violations.empty())
      throw std::invalid_argument("extract_minor: state is invalid: " +
                                  violations.front().detail);
  }
  BoundReport rep = evaluate_bound(st.forbidden, st.decomposition);
  const std::vector<PathOrCycle>& paths = st.decomposition.paths;

  for (int w : set_to_vector(st.decomposition.w)) {
    if (!detail::state_bag(st, w))
      throw std::invalid_argument(
          "extract_minor: precondition winitialized failed: vertex " +
          std::to_string(w) + " has an empty bag");
  }
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    if (!st.model_paths.count(static_cast<int>(pi)))
      throw std::invalid_argument(
          "extract_minor: precondition Pinitialized failed: path " +
          std::to_string(pi) + " is not realized");
  }
  VertexSet fringe = st.host.open_neighborhood(st.territory);
  for (int w : set_to_vector(st.decomposition.w)) {
    if (!(detail::state_bag(st, w) & fringe))
      throw std::invalid_argument(
          "extract_minor: precondition initializedvertex failed: bag of "
          "vertex " +
          std::to_string(w) + " has no territory-adjacent vertex");
  }
  VertexSet guard_seen = 0;
  for (const auto& [cop, s] : st.guards) {
    if (s & guard_seen)
      throw std::invalid_argument(
          "extract_minor: precondition sdisjoint failed: cop " +
          std::to_string(cop) + " shares a guarded vertex");
    guard_seen |= s;
    if (s & ~fringe)
      throw std::invalid_argument(
          "extract_minor: precondition sadjacent failed: cop " +
          std::to_string(cop) + " guards a vertex not adjacent to the territory");
  }
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    long long total = 0;
    for (int cop : detail::cops_of_group(st, static_cast<int>(pi)))
      total += set_size(detail::state_guard(st, cop));
    if (total < rep.ell[pi])
      throw std::invalid_argument(
          "extract_minor: precondition ellPneighbours failed: path " +
          std::to_string(pi) + " has " + std::to_string(total) +
          " guarded vertices for a load of " + std::to_string(rep.ell[pi]));
  }

  MinorModel model;
  model.branch_sets.assign(static_cast<size_t>(st.forbidden.vertex_count()), 0);
  model.branch_sets[static_cast<size_t>(st.decomposition.h)] = st.territory;
  for (int w : set_to_vector(st.decomposition.w))
    model.branch_sets[static_cast<size_t>(w)] = detail::state_bag(st, w);

  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const PathOrCycle& p = paths[pi];
    std::optional<PathOrCycle> aligned =
        detail::align_to_first_end(st, p, st.model_paths.at(static_cast<int>(pi)));
    if (!aligned)
      throw std::logic_error("extract_minor: validated path lost its ends");
    auto [u, v] = p.ends();
    std::vector<int> inter;
    for (int x : aligned->interior()) inter.push_back(x);
    int m = static_cast<int>(inter.size()) + 1;  // edges of the realized path
    int k = p.length() - 1;                      // interior branch sets needed
    auto& u_branch = model.branch_sets[static_cast<size_t>(u)];
    auto& v_branch = model.branch_sets[static_cast<size_t>(v)];

    if (k == 0) {
      // Nothing of the path survives; split its interior between the two
      // end bags at the midpoint.
      for (int i = 0; i < static_cast<int>(inter.size()); ++i) {
        if (2 * (i + 1) <= m)
          u_branch |= bit(inter[static_cast<size_t>(i)]);
        else
          v_branch |= bit(inter[static_cast<size_t>(i)]);
      }
      continue;
    }

    std::vector<int> seeds;
    for (int i = 0; i < static_cast<int>(inter.size()); ++i)
      if (st.host.neighbors_mask(inter[static_cast<size_t>(i)]) & st.territory)
        seeds.push_back(i);
    if (static_cast<int>(seeds.size()) < k)
      throw std::logic_error(
          "extract_minor: too few territory-adjacent interior vertices on "
          "path " +
          std::to_string(pi));

    for (int i = 0; i < seeds.front(); ++i)
      u_branch |= bit(inter[static_cast<size_t>(i)]);
    for (int i = seeds.back() + 1; i < static_cast<int>(inter.size()); ++i)
      v_branch |= bit(inter[static_cast<size_t>(i)]);
    for (int j = 0; j < k; ++j) {
      int from = seeds[static_cast<size_t>(j)];
      int to = (j + 1 < k) ? seeds[static_cast<size_t>(j + 1)] - 1 : seeds.back();
      VertexSet group = 0;
      for (int i = from; i <= to; ++i) group |= bit(inter[static_cast<size_t>(i)]);
      model.branch_sets[static_cast<size_t>(p.vertices[static_cast<size_t>(j + 1)])] =
          group;
    }
  }
  return model;
}

}  // namespace copbound
