// Single-cop geodesic guarding. plan_guard builds a shortest path between two
// boundary vertices of a robber territory, guard_move walks one cop along
// that path by shadowing the robber's distance from the anchored end, and
// simulate_guard drives complete, randomized, or scripted robber play to
// certify the guarding contract: standing on the anchored end at any time,
// or anywhere on the path once the cop has stabilized, means capture on the
// next cop move.
#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "copbound/graph.hpp"

namespace copbound {

struct GuardedPath {
  // vertices.front() is the anchored end the shadow is measured from.
  PathOrCycle path;
  int cop_at = 0;
  bool stabilized = false;
};

struct AdversarySpec {
  enum class Kind { exhaustive, random, scripted };
  Kind kind = Kind::exhaustive;
  // Random walks: trial i is driven by mt19937 seeded with seed + i.
  unsigned seed = 1;
  int trials = 100;
  // Scripted play: initial placement, then one destination per round
  // (repeating the current vertex means staying put).
  std::vector<int> script;
};

struct GuardTrace {
  PathOrCycle path;
  // Cop position after each cop move; robber placement, then position after
  // each robber move. For the exhaustive adversary these hold a
  // counterexample play when a certificate fails and stay empty otherwise.
  std::vector<int> cop_history;
  std::vector<int> robber_history;
  bool captured = false;
  // False when a scripted robber breaks the side conditions (an illegal
  // jump, or probing the far end before stabilization); certification stops
  // at that point instead of blaming the strategy.
  bool valid = true;
  bool guarded_u = true;
  bool guarded_path = true;
  bool shadow_kept = true;
  // Worst case rounds until the cop stabilizes or the play ends in capture.
  int stabilization_turn = -1;
  std::int64_t states_checked = 0;
  std::string note;
};

namespace detail {

inline int guard_path_index(const PathOrCycle& path, int vertex) {
  for (size_t i = 0; i < path.vertices.size(); ++i)
    if (path.vertices[i] == vertex) return static_cast<int>(i);
  return -1;
}

inline int guard_shadow(const PathOrCycle& path, const Graph& g, int robber_at) {
  int len = path.length();
  int d = distances(g, path.vertices.front())[static_cast<size_t>(robber_at)];
  if (d < 0) return len;
  return std::clamp(d, 0, len);
}

}  // namespace detail

// Shortest u-v path whose interior crosses the territory: computed in the
// graph induced on territory + {u, v} with the uv edge (if any) removed, so
// the result always has length at least 2. Ties between equally short
// parents break toward smaller vertex ids to keep plans reproducible.
inline PathOrCycle plan_guard(const Graph& g, VertexSet territory, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  territory &= g.vertex_mask();
  if (!territory) throw std::invalid_argument("plan_guard: territory is empty");
  if (!is_connected_within(g, territory))
    throw std::invalid_argument(
        "plan_guard: territory does not induce a connected subgraph");
  if (u == v) throw std::invalid_argument("plan_guard: u and v coincide");
  if (!((g.closed_neighborhood(territory) >> u) & 1))
    throw std::invalid_argument(
        "plan_guard: u is outside the closed neighborhood of the territory");
  if (!((g.open_neighborhood(territory) >> v) & 1))
    throw std::invalid_argument(
        "plan_guard: v is outside the open neighborhood of the territory");
  if (!(g.neighbors_mask(v) & (territory & ~bit(u))))
    throw std::invalid_argument(
        "plan_guard: v has no neighbor in the territory other than u");

  Graph pruned = g;
  pruned.remove_edge(u, v);
  VertexSet arena = territory | bit(u) | bit(v);
  std::vector<int> dist = distances_within(pruned, arena, u);
  if (dist[static_cast<size_t>(v)] < 0)
    throw std::invalid_argument(
        "plan_guard: v is unreachable from u through the territory");

  std::vector<int> reversed{v};
  int cur = v;
  while (cur != u) {
    VertexSet options = pruned.neighbors_mask(cur) & arena;
    int next = -1;
    for (int nb : set_to_vector(options)) {
      if (dist[static_cast<size_t>(nb)] == dist[static_cast<size_t>(cur)] - 1) {
        next = nb;
        break;
      }
    }
    cur = next;
    reversed.push_back(cur);
  }
  std::reverse(reversed.begin(), reversed.end());
  return PathOrCycle{std::move(reversed), PathOrCycle::Kind::path};
}

// One cop move. Captures any robber within one step; otherwise steps along
// the path toward the robber's shadow, the path vertex whose index is the
// robber's distance from the anchored end (clamped to the path). Declared
// stabilized as soon as the cop stands on the shadow; from then on one step
// per turn suffices to stay there because the shadow moves at most one index
// per robber move. g must be the graph the path was planned in.
inline int guard_move(GuardedPath& state, int robber_at, const Graph& g) {
  g.check_vertex(robber_at);
  g.check_vertex(state.cop_at);
  if (robber_at == state.cop_at || g.has_edge(state.cop_at, robber_at)) {
    state.cop_at = robber_at;
    return robber_at;
  }
  int target = detail::guard_shadow(state.path, g, robber_at);
  int at = detail::guard_path_index(state.path, state.cop_at);
  if (at < 0) {
    // Off the path entirely: approach the shadow vertex one step at a time.
    int goal = state.path.vertices[static_cast<size_t>(target)];
    std::vector<int> dist = distances(g, goal);
    auto cost = [&dist](int x) {
      int d = dist[static_cast<size_t>(x)];
      return d < 0 ? INT_MAX : d;
    };
    int best = state.cop_at;
    for (int nb : g.neighbors(state.cop_at))
      if (cost(nb) < cost(best)) best = nb;
    state.cop_at = best;
    return state.cop_at;
  }
  if (at < target) ++at;
  else if (at > target) --at;
  state.cop_at = state.path.vertices[static_cast<size_t>(at)];
  if (at == target) state.stabilized = true;
  return state.cop_at;
}

namespace detail {

struct GuardArena {
  // Induced on territory + {u, v} with the uv edge removed; both players act
  // here (conforming robbers never leave it, and every cop move in it is a
  // legal move of the original graph).
  Graph guard_graph;
  PathOrCycle path;
  VertexSet territory = 0;
  int u = 0;
  int v = 0;
};

inline GuardArena make_guard_arena(const Graph& g, VertexSet territory, int u,
                                   int v) {
  GuardArena a;
  a.path = plan_guard(g, territory, u, v);
  a.territory = territory & g.vertex_mask();
  a.u = u;
  a.v = v;
  VertexSet arena = a.territory | bit(u) | bit(v);
  Graph pruned(g.vertex_count());
  for (auto [x, y] : g.edges()) {
    if (!((arena >> x) & 1) || !((arena >> y) & 1)) continue;
    if ((x == u && y == v) || (x == v && y == u)) continue;
    pruned.add_edge(x, y);
  }
  a.guard_graph = std::move(pruned);
  return a;
}

// Destinations a conforming robber may pick: stay put, move within the
// territory, probe the anchored end at any time, probe the far end only once
// the cop has stabilized.
inline VertexSet conforming_dests(const GuardArena& a, int robber_at,
                                  bool stabilized) {
  VertexSet allowed = a.territory | bit(a.u);
  if (stabilized) allowed |= bit(a.v);
  return (a.guard_graph.neighbors_mask(robber_at) & allowed) | bit(robber_at);
}

struct GuardCheck {
  bool captured = false;
  bool guarded_u = true;
  bool guarded_path = true;
  bool shadow_kept = true;
};

// Runs one cop move with its certificates: anchored-end entry and (once
// stabilized) path entry must be answered by capture, and a stabilized cop
// must land exactly on the robber's shadow.
inline GuardCheck certified_move(const GuardArena& a, GuardedPath& st,
                                 int robber_at) {
  GuardCheck c;
  bool was_stabilized = st.stabilized;
  int mv = guard_move(st, robber_at, a.guard_graph);
  c.captured = (mv == robber_at);
  if (c.captured) return c;
  if (robber_at == a.u) c.guarded_u = false;
  if (was_stabilized && guard_path_index(a.path, robber_at) >= 0)
    c.guarded_path = false;
  if (st.stabilized) {
    int shadow = guard_shadow(a.path, a.guard_graph, robber_at);
    if (st.cop_at != a.path.vertices[static_cast<size_t>(shadow)])
      c.shadow_kept = false;
  }
  return c;
}

inline int guard_state_key(int cop, int robber, bool stabilized) {
  return ((cop << 6) | robber) << 1 | (stabilized ? 1 : 0);
}

// Worst case rounds until the cop stabilizes or captures, maximized over
// conforming robber play from the given position. INT_MAX / 2 marks a cycle,
// which would mean the robber can postpone stabilization forever.
inline int worst_stabilization(const GuardArena& a,
                               std::unordered_map<int, int>& memo,
                               int cop, int robber) {
  constexpr int kInf = INT_MAX / 2;
  int key = guard_state_key(cop, robber, false);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = kInf;  // on-stack marker: revisiting means a cycle
  GuardedPath st{a.path, cop, false};
  int mv = guard_move(st, robber, a.guard_graph);
  int result = 1;
  if (mv != robber && !st.stabilized) {
    int worst = 0;
    for (int dest : set_to_vector(conforming_dests(a, robber, false))) {
      if (dest == st.cop_at) continue;  // walking into the cop ends the play
      worst = std::max(worst, worst_stabilization(a, memo, st.cop_at, dest));
    }
    result = worst >= kInf ? kInf : 1 + worst;
  }
  memo[key] = result;
  return result;
}

// Replays a sequence of robber positions (placement first) and records the
// full trace with certificates.
inline GuardTrace replay_robber(const GuardArena& a,
                                const std::vector<int>& robber_positions) {
  GuardTrace t;
  t.path = a.path;
  GuardedPath st{a.path, a.u, false};
  t.robber_history.push_back(robber_positions.front());
  for (size_t i = 0; i < robber_positions.size(); ++i) {
    int robber_at = robber_positions[i];
    if (robber_at == st.cop_at) {  // robber stepped onto the cop
      t.captured = true;
      break;
    }
    bool first_stable = !st.stabilized;
    GuardCheck c = certified_move(a, st, robber_at);
    t.cop_history.push_back(st.cop_at);
    t.guarded_u = t.guarded_u && c.guarded_u;
    t.guarded_path = t.guarded_path && c.guarded_path;
    t.shadow_kept = t.shadow_kept && c.shadow_kept;
    if (c.captured) {
      t.captured = true;
      if (t.stabilization_turn < 0) t.stabilization_turn = static_cast<int>(i) + 1;
      break;
    }
    if (first_stable && st.stabilized && t.stabilization_turn < 0)
      t.stabilization_turn = static_cast<int>(i) + 1;
    if (i + 1 < robber_positions.size())
      t.robber_history.push_back(robber_positions[i + 1]);
  }
  return t;
}

inline GuardTrace simulate_exhaustive(const GuardArena& a, int max_turns) {
  GuardTrace summary;
  summary.path = a.path;
  std::vector<int> placements = set_to_vector(a.territory & ~bit(a.u));
  if (placements.empty()) {
    summary.note = "territory leaves the robber nowhere to start";
    return summary;
  }

  struct Node {
    int cop;
    int robber;
    bool stabilized;
    int depth;
  };
  std::unordered_map<int, int> parent;  // state key -> parent state key
  std::vector<Node> queue;
  auto push = [&](int cop, int robber, bool stabilized, int depth, int from) {
    int key = guard_state_key(cop, robber, stabilized);
    if (parent.count(key)) return;
    parent[key] = from;
    queue.push_back(Node{cop, robber, stabilized, depth});
  };
  for (int r : placements) push(a.u, r, false, 0, -1);

  auto rebuild = [&](int key) {
    std::vector<int> robbers;
    for (int k = key; k >= 0; k = parent[k]) robbers.push_back((k >> 1) & 63);
    std::reverse(robbers.begin(), robbers.end());
    return replay_robber(a, robbers);
  };

  bool truncated = false;
  for (size_t head = 0; head < queue.size(); ++head) {
    Node n = queue[head];
    int key = guard_state_key(n.cop, n.robber, n.stabilized);
    GuardedPath st{a.path, n.cop, n.stabilized};
    GuardCheck c = certified_move(a, st, n.robber);
    if (!c.guarded_u || !c.guarded_path || !c.shadow_kept) {
      GuardTrace t = rebuild(key);
      t.states_checked = static_cast<std::int64_t>(head) + 1;
      t.note = "certificate breach reached by the replayed play";
      return t;
    }
    if (c.captured) continue;
    if (n.depth >= max_turns) {
      truncated = true;
      continue;
    }
    for (int dest : set_to_vector(conforming_dests(a, n.robber, st.stabilized))) {
      if (dest == st.cop_at) continue;
      push(st.cop_at, dest, st.stabilized, n.depth + 1, key);
    }
  }

  summary.states_checked = static_cast<std::int64_t>(queue.size());
  std::unordered_map<int, int> memo;
  int worst = 0;
  for (int r : placements)
    worst = std::max(worst, worst_stabilization(a, memo, a.u, r));
  summary.stabilization_turn = worst;
  summary.note = truncated
                     ? "certified up to the turn horizon only"
                     : "every reachable robber play certified";
  return summary;
}

inline GuardTrace simulate_random(const GuardArena& a, unsigned seed, int trials,
                                  int max_turns) {
  GuardTrace last;
  last.path = a.path;
  std::vector<int> placements = set_to_vector(a.territory & ~bit(a.u));
  if (placements.empty()) {
    last.note = "territory leaves the robber nowhere to start";
    return last;
  }
  int worst_stab = -1;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937 rng(seed + static_cast<unsigned>(trial));
    std::vector<int> play;
    play.push_back(placements[rng() % placements.size()]);
    GuardedPath st{a.path, a.u, false};
    for (int turn = 0; turn < max_turns; ++turn) {
      GuardedPath peek = st;
      int mv = guard_move(peek, play.back(), a.guard_graph);
      if (mv == play.back()) break;
      st = peek;
      std::vector<int> dests =
          set_to_vector(conforming_dests(a, play.back(), st.stabilized));
      play.push_back(dests[rng() % dests.size()]);
      if (play.back() == st.cop_at) break;
    }
    GuardTrace t = replay_robber(a, play);
    t.states_checked = trial + 1;
    worst_stab = std::max(worst_stab, t.stabilization_turn);
    if (!t.guarded_u || !t.guarded_path || !t.shadow_kept) {
      t.note = "certificate breach in a random trial";
      return t;
    }
    last = std::move(t);
  }
  last.stabilization_turn = worst_stab;
  last.note = "all random trials certified";
  return last;
}

inline GuardTrace simulate_scripted(const GuardArena& a,
                                    const std::vector<int>& script,
                                    int max_turns) {
  GuardTrace t;
  t.path = a.path;
  if (script.empty()) {
    t.valid = false;
    t.note = "script has no robber placement";
    return t;
  }
  if (!((a.territory >> script.front()) & 1)) {
    t.valid = false;
    t.note = "script places the robber outside the territory";
    return t;
  }
  // Validate the script move by move against the side conditions, then
  // certify only the conforming prefix.
  std::vector<int> prefix{script.front()};
  GuardedPath st{a.path, a.u, false};
  size_t steps = std::min(script.size(), static_cast<size_t>(max_turns) + 1);
  for (size_t i = 1; i < steps; ++i) {
    GuardedPath peek = st;
    int mv = guard_move(peek, prefix.back(), a.guard_graph);
    if (mv == prefix.back()) break;
    st = peek;
    int dest = script[i];
    if (!a.guard_graph.has_vertex(dest)) {
      t.valid = false;
      t.note = "script leaves the vertex range";
      break;
    }
    if (dest == a.v && !st.stabilized) {
      t.valid = false;
      t.note = "script probes the far end before stabilization";
      break;
    }
    VertexSet ok = conforming_dests(a, prefix.back(), st.stabilized);
    if (!((ok >> dest) & 1)) {
      t.valid = false;
      t.note = "script breaks the territory side condition";
      break;
    }
    prefix.push_back(dest);
    if (dest == st.cop_at) break;
  }
  GuardTrace replayed = replay_robber(a, prefix);
  replayed.valid = t.valid;
  replayed.note = t.note;
  return replayed;
}

}  // namespace detail

// Plans the path, starts the cop on the anchored end, and drives the chosen
// adversary for at most max_turns rounds (cop moves first each round).
inline GuardTrace simulate_guard(const Graph& g, VertexSet territory, int u,
                                 int v, const AdversarySpec& robber,
                                 int max_turns) {
  detail::GuardArena arena = detail::make_guard_arena(g, territory, u, v);
  switch (robber.kind) {
    case AdversarySpec::Kind::exhaustive:
      return detail::simulate_exhaustive(arena, max_turns);
    case AdversarySpec::Kind::random:
      return detail::simulate_random(arena, robber.seed, robber.trials,
                                     max_turns);
    case AdversarySpec::Kind::scripted:
      return detail::simulate_scripted(arena, robber.script, max_turns);
  }
  throw std::logic_error("unreachable adversary kind");
}

}  // namespace copbound
