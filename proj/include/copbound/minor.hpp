// Minor containment for small graphs: branch sets are connected, pairwise
// disjoint vertex sets of the host, one per pattern vertex, with a host edge
// between the sets of every pattern edge. The searcher is an exact
// branch-and-bound with an explicit node budget; exceeding the budget is
// reported as its own outcome, never as a verdict.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copbound/graph.hpp"

namespace copbound {

struct MinorModel {
  // branch_sets[u] = host vertices standing in for pattern vertex u.
  std::vector<VertexSet> branch_sets;
};

// Checks every clause of the minor-model definition. On failure, stores a
// description in *why when why is non-null.
inline bool verify_minor_model(const Graph& pattern, const Graph& host,
                               const MinorModel& model,
                               std::string* why = nullptr) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (static_cast<int>(model.branch_sets.size()) != pattern.vertex_count())
    return fail("model has " + std::to_string(model.branch_sets.size()) +
                " branch sets for a pattern of order " +
                std::to_string(pattern.vertex_count()));
  VertexSet seen = 0;
  for (int u = 0; u < pattern.vertex_count(); ++u) {
    VertexSet b = model.branch_sets[u];
    if (!b) return fail("branch set " + std::to_string(u) + " is empty");
    if (b & ~host.vertex_mask())
      return fail("branch set " + std::to_string(u) +
                  " leaves the host vertex range");
    if (b & seen)
      return fail("branch set " + std::to_string(u) +
                  " overlaps an earlier branch set");
    seen |= b;
    if (!is_connected_within(host, b))
      return fail("branch set " + std::to_string(u) +
                  " is not connected in the host");
  }
  for (auto [u, v] : pattern.edges()) {
    if (!(host.open_neighborhood(model.branch_sets[u]) &
          model.branch_sets[v]))
      return fail("no host edge between branch sets " + std::to_string(u) +
                  " and " + std::to_string(v));
  }
  return true;
}

enum class MinorSearchStatus { found, not_found, budget_exhausted };

struct MinorSearchResult {
  MinorSearchStatus status = MinorSearchStatus::not_found;
  MinorModel model;  // meaningful only when status == found
  std::uint64_t nodes_expanded = 0;
};

namespace detail {

class MinorSearcher {
 public:
  MinorSearcher(const Graph& pattern, const Graph& host,
                std::uint64_t node_budget)
      : h_(pattern), g_(host), budget_(node_budget) {}

  MinorSearchResult run() {
    int hn = h_.vertex_count();
    if (hn > g_.vertex_count() || h_.edge_count() > g_.edge_count())
      return {MinorSearchStatus::not_found, {}, 0};
    build_order();
    sets_.assign(static_cast<size_t>(hn), 0);
    MinorSearchResult out;
    if (place(0, g_.vertex_mask())) {
      out.status = MinorSearchStatus::found;
      out.model.branch_sets = sets_;
    } else {
      out.status = exhausted_ ? MinorSearchStatus::budget_exhausted
                              : MinorSearchStatus::not_found;
    }
    out.nodes_expanded = nodes_;
    return out;
  }

 private:
  struct Level {
    size_t idx;
    int u;
    VertexSet avail;
    std::vector<VertexSet> hits;  // host neighborhoods of placed h-neighbors
    int max_size;
  };

  // Most-constrained-first: start at maximum degree, then prefer pattern
  // vertices with the most already-placed neighbors.
  void build_order() {
    int hn = h_.vertex_count();
    std::vector<bool> placed(static_cast<size_t>(hn), false);
    order_.clear();
    for (int step = 0; step < hn; ++step) {
      int best = -1, best_placed = -1, best_deg = -1;
      for (int v = 0; v < hn; ++v) {
        if (placed[v]) continue;
        int np = 0;
        for (int w : h_.neighbors(v))
          if (placed[w]) ++np;
        if (np > best_placed ||
            (np == best_placed && h_.degree(v) > best_deg)) {
          best = v;
          best_placed = np;
          best_deg = h_.degree(v);
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    pos_.assign(static_cast<size_t>(hn), 0);
    for (size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
    // later_[i] = pattern vertices placed strictly after position i.
    later_.assign(order_.size(), 0);
    for (size_t i = 0; i < order_.size(); ++i)
      for (size_t j = i + 1; j < order_.size(); ++j)
        later_[i] |= bit(order_[j]);
    // Pattern twins are interchangeable by an automorphism, so their branch
    // sets can be forced into increasing minimum-element order.
    twin_before_.assign(order_.size(), {});
    for (size_t j = 0; j < order_.size(); ++j)
      for (size_t i = 0; i < j; ++i) {
        int a = order_[i], b = order_[j];
        if ((h_.neighbors_mask(a) & ~bit(b)) ==
            (h_.neighbors_mask(b) & ~bit(a)))
          twin_before_[j].push_back(i);
      }
  }

  bool tick() {
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool place(size_t idx, VertexSet avail) {
    if (idx == order_.size()) return true;
    if (!tick()) return false;
    if (set_size(avail) < static_cast<int>(order_.size() - idx)) return false;
    Level lv;
    lv.idx = idx;
    lv.u = order_[idx];
    lv.avail = avail;
    for (int w : h_.neighbors(lv.u)) {
      if (pos_[w] >= idx) continue;
      VertexSet t = g_.open_neighborhood(sets_[w]) & avail;
      if (!t) return false;
      lv.hits.push_back(t);
    }
    lv.max_size = set_size(avail) - static_cast<int>(order_.size() - idx - 1);
    int seed_floor = -1;
    for (size_t i : twin_before_[idx])
      seed_floor = std::max(seed_floor,
                            std::countr_zero(sets_[order_[i]]));
    VertexSet banned = 0;
    for (int s : set_to_vector(avail)) {
      if (s <= seed_floor) {
        banned |= bit(s);
        continue;
      }
      if (grow(lv, bit(s), g_.neighbors_mask(s) & avail & ~banned & ~bit(s),
               banned))
        return true;
      if (exhausted_) return false;
      banned |= bit(s);
    }
    return false;
  }

  bool grow(Level& lv, VertexSet b, VertexSet frontier, VertexSet banned) {
    if (!tick()) return false;
    VertexSet reachable = b | (lv.avail & ~banned);
    for (VertexSet t : lv.hits)
      if (!(t & reachable)) return false;
    if (try_close(lv, b)) return true;
    if (exhausted_) return false;
    if (set_size(b) >= lv.max_size) return false;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      VertexSet b2 = b | bit(v);
      VertexSet f2 =
          (frontier | (g_.neighbors_mask(v) & lv.avail)) & ~b2 & ~banned;
      if (grow(lv, b2, f2, banned)) return true;
      if (exhausted_) return false;
      banned |= bit(v);
    }
    return false;
  }

  bool try_close(Level& lv, VertexSet b) {
    for (VertexSet t : lv.hits)
      if (!(t & b)) return false;
    VertexSet avail2 = lv.avail & ~b;
    sets_[lv.u] = b;
    // Every placed pattern vertex with unplaced neighbors needs that many
    // distinct host vertices left next to its branch set.
    for (size_t j = 0; j <= lv.idx; ++j) {
      int w = order_[j];
      int need = std::popcount(h_.neighbors_mask(w) & later_[lv.idx]);
      if (need == 0) continue;
      if (set_size(g_.open_neighborhood(sets_[w]) & avail2) < need) {
        sets_[lv.u] = 0;
        return false;
      }
    }
    if (place(lv.idx + 1, avail2)) return true;
    sets_[lv.u] = 0;
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> order_;
  std::vector<size_t> pos_;
  std::vector<VertexSet> later_;
  std::vector<std::vector<size_t>> twin_before_;
  std::vector<VertexSet> sets_;
};

}  // namespace detail

inline MinorSearchResult find_minor_model(
    const Graph& pattern, const Graph& host,
    std::uint64_t node_budget = 10'000'000) {
  return detail::MinorSearcher(pattern, host, node_budget).run();
}

struct MinorFreeLimits {
  std::uint64_t node_budget = 10'000'000;
  // Hosts above this order are refused outright; raise it deliberately when
  // a specific larger instance is known to be tractable.
  int max_host_order = 12;
};

// True when the host provably contains no pattern minor. Throws
// ResourceLimitError instead of guessing when the search is refused or runs
// out of budget.
inline bool is_minor_free(const Graph& host, const Graph& pattern,
                          MinorFreeLimits limits = {}) {
  if (host.vertex_count() > limits.max_host_order)
    throw ResourceLimitError(
        "minor-freeness check refused: host order " +
        std::to_string(host.vertex_count()) + " exceeds the cap of " +
        std::to_string(limits.max_host_order));
  MinorSearchResult r = find_minor_model(pattern, host, limits.node_budget);
  if (r.status == MinorSearchStatus::budget_exhausted)
    throw ResourceLimitError(
        "minor-freeness check exhausted its node budget of " +
        std::to_string(limits.node_budget));
  return r.status == MinorSearchStatus::not_found;
}

}  // namespace copbound
