// Exact pursuit game solver. The game: a team of k cops picks a start
// multiset of vertices, the robber then picks a vertex, and play alternates
// with the whole cop team moving first each round; every piece may move to a
// neighbor or stay put, and the cops win when a cop shares the robber's
// vertex (placement included). Solved by retrograde breadth-first search
// over (cop multiset, robber vertex, side to move) with robber-side
// counters, which yields optimal capture horizons as a byproduct.
#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "copbound/graph.hpp"

namespace copbound {

struct SolveStats {
  std::uint64_t states = 0;  // states allocated: 2 * (multisets) * n
  // Capture horizon in rounds under optimal play from the best cop start,
  // 0 when placement alone covers every robber choice, -1 when cops lose.
  int rounds = -1;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Ranks sorted k-multisets over [0, n) by mapping to strict combinations
// (add i to the i-th entry) and using the combinatorial number system.
class MultisetIndexer {
 public:
  MultisetIndexer(int n, int k) : n_(n), k_(k) {
    int m = n + k;  // strict combinations live in [0, n + k - 1)
    binom_.assign(static_cast<size_t>(m + 1),
                  std::vector<std::uint64_t>(static_cast<size_t>(k + 1), 0));
    for (int i = 0; i <= m; ++i) {
      binom_[i][0] = 1;
      for (int j = 1; j <= std::min(i, k); ++j) {
        std::uint64_t s = binom_[i - 1][j] + binom_[i - 1][j - 1];
        if (s < binom_[i - 1][j]) s = std::numeric_limits<std::uint64_t>::max();
        binom_[i][j] = s;
      }
    }
  }

  std::uint64_t count() const { return binom_[n_ + k_ - 1][k_]; }

  std::uint64_t rank(const std::vector<int>& sorted_multiset) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i)
      r += binom_[sorted_multiset[i] + i][i + 1];
    return r;
  }

  void unrank(std::uint64_t r, std::vector<int>& out) const {
    out.assign(static_cast<size_t>(k_), 0);
    for (int i = k_ - 1; i >= 0; --i) {
      int d = i;  // smallest value with binom[d][i+1] defined is d = i
      while (d + 1 <= n_ + k_ - 1 && binom_[d + 1][i + 1] <= r) ++d;
      r -= binom_[d][i + 1];
      out[i] = d - i;
    }
  }

 private:
  int n_, k_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace detail

// Decides whether k cops win on g. Throws ResourceLimitError when the state
// space 2 * C(n+k-1, k) * n would exceed state_cap entries (memory grows
// linearly with that count, at about 3.5 bytes per entry).
inline bool cops_win(const Graph& g, int k, SolveStats* stats = nullptr,
                     std::uint64_t state_cap = 100'000'000) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("the game needs a nonempty graph");
  if (k < 1) throw std::invalid_argument("the game needs at least one cop");
  if (k >= n) {
    // One cop per vertex covers every robber placement.
    if (stats) {
      stats->states = 0;
      stats->rounds = 0;
    }
    return true;
  }
  detail::MultisetIndexer mi(n, k);
  std::uint64_t m = mi.count();
  std::uint64_t total =
      detail::saturating_mul(2, detail::saturating_mul(m, n));
  if (total > state_cap)
    throw ResourceLimitError(
        "game state space of " + std::to_string(total) +
        " entries exceeds the cap of " + std::to_string(state_cap));
  std::uint64_t per_turn = m * static_cast<std::uint64_t>(n);

  std::vector<std::uint8_t> win_cop(per_turn, 0), win_rob(per_turn, 0);
  std::vector<std::uint8_t> cnt(per_turn, 0);
  std::vector<std::uint16_t> depth_cop(per_turn, 0), depth_rob(per_turn, 0);

  std::vector<int> cops, scratch;
  std::deque<std::uint64_t> queue;  // (rank * n + robber) * 2 + turn
  constexpr int kCopTurn = 0, kRobberTurn = 1;

  // Seed captures and robber-move counters.
  for (std::uint64_t c = 0; c < m; ++c) {
    mi.unrank(c, cops);
    VertexSet occupied = set_of(cops);
    for (int r = 0; r < n; ++r) {
      std::uint64_t s = c * n + r;
      if ((occupied >> r) & 1) {
        win_cop[s] = win_rob[s] = 1;
        queue.push_back(s * 2 + kCopTurn);
        queue.push_back(s * 2 + kRobberTurn);
      } else {
        cnt[s] = static_cast<std::uint8_t>(g.degree(r) + 1);
      }
    }
  }

  // All cops move simultaneously; enumerate the reachable multisets. The
  // move relation is symmetric, so successors double as predecessors.
  std::vector<std::uint64_t> succ_ranks;
  auto cop_successors = [&](const std::vector<int>& from) {
    succ_ranks.clear();
    std::vector<int> choice(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == k) {
        scratch = choice;
        std::sort(scratch.begin(), scratch.end());
        succ_ranks.push_back(mi.rank(scratch));
        return;
      }
      choice[i] = from[i];
      self(self, i + 1);
      for (int v : g.neighbors(from[i])) {
        choice[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::sort(succ_ranks.begin(), succ_ranks.end());
    succ_ranks.erase(std::unique(succ_ranks.begin(), succ_ranks.end()),
                     succ_ranks.end());
  };

  while (!queue.empty()) {
    std::uint64_t packed = queue.front();
    queue.pop_front();
    std::uint64_t s = packed / 2;
    int turn = static_cast<int>(packed % 2);
    std::uint64_t c = s / n;
    int r = static_cast<int>(s % n);
    if (turn == kRobberTurn) {
      // Cop-turn predecessors reach this multiset in one team move.
      mi.unrank(c, cops);
      cop_successors(cops);
      for (std::uint64_t c0 : succ_ranks) {
        std::uint64_t s0 = c0 * n + r;
        if (win_cop[s0]) continue;
        win_cop[s0] = 1;
        depth_cop[s0] = static_cast<std::uint16_t>(depth_rob[s] + 1);
        queue.push_back(s0 * 2 + kCopTurn);
      }
    } else {
      // Robber-turn predecessors lose one escape option each.
      mi.unrank(c, cops);
      VertexSet occupied = set_of(cops);
      VertexSet from = g.neighbors_mask(r) | bit(r);
      for (int r0 : set_to_vector(from)) {
        if ((occupied >> r0) & 1) continue;
        std::uint64_t s0 = c * n + r0;
        if (win_rob[s0]) continue;
        if (--cnt[s0] == 0) {
          win_rob[s0] = 1;
          depth_rob[s0] = static_cast<std::uint16_t>(depth_cop[s] + 1);
          queue.push_back(s0 * 2 + kRobberTurn);
        }
      }
    }
  }

  // A start wins when every uncovered robber placement is already lost for
  // the robber; report the best capture horizon over all winning starts.
  bool win = false;
  int best_rounds = -1;
  for (std::uint64_t c = 0; c < m; ++c) {
    mi.unrank(c, cops);
    VertexSet occupied = set_of(cops);
    int worst = 0;
    bool all = true;
    for (int r = 0; r < n && all; ++r) {
      if ((occupied >> r) & 1) continue;
      std::uint64_t s = c * n + r;
      if (!win_cop[s])
        all = false;
      else
        worst = std::max(worst, static_cast<int>(depth_cop[s]));
    }
    if (all) {
      int rounds = (worst + 1) / 2;
      best_rounds = win ? std::min(best_rounds, rounds) : rounds;
      win = true;
    }
  }
  if (stats) {
    stats->states = total;
    stats->rounds = win ? best_rounds : -1;
  }
  return win;
}

struct CopNumberResult {
  // Empty when every k up to max_k loses; then cop number > max_k.
  std::optional<int> cop_number;
  int max_k = 0;
  SolveStats stats;  // from the decisive solve (largest k attempted)
};

inline CopNumberResult cop_number(const Graph& g, int max_k = 4,
                                  std::uint64_t state_cap = 100'000'000) {
  CopNumberResult out;
  out.max_k = max_k;
  for (int k = 1; k <= max_k; ++k) {
    SolveStats stats;
    bool win = cops_win(g, k, &stats, state_cap);
    out.stats = stats;
    if (win) {
      out.cop_number = k;
      return out;
    }
  }
  return out;
}

// Repeatedly deletes a vertex whose closed neighborhood is contained in
// another's (within the survivors). A graph is one-cop-win exactly when
// this reduces it to a single vertex, which makes the reduction an
// independent oracle for the k = 1 game.
inline bool is_dismantlable(const Graph& g) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("dismantlability needs a nonempty graph");
  VertexSet alive = g.vertex_mask();
  bool progress = true;
  while (set_size(alive) > 1 && progress) {
    progress = false;
    for (int u : set_to_vector(alive)) {
      VertexSet nu = (g.neighbors_mask(u) | bit(u)) & alive;
      for (int v : set_to_vector(alive)) {
        if (v == u) continue;
        VertexSet nv = (g.neighbors_mask(v) | bit(v)) & alive;
        if ((nu & ~nv) == 0) {
          alive &= ~bit(u);
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return set_size(alive) == 1;
}

}  // namespace copbound
