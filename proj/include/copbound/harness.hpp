// End-to-end verification harness: seeded corpus generation of minor-free
// graphs, empirical comparison of certified bounds against exact cop
// numbers, and the fixed regression table of family bounds. Everything here
// is deterministic for a fixed seed; corpora and report rows are sorted by
// graph6 string so output never depends on construction order.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "copbound/decomp.hpp"
#include "copbound/families.hpp"
#include "copbound/gamesolver.hpp"
#include "copbound/graph.hpp"
#include "copbound/minor.hpp"

namespace copbound {

// ---------------------------------------------------------------------------
// Corpus generation
// ---------------------------------------------------------------------------

struct CorpusOptions {
  int max_vertices = 10;
  int target_count = 100;
  unsigned seed = 1;
  // 0 means 500 * target_count.
  long long max_attempts = 0;
  std::uint64_t minor_node_budget = 10'000'000;
};

struct CorpusResult {
  // Sorted by graph6 string, duplicates removed.
  std::vector<Graph> graphs;
  bool complete = true;
  long long attempts = 0;
  std::string note;
};

namespace detail {

// Certified free of every forbidden minor; budget exhaustion counts as not
// certified so corpus members always carry a completed-search certificate.
inline bool certified_minor_free(const Graph& g, const std::vector<Graph>& forbidden,
                                 std::uint64_t node_budget) {
  for (const Graph& h : forbidden) {
    MinorSearchResult r = find_minor_model(h, g, node_budget);
    if (r.status != MinorSearchStatus::not_found) return false;
  }
  return true;
}

// Uniform random spanning structure: vertex v attaches to a uniform earlier
// vertex, giving a random recursive tree.
inline Graph random_recursive_tree(int n, std::mt19937& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

}  // namespace detail

// Connected graphs certified free of every forbidden minor, generated from a
// seeded mt19937 by two alternating strategies: random edge subsets filtered
// exactly, and random trees greedily augmented to maximal minor-free graphs.
// Stops early with a warning note when the attempt budget runs out before
// target_count distinct graphs are found.
inline CorpusResult build_corpus(const std::vector<Graph>& forbidden,
                                 const CorpusOptions& opt = {}) {
  if (forbidden.empty())
    throw std::invalid_argument("build_corpus: no forbidden graph given");
  if (opt.max_vertices < 1 || opt.max_vertices > kMaxVertices)
    throw std::invalid_argument("build_corpus: max_vertices must be in [1, " +
                                std::to_string(kMaxVertices) + "]");
  CorpusResult out;
  std::mt19937 rng(opt.seed);
  std::set<std::string> seen;
  std::map<std::string, Graph> picked;
  const long long budget =
      opt.max_attempts > 0 ? opt.max_attempts : 500LL * opt.target_count;
  std::uniform_int_distribution<int> order_draw(1, opt.max_vertices);
  std::uniform_real_distribution<double> density_draw(0.2, 0.8);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  for (out.attempts = 0;
       out.attempts < budget && static_cast<int>(picked.size()) < opt.target_count;
       ++out.attempts) {
    // Draw the order as the max of two uniforms to favour larger graphs
    // while keeping every order reachable.
    const int n = std::max(order_draw(rng), order_draw(rng));
    Graph candidate(0);
    if (out.attempts % 2 == 0) {
      Graph g(n);
      const double p = density_draw(rng);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng) < p) g.add_edge(u, v);
      if (!is_connected(g)) continue;
      if (!detail::certified_minor_free(g, forbidden, opt.minor_node_budget)) continue;
      candidate = std::move(g);
    } else {
      Graph g = detail::random_recursive_tree(n, rng);
      if (!detail::certified_minor_free(g, forbidden, opt.minor_node_budget)) continue;
      std::vector<std::pair<int, int>> gaps;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) gaps.emplace_back(u, v);
      std::shuffle(gaps.begin(), gaps.end(), rng);
      for (auto [u, v] : gaps) {
        g.add_edge(u, v);
        if (!detail::certified_minor_free(g, forbidden, opt.minor_node_budget))
          g.remove_edge(u, v);
      }
      candidate = std::move(g);
    }
    std::string g6 = write_graph6(candidate);
    if (seen.insert(g6).second) picked.emplace(std::move(g6), std::move(candidate));
  }

  for (auto& [g6, g] : picked) out.graphs.push_back(std::move(g));
  if (static_cast<int>(out.graphs.size()) < opt.target_count) {
    out.complete = false;
    out.note = "attempt budget of " + std::to_string(budget) + " exhausted after " +
               std::to_string(out.graphs.size()) + " of " +
               std::to_string(opt.target_count) + " graphs";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound verification
// ---------------------------------------------------------------------------

struct VerifyOptions {
  OptimizeMode mode = OptimizeMode::exhaustive;
  SearchLimits bound_limits{};
  std::uint64_t state_cap = 100'000'000;
  std::uint64_t minor_node_budget = 10'000'000;
  // The solver searches cop counts up to max(bound, max_k_floor), so small
  // violations are reported with their exact cop number.
  int max_k_floor = 4;
};

struct CorpusEntry {
  std::string g6;
  // Empty when the solve was refused or every searched cop count loses.
  std::optional<int> cop_number;
  int rounds = -1;
  bool exceeds_searched = false;
  bool minor_free = false;
  std::uint64_t solver_states = 0;
  std::uint64_t certificate_nodes = 0;
  std::string refusal;
};

struct VerificationReport {
  std::string forbidden;
  std::vector<std::string> forbidden_g6;
  int bound = 0;
  bool bound_partial = false;
  std::vector<CorpusEntry> corpus;
  int max_cop_number = 0;
  bool all_within_bound = true;
  bool vacuous = false;
  std::vector<std::string> skipped;
  std::vector<std::string> not_minor_free;
  // Deterministic work counters; wall clock is kept apart so serialized
  // reports stay byte-identical across runs.
  std::uint64_t total_solver_states = 0;
  std::uint64_t total_minor_nodes = 0;
  double wall_seconds = 0.0;
};

// Optimizes the forbidden graphs, solves every corpus graph exactly, and
// compares. Corpus graphs are re-certified minor-free here; a member that
// fails certification is excluded from the comparison and listed. Solver
// refusals are skipped and listed. The report invariant all_within_bound ⇔
// max_cop_number ≤ bound holds because a graph whose cop number exceeds
// every searched count is recorded as bound + 1.
inline VerificationReport verify_bound(const std::vector<Graph>& forbidden,
                                       const std::vector<std::string>& names,
                                       const std::vector<Graph>& corpus,
                                       const VerifyOptions& opt = {}) {
  if (forbidden.empty() || forbidden.size() != names.size())
    throw std::invalid_argument("verify_bound: forbidden graphs and names must align");
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  for (size_t i = 0; i < forbidden.size(); ++i) {
    report.forbidden += (i ? "+" : "") + names[i];
    report.forbidden_g6.push_back(write_graph6(forbidden[i]));
  }

  bool any_feasible = false;
  for (const Graph& h : forbidden) {
    BoundReport r = optimize(h, opt.mode, opt.bound_limits);
    if (!r.feasible) continue;
    if (!any_feasible || r.bound < report.bound) {
      report.bound = r.bound;
      report.bound_partial = r.partial;
    }
    any_feasible = true;
  }
  if (!any_feasible)
    throw std::invalid_argument(
        "verify_bound: no forbidden graph admits a decomposition, so there is no bound "
        "to verify");

  std::map<std::string, Graph> ordered;
  for (const Graph& g : corpus) ordered.emplace(write_graph6(g), g);
  const int max_k = std::max(report.bound, opt.max_k_floor);

  for (const auto& [g6, g] : ordered) {
    CorpusEntry entry;
    entry.g6 = g6;

    entry.minor_free = true;
    for (size_t i = 0; i < forbidden.size() && entry.minor_free; ++i) {
      MinorSearchResult r = find_minor_model(forbidden[i], g, opt.minor_node_budget);
      entry.certificate_nodes += r.nodes_expanded;
      report.total_minor_nodes += r.nodes_expanded;
      if (r.status == MinorSearchStatus::found) {
        entry.minor_free = false;
        entry.refusal = "contains a " + names[i] + " minor";
        report.not_minor_free.push_back(g6);
      } else if (r.status == MinorSearchStatus::budget_exhausted) {
        entry.minor_free = false;
        entry.refusal = "minor-freeness certificate incomplete: node budget exhausted";
        report.skipped.push_back(g6);
      }
    }
    if (!entry.minor_free) {
      report.corpus.push_back(std::move(entry));
      continue;
    }

    try {
      CopNumberResult r = cop_number(g, max_k, opt.state_cap);
      entry.solver_states = r.stats.states;
      report.total_solver_states += r.stats.states;
      if (r.cop_number) {
        entry.cop_number = *r.cop_number;
        entry.rounds = r.stats.rounds;
        report.max_cop_number = std::max(report.max_cop_number, *r.cop_number);
      } else {
        entry.exceeds_searched = true;
        report.max_cop_number = std::max(report.max_cop_number, report.bound + 1);
      }
    } catch (const ResourceLimitError& e) {
      entry.refusal = e.what();
      report.skipped.push_back(g6);
    }
    report.corpus.push_back(std::move(entry));
  }

  report.vacuous = report.corpus.empty();
  report.all_within_bound = report.max_cop_number <= report.bound;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// ---------------------------------------------------------------------------
// Regression table
// ---------------------------------------------------------------------------

struct RegressionRow {
  std::string name;
  // "evaluate ==", "optimize <=", or "minor <=" for the containment check
  // behind a transferred bound.
  std::string check;
  int expected = 0;
  int actual = 0;
  bool pass = false;
};

namespace detail {

inline void push_certificate_rows(std::vector<RegressionRow>& rows,
                                  const BoundCertificate& cert, int optimize_cap,
                                  const SearchLimits& limits) {
  BoundReport eval = evaluate_bound(cert.graph, cert.decomposition);
  rows.push_back(RegressionRow{cert.name, "evaluate ==", cert.bound, eval.bound,
                               eval.bound == cert.bound});
  BoundReport best = optimize(cert.graph, OptimizeMode::exhaustive, limits);
  rows.push_back(RegressionRow{cert.name, "optimize <=", optimize_cap, best.bound,
                               best.feasible && best.bound <= optimize_cap});
}

}  // namespace detail

// Fixed table of family bounds: every row recomputes a published value from
// scratch and compares. All rows must pass; callers turn any failure into a
// nonzero exit.
inline std::vector<RegressionRow> regression_suite(SearchLimits limits = {}) {
  std::vector<RegressionRow> rows;
  for (int t = 3; t <= 6; ++t)
    detail::push_certificate_rows(rows, three_row_certificate(t), t, limits);
  for (int t = 3; t <= 7; t += 2) {
    BoundCertificate cert = triangle_bundle_certificate(t);
    MinorSearchResult r = find_minor_model(complete_bipartite(2, t), cert.graph);
    rows.push_back(RegressionRow{"K2," + std::to_string(t) + " in " + cert.name,
                                 "minor <=", 1, r.status == MinorSearchStatus::found,
                                 r.status == MinorSearchStatus::found});
    detail::push_certificate_rows(rows, cert, cert.bound, limits);
  }
  for (int t = 4; t <= 6; ++t)
    detail::push_certificate_rows(rows, complete_certificate(t), complete_certificate(t).bound,
                                  limits);
  for (int t = 3; t <= 7; ++t)
    detail::push_certificate_rows(rows, wheel_certificate(t), (t + 2) / 3 + 1, limits);
  for (int i = 1; i <= 4; ++i)
    detail::push_certificate_rows(rows, petersen_certificate(i), 6, limits);
  for (int t = 2; t <= 4; ++t)
    detail::push_certificate_rows(rows, universal_theta_certificate(t), t + 2, limits);
  return rows;
}

}  // namespace copbound
