// Command-line surface for the library: certified bounds, exact cop numbers,
// minor search, guard simulation, state checking, corpus generation, and the
// end-to-end verification and regression harnesses. Human-readable tables go
// to standard output; --json writes the machine report to a file. Exit codes:
// 0 ok, 1 violation found, 2 resource refusal.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "copbound/decomp.hpp"
#include "copbound/gamesolver.hpp"
#include "copbound/graph.hpp"
#include "copbound/guard.hpp"
#include "copbound/harness.hpp"
#include "copbound/jsonio.hpp"
#include "copbound/minor.hpp"
#include "copbound/modelstate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitRefused = 2;

// A graph argument is a file of graph6 lines (first line is taken) or a spec
// string like "K3,4" or "dodecahedron".
copbound::Graph resolve_graph(const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return copbound::parse_graph6(line);
    }
    throw std::invalid_argument("file " + arg + " contains no graph6 line");
  }
  return copbound::parse_graph_spec(arg);
}

std::vector<copbound::Graph> load_graph6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open " + path);
  std::vector<copbound::Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(copbound::parse_graph6(line));
  }
  return out;
}

copbound::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open " + path);
  copbound::json j;
  in >> j;
  return j;
}

void emit_json(const copbound::json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out.good()) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

// Memory cap in bytes, resolved as flag > COPBOUND_MEM_CAP > default, then
// converted to solver state entries (about 4 bytes each).
std::uint64_t resolve_state_cap(std::uint64_t flag_bytes) {
  std::uint64_t bytes = 400'000'000;
  if (const char* env = std::getenv("COPBOUND_MEM_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) bytes = parsed;
  }
  if (flag_bytes > 0) bytes = flag_bytes;
  return bytes / 4;
}

std::vector<int> parse_vertex_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

struct ForbiddenArgs {
  std::string primary;
  std::vector<std::string> also;

  std::vector<copbound::Graph> graphs() const {
    std::vector<copbound::Graph> out{resolve_graph(primary)};
    for (const std::string& spec : also) out.push_back(resolve_graph(spec));
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out{primary};
    for (const std::string& spec : also) out.push_back(spec);
    return out;
  }
};

int run_bound(const std::string& graph_arg, const std::string& mode_name,
              const std::string& via_arg, const std::string& json_path) {
  copbound::OptimizeMode mode = mode_name == "greedy" ? copbound::OptimizeMode::greedy
                                                      : copbound::OptimizeMode::exhaustive;
  copbound::Graph h = resolve_graph(graph_arg);
  copbound::json out;
  out["graph"] = copbound::write_graph6(h);
  copbound::BoundReport report;
  if (!via_arg.empty()) {
    copbound::Graph h_prime = resolve_graph(via_arg);
    copbound::SupergraphBound sb = copbound::bound_via_supergraph(h, h_prime, mode);
    report = sb.report;
    out["via"] = copbound::write_graph6(h_prime);
    out["witness"] = copbound::minor_model_to_json(sb.witness);
    out.update(copbound::bound_report_to_json(report));
    out["corollaries"] = copbound::corollaries_to_json(copbound::corollary_bounds(h_prime));
  } else {
    report = copbound::optimize(h, mode);
    out.update(copbound::bound_report_to_json(report));
    out["corollaries"] = copbound::corollaries_to_json(copbound::corollary_bounds(h));
  }
  emit_json(out, json_path);

  if (!report.feasible) {
    std::printf("no decomposition exists for %s\n", graph_arg.c_str());
    if (!report.note.empty()) std::printf("note: %s\n", report.note.c_str());
    return kExitOk;
  }
  std::printf("graph        %s\n", graph_arg.c_str());
  if (!via_arg.empty()) std::printf("via          %s\n", via_arg.c_str());
  std::printf("bound        %d\n", report.bound);
  std::printf("indicator    %d\n", report.indicator);
  std::printf("h            %d\n", report.decomposition.h);
  std::printf("W           ");
  for (int v : copbound::set_to_vector(report.decomposition.w)) std::printf(" %d", v);
  std::printf("\nloads       ");
  for (int ell : report.ell) std::printf(" %d", ell);
  std::printf("\n");
  if (report.partial) std::printf("search was cut short; the bound may not be minimal\n");
  return kExitOk;
}

int run_copnumber(const std::string& graph_arg, int max_k, std::uint64_t mem_cap,
                  const std::string& json_path) {
  copbound::Graph g = resolve_graph(graph_arg);
  copbound::json out;
  out["graph"] = copbound::write_graph6(g);
  try {
    copbound::CopNumberResult r = copbound::cop_number(g, max_k, resolve_state_cap(mem_cap));
    out["states"] = r.stats.states;
    if (r.cop_number) {
      out["cop_number"] = *r.cop_number;
      out["rounds"] = r.stats.rounds;
      std::printf("cop number   %d\nrounds       %d\nstates       %llu\n", *r.cop_number,
                  r.stats.rounds, static_cast<unsigned long long>(r.stats.states));
    } else {
      out["cop_number"] = nullptr;
      out["exceeds_max"] = r.max_k;
      std::printf("cop number exceeds %d\nstates       %llu\n", r.max_k,
                  static_cast<unsigned long long>(r.stats.states));
    }
    emit_json(out, json_path);
    return kExitOk;
  } catch (const copbound::ResourceLimitError& e) {
    out["refused"] = e.what();
    emit_json(out, json_path);
    std::fprintf(stderr, "refused: %s\n", e.what());
    return kExitRefused;
  }
}

int run_minor(const std::string& pattern_arg, const std::string& host_arg,
              std::uint64_t budget, const std::string& json_path) {
  copbound::Graph pattern = resolve_graph(pattern_arg);
  copbound::Graph host = resolve_graph(host_arg);
  copbound::MinorSearchResult r = copbound::find_minor_model(pattern, host, budget);
  copbound::json out;
  out["pattern"] = copbound::write_graph6(pattern);
  out["host"] = copbound::write_graph6(host);
  out["nodes_expanded"] = r.nodes_expanded;
  switch (r.status) {
    case copbound::MinorSearchStatus::found:
      out["result"] = "found";
      out["model"] = copbound::minor_model_to_json(r.model);
      break;
    case copbound::MinorSearchStatus::not_found:
      out["result"] = "not_found";
      break;
    case copbound::MinorSearchStatus::budget_exhausted:
      out["result"] = "budget_exhausted";
      break;
  }
  emit_json(out, json_path);
  std::printf("%s (%llu nodes)\n", out["result"].get<std::string>().c_str(),
              static_cast<unsigned long long>(r.nodes_expanded));
  return r.status == copbound::MinorSearchStatus::budget_exhausted ? kExitRefused : kExitOk;
}

int run_guard_sim(const std::string& graph_arg, const std::string& territory_csv, int u,
                  int v, const std::string& adversary, int trials, unsigned seed,
                  int max_turns, const std::string& script_csv,
                  const std::string& json_path) {
  copbound::Graph g = resolve_graph(graph_arg);
  copbound::VertexSet territory = 0;
  for (int x : parse_vertex_list(territory_csv)) territory |= copbound::bit(x);
  copbound::AdversarySpec spec;
  if (adversary == "exhaustive") {
    spec.kind = copbound::AdversarySpec::Kind::exhaustive;
  } else if (adversary == "random") {
    spec.kind = copbound::AdversarySpec::Kind::random;
  } else if (adversary == "scripted") {
    spec.kind = copbound::AdversarySpec::Kind::scripted;
    spec.script = parse_vertex_list(script_csv);
  } else {
    throw std::invalid_argument("adversary must be exhaustive, random, or scripted");
  }
  spec.trials = trials;
  spec.seed = seed;
  if (max_turns <= 0) max_turns = 3 * g.vertex_count();

  copbound::GuardTrace trace = copbound::simulate_guard(g, territory, u, v, spec, max_turns);
  copbound::json out;
  out["graph"] = copbound::write_graph6(g);
  out["path"] = trace.path.vertices;
  out["captured"] = trace.captured;
  out["valid"] = trace.valid;
  out["guarded_u"] = trace.guarded_u;
  out["guarded_path"] = trace.guarded_path;
  out["shadow_kept"] = trace.shadow_kept;
  out["stabilization_turn"] = trace.stabilization_turn;
  out["states_checked"] = trace.states_checked;
  out["cop_history"] = trace.cop_history;
  out["robber_history"] = trace.robber_history;
  if (!trace.note.empty()) out["note"] = trace.note;
  emit_json(out, json_path);

  const bool held = trace.guarded_u && trace.guarded_path && trace.shadow_kept;
  std::printf("path        ");
  for (int x : trace.path.vertices) std::printf(" %d", x);
  std::printf("\ncontract     %s\nstabilized   turn %d\nstates       %lld\n",
              held ? "held" : "BREACHED", trace.stabilization_turn,
              static_cast<long long>(trace.states_checked));
  return held ? kExitOk : kExitViolation;
}

int run_state_check(const std::string& state_path, const std::string& json_path) {
  copbound::json out;
  try {
    copbound::GameState st = copbound::game_state_from_json(load_json_file(state_path));
    std::vector<copbound::StateViolation> violations = copbound::validate_state(st);
    out["valid"] = violations.empty();
    out["violations"] = copbound::violations_to_json(violations);
    emit_json(out, json_path);
    if (violations.empty()) {
      std::printf("valid\n");
      return kExitOk;
    }
    for (const auto& violation : violations)
      std::printf("condition %d: %s\n", violation.condition, violation.detail.c_str());
    return kExitViolation;
  } catch (const std::exception& e) {
    out["valid"] = false;
    out["error"] = e.what();
    emit_json(out, json_path);
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
}

int run_state_extract(const std::string& state_path, const std::string& json_path) {
  copbound::json out;
  try {
    copbound::GameState st = copbound::game_state_from_json(load_json_file(state_path));
    copbound::MinorModel model = copbound::extract_minor(st);
    std::string why;
    const bool ok = copbound::verify_minor_model(st.forbidden, st.host, model, &why);
    out["pattern"] = copbound::write_graph6(st.forbidden);
    out["host"] = copbound::write_graph6(st.host);
    out["model"] = copbound::minor_model_to_json(model);
    out["verified"] = ok;
    if (!ok) out["why"] = why;
    emit_json(out, json_path);
    std::printf("%s\n", ok ? "extracted and verified" : ("NOT a model: " + why).c_str());
    return ok ? kExitOk : kExitViolation;
  } catch (const std::exception& e) {
    out["error"] = e.what();
    emit_json(out, json_path);
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
}

int run_corpus(const ForbiddenArgs& forbidden, int max_n, int count, unsigned seed,
               long long attempts, const std::string& out_path,
               const std::string& json_path) {
  copbound::CorpusOptions opt;
  opt.max_vertices = max_n;
  opt.target_count = count;
  opt.seed = seed;
  opt.max_attempts = attempts;
  copbound::CorpusResult r = copbound::build_corpus(forbidden.graphs(), opt);

  std::vector<std::string> lines;
  for (const copbound::Graph& g : r.graphs) lines.push_back(copbound::write_graph6(g));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out.good()) throw std::invalid_argument("cannot write " + out_path);
    for (const std::string& line : lines) out << line << "\n";
  } else {
    for (const std::string& line : lines) std::printf("%s\n", line.c_str());
  }

  copbound::json j;
  j["forbidden"] = forbidden.names();
  j["count"] = lines.size();
  j["complete"] = r.complete;
  j["attempts"] = r.attempts;
  if (!r.note.empty()) j["note"] = r.note;
  j["graphs"] = lines;
  emit_json(j, json_path);

  if (!r.complete) std::fprintf(stderr, "warning: %s\n", r.note.c_str());
  return kExitOk;
}

int run_verify(const ForbiddenArgs& forbidden, const std::string& corpus_path, int max_n,
               int count, unsigned seed, std::uint64_t mem_cap, bool wall_clock,
               const std::string& json_path) {
  std::vector<copbound::Graph> corpus;
  if (!corpus_path.empty()) {
    corpus = load_graph6_lines(corpus_path);
  } else {
    copbound::CorpusOptions copt;
    copt.max_vertices = max_n;
    copt.target_count = count;
    copt.seed = seed;
    copbound::CorpusResult r = copbound::build_corpus(forbidden.graphs(), copt);
    if (!r.complete) std::fprintf(stderr, "warning: %s\n", r.note.c_str());
    corpus = std::move(r.graphs);
  }

  copbound::VerifyOptions opt;
  opt.state_cap = resolve_state_cap(mem_cap);
  copbound::VerificationReport report =
      copbound::verify_bound(forbidden.graphs(), forbidden.names(), corpus, opt);

  copbound::json j;
  j["forbidden"] = report.forbidden;
  j["forbidden_g6"] = report.forbidden_g6;
  j["bound"] = report.bound;
  j["bound_partial"] = report.bound_partial;
  j["corpus"] = copbound::json::array();
  for (const auto& entry : report.corpus) {
    copbound::json row;
    row["g6"] = entry.g6;
    row["cop_number"] = entry.cop_number ? copbound::json(*entry.cop_number)
                                         : copbound::json(nullptr);
    row["minor_free"] = entry.minor_free;
    if (entry.exceeds_searched) row["exceeds_searched"] = true;
    if (!entry.refusal.empty()) row["refusal"] = entry.refusal;
    j["corpus"].push_back(row);
  }
  j["max_cop_number"] = report.max_cop_number;
  j["all_within_bound"] = report.all_within_bound;
  j["vacuous"] = report.vacuous;
  j["skipped"] = report.skipped;
  j["not_minor_free"] = report.not_minor_free;
  j["timings"] = {{"solver_states", report.total_solver_states},
                  {"minor_nodes", report.total_minor_nodes}};
  if (wall_clock) j["timings"]["wall_seconds"] = report.wall_seconds;
  emit_json(j, json_path);

  std::printf("forbidden        %s\nbound            %d\n", report.forbidden.c_str(),
              report.bound);
  std::printf("corpus           %zu graphs\n", report.corpus.size());
  std::printf("max cop number   %d\n", report.max_cop_number);
  std::printf("within bound     %s%s\n", report.all_within_bound ? "yes" : "NO",
              report.vacuous ? " (vacuous: empty corpus)" : "");
  if (!report.skipped.empty())
    std::printf("skipped          %zu (solver refusals)\n", report.skipped.size());
  if (!report.not_minor_free.empty())
    std::printf("not minor-free   %zu\n", report.not_minor_free.size());
  const bool ok = report.all_within_bound && report.not_minor_free.empty();
  return ok ? kExitOk : kExitViolation;
}

int run_regression(const std::string& json_path) {
  std::vector<copbound::RegressionRow> rows = copbound::regression_suite();
  copbound::json j = copbound::json::array();
  bool all_pass = true;
  for (const auto& row : rows) {
    copbound::json item;
    item["name"] = row.name;
    item["check"] = row.check;
    item["expected"] = row.expected;
    item["actual"] = row.actual;
    item["pass"] = row.pass;
    j.push_back(item);
    all_pass = all_pass && row.pass;
    std::printf("%-24s %-12s expected %2d  got %2d  %s\n", row.name.c_str(),
                row.check.c_str(), row.expected, row.actual, row.pass ? "pass" : "FAIL");
  }
  emit_json(j, json_path);
  std::printf("%zu rows, %s\n", rows.size(), all_pass ? "all pass" : "FAILURES");
  return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certified cop-number bounds for minor-free graph classes: decompositions, "
      "exact game solving, minor search, guarding, and verification harnesses."};
  app.require_subcommand(1);

  std::string graph_arg, second_arg, mode_name = "exhaustive", via_arg, json_path;
  std::string corpus_path, territory_csv, script_csv, adversary = "exhaustive", out_path;
  ForbiddenArgs forbidden;
  int max_k = 8, max_n = 10, count = 100, u = 0, v = 0, trials = 100, max_turns = 0;
  unsigned seed = 1;
  std::uint64_t mem_cap = 0, budget = 10'000'000;
  long long attempts = 0;
  bool wall_clock = false;

  CLI::App* bound = app.add_subcommand("bound", "Certified bound for a forbidden graph");
  bound->add_option("graph", graph_arg, "graph6 file or family spec")->required();
  bound->add_option("--mode", mode_name, "exhaustive or greedy")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  bound->add_option("--via", via_arg, "supergraph to decompose instead");
  bound->add_option("--json", json_path, "write the machine report here");

  CLI::App* copnumber = app.add_subcommand("copnumber", "Exact cop number of a graph");
  copnumber->add_option("graph", graph_arg, "graph6 file or family spec")->required();
  copnumber->add_option("--max-k", max_k, "largest cop count to try");
  copnumber->add_option("--mem-cap", mem_cap, "memory cap in bytes");
  copnumber->add_option("--json", json_path, "write the machine report here");

  CLI::App* minor = app.add_subcommand("minor", "Search for a minor model");
  minor->add_option("pattern", graph_arg, "pattern graph")->required();
  minor->add_option("host", second_arg, "host graph")->required();
  minor->add_option("--budget", budget, "search node budget");
  minor->add_option("--json", json_path, "write the machine report here");

  CLI::App* guard = app.add_subcommand("guard-sim", "Simulate single-cop path guarding");
  guard->add_option("graph", graph_arg, "graph6 file or family spec")->required();
  guard->add_option("--R", territory_csv, "robber territory, comma-separated")->required();
  guard->add_option("--u", u, "anchored path end")->required();
  guard->add_option("--v", v, "far path end")->required();
  guard->add_option("--adversary", adversary, "exhaustive, random, or scripted");
  guard->add_option("--trials", trials, "random adversary trials");
  guard->add_option("--seed", seed, "random adversary seed");
  guard->add_option("--max-turns", max_turns, "simulation horizon (default 3n)");
  guard->add_option("--script", script_csv, "scripted robber moves, comma-separated");
  guard->add_option("--json", json_path, "write the machine report here");

  CLI::App* state_check = app.add_subcommand("state-check", "Validate a game state file");
  state_check->add_option("state", graph_arg, "state JSON file")->required();
  state_check->add_option("--json", json_path, "write the machine report here");

  CLI::App* state_extract =
      app.add_subcommand("state-extract", "Extract a minor model from a final state");
  state_extract->add_option("state", graph_arg, "state JSON file")->required();
  state_extract->add_option("--json", json_path, "write the machine report here");

  CLI::App* corpus = app.add_subcommand("corpus", "Generate a minor-free corpus");
  corpus->add_option("forbidden", forbidden.primary, "forbidden graph")->required();
  corpus->add_option("--also", forbidden.also, "additional forbidden graphs");
  corpus->add_option("--max-n", max_n, "largest graph order");
  corpus->add_option("--count", count, "graphs to generate");
  corpus->add_option("--seed", seed, "generator seed");
  corpus->add_option("--attempts", attempts, "attempt budget (default 500x count)");
  corpus->add_option("--out", out_path, "write graph6 lines here instead of stdout");
  corpus->add_option("--json", json_path, "write the machine report here");

  CLI::App* verify =
      app.add_subcommand("verify", "Compare exact cop numbers against the bound");
  verify->add_option("forbidden", forbidden.primary, "forbidden graph")->required();
  verify->add_option("--also", forbidden.also, "additional forbidden graphs");
  verify->add_option("--corpus", corpus_path, "graph6 corpus file (else generated)");
  verify->add_option("--max-n", max_n, "largest generated graph order");
  verify->add_option("--count", count, "generated corpus size");
  verify->add_option("--seed", seed, "generator seed");
  verify->add_option("--mem-cap", mem_cap, "solver memory cap in bytes");
  verify->add_flag("--wall", wall_clock, "include wall-clock time in the report");
  verify->add_option("--json", json_path, "write the machine report here");

  CLI::App* regression = app.add_subcommand("regression", "Run the fixed bound table");
  regression->add_option("--json", json_path, "write the machine report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) return run_bound(graph_arg, mode_name, via_arg, json_path);
    if (copnumber->parsed()) return run_copnumber(graph_arg, max_k, mem_cap, json_path);
    if (minor->parsed()) return run_minor(graph_arg, second_arg, budget, json_path);
    if (guard->parsed())
      return run_guard_sim(graph_arg, territory_csv, u, v, adversary, trials, seed,
                           max_turns, script_csv, json_path);
    if (state_check->parsed()) return run_state_check(graph_arg, json_path);
    if (state_extract->parsed()) return run_state_extract(graph_arg, json_path);
    if (corpus->parsed())
      return run_corpus(forbidden, max_n, count, seed, attempts, out_path, json_path);
    if (verify->parsed())
      return run_verify(forbidden, corpus_path, max_n, count, seed, mem_cap, wall_clock,
                        json_path);
    if (regression->parsed()) return run_regression(json_path);
  } catch (const copbound::ResourceLimitError& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return kExitRefused;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
  return kExitOk;
}
