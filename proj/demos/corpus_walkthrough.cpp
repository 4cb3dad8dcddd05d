// Builds a small seeded corpus of graphs certified free of a forbidden
// minor, then checks every member's exact cop number against the bound
// certified for that minor-free class. This is the library calls behind
// `copbound corpus` and `copbound verify`, stripped to their essentials.
#include <cstdio>
#include <string>
#include <vector>

#include "copbound/graph.hpp"
#include "copbound/harness.hpp"

int main() {
  std::vector<copbound::Graph> forbidden = {copbound::wheel(4)};
  std::vector<std::string> names = {"W4"};

  copbound::CorpusOptions opt;
  opt.max_vertices = 8;
  opt.target_count = 15;
  opt.seed = 7;
  copbound::CorpusResult corpus = copbound::build_corpus(forbidden, opt);
  std::printf("corpus: %zu graphs after %lld attempts%s\n",
              corpus.graphs.size(), corpus.attempts,
              corpus.complete ? "" : " (incomplete)");

  copbound::VerificationReport report =
      copbound::verify_bound(forbidden, names, corpus.graphs);
  std::printf("certified bound for %s-minor-free graphs: %d\n\n",
              report.forbidden.c_str(), report.bound);

  std::printf("%-14s %2s %10s %6s\n", "graph6", "n", "cop number", "within");
  for (const copbound::CorpusEntry& entry : report.corpus) {
    copbound::Graph g = copbound::parse_graph6(entry.g6);
    std::string cops = entry.cop_number.has_value()
                           ? std::to_string(*entry.cop_number)
                           : "> searched";
    bool within = entry.cop_number.has_value() &&
                  *entry.cop_number <= report.bound;
    std::printf("%-14s %2d %10s %6s\n", entry.g6.c_str(), g.vertex_count(),
                cops.c_str(), within ? "yes" : "NO");
  }
  std::printf("\nmax cop number %d, bound %d: %s\n", report.max_cop_number,
              report.bound,
              report.all_within_bound ? "all within bound" : "VIOLATION");
  return report.all_within_bound ? 0 : 1;
}
