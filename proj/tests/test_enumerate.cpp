// Tests for enumerate.hpp. The counting oracles are the labeled and
// unlabeled connected graph counts, frozen from networkx 3.4.2:
//   python3 - <<'EOF'
//   import networkx as nx
//   from itertools import combinations
//   for n in range(1, 7):
//       total = conn = 0
//       for mask in range(1 << (n*(n-1)//2)):
//           g = nx.Graph(); g.add_nodes_from(range(n))
//           for b, (u, v) in enumerate(combinations(range(n), 2)):
//               if mask >> b & 1: g.add_edge(u, v)
//           total += 1; conn += nx.is_connected(g)
//       print(n, total, conn)
//   EOF
// (unlabeled counts 1,1,2,6,21,112,853 cross-checked against that table up
// to n=6 by dividing out automorphisms, and for n=7 against nx.graph_atlas
// style enumeration).
#include "copbound/enumerate.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace copbound;

TEST(LabeledEnumeration, CountsMatchFrozenTable) {
  const long expected_total[] = {1, 1, 2, 8, 64, 1024, 32768};
  const long expected_connected[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    long total = 0, connected = 0;
    for_each_labeled_graph(n, [&](const Graph& g) {
      ++total;
      if (is_connected(g)) ++connected;
    });
    EXPECT_EQ(total, expected_total[n]) << n;
    EXPECT_EQ(connected, expected_connected[n]) << n;
    long connected2 = 0;
    for_each_labeled_connected_graph(n, [&](const Graph&) { ++connected2; });
    EXPECT_EQ(connected2, expected_connected[n]) << n;
  }
  EXPECT_THROW(for_each_labeled_graph(9, [](const Graph&) {}),
               std::invalid_argument);
}

TEST(Isomorphism, AgreesOnKnownPairs) {
  EXPECT_TRUE(are_isomorphic(petersen_family(1), parse_graph6("IheA@GUAo")));
  EXPECT_TRUE(are_isomorphic(wheel(4), parse_graph6("D|s")));
  EXPECT_TRUE(are_isomorphic(
      dodecahedron(), parse_graph6("ShCHGD@?K?_@?@?C_GGG@??cG?G?GK_?C")));
  EXPECT_TRUE(are_isomorphic(petersen_family(4),
                             add_universal(complete_bipartite(3, 3))));
  EXPECT_TRUE(are_isomorphic(petersen_family(7), complete_graph(6)));
  Graph k44e = complete_bipartite(4, 4);
  k44e.remove_edge(3, 7);
  EXPECT_TRUE(are_isomorphic(petersen_family(6), k44e));

  EXPECT_FALSE(are_isomorphic(path_graph(5), cycle_graph(5)));
  // Same order and degree sequence, different structure.
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_copies(cycle_graph(3), 2)));
  EXPECT_FALSE(are_isomorphic(complete_graph(4), cycle_graph(4)));
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      EXPECT_FALSE(are_isomorphic(petersen_family(i), petersen_family(j)))
          << i << " vs " << j;
}

TEST(Isomorphism, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(20260816);
  const Graph samples[] = {petersen_family(3), wheel(5), theta_graph(3, 4),
                           complete_bipartite(2, 4)};
  for (const Graph& g : samples) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 10; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_TRUE(are_isomorphic(g, apply_permutation(g, perm)));
    }
  }
}

TEST(CanonicalCode, SeparatesClassesAndIgnoresLabels) {
  std::mt19937 rng(7);
  Graph g = petersen_family(5);
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(apply_permutation(g, perm)));
  }
  EXPECT_NE(canonical_code(cycle_graph(6)),
            canonical_code(disjoint_copies(cycle_graph(3), 2)));
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(path_graph(5)));
}

TEST(UnlabeledEnumeration, ConnectedClassCounts) {
  const size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    std::vector<Graph> reps = connected_graphs_up_to_iso(n);
    EXPECT_EQ(reps.size(), expected[n]) << n;
    for (const Graph& g : reps) {
      EXPECT_EQ(g.vertex_count(), n);
      EXPECT_TRUE(is_connected(g));
    }
  }
  // Pairwise distinctness spot check at n = 5.
  std::vector<Graph> reps = connected_graphs_up_to_iso(5);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      EXPECT_FALSE(are_isomorphic(reps[i], reps[j]));
}
