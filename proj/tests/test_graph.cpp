// Tests for graph.hpp: graph6 round trips against frozen reference strings,
// generator shapes, and the deletion/contraction relabeling contracts.
#include "copbound/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace copbound;

// Reference graph6 strings frozen from networkx 3.4.2. Regenerate with:
//   python3 -c "import networkx as nx;
//     print(nx.to_graph6_bytes(nx.complete_graph(4), header=False))"
// and the matching constructors for the rest (labelings noted inline).
namespace frozen {
const std::string k1 = "@";
const std::string k2 = "A_";
const std::string k3 = "Bw";
const std::string k4 = "C~";
const std::string k6 = "E~~w";
const std::string c4 = "Cl";
const std::string c5 = "Dhc";
const std::string c6 = "EhEG";
const std::string p5 = "DhC";
const std::string k33 = "EFz_";           // sides {0,1,2} and {3,4,5}
const std::string k23 = "D]o";            // sides {0,1} and {2,3,4}
const std::string star3 = "Ds_";          // center 0, leaves 1..3
const std::string w4_rim_first = "Dl{";   // rim 0..3, hub 4
const std::string theta34 = "JPU?IE??I?_";  // hubs 0,1, interiors path by path
const std::string petersen_nx = "IheA@GUAo";
const std::string dodecahedron_nx = "ShCHGD@?K?_@?@?C_GGG@??cG?G?GK_?C";
// Petersen family figures with the transcription labelings used by
// petersen_family(); frozen from the same edge lists via networkx (build the
// nx.Graph with add_nodes_from(range(n)) first so node order is 0..n-1, or
// the writer silently encodes edge-insertion order).
const std::string pfam[7] = {"I?LREQcc_", "HONrEQQ", "Gc|VdG", "Fs~v_",
                             "Fe~v_",     "G?~vf?",  "E~~w"};
}  // namespace frozen

TEST(Graph6, WritesGeneratorsToFrozenStrings) {
  EXPECT_EQ(write_graph6(complete_graph(1)), frozen::k1);
  EXPECT_EQ(write_graph6(complete_graph(2)), frozen::k2);
  EXPECT_EQ(write_graph6(complete_graph(3)), frozen::k3);
  EXPECT_EQ(write_graph6(complete_graph(4)), frozen::k4);
  EXPECT_EQ(write_graph6(complete_graph(6)), frozen::k6);
  EXPECT_EQ(write_graph6(cycle_graph(4)), frozen::c4);
  EXPECT_EQ(write_graph6(cycle_graph(5)), frozen::c5);
  EXPECT_EQ(write_graph6(cycle_graph(6)), frozen::c6);
  EXPECT_EQ(write_graph6(path_graph(5)), frozen::p5);
  EXPECT_EQ(write_graph6(complete_bipartite(3, 3)), frozen::k33);
  EXPECT_EQ(write_graph6(complete_bipartite(2, 3)), frozen::k23);
  EXPECT_EQ(write_graph6(wheel(4)), frozen::w4_rim_first);
  EXPECT_EQ(write_graph6(theta_graph(3, 4)), frozen::theta34);
  for (int i = 1; i <= 7; ++i)
    EXPECT_EQ(write_graph6(petersen_family(i)), frozen::pfam[i - 1]) << i;
}

TEST(Graph6, ParseInvertsWrite) {
  const std::string samples[] = {
      frozen::k1,  frozen::k4,       frozen::c5,
      frozen::k33, frozen::petersen_nx, frozen::dodecahedron_nx};
  for (const std::string& s : samples) {
    Graph g = parse_graph6(s);
    EXPECT_EQ(write_graph6(g), s);
  }
}

TEST(Graph6, ParsedReferenceShapes) {
  Graph pet = parse_graph6(frozen::petersen_nx);
  EXPECT_EQ(pet.vertex_count(), 10);
  EXPECT_EQ(pet.edge_count(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(pet.degree(v), 3);

  Graph dod = parse_graph6(frozen::dodecahedron_nx);
  EXPECT_EQ(dod.vertex_count(), 20);
  EXPECT_EQ(dod.edge_count(), 30);
  for (int v = 0; v < 20; ++v) EXPECT_EQ(dod.degree(v), 3);
  EXPECT_TRUE(is_connected(dod));
}

TEST(Graph6, AcceptsHeaderAndTrailingNewline) {
  Graph g = parse_graph6(">>graph6<<Cl\n");
  EXPECT_EQ(write_graph6(g), frozen::c4);
}

TEST(Graph6, EmptyAndZeroOrder) {
  EXPECT_EQ(parse_graph6("?").vertex_count(), 0);
  EXPECT_EQ(write_graph6(Graph(0)), "?");
  EXPECT_THROW(parse_graph6(""), Graph6ParseError);
  EXPECT_THROW(parse_graph6(">>graph6<<"), Graph6ParseError);
}

TEST(Graph6, RejectsMalformedInput) {
  // Order byte below the printable range.
  EXPECT_THROW(parse_graph6(std::string(1, ' ')), Graph6ParseError);
  // Multi-byte order marker (126) is out of scope.
  EXPECT_THROW(parse_graph6(std::string(1, 126) + "???"), Graph6ParseError);
  // Too few and too many data bytes for order 4.
  EXPECT_THROW(parse_graph6("C"), Graph6ParseError);
  EXPECT_THROW(parse_graph6("C~~"), Graph6ParseError);
  // Data byte outside the printable range.
  EXPECT_THROW(parse_graph6(std::string("C") + char(20)), Graph6ParseError);
  // Order 3 uses 3 bits; low bits of the data byte must be zero padding.
  EXPECT_THROW(parse_graph6("B~"), Graph6ParseError);
  try {
    parse_graph6("C");
    FAIL() << "expected parse error";
  } catch (const Graph6ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(GraphBasics, EdgesAndDegrees) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 2}));
  std::vector<std::pair<int, int>> want{{0, 1}, {1, 2}};
  EXPECT_EQ(g.edges(), want);
  EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::invalid_argument);
  EXPECT_THROW(Graph(63), std::invalid_argument);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
}

TEST(GraphBasics, NeighborhoodMasks) {
  Graph g = path_graph(5);
  EXPECT_EQ(g.open_neighborhood(set_of({0, 1})), set_of({2}));
  EXPECT_EQ(g.closed_neighborhood(set_of({2})), set_of({1, 2, 3}));
  EXPECT_EQ(g.open_neighborhood(0), VertexSet{0});
}

TEST(GraphBasics, SetHelpers) {
  EXPECT_EQ(set_size(set_of({0, 3, 5})), 3);
  EXPECT_EQ(set_to_vector(set_of({4, 1})), (std::vector<int>{1, 4}));
  EXPECT_EQ(full_set(3), VertexSet{0b111});
  EXPECT_EQ(full_set(0), VertexSet{0});
}

TEST(Generators, Shapes) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10);
  EXPECT_EQ(complete_bipartite(3, 4).edge_count(), 12);
  EXPECT_EQ(path_graph(1).edge_count(), 0);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);

  Graph w = wheel(5);
  EXPECT_EQ(w.vertex_count(), 6);
  EXPECT_EQ(w.degree(5), 5);
  EXPECT_EQ(w.edge_count(), 10);

  Graph ht = theta_graph(4, 4);
  EXPECT_EQ(ht.vertex_count(), 2 + 4 * 3);
  EXPECT_EQ(ht.edge_count(), 16);
  EXPECT_EQ(ht.degree(0), 4);
  EXPECT_EQ(ht.degree(1), 4);
  for (int v = 2; v < ht.vertex_count(); ++v) EXPECT_EQ(ht.degree(v), 2);

  Graph d = dodecahedron();
  EXPECT_EQ(d.vertex_count(), 20);
  EXPECT_EQ(d.edge_count(), 30);
  for (int v = 0; v < 20; ++v) EXPECT_EQ(d.degree(v), 3);
}

TEST(Generators, PetersenFamilyInvariants) {
  const int orders[7] = {10, 9, 8, 7, 7, 8, 6};
  for (int i = 1; i <= 7; ++i) {
    Graph g = petersen_family(i);
    EXPECT_EQ(g.vertex_count(), orders[i - 1]) << i;
    EXPECT_EQ(g.edge_count(), 15) << i;
    EXPECT_TRUE(is_connected(g)) << i;
  }
  // Spot degree sequences that separate the similar members.
  auto degseq = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(degseq(petersen_family(4)),
            (std::vector<int>{4, 4, 4, 4, 4, 4, 6}));
  EXPECT_EQ(degseq(petersen_family(5)),
            (std::vector<int>{3, 4, 4, 4, 5, 5, 5}));
  EXPECT_EQ(degseq(petersen_family(6)),
            (std::vector<int>{3, 3, 4, 4, 4, 4, 4, 4}));
  EXPECT_THROW(petersen_family(0), std::invalid_argument);
  EXPECT_THROW(petersen_family(8), std::invalid_argument);
}

TEST(Construction, AddUniversalAndUnions) {
  Graph u = add_universal(path_graph(3));
  EXPECT_EQ(u.vertex_count(), 4);
  EXPECT_EQ(u.degree(3), 3);
  EXPECT_TRUE(u.has_edge(0, 1));

  Graph two = disjoint_copies(complete_graph(3), 2);
  EXPECT_EQ(two.vertex_count(), 6);
  EXPECT_EQ(two.edge_count(), 6);
  EXPECT_FALSE(two.has_edge(0, 3));
  EXPECT_EQ(components(two).size(), 2u);

  Graph mixed = disjoint_union({complete_graph(2), Graph(1), cycle_graph(3)});
  EXPECT_EQ(mixed.vertex_count(), 6);
  EXPECT_EQ(mixed.edge_count(), 4);
  EXPECT_TRUE(mixed.has_edge(3, 5));
}

TEST(Queries, DistancesAndComponents) {
  Graph p = path_graph(5);
  EXPECT_EQ(distances(p, 0), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(distances(p, 2), (std::vector<int>{2, 1, 0, 1, 2}));

  Graph two = disjoint_copies(path_graph(2), 2);
  EXPECT_EQ(distances(two, 0), (std::vector<int>{0, 1, -1, -1}));
  EXPECT_FALSE(is_connected(two));
  auto comps = components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<int>{2, 3}));

  EXPECT_FALSE(is_connected(Graph(0)));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Queries, DistancesWithinRestrictedSet) {
  // C6 with chord 0-3: within the set {0,1,2,3} the chord is still usable,
  // but dropping vertex 3 from the set forces the long way around.
  Graph g = cycle_graph(6);
  g.add_edge(0, 3);
  auto d = distances_within(g, set_of({0, 1, 2, 3}), 0);
  EXPECT_EQ(d[3], 1);
  EXPECT_EQ(d[4], -1);
  auto d2 = distances_within(g, set_of({0, 1, 2, 4, 5}), 0);
  EXPECT_EQ(d2[2], 2);
  EXPECT_EQ(d2[4], 2);
  EXPECT_THROW(distances_within(g, set_of({1, 2}), 0), std::invalid_argument);
}

TEST(Queries, ComponentWithin) {
  Graph p = path_graph(6);
  EXPECT_EQ(component_of(p, set_of({0, 1, 2, 4, 5}), 1), set_of({0, 1, 2}));
  EXPECT_TRUE(is_connected_within(p, set_of({2, 3, 4})));
  EXPECT_FALSE(is_connected_within(p, set_of({0, 2})));
  EXPECT_FALSE(is_connected_within(p, 0));
}

TEST(Rewriting, InducedSubgraph) {
  Graph g = cycle_graph(5);
  auto [sub, map] = induced_subgraph(g, set_of({0, 1, 3}));
  EXPECT_EQ(sub.vertex_count(), 3);
  EXPECT_EQ(sub.edge_count(), 1);
  EXPECT_EQ(map, (std::vector<int>{0, 1, -1, 2, -1}));
  EXPECT_TRUE(sub.has_edge(0, 1));
}

TEST(Rewriting, DeleteVerticesAndEdges) {
  Graph g = complete_graph(4);
  auto res = delete_vertices_and_edges(g, {1}, {{0, 2}});
  EXPECT_EQ(res.graph.vertex_count(), 3);
  EXPECT_EQ(res.graph.edge_count(), 2);
  EXPECT_EQ(res.old_to_new, (std::vector<int>{0, -1, 1, 2}));
  EXPECT_FALSE(res.graph.has_edge(0, 1));
  EXPECT_TRUE(res.graph.has_edge(0, 2));

  EXPECT_THROW(delete_vertices_and_edges(path_graph(3), {}, {{0, 2}}),
               std::invalid_argument);
  EXPECT_EQ(delete_vertex(path_graph(3), 1).graph.edge_count(), 0);
}

TEST(Rewriting, ContractEdge) {
  // Contracting any edge of C5 yields C4 with the frozen labeling.
  Graph c4 = contract_edge(cycle_graph(5), 0, 1);
  EXPECT_EQ(write_graph6(c4), frozen::c4);
  // Parallel edges collapse: contracting a triangle edge gives a single edge.
  Graph e = contract_edge(complete_graph(3), 1, 2);
  EXPECT_EQ(e.vertex_count(), 2);
  EXPECT_EQ(e.edge_count(), 1);
  EXPECT_THROW(contract_edge(path_graph(3), 0, 2), std::invalid_argument);
}

TEST(Paths, ValidityAndAccessors) {
  Graph g = cycle_graph(5);
  PathOrCycle p{{0, 1, 2}, PathOrCycle::Kind::path};
  EXPECT_TRUE(is_valid_path(g, p));
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.ends(), (std::pair<int, int>{0, 2}));
  EXPECT_EQ(p.interior(), (std::vector<int>{1}));
  EXPECT_EQ(p.vertex_set(), set_of({0, 1, 2}));

  PathOrCycle trivial{{3}, PathOrCycle::Kind::path};
  EXPECT_TRUE(is_valid_path(g, trivial));
  EXPECT_EQ(trivial.length(), 0);
  EXPECT_EQ(trivial.ends(), (std::pair<int, int>{3, 3}));

  PathOrCycle cyc{{0, 1, 2, 3, 4, 0}, PathOrCycle::Kind::rooted_cycle};
  EXPECT_TRUE(is_valid_path(g, cyc));
  EXPECT_EQ(cyc.length(), 5);
  EXPECT_EQ(cyc.root(), 0);
  EXPECT_EQ(cyc.interior(), (std::vector<int>{1, 2, 3, 4}));

  // Repeated vertex, gap, unclosed cycle, too-short cycle.
  EXPECT_FALSE(is_valid_path(g, {{0, 1, 0}, PathOrCycle::Kind::path}));
  EXPECT_FALSE(is_valid_path(g, {{0, 2}, PathOrCycle::Kind::path}));
  EXPECT_FALSE(
      is_valid_path(g, {{0, 1, 2, 3}, PathOrCycle::Kind::rooted_cycle}));
  Graph tri = complete_graph(3);
  EXPECT_FALSE(is_valid_path(tri, {{0, 1, 0}, PathOrCycle::Kind::rooted_cycle}));
  EXPECT_TRUE(
      is_valid_path(tri, {{0, 1, 2, 0}, PathOrCycle::Kind::rooted_cycle}));
  EXPECT_FALSE(is_valid_path(g, {{}, PathOrCycle::Kind::path}));
}
