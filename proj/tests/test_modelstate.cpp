// Tests for game-state validation, the strict progress order on states, and
// minor extraction from fully initialized states. Fixture machinery lives in
// state_fixtures.hpp: synthetic hosts made of one small connected blob (the
// territory) attached to a subdivision-like realization of the forbidden
// graph's decomposition.
#include "copbound/modelstate.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "copbound/decomp.hpp"
#include "copbound/graph.hpp"
#include "copbound/minor.hpp"
#include "state_fixtures.hpp"

using namespace statefix;

using copbound::GameState;
using copbound::Graph;
using copbound::VertexSet;

TEST(ValidateState, AcceptsEverySubdivisionFixture) {
  auto fixtures = accept_fixtures();
  ASSERT_EQ(fixtures.size(), 20u);
  for (const auto& fx : fixtures) {
    SCOPED_TRACE(fx.name);
    auto violations = copbound::validate_state(fx.built.state);
    EXPECT_TRUE(violations.empty()) << describe(violations);
  }
}

TEST(ValidateState, AcceptsTheInitialStateOfEveryFixture) {
  for (const auto& fx : accept_fixtures()) {
    SCOPED_TRACE(fx.name);
    auto violations = copbound::validate_state(initial_state_like(fx.built.state));
    EXPECT_TRUE(violations.empty()) << describe(violations);
  }
}

TEST(ValidateState, OverlappingOrDisconnectedBagsBreakCondition1) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4),
                                        {.bag_size = 2});
  GameState overlapping = built.state;
  overlapping.bags[1] |= overlapping.bags[0];
  EXPECT_TRUE(has_condition(copbound::validate_state(overlapping), 1));

  GameState disconnected = built.state;
  int stolen = built.bag_vertices[1][1];
  disconnected.bags[1] &= ~copbound::bit(stolen);
  disconnected.bags[0] =
      copbound::bit(built.bag_vertices[0][0]) | copbound::bit(stolen);
  auto violations = copbound::validate_state(disconnected);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 1);
}

TEST(ValidateState, PathRunningThroughABagBreaksCondition2) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4),
                                        {.extra_interiors = 1});
  GameState st = built.state;
  st.bags[0] |= copbound::bit(built.interiors[0].front());
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 2);
}

TEST(ValidateState, UnrealizedMatchedPairBreaksCondition3) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4));
  GameState st = built.state;
  st.model_paths.erase(0);  // path 0 is the matched pair {0,1}
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 3);
}

TEST(ValidateState, TerritorySpanningTwoComponentsBreaksCondition4) {
  Built built = build_subdivision_state(
      copbound::complete_graph(4), complete_graph_decomposition(4),
      {.blob_size = 2, .extra_interiors = 2, .stray_vertices = 2});
  GameState st = built.state;
  for (int y : built.stray) st.territory |= copbound::bit(y);
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 4);
}

TEST(ValidateState, TwoTerritoryAdjacentBagVerticesBreakCondition5) {
  // Hand-built wheel host whose whole 2-vertex bag touches the blob; the
  // rim stays unrealized so both vertices can be legally guarded.
  Graph w4 = copbound::wheel(4);
  Decomposition d = wheel_decomposition(4);
  Built built = build_subdivision_state(w4, d, {.bag_size = 2});
  Graph host = built.state.host;
  host.add_edge(built.bag_vertices[0][1], built.blob.front());
  GameState st;
  st.host = host;
  st.forbidden = w4;
  st.decomposition = d;
  st.bags[0] = copbound::bit(built.bag_vertices[0][0]) |
               copbound::bit(built.bag_vertices[0][1]);
  st.territory = copbound::component_of(
      host, host.vertex_mask() & ~st.bags[0], built.blob.front());
  st.cop_groups = built.state.cop_groups;
  st.guards[built.group_cops[0][0]] = copbound::bit(built.bag_vertices[0][0]);
  st.guards[built.group_cops[0][1]] = copbound::bit(built.bag_vertices[0][1]);
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 5);
}

TEST(ValidateState, GuardInsideTheTerritoryBreaksCondition6) {
  Built built = k33_two_paths();
  GameState st = built.state;
  st.guards[built.group_cops[2].front()] = copbound::bit(built.blob.front());
  EXPECT_TRUE(has_condition(copbound::validate_state(st), 6));
}

TEST(ValidateState, UnguardedTerritoryNeighborBreaksCondition7) {
  Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                        three_side_decomposition(3));
  GameState st = built.state;
  int cop = built.group_cops[0].front();
  st.guards[cop] &= ~copbound::bit(built.seeds[0].front());
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 7);
}

TEST(ValidateState, IntertwinedGuardsBreakCondition8) {
  Built built = build_subdivision_state(copbound::wheel(5),
                                        wheel_decomposition(5));
  GameState st = built.state;
  int c0 = built.group_cops[0][0];
  int c1 = built.group_cops[0][1];
  int s2 = built.seeds[0][1];
  int s3 = built.seeds[0][2];
  st.guards[c0] = (st.guards[c0] & ~copbound::bit(s2)) | copbound::bit(s3);
  st.guards[c1] = (st.guards[c1] & ~copbound::bit(s3)) | copbound::bit(s2);
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 8);
}

TEST(ValidateState, UnrealizedPathCopGuardingTwoVerticesBreaksCondition9) {
  Built built = k33_two_paths();
  GameState st = built.state;
  st.guards[built.group_cops[2].front()] =
      copbound::bit(built.bag_vertices[1][0]) |
      copbound::bit(built.bag_vertices[2][0]);
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 9);
}

TEST(ValidateState, WrongGroupGuardingABagBreaksCondition10) {
  Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                        three_side_decomposition(3));
  GameState st = built.state;
  int b1 = built.bag_vertices[1][0];
  st.guards[built.group_cops[0].front()] &= ~copbound::bit(b1);
  st.guards[built.group_cops[2].front()] |= copbound::bit(b1);
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 10);
}

TEST(ValidateState, ActiveExtraCopBreaksCondition11) {
  Built built = build_subdivision_state(copbound::wheel(5),
                                        wheel_decomposition(5));
  GameState st = built.state;
  int extra = built.group_cops[copbound::kExtraCopGroup].front();
  st.guards[extra] = copbound::bit(built.seeds[0].front());
  auto violations = copbound::validate_state(st);
  ASSERT_EQ(violations.size(), 1u) << describe(violations);
  EXPECT_EQ(violations[0].condition, 11);
}

TEST(ValidateState, WrongCopRosterIsReportedAsBookkeeping) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4));
  GameState st = built.state;
  int cop = built.group_cops[1].front();
  st.guards.erase(cop);
  st.cop_groups.erase(cop);
  auto violations = copbound::validate_state(st);
  EXPECT_TRUE(has_condition(violations, 0)) << describe(violations);
  EXPECT_TRUE(has_condition(violations, 7)) << describe(violations);
}

TEST(ValidateState, MalformedStatesThrow) {
  Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                        three_side_decomposition(3));
  GameState bad_bag = built.state;
  bad_bag.bags[5] = copbound::bit(0);
  EXPECT_THROW(copbound::validate_state(bad_bag), std::invalid_argument);

  GameState bad_path = built.state;
  bad_path.model_paths[7] = path_of({0, 1});
  EXPECT_THROW(copbound::validate_state(bad_path), std::invalid_argument);

  GameState bad_guard = built.state;
  bad_guard.guards[99] = copbound::bit(0);
  EXPECT_THROW(copbound::validate_state(bad_guard), std::invalid_argument);

  GameState bad_group = built.state;
  bad_group.cop_groups[built.group_cops[0].front()] = 42;
  EXPECT_THROW(copbound::validate_state(bad_group), std::invalid_argument);

  GameState bad_territory = built.state;
  bad_territory.territory |= copbound::bit(60);
  EXPECT_THROW(copbound::validate_state(bad_territory), std::invalid_argument);
}

TEST(StateOrder, ShrinkingTheTerritoryIsADecrease) {
  for (const auto& fx : accept_fixtures()) {
    SCOPED_TRACE(fx.name);
    GameState initial = initial_state_like(fx.built.state);
    EXPECT_TRUE(copbound::state_less_than(fx.built.state, initial));
    EXPECT_FALSE(copbound::state_less_than(initial, fx.built.state));
  }
}

TEST(StateOrder, IdenticalStatesAreNotComparable) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4));
  GameState copy = built.state;
  EXPECT_FALSE(copbound::state_less_than(built.state, copy));
  EXPECT_FALSE(copbound::state_less_than(copy, built.state));
}

TEST(StateOrder, FewerGuardedVerticesBreaksTheTerritoryTie) {
  Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                        three_side_decomposition(3));
  GameState redundant = built.state;
  // A second legal guard on path 2: its own end vertex in the bag of 1.
  redundant.guards[built.group_cops[2].front()] |=
      copbound::bit(built.bag_vertices[1][0]);
  EXPECT_TRUE(copbound::validate_state(redundant).empty());
  EXPECT_TRUE(copbound::state_less_than(built.state, redundant));
  EXPECT_FALSE(copbound::state_less_than(redundant, built.state));
}

TEST(StateOrder, FewerInitializedPiecesBreaksTheGuardTie) {
  Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                        three_side_decomposition(3),
                                        {.starved_paths = {2}});
  GameState realized = built.state;
  GameState unrealized = built.state;
  unrealized.model_paths.erase(2);
  EXPECT_TRUE(copbound::validate_state(realized).empty())
      << describe(copbound::validate_state(realized));
  EXPECT_TRUE(copbound::validate_state(unrealized).empty())
      << describe(copbound::validate_state(unrealized));
  EXPECT_EQ(realized.territory, unrealized.territory);
  EXPECT_TRUE(copbound::state_less_than(unrealized, realized));
  EXPECT_FALSE(copbound::state_less_than(realized, unrealized));
}

TEST(StateOrder, LargerBagsBreakTheFinalTie) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4),
                                        {.bag_size = 2});
  GameState trimmed = built.state;
  for (auto& [w, bag] : trimmed.bags)
    bag = copbound::bit(built.bag_vertices[w].front());
  EXPECT_TRUE(copbound::validate_state(trimmed).empty())
      << describe(copbound::validate_state(trimmed));
  EXPECT_TRUE(copbound::state_less_than(built.state, trimmed));
  EXPECT_FALSE(copbound::state_less_than(trimmed, built.state));
}

TEST(StateOrder, DisjointTerritoriesAreIncomparable) {
  Built built = build_subdivision_state(
      copbound::complete_graph(4), complete_graph_decomposition(4),
      {.blob_size = 2, .extra_interiors = 2, .stray_vertices = 2});
  GameState on_stray = built.state;
  on_stray.territory = 0;
  for (int y : built.stray) on_stray.territory |= copbound::bit(y);
  EXPECT_TRUE(copbound::validate_state(on_stray).empty())
      << describe(copbound::validate_state(on_stray));
  EXPECT_FALSE(copbound::state_less_than(on_stray, built.state));
  EXPECT_FALSE(copbound::state_less_than(built.state, on_stray));
}

TEST(StateOrder, MismatchedGamesThrow) {
  Built a = build_subdivision_state(copbound::complete_graph(4),
                                    complete_graph_decomposition(4));
  Built b = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                    three_side_decomposition(3));
  EXPECT_THROW(copbound::state_less_than(a.state, b.state),
               std::invalid_argument);
  Built c = build_subdivision_state(copbound::complete_graph(4),
                                    complete_graph_decomposition(4),
                                    {.blob_size = 3});
  EXPECT_THROW(copbound::state_less_than(a.state, c.state),
               std::invalid_argument);
}

TEST(StateOrder, SampledPairsAreSoundForTheRankTuple) {
  // Pools of valid states per game; pairs are only sampled within a pool.
  std::vector<std::vector<GameState>> pools;
  {
    // Progress chain on the basic K_{3,3} fixture host.
    Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                          three_side_decomposition(3));
    std::vector<GameState> pool;
    pool.push_back(initial_state_like(built.state));

    GameState bags_only = initial_state_like(built.state);
    bags_only.bags = built.state.bags;
    VertexSet bag_union = 0;
    for (const auto& entry : bags_only.bags) bag_union |= entry.second;
    bags_only.territory = copbound::component_of(
        built.state.host, built.state.host.vertex_mask() & ~bag_union,
        built.blob.front());
    bags_only.guards[built.group_cops[0].front()] =
        copbound::bit(built.bag_vertices[1][0]);
    bags_only.guards[built.group_cops[1].front()] =
        copbound::bit(built.bag_vertices[2][0]);
    pool.push_back(bags_only);

    GameState one_path = bags_only;
    one_path.model_paths[0] = built.state.model_paths.at(0);
    one_path.territory &= ~copbound::bit(built.seeds[0].front());
    one_path.guards[built.group_cops[0].front()] =
        copbound::bit(built.bag_vertices[1][0]) |
        copbound::bit(built.seeds[0].front());
    pool.push_back(one_path);

    Built two = k33_two_paths();
    pool.push_back(two.state);
    pool.push_back(built.state);

    GameState redundant = built.state;
    redundant.guards[built.group_cops[2].front()] |=
        copbound::bit(built.bag_vertices[1][0]);
    pool.push_back(redundant);
    pools.push_back(pool);
  }
  {
    Built built = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                          three_side_decomposition(3),
                                          {.starved_paths = {2}});
    GameState unrealized = built.state;
    unrealized.model_paths.erase(2);
    pools.push_back({initial_state_like(built.state), unrealized, built.state});
  }
  {
    Built built = build_subdivision_state(copbound::complete_graph(4),
                                          complete_graph_decomposition(4),
                                          {.bag_size = 2});
    GameState trimmed = built.state;
    for (auto& [w, bag] : trimmed.bags)
      bag = copbound::bit(built.bag_vertices[w].front());
    pools.push_back({initial_state_like(built.state), trimmed, built.state});
  }
  {
    Built built = build_subdivision_state(
        copbound::complete_graph(4), complete_graph_decomposition(4),
        {.blob_size = 2, .extra_interiors = 2, .stray_vertices = 2});
    GameState on_stray = built.state;
    on_stray.territory = 0;
    for (int y : built.stray) on_stray.territory |= copbound::bit(y);
    pools.push_back({initial_state_like(built.state), on_stray, built.state});
  }

  for (size_t g = 0; g < pools.size(); ++g) {
    for (size_t i = 0; i < pools[g].size(); ++i) {
      SCOPED_TRACE("pool " + std::to_string(g) + " state " + std::to_string(i));
      auto violations = copbound::validate_state(pools[g][i]);
      ASSERT_TRUE(violations.empty()) << describe(violations);
      EXPECT_FALSE(copbound::state_less_than(pools[g][i], pools[g][i]));
    }
  }

  std::mt19937 rng(20260816u);
  int comparable = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& pool =
        pools[std::uniform_int_distribution<size_t>(0, pools.size() - 1)(rng)];
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    const GameState& a = pool[pick(rng)];
    const GameState& b = pool[pick(rng)];
    const GameState& c = pool[pick(rng)];
    bool ab = copbound::state_less_than(a, b);
    bool ba = copbound::state_less_than(b, a);
    ASSERT_FALSE(ab && ba);
    if (ab) {
      ++comparable;
      ASSERT_LT(copbound::state_rank(a), copbound::state_rank(b));
    }
    if (ab && copbound::state_less_than(b, c))
      ASSERT_TRUE(copbound::state_less_than(a, c));
  }
  EXPECT_GT(comparable, 1000);
}

TEST(ExtractMinor, EveryAcceptFixtureYieldsAVerifiedModel) {
  for (const auto& fx : accept_fixtures()) {
    SCOPED_TRACE(fx.name);
    copbound::MinorModel model = copbound::extract_minor(fx.built.state);
    std::string why;
    EXPECT_TRUE(copbound::verify_minor_model(fx.built.state.forbidden,
                                             fx.built.state.host, model, &why))
        << why;
    int h = fx.built.state.decomposition.h;
    EXPECT_EQ(model.branch_sets[static_cast<size_t>(h)],
              fx.built.state.territory);
    for (const auto& [w, bag] : fx.built.state.bags)
      EXPECT_EQ(bag & ~model.branch_sets[static_cast<size_t>(w)], 0u);
  }
}

TEST(ExtractMinor, AgreesWithTheGenericMinorSearch) {
  Built k4 = build_subdivision_state(copbound::complete_graph(4),
                                     complete_graph_decomposition(4));
  Built k23 = build_subdivision_state(copbound::complete_bipartite(2, 3),
                                      k23_cycle_decomposition());
  for (const Built* built : {&k4, &k23}) {
    auto found = copbound::find_minor_model(built->state.forbidden,
                                            built->state.host);
    EXPECT_EQ(found.status, copbound::MinorSearchStatus::found);
  }
}

TEST(ExtractMinor, AbsorbsSubdividedVerticesIntoEndBags) {
  Built built = build_subdivision_state(copbound::complete_graph(4),
                                        complete_graph_decomposition(4),
                                        {.extra_interiors = 1});
  copbound::MinorModel model = copbound::extract_minor(built.state);
  // Path 0 stands in for the single edge {0,1}; its subdivision vertex must
  // end up in one of the two end branch sets.
  auto [u, v] = built.state.decomposition.paths[0].ends();
  VertexSet ends = model.branch_sets[static_cast<size_t>(u)] |
                   model.branch_sets[static_cast<size_t>(v)];
  int t = built.interiors[0].front();
  EXPECT_NE(ends & copbound::bit(t), 0u);
}

TEST(ExtractMinor, RefusalsNameTheFailingRequirement) {
  auto message_of = [](const GameState& st) {
    try {
      copbound::extract_minor(st);
    } catch (const std::invalid_argument& err) {
      return std::string(err.what());
    }
    return std::string("no error");
  };

  Built k4 = build_subdivision_state(copbound::complete_graph(4),
                                     complete_graph_decomposition(4));
  EXPECT_NE(message_of(initial_state_like(k4.state)).find("winitialized"),
            std::string::npos);

  EXPECT_NE(message_of(k33_two_paths().state).find("Pinitialized"),
            std::string::npos);

  Built detached = build_subdivision_state(copbound::complete_graph(4),
                                           complete_graph_decomposition(4),
                                           {.detached_bags = {2}});
  EXPECT_NE(message_of(detached.state).find("initializedvertex"),
            std::string::npos);

  Built starved = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                          three_side_decomposition(3),
                                          {.starved_paths = {2}});
  EXPECT_NE(message_of(starved.state).find("ellPneighbours"),
            std::string::npos);

  Built k33 = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                      three_side_decomposition(3));
  GameState doubled = k33.state;
  doubled.guards[k33.group_cops[2].front()] |=
      copbound::bit(k33.bag_vertices[1][0]);
  EXPECT_NE(message_of(doubled).find("sdisjoint"), std::string::npos);

  Built loose = build_subdivision_state(copbound::complete_bipartite(3, 3),
                                        three_side_decomposition(3),
                                        {.extra_interiors = 1});
  GameState unanchored = loose.state;
  unanchored.guards[loose.group_cops[0].front()] |=
      copbound::bit(loose.interiors[0][1]);
  EXPECT_NE(message_of(unanchored).find("sadjacent"), std::string::npos);

  GameState invalid = k33.state;
  invalid.guards[k33.group_cops[0].front()] &=
      ~copbound::bit(k33.seeds[0].front());
  EXPECT_NE(message_of(invalid).find("invalid"), std::string::npos);
}
