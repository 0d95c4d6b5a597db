#include <gtest/gtest.h>

#include "cascadelab/graph.hpp"

using namespace cascadelab;

TEST(Degree, CompleteGraph) {
  const auto g = make_complete_graph(4);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(degree(g, v), 3u);
}

TEST(Degree, SingleNode) {
  const auto g = make_complete_graph(1);
  EXPECT_EQ(degree(g, 0), 0u);
}

TEST(Degree, Cycle) {
  const auto g = make_cycle(4);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(degree(g, v), 2u);
}

TEST(Degree, OutOfRangeThrows) {
  const auto g = make_cycle(4);
  EXPECT_THROW(degree(g, 4), std::out_of_range);
}

TEST(Lcc, CycleMinusOne) {
  const auto g = make_cycle(4);
  const NodeSet excl{2};
  EXPECT_EQ(largest_connected_component(g, excl), (NodeSet{0, 1, 3}));
}

TEST(Lcc, StarMinusCenterPicksSmallestLeaf) {
  const auto g = make_star(4);  // center 0, leaves 1..4
  const NodeSet excl{0};
  EXPECT_EQ(largest_connected_component(g, excl), (NodeSet{1}));
}

TEST(Lcc, ConnectedNoExclusionsIsAll) {
  const auto g = make_path(5);
  EXPECT_EQ(largest_connected_component(g), (NodeSet{0, 1, 2, 3, 4}));
}

TEST(Lcc, EmptyRemainder) {
  const auto g = make_path(2);
  const NodeSet excl{0, 1};
  EXPECT_TRUE(largest_connected_component(g, excl).empty());
  EXPECT_TRUE(largest_connected_component(make_complete_graph(0)).empty());
}

TEST(Lcc, LargerComponentBeatsSmallerIds) {
  GraphBuilder b;
  for (int i = 0; i < 6; ++i) b.add_node({});
  b.add_edge(0, 1, Provenance::Plain);
  b.add_edge(2, 3, Provenance::Plain);
  b.add_edge(3, 4, Provenance::Plain);
  const auto g = std::move(b).build();
  EXPECT_EQ(largest_connected_component(g), (NodeSet{2, 3, 4}));
  const NodeSet excl{3};
  EXPECT_EQ(largest_connected_component(g, excl), (NodeSet{0, 1}));
}

TEST(Builder, RejectsSelfLoopsAndDuplicates) {
  GraphBuilder b;
  b.add_node({});
  b.add_node({});
  EXPECT_THROW(b.add_edge(0, 0, Provenance::Plain), GraphError);
  EXPECT_THROW(b.add_edge(0, 2, Provenance::Plain), GraphError);
  b.add_edge(0, 1, Provenance::Plain);
  b.add_edge(1, 0, Provenance::Plain);
  EXPECT_THROW(std::move(b).build(), GraphError);
}

TEST(Builder, AdjacencySymmetricAndSorted) {
  GraphBuilder b;
  for (int i = 0; i < 4; ++i) b.add_node({});
  b.add_edge(3, 0, Provenance::Plain);
  b.add_edge(1, 0, Provenance::Plain);
  b.add_edge(2, 3, Provenance::Plain);
  const auto g = std::move(b).build();
  EXPECT_EQ(g.edge_count(), 3u);
  const auto n0 = g.neighbors(0);
  EXPECT_EQ(std::vector<NodeId>(n0.begin(), n0.end()), (std::vector<NodeId>{1, 3}));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, Provenance::Plain}));
  std::size_t sum = 0;
  for (NodeId v = 0; v < 4; ++v) sum += g.degree(v);
  EXPECT_EQ(sum, 2 * g.edge_count());
}

TEST(Provenance, StringRoundTrip) {
  for (auto p : {Provenance::Initial, Provenance::PaGlobal, Provenance::SeedLink, Provenance::Homophyly,
                 Provenance::Plain}) {
    EXPECT_EQ(provenance_from_string(to_string(p)), p);
  }
  EXPECT_EQ(to_string(Provenance::PaGlobal), "PA_GLOBAL");
  EXPECT_THROW(provenance_from_string("BOGUS"), std::invalid_argument);
}

TEST(NodeSetNormalize, SortsDedupsAndChecksRange) {
  NodeSet s{3, 1, 3, 0};
  normalize_node_set(s, 4);
  EXPECT_EQ(s, (NodeSet{0, 1, 3}));
  NodeSet bad{4};
  EXPECT_THROW(normalize_node_set(bad, 4), std::out_of_range);
}
