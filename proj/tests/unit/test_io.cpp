#include <gtest/gtest.h>

#include <filesystem>

#include "cascadelab/generators.hpp"
#include "cascadelab/graph_io.hpp"

using namespace cascadelab;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    deserialize(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return SIZE_MAX;
}

}  // namespace

TEST(GraphIo, EmptyGraphIsHeaderOnly) {
  const auto g = make_complete_graph(0);
  EXPECT_EQ(serialize(g), "cascadelab-graph v1 0 0\n");
  EXPECT_EQ(deserialize(serialize(g)), g);
}

TEST(GraphIo, ExactTextForSmallGraph) {
  GraphBuilder b;
  b.add_node({0, true, 0});
  b.add_node({1, true, 1});
  b.add_node({1, false, 2});
  b.add_edge(2, 1, Provenance::Homophyly);
  b.add_edge(0, 1, Provenance::Initial);
  const auto g = std::move(b).build();
  EXPECT_EQ(serialize(g),
            "cascadelab-graph v1 3 2\n"
            "N 0 0 1 0\n"
            "N 1 1 1 1\n"
            "N 2 1 0 2\n"
            "E 0 1 INITIAL\n"
            "E 1 2 HOMOPHYLY\n");
}

TEST(GraphIo, InitialGraphRoundTrips) {
  const auto g = gen_security(6, 5, 1.5, 3);
  const auto text = serialize(g);
  const auto back = deserialize(text);
  EXPECT_EQ(back, g);
  for (const auto& e : back.edges()) EXPECT_EQ(e.tag, Provenance::Initial);
}

TEST(GraphIo, SecurityGraphByteIdentical) {
  const auto g = gen_security(1000, 5, 1.5, 42);
  const auto text = serialize(g);
  const auto back = deserialize(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(serialize(back), text);
}

TEST(GraphIo, FileRoundTrip) {
  const auto g = gen_pa(200, 3, 9);
  const auto path = std::filesystem::temp_directory_path() / "cascadelab_io_test.txt";
  save_graph(path, g);
  EXPECT_EQ(load_graph(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(load_graph(path), std::runtime_error);
}

TEST(GraphIo, MalformedHeader) {
  EXPECT_EQ(parse_error_line("cascadelab-graph v2 0 0\n"), 1u);
  EXPECT_EQ(parse_error_line("graph 1 0\n"), 1u);
  EXPECT_EQ(parse_error_line("cascadelab-graph v1 x 0\n"), 1u);
  EXPECT_EQ(parse_error_line(""), 0u);
}

TEST(GraphIo, DanglingEndpointNamesLine) {
  EXPECT_EQ(parse_error_line("cascadelab-graph v1 2 1\nN 0 0 0 0\nN 1 0 0 1\nE 0 2 PLAIN\n"), 4u);
}

TEST(GraphIo, DuplicateEdgeNamesLine) {
  EXPECT_EQ(parse_error_line("cascadelab-graph v1 3 3\nN 0 0 0 0\nN 1 0 0 1\nN 2 0 0 2\n"
                             "E 0 1 PLAIN\nE 0 2 PLAIN\nE 0 2 PLAIN\n"),
            7u);
}

TEST(GraphIo, OtherStructuralErrors) {
  const std::string head = "cascadelab-graph v1 2 1\nN 0 0 0 0\nN 1 0 0 1\n";
  EXPECT_EQ(parse_error_line(head + "E 1 0 PLAIN\n"), 4u);       // u > v
  EXPECT_EQ(parse_error_line(head + "E 0 1 WHATEVER\n"), 4u);    // unknown tag
  EXPECT_EQ(parse_error_line(head + "E 0 1 PLAIN extra\n"), 4u);  // trailing token
  EXPECT_EQ(parse_error_line("cascadelab-graph v1 2 0\nN 1 0 0 0\nN 0 0 0 1\n"), 2u);  // id order
  EXPECT_EQ(parse_error_line("cascadelab-graph v1 1 0\nN 0 0 2 0\n"), 2u);  // bad is_seed
  EXPECT_EQ(parse_error_line(head + "E 0 1 PLAIN\nE 0 1 PLAIN\n"), 5u);     // beyond m
  EXPECT_EQ(parse_error_line(head), 0u);  // missing edge line: end of input
  EXPECT_EQ(parse_error_line("cascadelab-graph v1 3 2\nN 0 0 0 0\nN 1 0 0 1\nN 2 0 0 2\nE 0 2 PLAIN\nE 0 1 PLAIN\n"), 6u);
}
