#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cascadelab/graph.hpp"

namespace cascadelab {

/// Malformed graph file. line() is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format, LF line endings:
//   cascadelab-graph v1 <n> <m>
//   N <id> <color> <is_seed:0|1> <birth_time>     (n lines, ids ascending)
//   E <u> <v> <provenance>                        (m lines, u < v, sorted)
void write_graph(std::ostream& out, const LabeledGraph& g);
std::string serialize(const LabeledGraph& g);

LabeledGraph read_graph(std::istream& in);
LabeledGraph deserialize(const std::string& text);

void save_graph(const std::filesystem::path& path, const LabeledGraph& g);
LabeledGraph load_graph(const std::filesystem::path& path);

}  // namespace cascadelab
