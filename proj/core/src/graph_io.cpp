#include "cascadelab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace cascadelab {

namespace {

constexpr std::string_view kMagic = "cascadelab-graph";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? line.size() : next;
    fields.push_back(line.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return fields;
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << kMagic << ' ' << kVersion << ' ' << g.node_count() << ' ' << g.edge_count() << '\n';
  const auto metas = g.metas();
  for (std::size_t i = 0; i < metas.size(); ++i) {
    out << "N " << i << ' ' << metas[i].color << ' ' << (metas[i].is_seed ? 1 : 0) << ' '
        << metas[i].birth_time << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << "E " << e.u << ' ' << e.v << ' ' << to_string(e.tag) << '\n';
  }
}

std::string serialize(const LabeledGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return std::move(out).str();
}

LabeledGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError(0, "empty input, missing header");
  ++line_no;
  const auto header = split_fields(line);
  if (header.size() != 4 || header[0] != kMagic) throw ParseError(line_no, "malformed header");
  if (header[1] != kVersion) {
    throw ParseError(line_no, "unsupported version '" + std::string(header[1]) + "'");
  }
  const auto n = parse_int<std::uint64_t>(header[2], line_no, "node count");
  const auto m = parse_int<std::uint64_t>(header[3], line_no, "edge count");
  if (n > std::uint64_t{0xFFFFFFFF}) throw ParseError(line_no, "node count too large");

  GraphBuilder builder(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw ParseError(0, "truncated input: expected node line");
    ++line_no;
    const auto f = split_fields(line);
    if (f.size() != 5 || f[0] != "N") throw ParseError(line_no, "malformed node line");
    const auto id = parse_int<std::uint64_t>(f[1], line_no, "node id");
    if (id != i) throw ParseError(line_no, "node lines must be sorted by id; expected " + std::to_string(i));
    NodeMeta meta;
    meta.color = parse_int<ColorId>(f[2], line_no, "color");
    if (f[3] != "0" && f[3] != "1") throw ParseError(line_no, "is_seed must be 0 or 1");
    meta.is_seed = f[3] == "1";
    meta.birth_time = parse_int<std::uint32_t>(f[4], line_no, "birth time");
    builder.add_node(meta);
  }

  // Sorted order makes any duplicate the immediate successor of its twin.
  std::uint64_t prev_u = 0;
  std::uint64_t prev_v = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw ParseError(0, "truncated input: expected edge line");
    ++line_no;
    const auto f = split_fields(line);
    if (f.size() != 4 || f[0] != "E") throw ParseError(line_no, "malformed edge line");
    const auto u = parse_int<std::uint64_t>(f[1], line_no, "edge endpoint");
    const auto v = parse_int<std::uint64_t>(f[2], line_no, "edge endpoint");
    if (u >= n || v >= n) throw ParseError(line_no, "dangling edge endpoint");
    if (u >= v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    Provenance tag;
    try {
      tag = provenance_from_string(f[3]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (i > 0 && u == prev_u && v == prev_v) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (i > 0 && (u < prev_u || (u == prev_u && v < prev_v))) {
      throw ParseError(line_no, "edge lines must be sorted lexicographically");
    }
    prev_u = u;
    prev_v = v;
    builder.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), tag);
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw ParseError(line_no, "trailing content after edge list");
  }
  return std::move(builder).build();
}

LabeledGraph deserialize(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const LabeledGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_graph(out, g);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace cascadelab
