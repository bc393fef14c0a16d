#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/triangulation.hpp"

namespace cyclo {

/// Text form of a triangulation: `n <vertex-count>` then one interior edge
/// `u v` (u < v) per line in sorted order. `#` starts a comment.
inline std::string serialize(const CsTriangulation& t) {
  std::string out = "n " + std::to_string(t.dim().n()) + "\n";
  for (const auto& e : t.interior()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Several triangulations as blocks separated by blank lines.
inline std::string serialize(const std::vector<CsTriangulation>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) out += "\n";
    out += serialize(states[i]);
  }
  return out;
}

namespace detail {

[[noreturn]] inline void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

struct Block {
  std::size_t header_line = 0;
  int n = 0;
  std::vector<std::pair<std::size_t, Edge>> edges;
};

inline std::vector<Block> parse_blocks(const std::string& text) {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool open = false;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) {
      // A truly blank line ends the current block; a comment-only line does not.
      if (raw.find_first_not_of(" \t\r") == std::string::npos && open) open = false;
      continue;
    }
    std::string extra;
    if (first == "n") {
      long long n = 0;
      if (!(fields >> n)) parse_error(line, "expected `n <vertex-count>`");
      if (fields >> extra) parse_error(line, "unexpected token `" + extra + "`");
      if (n < 4 || n % 2 != 0 || n > kMaxVertices) {
        parse_error(line, "vertex count " + std::to_string(n) + " is not an even number in [4, " +
                              std::to_string(kMaxVertices) + "]");
      }
      blocks.push_back({line, static_cast<int>(n), {}});
      open = true;
      continue;
    }
    if (!open) parse_error(line, "edge before the `n <vertex-count>` header");
    long long u = 0;
    long long v = 0;
    std::istringstream pairs(raw);
    if (!(pairs >> u >> v)) parse_error(line, "expected an edge `<u> <v>`");
    if (pairs >> extra) parse_error(line, "unexpected token `" + extra + "`");
    const int n = blocks.back().n;
    if (u < 0 || v < 0 || u >= n || v >= n) parse_error(line, "vertex outside [0, " + std::to_string(n - 1) + "]");
    if (u == v) parse_error(line, "degenerate edge");
    blocks.back().edges.emplace_back(line, Edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  return blocks;
}

inline CsTriangulation build_block(const Block& b) {
  const PolygonDim dim((b.n - 2) / 2);
  std::vector<Edge> edges;
  for (const auto& [line, e] : b.edges) {
    if (is_boundary(e, dim)) parse_error(line, to_string(e) + " is a boundary edge");
    edges.push_back(e);
  }
  auto t = CsTriangulation::from_edges(dim, edges);
  if (t.interior().size() != edges.size()) parse_error(b.header_line, "repeated edge");
  const auto report = validate(t);
  if (!report.ok()) parse_error(b.header_line, "not a centrally symmetric triangulation: " + report.summary());
  return t;
}

}  // namespace detail

/// Parses exactly one triangulation.
inline CsTriangulation parse_triangulation(const std::string& text) {
  const auto blocks = detail::parse_blocks(text);
  if (blocks.empty()) detail::parse_error(1, "missing `n <vertex-count>` header");
  if (blocks.size() > 1) detail::parse_error(blocks[1].header_line, "more than one triangulation");
  return detail::build_block(blocks.front());
}

inline std::vector<CsTriangulation> parse_triangulations(const std::string& text) {
  std::vector<CsTriangulation> out;
  for (const auto& b : detail::parse_blocks(text)) out.push_back(detail::build_block(b));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Error(ErrorKind::Io, "cannot write " + path);
}

inline CsTriangulation load_triangulation(const std::string& path) {
  try {
    return parse_triangulation(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, path + ": " + e.detail());
  }
}

}  // namespace cyclo
