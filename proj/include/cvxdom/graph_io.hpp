// Copyright 2026 The cvxdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvxdom/errors.hpp"
#include "cvxdom/graph.hpp"

namespace cvxdom {

enum class GraphFormat { dimacs, edge_list };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

/// Calls fn(line, line_number) for every line of `text`.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    fn(line, line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

inline bool parse_int(std::string_view tok, int& out) {
  if (tok.empty()) return false;
  long long value = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
    if (value > 2000000000ll) return false;
  }
  out = static_cast<int>(value);
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace detail

/// Decides between DIMACS ("c"/"p" lines) and plain edge lists ("#" comments,
/// "<u> <v>" lines) from the first meaningful line.
inline GraphFormat detect_format(std::string_view text) {
  GraphFormat result = GraphFormat::edge_list;
  bool decided = false;
  detail::for_each_line(text, [&](std::string_view raw, int line_no) {
    if (decided) return;
    std::string_view line = detail::trim(raw);
    if (line.empty()) return;
    char c = line.front();
    if (c == 'c' || c == 'p') {
      result = GraphFormat::dimacs;
      decided = true;
    } else if (c == '#' || std::isdigit(static_cast<unsigned char>(c))) {
      result = GraphFormat::edge_list;
      decided = true;
    } else {
      throw ParseError("unrecognized graph format", line_no);
    }
  });
  if (!decided) throw Error("empty graph input");
  return result;
}

/// DIMACS: header "p edge <n> <m>", edge lines "e <u> <v>", comments "c ...".
/// The declared n bounds the vertex ids; the vertex set is the set of ids
/// that appear in edges (compacted by Graph). "p edge 1 0" is the one-vertex
/// graph.
inline Graph parse_dimacs(std::string_view text) {
  int declared_n = -1;
  std::vector<std::pair<int, int>> edges;
  detail::for_each_line(text, [&](std::string_view raw, int line_no) {
    std::string_view line = detail::trim(raw);
    if (line.empty()) return;
    auto tok = detail::split_ws(line);
    if (tok[0] == "c") return;
    if (tok[0] == "p") {
      if (declared_n >= 0) throw ParseError("duplicate problem line", line_no);
      int n = 0, m = 0;
      if (tok.size() < 4 || tok[1] != "edge" || !detail::parse_int(tok[2], n) ||
          !detail::parse_int(tok[3], m))
        throw ParseError("expected \"p edge <n> <m>\"", line_no);
      if (n < 1) throw ParseError("vertex count must be positive", line_no);
      declared_n = n;
      return;
    }
    if (tok[0] == "e") {
      if (declared_n < 0)
        throw ParseError("edge line before problem line", line_no);
      int u = 0, v = 0;
      if (tok.size() < 3 || !detail::parse_int(tok[1], u) ||
          !detail::parse_int(tok[2], v))
        throw ParseError("expected \"e <u> <v>\"", line_no);
      edges.emplace_back(u, v);
      return;
    }
    throw ParseError("unrecognized line", line_no);
  });
  if (declared_n < 0) throw Error("missing \"p edge\" header");
  if (edges.empty()) {
    if (declared_n == 1) return Graph::single_vertex(1);
    throw Error("graph with " + std::to_string(declared_n) +
                " vertices has no edges (not connected)");
  }
  return Graph::from_edges(std::move(edges), declared_n);
}

/// Plain edge list: one "<u> <v>" per line, "#" comments, ids 1-based.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  detail::for_each_line(text, [&](std::string_view raw, int line_no) {
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') return;
    auto tok = detail::split_ws(line);
    int u = 0, v = 0;
    if (tok.size() < 2 || !detail::parse_int(tok[0], u) ||
        !detail::parse_int(tok[1], v))
      throw ParseError("expected \"<u> <v>\"", line_no);
    edges.emplace_back(u, v);
  });
  if (edges.empty()) throw Error("edge list contains no edges");
  return Graph::from_edges(std::move(edges));
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text)
                                       : parse_edge_list(text);
}

inline Graph parse_graph(std::string_view text) {
  return parse_graph(text, detect_format(text));
}

/// Deterministic DIMACS output in original ids. The header vertex count is
/// the maximum original id so the file parses back to the same graph even
/// when ids are non-contiguous.
inline std::string write_dimacs(const Graph& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p edge " << g.max_original_id() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges())
    out << "e " << g.original_id(u) << " " << g.original_id(v) << "\n";
  return out.str();
}

}  // namespace cvxdom
