#pragma once

// Plain-text edge lists.
//
//   graph N            digraph N          tournament N        hypergraph N K
//   u v                u v                u v                 v1 v2 ... vK
//
// One edge per line, labels separated by single spaces. Writers emit edges
// in canonical order (graph edges as u < v, hyperedges sorted) with '\n'
// line endings, so write(read(text)) == text for any canonical file.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "phl/structures.hpp"

namespace phl {

using AnyStructure = std::variant<Graph, Digraph, Tournament, KUniformHypergraph>;

namespace detail {

inline void write_pairs(std::ostream& os, const std::vector<VertexPair>& pairs) {
  for (auto [u, v] : pairs) os << u << ' ' << v << '\n';
}

inline std::vector<int> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected an integer label, got '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace detail

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << "graph " << g.order() << '\n';
  detail::write_pairs(os, g.edges());
}

inline void write_edge_list(std::ostream& os, const Digraph& d) {
  os << "digraph " << d.order() << '\n';
  detail::write_pairs(os, d.arcs());
}

inline void write_edge_list(std::ostream& os, const Tournament& t) {
  os << "tournament " << t.order() << '\n';
  detail::write_pairs(os, t.digraph().arcs());
}

inline void write_edge_list(std::ostream& os, const KUniformHypergraph& h) {
  os << "hypergraph " << h.order() << ' ' << h.uniformity() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << '\n';
  }
}

inline void write_edge_list(std::ostream& os, const AnyStructure& s) {
  std::visit([&](const auto& x) { write_edge_list(os, x); }, s);
}

template <class S>
std::string to_edge_list(const S& s) {
  std::ostringstream os;
  write_edge_list(os, s);
  return os.str();
}

inline AnyStructure read_edge_list(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) {
      header = line;
      break;
    }
  }
  if (header.empty()) throw FormatError("edge list: missing header line");
  std::istringstream hs(header);
  std::string type;
  hs >> type;
  const auto dims = detail::parse_ints(header.substr(type.size()), line_no);

  std::vector<std::vector<int>> rows;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    rows.push_back(detail::parse_ints(line, line_no));
  }

  auto pairs = [&]() {
    std::vector<VertexPair> out;
    for (const auto& r : rows) {
      if (r.size() != 2) throw FormatError("edge list: expected 2 labels per line for " + type);
      out.emplace_back(r[0], r[1]);
    }
    return out;
  };

  // Structural violations (bad labels, duplicates, non-tournaments) are
  // format errors of the file.
  try {
    if (type == "graph" || type == "digraph" || type == "tournament") {
      if (dims.size() != 1) throw FormatError("edge list: header '" + type + " n' expected");
      const int n = dims[0];
      if (n < 0) throw FormatError("edge list: negative order");
      const auto p = pairs();
      if (type == "graph") return Graph(n, p);
      if (type == "digraph") return Digraph(n, p);
      return Tournament(n, p);
    }
    if (type == "hypergraph") {
      if (dims.size() != 2) throw FormatError("edge list: header 'hypergraph n k' expected");
      if (dims[0] < 0) throw FormatError("edge list: negative order");
      std::vector<HyperEdge> edges(rows.begin(), rows.end());
      return KUniformHypergraph(dims[0], dims[1], std::move(edges));
    }
  } catch (const ParameterError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
  throw FormatError("edge list: unknown structure type '" + type + "'");
}

inline AnyStructure read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  try {
    return read_edge_list(in);
  } catch (const std::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_edge_list_file(const std::string& path, const AnyStructure& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_edge_list(out, s);
  if (!out) throw FormatError("write failed for '" + path + "'");
}

}  // namespace phl
