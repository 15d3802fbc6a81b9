#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hrg/kgraph.hpp"

namespace hrg {

/// In-memory form of a .kg file.
struct KgDocument {
  int version = 1;
  int rank = 0;
  std::map<int, std::string> color_names;  // optional display names
  std::vector<std::string> vertices;
  std::vector<EdgeRec> edges;
  std::vector<SquareDecl> squares;
};

namespace detail {

struct KgLine {
  int number = 0;
  std::vector<std::string> tokens;
  std::vector<int> columns;  // 1-based start column of each token
};

inline std::vector<KgLine> tokenize_kg(const std::string& text) {
  std::vector<KgLine> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    KgLine line;
    line.number = number;
    std::string tok;
    int start = 0;
    for (int i = 0; i <= static_cast<int>(raw.size()); ++i) {
      char c = i < static_cast<int>(raw.size()) ? raw[i] : ' ';
      if (c == '#') break;
      if (c == ' ' || c == '\t') {
        if (!tok.empty()) {
          line.tokens.push_back(tok);
          line.columns.push_back(start + 1);
          tok.clear();
        }
      } else {
        if (tok.empty()) start = i;
        tok += c;
      }
    }
    if (!line.tokens.empty()) lines.push_back(line);
  }
  return lines;
}

inline int parse_int_token(const KgLine& line, std::size_t i, const std::string& what) {
  if (i >= line.tokens.size())
    throw syntax_error(line.number, line.columns.empty() ? 1 : line.columns.back(), what);
  try {
    std::size_t used = 0;
    int v = std::stoi(line.tokens[i], &used);
    if (used != line.tokens[i].size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw syntax_error(line.number, line.columns[i], what);
  }
}

inline const std::string& parse_id_token(const KgLine& line, std::size_t i,
                                         const std::string& what) {
  if (i >= line.tokens.size())
    throw syntax_error(line.number,
                       line.columns.empty() ? 1 : line.columns.back() + 1, what);
  return line.tokens[i];
}

}  // namespace detail

/// Parse the versioned .kg text format. Shape errors become syntax_error with
/// position and expectation; unresolved or ill-typed references become
/// semantic_error.
inline KgDocument parse_kg(const std::string& text) {
  std::vector<detail::KgLine> lines = detail::tokenize_kg(text);
  if (lines.empty()) throw syntax_error(1, 1, "header `kg 1`");
  KgDocument doc;
  std::size_t at = 0;
  const detail::KgLine& header = lines[at];
  if (header.tokens[0] != "kg")
    throw syntax_error(header.number, header.columns[0], "header `kg 1`");
  doc.version = detail::parse_int_token(header, 1, "format version");
  if (doc.version != 1)
    throw semantic_error("unsupported format version " + std::to_string(doc.version));
  ++at;
  if (at >= lines.size() || lines[at].tokens[0] != "rank")
    throw syntax_error(at < lines.size() ? lines[at].number : header.number + 1, 1,
                       "`rank N`");
  doc.rank = detail::parse_int_token(lines[at], 1, "rank value");
  ++at;
  for (; at < lines.size(); ++at) {
    const detail::KgLine& line = lines[at];
    const std::string& kind = line.tokens[0];
    if (kind == "color") {
      int c = detail::parse_int_token(line, 1, "color index");
      doc.color_names[c] = detail::parse_id_token(line, 2, "color name");
    } else if (kind == "vertex") {
      doc.vertices.push_back(detail::parse_id_token(line, 1, "vertex id"));
    } else if (kind == "edge") {
      EdgeRec e;
      e.id = detail::parse_id_token(line, 1, "edge id");
      e.color = detail::parse_int_token(line, 2, "edge color");
      e.src = detail::parse_id_token(line, 3, "source vertex");
      e.rng = detail::parse_id_token(line, 4, "range vertex");
      doc.edges.push_back(e);
    } else if (kind == "square") {
      // square LO LI = RO RI, rightmost edge traversed first
      SquareDecl s;
      s.lhs_outer = detail::parse_id_token(line, 1, "edge id");
      s.lhs_inner = detail::parse_id_token(line, 2, "edge id");
      if (detail::parse_id_token(line, 3, "`=`") != "=")
        throw syntax_error(line.number, line.columns[3], "`=`");
      s.rhs_outer = detail::parse_id_token(line, 4, "edge id");
      s.rhs_inner = detail::parse_id_token(line, 5, "edge id");
      doc.squares.push_back(s);
    } else {
      throw syntax_error(line.number, line.columns[0],
                         "`color`, `vertex`, `edge` or `square`");
    }
  }
  // semantic pass: everything must resolve against a well-formed skeleton
  ColoredDigraph g = [&] {
    try {
      return ColoredDigraph(doc.rank, doc.vertices, doc.edges);
    } catch (const error& e) {
      throw semantic_error(e.what());
    }
  }();
  for (const auto& [c, name] : doc.color_names)
    if (c < 1 || c > doc.rank)
      throw semantic_error("color name for out-of-range color " + std::to_string(c));
  SquareSet s = [&] {
    try {
      return SquareSet(g, doc.squares);
    } catch (const error& e) {
      throw semantic_error(e.what());
    }
  }();
  for (const Square& sq : s.squares()) {
    std::string why;
    if (!detail::square_well_formed(g, sq, &why))
      throw semantic_error("square " + two_path_to_string(g, {sq.lhs_outer, sq.lhs_inner}) +
                           " = " + two_path_to_string(g, {sq.rhs_outer, sq.rhs_inner}) +
                           ": " + why);
  }
  if (!s.duplicates().empty())
    throw semantic_error("2-path " + two_path_to_string(g, s.duplicates()[0].path) +
                         " covered by two squares");
  return doc;
}

/// Canonical serialization: declarations sorted lexicographically per section.
inline std::string serialize_kg(const KgDocument& doc) {
  std::ostringstream out;
  out << "kg " << doc.version << "\n";
  out << "rank " << doc.rank << "\n";
  for (const auto& [c, name] : doc.color_names) out << "color " << c << " " << name << "\n";
  std::vector<std::string> vs = doc.vertices;
  std::sort(vs.begin(), vs.end());
  for (const std::string& v : vs) out << "vertex " << v << "\n";
  std::vector<EdgeRec> es = doc.edges;
  std::sort(es.begin(), es.end(), [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  for (const EdgeRec& e : es)
    out << "edge " << e.id << " " << e.color << " " << e.src << " " << e.rng << "\n";
  std::vector<std::array<std::string, 4>> sq;
  for (const SquareDecl& s : doc.squares)
    sq.push_back({s.lhs_outer, s.lhs_inner, s.rhs_outer, s.rhs_inner});
  for (auto& q : sq)
    if (std::array<std::string, 2>{q[2], q[3]} < std::array<std::string, 2>{q[0], q[1]})
      q = {q[2], q[3], q[0], q[1]};
  std::sort(sq.begin(), sq.end());
  for (const auto& q : sq)
    out << "square " << q[0] << " " << q[1] << " = " << q[2] << " " << q[3] << "\n";
  return out.str();
}

inline KGraph to_kgraph(const KgDocument& doc) {
  return assemble(ColoredDigraph(doc.rank, doc.vertices, doc.edges), doc.squares);
}

inline KgDocument document_of(const ColoredDigraph& g, const SquareSet& s,
                              std::map<int, std::string> color_names = {}) {
  KgDocument doc;
  doc.rank = g.rank();
  doc.color_names = std::move(color_names);
  doc.vertices = g.vertices();
  doc.edges = g.edges();
  for (const Square& sq : s.squares())
    doc.squares.push_back({g.edge(sq.lhs_outer).id, g.edge(sq.lhs_inner).id,
                           g.edge(sq.rhs_outer).id, g.edge(sq.rhs_inner).id});
  return doc;
}

inline KgDocument document_of(const KGraph& k,
                              std::map<int, std::string> color_names = {}) {
  return document_of(k.skeleton(), k.squares(), std::move(color_names));
}

/// JSON mirror of KgDocument, schema version 1.
inline nlohmann::json to_json(const KgDocument& doc) {
  nlohmann::json j;
  j["schema"] = "kg-json-1";
  j["rank"] = doc.rank;
  j["colors"] = nlohmann::json::object();
  for (const auto& [c, name] : doc.color_names) j["colors"][std::to_string(c)] = name;
  std::vector<std::string> vs = doc.vertices;
  std::sort(vs.begin(), vs.end());
  j["vertices"] = vs;
  std::vector<EdgeRec> es = doc.edges;
  std::sort(es.begin(), es.end(), [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  j["edges"] = nlohmann::json::array();
  for (const EdgeRec& e : es)
    j["edges"].push_back({{"id", e.id}, {"color", e.color}, {"src", e.src}, {"rng", e.rng}});
  j["squares"] = nlohmann::json::array();
  for (const SquareDecl& s : doc.squares)
    j["squares"].push_back({{"lhs", {s.lhs_outer, s.lhs_inner}},
                            {"rhs", {s.rhs_outer, s.rhs_inner}}});
  return j;
}

/// DOT rendering of the skeleton only. Squares are not representable; the
/// output says so in a comment.
inline std::string to_dot(const KgDocument& doc, const std::string& name = "kg") {
  static const char* palette[8] = {"black",  "blue",   "red",    "darkgreen",
                                   "orange", "purple", "brown",  "cadetblue"};
  std::ostringstream out;
  out << "// lossy export: factorization squares are omitted\n";
  out << "digraph " << name << " {\n";
  std::vector<std::string> vs = doc.vertices;
  std::sort(vs.begin(), vs.end());
  for (const std::string& v : vs) out << "  \"" << v << "\";\n";
  std::vector<EdgeRec> es = doc.edges;
  std::sort(es.begin(), es.end(), [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  for (const EdgeRec& e : es) {
    out << "  \"" << e.src << "\" -> \"" << e.rng << "\" [label=\"" << e.id
        << "\", color=" << palette[(e.color - 1) % 8];
    if (e.src == e.rng) out << ", style=bold";  // loops stand out from the cycle edges
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hrg
