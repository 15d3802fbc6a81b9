#pragma once

#include <string>
#include <vector>

#include "hrg/skeleton.hpp"

namespace hrg {

/// Degree vector in Z^k (per-color edge counts for honest paths).
using Degree = std::vector<long>;

inline Degree zero_degree(int rank) { return Degree(rank, 0); }

inline Degree& operator+=(Degree& a, const Degree& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Degree basis_degree(int rank, int color) {
  Degree d = zero_degree(rank);
  d[color - 1] = 1;
  return d;
}

/// A path in a fixed skeleton. Edges are stored in composition order:
/// edges.front() is the outermost (last traversed) edge, edges.back() the
/// first traversed. The empty path is anchored at a vertex.
struct Path {
  std::vector<int> edges;
  int anchor = -1;  // vertex index, used only when edges is empty

  bool empty() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }
};

inline Path vertex_path(int vertex) { return Path{{}, vertex}; }

inline bool composable(const ColoredDigraph& g, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
    if (g.src_of(p.edges[i]) != g.rng_of(p.edges[i + 1])) return false;
  return true;
}

inline Path make_path(const ColoredDigraph& g, const std::vector<std::string>& ids) {
  Path p;
  for (const std::string& id : ids) p.edges.push_back(g.edge_idx(id));
  if (!composable(g, p)) throw invalid_parameter_error("edge sequence is not composable");
  return p;
}

inline int path_src(const ColoredDigraph& g, const Path& p) {
  return p.empty() ? p.anchor : g.src_of(p.edges.back());
}

inline int path_rng(const ColoredDigraph& g, const Path& p) {
  return p.empty() ? p.anchor : g.rng_of(p.edges.front());
}

/// Color word read in composition order (outermost color first).
inline std::vector<int> color_word(const ColoredDigraph& g, const Path& p) {
  std::vector<int> w;
  w.reserve(p.edges.size());
  for (int e : p.edges) w.push_back(g.color_of(e));
  return w;
}

inline Degree path_degree(const ColoredDigraph& g, const Path& p) {
  Degree d = zero_degree(g.rank());
  for (int e : p.edges) d[g.color_of(e) - 1] += 1;
  return d;
}

/// q after p: the composite path q.p (p traversed first).
inline Path compose(const ColoredDigraph& g, const Path& q, const Path& p) {
  if (!p.empty() && !q.empty() && path_src(g, q) != path_rng(g, p))
    throw invalid_parameter_error("paths are not composable");
  Path r = q;
  if (r.empty()) r = p;
  else r.edges.insert(r.edges.end(), p.edges.begin(), p.edges.end());
  if (r.empty()) r.anchor = p.anchor;
  return r;
}

inline std::string path_to_string(const ColoredDigraph& g, const Path& p) {
  if (p.empty()) return "(" + g.vertices()[p.anchor] + ")";
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ".";
    s += g.edge(p.edges[i]).id;
  }
  return s;
}

}  // namespace hrg
