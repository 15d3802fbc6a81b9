#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrg/errors.hpp"

namespace hrg {

/// Subset of the colors 1..k.
using ColorSet = std::set<int>;

struct EdgeRec {
  std::string id;
  int color = 0;
  std::string src;
  std::string rng;
};

/// Finite edge-colored directed multigraph, the 1-skeleton of a k-graph.
/// Immutable after construction; loops and multi-edges are allowed.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;

  ColoredDigraph(int rank, std::vector<std::string> vertices,
                 std::vector<EdgeRec> edges)
      : rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (rank_ < 1) throw invalid_parameter_error("rank must be >= 1");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
        throw duplicate_id_error(vertices_[i]);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const EdgeRec& e = edges_[i];
      if (vertex_index_.count(e.id)) throw duplicate_id_error(e.id);
      if (!edge_index_.emplace(e.id, static_cast<int>(i)).second)
        throw duplicate_id_error(e.id);
      if (e.color < 1 || e.color > rank_)
        throw color_out_of_range_error("edge " + e.id, e.color);
      if (!vertex_index_.count(e.src)) throw dangling_endpoint_error(e.id, e.src);
      if (!vertex_index_.count(e.rng)) throw dangling_endpoint_error(e.id, e.rng);
    }
    out_by_src_.assign(vertices_.size(), {});
    in_by_rng_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out_by_src_[vertex_index_.at(edges_[i].src)].push_back(static_cast<int>(i));
      in_by_rng_[vertex_index_.at(edges_[i].rng)].push_back(static_cast<int>(i));
    }
  }

  int rank() const { return rank_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }

  int vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw unknown_vertex_error(id);
    return it->second;
  }
  int edge_idx(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw unknown_edge_error(id);
    return it->second;
  }

  const EdgeRec& edge(int i) const { return edges_[i]; }
  int src_of(int e) const { return vertex_index_.at(edges_[e].src); }
  int rng_of(int e) const { return vertex_index_.at(edges_[e].rng); }
  int color_of(int e) const { return edges_[e].color; }

  /// Edge indices leaving vertex v (s(e) = v).
  const std::vector<int>& out_edges(int v) const { return out_by_src_[v]; }
  /// Edge indices entering vertex v (r(e) = v).
  const std::vector<int>& in_edges(int v) const { return in_by_rng_[v]; }

  void check_colors(const ColorSet& colors) const {
    for (int c : colors)
      if (c < 1 || c > rank_) throw color_out_of_range_error("color set", c);
  }

  ColorSet all_colors() const {
    ColorSet s;
    for (int c = 1; c <= rank_; ++c) s.insert(c);
    return s;
  }

  ColorSet complement(const ColorSet& b) const {
    check_colors(b);
    ColorSet s;
    for (int c = 1; c <= rank_; ++c)
      if (!b.count(c)) s.insert(c);
    return s;
  }

 private:
  int rank_ = 1;
  std::vector<std::string> vertices_;
  std::vector<EdgeRec> edges_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<std::vector<int>> out_by_src_;
  std::vector<std::vector<int>> in_by_rng_;
};

inline ColoredDigraph build_skeleton(int rank, std::vector<std::string> vertices,
                                     std::vector<EdgeRec> edges) {
  return ColoredDigraph(rank, std::move(vertices), std::move(edges));
}

/// Same vertex set, only the edges whose color lies in `colors`. Rank unchanged.
inline ColoredDigraph subgraph_by_colors(const ColoredDigraph& g,
                                         const ColorSet& colors) {
  g.check_colors(colors);
  std::vector<EdgeRec> kept;
  for (const EdgeRec& e : g.edges())
    if (colors.count(e.color)) kept.push_back(e);
  return ColoredDigraph(g.rank(), g.vertices(), std::move(kept));
}

struct Component {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

/// Connected component of w with edge directions ignored.
inline Component undirected_component(const ColoredDigraph& g, const std::string& w) {
  int start = g.vertex_index(w);
  std::vector<char> seen_v(g.vertices().size(), 0);
  std::vector<char> seen_e(g.edges().size(), 0);
  std::vector<int> stack{start};
  seen_v[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int e) {
      seen_e[e] = 1;
      for (int u : {g.src_of(e), g.rng_of(e)}) {
        if (!seen_v[u]) {
          seen_v[u] = 1;
          stack.push_back(u);
        }
      }
    };
    for (int e : g.out_edges(v)) visit(e);
    for (int e : g.in_edges(v)) visit(e);
  }
  Component c;
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    if (seen_v[i]) c.vertices.push_back(g.vertices()[i]);
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (seen_e[i]) c.edges.push_back(g.edges()[i].id);
  return c;
}

}  // namespace hrg
