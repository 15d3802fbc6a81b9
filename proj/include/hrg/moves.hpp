#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hrg/isomorphism.hpp"
#include "hrg/realization.hpp"

namespace hrg {

/// Cartesian product of k-graphs: product skeleton, lifted within-factor
/// squares on each fiber plus the forced cross-factor squares. Second-factor
/// colors are shifted by rank(k1).
inline KGraph product(const KGraph& k1, const KGraph& k2) {
  const ColoredDigraph& g1 = k1.skeleton();
  const ColoredDigraph& g2 = k2.skeleton();
  auto pair_id = [](const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
  };
  std::vector<std::string> vertices;
  for (const std::string& u : g1.vertices())
    for (const std::string& v : g2.vertices()) vertices.push_back(pair_id(u, v));
  std::vector<EdgeRec> edges;
  for (const EdgeRec& e : g1.edges())
    for (const std::string& y : g2.vertices())
      edges.push_back({pair_id(e.id, y), e.color, pair_id(e.src, y), pair_id(e.rng, y)});
  for (const std::string& x : g1.vertices())
    for (const EdgeRec& f : g2.edges())
      edges.push_back({pair_id(x, f.id), g1.rank() + f.color, pair_id(x, f.src),
                       pair_id(x, f.rng)});
  std::vector<SquareDecl> decls;
  auto id1 = [&](int e) { return g1.edge(e).id; };
  auto id2 = [&](int e) { return g2.edge(e).id; };
  for (const Square& s : k1.squares().squares())
    for (const std::string& y : g2.vertices())
      decls.push_back({pair_id(id1(s.lhs_outer), y), pair_id(id1(s.lhs_inner), y),
                       pair_id(id1(s.rhs_outer), y), pair_id(id1(s.rhs_inner), y)});
  for (const std::string& x : g1.vertices())
    for (const Square& s : k2.squares().squares())
      decls.push_back({pair_id(x, id2(s.lhs_outer)), pair_id(x, id2(s.lhs_inner)),
                       pair_id(x, id2(s.rhs_outer)), pair_id(x, id2(s.rhs_inner))});
  for (const EdgeRec& e : g1.edges())
    for (const EdgeRec& f : g2.edges())
      decls.push_back({pair_id(e.id, f.rng), pair_id(e.src, f.id),
                       pair_id(e.rng, f.id), pair_id(e.id, f.src)});
  return assemble(ColoredDigraph(g1.rank() + g2.rank(), std::move(vertices),
                                 std::move(edges)),
                  decls);
}

/// Neighborhood of w: the undirected component of w in the subskeleton on the
/// complement colors of B.
inline Component neighborhood(const KGraph& k, const std::string& w, const ColorSet& b) {
  if (b.empty()) throw invalid_parameter_error("color set must be nonempty");
  return undirected_component(subgraph_by_colors(k.skeleton(), k.skeleton().complement(b)),
                              w);
}

struct ReducibilityResult {
  bool reducible = false;
  std::string failing_condition;            // first failing condition, when any
  std::string common_source;                // v
  std::map<int, std::string> bridges;       // color b -> f_{b,x}
};

/// Reducibility of w with color set B: a unique bridge per color of B, common
/// bridge source, no B-colored loop at w, and only B-colored edges from the
/// bridge source back into w.
inline ReducibilityResult is_reducible(const KGraph& k, const std::string& w,
                                       const ColorSet& b) {
  const ColoredDigraph& g = k.skeleton();
  g.check_colors(b);
  int wi = g.vertex_index(w);
  ReducibilityResult res;
  for (int c : b) {
    std::vector<int> found;
    for (int e : g.in_edges(wi))
      if (g.color_of(e) == c) found.push_back(e);
    if (found.size() != 1) {
      res.failing_condition = "unique-bridge: |" + w + "L^" + std::to_string(c) +
                              "| = " + std::to_string(found.size());
      return res;
    }
    res.bridges[c] = g.edge(found[0]).id;
  }
  int v = g.src_of(g.edge_idx(res.bridges.begin()->second));
  for (const auto& [c, id] : res.bridges) {
    if (g.src_of(g.edge_idx(id)) != v) {
      res.failing_condition = "common-source: bridge sources differ at " + w;
      return res;
    }
  }
  for (int e : g.out_edges(wi)) {
    if (b.count(g.color_of(e)) && g.rng_of(e) == wi) {
      res.failing_condition = "no-loop: B-colored loop " + g.edge(e).id + " at " + w;
      return res;
    }
  }
  for (int e : g.in_edges(wi)) {
    if (g.src_of(e) == v && !b.count(g.color_of(e))) {
      res.failing_condition = "back-edges-in-B: edge " + g.edge(e).id +
                              " from " + g.vertices()[v] + " has color outside B";
      return res;
    }
  }
  res.reducible = true;
  res.common_source = g.vertices()[v];
  return res;
}

struct StationaryReport {
  std::vector<std::string> failures;
  bool stationary() const { return failures.empty(); }
};

/// Stationary set check: common endpoints, and closure under square-swapping
/// against B-colored edges composed on either side.
inline StationaryReport is_stationary(const KGraph& k,
                                      const std::vector<std::string>& f_ids,
                                      const ColorSet& b) {
  const ColoredDigraph& g = k.skeleton();
  StationaryReport rep;
  if (f_ids.empty()) {
    rep.failures.push_back("empty edge set");
    return rep;
  }
  std::set<int> f;
  for (const std::string& id : f_ids) f.insert(g.edge_idx(id));
  int s0 = g.src_of(*f.begin()), r0 = g.rng_of(*f.begin());
  for (int e : f)
    if (g.src_of(e) != s0 || g.rng_of(e) != r0)
      rep.failures.push_back("endpoints differ: " + g.edge(e).id);
  for (int f1 : f) {
    for (int lam : g.out_edges(r0)) {
      if (!b.count(g.color_of(lam)) || g.color_of(lam) == g.color_of(f1)) continue;
      auto partner = k.squares().partner(TwoPath{lam, f1});
      if (!partner) continue;  // surfaced by KG2, not here
      if (!f.count(partner->inner))
        rep.failures.push_back("inner partner " + g.edge(partner->inner).id +
                               " of " + g.edge(lam).id + "." + g.edge(f1).id +
                               " escapes the set");
    }
    for (int lam : g.in_edges(s0)) {
      if (!b.count(g.color_of(lam)) || g.color_of(lam) == g.color_of(f1)) continue;
      auto partner = k.squares().partner(TwoPath{f1, lam});
      if (!partner) continue;
      if (!f.count(partner->outer))
        rep.failures.push_back("outer partner " + g.edge(partner->outer).id +
                               " of " + g.edge(f1).id + "." + g.edge(lam).id +
                               " escapes the set");
    }
  }
  return rep;
}

/// Full H_R verdict for a pair (w, B).
struct HrReport {
  std::string vertex;
  ColorSet colors;        // B
  ColorSet complement;    // E \ B
  Component neighborhood; // U_w
  std::map<std::string, ReducibilityResult> reducibility;  // per x in U^0
  std::vector<std::string> bridge_edges;
  std::vector<std::string> cobridge_edges;
  bool disjoint = true;
  std::map<std::string, StationaryReport> stationary;      // per x in U^0
  std::vector<std::string> cobridge_exit_failures;         // derived consequence

  bool fully_reducible() const {
    for (const auto& [x, r] : reducibility)
      if (!r.reducible) return false;
    return disjoint;
  }
  bool passed() const {
    if (!fully_reducible()) return false;
    for (const auto& [x, s] : stationary)
      if (!s.stationary()) return false;
    return cobridge_exit_failures.empty();
  }
  std::string summary() const {
    for (const auto& [x, r] : reducibility)
      if (!r.reducible) return x + " not reducible (" + r.failing_condition + ")";
    if (!disjoint) return "bridge and co-bridge edges intersect";
    for (const auto& [x, s] : stationary)
      if (!s.stationary()) return "bridge set at " + x + " not stationary";
    if (!cobridge_exit_failures.empty())
      return "co-bridge range inside the neighborhood";
    return "pass";
  }
};

inline HrReport check_hr(const KGraph& k, const std::string& w, const ColorSet& b) {
  const ColoredDigraph& g = k.skeleton();
  HrReport rep;
  rep.vertex = w;
  rep.colors = b;
  rep.complement = g.complement(b);
  rep.neighborhood = neighborhood(k, w, b);
  std::set<int> u_vertices;
  for (const std::string& x : rep.neighborhood.vertices)
    u_vertices.insert(g.vertex_index(x));
  std::set<std::string> bridges, cobridges;
  for (const std::string& x : rep.neighborhood.vertices) {
    rep.reducibility[x] = is_reducible(k, x, b);
    int xi = g.vertex_index(x);
    std::vector<std::string> bridge_set;
    for (int e : g.in_edges(xi))
      if (b.count(g.color_of(e))) {
        bridges.insert(g.edge(e).id);
        bridge_set.push_back(g.edge(e).id);
      }
    for (int e : g.out_edges(xi))
      if (b.count(g.color_of(e))) cobridges.insert(g.edge(e).id);
    if (!bridge_set.empty()) rep.stationary[x] = is_stationary(k, bridge_set, b);
  }
  rep.bridge_edges.assign(bridges.begin(), bridges.end());
  rep.cobridge_edges.assign(cobridges.begin(), cobridges.end());
  for (const std::string& e : rep.cobridge_edges)
    if (bridges.count(e)) rep.disjoint = false;
  for (const std::string& e : rep.cobridge_edges)
    if (u_vertices.count(g.rng_of(g.edge_idx(e))))
      rep.cobridge_exit_failures.push_back(e);
  return rep;
}

struct reduce_hypotheses_error : hypotheses_not_met_error {
  explicit reduce_hypotheses_error(HrReport r)
      : hypotheses_not_met_error(r.summary()), report(std::move(r)) {}
  HrReport report;
};

namespace detail {

// Induced squares on a moved graph: for each composable bicolored 2-path the
// unique transposed-color 2-path with matching endpoints whose parent image is
// equivalent in the parent graph.
inline std::vector<SquareDecl> induced_squares(const ColoredDigraph& out,
                                               const KGraph& parent,
                                               const std::vector<Path>& parent_paths) {
  std::map<std::uint64_t, TwoPath> partner_of;
  std::vector<SquareDecl> decls;
  for_each_bicolored_two_path(out, [&](const TwoPath& p) {
    Path pp = compose(parent.skeleton(), parent_paths[p.outer], parent_paths[p.inner]);
    std::vector<TwoPath> found;
    for (int inner = 0; inner < static_cast<int>(out.edges().size()); ++inner) {
      if (out.color_of(inner) != out.color_of(p.outer)) continue;
      if (out.src_of(inner) != out.src_of(p.inner)) continue;
      for (int outer : out.out_edges(out.rng_of(inner))) {
        if (out.color_of(outer) != out.color_of(p.inner)) continue;
        if (out.rng_of(outer) != out.rng_of(p.outer)) continue;
        Path qq = compose(parent.skeleton(), parent_paths[outer], parent_paths[inner]);
        if (equivalent(parent.skeleton(), parent.squares(), pp, qq))
          found.push_back(TwoPath{outer, inner});
      }
    }
    if (found.size() != 1)
      throw induced_square_ambiguity_error(
          two_path_to_string(out, p) + " has " + std::to_string(found.size()) +
          " candidates");
    partner_of[two_path_key(p)] = found[0];
  });
  for (const auto& [key, q] : partner_of) {
    TwoPath p{static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu)};
    auto back = partner_of.find(two_path_key(q));
    if (back == partner_of.end() || !(back->second == p))
      throw induced_square_ambiguity_error("partner relation is not involutive at " +
                                           two_path_to_string(out, p));
    if (key < two_path_key(q))
      decls.push_back({out.edge(p.outer).id, out.edge(p.inner).id,
                       out.edge(q.outer).id, out.edge(q.inner).id});
  }
  return decls;
}

}  // namespace detail

/// Result of the move (R): the reduced graph, the parent realization data, and
/// the Theta/Xi classification of parent images.
struct ReductionResult {
  KGraph graph;
  int bridge_color = 0;
  GradedFunctor grading;           // on the parent's edges, Z^k
  std::vector<Path> parent_paths;  // per output edge, a path in the parent
  std::vector<char> theta_type;    // per output edge: 1 iff the image has length 2
  HrReport hypotheses;

  /// Realization of the reduced graph in the parent. The result must outlive
  /// the returned value.
  Realization realization(const KGraph& parent) const {
    Realization r;
    r.source = &graph;
    r.target = &parent;
    for (const std::string& v : graph.skeleton().vertices())
      r.vertex_images.push_back(parent.skeleton().vertex_index(v));
    r.edge_images = parent_paths;
    r.grading = grading;
    return r;
  }
};

/// The move (R): delete the neighborhood U and all bridge edges, re-source the
/// former-U edges through the fixed bridge color b.
inline ReductionResult reduce(const KGraph& k, const std::string& w, const ColorSet& b,
                              int bridge_color) {
  if (!b.count(bridge_color)) throw bridge_color_error(bridge_color);
  HrReport hr = check_hr(k, w, b);
  if (!hr.passed()) throw reduce_hypotheses_error(std::move(hr));
  const ColoredDigraph& g = k.skeleton();
  std::set<int> u_vertices;
  for (const std::string& x : hr.neighborhood.vertices)
    u_vertices.insert(g.vertex_index(x));
  std::set<int> removed_edges;
  for (const std::string& e : hr.neighborhood.edges) removed_edges.insert(g.edge_idx(e));
  for (const std::string& e : hr.bridge_edges) removed_edges.insert(g.edge_idx(e));

  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (!u_vertices.count(static_cast<int>(v))) vertices.push_back(g.vertices()[v]);
  std::vector<EdgeRec> edges;
  std::vector<Path> parent_paths;
  std::vector<char> theta;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    if (removed_edges.count(e)) continue;
    EdgeRec rec = g.edge(e);
    if (u_vertices.count(g.src_of(e))) {
      int bridge = g.edge_idx(hr.reducibility.at(rec.src).bridges.at(bridge_color));
      rec.src = g.vertices()[g.src_of(bridge)];
      parent_paths.push_back(Path{{e, bridge}, -1});
      theta.push_back(1);
    } else {
      parent_paths.push_back(Path{{e}, -1});
      theta.push_back(0);
    }
    edges.push_back(rec);
  }
  ColoredDigraph out(g.rank(), std::move(vertices), std::move(edges));
  // parent_paths above is indexed in output-edge order by construction
  std::vector<SquareDecl> decls = detail::induced_squares(out, k, parent_paths);

  GradedFunctor grading;
  grading.target_rank = g.rank();
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    Degree d = basis_degree(g.rank(), g.color_of(e));
    if (u_vertices.count(g.src_of(e)) && b.count(g.color_of(e)))
      d[bridge_color - 1] -= 1;
    grading.edge_values.push_back(d);
  }

  ReductionResult res{assemble(std::move(out), decls), bridge_color,
                      std::move(grading), std::move(parent_paths), std::move(theta),
                      std::move(hr)};
  return res;
}

struct CompleteEdgeReport {
  std::vector<std::string> failures;
  bool complete() const { return failures.empty(); }
};

/// One edge of each color with common endpoints, square-closed (equivalently:
/// stationary with the full color set).
inline CompleteEdgeReport is_complete_edge(const KGraph& k,
                                           const std::vector<std::string>& f_ids) {
  const ColoredDigraph& g = k.skeleton();
  CompleteEdgeReport rep;
  std::map<int, int> per_color;
  for (const std::string& id : f_ids) per_color[g.color_of(g.edge_idx(id))]++;
  for (int c = 1; c <= g.rank(); ++c) {
    if (per_color[c] != 1) {
      rep.failures.push_back("color " + std::to_string(c) + " appears " +
                             std::to_string(per_color[c]) + " times");
    }
  }
  if (!rep.failures.empty()) return rep;
  StationaryReport st = is_stationary(k, f_ids, g.all_colors());
  rep.failures = st.failures;
  return rep;
}

/// Result of the move (CR).
struct CompleteEdgeReductionResult {
  KGraph graph;
  std::string fixed_parent_edge;   // the chosen g in L^E w
  GradedFunctor grading;           // on the parent's edges
  std::vector<Path> parent_paths;  // per output edge

  Realization realization(const KGraph& parent) const {
    Realization r;
    r.source = &graph;
    r.target = &parent;
    for (const std::string& v : graph.skeleton().vertices())
      r.vertex_images.push_back(parent.skeleton().vertex_index(v));
    r.edge_images = parent_paths;
    r.grading = grading;
    return r;
  }
};

/// The move (CR): remove w and its source-w complete edge, redirect the ranges
/// of the range-w edges to x = r(L^E w).
inline CompleteEdgeReductionResult complete_edge_reduction(const KGraph& k,
                                                           const std::string& w) {
  const ColoredDigraph& g = k.skeleton();
  int wi = g.vertex_index(w);
  std::vector<std::string> f_in, f_out;
  for (int e : g.in_edges(wi)) f_in.push_back(g.edge(e).id);
  for (int e : g.out_edges(wi)) f_out.push_back(g.edge(e).id);
  CompleteEdgeReport in_rep = is_complete_edge(k, f_in);
  if (!in_rep.complete())
    throw hypotheses_not_met_error("wL^E is not a complete edge: " + in_rep.failures[0]);
  CompleteEdgeReport out_rep = is_complete_edge(k, f_out);
  if (!out_rep.complete())
    throw hypotheses_not_met_error("L^E w is not a complete edge: " + out_rep.failures[0]);
  int x = g.rng_of(g.edge_idx(f_out[0]));
  if (x == wi) throw hypotheses_not_met_error("r(L^E w) equals w");

  // fixed parent edge: the out-edge of smallest color
  int fixed = g.edge_idx(f_out[0]);
  for (const std::string& id : f_out)
    if (g.color_of(g.edge_idx(id)) < g.color_of(fixed)) fixed = g.edge_idx(id);

  std::set<int> removed;
  for (const std::string& id : f_out) removed.insert(g.edge_idx(id));
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (static_cast<int>(v) != wi) vertices.push_back(g.vertices()[v]);
  std::vector<EdgeRec> edges;
  std::vector<Path> parent_paths;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    if (removed.count(e)) continue;
    EdgeRec rec = g.edge(e);
    if (g.rng_of(e) == wi) {
      rec.rng = g.vertices()[x];
      parent_paths.push_back(Path{{fixed, e}, -1});
    } else {
      parent_paths.push_back(Path{{e}, -1});
    }
    edges.push_back(rec);
  }
  ColoredDigraph out(g.rank(), std::move(vertices), std::move(edges));
  std::vector<SquareDecl> decls = detail::induced_squares(out, k, parent_paths);

  GradedFunctor grading;
  grading.target_rank = g.rank();
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    Degree d = basis_degree(g.rank(), g.color_of(e));
    if (g.src_of(e) == wi) d[g.color_of(fixed) - 1] -= 1;
    grading.edge_values.push_back(d);
  }
  return CompleteEdgeReductionResult{assemble(std::move(out), decls),
                                     g.edge(fixed).id, std::move(grading),
                                     std::move(parent_paths)};
}

/// Result of the move (D).
struct DelayResult {
  KGraph graph;
  std::string delayed_edge;
  std::vector<std::string> linkage_class;  // C^{e1} in the parent
  struct AddedEdge {
    std::string id;          // e_alpha
    int parent_square = -1;  // the class alpha as a stored parent square
    std::string inner_rep;   // side with the delayed-color edge innermost
    std::string outer_rep;   // side with it outermost
  };
  std::vector<AddedEdge> added_edges;
  std::map<std::string, std::string> split_vertex;  // g -> v_g
  std::map<std::string, std::string> inclusion;     // output edge -> parent edge
};

/// The move (D): split every edge of the linkage class of f into a length-2
/// path through a fresh vertex, adding one edge per mixed factorization class.
inline DelayResult delay(const KGraph& k, const std::string& f_id) {
  const ColoredDigraph& g = k.skeleton();
  int f = g.edge_idx(f_id);
  int color1 = g.color_of(f);

  // linkage closure: two edges of the delayed color lying in a common square
  std::vector<std::vector<int>> linked(g.edges().size());
  for (const Square& sq : k.squares().squares()) {
    int inner_color = g.color_of(sq.lhs_inner);
    int outer_color = g.color_of(sq.lhs_outer);
    std::pair<int, int> pair{-1, -1};
    if (inner_color == color1) pair = {sq.lhs_inner, sq.rhs_outer};
    else if (outer_color == color1) pair = {sq.lhs_outer, sq.rhs_inner};
    else continue;
    linked[pair.first].push_back(pair.second);
    linked[pair.second].push_back(pair.first);
  }
  std::set<int> closure{f};
  std::vector<int> stack{f};
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int o : linked[e])
      if (closure.insert(o).second) stack.push_back(o);
  }

  // mixed classes: squares pairing a closure edge with an edge of another color
  struct Alpha {
    int square;
    int g_in;   // delayed-color edge at the inner slot
    int b_out;  // its companion
    int h_out;  // delayed-color edge at the outer slot of the other side
    int a_in;
    int color;  // the companion color
    std::string id;
  };
  std::vector<Alpha> alphas;
  std::map<int, int> alpha_of_square;
  for (int si = 0; si < static_cast<int>(k.squares().squares().size()); ++si) {
    const Square& sq = k.squares().squares()[si];
    Alpha a{};
    if (g.color_of(sq.lhs_inner) == color1 && closure.count(sq.lhs_inner)) {
      a = {si, sq.lhs_inner, sq.lhs_outer, sq.rhs_outer, sq.rhs_inner,
           g.color_of(sq.lhs_outer), ""};
    } else if (g.color_of(sq.lhs_outer) == color1 && closure.count(sq.lhs_outer)) {
      a = {si, sq.rhs_inner, sq.rhs_outer, sq.lhs_outer, sq.lhs_inner,
           g.color_of(sq.lhs_inner), ""};
    } else {
      continue;
    }
    std::string s1 = g.edge(a.b_out).id + "." + g.edge(a.g_in).id;
    std::string s2 = g.edge(a.h_out).id + "." + g.edge(a.a_in).id;
    a.id = "e__" + std::min(s1, s2);
    alpha_of_square[si] = static_cast<int>(alphas.size());
    alphas.push_back(a);
  }

  std::vector<std::string> linkage_class;
  std::vector<DelayResult::AddedEdge> added_edges;
  std::map<std::string, std::string> split_vertex;
  std::map<std::string, std::string> inclusion;
  auto v_of = [](const std::string& gid) { return "v__" + gid; };

  std::vector<std::string> vertices = g.vertices();
  for (int e : closure) {
    vertices.push_back(v_of(g.edge(e).id));
    split_vertex[g.edge(e).id] = v_of(g.edge(e).id);
    linkage_class.push_back(g.edge(e).id);
  }
  std::vector<EdgeRec> edges;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const EdgeRec& rec = g.edge(e);
    if (closure.count(e)) {
      edges.push_back({rec.id + "__1", color1, rec.src, v_of(rec.id)});
      edges.push_back({rec.id + "__2", color1, v_of(rec.id), rec.rng});
    } else {
      edges.push_back(rec);
      inclusion[rec.id] = rec.id;
    }
  }
  for (const Alpha& a : alphas) {
    edges.push_back({a.id, a.color, v_of(g.edge(a.g_in).id), v_of(g.edge(a.h_out).id)});
    added_edges.push_back({a.id, a.square,
                           g.edge(a.b_out).id + "." + g.edge(a.g_in).id,
                           g.edge(a.h_out).id + "." + g.edge(a.a_in).id});
  }
  ColoredDigraph out(g.rank(), std::move(vertices), std::move(edges));

  std::vector<SquareDecl> decls;
  // Case 1: squares not touching the linkage class survive verbatim
  for (const Square& sq : k.squares().squares()) {
    bool touched = false;
    for (int e : {sq.lhs_outer, sq.lhs_inner, sq.rhs_outer, sq.rhs_inner})
      if (closure.count(e)) touched = true;
    if (touched) continue;
    decls.push_back({g.edge(sq.lhs_outer).id, g.edge(sq.lhs_inner).id,
                     g.edge(sq.rhs_outer).id, g.edge(sq.rhs_inner).id});
  }
  // Case 2: the two child squares of every split square
  for (const Alpha& a : alphas) {
    const std::string gi = g.edge(a.g_in).id, ho = g.edge(a.h_out).id;
    decls.push_back({a.id, gi + "__1", ho + "__1", g.edge(a.a_in).id});
    decls.push_back({g.edge(a.b_out).id, gi + "__2", ho + "__2", a.id});
  }
  // Case 3: composable pairs of added edges factor through the 3-cube in the parent
  for (const Alpha& beta : alphas) {
    for (const Alpha& alpha : alphas) {
      if (beta.g_in != alpha.h_out) continue;  // need s(e_beta) = r(e_alpha)
      if (beta.color == alpha.color) continue;
      auto [delta_sq, gamma_sq] =
          complete_cube(g, k.squares(), alpha.square, beta.square, beta.g_in);
      auto di = alpha_of_square.find(delta_sq);
      auto gi2 = alpha_of_square.find(gamma_sq);
      if (di == alpha_of_square.end() || gi2 == alpha_of_square.end())
        throw induced_square_ambiguity_error("cube face is not a split square");
      // e_beta . e_alpha ~ e_gamma . e_delta; record once per unordered pair
      const std::string& lo = beta.id;
      const std::string& li = alpha.id;
      const std::string& ro = alphas[gi2->second].id;
      const std::string& ri = alphas[di->second].id;
      if (lo + "\n" + li < ro + "\n" + ri)
        decls.push_back({lo, li, ro, ri});
    }
  }

  DelayResult res{assemble(std::move(out), decls), f_id,
                  std::move(linkage_class), std::move(added_edges),
                  std::move(split_vertex), std::move(inclusion)};
  return res;
}

}  // namespace hrg
