#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hrg/rewrite.hpp"

namespace hrg {

struct kg2_failure : error {
  explicit kg2_failure(Kg2Report r)
      : error("KG2 validation failed (" +
              std::to_string(r.malformed.size() + r.uncovered.size() +
                             r.doubly_covered.size()) +
              " defects)"),
        report(std::move(r)) {}
  Kg2Report report;
};

struct kg3_failure : error {
  explicit kg3_failure(Kg3Report r)
      : error("KG3 validation failed (" + std::to_string(r.failures.size()) +
              " 3-paths)"),
        report(std::move(r)) {}
  Kg3Report report;
};

/// A validated k-graph: skeleton plus factorization squares, constructible
/// only through assemble().
class KGraph {
 public:
  const ColoredDigraph& skeleton() const { return skeleton_; }
  const SquareSet& squares() const { return squares_; }
  int rank() const { return skeleton_.rank(); }

  friend KGraph assemble(ColoredDigraph g, SquareSet s);

 private:
  KGraph(ColoredDigraph g, SquareSet s)
      : skeleton_(std::move(g)), squares_(std::move(s)) {}
  ColoredDigraph skeleton_;
  SquareSet squares_;
};

inline KGraph assemble(ColoredDigraph g, SquareSet s) {
  Kg2Report kg2 = validate_kg2(g, s);
  if (!kg2.passed()) throw kg2_failure(std::move(kg2));
  Kg3Report kg3 = validate_kg3(g, s, kg2);
  if (!kg3.passed()) throw kg3_failure(std::move(kg3));
  return KGraph(std::move(g), std::move(s));
}

inline KGraph assemble(ColoredDigraph g, const std::vector<SquareDecl>& decls) {
  SquareSet s(g, decls);
  return assemble(std::move(g), std::move(s));
}

struct SourceFreeReport {
  // (vertex, 0) = no incoming edge of any color; (vertex, c) = none of color c
  std::vector<std::pair<std::string, int>> aggregate_violations;
  std::vector<std::pair<std::string, int>> per_color_violations;
  bool aggregate_passed() const { return aggregate_violations.empty(); }
  bool per_color_passed() const { return per_color_violations.empty(); }
};

/// Two readings of source-freeness: some incoming edge (the aggregate
/// condition) and an incoming edge of every color (what (CK3) consumes).
inline SourceFreeReport source_free_report(const KGraph& k) {
  const ColoredDigraph& g = k.skeleton();
  SourceFreeReport rep;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& in = g.in_edges(static_cast<int>(v));
    if (in.empty()) rep.aggregate_violations.push_back({g.vertices()[v], 0});
    for (int c = 1; c <= g.rank(); ++c) {
      bool found = false;
      for (int e : in)
        if (g.color_of(e) == c) found = true;
      if (!found) rep.per_color_violations.push_back({g.vertices()[v], c});
    }
  }
  return rep;
}

/// Z^m-valued edge grading; vertices map to 0 and paths to the edge sum.
struct GradedFunctor {
  int target_rank = 0;
  std::vector<Degree> edge_values;  // indexed by edge index

  Degree value(const Path& p) const {
    Degree d(target_rank, 0);
    for (int e : p.edges) d += edge_values[e];
    return d;
  }
};

inline GradedFunctor degree_functor(const ColoredDigraph& g) {
  GradedFunctor f;
  f.target_rank = g.rank();
  for (std::size_t e = 0; e < g.edges().size(); ++e)
    f.edge_values.push_back(basis_degree(g.rank(), g.color_of(static_cast<int>(e))));
  return f;
}

struct GradedFunctorReport {
  std::vector<std::string> violations;  // squares where the two sides differ
  bool passed() const { return violations.empty(); }
};

/// Well-definedness on ~-classes: both sides of every square get equal value.
inline GradedFunctorReport check_graded_functor(const KGraph& k, const GradedFunctor& f) {
  const ColoredDigraph& g = k.skeleton();
  GradedFunctorReport rep;
  for (const Square& s : k.squares().squares()) {
    Degree lhs(f.target_rank, 0), rhs(f.target_rank, 0);
    lhs += f.edge_values[s.lhs_outer];
    lhs += f.edge_values[s.lhs_inner];
    rhs += f.edge_values[s.rhs_outer];
    rhs += f.edge_values[s.rhs_inner];
    if (lhs != rhs) {
      rep.violations.push_back(two_path_to_string(g, {s.lhs_outer, s.lhs_inner}) +
                               " = " +
                               two_path_to_string(g, {s.rhs_outer, s.rhs_inner}));
    }
  }
  return rep;
}

/// Enumerate the canonical representatives (nondecreasing color word) of all
/// morphisms with range v and degree n. One path per morphism.
inline std::vector<Path> morphisms_with_range(const KGraph& k, int v, const Degree& n) {
  const ColoredDigraph& g = k.skeleton();
  std::vector<Path> out;
  Degree left = n;
  Path cur;
  std::function<void(int, int)> go = [&](int at, int min_color) {
    bool done = true;
    for (long c : left)
      if (c > 0) done = false;
    if (done) {
      Path p = cur;
      if (p.empty()) p.anchor = v;
      out.push_back(p);
      return;
    }
    // extend inward: next inner edge must have range `at` and color >= min_color
    for (int e : g.in_edges(at)) {
      int c = g.color_of(e);
      if (c < min_color || left[c - 1] == 0) continue;
      left[c - 1] -= 1;
      cur.edges.push_back(e);
      go(g.src_of(e), c);
      cur.edges.pop_back();
      left[c - 1] += 1;
    }
  };
  go(v, 1);
  return out;
}

/// Canonical representatives of all morphisms of length <= max_len, grouped in
/// one list (vertices included as empty paths).
inline std::vector<Path> all_morphisms_up_to(const KGraph& k, std::size_t max_len) {
  const ColoredDigraph& g = k.skeleton();
  std::vector<Path> out;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    out.push_back(vertex_path(static_cast<int>(v)));
  // grow inward, keeping the color word nondecreasing
  std::vector<Path> frontier = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      int at = path_src(g, p);
      int min_color = p.empty() ? 1 : g.color_of(p.edges.back());
      for (int e : g.in_edges(at)) {
        if (g.color_of(e) < min_color) continue;
        Path q = p;
        q.edges.push_back(e);
        next.push_back(q);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace hrg
