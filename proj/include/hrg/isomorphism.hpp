#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hrg/kgraph.hpp"

namespace hrg {

struct Isomorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
  std::vector<int> color_perm;  // color_perm[c-1] = image color; identity if fixing
};

namespace detail {

// per-vertex signature: out/in degree per color
inline std::vector<int> degree_profile(const ColoredDigraph& g, int v) {
  std::vector<int> p(2 * g.rank(), 0);
  for (int e : g.out_edges(v)) p[g.color_of(e) - 1]++;
  for (int e : g.in_edges(v)) p[g.rank() + g.color_of(e) - 1]++;
  return p;
}

inline int parallel_count(const ColoredDigraph& g, int src, int rng, int color) {
  int n = 0;
  for (int e : g.out_edges(src))
    if (g.rng_of(e) == rng && g.color_of(e) == color) ++n;
  return n;
}

struct IsoSearch {
  const ColoredDigraph& g1;
  const SquareSet& s1;
  const ColoredDigraph& g2;
  const SquareSet& s2;
  std::vector<int> vmap;   // g1 vertex -> g2 vertex or -1
  std::vector<char> used;  // g2 vertex taken
  std::vector<std::vector<int>> profiles2;

  IsoSearch(const ColoredDigraph& a, const SquareSet& sa, const ColoredDigraph& b,
            const SquareSet& sb)
      : g1(a), s1(sa), g2(b), s2(sb),
        vmap(a.vertices().size(), -1), used(b.vertices().size(), 0) {
    for (std::size_t v = 0; v < b.vertices().size(); ++v)
      profiles2.push_back(degree_profile(b, static_cast<int>(v)));
  }

  bool consistent(int v, int w) const {
    if (degree_profile(g1, v) != profiles2[w]) return false;
    for (std::size_t u = 0; u < vmap.size(); ++u) {
      if (vmap[u] < 0) continue;
      for (int c = 1; c <= g1.rank(); ++c) {
        if (parallel_count(g1, v, static_cast<int>(u), c) !=
            parallel_count(g2, w, vmap[u], c))
          return false;
        if (parallel_count(g1, static_cast<int>(u), v, c) !=
            parallel_count(g2, vmap[u], w, c))
          return false;
      }
    }
    for (int c = 1; c <= g1.rank(); ++c)
      if (parallel_count(g1, v, v, c) != parallel_count(g2, w, w, c)) return false;
    return true;
  }

  // vertices in a fixed order: BFS from each unvisited vertex in index order
  std::vector<int> vertex_order() const {
    std::vector<int> order;
    std::vector<char> seen(g1.vertices().size(), 0);
    for (std::size_t start = 0; start < g1.vertices().size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> queue{static_cast<int>(start)};
      seen[start] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        order.push_back(v);
        for (int e : g1.out_edges(v))
          if (!seen[g1.rng_of(e)]) seen[g1.rng_of(e)] = 1, queue.push_back(g1.rng_of(e));
        for (int e : g1.in_edges(v))
          if (!seen[g1.src_of(e)]) seen[g1.src_of(e)] = 1, queue.push_back(g1.src_of(e));
      }
    }
    return order;
  }

  bool assign(const std::vector<int>& order, std::size_t i, std::vector<int>& emap_out) {
    if (i == order.size()) return match_edges(emap_out);
    int v = order[i];
    for (std::size_t w = 0; w < used.size(); ++w) {
      if (used[w]) continue;
      if (!consistent(v, static_cast<int>(w))) continue;
      vmap[v] = static_cast<int>(w);
      used[w] = 1;
      if (assign(order, i + 1, emap_out)) return true;
      vmap[v] = -1;
      used[w] = 0;
    }
    return false;
  }

  // after the vertex bijection, match edges per parallel class and verify squares
  bool match_edges(std::vector<int>& emap_out) {
    std::map<std::tuple<int, int, int>, std::vector<int>> classes1, classes2;
    for (int e = 0; e < static_cast<int>(g1.edges().size()); ++e)
      classes1[{g1.src_of(e), g1.rng_of(e), g1.color_of(e)}].push_back(e);
    for (int e = 0; e < static_cast<int>(g2.edges().size()); ++e)
      classes2[{g2.src_of(e), g2.rng_of(e), g2.color_of(e)}].push_back(e);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> paired;
    for (auto& [key, es] : classes1) {
      auto [src, rng, color] = key;
      auto it = classes2.find({vmap[src], vmap[rng], color});
      if (it == classes2.end() || it->second.size() != es.size()) return false;
      paired.push_back({es, it->second});
    }
    std::vector<int> emap(g1.edges().size(), -1);
    return match_class(paired, 0, emap, emap_out);
  }

  bool match_class(std::vector<std::pair<std::vector<int>, std::vector<int>>>& paired,
                   std::size_t ci, std::vector<int>& emap, std::vector<int>& emap_out) {
    if (ci == paired.size()) {
      if (!squares_ok(emap)) return false;
      emap_out = emap;
      return true;
    }
    auto& [from, to] = paired[ci];
    std::vector<int> perm = to;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t j = 0; j < from.size(); ++j) emap[from[j]] = perm[j];
      if (match_class(paired, ci + 1, emap, emap_out)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int e : from) emap[e] = -1;
    return false;
  }

  bool squares_ok(const std::vector<int>& emap) const {
    if (s1.squares().size() != s2.squares().size()) return false;
    for (const Square& sq : s1.squares()) {
      auto partner = s2.partner(TwoPath{emap[sq.lhs_outer], emap[sq.lhs_inner]});
      if (!partner) return false;
      if (partner->outer != emap[sq.rhs_outer] || partner->inner != emap[sq.rhs_inner])
        return false;
    }
    return true;
  }
};

inline std::optional<Isomorphism> color_fixing_iso(const ColoredDigraph& g1,
                                                   const SquareSet& s1,
                                                   const ColoredDigraph& g2,
                                                   const SquareSet& s2) {
  if (g1.rank() != g2.rank()) return std::nullopt;
  if (g1.vertices().size() != g2.vertices().size()) return std::nullopt;
  if (g1.edges().size() != g2.edges().size()) return std::nullopt;
  IsoSearch search(g1, s1, g2, s2);
  std::vector<int> emap;
  if (!search.assign(search.vertex_order(), 0, emap)) return std::nullopt;
  Isomorphism iso;
  iso.color_perm.resize(g1.rank());
  std::iota(iso.color_perm.begin(), iso.color_perm.end(), 1);
  for (std::size_t v = 0; v < g1.vertices().size(); ++v)
    iso.vertex_map[g1.vertices()[v]] = g2.vertices()[search.vmap[v]];
  for (std::size_t e = 0; e < g1.edges().size(); ++e)
    iso.edge_map[g1.edges()[e].id] = g2.edges()[emap[e]].id;
  return iso;
}

}  // namespace detail

/// Color-, source-, range-, and square-preserving bijection if one exists.
/// With allow_color_permutation, all rank! color relabelings are tried and the
/// successful permutation is reported.
inline std::optional<Isomorphism> isomorphic(const KGraph& k1, const KGraph& k2,
                                             bool allow_color_permutation = false) {
  if (!allow_color_permutation)
    return detail::color_fixing_iso(k1.skeleton(), k1.squares(), k2.skeleton(),
                                    k2.squares());
  if (k1.rank() != k2.rank()) return std::nullopt;
  std::vector<int> perm(k1.rank());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    // recolor k1 by perm, then look for a color-fixing map into k2
    std::vector<EdgeRec> edges = k1.skeleton().edges();
    for (EdgeRec& e : edges) e.color = perm[e.color - 1];
    ColoredDigraph g(k1.rank(), k1.skeleton().vertices(), std::move(edges));
    std::vector<SquareDecl> decls;
    for (const Square& s : k1.squares().squares()) {
      decls.push_back({k1.skeleton().edge(s.lhs_outer).id, k1.skeleton().edge(s.lhs_inner).id,
                       k1.skeleton().edge(s.rhs_outer).id, k1.skeleton().edge(s.rhs_inner).id});
    }
    SquareSet s(g, decls);
    auto iso = detail::color_fixing_iso(g, s, k2.skeleton(), k2.squares());
    if (iso) {
      iso->color_perm = perm;
      return iso;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace hrg
