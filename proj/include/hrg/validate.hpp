#pragma once

#include <string>
#include <vector>

#include "hrg/squares.hpp"

namespace hrg {

struct Kg2Report {
  std::vector<std::string> malformed;       // square invariant violations
  std::vector<std::string> uncovered;       // composable bicolored 2-paths without a square
  std::vector<std::string> doubly_covered;  // 2-paths claimed by two squares
  bool passed() const {
    return malformed.empty() && uncovered.empty() && doubly_covered.empty();
  }
};

struct Kg3Report {
  std::vector<std::string> failures;  // tricolored 3-paths breaking the braid condition
  bool passed() const { return failures.empty(); }
};

namespace detail {

inline bool square_well_formed(const ColoredDigraph& g, const Square& s,
                               std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (g.src_of(s.lhs_outer) != g.rng_of(s.lhs_inner)) return fail("lhs not composable");
  if (g.src_of(s.rhs_outer) != g.rng_of(s.rhs_inner)) return fail("rhs not composable");
  if (g.color_of(s.lhs_outer) == g.color_of(s.lhs_inner)) return fail("lhs monochrome");
  if (g.color_of(s.rhs_outer) != g.color_of(s.lhs_inner)) return fail("colors not transposed");
  if (g.color_of(s.rhs_inner) != g.color_of(s.lhs_outer)) return fail("colors not transposed");
  if (g.src_of(s.lhs_inner) != g.src_of(s.rhs_inner)) return fail("sources differ");
  if (g.rng_of(s.lhs_outer) != g.rng_of(s.rhs_outer)) return fail("ranges differ");
  return true;
}

template <typename F>
void for_each_bicolored_two_path(const ColoredDigraph& g, F&& f) {
  for (std::size_t inner = 0; inner < g.edges().size(); ++inner) {
    for (int outer : g.out_edges(g.rng_of(static_cast<int>(inner)))) {
      if (g.color_of(outer) != g.color_of(static_cast<int>(inner)))
        f(TwoPath{outer, static_cast<int>(inner)});
    }
  }
}

// Swap the adjacent pair at positions (i, i+1) of a composition-ordered
// edge sequence via the stored square.
inline void swap_adjacent(const ColoredDigraph& g, const SquareSet& s,
                          std::vector<int>& edges, std::size_t i) {
  TwoPath q = swap_two_path(g, s, TwoPath{edges[i], edges[i + 1]});
  edges[i] = q.outer;
  edges[i + 1] = q.inner;
}

}  // namespace detail

/// KG2: every composable bicolored 2-path occurs in exactly one square and
/// every square satisfies the square invariants.
inline Kg2Report validate_kg2(const ColoredDigraph& g, const SquareSet& s) {
  Kg2Report rep;
  for (std::size_t i = 0; i < s.squares().size(); ++i) {
    std::string why;
    if (!detail::square_well_formed(g, s.squares()[i], &why)) {
      rep.malformed.push_back("square " +
                              two_path_to_string(g, {s.squares()[i].lhs_outer,
                                                     s.squares()[i].lhs_inner}) +
                              " = " +
                              two_path_to_string(g, {s.squares()[i].rhs_outer,
                                                     s.squares()[i].rhs_inner}) +
                              ": " + why);
    }
  }
  for (const auto& d : s.duplicates())
    rep.doubly_covered.push_back(two_path_to_string(g, d.path));
  detail::for_each_bicolored_two_path(g, [&](const TwoPath& p) {
    if (!s.square_of(p)) rep.uncovered.push_back(two_path_to_string(g, p));
  });
  return rep;
}

/// KG3 as the braid condition: on every composable 3-path with three pairwise
/// distinct colors, inner-outer-inner swaps agree with outer-inner-outer.
inline Kg3Report validate_kg3(const ColoredDigraph& g, const SquareSet& s,
                              const Kg2Report& kg2) {
  if (!kg2.passed()) throw kg2_not_established_error();
  Kg3Report rep;
  detail::for_each_bicolored_two_path(g, [&](const TwoPath& p) {
    for (int outer : g.out_edges(g.rng_of(p.outer))) {
      int c = g.color_of(outer);
      if (c == g.color_of(p.outer) || c == g.color_of(p.inner)) continue;
      std::vector<int> a{outer, p.outer, p.inner};
      std::vector<int> b = a;
      try {
        detail::swap_adjacent(g, s, a, 1);
        detail::swap_adjacent(g, s, a, 0);
        detail::swap_adjacent(g, s, a, 1);
        detail::swap_adjacent(g, s, b, 0);
        detail::swap_adjacent(g, s, b, 1);
        detail::swap_adjacent(g, s, b, 0);
      } catch (const uncovered_path_error& e) {
        rep.failures.push_back(g.edge(outer).id + "." + two_path_to_string(g, p) +
                               ": " + e.what());
        continue;
      }
      if (a != b) {
        rep.failures.push_back(g.edge(outer).id + "." + two_path_to_string(g, p) +
                               ": braid routes disagree");
      }
    }
  });
  return rep;
}

/// Early-exit validity probe; equivalent to both reports passing.
inline bool kg_valid(const ColoredDigraph& g, const SquareSet& s) {
  if (!s.duplicates().empty()) return false;
  for (const Square& sq : s.squares())
    if (!detail::square_well_formed(g, sq)) return false;
  bool ok = true;
  detail::for_each_bicolored_two_path(g, [&](const TwoPath& p) {
    if (!ok) return;
    if (!s.square_of(p)) ok = false;
  });
  if (!ok) return false;
  detail::for_each_bicolored_two_path(g, [&](const TwoPath& p) {
    if (!ok) return;
    for (int outer : g.out_edges(g.rng_of(p.outer))) {
      int c = g.color_of(outer);
      if (c == g.color_of(p.outer) || c == g.color_of(p.inner)) continue;
      std::vector<int> a{outer, p.outer, p.inner};
      std::vector<int> b = a;
      try {
        detail::swap_adjacent(g, s, a, 1);
        detail::swap_adjacent(g, s, a, 0);
        detail::swap_adjacent(g, s, a, 1);
        detail::swap_adjacent(g, s, b, 0);
        detail::swap_adjacent(g, s, b, 1);
        detail::swap_adjacent(g, s, b, 0);
      } catch (const uncovered_path_error&) {
        ok = false;
        return;
      }
      if (a != b) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

}  // namespace hrg
