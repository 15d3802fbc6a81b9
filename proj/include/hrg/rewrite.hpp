#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hrg/validate.hpp"

namespace hrg {

namespace detail {

inline bool is_permutation_of(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Stable target assignment: position i of the current word goes to out[i] in
// the target word. Edges of equal color never cross, so the matching is
// forced to preserve their relative order.
inline std::vector<std::size_t> stable_targets(const std::vector<int>& word,
                                               const std::vector<int>& target) {
  std::map<int, std::vector<std::size_t>> slots;
  for (std::size_t t = 0; t < target.size(); ++t) slots[target[t]].push_back(t);
  std::map<int, std::size_t> next;
  std::vector<std::size_t> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    out[i] = slots[word[i]][next[word[i]]++];
  return out;
}

}  // namespace detail

/// The unique ~-equivalent path whose color word equals `target`, computed by
/// adjacent transpositions. Deterministic schedule: leftmost pending
/// transposition first.
inline Path normalize(const ColoredDigraph& g, const SquareSet& s, const Path& p,
                      const std::vector<int>& target) {
  std::vector<int> word = color_word(g, p);
  if (!detail::is_permutation_of(word, target))
    throw target_not_permutation_error(path_to_string(g, p));
  Path out = p;
  for (std::size_t pos = 0; pos < target.size(); ++pos) {
    std::size_t j = pos;
    while (j < word.size() && word[j] != target[pos]) ++j;
    for (; j > pos; --j) {
      detail::swap_adjacent(g, s, out.edges, j - 1);
      std::swap(word[j - 1], word[j]);
    }
  }
  return out;
}

/// Randomized transposition schedule reaching the same normal form; exists for
/// confluence testing only.
inline Path normalize_random_schedule(const ColoredDigraph& g, const SquareSet& s,
                                      const Path& p, const std::vector<int>& target,
                                      std::mt19937& rng) {
  std::vector<int> word = color_word(g, p);
  if (!detail::is_permutation_of(word, target))
    throw target_not_permutation_error(path_to_string(g, p));
  std::vector<std::size_t> goal = detail::stable_targets(word, target);
  Path out = p;
  while (true) {
    std::vector<std::size_t> inverted;
    for (std::size_t i = 0; i + 1 < goal.size(); ++i)
      if (goal[i] > goal[i + 1]) inverted.push_back(i);
    if (inverted.empty()) break;
    std::size_t i = inverted[rng() % inverted.size()];
    detail::swap_adjacent(g, s, out.edges, i);
    std::swap(goal[i], goal[i + 1]);
  }
  return out;
}

/// Canonical color word: nondecreasing color indices.
inline std::vector<int> canonical_word(const ColoredDigraph& g, const Path& p) {
  std::vector<int> w = color_word(g, p);
  std::sort(w.begin(), w.end());
  return w;
}

inline Path canonical_form(const ColoredDigraph& g, const SquareSet& s, const Path& p) {
  return normalize(g, s, p, canonical_word(g, p));
}

/// Path equivalence decided through normal forms.
inline bool equivalent(const ColoredDigraph& g, const SquareSet& s, const Path& p,
                       const Path& q) {
  if (path_src(g, p) != path_src(g, q)) return false;
  if (path_rng(g, p) != path_rng(g, q)) return false;
  if (path_degree(g, p) != path_degree(g, q)) return false;
  if (p.empty()) return true;  // same anchor by the source check
  return canonical_form(g, s, p).edges == canonical_form(g, s, q).edges;
}

/// The two faces of the unique 3-cube spanned by squares alpha and beta that
/// share the edge `shared`: alpha must contain a side (shared, y) and beta a
/// side (x, shared) with three distinct colors overall. Returns the stored
/// square indices (opposite beta, opposite alpha).
inline std::pair<int, int> complete_cube(const ColoredDigraph& g, const SquareSet& s,
                                         int alpha, int beta, int shared) {
  const Square& a = s.squares()[alpha];
  const Square& b = s.squares()[beta];
  auto sides = [](const Square& sq) {
    return std::vector<TwoPath>{{sq.lhs_outer, sq.lhs_inner}, {sq.rhs_outer, sq.rhs_inner}};
  };
  for (const TwoPath& sa : sides(a)) {
    if (sa.outer != shared) continue;
    for (const TwoPath& sb : sides(b)) {
      if (sb.inner != shared) continue;
      int x = sb.outer, y = sa.inner;
      if (g.color_of(x) == g.color_of(y)) continue;
      std::vector<int> p{x, shared, y};
      std::vector<int> q = p;
      detail::swap_adjacent(g, s, p, 1);  // uses alpha
      detail::swap_adjacent(g, s, p, 0);
      auto delta = s.square_of(TwoPath{p[1], p[2]});
      detail::swap_adjacent(g, s, q, 0);  // uses beta
      detail::swap_adjacent(g, s, q, 1);
      auto gamma = s.square_of(TwoPath{q[0], q[1]});
      if (!delta || !gamma)
        throw uncovered_path_error("cube face missing for " + g.edge(shared).id);
      return {*delta, *gamma};
    }
  }
  throw not_composable_configuration_error(
      "no tricolored 3-path through " + g.edge(shared).id);
}

}  // namespace hrg
