#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hrg/path.hpp"

namespace hrg {

/// One generator of the factorization relation: the bicolored 2-path
/// lhs_outer.lhs_inner is identified with rhs_outer.rhs_inner.
struct Square {
  int lhs_outer = -1;
  int lhs_inner = -1;
  int rhs_outer = -1;
  int rhs_inner = -1;
};

struct SquareDecl {
  std::string lhs_outer, lhs_inner, rhs_outer, rhs_inner;
};

struct TwoPath {
  int outer = -1;
  int inner = -1;
  bool operator==(const TwoPath&) const = default;
};

inline std::uint64_t two_path_key(const TwoPath& p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.outer)) << 32) |
         static_cast<std::uint32_t>(p.inner);
}

inline std::string two_path_to_string(const ColoredDigraph& g, const TwoPath& p) {
  return g.edge(p.outer).id + "." + g.edge(p.inner).id;
}

/// The square generators of the relation ~ together with a lookup from any
/// covered bicolored 2-path to its partner. When the declarations cover a
/// 2-path twice only the first occurrence enters the lookup; the conflict is
/// kept for the KG2 report.
class SquareSet {
 public:
  SquareSet() = default;

  SquareSet(const ColoredDigraph& g, const std::vector<SquareDecl>& decls) {
    for (const SquareDecl& d : decls) {
      Square s{g.edge_idx(d.lhs_outer), g.edge_idx(d.lhs_inner),
               g.edge_idx(d.rhs_outer), g.edge_idx(d.rhs_inner)};
      squares_.push_back(s);
      int i = static_cast<int>(squares_.size()) - 1;
      for (TwoPath p : {TwoPath{s.lhs_outer, s.lhs_inner}, TwoPath{s.rhs_outer, s.rhs_inner}}) {
        auto [it, inserted] = lookup_.emplace(two_path_key(p), i);
        if (!inserted) duplicates_.push_back({p, it->second, i});
      }
    }
  }

  const std::vector<Square>& squares() const { return squares_; }

  struct DuplicateCoverage {
    TwoPath path;
    int first_square;
    int second_square;
  };
  const std::vector<DuplicateCoverage>& duplicates() const { return duplicates_; }

  std::optional<int> square_of(const TwoPath& p) const {
    auto it = lookup_.find(two_path_key(p));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<TwoPath> partner(const TwoPath& p) const {
    auto sq = square_of(p);
    if (!sq) return std::nullopt;
    const Square& s = squares_[*sq];
    if (p.outer == s.lhs_outer && p.inner == s.lhs_inner)
      return TwoPath{s.rhs_outer, s.rhs_inner};
    return TwoPath{s.lhs_outer, s.lhs_inner};
  }

 private:
  std::vector<Square> squares_;
  std::unordered_map<std::uint64_t, int> lookup_;
  std::vector<DuplicateCoverage> duplicates_;
};

/// The unique partner of a covered bicolored 2-path.
inline TwoPath swap_two_path(const ColoredDigraph& g, const SquareSet& s, const TwoPath& p) {
  if (g.color_of(p.outer) == g.color_of(p.inner))
    throw uncovered_path_error(two_path_to_string(g, p) + " (monochrome)");
  auto q = s.partner(p);
  if (!q) throw uncovered_path_error(two_path_to_string(g, p));
  return *q;
}

}  // namespace hrg
