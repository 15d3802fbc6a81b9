#pragma once

#include <string>
#include <vector>

#include "hrg/kgraph.hpp"

namespace hrg {

/// Rank-k torus: product of directed cycles of lengths dims[0..k-1]. Vertex
/// ids "v<i1>_<i2>_...", color-c edges "a<c>_<i1>_..." from each vertex to its
/// c-th cyclic successor, one square per color pair per vertex.
inline KGraph gen_torus(const std::vector<int>& dims) {
  int k = static_cast<int>(dims.size());
  if (k == 0) throw invalid_parameter_error("rank must be positive");
  for (int n : dims)
    if (n < 1) throw invalid_parameter_error("cycle lengths must be positive");
  std::vector<std::vector<int>> idx;
  std::vector<int> cur(k, 0);
  while (true) {
    idx.push_back(cur);
    int at = k - 1;
    while (at >= 0 && ++cur[at] == dims[at]) cur[at--] = 0;
    if (at < 0) break;
  }
  auto suffix = [&](const std::vector<int>& i) {
    std::string s;
    for (int c : i) s += "_" + std::to_string(c);
    return s;
  };
  auto vid = [&](const std::vector<int>& i) { return "v" + suffix(i); };
  auto eid = [&](int c, const std::vector<int>& i) {
    return "a" + std::to_string(c) + suffix(i);
  };
  auto step = [&](std::vector<int> i, int c) {
    i[c - 1] = (i[c - 1] + 1) % dims[c - 1];
    return i;
  };
  std::vector<std::string> vertices;
  std::vector<EdgeRec> edges;
  for (const auto& i : idx) vertices.push_back(vid(i));
  for (int c = 1; c <= k; ++c)
    for (const auto& i : idx) edges.push_back({eid(c, i), c, vid(i), vid(step(i, c))});
  std::vector<SquareDecl> decls;
  for (int c = 1; c <= k; ++c)
    for (int d = c + 1; d <= k; ++d)
      for (const auto& i : idx)
        decls.push_back({eid(d, step(i, c)), eid(c, i), eid(c, step(i, d)), eid(d, i)});
  return assemble(ColoredDigraph(k, std::move(vertices), std::move(edges)), decls);
}

/// The 3-graph on 4 vertices: doubled 2-colored directed 4-cycle (black = 1,
/// blue = 2) with a red (3) loop at every vertex.
inline KGraph gen_figure1() {
  std::vector<std::string> vs{"v", "w", "x", "y"};
  std::vector<EdgeRec> edges;
  std::vector<SquareDecl> decls;
  auto black = [](const std::string& a, const std::string& b) { return "black_" + a + b; };
  auto blue = [](const std::string& a, const std::string& b) { return "blue_" + a + b; };
  for (int i = 0; i < 4; ++i) {
    const std::string &a = vs[i], &b = vs[(i + 1) % 4];
    edges.push_back({black(a, b), 1, a, b});
    edges.push_back({blue(a, b), 2, a, b});
    edges.push_back({"red_" + a, 3, a, a});
  }
  for (int i = 0; i < 4; ++i) {
    const std::string &a = vs[i], &b = vs[(i + 1) % 4], &c = vs[(i + 2) % 4];
    decls.push_back({blue(b, c), black(a, b), black(b, c), blue(a, b)});
    decls.push_back({black(a, b), "red_" + a, "red_" + b, black(a, b)});
    decls.push_back({blue(a, b), "red_" + a, "red_" + b, blue(a, b)});
  }
  return assemble(ColoredDigraph(3, vs, std::move(edges)), decls);
}

/// Rank-2 graph on two vertices with a complete edge in each direction:
/// a (1), b (2) from u to w and c (1), d (2) back.
inline KGraph gen_cr_example() {
  std::vector<std::string> vs{"u", "w"};
  std::vector<EdgeRec> edges{{"a", 1, "u", "w"},
                             {"b", 2, "u", "w"},
                             {"c", 1, "w", "u"},
                             {"d", 2, "w", "u"}};
  std::vector<SquareDecl> decls{{"d", "a", "c", "b"}, {"b", "c", "a", "d"}};
  return assemble(ColoredDigraph(2, vs, std::move(edges)), decls);
}

/// Rank-2 part of gen_figure1: the doubled 2-colored directed 4-cycle.
inline KGraph gen_doubled_cycle() {
  std::vector<std::string> vs{"v", "w", "x", "y"};
  std::vector<EdgeRec> edges;
  std::vector<SquareDecl> decls;
  auto black = [](const std::string& a, const std::string& b) { return "black_" + a + b; };
  auto blue = [](const std::string& a, const std::string& b) { return "blue_" + a + b; };
  for (int i = 0; i < 4; ++i) {
    const std::string &a = vs[i], &b = vs[(i + 1) % 4];
    edges.push_back({black(a, b), 1, a, b});
    edges.push_back({blue(a, b), 2, a, b});
  }
  for (int i = 0; i < 4; ++i) {
    const std::string &a = vs[i], &b = vs[(i + 1) % 4], &c = vs[(i + 2) % 4];
    decls.push_back({blue(b, c), black(a, b), black(b, c), blue(a, b)});
  }
  return assemble(ColoredDigraph(2, vs, std::move(edges)), decls);
}

}  // namespace hrg
