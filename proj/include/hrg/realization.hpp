#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrg/kgraph.hpp"

namespace hrg {

/// A functor phi from a source k-graph into a target k-graph together with a
/// grading on the target satisfying (grading o phi) = d_source.
struct Realization {
  const KGraph* source = nullptr;
  const KGraph* target = nullptr;
  std::vector<int> vertex_images;  // source vertex index -> target vertex index
  std::vector<Path> edge_images;   // source edge index -> target path
  GradedFunctor grading;           // on target edges, values in Z^(source rank)

  Path apply(const Path& p) const {
    const ColoredDigraph& g = source->skeleton();
    if (p.empty()) return vertex_path(vertex_images[p.anchor]);
    Path out = edge_images[p.edges.front()];
    if (out.empty()) out.anchor = vertex_images[g.rng_of(p.edges.front())];
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      Path next = edge_images[p.edges[i]];
      if (next.empty()) next.anchor = vertex_images[g.rng_of(p.edges[i])];
      out = compose(target->skeleton(), out, next);
    }
    return out;
  }
};

inline Realization identity_realization(const KGraph& k) {
  Realization r;
  r.source = &k;
  r.target = &k;
  for (std::size_t v = 0; v < k.skeleton().vertices().size(); ++v)
    r.vertex_images.push_back(static_cast<int>(v));
  for (std::size_t e = 0; e < k.skeleton().edges().size(); ++e)
    r.edge_images.push_back(Path{{static_cast<int>(e)}, -1});
  r.grading = degree_functor(k.skeleton());
  return r;
}

struct RealizationReport {
  std::vector<std::string> endpoint_failures;
  std::vector<std::string> degree_failures;
  std::vector<std::string> square_failures;
  std::vector<std::string> injectivity_failures;
  std::size_t injectivity_bound = 0;
  bool passed() const {
    return endpoint_failures.empty() && degree_failures.empty() &&
           square_failures.empty() && injectivity_failures.empty();
  }
};

/// Checks endpoint compatibility, degree compatibility (grading o phi = d),
/// square functoriality, and injectivity of the induced functor up to the
/// given degree bound.
inline RealizationReport verify_realization(const Realization& r,
                                            std::size_t injectivity_bound = 3) {
  const ColoredDigraph& gs = r.source->skeleton();
  const ColoredDigraph& gt = r.target->skeleton();
  RealizationReport rep;
  rep.injectivity_bound = injectivity_bound;
  for (std::size_t e = 0; e < gs.edges().size(); ++e) {
    const Path& im = r.edge_images[e];
    const std::string& id = gs.edge(static_cast<int>(e)).id;
    Path probe = im;
    if (probe.empty()) probe.anchor = r.vertex_images[gs.rng_of(static_cast<int>(e))];
    if (path_src(gt, probe) != r.vertex_images[gs.src_of(static_cast<int>(e))] ||
        path_rng(gt, probe) != r.vertex_images[gs.rng_of(static_cast<int>(e))])
      rep.endpoint_failures.push_back(id);
    Degree want = basis_degree(gs.rank(), gs.color_of(static_cast<int>(e)));
    if (r.grading.value(im) != want) rep.degree_failures.push_back(id);
  }
  for (const Square& sq : r.source->squares().squares()) {
    Path lhs = r.apply(Path{{sq.lhs_outer, sq.lhs_inner}, -1});
    Path rhs = r.apply(Path{{sq.rhs_outer, sq.rhs_inner}, -1});
    if (!equivalent(gt, r.target->squares(), lhs, rhs)) {
      rep.square_failures.push_back(two_path_to_string(gs, {sq.lhs_outer, sq.lhs_inner}) +
                                    " = " +
                                    two_path_to_string(gs, {sq.rhs_outer, sq.rhs_inner}));
    }
  }
  // injectivity up to the bound: pairwise inequivalent images of the source's
  // canonical morphisms
  std::vector<Path> morphisms = all_morphisms_up_to(*r.source, injectivity_bound);
  std::map<std::string, std::string> seen;  // image key -> source description
  for (const Path& m : morphisms) {
    Path im = r.apply(m);
    Path canon = im.empty() ? im : canonical_form(gt, r.target->squares(), im);
    std::string key = std::to_string(path_src(gt, canon)) + ">" +
                      std::to_string(path_rng(gt, canon)) + ":" +
                      path_to_string(gt, canon);
    auto [it, inserted] = seen.emplace(key, path_to_string(gs, m));
    if (!inserted)
      rep.injectivity_failures.push_back(it->second + " and " + path_to_string(gs, m));
  }
  return rep;
}

/// Nonnegative integer k x l matrix acting as a monoid morphism N^l -> N^k.
struct MonoidMap {
  int rows = 0;  // k
  int cols = 0;  // l
  std::vector<std::vector<long>> m;

  Degree apply(const Degree& v) const {
    Degree out(rows, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[i] += m[i][j] * v[j];
    return out;
  }
};

namespace detail {

using Mat = std::vector<std::vector<long>>;

inline Mat identity_mat(int n) {
  Mat u(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  return u;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  int p = static_cast<int>(b[0].size());
  int k = static_cast<int>(b.size());
  Mat c(n, std::vector<long>(p, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t)
      for (int j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

// Diagonalize D = U*A*V by unimodular row/column operations.
inline void diagonalize(Mat& d, Mat& u, Mat& v) {
  int rows = static_cast<int>(d.size());
  int cols = static_cast<int>(d[0].size());
  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (d[i][j] != 0 &&
              (pi < 0 || std::abs(d[i][j]) < std::abs(d[pi][pj]))) pi = i, pj = j;
      if (pi < 0) return;
      std::swap(d[pi], d[t]);
      std::swap(u[pi], u[t]);
      if (pj != t) {
        for (int i = 0; i < rows; ++i) std::swap(d[i][pj], d[i][t]);
        for (int i = 0; i < cols; ++i) std::swap(v[i][pj], v[i][t]);
      }
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        long q = d[i][t] / d[t][t];
        if (q != 0) {
          for (int j = 0; j < cols; ++j) d[i][j] -= q * d[t][j];
          for (int j = 0; j < rows; ++j) u[i][j] -= q * u[t][j];
        }
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        long q = d[t][j] / d[t][t];
        if (q != 0) {
          for (int i = 0; i < rows; ++i) d[i][j] -= q * d[i][t];
          for (int i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
        }
        if (d[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }
}

}  // namespace detail

/// Integer left inverse of a monoid map, when one exists.
inline std::optional<std::vector<std::vector<long>>> integer_left_inverse(
    const MonoidMap& omega) {
  if (omega.cols > omega.rows) return std::nullopt;
  detail::Mat d = omega.m;
  detail::Mat u = detail::identity_mat(omega.rows);
  detail::Mat v = detail::identity_mat(omega.cols);
  detail::diagonalize(d, u, v);
  for (int t = 0; t < omega.cols; ++t)
    if (std::abs(d[t][t]) != 1) return std::nullopt;
  // pi = V * D+ * U with D+ the l x k pseudo-inverse of the +-1 diagonal
  detail::Mat dplus(omega.cols, std::vector<long>(omega.rows, 0));
  for (int t = 0; t < omega.cols; ++t) dplus[t][t] = d[t][t];
  return detail::mat_mul(detail::mat_mul(v, dplus), u);
}

struct QuasimorphismReport {
  std::vector<std::string> endpoint_failures;
  std::vector<std::string> degree_failures;  // omega . d != d . psi on an edge
  std::vector<std::string> square_failures;
  std::optional<RealizationReport> induced;
  std::vector<std::vector<long>> left_inverse;  // recorded when induction ran
  bool passed() const {
    return endpoint_failures.empty() && degree_failures.empty() &&
           square_failures.empty() && (!induced || induced->passed());
  }
};

/// omega-quasimorphism check: omega . d_source = d_target . psi plus square
/// compatibility. For injective omega the induced realization (psi, pi . d)
/// is constructed and verified as well.
inline QuasimorphismReport verify_quasimorphism(
    const KGraph& source, const KGraph& target, std::vector<int> vertex_images,
    std::vector<Path> edge_images, const MonoidMap& omega,
    bool induce = true, std::size_t injectivity_bound = 3) {
  const ColoredDigraph& gs = source.skeleton();
  const ColoredDigraph& gt = target.skeleton();
  QuasimorphismReport rep;
  for (std::size_t e = 0; e < gs.edges().size(); ++e) {
    const std::string& id = gs.edge(static_cast<int>(e)).id;
    Path probe = edge_images[e];
    if (probe.empty()) probe.anchor = vertex_images[gs.rng_of(static_cast<int>(e))];
    if (path_src(gt, probe) != vertex_images[gs.src_of(static_cast<int>(e))] ||
        path_rng(gt, probe) != vertex_images[gs.rng_of(static_cast<int>(e))])
      rep.endpoint_failures.push_back(id);
    Degree want = omega.apply(basis_degree(gs.rank(), gs.color_of(static_cast<int>(e))));
    if (path_degree(gt, edge_images[e]) != want) rep.degree_failures.push_back(id);
  }
  Realization phi;
  phi.source = &source;
  phi.target = &target;
  phi.vertex_images = std::move(vertex_images);
  phi.edge_images = std::move(edge_images);
  for (const Square& sq : source.squares().squares()) {
    Path lhs = phi.apply(Path{{sq.lhs_outer, sq.lhs_inner}, -1});
    Path rhs = phi.apply(Path{{sq.rhs_outer, sq.rhs_inner}, -1});
    if (!equivalent(gt, target.squares(), lhs, rhs))
      rep.square_failures.push_back(two_path_to_string(gs, {sq.lhs_outer, sq.lhs_inner}) +
                                    " = " +
                                    two_path_to_string(gs, {sq.rhs_outer, sq.rhs_inner}));
  }
  if (induce) {
    auto pi = integer_left_inverse(omega);
    if (!pi) throw not_injective_omega_error();
    rep.left_inverse = *pi;
    phi.grading.target_rank = source.rank();
    for (std::size_t e = 0; e < gt.edges().size(); ++e) {
      Degree d = basis_degree(gt.rank(), gt.color_of(static_cast<int>(e)));
      Degree v(source.rank(), 0);
      for (int i = 0; i < source.rank(); ++i)
        for (int j = 0; j < gt.rank(); ++j) v[i] += (*pi)[i][j] * d[j];
      phi.grading.edge_values.push_back(v);
    }
    rep.induced = verify_realization(phi, injectivity_bound);
  }
  return rep;
}

}  // namespace hrg
