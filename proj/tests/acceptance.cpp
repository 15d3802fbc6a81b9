// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hrg/format.hpp"
#include "hrg/generators.hpp"
#include "hrg/saturation.hpp"

using namespace hrg;

namespace {

std::vector<std::vector<int>> corpus_dims() {
  std::vector<std::vector<int>> dims;
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) dims.push_back({n, m});
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      for (int p = 2; p <= 4; ++p) dims.push_back({n, m, p});
  return dims;
}

std::vector<SquareDecl> decls_of(const KGraph& k) {
  const ColoredDigraph& g = k.skeleton();
  std::vector<SquareDecl> decls;
  for (const Square& sq : k.squares().squares())
    decls.push_back({g.edge(sq.lhs_outer).id, g.edge(sq.lhs_inner).id,
                     g.edge(sq.rhs_outer).id, g.edge(sq.rhs_inner).id});
  return decls;
}

Path random_path(const ColoredDigraph& g, std::mt19937& rng, int max_len) {
  int len = 1 + static_cast<int>(rng() % max_len);
  Path p;
  int first = static_cast<int>(rng() % g.edges().size());
  p.edges.push_back(first);
  for (int i = 1; i < len; ++i) {
    const auto& outs = g.out_edges(g.rng_of(p.edges.front()));
    if (outs.empty()) break;
    p.edges.insert(p.edges.begin(), outs[rng() % outs.size()]);
  }
  return p;
}

std::set<std::vector<int>> representatives(const ColoredDigraph& g, const SquareSet& s,
                                           const Path& p) {
  std::set<std::vector<int>> seen{p.edges};
  std::vector<std::vector<int>> stack{p.edges};
  while (!stack.empty()) {
    std::vector<int> cur = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (g.color_of(cur[i]) == g.color_of(cur[i + 1])) continue;
      std::vector<int> next = cur;
      detail::swap_adjacent(g, s, next, i);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

std::size_t word_permutations(std::vector<int> w) {
  std::sort(w.begin(), w.end());
  std::size_t n = 0;
  do {
    ++n;
  } while (std::next_permutation(w.begin(), w.end()));
  return n;
}

// criterion 1: KG soundness under square deletion and rhs substitution
bool criterion_validation(const std::vector<KGraph>& corpus, std::string& detail) {
  for (const KGraph& k : corpus) {
    const ColoredDigraph& g = k.skeleton();
    if (!kg_valid(g, k.squares())) {
      detail = "a corpus instance failed validation";
      return false;
    }
    std::vector<SquareDecl> decls = decls_of(k);
    for (std::size_t i = 0; i < decls.size(); ++i) {
      std::vector<SquareDecl> removed = decls;
      removed.erase(removed.begin() + static_cast<long>(i));
      if (kg_valid(g, SquareSet(g, removed))) {
        detail = "deleting a square left a valid instance";
        return false;
      }
      // every composable 2-path with the rhs color word is a candidate rhs
      const SquareDecl& d = decls[i];
      int ro = g.edge_idx(d.rhs_outer), ri = g.edge_idx(d.rhs_inner);
      for (int inner = 0; inner < static_cast<int>(g.edges().size()); ++inner) {
        if (g.color_of(inner) != g.color_of(ri)) continue;
        for (int outer : g.out_edges(g.rng_of(inner))) {
          if (g.color_of(outer) != g.color_of(ro)) continue;
          if (outer == ro && inner == ri) continue;
          std::vector<SquareDecl> subst = decls;
          subst[i].rhs_outer = g.edge(outer).id;
          subst[i].rhs_inner = g.edge(inner).id;
          if (kg_valid(g, SquareSet(g, subst))) {
            detail = "an rhs substitution left a valid instance";
            return false;
          }
        }
      }
    }
  }
  return true;
}

// criterion 2: confluence and unique representatives
bool criterion_confluence(const std::vector<KGraph>& corpus, std::string& detail) {
  std::mt19937 rng(20240817);
  for (const KGraph& k : corpus) {
    const ColoredDigraph& g = k.skeleton();
    const SquareSet& s = k.squares();
    for (int trial = 0; trial < 200; ++trial) {
      Path p = random_path(g, rng, 5);
      Path canon = canonical_form(g, s, p);
      for (int run = 0; run < 5; ++run) {
        Path q = normalize_random_schedule(g, s, p, canonical_word(g, p), rng);
        if (q.edges != canon.edges) {
          detail = "schedules diverged on " + path_to_string(g, p);
          return false;
        }
      }
      if (representatives(g, s, p).size() != word_permutations(color_word(g, p))) {
        detail = "representative count mismatch on " + path_to_string(g, p);
        return false;
      }
    }
  }
  return true;
}

// criterion 3: the four-vertex figure reduction
bool criterion_figure(std::string& detail) {
  KGraph fig = gen_figure1();
  ReductionResult r = reduce(fig, "w", {1, 2}, 1);
  const ColoredDigraph& g = r.graph.skeleton();
  if (g.vertices().size() != 3) {
    detail = "vertex count";
    return false;
  }
  int loops = 0, cycle = 0;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    if (g.color_of(e) == 3 && g.src_of(e) == g.rng_of(e)) ++loops;
    else if (g.color_of(e) != 3) ++cycle;
  }
  if (cycle != 6 || loops != 3 || g.edges().size() != 9) {
    detail = "edge census";
    return false;
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (r.grading.value(r.parent_paths[e]) !=
        basis_degree(3, g.color_of(static_cast<int>(e)))) {
      detail = "grading/parent mismatch on " + g.edges()[e].id;
      return false;
    }
  }
  return true;
}

// criteria 4, 7, 8 share one pass over every (graph, edge) pair
bool criterion_roundtrip(const std::vector<KGraph>& corpus, bool& grading_ok,
                         bool& certificate_ok, std::string& detail,
                         std::string& detail7, std::string& detail8) {
  std::mt19937 rng(404);
  bool roundtrip_ok = true;
  grading_ok = true;
  certificate_ok = true;
  for (const KGraph& k : corpus) {
    for (const EdgeRec& f : k.skeleton().edges()) {
      DelayResult d = delay(k, f.id);
      int b = f.color;
      std::string vf = d.split_vertex.at(f.id);
      ReductionResult r = reduce(d.graph, vf, {b}, b);
      if (roundtrip_ok && !isomorphic(r.graph, k)) {
        roundtrip_ok = false;
        detail = "round trip broke at edge " + f.id;
      }
      const ColoredDigraph& pg = d.graph.skeleton();
      if (grading_ok && !check_graded_functor(d.graph, r.grading).passed()) {
        grading_ok = false;
        detail7 = "grading not square-invariant at edge " + f.id;
      }
      if (grading_ok) {
        std::set<int> cobridge;
        std::set<std::string> u(r.hypotheses.neighborhood.vertices.begin(),
                                r.hypotheses.neighborhood.vertices.end());
        for (int e = 0; e < static_cast<int>(pg.edges().size()); ++e)
          if (u.count(pg.edges()[e].src) && pg.color_of(e) == b) cobridge.insert(e);
        for (int trial = 0; trial < 100; ++trial) {
          Path p = random_path(pg, rng, 5);
          Degree expect = path_degree(pg, p);
          long ell = 0;
          for (int e : p.edges)
            if (cobridge.count(e)) ++ell;
          expect[b - 1] -= ell;
          if (r.grading.value(p) != expect) {
            grading_ok = false;
            detail7 = "co-bridge count formula failed at edge " + f.id;
            break;
          }
        }
      }
      if (certificate_ok) {
        MoritaCertificate cert = morita_certificate(d.graph, vf, {b}, b);
        if (!cert.passed() || !cert.hereditary_only) {
          certificate_ok = false;
          detail8 = "certificate failed at edge " + f.id;
        }
      }
    }
  }
  return roundtrip_ok;
}

// criterion 5: reduction commutes with products
bool criterion_robustness(std::string& detail) {
  KGraph k = gen_doubled_cycle();
  KGraph reduced = reduce(k, "w", {1, 2}, 1).graph;
  std::vector<KGraph> omegas;
  omegas.push_back(gen_torus({1}));
  omegas.push_back(gen_torus({2}));
  omegas.push_back(gen_torus({2, 2}));
  for (const KGraph& omega : omegas) {
    KGraph prod = product(k, omega);
    KGraph expected = product(reduced, omega);
    for (const std::string& y : omega.skeleton().vertices()) {
      std::string wy = "(w," + y + ")";
      if (!check_hr(prod, wy, {1, 2}).passed()) {
        detail = "H_R failed at " + wy;
        return false;
      }
      ReductionResult r = reduce(prod, wy, {1, 2}, 1);
      if (!isomorphic(r.graph, expected)) {
        detail = "product reduction mismatch at " + wy;
        return false;
      }
    }
  }
  return true;
}

// criterion 6: complete-edge reduction vs reduction
bool criterion_cr(std::string& detail) {
  KGraph k = gen_cr_example();
  CompleteEdgeReductionResult c = complete_edge_reduction(k, "w");
  for (int b : {1, 2}) {
    ReductionResult r = reduce(k, "w", {1, 2}, b);
    if (!isomorphic(c.graph, r.graph)) {
      detail = "mismatch for bridge color " + std::to_string(b);
      return false;
    }
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// criterion 9: golden round trips and byte-identical reruns
bool criterion_cli(std::string& detail) {
  const std::string golden = KG_GOLDEN_DIR;
  for (const std::string& name : {"t31.kg", "fig1.kg", "cr.kg", "t222.kg"}) {
    std::string text = slurp(golden + "/" + name);
    if (text.empty()) {
      detail = "missing golden file " + name;
      return false;
    }
    if (serialize_kg(parse_kg(text)) != text) {
      detail = "golden file " + name + " is not canonical";
      return false;
    }
  }
  const std::string cli = KG_CLI_PATH;
  struct Cmd {
    std::string args;
    std::string out;
  };
  std::vector<Cmd> cmds{
      {"validate " + golden + "/t31.kg", ""},
      {"export " + golden + "/fig1.kg --format dot", ""},
      {"export " + golden + "/t31.kg --format json", ""},
      {"check-hr " + golden + "/fig1.kg --vertex w --colors 1,2 --json", ""},
      {"gen figure1 -o OUT", "fig1.kg"},
      {"reduce " + golden + "/fig1.kg --vertex w --colors 1,2 --bridge-color 1 -o OUT",
       "fig2.kg"},
  };
  for (const Cmd& c : cmds) {
    std::string run1 = "/tmp/kg_accept_1.txt", run2 = "/tmp/kg_accept_2.txt";
    std::string o1 = "/tmp/kg_accept_o1", o2 = "/tmp/kg_accept_o2";
    auto command = [&](const std::string& outfile, const std::string& capture) {
      std::string args = c.args;
      std::size_t pos = args.find("OUT");
      if (pos != std::string::npos) args.replace(pos, 3, outfile);
      return cli + " " + args + " > " + capture + " 2>&1";
    };
    if (std::system(command(o1, run1).c_str()) ==
            std::system(command(o2, run2).c_str()) &&
        slurp(run1) == slurp(run2) &&
        (c.out.empty() || slurp(o1) == slurp(o2))) {
      continue;
    }
    detail = "nondeterministic output for: " + c.args;
    return false;
  }
  // the exporter output matches its golden copy
  std::string cmd = cli + " export " + golden + "/fig1.kg --format dot > /tmp/kg_accept_dot";
  if (std::system(cmd.c_str()) != 0 || slurp("/tmp/kg_accept_dot") != slurp(golden + "/fig1.dot")) {
    detail = "DOT export diverged from the golden file";
    return false;
  }
  // generated output matches its golden copy
  cmd = cli + " gen torus 3 1 -o /tmp/kg_accept_t31 > /dev/null";
  if (std::system(cmd.c_str()) != 0 || slurp("/tmp/kg_accept_t31") != slurp(golden + "/t31.kg")) {
    detail = "generator output diverged from the golden file";
    return false;
  }
  return true;
}

int g_failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  std::vector<KGraph> corpus;
  for (const auto& dims : corpus_dims()) corpus.push_back(gen_torus(dims));

  std::string detail;
  report(1, "KG validation soundness", criterion_validation(corpus, detail), detail);
  detail.clear();
  report(2, "confluent normalization and unique representatives",
         criterion_confluence(corpus, detail), detail);
  detail.clear();
  report(3, "figure reduction", criterion_figure(detail), detail);
  detail.clear();
  std::string detail7, detail8;
  bool grading_ok = false, certificate_ok = false;
  bool rt = criterion_roundtrip(corpus, grading_ok, certificate_ok, detail, detail7,
                                detail8);
  report(4, "delay/reduce round trip", rt, detail);
  detail.clear();
  report(5, "reduction is robust under products", criterion_robustness(detail), detail);
  detail.clear();
  report(6, "complete-edge reduction agreement", criterion_cr(detail), detail);
  report(7, "grading well-definedness", grading_ok, detail7);
  report(8, "Morita certificates", certificate_ok, detail8);
  detail.clear();
  report(9, "CLI round trip and determinism", criterion_cli(detail), detail);
  return g_failures == 0 ? 0 : 1;
}
