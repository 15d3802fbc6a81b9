#include <catch2/catch_amalgamated.hpp>

#include "hrg/generators.hpp"
#include "hrg/moves.hpp"

using namespace hrg;

TEST_CASE("the product of cycles is the torus") {
  KGraph c3 = gen_torus({3});
  KGraph c1 = gen_torus({1});
  KGraph p = product(c3, c1);
  REQUIRE(p.rank() == 2);
  REQUIRE(p.skeleton().vertices().size() == 3);
  REQUIRE(p.skeleton().edges().size() == 6);
  REQUIRE(p.squares().squares().size() == 3);
  REQUIRE(isomorphic(p, gen_torus({3, 1})).has_value());
}

TEST_CASE("the four-vertex 3-graph is a product") {
  KGraph p = product(gen_doubled_cycle(), gen_torus({1}));
  REQUIRE(isomorphic(p, gen_figure1()).has_value());
}

TEST_CASE("neighborhoods in the complement skeleton") {
  KGraph fig = gen_figure1();
  Component u = neighborhood(fig, "w", {1, 2});
  REQUIRE(u.vertices == std::vector<std::string>{"w"});
  REQUIRE(u.edges == std::vector<std::string>{"red_w"});
  Component all = neighborhood(fig, "w", {1, 2, 3});
  REQUIRE(all.vertices == std::vector<std::string>{"w"});
  REQUIRE(all.edges.empty());
  REQUIRE_THROWS_AS(neighborhood(fig, "z", {1}), unknown_vertex_error);
  REQUIRE_THROWS_AS(neighborhood(fig, "w", {}), invalid_parameter_error);
}

TEST_CASE("reducibility conditions are checked in order") {
  KGraph fig = gen_figure1();
  ReducibilityResult r = is_reducible(fig, "w", {1, 2});
  REQUIRE(r.reducible);
  REQUIRE(r.common_source == "v");
  REQUIRE(r.bridges == std::map<int, std::string>{{1, "black_vw"}, {2, "blue_vw"}});

  ReducibilityResult loop = is_reducible(fig, "w", {3});
  REQUIRE_FALSE(loop.reducible);
  REQUIRE(loop.failing_condition.find("no-loop") == 0);

  // non-B edges from the bridge source into w violate the last condition
  KGraph cr = gen_cr_example();
  REQUIRE(is_reducible(cr, "w", {1, 2}).reducible);
  ReducibilityResult back = is_reducible(cr, "u", {1});
  REQUIRE_FALSE(back.reducible);
  REQUIRE(back.failing_condition.find("back-edges-in-B") == 0);

  // parallel in-edges of one color break bridge uniqueness
  KGraph par = assemble(ColoredDigraph(1, {"v", "w"},
                                       {{"e1", 1, "v", "w"}, {"e2", 1, "v", "w"}}),
                        std::vector<SquareDecl>{});
  ReducibilityResult two = is_reducible(par, "w", {1});
  REQUIRE_FALSE(two.reducible);
  REQUIRE(two.failing_condition.find("unique-bridge") == 0);

  // bridges of different colors from different sources
  KGraph split = assemble(ColoredDigraph(2, {"u1", "u2", "w"},
                                         {{"e1", 1, "u1", "w"}, {"e2", 2, "u2", "w"}}),
                          std::vector<SquareDecl>{});
  ReducibilityResult src = is_reducible(split, "w", {1, 2});
  REQUIRE_FALSE(src.reducible);
  REQUIRE(src.failing_condition.find("common-source") == 0);
}

TEST_CASE("stationary bridge sets") {
  KGraph fig = gen_figure1();
  REQUIRE(is_stationary(fig, {"black_vw", "blue_vw"}, {1, 2}).stationary());
  StationaryReport half = is_stationary(fig, {"black_vw"}, {1, 2});
  REQUIRE_FALSE(half.stationary());
  REQUIRE_FALSE(half.failures.empty());
  REQUIRE_FALSE(is_stationary(fig, {"black_vw", "black_wx"}, {1, 2}).stationary());
  REQUIRE_FALSE(is_stationary(fig, {}, {1}).stationary());
  // a singleton with no squares on the relevant sides is vacuously stationary
  KGraph c3 = gen_torus({3});
  REQUIRE(is_stationary(c3, {"a1_0"}, {1}).stationary());
}

TEST_CASE("H_R holds at the reducible vertex and fails elsewhere") {
  KGraph fig = gen_figure1();
  HrReport hr = check_hr(fig, "w", {1, 2});
  REQUIRE(hr.passed());
  REQUIRE(hr.fully_reducible());
  REQUIRE(hr.bridge_edges == std::vector<std::string>{"black_vw", "blue_vw"});
  REQUIRE(hr.cobridge_edges == std::vector<std::string>{"black_wx", "blue_wx"});
  REQUIRE(hr.disjoint);
  REQUIRE(hr.cobridge_exit_failures.empty());

  HrReport bad = check_hr(fig, "v", {3});
  REQUIRE_FALSE(bad.passed());
  REQUIRE(bad.summary().find("not reducible") != std::string::npos);
}

TEST_CASE("reduction of the four-vertex 3-graph matches the hand computation") {
  KGraph fig = gen_figure1();
  ReductionResult r = reduce(fig, "w", {1, 2}, 1);
  const ColoredDigraph& g = r.graph.skeleton();
  REQUIRE(g.vertices() == std::vector<std::string>{"v", "x", "y"});
  REQUIRE(g.edges().size() == 9);
  int loops = 0, cycle = 0;
  for (int e = 0; e < 9; ++e) {
    if (g.color_of(e) == 3) {
      ++loops;
      REQUIRE(g.src_of(e) == g.rng_of(e));
    } else {
      ++cycle;
    }
  }
  REQUIRE(loops == 3);
  REQUIRE(cycle == 6);

  // grading values from the definition: co-bridge-type edges lose e_1
  const ColoredDigraph& pg = fig.skeleton();
  Degree bluewx = r.grading.edge_values[pg.edge_idx("blue_wx")];
  REQUIRE(bluewx == Degree{-1, 1, 0});
  Degree blackvw = r.grading.edge_values[pg.edge_idx("black_vw")];
  REQUIRE(blackvw == Degree{1, 0, 0});
  REQUIRE(check_graded_functor(fig, r.grading).passed());

  // parent images: length 2 exactly for the re-sourced edges
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Path& par = r.parent_paths[e];
    if (r.theta_type[e]) {
      REQUIRE(par.length() == 2);
      REQUIRE(pg.edge(par.edges[1]).id == "black_vw");
    } else {
      REQUIRE(par.length() == 1);
    }
    // degree compatibility edge by edge
    REQUIRE(r.grading.value(par) == basis_degree(3, g.color_of(static_cast<int>(e))));
  }
  REQUIRE(verify_realization(r.realization(fig), 3).passed());
}

TEST_CASE("reduce rejects bad inputs") {
  KGraph fig = gen_figure1();
  REQUIRE_THROWS_AS(reduce(fig, "w", {1, 2}, 3), bridge_color_error);
  REQUIRE_THROWS_AS(reduce(fig, "v", {3}, 3), reduce_hypotheses_error);
  try {
    reduce(fig, "v", {3}, 3);
  } catch (const reduce_hypotheses_error& e) {
    REQUIRE_FALSE(e.report.passed());
  }
}

TEST_CASE("the reductions along either bridge color agree") {
  KGraph fig = gen_figure1();
  ReductionResult r1 = reduce(fig, "w", {1, 2}, 1);
  ReductionResult r2 = reduce(fig, "w", {1, 2}, 2);
  REQUIRE(isomorphic(r1.graph, r2.graph).has_value());
}

TEST_CASE("delaying a torus edge splits its class and adds one loop") {
  KGraph t = gen_torus({3, 1});
  DelayResult d = delay(t, "a1_0_0");
  REQUIRE(d.linkage_class == std::vector<std::string>{"a1_0_0"});
  REQUIRE(d.split_vertex.at("a1_0_0") == "v__a1_0_0");
  const ColoredDigraph& g = d.graph.skeleton();
  REQUIRE(g.vertices().size() == 4);
  REQUIRE(g.edges().size() == 8);
  REQUIRE(d.added_edges.size() == 1);
  const std::string& ea = d.added_edges[0].id;
  REQUIRE(g.color_of(g.edge_idx(ea)) == 2);
  REQUIRE(g.src_of(g.edge_idx(ea)) == g.vertex_index("v__a1_0_0"));
  REQUIRE(g.rng_of(g.edge_idx(ea)) == g.vertex_index("v__a1_0_0"));
  // split edge endpoints
  REQUIRE(g.src_of(g.edge_idx("a1_0_0__1")) == g.vertex_index("v_0_0"));
  REQUIRE(g.rng_of(g.edge_idx("a1_0_0__1")) == g.vertex_index("v__a1_0_0"));
  REQUIRE(g.src_of(g.edge_idx("a1_0_0__2")) == g.vertex_index("v__a1_0_0"));
  REQUIRE(g.rng_of(g.edge_idx("a1_0_0__2")) == g.vertex_index("v_1_0"));
  // untouched edges included verbatim
  REQUIRE(d.inclusion.at("a1_1_0") == "a1_1_0");
  REQUIRE(d.inclusion.count("a1_0_0") == 0);

  // the delayed vertex is reducible in the delayed color and reduction
  // recovers the original graph
  Component u = neighborhood(d.graph, "v__a1_0_0", {1});
  REQUIRE(u.vertices == std::vector<std::string>{"v__a1_0_0"});
  REQUIRE(u.edges == std::vector<std::string>{ea});
  ReducibilityResult rr = is_reducible(d.graph, "v__a1_0_0", {1});
  REQUIRE(rr.reducible);
  REQUIRE(rr.bridges.at(1) == "a1_0_0__1");
  ReductionResult back = reduce(d.graph, "v__a1_0_0", {1}, 1);
  REQUIRE(isomorphic(back.graph, t).has_value());
}

TEST_CASE("delaying in rank 1 is a pure edge split") {
  KGraph c3 = gen_torus({3});
  DelayResult d = delay(c3, "a1_0");
  REQUIRE(d.linkage_class == std::vector<std::string>{"a1_0"});
  REQUIRE(d.added_edges.empty());
  REQUIRE(d.graph.skeleton().vertices().size() == 4);
  REQUIRE(d.graph.skeleton().edges().size() == 4);
}

TEST_CASE("rank-3 delay produces valid cube-completed squares") {
  KGraph t = gen_torus({2, 2, 1});
  DelayResult d = delay(t, "a1_0_0_0");
  // squares link a1 edges across the other coordinates, not along color 1
  REQUIRE(d.linkage_class.size() == 2);
  ReductionResult back = reduce(d.graph, "v__a1_0_0_0", {1}, 1);
  REQUIRE(isomorphic(back.graph, t).has_value());
}

TEST_CASE("complete edge detection") {
  KGraph cr = gen_cr_example();
  REQUIRE(is_complete_edge(cr, {"a", "b"}).complete());
  REQUIRE(is_complete_edge(cr, {"c", "d"}).complete());
  REQUIRE_FALSE(is_complete_edge(cr, {"a"}).complete());
  REQUIRE_FALSE(is_complete_edge(cr, {"a", "d"}).complete());  // endpoints differ
  KGraph fig = gen_figure1();
  REQUIRE_FALSE(is_complete_edge(fig, {"black_vw", "blue_vw"}).complete());
}

TEST_CASE("complete edge reduction agrees with reduction") {
  KGraph cr = gen_cr_example();
  CompleteEdgeReductionResult c = complete_edge_reduction(cr, "w");
  REQUIRE(c.fixed_parent_edge == "c");
  const ColoredDigraph& g = c.graph.skeleton();
  REQUIRE(g.vertices() == std::vector<std::string>{"u"});
  REQUIRE(g.edges().size() == 2);
  REQUIRE(verify_realization(c.realization(cr), 3).passed());
  for (int b : {1, 2}) {
    ReductionResult r = reduce(cr, "w", {1, 2}, b);
    REQUIRE(isomorphic(c.graph, r.graph).has_value());
  }
  REQUIRE_THROWS_AS(complete_edge_reduction(gen_figure1(), "w"),
                    hypotheses_not_met_error);
}

TEST_CASE("reduction commutes with taking products") {
  KGraph k = gen_doubled_cycle();
  for (const KGraph& omega : {gen_torus({1}), gen_torus({2, 2})}) {
    KGraph prod = product(k, omega);
    KGraph expected = product(reduce(k, "w", {1, 2}, 1).graph, omega);
    for (const std::string& y : omega.skeleton().vertices()) {
      std::string wy = "(w," + y + ")";
      HrReport hr = check_hr(prod, wy, {1, 2});
      REQUIRE(hr.passed());
      ReductionResult r = reduce(prod, wy, {1, 2}, 1);
      REQUIRE(isomorphic(r.graph, expected).has_value());
    }
  }
}
