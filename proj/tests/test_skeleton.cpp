#include <catch2/catch_amalgamated.hpp>

#include "hrg/generators.hpp"
#include "hrg/skeleton.hpp"

using namespace hrg;

namespace {

ColoredDigraph two_cycle() {
  return ColoredDigraph(2,
                        {"u", "w"},
                        {{"a", 1, "u", "w"}, {"b", 2, "u", "w"}, {"c", 1, "w", "u"}});
}

}  // namespace

TEST_CASE("skeleton construction validates its input") {
  REQUIRE_NOTHROW(two_cycle());
  REQUIRE_THROWS_AS(ColoredDigraph(1, {"u", "u"}, {}), duplicate_id_error);
  REQUIRE_THROWS_AS(ColoredDigraph(1, {"u"}, {{"a", 1, "u", "z"}}),
                    dangling_endpoint_error);
  REQUIRE_THROWS_AS(ColoredDigraph(1, {"u"}, {{"a", 2, "u", "u"}}),
                    color_out_of_range_error);
  REQUIRE_THROWS_AS(ColoredDigraph(1, {"u"}, {{"a", 0, "u", "u"}}),
                    color_out_of_range_error);
  REQUIRE_THROWS_AS(ColoredDigraph(1, {"u"}, {{"a", 1, "u", "u"}, {"a", 1, "u", "u"}}),
                    duplicate_id_error);
}

TEST_CASE("index lookups and incidence") {
  ColoredDigraph g = two_cycle();
  REQUIRE(g.vertex_index("w") == 1);
  REQUIRE_THROWS_AS(g.vertex_index("z"), unknown_vertex_error);
  REQUIRE_THROWS_AS(g.edge_idx("z"), unknown_edge_error);
  REQUIRE(g.out_edges(g.vertex_index("u")).size() == 2);
  REQUIRE(g.in_edges(g.vertex_index("u")).size() == 1);
  REQUIRE(g.color_of(g.edge_idx("b")) == 2);
}

TEST_CASE("color set helpers") {
  ColoredDigraph g = two_cycle();
  REQUIRE(g.all_colors() == ColorSet{1, 2});
  REQUIRE(g.complement({1}) == ColorSet{2});
  REQUIRE(g.complement({1, 2}).empty());
  REQUIRE_THROWS_AS(g.check_colors({3}), color_out_of_range_error);
}

TEST_CASE("subgraph by colors keeps vertices and filters edges") {
  ColoredDigraph g = two_cycle();
  ColoredDigraph s = subgraph_by_colors(g, {1});
  REQUIRE(s.vertices() == g.vertices());
  REQUIRE(s.edges().size() == 2);
  REQUIRE(s.rank() == g.rank());
  // filtering twice equals filtering by the intersection
  ColoredDigraph s2 = subgraph_by_colors(subgraph_by_colors(g, {1, 2}), {2});
  REQUIRE(s2.edges().size() == subgraph_by_colors(g, {2}).edges().size());
}

TEST_CASE("undirected components ignore direction and partition vertices") {
  ColoredDigraph g(1, {"p", "q", "r"}, {{"e", 1, "p", "q"}});
  Component c = undirected_component(g, "q");
  REQUIRE(c.vertices == std::vector<std::string>{"p", "q"});
  REQUIRE(c.edges == std::vector<std::string>{"e"});
  Component r = undirected_component(g, "r");
  REQUIRE(r.vertices == std::vector<std::string>{"r"});
  REQUIRE(r.edges.empty());
  // same component from either endpoint
  REQUIRE(undirected_component(g, "p").vertices == c.vertices);
}

TEST_CASE("red subskeleton of the four-vertex 3-graph isolates each vertex") {
  KGraph fig = gen_figure1();
  const ColoredDigraph& g = fig.skeleton();
  ColoredDigraph red = subgraph_by_colors(g, {3});
  Component c = undirected_component(red, "w");
  REQUIRE(c.vertices == std::vector<std::string>{"w"});
  REQUIRE(c.edges == std::vector<std::string>{"red_w"});
}
