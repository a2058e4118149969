#include <sstream>

#include "crlab/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crlab;
using namespace testing_support;

TEST_CASE("new_graph builds the three-vertex path") {
  ColoredGraph g = path3();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.color_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("new_graph on the AND gate edge list") {
  ColoredGraph g = new_graph(10, and2_edges());
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 12);
}

TEST_CASE("new_graph rejects malformed input") {
  CHECK_THROWS_AS(new_graph(4, {{0, 1}, {0, 1}}), GraphError);
  CHECK_THROWS_AS(new_graph(4, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(new_graph(4, {{2, 2}}), GraphError);
  CHECK_THROWS_AS(new_graph(4, {{0, 4}}), GraphError);
  CHECK_THROWS_AS(new_graph(3, {{0, 1}}, {0, 1}), GraphError);
}

TEST_CASE("colors are renumbered preserving equality") {
  ColoredGraph g = new_graph(4, {}, {7, 3, 7, 10});
  CHECK(g.initial_colors() == std::vector<int>{1, 0, 1, 2});
  CHECK(g.color_count() == 3);
}

TEST_CASE("adjacency is sorted and symmetric") {
  ColoredGraph g = random_graph(5, 30, 0.2, 2);
  std::int64_t deg_sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [b, e] = g.neighbors(v);
    CHECK(std::is_sorted(b, e));
    for (auto it = b; it != e; ++it) CHECK(g.adjacent(*it, v));
    deg_sum += g.degree(v);
  }
  CHECK(deg_sum == 2 * g.edge_count());
}

TEST_CASE("is_equitable") {
  ColoredGraph g = path3();
  CHECK(is_equitable(g, Partition::from_colors({0, 1, 0})));
  CHECK_FALSE(is_equitable(g, Partition::unit(3)));
  ColoredGraph a = new_graph(10, and2_edges());
  CHECK(is_equitable(a, Partition::from_colors({0, 0, 0, 0, 1, 1, 1, 1, 2, 2})));
  CHECK_FALSE(is_equitable(a, Partition::from_colors({0, 1, 0, 0, 1, 1, 1, 1, 2, 2})));
}

TEST_CASE("naive_stable examples") {
  CHECK(naive_stable(path3()).class_of == std::vector<int>{0, 1, 0});
  ColoredGraph empty = new_graph(5, {});
  CHECK(naive_stable(empty).class_count() == 1);

  // Individualize both in-pairs of the AND gate.
  ColoredGraph a = new_graph(10, and2_edges(), {1, 2, 3, 4, 0, 0, 0, 0, 0, 0});
  Partition s = naive_stable(a);
  CHECK(separated(s, 8, 9));
  ColoredGraph half = new_graph(10, and2_edges(), {1, 2, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(separated(naive_stable(half), 8, 9));
}

TEST_CASE("naive_stable is equitable, refining, idempotent, deterministic") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    ColoredGraph g = random_graph(seed, 8 + seed % 20, 0.15, 1 + seed % 3);
    Partition init = initial_partition(g);
    Partition s = naive_stable(g, init);
    s.validate();
    CHECK(is_equitable(g, s));
    CHECK(s.refines(init));
    CHECK(naive_stable(g, s).class_of == s.class_of);
    CHECK(naive_stable(g, init).class_of == s.class_of);
  }
}

TEST_CASE("naive_stable numbering follows smallest member") {
  ColoredGraph g = new_graph(4, {{0, 1}, {2, 3}, {1, 2}});
  Partition s = naive_stable(g);
  CHECK(s.class_of == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("text format round trip") {
  ColoredGraph g = random_graph(11, 12, 0.3, 3);
  std::string text = format_graph(g);
  ColoredGraph h = parse_graph(text);
  CHECK(h.edges() == g.edges());
  CHECK(h.initial_colors() == g.initial_colors());
  CHECK(format_graph(h) == text);
}

TEST_CASE("text format parser") {
  ColoredGraph g = parse_graph("# comment\np cr 3 2\nc 1 5\ne 0 1\ne 1 2\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.initial_colors() == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(parse_graph("p cr 3 2\ne 0 1\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("p cr 3 2\ne 0 1\ne 1 0\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("e 0 1\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("p cr 2 1\ne 0 3\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("p cr 2 0\nx 1\n"), GraphError);
}

TEST_CASE("partition helpers") {
  Partition p = Partition::from_colors({2, 0, 2, 1});
  p.validate();
  CHECK(p.class_count() == 3);
  Partition q = Partition::from_colors({0, 1, 0, 2});
  CHECK(p.same_classes(q));
  CHECK(p.refines(Partition::unit(4)));
  CHECK_FALSE(Partition::unit(4).refines(p));
  Partition bad = p;
  bad.class_of[0] = 1;
  CHECK_THROWS_AS(bad.validate(), GraphError);
}
