#include <random>

#include "crlab/gadgets.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crlab;
using testing_support::separated;

namespace {

std::vector<int> subset_pairs(unsigned mask, int count) {
  std::vector<int> out;
  for (int j = 0; j < count; ++j)
    if (mask >> j & 1u) out.push_back(j);
  return out;
}

bool any_in_pair_split(const Gadget& g, const Partition& p) {
  for (auto [u, v] : g.in_pairs)
    if (separated(p, u, v)) return true;
  return false;
}

bool out_split_with(const Gadget& g, const std::vector<int>& pairs) {
  ColoredGraph cg = g.graph(individualize_in_pairs(g, pairs));
  Partition s = naive_stable(cg);
  return separated(s, g.out_pair.first, g.out_pair.second);
}

}  // namespace

TEST_CASE("AND sizes") {
  Gadget a2 = build_and(2);
  CHECK(a2.vertex_count == 10);
  CHECK(a2.edges.size() == 12);
  CHECK(a2.graph().edges() == new_graph(10, testing_support::and2_edges()).edges());
  Gadget a3 = build_and(3);
  CHECK(a3.vertex_count == 30);
  CHECK(a3.graph().edge_count() == 40);
  Gadget a4 = build_and(4);
  CHECK(a4.vertex_count == 70);
  CHECK(a4.graph().edge_count() == 96);
  CHECK(a4.in_pairs.size() == 8);
  CHECK_THROWS(build_and(1));
}

TEST_CASE("AND truth table, exhaustive for levels 2..4") {
  for (int i = 2; i <= 4; ++i) {
    Gadget g = build_and(i);
    const int pairs = static_cast<int>(g.in_pairs.size());
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      bool full = mask == (1u << pairs) - 1;
      CHECK(out_split_with(g, subset_pairs(mask, pairs)) == full);
    }
  }
}

TEST_CASE("AND truth table, sampled for levels 5 and 6") {
  std::mt19937 rng(2024);
  for (int i = 5; i <= 6; ++i) {
    Gadget g = build_and(i);
    const int pairs = static_cast<int>(g.in_pairs.size());
    std::bernoulli_distribution coin(0.85);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> s;
      for (int j = 0; j < pairs; ++j)
        if (t == 0 || coin(rng)) s.push_back(j);
      CHECK(out_split_with(g, s) == (static_cast<int>(s.size()) == pairs));
    }
  }
}

TEST_CASE("AND out pair never splits an in-pair") {
  for (int i = 2; i <= 5; ++i) {
    Gadget g = build_and(i);
    Partition s = naive_stable(g.graph(individualize_out_pair(g)));
    CHECK_FALSE(any_in_pair_split(g, s));
  }
}

TEST_CASE("unidirectional gadget") {
  Gadget u = build_unidirectional();
  CHECK(u.vertex_count == 12);
  CHECK(u.graph().edge_count() == 16);
  CHECK(out_split_with(u, {0}));
  Partition back = naive_stable(u.graph(individualize_out_pair(u)));
  CHECK_FALSE(any_in_pair_split(u, back));
  Gadget d = build_unidirectional(true);
  CHECK_FALSE(out_split_with(d, {0}));
}

TEST_CASE("concealer sizes and ports") {
  Gadget c = build_concealer(3, 3);
  CHECK(c.vertex_count == 50);
  CHECK(c.graph().edge_count() == 72);
  CHECK(c.in_pairs.size() == 4);
  // local in-vertex numbering b_0..b_7 follows in_vertices()
  auto in = c.in_vertices();
  CHECK(c.in_pairs[3] == VertexPair{in[6], in[7]});
  Gadget c1 = build_concealer(1, 0);
  CHECK(c1.vertex_count == 12);
  CHECK_THROWS(build_concealer(3, 4));
  CHECK_THROWS(build_concealer(2, -1));
}

TEST_CASE("concealer truth table, exhaustive for levels 1..3") {
  for (int i = 1; i <= 3; ++i) {
    const int pairs = 1 << (i - 1);
    for (int correct = 0; correct < pairs; ++correct) {
      Gadget g = build_concealer(i, correct);
      for (unsigned mask = 0; mask < (1u << pairs); ++mask)
        CHECK(out_split_with(g, subset_pairs(mask, pairs)) == bool(mask >> correct & 1u));
      Partition back = naive_stable(g.graph(individualize_out_pair(g)));
      CHECK_FALSE(any_in_pair_split(g, back));
    }
  }
}

TEST_CASE("builders are deterministic") {
  CHECK(format_gadget(build_and(4)) == format_gadget(build_and(4)));
  CHECK(format_gadget(build_concealer(3, 1)) == format_gadget(build_concealer(3, 1)));
  std::string text = format_gadget(build_unidirectional());
  CHECK(text.find("# in 0 10 11\n") != std::string::npos);
  CHECK(text.find("# out 8 9\n") != std::string::npos);
  // comments are ignored by the graph parser
  CHECK(parse_graph(text).edge_count() == 16);
}
