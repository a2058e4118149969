#include <set>

#include "crlab/baselines.hpp"
#include "crlab/setcover.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crlab;

namespace {

SetCoverInstance fig_instance() { return parse_instance("u a b c d\ns d\ns b c d\ns a b\n"); }

}  // namespace

TEST_CASE("instance parsing") {
  SetCoverInstance inst = parse_instance("# comment\nu x y z\ns x\ns y z\ns z x\n");
  CHECK(inst.universe == std::vector<std::string>{"x", "y", "z"});
  CHECK(inst.subsets == std::vector<std::vector<int>>{{0}, {1, 2}, {0, 2}});
  CHECK(inst.size() == 8);
  CHECK_THROWS(parse_instance("s a\n"));
  CHECK_THROWS(parse_instance("u a b\ns a\n"));      // b uncovered
  CHECK_THROWS(parse_instance("u a b\ns a q\n"));    // unknown element
  CHECK_THROWS(parse_instance("u a\ns a\nt a\n"));   // unknown tag
  CHECK_THROWS(parse_instance("u a a\ns a\n"));
}

TEST_CASE("reduction shape") {
  SetCoverInstance inst = fig_instance();
  CHECK(inst.size() == 10);
  Reduction r = reduce_setcover(inst, 9);
  CHECK(r.elements.size() + r.dummies.size() == 13);
  CHECK(r.graph.degree(r.sets[1]) == 10);
  CHECK(r.graph.degree(r.sets[0]) == 12);
  CHECK(r.graph.degree(r.sets[2]) == 11);
  CHECK(r.graph.color_count() == 4);
  CHECK(reduce_setcover(inst).dummy_count == 100);

  SetCoverInstance whole = parse_instance("u a b c\ns a b c\n");
  Reduction w = reduce_setcover(whole, 7);
  CHECK(w.graph.degree(w.sets[0]) == 7);
  CHECK_THROWS(reduce_setcover(whole, 0));
}

TEST_CASE("stable partition of the reduction") {
  Reduction r = reduce_setcover(fig_instance(), 9);
  Partition s = naive_stable(r.graph);
  for (Vertex d : r.dummies) CHECK(s.class_of[d] == s.class_of[r.dummies[0]]);
  // a, b, c, d have distinct membership profiles; none matches the dummies.
  std::set<int> cls;
  for (Vertex e : r.elements) cls.insert(s.class_of[e]);
  cls.insert(s.class_of[r.dummies[0]]);
  CHECK(cls.size() == 5);
}

TEST_CASE("X against X splits nothing") {
  Reduction r = reduce_setcover(fig_instance(), 9);
  Partition p = initial_partition(r.graph);
  SplitStep st = apply_move(r.graph, p, Move{{0}, {0}});
  CHECK_FALSE(st.productive());
  CHECK(st.edge_cost == 0);
}

TEST_CASE("sequence evaluation") {
  Reduction r = reduce_setcover(fig_instance(), 9);
  Partition init = initial_partition(r.graph);
  // Colors: X = 0, sets 1..3. Fresh ids come in fragment order, the retained part first.
  WorklistSequence seq = {{{2}, {0}}, {{3}, {4}}, {{3}, {5}}, {{1}, {8}}};
  SequenceEval ev = eval_sequence(r.graph, init, seq);
  CHECK(ev.complete);
  CHECK(ev.report.total_cost == 10 + 9 + 2 + 1);
  CHECK(ev.report.final_partition.same_classes(naive_stable(r.graph)));

  WorklistSequence partial(seq.begin(), seq.begin() + 2);
  CHECK_FALSE(eval_sequence(r.graph, init, partial).complete);

  WorklistSequence dead = {{{2}, {0}}, {{3}, {0}}};
  CHECK_THROWS_AS(eval_sequence(r.graph, init, dead), std::invalid_argument);
  CHECK_THROWS_AS(eval_sequence(r.graph, init, {{{9}, {0}}}), std::invalid_argument);

  ColoredGraph p3 = testing_support::path3().recolored({0, 1, 0});
  SequenceEval none = eval_sequence(p3, initial_partition(p3), {});
  CHECK(none.complete);
  CHECK(none.report.total_cost == 0);
}

TEST_CASE("set cover oracles") {
  CHECK(brute_force_setcover(fig_instance()) == 2);
  CHECK(brute_force_setcover(parse_instance("u a b\ns a b\n")) == 1);
  CHECK(brute_force_setcover(parse_instance("u a b\ns a\ns b\n")) == 2);
  CHECK(greedy_setcover(fig_instance()) == std::vector<int>{1, 2});
  CHECK(greedy_setcover(parse_instance("u a b\ns a b\n")).size() == 1);
  CHECK(greedy_setcover(parse_instance("u a b c\ns a\ns b\ns c\n")).size() == 3);

  SetCoverInstance big;
  big.universe = {"a"};
  big.subsets.assign(21, {0});
  CHECK_THROWS(brute_force_setcover(big));
}

TEST_CASE("tiny instance enumeration") {
  // |S| = 2: {ab}, {a,b}, {a,ab}, {b,ab}.
  auto two = tiny_instances(2, 2);
  CHECK(two.size() == 4);
  for (const auto& inst : tiny_instances(3, 3)) CHECK_NOTHROW(inst.validate());
}

TEST_CASE("optimal sequences") {
  Reduction r = reduce_setcover(fig_instance(), 9);
  Partition init = initial_partition(r.graph);
  OptimalSequence o = brute_force_optimal_sequence(r.graph, init, 12);
  CHECK(o.cost / 9 == 2);
  SequenceEval ev = eval_sequence(r.graph, init, o.sequence);
  CHECK(ev.complete);
  CHECK(ev.report.total_cost == o.cost);

  Reduction w = reduce_setcover(parse_instance("u a b\ns a b\n"), 4);
  OptimalSequence ow = brute_force_optimal_sequence(w.graph, initial_partition(w.graph), 6);
  REQUIRE(!ow.sequence.empty());
  CHECK(ow.sequence[0].splitter == std::vector<int>{1});
  CHECK(ow.sequence[0].target == std::vector<int>{0});

  ColoredGraph p3 = testing_support::path3().recolored({0, 1, 0});
  OptimalSequence none = brute_force_optimal_sequence(p3, initial_partition(p3), 3);
  CHECK(none.sequence.empty());
  CHECK(none.cost == 0);

  CHECK_THROWS(brute_force_optimal_sequence(r.graph, init, 1));
}

TEST_CASE("optimal sequence cost brackets the cover size") {
  for (int s = 1; s <= 3; ++s) {
    for (const auto& inst : tiny_instances(s, 3)) {
      const int d = (s + static_cast<int>(inst.subsets.size())) * (s + static_cast<int>(inst.subsets.size()));
      Reduction r = reduce_setcover(inst, d);
      const int best = brute_force_setcover(inst);
      OptimalSequence o = brute_force_optimal_sequence(r.graph, initial_partition(r.graph), 16);
      CHECK(o.cost >= static_cast<std::int64_t>(best) * d);
      CHECK(static_cast<double>(o.cost) / d - best <= baselines::kSetCoverExcess);
    }
  }
}
