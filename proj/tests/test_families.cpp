#include <algorithm>
#include <set>

#include "crlab/families.hpp"
#include "crlab/refine.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crlab;
using testing_support::separated;

namespace {

std::int64_t p2(int e) { return std::int64_t{1} << e; }

// Counted by hand from the layer and gadget wiring.
std::int64_t concealer_vertices(int k) {
  std::int64_t n = p2(k) * (2 + 2 * k) + 3 + 12;
  for (int l = 2; l < k; ++l) n += 12 * p2(l - 1) + 2;
  return n;
}

std::int64_t concealer_edges(int k) {
  std::int64_t m = 2 * k * p2(k) + k * k * p2(k) + p2(k) + 1;
  m += 16 + 2 * p2(k);
  for (int l = 2; l < k; ++l) m += 18 * p2(l - 1) + 2 * p2(k);
  return m;
}

std::int64_t stack_adv_vertices(int k) { return p2(k) * (2 + 2 * k) + 2 * (k - 1) + 3; }
std::int64_t stack_adv_edges(int k) { return 2 * k * p2(k) + k * k * p2(k) + p2(k) + 1 + (k - 1) * p2(k + 1); }

bool x_discrete(const FamilyDescriptor& d, const Partition& p) {
  std::set<int> seen;
  for (Vertex x : d.x_all()) seen.insert(p.class_of[x]);
  return seen.size() == d.x_all().size();
}

// First worklist step index at which the pair is separated, or -1.
std::int64_t separation_step(const Family& f, const PolicySpec& pol, VertexPair pr) {
  std::int64_t step = 0, when = -1;
  RefineOptions o;
  o.record_trace = false;
  o.observer = [&](const SplitStep&, const Partition& p) {
    if (when < 0 && separated(p, pr.first, pr.second)) when = step;
    ++step;
  };
  refine_worklist(f.graph, initial_partition(f.graph), pol, o);
  return when;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (FamilyKind k : {FamilyKind::Concealer, FamilyKind::StackAdv, FamilyKind::QueueAdv, FamilyKind::PqMaxAdv,
                       FamilyKind::PqMinAdv})
    CHECK(parse_family(family_name(k)) == k);
  CHECK_THROWS(parse_family("nope"));
}

TEST_CASE("concealer graph sizes") {
  for (int k = 2; k <= 8; ++k) {
    Family f = build_concealer_graph(k, std::vector<int>(k - 1, 0));
    CHECK(f.graph.vertex_count() == concealer_vertices(k));
    CHECK(f.graph.edge_count() == concealer_edges(k));
  }
  CHECK(build_concealer_graph(6, {0, 1, 2, 3, 4}).graph.edge_count() == 4333);
  CHECK_THROWS(build_concealer_graph(4, {0, 2, 0}));  // level 2 has two pairs
  CHECK_THROWS(build_concealer_graph(4, {0, 0}));
}

TEST_CASE("stack-advantage graph sizes") {
  Family f = build_stack_adv_graph(3);
  CHECK(f.graph.vertex_count() == 71);
  // Both X and Y hooks on every level give 161; dropping the top X hook would give 153.
  CHECK(f.graph.edge_count() == 161);
  for (int k = 2; k <= 8; ++k) {
    Family g = build_stack_adv_graph(k);
    CHECK(g.graph.vertex_count() == stack_adv_vertices(k));
    CHECK(g.graph.edge_count() == stack_adv_edges(k));
  }
}

TEST_CASE("roles are disjoint and cover every vertex") {
  for (FamilyKind kind : {FamilyKind::Concealer, FamilyKind::StackAdv, FamilyKind::QueueAdv, FamilyKind::PqMaxAdv,
                          FamilyKind::PqMinAdv}) {
    for (int k = 2; k <= 5; ++k) {
      Family f = build_family(kind, k);
      std::vector<int> hits(f.graph.vertex_count(), 0);
      for (const auto& [name, ids] : f.desc.roles)
        for (Vertex v : ids) ++hits[v];
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      CHECK(f.desc.role("X").size() == f.desc.x_all().size());
      CHECK(f.desc.role("Y").size() == f.desc.y.size());
    }
  }
}

TEST_CASE("blocks") {
  Family f = build_concealer_graph(4, {0, 1, 3});
  std::vector<Vertex> want;
  for (int i = 12; i <= 15; ++i) want.push_back(f.desc.x_by_index[i][0]);
  CHECK(block(f.desc, Layer::X, 0, 2, 3) == want);
  CHECK(block_indices(4, 0, 0).size() == 16);
  CHECK(block_indices(4, 4, 9) == std::vector<int>{9});
  CHECK(block(f.desc, Layer::XX, 0, 4, 1).size() == 4);
  CHECK(block(f.desc, Layer::XX, 2, 4, 1) == std::vector<Vertex>{f.desc.xx[1][1]});
  CHECK_THROWS(block_indices(4, 2, 4));
  CHECK_THROWS(block(f.desc, Layer::YY, 5, 1, 0));
}

TEST_CASE("generation is deterministic") {
  for (FamilyKind kind : {FamilyKind::Concealer, FamilyKind::StackAdv, FamilyKind::QueueAdv, FamilyKind::PqMaxAdv,
                          FamilyKind::PqMinAdv}) {
    Family a = build_family(kind, 4), b = build_family(kind, 4);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.graph.initial_colors() == b.graph.initial_colors());
    CHECK(format_roles(a.desc) == format_roles(b.desc));
  }
}

TEST_CASE("every family ends with X discrete") {
  for (FamilyKind kind : {FamilyKind::Concealer, FamilyKind::StackAdv, FamilyKind::QueueAdv, FamilyKind::PqMaxAdv,
                          FamilyKind::PqMinAdv}) {
    for (int k = 2; k <= 6; ++k) {
      Family f = build_family(kind, k);
      Partition s = naive_stable(f.graph);
      // Twins in the max variant stay together; indices do not.
      std::set<int> per_index;
      for (const auto& tw : f.desc.x_by_index) {
        per_index.insert(s.class_of[tw[0]]);
        for (Vertex v : tw) CHECK(s.class_of[v] == s.class_of[tw[0]]);
      }
      CHECK_MESSAGE(per_index.size() == f.desc.x_by_index.size(), family_name(kind) << " k=" << k);
      for (const auto& pr : f.desc.level_out) CHECK(separated(s, pr.first, pr.second));
    }
  }
}

TEST_CASE("priority-queue variants") {
  Family mx = build_pq_adv_graph(3, true);
  CHECK(mx.desc.x_all().size() == 16);
  CHECK(mx.desc.x_by_index.size() == 8);
  Family mn = build_pq_adv_graph(3, false);
  CHECK(mn.desc.yy.size() == 6);
  CHECK(mn.desc.xx.size() == 3);
  CHECK(block(mn.desc, Layer::YY, 0, 1, 0).size() > block(mn.desc, Layer::XX, 0, 1, 0).size());
}

TEST_CASE("concealer wiring") {
  Family f = build_concealer_graph(4, {0, 1, 2});
  const auto& d = f.desc;
  for (int l = 1; l < 4; ++l) {
    const PlacedGadget& c = d.levels[l - 1];
    CHECK(c.correct == d.correct_indices[l - 1]);
    CHECK(static_cast<int>(c.in_pairs.size()) == p2(l - 1));
    // In-vertex t sees exactly Y block t of level l.
    for (int t = 0; t < p2(l); ++t) {
      Vertex in = t % 2 ? c.in_pairs[t / 2].second : c.in_pairs[t / 2].first;
      for (int i = 0; i < 16; ++i) CHECK(f.graph.adjacent(in, d.y[i]) == (i / (16 >> l) == t));
    }
    // Out pair halves the level-l blocks of X.
    for (int i = 0; i < 16; ++i) {
      const bool even = (i / (16 >> (l + 1))) % 2 == 0;
      CHECK(f.graph.adjacent(c.out_pair.first, d.x_by_index[i][0]) == even);
      CHECK(f.graph.adjacent(c.out_pair.second, d.x_by_index[i][0]) == !even);
    }
  }
}

TEST_CASE("queue run on the queue-advantage graph") {
  for (int k = 3; k <= 8; ++k) {
    Family f = build_queue_adv_graph(k);
    RefineOptions o;
    o.initial_depth = 1;  // the degree coloring counts as the outcome of round 0
    int first_x = -1, discrete_round = -1, first_y = -1;
    const Partition init = initial_partition(f.graph);
    auto x_split = [&](const Partition& p) { return p.class_of[f.desc.x_all().front()] != p.class_of[f.desc.x_all().back()]; };
    o.observer = [&](const SplitStep& st, const Partition& p) {
      if (first_x < 0 && x_split(p)) first_x = st.round;
      if (discrete_round < 0 && x_discrete(f.desc, p)) discrete_round = st.round;
      if (first_y < 0 && p.class_of[f.desc.y.front()] != p.class_of[f.desc.y.back()]) first_y = st.round;
    };
    RefinementReport r = refine_worklist(f.graph, init, parse_policy("queue"), o);
    CHECK(first_x == k + 8);
    CHECK(discrete_round == k + 8);
    CHECK(first_y == k + 11);
    CHECK(r.final_partition.same_classes(naive_stable(f.graph)));
  }
}

TEST_CASE("start gadget orders stack and queue differently") {
  for (int k = 3; k <= 6; ++k) {
    Family f = build_queue_adv_graph(k);
    const VertexPair a = f.desc.start_out;
    const PolicySpec stack = parse_policy("stack"), queue = parse_policy("queue");
    const std::int64_t s_a = separation_step(f, stack, a);
    const std::int64_t s_p = std::min(separation_step(f, stack, f.desc.stack_path1[2]),
                                      separation_step(f, stack, f.desc.stack_path2[2]));
    CHECK(s_p < s_a);
    const std::int64_t q_a = separation_step(f, queue, a);
    const std::int64_t q_p = std::min(separation_step(f, queue, f.desc.stack_path1[2]),
                                      separation_step(f, queue, f.desc.stack_path2[2]));
    CHECK(q_a < q_p);
  }
}

TEST_CASE("roles sidecar format") {
  Family f = build_stack_adv_graph(2);
  std::string s = format_roles(f.desc);
  CHECK(s.rfind("role X ", 0) == 0);
  CHECK(s.find("\nrole A ") != std::string::npos);
}
