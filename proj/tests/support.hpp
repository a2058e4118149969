#pragma once

#include <random>
#include <vector>

#include "crlab/graph.hpp"

namespace testing_support {

inline crlab::ColoredGraph path3() { return crlab::new_graph(3, {{0, 1}, {1, 2}}, {0, 0, 0}); }

// CFI AND gate drawn with in-vertices 0..3, middle 4..7, out 8..9.
inline std::vector<crlab::Edge> and2_edges() {
  return {{0, 4}, {0, 6}, {1, 5}, {1, 7}, {2, 5}, {2, 6}, {3, 4}, {3, 7},
          {4, 8}, {5, 8}, {6, 9}, {7, 9}};
}

inline crlab::ColoredGraph random_graph(unsigned seed, int n, double p, int colors) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> col(0, colors - 1);
  std::vector<crlab::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  std::vector<int> c(n);
  for (int& x : c) x = col(rng);
  return crlab::new_graph(n, es, c);
}

// Reference check: does p split the pair (a, b)?
inline bool separated(const crlab::Partition& p, crlab::Vertex a, crlab::Vertex b) {
  return p.class_of[a] != p.class_of[b];
}

}  // namespace testing_support
