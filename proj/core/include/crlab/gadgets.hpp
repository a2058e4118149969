#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "crlab/graph.hpp"

namespace crlab {

enum class GadgetKind { And, Unidirectional, Concealer };

using VertexPair = std::pair<Vertex, Vertex>;

// A graph fragment on local ids 0..vertex_count-1 with named ports.
struct Gadget {
  GadgetKind kind = GadgetKind::And;
  int level = 0;
  int correct = -1;  // concealer only
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<VertexPair> in_pairs;
  VertexPair out_pair{0, 0};

  ColoredGraph graph(const std::vector<int>& colors = {}) const;
  std::vector<Vertex> in_vertices() const;
};

// AND gate of level i >= 2: out pair splits iff every in-pair is split.
Gadget build_and(int i);

// One-way propagator: in-pair split reaches the out pair, not the reverse.
// The dead-end variant wires each new in-vertex to a whole in-pair of the inner gate.
Gadget build_unidirectional(bool dead_end = false);

// Concealer of level i >= 1 with 2^(i-1) in-pairs; only in-pair `correct` can split the
// out pair. Sub-gadget s occupies local ids [12s, 12s+12); for i >= 2 the two global
// out vertices follow.
Gadget build_concealer(int i, int correct);

// Coloring that gives both vertices of each listed in-pair a private color.
std::vector<int> individualize_in_pairs(const Gadget& g, const std::vector<int>& pair_indices);
// Coloring that gives both out vertices private colors.
std::vector<int> individualize_out_pair(const Gadget& g);

// Graph text followed by "# in j u v" and "# out u v" lines.
std::string format_gadget(const Gadget& g);

}  // namespace crlab
