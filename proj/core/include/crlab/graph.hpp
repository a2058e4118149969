#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph with an initial vertex coloring. Immutable after construction.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  std::int64_t edge_count() const { return edge_count_; }
  int color_count() const { return color_count_; }

  // Sorted neighbor list of v.
  std::pair<const Vertex*, const Vertex*> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<int>& initial_colors() const { return colors_; }
  int color(Vertex v) const { return colors_[v]; }

  // Edge list with u < v, sorted.
  std::vector<Edge> edges() const;

  // Same graph with a different initial coloring (renumbered to 0..c-1).
  ColoredGraph recolored(const std::vector<int>& colors) const;

  friend ColoredGraph new_graph(int, const std::vector<Edge>&, const std::vector<int>&);

 private:
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<int> colors_;
  std::int64_t edge_count_ = 0;
  int color_count_ = 0;
};

// Validates and builds a graph. Colors are renumbered to 0..c-1 keeping the order of
// distinct values. An empty color vector means monochromatic.
ColoredGraph new_graph(int vertex_count, const std::vector<Edge>& edges,
                       const std::vector<int>& initial_colors = {});

// Renumbers arbitrary integer labels to 0..c-1, preserving equality and order.
std::vector<int> normalize_colors(const std::vector<int>& colors);

struct Partition {
  std::vector<int> class_of;
  std::vector<std::vector<Vertex>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  int vertex_count() const { return static_cast<int>(class_of.size()); }
  int size(int c) const { return static_cast<int>(classes[c].size()); }

  static Partition from_colors(const std::vector<int>& colors);
  static Partition unit(int n);

  // Throws GraphError if classes and class_of disagree or ids are not contiguous.
  void validate() const;

  // Renumbered so classes are ordered by smallest member, members sorted.
  Partition canonical() const;

  // Same set of classes (ignores numbering).
  bool same_classes(const Partition& other) const;

  // True if every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;
};

Partition initial_partition(const ColoredGraph& g);

bool is_equitable(const ColoredGraph& g, const Partition& p);

// Coarsest equitable refinement by repeated full re-scans. Canonical numbering.
Partition naive_stable(const ColoredGraph& g, const Partition& p);
inline Partition naive_stable(const ColoredGraph& g) { return naive_stable(g, initial_partition(g)); }

// Number of edges {u,v} with u in a, v in b (sets given as membership masks).
std::int64_t edges_between(const ColoredGraph& g, const std::vector<char>& in_a,
                           const std::vector<char>& in_b);

// Text format: "p cr n m", "c v color", "e u v". Lines starting with '#' are comments.
ColoredGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const ColoredGraph& g);
ColoredGraph parse_graph(const std::string& text);
std::string format_graph(const ColoredGraph& g);

}  // namespace crlab
