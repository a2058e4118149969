#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crlab/gadgets.hpp"
#include "crlab/graph.hpp"

namespace crlab {

enum class FamilyKind { Concealer, StackAdv, QueueAdv, PqMaxAdv, PqMinAdv };

std::string family_name(FamilyKind kind);
FamilyKind parse_family(const std::string& name);  // concealer, stack-adv, queue-adv, pq-max-adv, pq-min-adv

// Gadget hooked into a family graph, with global ids.
struct PlacedGadget {
  std::string name;
  int level = 0;
  std::vector<VertexPair> in_pairs;
  VertexPair out_pair{0, 0};
  int correct = -1;  // concealers only
  Vertex first = 0;  // gadget-local id 0 maps here
  int size = 0;
};

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::Concealer;
  int k = 0;
  std::vector<int> correct_indices;  // entry l-1 for level l

  // Disjoint role sets covering the vertex set, in id order.
  std::vector<std::pair<std::string, std::vector<Vertex>>> roles;

  // Layers indexed by binary position i in [0, 2^k). X may hold twins (x_mult = 2).
  std::vector<std::vector<Vertex>> x_by_index;
  std::vector<Vertex> y;
  std::vector<std::vector<Vertex>> xx;  // xx[j-1][i] = x_i^j
  std::vector<std::vector<Vertex>> yy;  // yy[j-1][i] = y_i^j, 2k columns for pq-min-adv

  // Level-l split devices (l = 1..k-1 at index l-1): concealers, AND gates, or the
  // (a_{l,0}, a_{l,1}) pairs of the stack-advantage graph.
  std::vector<PlacedGadget> levels;
  std::vector<VertexPair> level_out;  // out pair per level

  std::vector<Vertex> start;  // v1,v2,v3 or s1..s4
  std::vector<PlacedGadget> extra_gadgets;

  // Queue-advantage paths: xpath[j][i] = p_{x_i}^j, j = 0..k.
  std::vector<std::vector<Vertex>> xpath;
  std::vector<VertexPair> stack_path1, stack_path2;  // pairs at positions 1..k+2
  std::vector<VertexPair> queue_path;                // pairs at positions 1..k
  VertexPair start_out{0, 0};
  VertexPair path_end{0, 0};

  const std::vector<Vertex>& role(const std::string& name) const;
  std::vector<Vertex> x_all() const;
};

struct Family {
  ColoredGraph graph;
  FamilyDescriptor desc;
};

// Vertex ids of block q of level l: indices q*2^(k-l) .. (q+1)*2^(k-l)-1.
enum class Layer { X, XX, YY, Y, XPath };
std::vector<Vertex> block(const FamilyDescriptor& d, Layer layer, int column, int l, int q);
std::vector<int> block_indices(int k, int l, int q);

Family build_concealer_graph(int k, const std::vector<int>& correct_indices);
Family build_stack_adv_graph(int k);
Family build_queue_adv_graph(int k);
Family build_pq_adv_graph(int k, bool max_kind);
Family build_family(FamilyKind kind, int k);  // concealer graphs use correct index 0 everywhere

// Sidecar text: "role <name> <id...>" per role.
std::string format_roles(const FamilyDescriptor& d);

}  // namespace crlab
