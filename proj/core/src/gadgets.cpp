#include "crlab/gadgets.hpp"

#include <sstream>
#include <stdexcept>

namespace crlab {

namespace {

// b0..b3 = 0..3, c0..c3 = 4..7, a0, a1 = 8, 9
const Edge kAndEdges[] = {{0, 4}, {0, 6}, {1, 5}, {1, 7}, {2, 5}, {2, 6}, {3, 4}, {3, 7},
                          {4, 8}, {5, 8}, {6, 9}, {7, 9}};

void append(Gadget& dst, const Gadget& src, int offset) {
  for (auto [u, v] : src.edges) dst.edges.emplace_back(u + offset, v + offset);
}

}  // namespace

ColoredGraph Gadget::graph(const std::vector<int>& colors) const { return new_graph(vertex_count, edges, colors); }

std::vector<Vertex> Gadget::in_vertices() const {
  std::vector<Vertex> out;
  for (auto [u, v] : in_pairs) out.push_back(u), out.push_back(v);
  return out;
}

Gadget build_and(int i) {
  if (i < 2) throw std::invalid_argument("AND gadget needs level >= 2");
  Gadget g;
  g.kind = GadgetKind::And;
  g.level = i;
  if (i == 2) {
    g.vertex_count = 10;
    g.edges.assign(std::begin(kAndEdges), std::end(kAndEdges));
    g.in_pairs = {{0, 1}, {2, 3}};
    g.out_pair = {8, 9};
    return g;
  }
  Gadget child = build_and(i - 1);
  const int cn = child.vertex_count;
  const int top = 2 * cn;
  g.vertex_count = top + 10;
  for (int c = 0; c < 2; ++c) {
    append(g, child, c * cn);
    for (auto [u, v] : child.in_pairs) g.in_pairs.emplace_back(u + c * cn, v + c * cn);
  }
  for (auto e : kAndEdges) g.edges.emplace_back(e.first + top, e.second + top);
  for (int c = 0; c < 2; ++c) {
    g.edges.emplace_back(child.out_pair.first + c * cn, top + 2 * c);
    g.edges.emplace_back(child.out_pair.second + c * cn, top + 2 * c + 1);
  }
  g.out_pair = {top + 8, top + 9};
  return g;
}

Gadget build_unidirectional(bool dead_end) {
  Gadget g = build_and(2);
  g.kind = GadgetKind::Unidirectional;
  g.level = 1;
  g.vertex_count = 12;
  if (dead_end) {
    g.edges.insert(g.edges.end(), {{10, 0}, {10, 1}, {11, 2}, {11, 3}});
  } else {
    g.edges.insert(g.edges.end(), {{10, 0}, {10, 2}, {11, 1}, {11, 3}});
  }
  g.in_pairs = {{10, 11}};
  return g;
}

Gadget build_concealer(int i, int correct) {
  if (i < 1) throw std::invalid_argument("concealer needs level >= 1");
  const int subs = 1 << (i - 1);
  if (correct < 0 || correct >= subs)
    throw std::invalid_argument("correct pair index " + std::to_string(correct) + " out of range");
  Gadget g;
  g.kind = GadgetKind::Concealer;
  g.level = i;
  g.correct = correct;
  if (i == 1) {
    Gadget u = build_unidirectional(false);
    g.vertex_count = u.vertex_count;
    g.edges = u.edges;
    g.in_pairs = u.in_pairs;
    g.out_pair = u.out_pair;
    return g;
  }
  const Gadget live = build_unidirectional(false);
  const Gadget dead = build_unidirectional(true);
  const int a0 = subs * 12, a1 = a0 + 1;
  g.vertex_count = a0 + 2;
  for (int s = 0; s < subs; ++s) {
    const Gadget& sub = s == correct ? live : dead;
    const int off = 12 * s;
    append(g, sub, off);
    g.in_pairs.emplace_back(sub.in_pairs[0].first + off, sub.in_pairs[0].second + off);
    g.edges.emplace_back(sub.out_pair.first + off, a0);
    g.edges.emplace_back(sub.out_pair.second + off, a1);
  }
  g.out_pair = {a0, a1};
  return g;
}

std::vector<int> individualize_in_pairs(const Gadget& g, const std::vector<int>& pair_indices) {
  std::vector<int> colors(g.vertex_count, 0);
  int next = 1;
  for (int j : pair_indices) {
    if (j < 0 || j >= static_cast<int>(g.in_pairs.size())) throw std::invalid_argument("in-pair index out of range");
    colors[g.in_pairs[j].first] = next++;
    colors[g.in_pairs[j].second] = next++;
  }
  return colors;
}

std::vector<int> individualize_out_pair(const Gadget& g) {
  std::vector<int> colors(g.vertex_count, 0);
  colors[g.out_pair.first] = 1;
  colors[g.out_pair.second] = 2;
  return colors;
}

std::string format_gadget(const Gadget& g) {
  std::ostringstream out;
  write_graph(out, g.graph());
  for (std::size_t j = 0; j < g.in_pairs.size(); ++j)
    out << "# in " << j << ' ' << g.in_pairs[j].first << ' ' << g.in_pairs[j].second << '\n';
  out << "# out " << g.out_pair.first << ' ' << g.out_pair.second << '\n';
  return out.str();
}

}  // namespace crlab
