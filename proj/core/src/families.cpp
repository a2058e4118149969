#include "crlab/families.hpp"

#include <sstream>
#include <stdexcept>

namespace crlab {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Concealer: return "concealer";
    case FamilyKind::StackAdv: return "stack-adv";
    case FamilyKind::QueueAdv: return "queue-adv";
    case FamilyKind::PqMaxAdv: return "pq-max-adv";
    case FamilyKind::PqMinAdv: return "pq-min-adv";
  }
  return "?";
}

FamilyKind parse_family(const std::string& name) {
  for (FamilyKind k : {FamilyKind::Concealer, FamilyKind::StackAdv, FamilyKind::QueueAdv, FamilyKind::PqMaxAdv,
                       FamilyKind::PqMinAdv})
    if (family_name(k) == name) return k;
  throw std::invalid_argument("unknown family '" + name + "'");
}

const std::vector<Vertex>& FamilyDescriptor::role(const std::string& name) const {
  for (const auto& r : roles)
    if (r.first == name) return r.second;
  throw std::out_of_range("no role '" + name + "'");
}

std::vector<Vertex> FamilyDescriptor::x_all() const {
  std::vector<Vertex> out;
  for (const auto& twins : x_by_index) out.insert(out.end(), twins.begin(), twins.end());
  return out;
}

std::vector<int> block_indices(int k, int l, int q) {
  if (l < 0 || l > k || q < 0 || q >= (1 << l)) throw std::out_of_range("block level/index out of range");
  const int w = 1 << (k - l);
  std::vector<int> out(w);
  for (int t = 0; t < w; ++t) out[t] = q * w + t;
  return out;
}

std::vector<Vertex> block(const FamilyDescriptor& d, Layer layer, int column, int l, int q) {
  std::vector<Vertex> out;
  auto columns = [&](const std::vector<std::vector<Vertex>>& cols, int i) {
    if (column == 0) {
      for (const auto& c : cols) out.push_back(c[i]);
    } else {
      if (column < 1 || column > static_cast<int>(cols.size())) throw std::out_of_range("column out of range");
      out.push_back(cols[column - 1][i]);
    }
  };
  for (int i : block_indices(d.k, l, q)) {
    switch (layer) {
      case Layer::X: out.insert(out.end(), d.x_by_index[i].begin(), d.x_by_index[i].end()); break;
      case Layer::Y: out.push_back(d.y[i]); break;
      case Layer::XX: columns(d.xx, i); break;
      case Layer::YY: columns(d.yy, i); break;
      case Layer::XPath:
        if (d.xpath.empty()) throw std::out_of_range("family has no X-paths");
        if (column < 0 || column >= static_cast<int>(d.xpath.size())) throw std::out_of_range("path layer out of range");
        out.push_back(d.xpath[column][i]);
        break;
    }
  }
  return out;
}

namespace {

class Builder {
 public:
  FamilyDescriptor d;
  std::vector<Edge> edges;
  int n = 0;

  Vertex add(const std::string& role) {
    role_list(role).push_back(n);
    return n++;
  }

  void edge(Vertex u, Vertex v) { edges.emplace_back(u, v); }

  PlacedGadget place(const Gadget& g, const std::string& name, const std::string& role) {
    PlacedGadget p;
    p.name = name;
    p.level = g.level;
    p.correct = g.correct;
    p.first = n;
    p.size = g.vertex_count;
    for (int i = 0; i < g.vertex_count; ++i) add(role);
    for (auto [u, v] : g.edges) edge(u + p.first, v + p.first);
    for (auto [u, v] : g.in_pairs) p.in_pairs.emplace_back(u + p.first, v + p.first);
    p.out_pair = {g.out_pair.first + p.first, g.out_pair.second + p.first};
    return p;
  }

  // Every vertex of the X block (l, q) gets an edge to v.
  void to_x_block(Vertex v, int l, int q) {
    for (Vertex x : block(d, Layer::X, 0, l, q)) edge(v, x);
  }

  // a0 to the even blocks of level l of X, a1 to the odd ones.
  void split_x(VertexPair out, int l) {
    for (int q = 0; q < (1 << l); ++q) to_x_block(q % 2 == 0 ? out.first : out.second, l, q);
  }

  ColoredGraph finish(const std::vector<int>& colors = {}) { return new_graph(n, edges, colors); }

 private:
  std::vector<Vertex>& role_list(const std::string& role) {
    for (auto& r : d.roles)
      if (r.first == role) return r.second;
    d.roles.emplace_back(role, std::vector<Vertex>{});
    return d.roles.back().second;
  }
};

// X, XX, YY, Y with the per-index complete bipartite blocks.
void build_layers(Builder& b, int k, int x_mult, int yy_cols) {
  const int size = 1 << k;
  auto& d = b.d;
  d.k = k;
  d.x_by_index.assign(size, {});
  for (int i = 0; i < size; ++i)
    for (int t = 0; t < x_mult; ++t) d.x_by_index[i].push_back(b.add("X"));
  d.xx.assign(k, std::vector<Vertex>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < k; ++j) d.xx[j][i] = b.add("XX");
  d.yy.assign(yy_cols, std::vector<Vertex>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < yy_cols; ++j) d.yy[j][i] = b.add("YY");
  d.y.resize(size);
  for (int i = 0; i < size; ++i) d.y[i] = b.add("Y");
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < k; ++j)
      for (Vertex x : d.x_by_index[i]) b.edge(x, d.xx[j][i]);
    for (int j = 0; j < yy_cols; ++j) b.edge(d.y[i], d.yy[j][i]);
    for (int j = 0; j < k; ++j)
      for (int jj = 0; jj < yy_cols; ++jj) b.edge(d.xx[j][i], d.yy[jj][i]);
  }
}

// v1-v2, v2 to the first half of X, v3 to the second half.
void build_simple_start(Builder& b) {
  Vertex v1 = b.add("start"), v2 = b.add("start"), v3 = b.add("start");
  b.d.start = {v1, v2, v3};
  b.edge(v1, v2);
  b.to_x_block(v2, 1, 0);
  b.to_x_block(v3, 1, 1);
}

// In-vertex t of a level-l device sees Y block (l, t).
void wire_inputs(Builder& b, const std::vector<Vertex>& in, int l) {
  for (int t = 0; t < static_cast<int>(in.size()); ++t)
    for (Vertex y : block(b.d, Layer::Y, 0, l, t)) b.edge(in[t], y);
}

std::vector<Vertex> flatten(const std::vector<VertexPair>& pairs) {
  std::vector<Vertex> out;
  for (auto [u, v] : pairs) out.push_back(u), out.push_back(v);
  return out;
}

// a_{l,0}/a_{l,1} pairs between Y level l and X level l+1, l = 1..k-1.
Family stack_like(FamilyKind kind, int k, int x_mult, int yy_cols) {
  if (k < 2) throw std::invalid_argument("family needs k >= 2");
  Builder b;
  b.d.kind = kind;
  build_layers(b, k, x_mult, yy_cols);
  for (int l = 1; l < k; ++l) {
    Vertex a0 = b.add("A"), a1 = b.add("A");
    PlacedGadget p;
    p.name = "A" + std::to_string(l);
    p.level = l;
    p.in_pairs = {{a0, a1}};
    p.out_pair = {a0, a1};
    p.first = a0;
    p.size = 2;
    for (int q = 0; q < (1 << l); ++q)
      for (Vertex y : block(b.d, Layer::Y, 0, l, q)) b.edge(q % 2 == 0 ? a0 : a1, y);
    b.split_x({a0, a1}, l + 1);
    b.d.levels.push_back(p);
    b.d.level_out.push_back({a0, a1});
  }
  build_simple_start(b);
  ColoredGraph g = b.finish();
  return {std::move(g), std::move(b.d)};
}

}  // namespace

Family build_concealer_graph(int k, const std::vector<int>& correct_indices) {
  if (k < 2) throw std::invalid_argument("concealer graph needs k >= 2");
  if (static_cast<int>(correct_indices.size()) != k - 1)
    throw std::invalid_argument("need one correct index per level 1..k-1");
  Builder b;
  b.d.kind = FamilyKind::Concealer;
  b.d.correct_indices = correct_indices;
  build_layers(b, k, 1, k);
  for (int l = 1; l < k; ++l) {
    int c = correct_indices[l - 1];
    if (c < 0 || c >= (1 << (l - 1)))
      throw std::invalid_argument("correct index out of range at level " + std::to_string(l));
    PlacedGadget p = b.place(build_concealer(l, c), "C" + std::to_string(l), "C" + std::to_string(l));
    wire_inputs(b, flatten(p.in_pairs), l);
    b.split_x(p.out_pair, l + 1);
    b.d.levels.push_back(p);
    b.d.level_out.push_back(p.out_pair);
  }
  build_simple_start(b);
  ColoredGraph g = b.finish();
  return {std::move(g), std::move(b.d)};
}

Family build_stack_adv_graph(int k) { return stack_like(FamilyKind::StackAdv, k, 1, k); }

Family build_pq_adv_graph(int k, bool max_kind) {
  return max_kind ? stack_like(FamilyKind::PqMaxAdv, k, 2, k) : stack_like(FamilyKind::PqMinAdv, k, 1, 2 * k);
}

Family build_queue_adv_graph(int k) {
  if (k < 2) throw std::invalid_argument("queue-advantage graph needs k >= 2");
  Builder b;
  auto& d = b.d;
  d.kind = FamilyKind::QueueAdv;
  build_layers(b, k, 1, k);
  const int size = 1 << k;

  // Level-l AND gates; a single in-pair at level 1 uses the one-way gadget.
  for (int l = 1; l < k; ++l) {
    Gadget gate = l == 1 ? build_unidirectional() : build_and(l);
    PlacedGadget p = b.place(gate, "AND" + std::to_string(l), "AND" + std::to_string(l));
    p.level = l;
    wire_inputs(b, flatten(p.in_pairs), l);
    b.split_x(p.out_pair, l + 1);
    d.levels.push_back(p);
    d.level_out.push_back(p.out_pair);
  }

  // X-paths p^0 .. p^k, p^k attached to x_i.
  d.xpath.assign(k + 1, std::vector<Vertex>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= k; ++j) d.xpath[j][i] = b.add("xpath");
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < k; ++j) b.edge(d.xpath[j][i], d.xpath[j + 1][i]);
    b.edge(d.xpath[k][i], d.x_by_index[i][0]);
  }

  PlacedGadget start = b.place(build_and(2), "start", "start_gadget");
  d.start_out = start.out_pair;
  const std::vector<Vertex> sb = flatten(start.in_pairs);

  auto make_pairs = [&](int count, const std::string& role) {
    std::vector<VertexPair> out;
    for (int j = 0; j < count; ++j) {
      Vertex u = b.add(role), v = b.add(role);
      out.emplace_back(u, v);
    }
    for (int j = 0; j + 1 < count; ++j) {
      b.edge(out[j].first, out[j + 1].first);
      b.edge(out[j].second, out[j + 1].second);
    }
    return out;
  };
  d.stack_path1 = make_pairs(k + 2, "stack_paths");
  d.stack_path2 = make_pairs(k + 2, "stack_paths");
  b.edge(sb[0], d.stack_path1[0].first);
  b.edge(sb[1], d.stack_path1[0].second);
  b.edge(sb[2], d.stack_path2[0].first);
  b.edge(sb[3], d.stack_path2[0].second);

  d.queue_path = make_pairs(k, "queue_path");
  b.edge(start.out_pair.first, d.queue_path[0].first);
  b.edge(start.out_pair.second, d.queue_path[0].second);

  // Pair (u, v) drives an AND_2 through u ~ b0,b2 and v ~ b1,b3.
  auto one_way = [&](VertexPair in, const std::string& name) {
    PlacedGadget p = b.place(build_and(2), name, "link_gadgets");
    auto bs = flatten(p.in_pairs);
    b.edge(in.first, bs[0]);
    b.edge(in.first, bs[2]);
    b.edge(in.second, bs[1]);
    b.edge(in.second, bs[3]);
    p.in_pairs = {in};
    d.extra_gadgets.push_back(p);
    return p.out_pair;
  };
  for (int i = 1; i <= k; ++i) {
    VertexPair out = one_way(d.queue_path[i - 1], "Q" + std::to_string(i));
    for (int q = 0; q < (1 << i); ++q)
      for (int idx : block_indices(k, i, q)) b.edge(q % 2 == 0 ? out.first : out.second, d.xpath[i][idx]);
  }
  VertexPair e1 = one_way(d.stack_path1.back(), "end1");
  VertexPair e2 = one_way(d.stack_path2.back(), "end2");
  Vertex pe1 = b.add("path_end"), pe2 = b.add("path_end");
  d.path_end = {pe1, pe2};
  b.edge(pe1, e1.first);
  b.edge(pe2, e1.second);
  b.edge(pe1, e2.first);
  b.edge(pe2, e2.second);
  b.to_x_block(pe1, 1, 0);
  b.to_x_block(pe2, 1, 1);

  for (int i = 0; i < 4; ++i) {
    Vertex s = b.add("start");
    d.start.push_back(s);
    b.edge(s, sb[i]);
  }

  // s_i gets color i; every other vertex is colored by its degree.
  ColoredGraph plain = b.finish();
  std::vector<int> colors(b.n);
  for (int v = 0; v < b.n; ++v) colors[v] = plain.degree(v) + 4;
  for (int i = 0; i < 4; ++i) colors[d.start[i]] = i;
  ColoredGraph g = plain.recolored(colors);
  return {std::move(g), std::move(b.d)};
}

Family build_family(FamilyKind kind, int k) {
  switch (kind) {
    case FamilyKind::Concealer: return build_concealer_graph(k, std::vector<int>(k - 1, 0));
    case FamilyKind::StackAdv: return build_stack_adv_graph(k);
    case FamilyKind::QueueAdv: return build_queue_adv_graph(k);
    case FamilyKind::PqMaxAdv: return build_pq_adv_graph(k, true);
    case FamilyKind::PqMinAdv: return build_pq_adv_graph(k, false);
  }
  throw std::invalid_argument("unknown family");
}

std::string format_roles(const FamilyDescriptor& d) {
  std::ostringstream out;
  for (const auto& [name, ids] : d.roles) {
    out << "role " << name;
    for (Vertex v : ids) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace crlab
