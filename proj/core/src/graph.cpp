#include "crlab/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace crlab {

std::vector<int> normalize_colors(const std::vector<int>& colors) {
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colors[i]) - sorted.begin());
  return out;
}

ColoredGraph new_graph(int n, const std::vector<Edge>& edges, const std::vector<int>& initial_colors) {
  if (n < 0) throw GraphError("negative vertex count");
  if (!initial_colors.empty() && static_cast<int>(initial_colors.size()) != n)
    throw GraphError("color vector length does not match vertex count");
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  for (std::size_t i = 1; i < es.size(); ++i)
    if (es[i] == es[i - 1])
      throw GraphError("duplicate edge " + std::to_string(es[i].first) + " " + std::to_string(es[i].second));

  ColoredGraph g;
  std::vector<int> deg(n, 0);
  for (auto [u, v] : es) ++deg[u], ++deg[v];
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : es) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
  g.edge_count_ = static_cast<std::int64_t>(es.size());
  if (initial_colors.empty()) {
    g.colors_.assign(n, 0);
  } else {
    for (int c : initial_colors)
      if (c < 0) throw GraphError("negative color");
    g.colors_ = normalize_colors(initial_colors);
  }
  g.color_count_ = g.colors_.empty() ? 0 : *std::max_element(g.colors_.begin(), g.colors_.end()) + 1;
  return g;
}

bool ColoredGraph::adjacent(Vertex u, Vertex v) const {
  auto [b, e] = neighbors(u);
  return std::binary_search(b, e, v);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    auto [b, e] = neighbors(u);
    for (auto it = b; it != e; ++it)
      if (u < *it) out.emplace_back(u, *it);
  }
  return out;
}

ColoredGraph ColoredGraph::recolored(const std::vector<int>& colors) const {
  return new_graph(vertex_count(), edges(), colors);
}

Partition Partition::from_colors(const std::vector<int>& colors) {
  std::vector<int> norm = normalize_colors(colors);
  Partition p;
  p.class_of = norm;
  int c = norm.empty() ? 0 : *std::max_element(norm.begin(), norm.end()) + 1;
  p.classes.assign(c, {});
  for (int v = 0; v < static_cast<int>(norm.size()); ++v) p.classes[norm[v]].push_back(v);
  return p;
}

Partition Partition::unit(int n) { return from_colors(std::vector<int>(n, 0)); }

void Partition::validate() const {
  std::vector<char> seen(class_of.size(), 0);
  for (int c = 0; c < class_count(); ++c) {
    if (classes[c].empty()) throw GraphError("empty class " + std::to_string(c));
    for (Vertex v : classes[c]) {
      if (v < 0 || v >= vertex_count()) throw GraphError("class member out of range");
      if (seen[v]) throw GraphError("vertex in two classes");
      seen[v] = 1;
      if (class_of[v] != c) throw GraphError("class_of disagrees with classes");
    }
  }
  for (char s : seen)
    if (!s) throw GraphError("vertex not covered by partition");
}

Partition Partition::canonical() const {
  std::vector<int> order(class_count());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> minv(class_count());
  for (int c = 0; c < class_count(); ++c) minv[c] = *std::min_element(classes[c].begin(), classes[c].end());
  std::sort(order.begin(), order.end(), [&](int a, int b) { return minv[a] < minv[b]; });
  Partition out;
  out.class_of.resize(class_of.size());
  out.classes.resize(classes.size());
  for (int i = 0; i < class_count(); ++i) {
    out.classes[i] = classes[order[i]];
    std::sort(out.classes[i].begin(), out.classes[i].end());
    for (Vertex v : out.classes[i]) out.class_of[v] = i;
  }
  return out;
}

bool Partition::same_classes(const Partition& other) const {
  if (vertex_count() != other.vertex_count() || class_count() != other.class_count()) return false;
  return canonical().class_of == other.canonical().class_of;
}

bool Partition::refines(const Partition& coarser) const {
  if (vertex_count() != coarser.vertex_count()) return false;
  for (const auto& cls : classes)
    for (Vertex v : cls)
      if (coarser.class_of[v] != coarser.class_of[cls.front()]) return false;
  return true;
}

Partition initial_partition(const ColoredGraph& g) { return Partition::from_colors(g.initial_colors()); }

bool is_equitable(const ColoredGraph& g, const Partition& p) {
  // Every member's count vector over classes must match the first member of its class.
  std::vector<int> cnt(p.class_count(), 0), ref(p.class_count(), 0);
  std::vector<int> touched;
  for (const auto& cls : p.classes) {
    auto count_into = [&](Vertex v, std::vector<int>& out) {
      auto [b, e] = g.neighbors(v);
      for (auto it = b; it != e; ++it) {
        int c = p.class_of[*it];
        if (out[c] == 0) touched.push_back(c);
        ++out[c];
      }
    };
    Vertex first = cls.front();
    touched.clear();
    count_into(first, ref);
    std::vector<int> ref_touched = touched;
    for (std::size_t i = 1; i < cls.size(); ++i) {
      touched.clear();
      count_into(cls[i], cnt);
      bool ok = touched.size() == ref_touched.size();
      for (int c : touched)
        if (cnt[c] != ref[c]) ok = false;
      for (int c : touched) cnt[c] = 0;
      if (!ok) {
        for (int c : ref_touched) ref[c] = 0;
        return false;
      }
    }
    for (int c : ref_touched) ref[c] = 0;
  }
  return true;
}

Partition naive_stable(const ColoredGraph& g, const Partition& p) {
  const int n = g.vertex_count();
  std::vector<int> color = p.class_of;
  int count = p.class_count();
  while (true) {
    // Signature: own class followed by the sorted neighbor classes.
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      auto [b, e] = g.neighbors(v);
      sig[v].reserve(1 + (e - b));
      sig[v].push_back(color[v]);
      for (auto it = b; it != e; ++it) sig[v].push_back(color[*it]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = ids.emplace(sig[v], static_cast<int>(ids.size())).first->second;
    int next_count = static_cast<int>(ids.size());
    color = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return Partition::from_colors(color).canonical();
}

std::int64_t edges_between(const ColoredGraph& g, const std::vector<char>& in_a, const std::vector<char>& in_b) {
  std::int64_t total = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto [b, e] = g.neighbors(u);
    for (auto it = b; it != e; ++it) {
      int v = *it;
      if (u > v) continue;
      if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++total;
    }
  }
  return total;
}

ColoredGraph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::int64_t m = -1;
  std::vector<int> colors;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    auto fail = [&](const std::string& what) {
      throw GraphError("line " + std::to_string(lineno) + ": " + what);
    };
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail("duplicate header");
      if (!(ss >> kind >> n >> m) || kind != "cr" || n < 0 || m < 0) fail("bad header");
      colors.assign(n, 0);
    } else if (tag == "c") {
      int v, c;
      if (n < 0) fail("color before header");
      if (!(ss >> v >> c) || v < 0 || v >= n || c < 0) fail("bad color line");
      colors[v] = c;
    } else if (tag == "e") {
      int u, v;
      if (n < 0) fail("edge before header");
      if (!(ss >> u >> v)) fail("bad edge line");
      edges.emplace_back(u, v);
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw GraphError("missing header");
  if (static_cast<std::int64_t>(edges.size()) != m) throw GraphError("edge count does not match header");
  return new_graph(n, edges, colors);
}

void write_graph(std::ostream& out, const ColoredGraph& g) {
  out << "p cr " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.color(v) != 0) out << "c " << v << ' ' << g.color(v) << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

ColoredGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string format_graph(const ColoredGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace crlab
