#include "crlab/setcover.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace crlab {

int SetCoverInstance::size() const {
  int n = static_cast<int>(universe.size());
  for (const auto& s : subsets) n += static_cast<int>(s.size());
  return n;
}

void SetCoverInstance::validate() const {
  if (universe.empty()) throw std::invalid_argument("empty universe");
  std::vector<char> covered(universe.size(), 0);
  for (const auto& s : subsets) {
    if (s.empty()) throw std::invalid_argument("empty subset");
    for (int e : s) {
      if (e < 0 || e >= static_cast<int>(universe.size())) throw std::invalid_argument("subset element out of range");
      covered[e] = 1;
    }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw std::invalid_argument("subsets do not cover the universe");
}

SetCoverInstance read_instance(std::istream& in) {
  SetCoverInstance inst;
  std::map<std::string, int> index;
  std::vector<std::vector<std::string>> raw;
  bool have_universe = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> items;
    for (std::string t; ls >> t;) items.push_back(t);
    if (tag == "u") {
      if (have_universe) throw std::invalid_argument("line " + std::to_string(lineno) + ": second universe line");
      have_universe = true;
      for (const auto& t : items) {
        if (index.count(t)) throw std::invalid_argument("duplicate universe element '" + t + "'");
        index[t] = static_cast<int>(inst.universe.size());
        inst.universe.push_back(t);
      }
    } else if (tag == "s") {
      raw.push_back(items);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (!have_universe) throw std::invalid_argument("missing universe line");
  for (const auto& items : raw) {
    std::set<int> s;
    for (const auto& t : items) {
      auto it = index.find(t);
      if (it == index.end()) throw std::invalid_argument("element '" + t + "' not in universe");
      s.insert(it->second);
    }
    inst.subsets.emplace_back(s.begin(), s.end());
  }
  inst.validate();
  return inst;
}

SetCoverInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

Reduction reduce_setcover(const SetCoverInstance& inst, int dummy_count) {
  inst.validate();
  if (dummy_count < 0) dummy_count = inst.size() * inst.size();
  if (dummy_count < 1) throw std::invalid_argument("need at least one dummy element");
  Reduction r;
  r.dummy_count = dummy_count;
  const int s = static_cast<int>(inst.universe.size());
  const int x = s + dummy_count;
  for (int i = 0; i < s; ++i) r.elements.push_back(i);
  for (int i = s; i < x; ++i) r.dummies.push_back(i);
  std::vector<Edge> edges;
  std::vector<int> colors(x, 0);
  for (std::size_t j = 0; j < inst.subsets.size(); ++j) {
    const Vertex u = x + static_cast<int>(j);
    r.sets.push_back(u);
    colors.push_back(static_cast<int>(j) + 1);
    std::vector<char> in(s, 0);
    for (int e : inst.subsets[j]) in[e] = 1;
    for (Vertex v = 0; v < x; ++v)
      if (v >= s || !in[v]) edges.emplace_back(v, u);
  }
  r.graph = new_graph(static_cast<int>(colors.size()), edges, colors);
  return r;
}

namespace {

// Tracks color ids across splits on top of the engine's class ids.
class Naming {
 public:
  explicit Naming(const Partition& p) : pub_of_(p.class_count()) {
    for (int c = 0; c < p.class_count(); ++c) {
      pub_of_[c] = c;
      internal_of_.push_back(c);
    }
  }

  int internal(int pub) const {
    if (pub < 0 || pub >= static_cast<int>(internal_of_.size()) || internal_of_[pub] < 0)
      throw std::invalid_argument("color " + std::to_string(pub) + " is not live");
    return internal_of_[pub];
  }
  int pub(int internal) const { return pub_of_[internal]; }

  // Applies renaming after a step whose targets are given by internal id.
  void after_split(const std::vector<int>& old_class_of, const Partition& p, const std::vector<int>& targets) {
    const int before = static_cast<int>(pub_of_.size());
    std::map<int, std::vector<int>> frags;
    for (int f = before; f < p.class_count(); ++f) frags[old_class_of[p.classes[f].front()]].push_back(f);
    pub_of_.resize(p.class_count(), -1);
    for (int t : targets) {
      auto it = frags.find(t);
      if (it == frags.end()) continue;
      internal_of_[pub_of_[t]] = -1;
      fresh(t);
      for (int f : it->second) fresh(f);
    }
  }

 private:
  void fresh(int internal) {
    pub_of_[internal] = static_cast<int>(internal_of_.size());
    internal_of_.push_back(internal);
  }
  std::vector<int> pub_of_;
  std::vector<int> internal_of_;
};

Move to_internal(const Naming& names, const SequenceStep& st) {
  Move m;
  for (int c : st.splitter) m.splitter.push_back(names.internal(c));
  for (int c : st.target) m.target.push_back(names.internal(c));
  return m;
}

}  // namespace

SequenceEval eval_sequence(const ColoredGraph& g, const Partition& initial, const WorklistSequence& seq) {
  SequenceEval ev;
  RefinementReport& rep = ev.report;
  rep.strategy = "sequence";
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  Partition p = initial;
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  Naming names(p);
  for (const SequenceStep& st : seq) {
    Move m = to_internal(names, st);
    std::vector<int> old = p.class_of;
    SplitStep step = apply_move(g, p, m);
    names.after_split(old, p, m.target);
    step.round = static_cast<int>(rep.scans++);
    rep.total_cost += step.edge_cost;
    if (step.productive()) ++rep.productive_splits;
    rep.rounds.push_back(step.round);
    rep.steps.push_back(std::move(step));
  }
  ev.complete = is_equitable(g, p);
  for (int c = 0; c < p.class_count(); ++c) ev.live.push_back(names.pub(c));
  rep.final_partition = std::move(p);
  return ev;
}

OptimalSequence brute_force_optimal_sequence(const ColoredGraph& g, const Partition& initial, int depth_bound,
                                             std::int64_t state_budget) {
  struct Node {
    Partition part;  // canonical
    std::int64_t cost;
    int depth;
    int parent;
    Move move;  // canonical ids of the parent
  };
  std::vector<Node> nodes;
  std::map<std::vector<int>, int> seen;
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;

  Partition start = initial.canonical();
  nodes.push_back({start, 0, 0, -1, {}});
  seen[start.class_of] = 0;
  pq.push({0, 0});
  int goal = -1;
  std::vector<char> done;
  while (!pq.empty()) {
    auto [cost, id] = pq.top();
    pq.pop();
    if (cost != nodes[id].cost) continue;
    if (static_cast<int>(done.size()) <= id) done.resize(id + 1, 0);
    if (done[id]) continue;
    done[id] = 1;
    if (is_equitable(g, nodes[id].part)) {
      goal = id;
      break;
    }
    if (nodes[id].depth >= depth_bound) continue;
    const Partition cur = nodes[id].part;
    const int c = cur.class_count();
    std::vector<std::vector<int>> splitters;
    for (int s = 0; s < c; ++s) splitters.push_back({s});
    if (c > 1) {
      splitters.emplace_back(c);
      for (int s = 0; s < c; ++s) splitters.back()[s] = s;
    }
    for (const auto& sp : splitters) {
      for (int t = 0; t < c; ++t) {
        Partition next = cur;
        Move mv{sp, {t}};
        SplitStep st = apply_move(g, next, mv);
        if (!st.productive()) continue;
        Partition canon = next.canonical();
        const std::int64_t nc = cost + st.edge_cost;
        auto it = seen.find(canon.class_of);
        if (it == seen.end()) {
          if (static_cast<std::int64_t>(nodes.size()) >= state_budget)
            throw std::runtime_error("brute-force state budget exceeded");
          seen.emplace(canon.class_of, static_cast<int>(nodes.size()));
          nodes.push_back({std::move(canon), nc, nodes[id].depth + 1, id, mv});
          pq.push({nc, static_cast<int>(nodes.size()) - 1});
        } else if (nc < nodes[it->second].cost && !(it->second < static_cast<int>(done.size()) && done[it->second])) {
          Node& n = nodes[it->second];
          n.cost = nc;
          n.depth = nodes[id].depth + 1;
          n.parent = id;
          n.move = mv;
          pq.push({nc, it->second});
        }
      }
    }
  }
  if (goal < 0) throw std::runtime_error("no complete sequence within the depth bound");

  std::vector<int> path;
  for (int id = goal; nodes[id].parent >= 0; id = nodes[id].parent) path.push_back(id);
  std::reverse(path.begin(), path.end());

  // Replay to express moves in color ids.
  OptimalSequence out;
  out.cost = nodes[goal].cost;
  out.states = static_cast<std::int64_t>(nodes.size());
  Partition p = initial;
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  Naming names(p);
  for (int id : path) {
    const Partition& par = nodes[nodes[id].parent].part;
    auto internal_of = [&](int canon) { return p.class_of[par.classes[canon].front()]; };
    Move m;
    SequenceStep st;
    for (int c : nodes[id].move.splitter) {
      m.splitter.push_back(internal_of(c));
      st.splitter.push_back(names.pub(m.splitter.back()));
    }
    for (int c : nodes[id].move.target) {
      m.target.push_back(internal_of(c));
      st.target.push_back(names.pub(m.target.back()));
    }
    std::vector<int> old = p.class_of;
    apply_move(g, p, m);
    names.after_split(old, p, m.target);
    out.sequence.push_back(std::move(st));
  }
  return out;
}

int brute_force_setcover(const SetCoverInstance& inst) {
  inst.validate();
  const int u = static_cast<int>(inst.subsets.size());
  if (u > 20) throw std::invalid_argument("brute-force set cover limited to 20 subsets");
  const int s = static_cast<int>(inst.universe.size());
  std::vector<std::uint32_t> mask(u, 0);
  for (int j = 0; j < u; ++j)
    for (int e : inst.subsets[j]) mask[j] |= 1u << e;
  const std::uint64_t full = (std::uint64_t{1} << s) - 1;
  int best = u;
  for (std::uint32_t pick = 1; pick < (1u << u); ++pick) {
    int cnt = __builtin_popcount(pick);
    if (cnt >= best) continue;
    std::uint64_t cov = 0;
    for (int j = 0; j < u; ++j)
      if (pick >> j & 1u) cov |= mask[j];
    if (cov == full) best = cnt;
  }
  return best;
}

std::vector<int> greedy_setcover(const SetCoverInstance& inst) {
  inst.validate();
  std::vector<char> covered(inst.universe.size(), 0);
  std::size_t left = inst.universe.size();
  std::vector<int> chosen;
  while (left > 0) {
    int best = -1, gain = 0;
    for (int j = 0; j < static_cast<int>(inst.subsets.size()); ++j) {
      int gj = 0;
      for (int e : inst.subsets[j]) gj += !covered[e];
      if (gj > gain) best = j, gain = gj;
    }
    chosen.push_back(best);
    for (int e : inst.subsets[best])
      if (!covered[e]) covered[e] = 1, --left;
  }
  return chosen;
}

std::vector<SetCoverInstance> tiny_instances(int s, int u) {
  std::vector<SetCoverInstance> out;
  const int full = (1 << s) - 1;
  std::vector<int> chosen;
  // Strictly increasing subset masks give distinct subsets once each.
  auto rec = [&](auto&& self, int next) -> void {
    if (!chosen.empty()) {
      int cov = 0;
      for (int m : chosen) cov |= m;
      if (cov == full) {
        SetCoverInstance inst;
        for (int e = 0; e < s; ++e) inst.universe.push_back(std::string(1, static_cast<char>('a' + e)));
        for (int m : chosen) {
          std::vector<int> sub;
          for (int e = 0; e < s; ++e)
            if (m >> e & 1) sub.push_back(e);
          inst.subsets.push_back(sub);
        }
        out.push_back(std::move(inst));
      }
    }
    if (static_cast<int>(chosen.size()) == u) return;
    for (int m = next; m <= full; ++m) {
      chosen.push_back(m);
      self(self, m + 1);
      chosen.pop_back();
    }
  };
  if (s >= 1) rec(rec, 1);
  return out;
}

}  // namespace crlab
