#include "crlab/refine.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace crlab {

namespace {

// Scratch space for neighbor counting; cnt is all zero between uses.
struct Counter {
  std::vector<int> cnt;
  std::vector<Vertex> touched;
  std::vector<std::vector<Vertex>> bucket;
  std::vector<int> touched_classes;

  explicit Counter(int n) : cnt(n, 0) {}

  void count_from(const ColoredGraph& g, const std::vector<Vertex>& sources) {
    for (Vertex c : sources) {
      auto [b, e] = g.neighbors(c);
      for (auto it = b; it != e; ++it)
        if (cnt[*it]++ == 0) touched.push_back(*it);
    }
  }

  void group_by_class(const Partition& p) {
    if (bucket.size() < p.classes.size()) bucket.resize(p.classes.size() * 2);
    for (Vertex w : touched) {
      int c = p.class_of[w];
      if (bucket[c].empty()) touched_classes.push_back(c);
      bucket[c].push_back(w);
    }
    std::sort(touched_classes.begin(), touched_classes.end());
  }

  void clear() {
    for (Vertex w : touched) cnt[w] = 0;
    touched.clear();
    for (int c : touched_classes) bucket[c].clear();
    touched_classes.clear();
  }
};

// Splits class x according to cnt. Members of x absent from `hit` have count 0.
// Fragments are ordered by count ascending; the largest keeps id x.
void split_by_counts(Partition& p, int x, const std::vector<int>& cnt, std::vector<Vertex>& hit,
                     std::vector<int>& frag_ids, std::vector<int>& frag_sizes, int& retained_index) {
  frag_ids.clear();
  frag_sizes.clear();
  retained_index = 0;
  const auto& members = p.classes[x];
  bool uniform = hit.size() == members.size();
  if (uniform)
    for (Vertex v : hit)
      if (cnt[v] != cnt[hit.front()]) {
        uniform = false;
        break;
      }
  if (uniform) {
    frag_ids.push_back(x);
    frag_sizes.push_back(static_cast<int>(members.size()));
    return;
  }
  std::sort(hit.begin(), hit.end(), [&](Vertex a, Vertex b) { return cnt[a] != cnt[b] ? cnt[a] < cnt[b] : a < b; });
  std::vector<std::vector<Vertex>> groups;
  if (hit.size() < members.size()) {
    groups.emplace_back();
    for (Vertex v : members)
      if (cnt[v] == 0) groups.back().push_back(v);
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (i == 0 || cnt[hit[i]] != cnt[hit[i - 1]]) groups.emplace_back();
    groups.back().push_back(hit[i]);
  }
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const auto& a = groups[i];
    const auto& best = groups[retained_index];
    if (a.size() > best.size() || (a.size() == best.size() && a.front() < best.front()))
      retained_index = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    int id;
    if (static_cast<int>(i) == retained_index) {
      id = x;
    } else {
      id = p.class_count();
      p.classes.emplace_back();
    }
    frag_ids.push_back(id);
    frag_sizes.push_back(static_cast<int>(groups[i].size()));
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    int id = frag_ids[i];
    for (Vertex v : groups[i]) p.class_of[v] = id;
    p.classes[id] = std::move(groups[i]);
  }
}

void check_class(const Partition& p, int c) {
  if (c < 0 || c >= p.class_count()) throw std::invalid_argument("dead or unknown class id " + std::to_string(c));
}

}  // namespace

std::int64_t default_step_budget(const ColoredGraph& g) {
  const std::int64_t n = g.vertex_count();
  int lg = 0;
  while ((std::int64_t{1} << lg) < n) ++lg;
  return 10 * (n + g.edge_count()) * (lg + 2);
}

SplitResult split_class(const ColoredGraph& g, Partition& p, int target, const std::vector<int>& splitter_union) {
  check_class(p, target);
  if (splitter_union.empty()) throw std::invalid_argument("empty splitter union");
  Move mv{splitter_union, {target}};
  SplitStep st = apply_move(g, p, mv);
  return {st.fragments, st.fragment_sizes, st.edge_cost};
}

SplitStep apply_move(const ColoredGraph& g, Partition& p, const Move& move) {
  std::vector<int> splitter = move.splitter, target = move.target;
  std::sort(splitter.begin(), splitter.end());
  splitter.erase(std::unique(splitter.begin(), splitter.end()), splitter.end());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  if (splitter.empty() || target.empty()) throw std::invalid_argument("empty class union in move");
  for (int c : splitter) check_class(p, c);
  for (int c : target) check_class(p, c);

  std::vector<char> in_c(p.class_count(), 0), in_x(p.class_count(), 0);
  for (int c : splitter) in_c[c] = 1;
  for (int c : target) in_x[c] = 1;

  Counter ctr(p.vertex_count());
  std::int64_t pairs = 0, both = 0;
  for (int c : splitter)
    for (Vertex u : p.classes[c]) {
      auto [b, e] = g.neighbors(u);
      for (auto it = b; it != e; ++it) {
        Vertex w = *it;
        if (!in_x[p.class_of[w]]) continue;
        ++pairs;
        if (in_x[c] && in_c[p.class_of[w]]) ++both;
        if (ctr.cnt[w]++ == 0) ctr.touched.push_back(w);
      }
    }
  SplitStep step;
  step.splitter = splitter;
  step.target = target;
  step.edge_cost = pairs - both / 2;
  ctr.group_by_class(p);
  std::vector<int> ids, sizes;
  int keep;
  for (int x : target) {
    std::vector<Vertex> hit = x < static_cast<int>(ctr.bucket.size()) ? ctr.bucket[x] : std::vector<Vertex>{};
    split_by_counts(p, x, ctr.cnt, hit, ids, sizes, keep);
    step.fragments.insert(step.fragments.end(), ids.begin(), ids.end());
    step.fragment_sizes.insert(step.fragment_sizes.end(), sizes.begin(), sizes.end());
  }
  ctr.clear();
  return step;
}

RefinementReport refine_worklist(const ColoredGraph& g, const Partition& initial, const PolicySpec& policy,
                                 const RefineOptions& opts) {
  RefinementReport rep;
  rep.strategy = policy.name();
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.from_worklist = true;
  rep.queue_policy = policy.kind == PolicyKind::Queue;
  Partition p = initial;
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  const std::int64_t budget = opts.step_budget > 0 ? opts.step_budget : default_step_budget(g);

  Worklist wl(policy, [&p](int c) { return p.size(c); });
  for (int c = 0; c < p.class_count(); ++c) wl.push_initial(c, opts.initial_depth);

  Counter ctr(p.vertex_count());
  std::vector<int> ids, sizes;
  std::vector<Fragment> frags;
  int keep = 0;
  while (!wl.empty()) {
    WorkItem item = wl.extract();
    const int csize = p.size(item.cls);
    if (opts.record_trace) rep.extractions.push_back({item.cls, item.depth, csize});
    const std::vector<Vertex> splitter = p.classes[item.cls];
    ctr.count_from(g, splitter);
    ctr.group_by_class(p);
    // The splitter's own class goes last so earlier scans see it unsplit.
    std::vector<int> targets = ctr.touched_classes;
    auto self = std::find(targets.begin(), targets.end(), item.cls);
    if (self != targets.end()) std::rotate(self, self + 1, targets.end());
    for (int x : targets) {
      std::int64_t cost = 0;
      for (Vertex v : ctr.bucket[x]) cost += ctr.cnt[v];
      if (x == item.cls) cost /= 2;
      std::vector<Vertex> hit = ctr.bucket[x];
      split_by_counts(p, x, ctr.cnt, hit, ids, sizes, keep);
      ++rep.scans;
      rep.total_cost += cost;
      if (ids.size() > 1) {
        ++rep.productive_splits;
        frags.clear();
        for (std::size_t i = 0; i < ids.size(); ++i)
          if (static_cast<int>(i) != keep) frags.push_back({ids[i], sizes[i]});
        if (wl.contains(x)) wl.resized(x);
        wl.insert_fragments(frags, item.depth + 1);
      }
      if (opts.record_trace || opts.observer) {
        SplitStep st;
        st.splitter = {item.cls};
        st.target = {x};
        st.fragments = ids;
        st.fragment_sizes = sizes;
        st.edge_cost = cost;
        st.round = item.depth;
        if (opts.observer) opts.observer(st, p);
        if (opts.record_trace) {
          rep.rounds.push_back(st.round);
          rep.steps.push_back(std::move(st));
        }
      }
      if (rep.scans > budget) {
        ctr.clear();
        rep.final_partition = p;
        throw RefinementError("step budget exceeded by policy " + policy.name(), std::move(rep));
      }
    }
    ctr.clear();
    wl.end_extraction();
    if (opts.on_extraction_end) opts.on_extraction_end(p);
  }
  rep.final_partition = std::move(p);
  return rep;
}

std::optional<Move> FullRefinementStrategy::next(const ColoredGraph&, const Partition& p,
                                                 const std::vector<SplitStep>& history) {
  std::vector<int> all(p.class_count());
  for (int c = 0; c < p.class_count(); ++c) all[c] = c;
  if (!sweeping_ && !history.empty() && !history.back().productive()) sweeping_ = true;
  if (!sweeping_) return Move{all, all};
  if (cursor_ >= p.class_count()) cursor_ = 0;
  return Move{{cursor_++}, all};
}

RefinementReport refine_strategy(const ColoredGraph& g, const Partition& initial, Strategy& strategy,
                                 const StrategyOptions& opts) {
  RefinementReport rep;
  rep.strategy = strategy.name();
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  Partition p = initial;
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  const std::int64_t budget = opts.step_budget > 0 ? opts.step_budget : default_step_budget(g);
  std::vector<SplitStep> history;
  bool changed = true;
  bool equitable = false;
  while (true) {
    if (opts.check == EquitableCheck::EveryChange && changed) {
      equitable = is_equitable(g, p);
      if (equitable) break;
    }
    std::optional<Move> mv = strategy.next(g, p, history);
    if (!mv) {
      if (opts.check == EquitableCheck::OnTerminate) equitable = is_equitable(g, p);
      if (equitable) break;
      rep.final_partition = p;
      rep.steps = std::move(history);
      throw InvalidStrategy("strategy " + strategy.name() + " terminated on a non-equitable partition",
                            std::move(rep));
    }
    SplitStep st;
    try {
      st = apply_move(g, p, *mv);
    } catch (const std::invalid_argument& e) {
      rep.final_partition = p;
      rep.steps = std::move(history);
      throw InvalidStrategy("strategy " + strategy.name() + ": " + e.what(), std::move(rep));
    }
    st.round = static_cast<int>(rep.scans);
    ++rep.scans;
    rep.total_cost += st.edge_cost;
    changed = st.productive();
    if (changed) ++rep.productive_splits;
    if (opts.observer) opts.observer(st, p);
    history.push_back(std::move(st));
    if (rep.scans > budget) {
      rep.final_partition = p;
      rep.steps = std::move(history);
      throw InvalidStrategy("step budget exceeded by strategy " + strategy.name(), std::move(rep));
    }
  }
  if (opts.record_trace) {
    for (const auto& st : history) rep.rounds.push_back(st.round);
    rep.steps = std::move(history);
  }
  rep.final_partition = std::move(p);
  return rep;
}

std::vector<std::vector<int>> queue_rounds(const RefinementReport& report) {
  if (!report.from_worklist || !report.queue_policy)
    throw std::invalid_argument("queue_rounds needs a report from a queue worklist run");
  if (report.extractions.empty() && report.scans > 0)
    throw std::invalid_argument("queue_rounds needs a traced run");
  std::vector<std::vector<int>> rounds;
  for (const auto& e : report.extractions) {
    if (e.depth >= static_cast<int>(rounds.size())) rounds.resize(e.depth + 1);
    rounds[e.depth].push_back(e.cls);
  }
  if (rounds.empty()) rounds.emplace_back();
  return rounds;
}

void write_report(std::ostream& out, const RefinementReport& r) {
  auto list = [&out](const std::vector<int>& v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ']';
  };
  out << "strategy " << r.strategy << '\n';
  out << "n " << r.n << '\n';
  out << "m " << r.m << '\n';
  out << "total_cost " << r.total_cost << '\n';
  out << "steps " << r.steps.size() << '\n';
  for (const auto& s : r.steps) {
    out << "step splitter=";
    list(s.splitter);
    out << " target=";
    list(s.target);
    out << " sizes=";
    list(s.fragment_sizes);
    out << " cost=" << s.edge_cost << " round=" << s.round << '\n';
  }
  out << "classes " << r.final_partition.class_count() << '\n';
}

std::string format_report(const RefinementReport& r) {
  std::ostringstream out;
  write_report(out, r);
  return out.str();
}

}  // namespace crlab
