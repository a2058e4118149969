#include "crlab/online.hpp"

#include <algorithm>
#include <stdexcept>

namespace crlab {

PartialQuotientGraph partial_quotient(const ColoredGraph& g, const Partition& p) {
  Partition cp = p.canonical();
  const int c = cp.class_count();
  if (c > PartialQuotientGraph::kMaxClasses)
    throw std::invalid_argument("partial quotient graph limited to " +
                                std::to_string(PartialQuotientGraph::kMaxClasses) + " classes, got " +
                                std::to_string(c));
  PartialQuotientGraph q;
  q.classes_ = c;
  const std::uint32_t nodes = 1u << c;
  q.sizes_.resize(c);
  for (int i = 0; i < c; ++i) q.sizes_[i] = static_cast<int>(cp.classes[i].size());
  q.table_.assign(static_cast<std::size_t>(c) * nodes, 0);

  std::vector<int> per_class(c), by_mask(nodes);
  for (int i = 0; i < c; ++i) {
    int* row = &q.table_[static_cast<std::size_t>(i) * nodes];
    bool first = true;
    for (Vertex v : cp.classes[i]) {
      std::fill(per_class.begin(), per_class.end(), 0);
      auto [b, e] = g.neighbors(v);
      for (auto it = b; it != e; ++it) ++per_class[cp.class_of[*it]];
      by_mask[0] = 0;
      for (std::uint32_t s = 1; s < nodes; ++s) {
        std::uint32_t low = s & (~s + 1);
        by_mask[s] = by_mask[s ^ low] + per_class[__builtin_ctz(low)];
      }
      for (std::uint32_t s = 0; s < nodes; ++s) {
        if (first) row[s] = by_mask[s];
        else if (row[s] != by_mask[s]) row[s] = -1;
      }
      first = false;
    }
  }
  return q;
}

std::int64_t PartialQuotientGraph::node_label(std::uint32_t mask) const {
  if (mask >= node_count()) throw std::out_of_range("color set out of range");
  std::int64_t s = 0;
  for (int i = 0; i < classes_; ++i)
    if (mask >> i & 1u) s += sizes_[i];
  return s;
}

std::optional<int> PartialQuotientGraph::edge(std::uint32_t from, std::uint32_t to) const {
  if (from >= node_count() || to >= node_count()) throw std::out_of_range("color set out of range");
  // The empty union is vacuously uniform; label it 0.
  std::optional<int> label;
  if (from == 0) return 0;
  const std::size_t nodes = node_count();
  for (int i = 0; i < classes_; ++i) {
    if (!(from >> i & 1u)) continue;
    int v = table_[i * nodes + to];
    if (v < 0) return std::nullopt;
    if (label && *label != v) return std::nullopt;
    label = v;
  }
  return label;
}

namespace {

std::vector<std::vector<Vertex>> local_adjacency(const Gadget& gd) {
  std::vector<std::vector<Vertex>> adj(gd.vertex_count);
  for (auto [u, v] : gd.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool pair_and_neighbors_uniform(const Gadget& gd, const Partition& p) {
  const VertexPair pr = gd.in_pairs.at(gd.correct);
  if (p.class_of[pr.first] != p.class_of[pr.second]) return false;
  auto adj = local_adjacency(gd);
  std::vector<Vertex> nb = adj[pr.first];
  nb.insert(nb.end(), adj[pr.second].begin(), adj[pr.second].end());
  for (Vertex v : nb)
    if (p.class_of[v] != p.class_of[nb.front()]) return false;
  return true;
}

}  // namespace

bool concur(const Gadget& a, const Partition& pa, const Gadget& b, const Partition& pb) {
  if (a.kind != GadgetKind::Concealer || b.kind != GadgetKind::Concealer)
    throw std::invalid_argument("concur compares concealer gadgets");
  if (a.level != b.level) throw std::invalid_argument("concur needs gadgets of the same level");
  if (pa.class_of.size() != static_cast<std::size_t>(a.vertex_count) ||
      pb.class_of.size() != static_cast<std::size_t>(b.vertex_count))
    throw std::invalid_argument("partition does not match gadget");
  if (!pa.same_classes(pb)) return false;
  return pair_and_neighbors_uniform(a, pa) && pair_and_neighbors_uniform(b, pb);
}

// ---------------------------------------------------------------- fast oracle

FamilyDescriptor require_concealer(const FamilyDescriptor& d) {
  if (d.kind != FamilyKind::Concealer) throw std::invalid_argument("descriptor is not a concealer graph");
  if (d.k < 2 || static_cast<int>(d.correct_indices.size()) != d.k - 1 ||
      static_cast<int>(d.levels.size()) != d.k - 1 || d.start.size() != 3)
    throw std::invalid_argument("malformed concealer descriptor");
  return d;
}

FastOracleStrategy::FastOracleStrategy(FamilyDescriptor d) : d_(require_concealer(d)) {
  level_cost_.assign(d_.k - 1, 0);
}

std::unique_ptr<Strategy> fast_oracle_strategy(const FamilyDescriptor& d) {
  return std::make_unique<FastOracleStrategy>(d);
}

namespace {

std::vector<int> classes_of(const Partition& p, const std::vector<Vertex>& vs) {
  std::vector<int> out;
  for (Vertex v : vs) out.push_back(p.class_of[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<Move> FastOracleStrategy::gadget_step(const ColoredGraph& g, const Partition& p,
                                                    const std::vector<SplitStep>& history) {
  const PlacedGadget& gd = d_.levels[level_ - 1];
  if (!history.empty() && history.back().productive())
    local_.insert(local_.end(), history.back().fragments.begin(), history.back().fragments.end());
  if (p.class_of[gd.out_pair.first] != p.class_of[gd.out_pair.second]) {
    phase_ = Phase::Activate;
    return std::nullopt;
  }
  while (!local_.empty()) {
    int c = local_.back();
    local_.pop_back();
    bool inside = true;
    for (Vertex v : p.classes[c])
      if (!region_[v]) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::vector<Vertex> nb;
    for (Vertex v : p.classes[c]) {
      auto [b, e] = g.neighbors(v);
      for (auto it = b; it != e; ++it)
        if (region_[*it]) nb.push_back(*it);
    }
    if (nb.empty()) continue;
    return Move{{c}, classes_of(p, nb)};
  }
  throw std::logic_error("gadget propagation stalled at level " + std::to_string(level_));
}

std::optional<Move> FastOracleStrategy::finish_step(const Partition& p, const std::vector<SplitStep>&) {
  in_work_.resize(p.class_count(), 0);
  for (int c = last_count_; c < p.class_count(); ++c)
    if (!in_work_[c]) {
      in_work_[c] = 1;
      work_.push_back(c);
    }
  return std::nullopt;
}

std::optional<Move> FastOracleStrategy::next(const ColoredGraph& g, const Partition& p,
                                             const std::vector<SplitStep>& history) {
  if (history.size() > seen_history_) {
    if (pending_level_ > 0) level_cost_[pending_level_ - 1] += history.back().edge_cost;
    seen_history_ = history.size();
  }
  pending_level_ = 0;
  const int k = d_.k;
  auto all_classes = [&p] {
    std::vector<int> all(p.class_count());
    for (int c = 0; c < p.class_count(); ++c) all[c] = c;
    return all;
  };
  auto issue = [&](Move m) {
    last_count_ = p.class_count();
    return std::optional<Move>(std::move(m));
  };

  while (true) {
    switch (phase_) {
      case Phase::Degree:
        phase_ = Phase::Start;
        return issue(Move{all_classes(), all_classes()});
      case Phase::Start:
        phase_ = k > 1 ? Phase::Propagate : Phase::Finish;
        sub_ = 0;
        return issue(Move{{p.class_of[d_.start[1]]}, classes_of(p, d_.x_all())});
      case Phase::Propagate: {
        const int c = d_.correct_indices[level_ - 1];
        const int i0 = block_indices(k, level_, 2 * c).front();
        const PlacedGadget& gd = d_.levels[level_ - 1];
        Move m;
        switch (sub_) {
          case 0: m = Move{{p.class_of[d_.x_by_index[i0][0]]}, {p.class_of[d_.xx[0][i0]]}}; break;
          case 1: m = Move{{p.class_of[d_.xx[0][i0]]}, {p.class_of[d_.yy[0][i0]]}}; break;
          case 2: m = Move{{p.class_of[d_.yy[0][i0]]}, {p.class_of[d_.y[i0]]}}; break;
          default: m = Move{{p.class_of[d_.y[i0]]}, {p.class_of[gd.in_pairs[c].first]}}; break;
        }
        pending_level_ = level_;
        if (++sub_ == 4) {
          phase_ = Phase::Gadget;
          region_.assign(g.vertex_count(), 0);
          for (int v = gd.first; v < gd.first + gd.size; ++v) region_[v] = 1;
          local_.clear();
        }
        return issue(std::move(m));
      }
      case Phase::Gadget: {
        if (auto m = gadget_step(g, p, history)) return issue(std::move(*m));
        break;  // moved on to activation
      }
      case Phase::Activate: {
        const PlacedGadget& gd = d_.levels[level_ - 1];
        ++level_;
        sub_ = 0;
        phase_ = level_ < k ? Phase::Propagate : Phase::Finish;
        if (phase_ == Phase::Finish) {
          // X singletons first, then everything else.
          in_work_.assign(g.vertex_count() + 1, 0);
          work_.clear();
          work_head_ = 0;
          for (Vertex x : d_.x_all()) {
            int c = p.class_of[x];
            if (!in_work_[c]) in_work_[c] = 1, work_.push_back(c);
          }
          for (int c = 0; c < p.class_count(); ++c)
            if (!in_work_[c]) in_work_[c] = 1, work_.push_back(c);
        }
        last_count_ = p.class_count();
        Move m{{p.class_of[gd.out_pair.first]}, classes_of(p, d_.x_all())};
        return issue(std::move(m));
      }
      case Phase::Finish: {
        finish_step(p, history);
        while (work_head_ < work_.size()) {
          int c = work_[work_head_++];
          in_work_[c] = 0;
          std::vector<Vertex> nb;
          for (Vertex v : p.classes[c]) {
            auto [b, e] = g.neighbors(v);
            nb.insert(nb.end(), b, e);
          }
          if (nb.empty()) continue;
          return issue(Move{{c}, classes_of(p, nb)});
        }
        phase_ = Phase::Done;
        return std::nullopt;
      }
      case Phase::Done:
        return std::nullopt;
    }
  }
}

// ---------------------------------------------------------------- adversary

std::vector<std::vector<std::int64_t>> pair_separation_order(const ColoredGraph& g, const FamilyDescriptor& d,
                                                             const PolicySpec& policy) {
  std::vector<std::vector<std::int64_t>> when(d.levels.size());
  // owner[v] = (level index, pair index) for in-pair vertices.
  std::vector<std::pair<int, int>> owner(g.vertex_count(), {-1, -1});
  for (std::size_t l = 0; l < d.levels.size(); ++l) {
    when[l].assign(d.levels[l].in_pairs.size(), -1);
    for (std::size_t j = 0; j < d.levels[l].in_pairs.size(); ++j) {
      owner[d.levels[l].in_pairs[j].first] = {static_cast<int>(l), static_cast<int>(j)};
      owner[d.levels[l].in_pairs[j].second] = {static_cast<int>(l), static_cast<int>(j)};
    }
  }
  std::int64_t step = 0;
  RefineOptions opts;
  opts.record_trace = false;
  opts.observer = [&](const SplitStep& st, const Partition& p) {
    if (st.productive()) {
      for (int f : st.fragments) {
        if (std::find(st.target.begin(), st.target.end(), f) != st.target.end()) continue;
        for (Vertex v : p.classes[f]) {
          auto [l, j] = owner[v];
          if (l < 0 || when[l][j] >= 0) continue;
          const VertexPair& pr = d.levels[l].in_pairs[j];
          if (p.class_of[pr.first] != p.class_of[pr.second]) when[l][j] = step;
        }
      }
    }
    ++step;
  };
  refine_worklist(g, initial_partition(g), policy, opts);
  return when;
}

bool correct_pairs_last(const FamilyDescriptor& d, const std::vector<std::vector<std::int64_t>>& separation) {
  for (std::size_t l = 0; l < separation.size(); ++l) {
    const std::int64_t c = separation[l][d.correct_indices[l]];
    if (c < 0) return false;
    for (std::int64_t s : separation[l])
      if (s < 0 || s > c) return false;
  }
  return true;
}

AdversaryResult adversary_build(const PolicySpec& subject, int k, std::vector<int> start_indices) {
  if (k < 2) throw std::invalid_argument("adversary needs k >= 2");
  if (start_indices.empty()) start_indices.assign(k - 1, 0);
  AdversaryResult res{build_concealer_graph(k, start_indices), 0, {}};
  const std::int64_t budget = static_cast<std::int64_t>(k) << k;
  while (true) {
    res.separation = pair_separation_order(res.instance.graph, res.instance.desc, subject);
    ++res.iterations;
    if (correct_pairs_last(res.instance.desc, res.separation)) return res;
    if (res.iterations >= budget)
      throw std::runtime_error("adversary budget exceeded for " + subject.name() + " at k=" + std::to_string(k));
    std::vector<int> idx = res.instance.desc.correct_indices;
    for (std::size_t l = 0; l < idx.size(); ++l) {
      const auto& sep = res.separation[l];
      // Never-separated pairs count as latest.
      int last = 0;
      auto later = [](std::int64_t a, std::int64_t b) { return (a < 0 && b >= 0) || (a >= 0 && b >= 0 && a > b); };
      for (int j = 1; j < static_cast<int>(sep.size()); ++j)
        if (later(sep[j], sep[last]) || (sep[j] == sep[last])) last = j;
      if (sep[idx[l]] != sep[last]) idx[l] = last;
    }
    res.instance = build_concealer_graph(k, idx);
  }
}

// ---------------------------------------------------------------- level progress

LevelProgress level_progress(const FamilyDescriptor& d, const Partition& p) {
  LevelProgress lp;
  const int k = d.k;
  while (lp.n_a < static_cast<int>(d.level_out.size())) {
    const VertexPair& o = d.level_out[lp.n_a];
    if (p.class_of[o.first] == p.class_of[o.second]) break;
    ++lp.n_a;
  }
  // Level of X: each class must be exactly one aligned block of a common level.
  const int size = 1 << k;
  auto cls = [&](int i) { return p.class_of[d.x_by_index[i][0]]; };
  lp.x_level = -1;
  for (int l = 0; l <= k && lp.x_level < 0; ++l) {
    const int w = 1 << (k - l);
    bool ok = true;
    for (int i = 0; i < size && ok; ++i) {
      for (Vertex v : d.x_by_index[i])
        if (p.class_of[v] != cls(i)) ok = false;
      if (i % w != 0 && cls(i) != cls(i - 1)) ok = false;
      if (i % w == 0 && i > 0 && cls(i) == cls(i - 1)) ok = false;
    }
    // Distinct blocks must also be distinct classes globally.
    if (ok) {
      std::vector<int> seen;
      for (int q = 0; q < (1 << l); ++q) seen.push_back(cls(q * w));
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) ok = false;
    }
    if (ok) lp.x_level = l;
  }
  lp.dichotomy = lp.x_level == lp.n_a || lp.x_level == lp.n_a + 1;

  struct Span {
    int lo = 1 << 30, hi = -1, count = 0;
  };
  std::vector<Span> span(p.class_count());
  bool twins = true;
  for (int i = 0; i < size; ++i) {
    for (Vertex v : d.x_by_index[i]) twins = twins && p.class_of[v] == cls(i);
    Span& s = span[cls(i)];
    s.lo = std::min(s.lo, i);
    s.hi = std::max(s.hi, i);
    ++s.count;
  }
  lp.blockwise = twins;
  for (const Span& s : span) {
    if (s.count == 0) continue;
    bool ok = false;
    for (int l : {lp.n_a, lp.n_a + 1}) {
      if (l > k) continue;
      const int w = 1 << (k - l);
      ok = ok || (s.count == w && s.lo % w == 0 && s.hi == s.lo + w - 1);
    }
    if (!ok) lp.blockwise = false;
  }

  lp.layers_coarser = true;
  std::vector<int> rep(p.class_count(), -1);
  auto same = [&](Vertex a, Vertex b) { return p.class_of[a] == p.class_of[b]; };
  for (int i = 0; i < size && lp.layers_coarser; ++i) {
    int& j = rep[cls(i)];
    if (j < 0) {
      j = i;
      continue;
    }
    bool all = same(d.y[i], d.y[j]);
    for (const auto& col : d.xx) all = all && same(col[i], col[j]);
    for (const auto& col : d.yy) all = all && same(col[i], col[j]);
    lp.layers_coarser = all;
  }
  return lp;
}

}  // namespace crlab
