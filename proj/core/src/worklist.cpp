#include "crlab/worklist.hpp"

#include <algorithm>
#include <stdexcept>

namespace crlab {

std::string PolicySpec::name() const {
  switch (kind) {
    case PolicyKind::Stack: return "stack";
    case PolicyKind::Queue: return "queue";
    case PolicyKind::PqMin: return "pq-min";
    case PolicyKind::PqMax: return "pq-max";
    case PolicyKind::SmallestStack: return "smallest-stack";
    case PolicyKind::Hybrid: return "hybrid:" + std::to_string(window);
  }
  return "?";
}

PolicySpec make_policy(PolicyKind kind, int window) {
  if (kind == PolicyKind::Hybrid && window < 1) throw std::invalid_argument("hybrid window must be >= 1");
  return PolicySpec{kind, window};
}

PolicySpec parse_policy(const std::string& token) {
  if (token == "stack") return make_policy(PolicyKind::Stack);
  if (token == "queue") return make_policy(PolicyKind::Queue);
  if (token == "pq-min") return make_policy(PolicyKind::PqMin);
  if (token == "pq-max") return make_policy(PolicyKind::PqMax);
  if (token == "smallest-stack") return make_policy(PolicyKind::SmallestStack);
  if (token == "hybrid") return make_policy(PolicyKind::Hybrid, 4);
  if (token.rfind("hybrid:", 0) == 0) {
    std::string w = token.substr(7);
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad hybrid window in '" + token + "'");
    return make_policy(PolicyKind::Hybrid, std::stoi(w));
  }
  throw std::invalid_argument("unknown policy '" + token + "'");
}

std::vector<PolicySpec> standard_policies() {
  return {make_policy(PolicyKind::Stack),  make_policy(PolicyKind::Queue),
          make_policy(PolicyKind::PqMin),  make_policy(PolicyKind::PqMax),
          make_policy(PolicyKind::SmallestStack), make_policy(PolicyKind::Hybrid, 4)};
}

Worklist::Worklist(PolicySpec spec, SizeFn live_size)
    : spec_(spec), live_size_(std::move(live_size)),
      heap_(HeapCmp{spec.kind == PolicyKind::PqMax}) {
  if (spec_.kind == PolicyKind::Hybrid && spec_.window < 1)
    throw std::invalid_argument("hybrid window must be >= 1");
}

void Worklist::mark(int cls, int depth) {
  if (cls >= static_cast<int>(in_.size())) {
    std::size_t n = std::max<std::size_t>(cls + 1, in_.size() * 2);
    in_.resize(n, 0);
    depth_.resize(n, 0);
    seq_.resize(n, 0);
  }
  in_[cls] = 1;
  depth_[cls] = depth;
  seq_[cls] = next_seq_++;
  ++count_;
}

void Worklist::raw_push(int cls, int depth) {
  if (contains(cls)) return;
  mark(cls, depth);
  switch (spec_.kind) {
    case PolicyKind::Queue: queue_.push_back(cls); break;
    case PolicyKind::PqMin:
    case PolicyKind::PqMax: heap_.push({live_size_(cls), seq_[cls], cls}); break;
    default: stack_.push_back(cls); break;
  }
}

void Worklist::push_initial(int cls, int depth) { raw_push(cls, depth); }

void Worklist::insert_fragments(const std::vector<Fragment>& frags, int depth) {
  switch (spec_.kind) {
    case PolicyKind::Stack:
    case PolicyKind::Hybrid: {
      // Smallest ends on top; equal sizes keep fragment order.
      std::vector<Fragment> order = frags;
      std::stable_sort(order.begin(), order.end(), [](const Fragment& a, const Fragment& b) { return a.size > b.size; });
      for (const auto& f : order) raw_push(f.cls, depth);
      break;
    }
    case PolicyKind::SmallestStack:
      pending_.insert(pending_.end(), frags.begin(), frags.end());
      pending_depth_ = depth;
      break;
    default:
      for (const auto& f : frags) raw_push(f.cls, depth);
      break;
  }
}

void Worklist::end_extraction() {
  if (pending_.empty()) return;
  std::stable_sort(pending_.begin(), pending_.end(), [](const Fragment& a, const Fragment& b) { return a.size > b.size; });
  for (const auto& f : pending_) raw_push(f.cls, pending_depth_);
  pending_.clear();
}

void Worklist::resized(int cls) {
  if (!contains(cls)) return;
  if (spec_.kind == PolicyKind::PqMin || spec_.kind == PolicyKind::PqMax)
    heap_.push({live_size_(cls), seq_[cls], cls});
}

WorkItem Worklist::extract() {
  if (count_ == 0) throw std::logic_error("extract from empty worklist");
  int cls = -1;
  switch (spec_.kind) {
    case PolicyKind::Queue:
      cls = queue_.front();
      queue_.pop_front();
      break;
    case PolicyKind::PqMin:
    case PolicyKind::PqMax:
      // Entries whose recorded size is stale were superseded by a re-keyed copy.
      while (true) {
        if (heap_.empty()) throw std::logic_error("priority worklist lost a live entry");
        HeapEntry top = heap_.top();
        heap_.pop();
        if (in_[top.cls] && top.seq == seq_[top.cls] && top.size == live_size_(top.cls)) {
          cls = top.cls;
          break;
        }
      }
      break;
    case PolicyKind::Hybrid: {
      std::size_t top = stack_.size() - 1;
      std::size_t lo = stack_.size() > static_cast<std::size_t>(spec_.window) ? stack_.size() - spec_.window : 0;
      std::size_t best = top;
      for (std::size_t i = top; i-- > lo;)
        if (live_size_(stack_[i]) < live_size_(stack_[best])) best = i;
      cls = stack_[best];
      stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(best));
      break;
    }
    default:
      cls = stack_.back();
      stack_.pop_back();
      break;
  }
  in_[cls] = 0;
  --count_;
  return {cls, depth_[cls]};
}

std::vector<int> Worklist::snapshot() const {
  if (spec_.kind == PolicyKind::Queue) return {queue_.begin(), queue_.end()};
  return {stack_.rbegin(), stack_.rend()};
}

}  // namespace crlab
