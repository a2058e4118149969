#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <string>
#include <vector>

namespace crlab {

enum class PolicyKind { Stack, Queue, PqMin, PqMax, SmallestStack, Hybrid };

struct PolicySpec {
  PolicyKind kind = PolicyKind::Stack;
  int window = 4;  // hybrid only

  std::string name() const;
  bool operator==(const PolicySpec&) const = default;
};

// Accepts stack, queue, pq-min, pq-max, smallest-stack, hybrid, hybrid:<w>.
PolicySpec parse_policy(const std::string& token);
PolicySpec make_policy(PolicyKind kind, int window = 4);

// stack, queue, pq-min, pq-max, smallest-stack, hybrid:4
std::vector<PolicySpec> standard_policies();

struct Fragment {
  int cls;
  int size;
};

struct WorkItem {
  int cls;
  int depth;
};

// Pending splitter classes of one refinement run. Entries are class ids; a class that
// shrinks while queued keeps its slot, which realizes in-place replacement.
class Worklist {
 public:
  using SizeFn = std::function<int(int)>;

  Worklist(PolicySpec spec, SizeFn live_size);

  const PolicySpec& spec() const { return spec_; }
  bool empty() const { return count_ == 0; }
  std::size_t size() const { return count_; }
  bool contains(int cls) const { return cls < static_cast<int>(in_.size()) && in_[cls]; }

  // Initial cells, in the given order.
  void push_initial(int cls, int depth);

  // Fragments of one split, minus the withheld largest one, in the engine's fragment order.
  void insert_fragments(const std::vector<Fragment>& frags, int depth);

  // Called after all splits caused by one extracted cell.
  void end_extraction();

  // A queued class changed size (priority policies re-key).
  void resized(int cls);

  WorkItem extract();

  // Live entries from next-to-extract onward (diagnostics, tests). Not valid for pq kinds.
  std::vector<int> snapshot() const;

 private:
  struct HeapEntry {
    int size;
    std::uint64_t seq;
    int cls;
  };
  struct HeapCmp {
    bool max;
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
      if (a.size != b.size) return max ? a.size < b.size : a.size > b.size;
      return a.seq > b.seq;
    }
  };

  void mark(int cls, int depth);
  void raw_push(int cls, int depth);

  PolicySpec spec_;
  SizeFn live_size_;
  std::vector<char> in_;
  std::vector<int> depth_;
  std::vector<std::uint64_t> seq_;
  std::uint64_t next_seq_ = 0;
  std::size_t count_ = 0;

  std::vector<int> stack_;
  std::deque<int> queue_;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCmp> heap_;
  std::vector<Fragment> pending_;
  int pending_depth_ = 0;
};

}  // namespace crlab
