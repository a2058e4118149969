#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crlab/families.hpp"
#include "crlab/gadgets.hpp"
#include "crlab/refine.hpp"

namespace crlab {

// Exact partial quotient graph over all 2^c unions of the c classes. Stored as, per class i
// and union mask S, the common neighbor count of class i into S, or -1 when members differ.
// Edges and labels between unions follow from that table.
class PartialQuotientGraph {
 public:
  static constexpr int kMaxClasses = 14;

  int class_count() const { return classes_; }
  std::uint64_t node_count() const { return std::uint64_t{1} << classes_; }

  // l_V: number of vertices in the union.
  std::int64_t node_label(std::uint32_t mask) const;
  // l_E when every vertex of union `from` has the same count into union `to`.
  std::optional<int> edge(std::uint32_t from, std::uint32_t to) const;

  bool operator==(const PartialQuotientGraph& o) const {
    return classes_ == o.classes_ && sizes_ == o.sizes_ && table_ == o.table_;
  }

  friend PartialQuotientGraph partial_quotient(const ColoredGraph& g, const Partition& p);

 private:
  int classes_ = 0;
  std::vector<int> sizes_;
  std::vector<int> table_;  // [class * 2^c + mask]
};

// Classes are taken in canonical order (smallest member first). Throws above kMaxClasses.
PartialQuotientGraph partial_quotient(const ColoredGraph& g, const Partition& p);

// The three concur conditions for two concealers of one level on the same vertex set.
bool concur(const Gadget& a, const Partition& pa, const Gadget& b, const Partition& pb);

// Known-instance strategy for concealer graphs: degree round, start split, then per level
// only the blocks leading to the correct pair, then a worklist pass to finish.
class FastOracleStrategy : public Strategy {
 public:
  explicit FastOracleStrategy(FamilyDescriptor d);
  std::string name() const override { return "fast-oracle"; }
  std::optional<Move> next(const ColoredGraph& g, const Partition& p, const std::vector<SplitStep>& history) override;

  // Cost spent per level (index l-1), filled while running.
  const std::vector<std::int64_t>& level_costs() const { return level_cost_; }

 private:
  enum class Phase { Degree, Start, Propagate, Gadget, Activate, Finish, Done };
  std::optional<Move> finish_step(const Partition& p, const std::vector<SplitStep>& history);
  std::optional<Move> gadget_step(const ColoredGraph& g, const Partition& p, const std::vector<SplitStep>& history);

  FamilyDescriptor d_;
  Phase phase_ = Phase::Degree;
  int level_ = 1;
  int sub_ = 0;
  int last_count_ = 0;
  std::vector<char> region_;
  std::vector<int> local_;        // gadget-local frontier
  std::vector<int> work_;         // finishing worklist
  std::vector<char> in_work_;
  std::size_t work_head_ = 0;
  std::vector<std::int64_t> level_cost_;
  std::size_t seen_history_ = 0;
  int pending_level_ = 0;
};

FamilyDescriptor require_concealer(const FamilyDescriptor& d);
std::unique_ptr<Strategy> fast_oracle_strategy(const FamilyDescriptor& d);

// Step index (in scan order) at which each in-pair of each level was first separated;
// -1 if never. Entry [l-1][j].
std::vector<std::vector<std::int64_t>> pair_separation_order(const ColoredGraph& g, const FamilyDescriptor& d,
                                                             const PolicySpec& policy);

struct AdversaryResult {
  Family instance;
  int iterations = 0;
  std::vector<std::vector<std::int64_t>> separation;  // for the returned instance
};

// Relocates correct pairs until the subject separates each correct pair last.
AdversaryResult adversary_build(const PolicySpec& subject, int k, std::vector<int> start_indices = {});

// True when at every level the correct pair is separated no earlier than any dead end.
bool correct_pairs_last(const FamilyDescriptor& d, const std::vector<std::vector<std::int64_t>>& separation);

struct LevelProgress {
  int n_a = 0;
  int x_level = 0;        // X equals the blocks of this level
  bool dichotomy = false; // x_level is n_a or n_a+1
  bool blockwise = false; // each X class is an aligned block of level n_a or n_a+1
  bool layers_coarser = false;
};

// Frontier level for a partition of a concealer-like graph; x_level is -1 when X is not a
// block partition of any level. Mid-extraction partitions of worklist runs can mix the two
// levels, which `blockwise` allows and `dichotomy` does not.
LevelProgress level_progress(const FamilyDescriptor& d, const Partition& p);

}  // namespace crlab
