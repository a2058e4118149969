#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crlab/graph.hpp"
#include "crlab/worklist.hpp"

namespace crlab {

struct SplitStep {
  std::vector<int> splitter;        // class ids whose union refined the target
  std::vector<int> target;          // class ids (one for worklist runs)
  std::vector<int> fragments;       // ids the target classes became, retained ones included
  std::vector<int> fragment_sizes;
  std::int64_t edge_cost = 0;
  int round = 0;                    // worklist depth of the splitter entry

  bool productive() const { return fragments.size() > target.size(); }
};

struct Extraction {
  int cls;
  int depth;
  int size;
};

struct RefinementReport {
  std::string strategy;
  int n = 0;
  std::int64_t m = 0;
  std::vector<SplitStep> steps;        // empty when tracing is off
  std::int64_t total_cost = 0;
  std::int64_t scans = 0;              // (splitter, target) evaluations
  std::int64_t productive_splits = 0;
  Partition final_partition;
  std::vector<int> rounds;             // round of each recorded step
  std::vector<Extraction> extractions; // worklist runs only, when tracing
  bool from_worklist = false;
  bool queue_policy = false;
};

class RefinementError : public std::runtime_error {
 public:
  RefinementError(const std::string& what, RefinementReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RefinementReport& partial() const { return partial_; }

 private:
  RefinementReport partial_;
};

// Invoked after every scan with the partition as it stands after the split.
using StepObserver = std::function<void(const SplitStep&, const Partition&)>;

struct RefineOptions {
  bool record_trace = true;
  int initial_depth = 0;  // depth carried by the initial cells
  std::int64_t step_budget = 0;  // 0 selects the default budget
  StepObserver observer;
  std::function<void(const Partition&)> on_extraction_end;
};

std::int64_t default_step_budget(const ColoredGraph& g);

struct SplitResult {
  std::vector<int> fragments;  // ordered by neighbor count ascending
  std::vector<int> fragment_sizes;
  std::int64_t edge_cost = 0;
};

// Splits one live class by neighbor counts into the union of splitter classes.
// The largest fragment (ties: smallest vertex) keeps the target id; others get new ids.
SplitResult split_class(const ColoredGraph& g, Partition& p, int target, const std::vector<int>& splitter_union);

RefinementReport refine_worklist(const ColoredGraph& g, const Partition& initial, const PolicySpec& policy,
                                 const RefineOptions& opts = {});

struct Move {
  std::vector<int> splitter;
  std::vector<int> target;
};

// Step chooser for strategy-driven refinement. Returning nullopt means terminate.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual std::optional<Move> next(const ColoredGraph& g, const Partition& p,
                                   const std::vector<SplitStep>& history) = 0;
};

class InvalidStrategy : public RefinementError {
 public:
  using RefinementError::RefinementError;
};

enum class EquitableCheck {
  EveryChange,  // stop as soon as the partition is equitable
  OnTerminate,  // trust the strategy until it stops, then verify
};

struct StrategyOptions {
  bool record_trace = true;
  std::int64_t step_budget = 0;
  EquitableCheck check = EquitableCheck::EveryChange;
  StepObserver observer;
};

RefinementReport refine_strategy(const ColoredGraph& g, const Partition& initial, Strategy& strategy,
                                 const StrategyOptions& opts = {});

// Refines every class of the target union against the splitter union. Returns the
// resulting step; cost counts each edge between the two unions once.
SplitStep apply_move(const ColoredGraph& g, Partition& p, const Move& move);

// Refines the union of all classes against itself while that splits anything, then
// sweeps single-class splitters against all classes.
class FullRefinementStrategy : public Strategy {
 public:
  std::string name() const override { return "full"; }
  std::optional<Move> next(const ColoredGraph& g, const Partition& p, const std::vector<SplitStep>& history) override;

 private:
  bool sweeping_ = false;
  int cursor_ = 0;
};

// Classes extracted per queue round. Throws if the report is not from a traced queue run.
std::vector<std::vector<int>> queue_rounds(const RefinementReport& report);

void write_report(std::ostream& out, const RefinementReport& report);
std::string format_report(const RefinementReport& report);

}  // namespace crlab
