#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crlab/graph.hpp"
#include "crlab/refine.hpp"

namespace crlab {

struct SetCoverInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<int>> subsets;  // element indices into universe

  // |S| plus the summed subset sizes.
  int size() const;
  // Throws std::invalid_argument unless subsets are nonempty, in range, and cover the universe.
  void validate() const;
};

SetCoverInstance read_instance(std::istream& in);  // "u e1 e2 ...", then "s e ..." per subset
SetCoverInstance parse_instance(const std::string& text);

struct Reduction {
  ColoredGraph graph;
  std::vector<Vertex> elements;  // universe part of X
  std::vector<Vertex> dummies;   // rest of X
  std::vector<Vertex> sets;      // one vertex per subset, each its own color
  int dummy_count = 0;
};

// Every set vertex is joined to each X vertex outside that set. dummy_count < 0 selects size()^2.
Reduction reduce_setcover(const SetCoverInstance& inst, int dummy_count = -1);

// Color ids for sequences: initial classes are 0..c-1; when a class splits its id retires and
// each fragment receives a fresh id, numbered in order of first use.
struct SequenceStep {
  std::vector<int> splitter;
  std::vector<int> target;
};
using WorklistSequence = std::vector<SequenceStep>;

struct SequenceEval {
  RefinementReport report;
  bool complete = false;  // reached the coarsest equitable refinement
  std::vector<int> live;  // live color ids at the end, ordered by class
};

// Throws std::invalid_argument on a retired or unknown color id.
SequenceEval eval_sequence(const ColoredGraph& g, const Partition& initial, const WorklistSequence& seq);

struct OptimalSequence {
  WorklistSequence sequence;
  std::int64_t cost = 0;
  std::int64_t states = 0;
};

// Cheapest complete sequence, using single-class and all-classes splitters against single
// targets. Throws std::runtime_error past state_budget reached partitions.
OptimalSequence brute_force_optimal_sequence(const ColoredGraph& g, const Partition& initial, int depth_bound,
                                             std::int64_t state_budget = 1'000'000);

// Minimum number of subsets covering the universe; at most 20 subsets.
int brute_force_setcover(const SetCoverInstance& inst);

// Largest-uncovered-first; ties go to the lower subset index. Returns chosen subset indices.
std::vector<int> greedy_setcover(const SetCoverInstance& inst);

// All instances with |S| = s and up to u distinct nonempty subsets whose union is S.
std::vector<SetCoverInstance> tiny_instances(int s, int u);

}  // namespace crlab
