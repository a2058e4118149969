#pragma once

// Measured reference values, pinned so regressions show up as test failures.

namespace crlab::baselines {

// Fast oracle on concealer graphs, k = 6..10: largest total cost per edge observed.
inline constexpr double kFastOracleCostPerEdge = 5.45;
// Fast oracle layer propagation at level l costs at most this times 2^(k-l) * k^2.
inline constexpr double kLevelCostFactor = 2.0;
// Adversarial queue instance at k = 6: subject cost over oracle cost.
inline constexpr double kQueueOverOracleK6 = 1.52;

// Set-cover reduction, all instances with |S| <= 4 and at most 4 subsets, dummies = (|S|+|U|)^2:
// largest observed (optimal sequence cost / dummies) - optimal cover size.
inline constexpr double kSetCoverExcess = 0.11;
inline constexpr int kSetCoverBracket = 3;

// Threshold pairs used for bounded / growing verdicts.
inline constexpr double kBoundedSpread = 2.0;
inline constexpr double kGrowthFactor = 2.0;

// Exact total costs (all generators and policies are deterministic).
struct PinnedCost {
  const char* family;
  const char* policy;
  int k;
  long long total_cost;
};

inline constexpr PinnedCost kPinnedCosts[] = {
    {"stack-adv", "queue", 6, 29763},           {"stack-adv", "queue", 11, 4234243},
    {"stack-adv", "smallest-stack", 6, 17388},  {"stack-adv", "smallest-stack", 11, 1632539},
    {"queue-adv", "queue", 6, 23665},           {"queue-adv", "queue", 11, 1858427},
    {"queue-adv", "stack", 6, 38507},           {"queue-adv", "stack", 11, 4884188},
    {"pq-max-adv", "pq-max", 6, 35427},         {"pq-max-adv", "pq-max", 10, 1871363},
    {"pq-max-adv", "smallest-stack", 6, 20712}, {"pq-max-adv", "smallest-stack", 10, 781088},
    {"pq-min-adv", "pq-min", 6, 42339},         {"pq-min-adv", "pq-min", 10, 2213299},
    {"pq-min-adv", "smallest-stack", 6, 30198}, {"pq-min-adv", "smallest-stack", 10, 1249938},
    {"concealer", "fast-oracle", 6, 22370},     {"concealer", "fast-oracle", 10, 819694},
};

// Upper reference for the queue on the queue-advantage graph at k = 6.
inline constexpr double kQueueAdvQueueCostPerEdge = 4.6;

}  // namespace crlab::baselines
