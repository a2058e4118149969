#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crlab/families.hpp"

namespace crlab {

struct BenchCell {
  std::string family;
  int k = 0;
  int n = 0;
  std::int64_t m = 0;
  std::string policy;
  std::int64_t total_cost = 0;
  double cost_per_edge = 0;
  double wall_ms = 0;  // rounded to microseconds

  bool operator==(const BenchCell&) const = default;
};

// Worklist policy names plus "fast-oracle" (concealer graphs only).
BenchCell run_cell(FamilyKind family, int k, const std::string& policy);

// One cell per (family, k, policy), sorted by family name, k, policy name.
std::vector<BenchCell> run_bench(const std::vector<FamilyKind>& families, int k_min, int k_max,
                                 const std::vector<std::string>& policies);

extern const char* const kCsvHeader;
void write_csv(std::ostream& out, const std::vector<BenchCell>& cells);
std::string format_csv(const std::vector<BenchCell>& cells);
std::vector<BenchCell> read_csv(std::istream& in);
std::vector<BenchCell> parse_csv(const std::string& text);

struct GrowthFit {
  double slope = 0;      // least squares, cost_per_edge against k
  double intercept = 0;
  double spread = 0;     // max / min
  double ratio = 0;      // last / first
  bool strictly_increasing = false;
  bool bounded = false;  // spread <= bounded_limit
  bool growing = false;  // strictly increasing and ratio >= growth_factor
};

// Needs at least 4 points; xs are the k values.
GrowthFit fit_growth(const std::vector<int>& ks, const std::vector<double>& values, double bounded_limit = 2.0,
                     double growth_factor = 2.0);
// Cells of a single (family, policy) series, ordered by k.
GrowthFit fit_growth(const std::vector<BenchCell>& cells, double bounded_limit = 2.0, double growth_factor = 2.0);

// Line chart of cost_per_edge against k, one series per (family, policy).
std::string emit_svg(const std::vector<BenchCell>& cells);

}  // namespace crlab
