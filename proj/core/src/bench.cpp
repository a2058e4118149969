#include "crlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "crlab/online.hpp"
#include "crlab/refine.hpp"

namespace crlab {

BenchCell run_cell(FamilyKind family, int k, const std::string& policy) {
  BenchCell c;
  c.family = family_name(family);
  c.k = k;
  c.policy = policy;
  try {
    Family f = build_family(family, k);
    c.n = f.graph.vertex_count();
    c.m = f.graph.edge_count();
    const Partition init = initial_partition(f.graph);
    auto t0 = std::chrono::steady_clock::now();
    RefinementReport r;
    if (policy == "fast-oracle") {
      FastOracleStrategy s(f.desc);
      StrategyOptions o;
      o.record_trace = false;
      o.check = EquitableCheck::OnTerminate;
      r = refine_strategy(f.graph, init, s, o);
    } else {
      RefineOptions o;
      o.record_trace = false;
      r = refine_worklist(f.graph, init, parse_policy(policy), o);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    c.total_cost = r.total_cost;
    c.cost_per_edge = c.m > 0 ? static_cast<double>(c.total_cost) / static_cast<double>(c.m) : 0.0;
    c.wall_ms = std::round(ms * 1000.0) / 1000.0;
  } catch (const std::exception& e) {
    throw std::runtime_error(c.family + " k=" + std::to_string(k) + " " + policy + ": " + e.what());
  }
  return c;
}

std::vector<BenchCell> run_bench(const std::vector<FamilyKind>& families, int k_min, int k_max,
                                 const std::vector<std::string>& policies) {
  for (const auto& p : policies)
    if (p != "fast-oracle") parse_policy(p);
  std::vector<BenchCell> cells;
  for (FamilyKind f : families)
    for (int k = k_min; k <= k_max; ++k)
      for (const auto& p : policies) cells.push_back(run_cell(f, k, p));
  std::sort(cells.begin(), cells.end(), [](const BenchCell& a, const BenchCell& b) {
    return std::tie(a.family, a.k, a.policy) < std::tie(b.family, b.k, b.policy);
  });
  return cells;
}

const char* const kCsvHeader = "family,k,n,m,policy,total_cost,cost_per_edge,wall_ms";

void write_csv(std::ostream& out, const std::vector<BenchCell>& cells) {
  out << kCsvHeader << '\n';
  char buf[64];
  for (const auto& c : cells) {
    out << c.family << ',' << c.k << ',' << c.n << ',' << c.m << ',' << c.policy << ',' << c.total_cost << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.3f", c.cost_per_edge, c.wall_ms);
    out << buf << '\n';
  }
}

std::string format_csv(const std::vector<BenchCell>& cells) {
  std::ostringstream out;
  write_csv(out, cells);
  return out.str();
}

std::vector<BenchCell> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing or wrong CSV header");
  std::vector<BenchCell> cells;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string t; std::getline(ls, t, ',');) f.push_back(t);
    if (f.size() != 8) throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": expected 8 fields");
    try {
      BenchCell c;
      c.family = f[0];
      c.k = std::stoi(f[1]);
      c.n = std::stoi(f[2]);
      c.m = std::stoll(f[3]);
      c.policy = f[4];
      c.total_cost = std::stoll(f[5]);
      // The printed ratio is rounded; recompute it from the exact columns.
      c.cost_per_edge = c.m > 0 ? static_cast<double>(c.total_cost) / static_cast<double>(c.m) : 0.0;
      if (std::abs(c.cost_per_edge - std::stod(f[6])) > 1e-5) throw std::invalid_argument("cost_per_edge mismatch");
      c.wall_ms = std::stod(f[7]);
      cells.push_back(c);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cells;
}

std::vector<BenchCell> parse_csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

GrowthFit fit_growth(const std::vector<int>& ks, const std::vector<double>& values, double bounded_limit,
                     double growth_factor) {
  if (ks.size() != values.size()) throw std::invalid_argument("k and value counts differ");
  if (ks.size() < 4) throw std::invalid_argument("growth fit needs at least 4 cells");
  const double n = static_cast<double>(ks.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    sx += ks[i];
    sy += values[i];
    sxx += static_cast<double>(ks[i]) * ks[i];
    sxy += ks[i] * values[i];
  }
  GrowthFit g;
  const double den = n * sxx - sx * sx;
  g.slope = den != 0 ? (n * sxy - sx * sy) / den : 0.0;
  g.intercept = (sy - g.slope * sx) / n;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  g.spread = *lo > 0 ? *hi / *lo : INFINITY;
  g.ratio = values.front() > 0 ? values.back() / values.front() : INFINITY;
  g.strictly_increasing = true;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1])) g.strictly_increasing = false;
  g.bounded = g.spread <= bounded_limit;
  g.growing = g.strictly_increasing && g.ratio >= growth_factor;
  return g;
}

GrowthFit fit_growth(const std::vector<BenchCell>& cells, double bounded_limit, double growth_factor) {
  std::vector<BenchCell> sorted = cells;
  std::sort(sorted.begin(), sorted.end(), [](const BenchCell& a, const BenchCell& b) { return a.k < b.k; });
  std::vector<int> ks;
  std::vector<double> vs;
  for (const auto& c : sorted) {
    if (c.family != sorted.front().family || c.policy != sorted.front().policy)
      throw std::invalid_argument("growth fit needs a single family/policy series");
    ks.push_back(c.k);
    vs.push_back(c.cost_per_edge);
  }
  return fit_growth(ks, vs, bounded_limit, growth_factor);
}

std::string emit_svg(const std::vector<BenchCell>& cells) {
  const int width = 640, height = 400, left = 60, right = 170, top = 20, bottom = 40;
  const int pw = width - left - right, ph = height - top - bottom;
  std::map<std::string, std::vector<std::pair<int, double>>> series;
  int kmin = 0, kmax = 1;
  double vmax = 1;
  if (!cells.empty()) {
    kmin = kmax = cells.front().k;
    vmax = 0;
  }
  for (const auto& c : cells) {
    series[c.family + "/" + c.policy].emplace_back(c.k, c.cost_per_edge);
    kmin = std::min(kmin, c.k);
    kmax = std::max(kmax, c.k);
    vmax = std::max(vmax, c.cost_per_edge);
  }
  if (kmax == kmin) ++kmax;
  vmax = std::ceil(vmax <= 0 ? 1 : vmax);
  auto px = [&](double k) { return left + pw * (k - kmin) / (kmax - kmin); };
  auto py = [&](double v) { return top + ph * (1.0 - v / vmax); };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream s;
  char buf[160];
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", left, top + ph,
                left + pw, top + ph);
  s << buf;
  std::snprintf(buf, sizeof buf, "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", left, top, left,
                top + ph);
  s << buf;
  for (int k = kmin; k <= kmax; ++k) {
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%d\" font-size=\"11\" text-anchor=\"middle\">%d</text>\n",
                  px(k), top + ph + 15, k);
    s << buf;
  }
  for (int t = 0; t <= 4; ++t) {
    const double v = vmax * t / 4;
    std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"%.1f\" font-size=\"11\" text-anchor=\"end\">%.2f</text>\n",
                  left - 5, py(v) + 4, v);
    s << buf;
  }
  std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\">k</text>\n",
                left + pw / 2, height - 5);
  s << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"14\" y=\"%d\" font-size=\"12\" transform=\"rotate(-90 14 %d)\" "
                "text-anchor=\"middle\">cost per edge</text>\n",
                top + ph / 2, top + ph / 2);
  s << buf;
  int idx = 0;
  for (auto& [name, pts] : series) {
    std::sort(pts.begin(), pts.end());
    const char* color = palette[idx % 8];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.1f,%.1f", i ? " " : "", px(pts[i].first), py(pts[i].second));
      s << buf;
    }
    s << "\"/>\n";
    const int ly = top + 10 + 16 * idx;
    std::snprintf(buf, sizeof buf, "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"%s\" stroke-width=\"2\"/>\n",
                  left + pw + 10, ly, left + pw + 30, ly, color);
    s << buf << "<text class=\"legend\" x=\"" << left + pw + 35 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">"
      << name << "</text>\n";
    ++idx;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace crlab
