#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crlab/baselines.hpp"
#include "crlab/bench.hpp"
#include "crlab/families.hpp"
#include "crlab/online.hpp"
#include "crlab/refine.hpp"
#include "crlab/setcover.hpp"

using namespace crlab;

namespace {

constexpr int kRegression = 2;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(t);
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int k = std::stoi(s);
    return {k, k};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Graph text followed by the role map as comment lines, so the file still parses as a graph.
std::string graph_with_roles(const Family& f) {
  std::string out = format_graph(f.graph);
  std::istringstream roles(format_roles(f.desc));
  for (std::string line; std::getline(roles, line);) out += "# " + line + "\n";
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"color refinement lab"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family graph");
  std::string gen_family = "concealer", gen_out, gen_roles, gen_correct;
  int gen_k = 3;
  gen->add_option("--family", gen_family, "concealer, stack-adv, queue-adv, pq-max-adv, pq-min-adv");
  gen->add_option("--k", gen_k, "size parameter")->required();
  gen->add_option("--correct", gen_correct, "comma-separated correct pair indices (concealer)");
  gen->add_option("-o,--output", gen_out, "graph file (default stdout)");
  gen->add_option("--roles", gen_roles, "role sidecar file");

  // refine
  auto* ref = app.add_subcommand("refine", "run refinement and print the report");
  std::string ref_graph, ref_family, ref_policy = "stack", ref_out;
  int ref_k = 0;
  bool ref_trace = false;
  ref->add_option("--graph", ref_graph, "graph file");
  ref->add_option("--family", ref_family, "generate a family graph instead");
  ref->add_option("--k", ref_k, "size parameter for --family");
  ref->add_option("--policy", ref_policy, "worklist policy, full, or fast-oracle");
  ref->add_flag("--trace", ref_trace, "print every split step");
  ref->add_option("-o,--output", ref_out, "report file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "cost per edge over a k range");
  std::string b_csv, b_svg, b_families = "stack-adv", b_k = "3..6", b_policies = "queue,smallest-stack";
  bench->add_option("--csv", b_csv, "CSV output")->required();
  bench->add_option("--svg", b_svg, "SVG chart output");
  bench->add_option("--families", b_families, "comma-separated families");
  bench->add_option("--k", b_k, "k or min..max");
  bench->add_option("--policies", b_policies, "comma-separated policies (fast-oracle allowed on concealer)");

  // adversary
  auto* adv = app.add_subcommand("adversary", "build a slow concealer graph for a policy");
  std::string a_policy = "stack", a_out;
  int a_k = 4;
  adv->add_option("--policy", a_policy, "subject policy");
  adv->add_option("--k", a_k, "size parameter")->required();
  adv->add_option("-o,--output", a_out, "graph file with role map")->required();

  // setcover
  auto* sc = app.add_subcommand("setcover", "set cover reduction and optimal sequence");
  std::string s_inst;
  int s_dummies = -1, s_depth = 16;
  bool s_check = false;
  sc->add_option("--instance", s_inst, "instance file")->required();
  sc->add_option("--dummies", s_dummies, "dummy element count (default size^2)");
  sc->add_option("--depth", s_depth, "search depth bound");
  sc->add_flag("--check", s_check, "compute the optimal sequence and check the bracket");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      FamilyKind kind = parse_family(gen_family);
      Family f;
      if (!gen_correct.empty()) {
        if (kind != FamilyKind::Concealer) throw std::invalid_argument("--correct applies to concealer graphs");
        std::vector<int> idx;
        for (const auto& t : split_list(gen_correct)) idx.push_back(std::stoi(t));
        f = build_concealer_graph(gen_k, idx);
      } else {
        f = build_family(kind, gen_k);
      }
      write_text(gen_out, graph_with_roles(f));
      if (!gen_roles.empty()) write_text(gen_roles, format_roles(f.desc));
      return 0;
    }

    if (*ref) {
      if (ref_graph.empty() == ref_family.empty()) throw std::invalid_argument("give exactly one of --graph, --family");
      Family f;
      if (!ref_graph.empty()) {
        f.graph = parse_graph(read_text(ref_graph));
      } else {
        f = build_family(parse_family(ref_family), ref_k);
      }
      const Partition init = initial_partition(f.graph);
      RefinementReport r;
      if (ref_policy == "full" || ref_policy == "fast-oracle") {
        if (ref_policy == "fast-oracle" && ref_family.empty())
          throw std::invalid_argument("fast-oracle needs --family concealer");
        std::unique_ptr<Strategy> s;
        if (ref_policy == "full") s = std::make_unique<FullRefinementStrategy>();
        else s = fast_oracle_strategy(f.desc);
        StrategyOptions o;
        o.record_trace = ref_trace;
        o.check = EquitableCheck::OnTerminate;
        r = refine_strategy(f.graph, init, *s, o);
      } else {
        RefineOptions o;
        o.record_trace = ref_trace;
        r = refine_worklist(f.graph, init, parse_policy(ref_policy), o);
      }
      write_text(ref_out, format_report(r));
      return 0;
    }

    if (*bench) {
      std::vector<FamilyKind> fams;
      for (const auto& t : split_list(b_families)) fams.push_back(parse_family(t));
      auto [lo, hi] = parse_range(b_k);
      std::vector<BenchCell> cells = run_bench(fams, lo, hi, split_list(b_policies));
      write_text(b_csv, format_csv(cells));
      if (!b_svg.empty()) write_text(b_svg, emit_svg(cells));
      int regressions = 0;
      for (const auto& c : cells)
        for (const auto& p : baselines::kPinnedCosts)
          if (c.family == p.family && c.policy == p.policy && c.k == p.k && c.total_cost != p.total_cost) {
            std::cerr << "regression: " << c.family << " " << c.policy << " k=" << c.k << " cost " << c.total_cost
                      << " pinned " << p.total_cost << "\n";
            ++regressions;
          }
      return regressions ? kRegression : 0;
    }

    if (*adv) {
      AdversaryResult a = adversary_build(parse_policy(a_policy), a_k);
      write_text(a_out, graph_with_roles(a.instance));
      std::cout << "correct_indices " << join(a.instance.desc.correct_indices) << "\n";
      std::cout << "iterations " << a.iterations << "\n";
      return 0;
    }

    if (*sc) {
      SetCoverInstance inst = parse_instance(read_text(s_inst));
      Reduction r = reduce_setcover(inst, s_dummies);
      const int best = brute_force_setcover(inst);
      std::cout << "dummies " << r.dummy_count << "\n";
      std::cout << "optimal_cover " << best << "\n";
      std::cout << "greedy_cover " << greedy_setcover(inst).size() << "\n";
      if (s_check) {
        OptimalSequence o = brute_force_optimal_sequence(r.graph, initial_partition(r.graph), s_depth);
        const std::int64_t q = o.cost / r.dummy_count;
        const bool ok = q >= best && q <= best + baselines::kSetCoverBracket;
        std::cout << "sequence_cost " << o.cost << "\n";
        std::cout << "sequence_length " << o.sequence.size() << "\n";
        std::cout << "bracket " << (ok ? "ok" : "violated") << "\n";
        return ok ? 0 : kRegression;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
