#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include "recolor/audit.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/chordal_reduction.hpp"
#include "recolor/decomposition.hpp"
#include "recolor/error.hpp"
#include "recolor/experiments.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;
using nlohmann::json;

namespace {

void emit(const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump() << '\n';
  } else {
    write_json_file(path, j);
  }
}

int max_count(const RecoloringSequence& seq, int n) {
  const auto counts = recolor_counts(seq, n);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recoloring sequences between proper colorings of treewidth-2 graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate graphs and colorings");
  gen->require_subcommand(1);
  auto* gen_graph = gen->add_subcommand("graph", "Random 2-tree, partial 2-tree or chordal graph");
  std::string family = "2tree", out_path;
  int n = 10;
  std::uint64_t seed = 1;
  double keep_prob = 0.6;
  gen_graph->add_option("--family", family, "2tree | partial-2tree | chordal-omega3")
      ->check(CLI::IsMember({"2tree", "partial-2tree", "chordal-omega3", "chordal"}));
  gen_graph->add_option("--n", n, "Vertex count")->required();
  gen_graph->add_option("--seed", seed);
  gen_graph->add_option("--keep-prob", keep_prob);
  gen_graph->add_option("--out", out_path);

  auto* gen_coloring = gen->add_subcommand("coloring", "Random or greedy proper coloring");
  std::string graph_path, order_kind = "auto";
  int k = 5;
  bool greedy = false;
  gen_coloring->add_option("--graph", graph_path)->required();
  gen_coloring->add_option("--k", k);
  gen_coloring->add_option("--seed", seed);
  gen_coloring->add_flag("--greedy", greedy, "Smallest free color instead of a random one");
  gen_coloring->add_option("--order", order_kind, "auto | mcs | degeneracy")
      ->check(CLI::IsMember({"auto", "mcs", "degeneracy"}));
  gen_coloring->add_option("--out", out_path);

  // check
  auto* check = app.add_subcommand("check", "Validate a graph and optional coloring / sequence");
  std::string coloring_path, seq_path, td_path, peo_path;
  check->add_option("--graph", graph_path)->required();
  check->add_option("--coloring", coloring_path);
  check->add_option("--seq", seq_path);
  check->add_option("--td", td_path);

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Width-2 tree decomposition and MCS ordering");
  std::string peo_out;
  decompose->add_option("--graph", graph_path)->required();
  decompose->add_option("--out", out_path, "Tree decomposition JSON");
  decompose->add_option("--peo-out", peo_out, "Maximum cardinality search ordering JSON");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Merge same-colored bag vertices into a chordal graph");
  std::string alpha_path, out_graph, out_map, out_coloring, out_td;
  reduce->add_option("--graph", graph_path)->required();
  reduce->add_option("--alpha", alpha_path)->required();
  reduce->add_option("--td", td_path, "Defaults to the degree-2 reduction");
  reduce->add_option("--out-graph", out_graph);
  reduce->add_option("--out-map", out_map);
  reduce->add_option("--out-coloring", out_coloring);
  reduce->add_option("--out-td", out_td);

  // recolor
  auto* recolor_cmd = app.add_subcommand("recolor", "Best choice recoloring along a PEO");
  std::string beta_path;
  bool trace = false;
  recolor_cmd->add_option("--graph", graph_path)->required();
  recolor_cmd->add_option("--peo", peo_path, "Defaults to maximum cardinality search");
  recolor_cmd->add_option("--alpha", alpha_path)->required();
  recolor_cmd->add_option("--beta", beta_path)->required();
  recolor_cmd->add_option("--k", k);
  recolor_cmd->add_option("--out", out_path);
  recolor_cmd->add_flag("--trace", trace, "Print one 'v -> c' line per step on stderr");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "Full transformation on a treewidth-2 graph");
  pipeline->add_option("--graph", graph_path)->required();
  pipeline->add_option("--alpha", alpha_path)->required();
  pipeline->add_option("--beta", beta_path)->required();
  pipeline->add_option("--out", out_path);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over the reconfiguration graph");
  oracle->require_subcommand(1);
  std::uint64_t state_cap = kDefaultStateCap;
  auto* distance = oracle->add_subcommand("distance", "Shortest transformation length");
  auto* connected = oracle->add_subcommand("connected", "Is the reconfiguration graph connected");
  auto* diameter = oracle->add_subcommand("diameter", "Diameter of the reconfiguration graph");
  for (auto* sub : {distance, connected, diameter}) {
    sub->add_option("--graph", graph_path)->required();
    sub->add_option("--k", k);
    sub->add_option("--state-cap", state_cap);
  }
  distance->add_option("--alpha", alpha_path)->required();
  distance->add_option("--beta", beta_path)->required();

  // audit
  auto* audit = app.add_subcommand("audit", "Check the structural rules of a best choice sequence");
  audit->add_option("--graph", graph_path)->required();
  audit->add_option("--peo", peo_path)->required();
  audit->add_option("--seq", seq_path)->required();
  audit->add_option("--out", out_path, "Audit report JSON (stdout when omitted)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a batch of instances and write CSV");
  std::string mode = "best-choice";
  std::vector<int> sizes = {50, 100, 200};
  std::vector<std::uint64_t> seeds;
  int seed_count = 10, threads = 1;
  bool inject_k4 = false;
  family = "chordal-omega3";
  bench->add_option("--family", family)
      ->check(CLI::IsMember({"2tree", "partial-2tree", "chordal-omega3", "chordal"}));
  bench->add_option("--mode", mode)->check(CLI::IsMember({"best-choice", "pipeline"}));
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--seeds", seeds, "Explicit seeds")->delimiter(',');
  bench->add_option("--seed-count", seed_count, "Seeds 1..N when --seeds is absent");
  bench->add_option("--k", k);
  bench->add_option("--keep-prob", keep_prob);
  bench->add_flag("--inject-k4", inject_k4);
  bench->add_option("--state-cap", state_cap);
  bench->add_option("--threads", threads);
  bench->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_graph->parsed()) {
      Graph g;
      switch (parse_family(family)) {
        case Family::TwoTree: g = gen_2tree(n, seed); break;
        case Family::Partial2Tree: g = gen_partial_2tree(n, keep_prob, seed); break;
        case Family::Chordal: g = gen_chordal_omega3(n, seed); break;
      }
      emit(out_path, g);
    } else if (gen_coloring->parsed()) {
      const auto g = load<Graph>(graph_path);
      EliminationOrdering order;
      if (order_kind == "mcs" || (order_kind == "auto" && is_chordal(g))) {
        order = mcs_order(g);
      } else {
        order = degeneracy_order(g);
      }
      emit(out_path, greedy ? greedy_coloring(g, order, k) : random_proper_coloring(g, order, k, seed));
    } else if (check->parsed()) {
      const auto g = load<Graph>(graph_path);
      bool violations = false;
      std::cout << "graph: n=" << g.n() << " m=" << g.edge_count() << '\n';
      std::cout << "chordal: " << (is_chordal(g) ? "yes" : "no") << '\n';
      try {
        reduce_width2(g);
        std::cout << "treewidth<=2: yes\n";
      } catch (const Error&) {
        std::cout << "treewidth<=2: no\n";
      }
      if (!coloring_path.empty()) {
        const bool proper = is_proper(g, load<Coloring>(coloring_path));
        std::cout << "coloring proper: " << (proper ? "yes" : "no") << '\n';
        violations |= !proper;
      }
      if (!td_path.empty()) {
        const auto problem = decomposition_problem(g, load<TreeDecomposition>(td_path), 2);
        std::cout << "decomposition: " << (problem.empty() ? "valid" : problem) << '\n';
        violations |= !problem.empty();
      }
      if (!seq_path.empty()) {
        const auto seq = load<RecoloringSequence>(seq_path);
        try {
          verify_sequence(g, seq);
          std::cout << "sequence: valid, " << seq.size() << " steps, max per-vertex "
                    << max_count(seq, g.n()) << '\n';
        } catch (const Error& e) {
          std::cout << "sequence: " << e.what() << '\n';
          violations = true;
        }
      }
      return violations ? 1 : 0;
    } else if (decompose->parsed()) {
      const auto g = load<Graph>(graph_path);
      emit(out_path, reduce_width2(g));
      if (!peo_out.empty()) write_json_file(peo_out, mcs_order(g));
    } else if (reduce->parsed()) {
      const auto g = load<Graph>(graph_path);
      const auto td = td_path.empty() ? reduce_width2(g) : load<TreeDecomposition>(td_path);
      const auto result = merge_same_colored(g, td, load<Coloring>(alpha_path));
      if (out_graph.empty() && out_map.empty() && out_coloring.empty() && out_td.empty()) {
        emit("", json{{"graph", result.h}, {"map", result.map}, {"coloring", result.alpha_h},
                      {"td", result.td_h}});
      }
      if (!out_graph.empty()) write_json_file(out_graph, result.h);
      if (!out_map.empty()) write_json_file(out_map, result.map);
      if (!out_coloring.empty()) write_json_file(out_coloring, result.alpha_h);
      if (!out_td.empty()) write_json_file(out_td, result.td_h);
    } else if (recolor_cmd->parsed()) {
      const auto g = load<Graph>(graph_path);
      const auto peo = peo_path.empty() ? mcs_order(g) : load<EliminationOrdering>(peo_path);
      const auto seq = best_choice_recoloring(g, peo, load<Coloring>(alpha_path),
                                              load<Coloring>(beta_path), k);
      if (trace) {
        for (const auto& s : seq.steps) std::cerr << s.vertex << " -> " << s.color << '\n';
      }
      emit(out_path, seq);
      std::cerr << seq.size() << " steps, max per-vertex " << max_count(seq, g.n()) << '\n';
    } else if (pipeline->parsed()) {
      const auto g = load<Graph>(graph_path);
      const auto seq = pipeline_theorem(g, load<Coloring>(alpha_path), load<Coloring>(beta_path));
      emit(out_path, seq);
      std::cerr << seq.size() << " steps, max per-vertex " << max_count(seq, g.n()) << '\n';
    } else if (distance->parsed()) {
      const auto g = load<Graph>(graph_path);
      const auto d = bfs_distance(g, k, load<Coloring>(alpha_path), load<Coloring>(beta_path),
                                  state_cap);
      if (d) {
        std::cout << *d << '\n';
      } else {
        std::cout << "unreachable\n";
      }
    } else if (connected->parsed()) {
      std::cout << (reconfig_connected(load<Graph>(graph_path), k, state_cap) ? "true" : "false")
                << '\n';
    } else if (diameter->parsed()) {
      const auto d = reconfig_diameter(load<Graph>(graph_path), k, state_cap);
      if (d) {
        std::cout << *d << '\n';
      } else {
        std::cout << "infinite\n";
      }
    } else if (audit->parsed()) {
      const auto g = load<Graph>(graph_path);
      const auto report = audit_best_choice(load<RecoloringSequence>(seq_path),
                                            load<EliminationOrdering>(peo_path), g);
      emit(out_path, report);
      return report.clean() ? 0 : 1;
    } else if (bench->parsed()) {
      ExperimentConfig config;
      config.family = parse_family(family);
      config.mode = parse_mode(mode);
      config.sizes = sizes;
      config.seeds = seeds;
      if (config.seeds.empty()) {
        for (int s = 1; s <= seed_count; ++s) config.seeds.push_back(static_cast<std::uint64_t>(s));
      }
      config.k = k;
      config.keep_prob = keep_prob;
      config.inject_k4 = inject_k4;
      config.state_cap = state_cap;
      config.threads = threads;
      const auto records = run_experiments(config);
      std::ofstream csv(out_path);
      if (!csv) throw Error(ErrorCode::Io, "cannot write " + out_path);
      write_csv(csv, records);
      const auto failed = std::count_if(records.begin(), records.end(),
                                        [](const ExperimentRecord& r) { return !r.ok; });
      std::cerr << records.size() << " instances, " << failed << " failed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
