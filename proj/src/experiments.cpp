#include "recolor/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "recolor/audit.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/chordal_reduction.hpp"
#include "recolor/decomposition.hpp"
#include "recolor/error.hpp"

namespace recolor {

Family parse_family(const std::string& name) {
  if (name == "chordal-omega3" || name == "chordal") return Family::Chordal;
  if (name == "2tree") return Family::TwoTree;
  if (name == "partial-2tree") return Family::Partial2Tree;
  throw Error(ErrorCode::InvalidInput, "unknown family " + name);
}

Mode parse_mode(const std::string& name) {
  if (name == "best-choice") return Mode::BestChoice;
  if (name == "pipeline") return Mode::Pipeline;
  throw Error(ErrorCode::InvalidInput, "unknown mode " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Chordal: return "chordal-omega3";
    case Family::TwoTree: return "2tree";
    case Family::Partial2Tree: return "partial-2tree";
  }
  return "?";
}

std::string mode_name(Mode m) { return m == Mode::BestChoice ? "best-choice" : "pipeline"; }

namespace {

constexpr std::uint64_t kAlphaSalt = 0xa1fa;
constexpr std::uint64_t kBetaSalt = 0xbe7a;

Graph build_graph(const ExperimentConfig& config, int n, std::uint64_t seed) {
  Graph g;
  switch (config.family) {
    case Family::Chordal: g = gen_chordal_omega3(n, seed); break;
    case Family::TwoTree: g = gen_2tree(n, seed); break;
    case Family::Partial2Tree: g = gen_partial_2tree(n, config.keep_prob, seed); break;
  }
  if (config.inject_k4 && g.n() >= 4) {
    for (Vertex a = 0; a < 4; ++a) {
      for (Vertex b = a + 1; b < 4; ++b) g.add_edge(a, b);
    }
  }
  return g;
}

void add_audit(ExperimentRecord& rec, const AuditReport& report) {
  rec.saved_total += report.saved_total();
  rec.audit_violations += report.violations.size();
}

}  // namespace

ExperimentRecord run_instance(const ExperimentConfig& config, int n, std::uint64_t seed) {
  ExperimentRecord rec;
  rec.family = config.family;
  rec.mode = config.mode;
  rec.n = n;
  rec.k = config.k;
  rec.seed = seed;
  rec.instance_id = family_name(config.family) + "-n" + std::to_string(n) + "-s" +
                    std::to_string(seed) + (config.inject_k4 ? "-k4" : "");
  const auto started = std::chrono::steady_clock::now();
  try {
    const Graph g = build_graph(config, n, seed);
    const EliminationOrdering order =
        config.family == Family::Partial2Tree ? degeneracy_order(g) : mcs_order(g);
    const Coloring alpha = random_proper_coloring(g, order, config.k, seed ^ kAlphaSalt);

    RecoloringSequence seq;
    Coloring beta;
    if (config.mode == Mode::BestChoice) {
      beta = greedy_coloring(g, order, config.k);
      seq = best_choice_recoloring(g, order, alpha, beta, config.k);
      add_audit(rec, audit_best_choice(seq, order, g));
    } else {
      beta = random_proper_coloring(g, order, config.k, seed ^ kBetaSalt);
      const PipelineResult result = pipeline_detailed(g, alpha, beta);
      for (const ChordalBranch* b : {&result.from_alpha, &result.from_beta}) {
        add_audit(rec, audit_best_choice(b->seq_h, b->peo_h, b->merge.h));
      }
      seq = result.sequence;
    }

    rec.length = seq.size();
    const auto counts = recolor_counts(seq, g.n());
    rec.max_count = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    if (verify_sequence(g, seq) != Coloring{seq.start.k, beta.colors}) {
      throw Error(ErrorCode::InvalidInput, "sequence does not end at beta");
    }
    rec.ok = rec.audit_violations == 0;
    if (!rec.ok) rec.error = "AuditViolation";

    if (bounded_power(config.k, g.n(), config.state_cap)) {
      rec.bfs_distance = bfs_distance(g, config.k, alpha, beta, config.state_cap);
      if (!rec.bfs_distance || static_cast<std::size_t>(*rec.bfs_distance) > rec.length) {
        rec.ok = false;
        rec.error = "OracleMismatch";
      }
    }
  } catch (const Error& e) {
    rec.ok = false;
    rec.error = std::string(error_code_name(e.code()));
  }
  rec.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

std::vector<ExperimentRecord> run_experiments(const ExperimentConfig& config) {
  std::vector<std::pair<int, std::uint64_t>> jobs;
  for (int n : config.sizes) {
    for (std::uint64_t seed : config.seeds) jobs.emplace_back(n, seed);
  }
  std::vector<ExperimentRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      records[i] = run_instance(config, jobs[i].first, jobs[i].second);
    }
  };
  const int threads = std::max(1, config.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "schema,instance,family,mode,n,k,seed,status,error,length,max_count,saved_total,"
         "audit_violations,bfs_distance,runtime_ms\n";
  for (const auto& r : records) {
    out << kCsvSchemaVersion << ',' << r.instance_id << ',' << family_name(r.family) << ','
        << mode_name(r.mode) << ',' << r.n << ',' << r.k << ',' << r.seed << ','
        << (r.ok ? "ok" : "error") << ',' << r.error << ',' << r.length << ',' << r.max_count << ','
        << r.saved_total << ',' << r.audit_violations << ',';
    if (r.bfs_distance) out << *r.bfs_distance;
    out << ',' << r.runtime_ms << '\n';
  }
}

}  // namespace recolor
