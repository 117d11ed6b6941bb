#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "recolor/oracle.hpp"

namespace recolor {

enum class Family { Chordal, TwoTree, Partial2Tree };
enum class Mode { BestChoice, Pipeline };

Family parse_family(const std::string& name);  // chordal-omega3 | 2tree | partial-2tree
Mode parse_mode(const std::string& name);      // best-choice | pipeline
std::string family_name(Family f);
std::string mode_name(Mode m);

struct ExperimentConfig {
  Family family = Family::Chordal;
  Mode mode = Mode::BestChoice;
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  int k = 5;
  double keep_prob = 0.6;
  bool inject_k4 = false;  // add a K4 on vertices 0..3 to every instance
  std::uint64_t state_cap = kDefaultStateCap;
  int threads = 1;
};

struct ExperimentRecord {
  std::string instance_id;
  Family family = Family::Chordal;
  Mode mode = Mode::BestChoice;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;  // error code name when !ok
  std::size_t length = 0;
  int max_count = 0;
  std::size_t saved_total = 0;
  std::size_t audit_violations = 0;
  std::optional<int> bfs_distance;
  double runtime_ms = 0.0;
};

// One instance: build the graph and the two colorings, run the chosen
// algorithm, verify, audit, and cross-check against BFS when k^n fits the cap.
// Failures are recorded in the returned record.
ExperimentRecord run_instance(const ExperimentConfig& config, int n, std::uint64_t seed);

// Every (size, seed) pair, records in (size, seed) order.
std::vector<ExperimentRecord> run_experiments(const ExperimentConfig& config);

inline constexpr int kCsvSchemaVersion = 1;
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace recolor
