#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

inline constexpr std::uint64_t kDefaultStateCap = 2'000'000;

// A proper k-coloring packed as the base-k integer sum (c_v - 1) * k^v.
using ReconfigState = std::uint64_t;

// Exhaustive searches over the reconfiguration graph whose nodes are the
// proper k-colorings of g and whose edges join colorings differing on one
// vertex. Every entry point throws TooLarge when k^n exceeds state_cap.
class ReconfigurationSpace {
 public:
  ReconfigurationSpace(const Graph& g, int k, std::uint64_t state_cap = kDefaultStateCap);

  std::uint64_t state_count() const { return states_; }
  ReconfigState encode(const Coloring& c) const;
  Coloring decode(ReconfigState s) const;
  bool proper(ReconfigState s) const;

  // Shortest number of recolorings from alpha to beta, nullopt if unreachable.
  std::optional<int> distance(const Coloring& alpha, const Coloring& beta) const;

  // Shortest transformation as a list of states, alpha first.
  std::optional<std::vector<ReconfigState>> shortest_path(const Coloring& alpha,
                                                          const Coloring& beta) const;

  bool connected() const;

  // Largest distance between two proper colorings, nullopt if disconnected.
  std::optional<int> diameter() const;

 private:
  template <typename Visit>
  void for_each_neighbour(ReconfigState s, Visit visit) const;
  struct Sweep {
    int eccentricity = 0;
    std::uint64_t reached = 0;
  };
  // BFS distances from `source` (-1 unreachable) into `dist`, sized states_.
  // Stops once `stop` is labelled.
  Sweep bfs(ReconfigState source, std::vector<std::int32_t>& dist,
            std::optional<ReconfigState> stop = std::nullopt,
            std::vector<ReconfigState>* parent = nullptr) const;
  std::vector<ReconfigState> proper_states() const;

  Graph g_;
  int k_;
  std::uint64_t states_;
  std::vector<std::uint64_t> place_;  // k^v
};

std::optional<int> bfs_distance(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                                std::uint64_t state_cap = kDefaultStateCap);
bool reconfig_connected(const Graph& g, int k, std::uint64_t state_cap = kDefaultStateCap);
std::optional<int> reconfig_diameter(const Graph& g, int k,
                                     std::uint64_t state_cap = kDefaultStateCap);

// k^n when it does not exceed cap, nullopt otherwise.
std::optional<std::uint64_t> bounded_power(int k, int n, std::uint64_t cap);

}  // namespace recolor
