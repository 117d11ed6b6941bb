#include "recolor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "recolor/error.hpp"

namespace recolor {

std::optional<std::uint64_t> bounded_power(int k, int n, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 0; i < n; ++i) {
    if (k != 0 && value > cap / static_cast<std::uint64_t>(k)) return std::nullopt;
    value *= static_cast<std::uint64_t>(k);
  }
  if (value > cap) return std::nullopt;
  return value;
}

ReconfigurationSpace::ReconfigurationSpace(const Graph& g, int k, std::uint64_t state_cap)
    : g_(g), k_(k) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "k must be positive");
  auto states = bounded_power(k, g.n(), state_cap);
  if (!states) {
    throw Error(ErrorCode::TooLarge, std::to_string(k) + "^" + std::to_string(g.n()) +
                                         " colorings exceed the state cap of " +
                                         std::to_string(state_cap));
  }
  states_ = *states;
  place_.resize(g.n());
  std::uint64_t p = 1;
  for (int v = 0; v < g.n(); ++v, p *= static_cast<std::uint64_t>(k)) place_[v] = p;
}

ReconfigState ReconfigurationSpace::encode(const Coloring& c) const {
  if (c.size() != g_.n()) throw Error(ErrorCode::InvalidColoring, "coloring length mismatch");
  ReconfigState s = 0;
  for (Vertex v = 0; v < g_.n(); ++v) {
    if (c[v] < 1 || c[v] > k_) throw Error(ErrorCode::InvalidColoring, "color outside 1..k");
    s += static_cast<std::uint64_t>(c[v] - 1) * place_[v];
  }
  return s;
}

Coloring ReconfigurationSpace::decode(ReconfigState s) const {
  Coloring c{k_, std::vector<Color>(g_.n())};
  for (Vertex v = 0; v < g_.n(); ++v) {
    c[v] = static_cast<Color>(s % static_cast<std::uint64_t>(k_)) + 1;
    s /= static_cast<std::uint64_t>(k_);
  }
  return c;
}

bool ReconfigurationSpace::proper(ReconfigState s) const { return is_proper(g_, decode(s)); }

template <typename Visit>
void ReconfigurationSpace::for_each_neighbour(ReconfigState s, Visit visit) const {
  const Coloring c = decode(s);
  for (Vertex v = 0; v < g_.n(); ++v) {
    for (Color col = 1; col <= k_; ++col) {
      if (col == c[v]) continue;
      bool clash = false;
      for (Vertex w : g_.neighbors(v)) {
        if (c[w] == col) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      const ReconfigState next =
          s - static_cast<std::uint64_t>(c[v] - 1) * place_[v] +
          static_cast<std::uint64_t>(col - 1) * place_[v];
      visit(next);
    }
  }
}

ReconfigurationSpace::Sweep ReconfigurationSpace::bfs(ReconfigState source,
                                                      std::vector<std::int32_t>& dist,
                                                      std::optional<ReconfigState> stop,
                                                      std::vector<ReconfigState>* parent) const {
  dist.assign(states_, -1);
  if (parent) parent->assign(states_, source);
  Sweep sweep;
  std::deque<ReconfigState> queue = {source};
  dist[source] = 0;
  sweep.reached = 1;
  while (!queue.empty()) {
    const ReconfigState s = queue.front();
    queue.pop_front();
    sweep.eccentricity = std::max(sweep.eccentricity, dist[s]);
    if (stop && s == *stop) break;
    for_each_neighbour(s, [&](ReconfigState next) {
      if (dist[next] >= 0) return;
      dist[next] = dist[s] + 1;
      if (parent) (*parent)[next] = s;
      ++sweep.reached;
      queue.push_back(next);
    });
  }
  return sweep;
}

std::vector<ReconfigState> ReconfigurationSpace::proper_states() const {
  std::vector<ReconfigState> out;
  for (ReconfigState s = 0; s < states_; ++s) {
    if (proper(s)) out.push_back(s);
  }
  return out;
}

std::optional<int> ReconfigurationSpace::distance(const Coloring& alpha,
                                                  const Coloring& beta) const {
  const ReconfigState a = encode(alpha);
  const ReconfigState b = encode(beta);
  if (!proper(a) || !proper(b)) throw Error(ErrorCode::InvalidColoring, "endpoints must be proper");
  std::vector<std::int32_t> dist;
  bfs(a, dist, b);
  if (dist[b] < 0) return std::nullopt;
  return dist[b];
}

std::optional<std::vector<ReconfigState>> ReconfigurationSpace::shortest_path(
    const Coloring& alpha, const Coloring& beta) const {
  const ReconfigState a = encode(alpha);
  const ReconfigState b = encode(beta);
  if (!proper(a) || !proper(b)) throw Error(ErrorCode::InvalidColoring, "endpoints must be proper");
  std::vector<std::int32_t> dist;
  std::vector<ReconfigState> parent;
  bfs(a, dist, b, &parent);
  if (dist[b] < 0) return std::nullopt;
  std::vector<ReconfigState> path = {b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool ReconfigurationSpace::connected() const {
  const auto all = proper_states();
  if (all.size() <= 1) return true;
  std::vector<std::int32_t> dist;
  return bfs(all.front(), dist).reached == all.size();
}

std::optional<int> ReconfigurationSpace::diameter() const {
  const auto all = proper_states();
  if (all.empty()) return 0;
  std::vector<std::int32_t> dist;
  if (bfs(all.front(), dist).reached != all.size()) return std::nullopt;
  // Permuting colors is an automorphism of the reconfiguration graph, so it is
  // enough to sweep from colorings whose colors first appear in order 1, 2, ...
  int best = 0;
  for (ReconfigState s : all) {
    const Coloring c = decode(s);
    Color next_new = 1;
    bool canonical = true;
    for (Color col : c.colors) {
      if (col > next_new) {
        canonical = false;
        break;
      }
      if (col == next_new) ++next_new;
    }
    if (!canonical) continue;
    best = std::max(best, bfs(s, dist).eccentricity);
  }
  return best;
}

std::optional<int> bfs_distance(const Graph& g, int k, const Coloring& alpha, const Coloring& beta,
                                std::uint64_t state_cap) {
  return ReconfigurationSpace(g, k, state_cap).distance(alpha, beta);
}

bool reconfig_connected(const Graph& g, int k, std::uint64_t state_cap) {
  return ReconfigurationSpace(g, k, state_cap).connected();
}

std::optional<int> reconfig_diameter(const Graph& g, int k, std::uint64_t state_cap) {
  return ReconfigurationSpace(g, k, state_cap).diameter();
}

}  // namespace recolor
