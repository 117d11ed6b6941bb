#pragma once

// Slow, definition-level oracles used only by the tests. None of these share
// code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "recolor/decomposition.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace oracle {

using recolor::Coloring;
using recolor::Graph;
using recolor::Vertex;

// Chordal iff no vertex subset of size >= 4 induces a cycle.
inline bool brute_force_chordal(const Graph& g) {
  const int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 4) continue;
    bool all_two = true;
    int first = -1;
    for (int v = 0; v < n && all_two; ++v) {
      if (!(mask >> v & 1)) continue;
      if (first < 0) first = v;
      int deg = 0;
      for (Vertex w : g.neighbors(v)) deg += (mask >> w) & 1;
      all_two = deg == 2;
    }
    if (!all_two) continue;
    // 2-regular: an induced cycle iff connected.
    std::uint32_t seen = 1u << first;
    std::vector<int> stack = {first};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if ((mask >> w & 1) && !(seen >> w & 1)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) return false;
  }
  return true;
}

// Largest clique, searching subsets of size up to `limit`.
inline int max_clique_up_to(const Graph& g, int limit) {
  const int n = g.n();
  int best = n > 0 ? 1 : 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(pick.size()));
    if (static_cast<int>(pick.size()) == limit) return;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : pick) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// Tree decomposition check via counting: in a tree, the nodes holding v form a
// connected subtree iff they span exactly (count - 1) tree edges.
inline bool valid_tree_decomposition(const Graph& g, const recolor::TreeDecomposition& td,
                                     int max_bag) {
  const int nodes = static_cast<int>(td.bags.size());
  if (g.n() == 0) return nodes == 0 || td.tree_edges.size() + 1 == td.bags.size();
  if (nodes == 0 || static_cast<int>(td.tree_edges.size()) != nodes - 1) return false;
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : td.tree_edges) {
    if (find(a) == find(b)) return false;
    parent[find(a)] = find(b);
  }
  auto holds = [&](int node, Vertex v) {
    const auto& bag = td.bags[node];
    return std::find(bag.begin(), bag.end(), v) != bag.end();
  };
  for (const auto& bag : td.bags) {
    if (static_cast<int>(bag.size()) > max_bag) return false;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int count = 0, spanned = 0;
    for (int i = 0; i < nodes; ++i) count += holds(i, v);
    for (auto [a, b] : td.tree_edges) spanned += holds(a, v) && holds(b, v);
    if (count == 0 || spanned != count - 1) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i = 0; i < nodes && !covered; ++i) covered = holds(i, u) && holds(i, v);
    if (!covered) return false;
  }
  return true;
}

// Bidirectional BFS over colorings stored as plain vectors.
inline std::optional<int> bidirectional_distance(const Graph& g, int k, const Coloring& a,
                                                 const Coloring& b) {
  using State = std::vector<int>;
  if (a.colors == b.colors) return 0;
  std::map<State, int> da{{a.colors, 0}}, db{{b.colors, 0}};
  std::deque<State> qa{a.colors}, qb{b.colors};
  auto expand = [&](std::deque<State>& q, std::map<State, int>& mine,
                    const std::map<State, int>& other) -> std::optional<int> {
    std::optional<int> best;
    const std::size_t layer = q.size();
    for (std::size_t i = 0; i < layer; ++i) {
      State s = q.front();
      q.pop_front();
      const int d = mine[s];
      for (Vertex v = 0; v < g.n(); ++v) {
        const int old = s[v];
        for (int c = 1; c <= k; ++c) {
          if (c == old) continue;
          bool ok = true;
          for (Vertex w : g.neighbors(v)) ok = ok && s[w] != c;
          if (!ok) continue;
          s[v] = c;
          if (!mine.count(s)) {
            mine[s] = d + 1;
            if (auto it = other.find(s); it != other.end()) {
              const int total = d + 1 + it->second;
              if (!best || total < *best) best = total;
            }
            q.push_back(s);
          }
          s[v] = old;
        }
      }
    }
    return best;
  };
  while (!qa.empty() && !qb.empty()) {
    auto hit = qa.size() <= qb.size() ? expand(qa, da, db) : expand(qb, db, da);
    if (hit) return hit;
  }
  return std::nullopt;
}

// Saved steps straight from the definition, with global step indices.
inline std::vector<std::size_t> saved_by_definition(const recolor::RecoloringSequence& seq,
                                                    const std::vector<Vertex>& out, Vertex v) {
  std::vector<std::size_t> restricted;  // global indices of N+[v] steps
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const Vertex x = seq.steps[i].vertex;
    if (x == v || std::find(out.begin(), out.end(), x) != out.end()) restricted.push_back(i);
  }
  std::vector<std::size_t> saved;
  for (std::size_t p = 0; p < restricted.size(); ++p) {
    const std::size_t i = restricted[p];
    if (seq.steps[i].vertex == v) continue;
    bool before = false, after = false;
    for (std::size_t j = 0; j <= i; ++j) before = before || seq.steps[j].vertex == v;
    for (std::size_t j = i; j < seq.steps.size(); ++j) after = after || seq.steps[j].vertex == v;
    bool quiet = p >= 2 && seq.steps[restricted[p - 1]].vertex != v &&
                 seq.steps[restricted[p - 2]].vertex != v;
    if (!before || !after || quiet) saved.push_back(p);
  }
  return saved;
}

// Random graph on n vertices with edge probability p.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

}  // namespace oracle
