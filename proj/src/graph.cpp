#include "recolor/graph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "recolor/error.hpp"

namespace recolor {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " out of range");
  }
}

void check_permutation(const EliminationOrdering& peo, int n) {
  if (peo.size() != n) {
    throw Error(ErrorCode::InvalidOrdering, "ordering length differs from vertex count");
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : peo.order) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::InvalidOrdering, "ordering is not a permutation");
    }
    seen[v] = 1;
  }
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidSize, "negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adj_) twice += list.size();
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(n(), u);
  check_vertex(n(), v);
  if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
  auto& lu = adj_[u];
  auto it = std::lower_bound(lu.begin(), lu.end(), v);
  if (it != lu.end() && *it == v) return false;
  lu.insert(it, v);
  auto& lv = adj_[v];
  lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
  return true;
}

std::vector<int> EliminationOrdering::position() const {
  std::vector<int> pos(order.size(), -1);
  for (int i = 0; i < size(); ++i) pos[order[i]] = i;
  return pos;
}

void check_coloring_shape(const Graph& g, const Coloring& c) {
  if (c.size() != g.n()) {
    throw Error(ErrorCode::InvalidColoring,
                "coloring has " + std::to_string(c.size()) + " entries for " +
                    std::to_string(g.n()) + " vertices");
  }
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] < 1 || c[v] > c.k) {
      throw Error(ErrorCode::InvalidColoring,
                  "vertex " + std::to_string(v) + " has color " + std::to_string(c[v]) +
                      " outside 1.." + std::to_string(c.k),
                  static_cast<std::size_t>(v));
    }
  }
}

bool is_proper(const Graph& g, const Coloring& c) {
  check_coloring_shape(g, c);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (c[u] == c[v]) return false;
    }
  }
  return true;
}

Graph gen_2tree(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "a 2-tree needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {0, 2}, {1, 2}};
  edges.reserve(2 * static_cast<std::size_t>(n) - 3);
  for (Vertex v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    auto [a, b] = edges[pick(rng)];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
  }
  return Graph(n, edges);
}

Graph gen_partial_2tree(int n, double keep_prob, std::uint64_t seed) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) {
    throw Error(ErrorCode::InvalidInput, "keep_prob must lie in [0, 1]");
  }
  Graph full = gen_2tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution keep(keep_prob);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto e : full.edges()) {
    if (keep(rng)) kept.push_back(e);
  }
  return Graph(n, kept);
}

Graph gen_chordal_omega3(int n, std::uint64_t seed, std::array<double, 3> size_weights) {
  if (n < 0) throw Error(ErrorCode::InvalidSize, "negative vertex count");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> size_dist(size_weights.begin(), size_weights.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) {
    int size = size_dist(rng);
    if (size == 2 && edges.empty()) size = 1;
    if (size == 1) {
      std::uniform_int_distribution<Vertex> pick(0, v - 1);
      edges.emplace_back(pick(rng), v);
    } else if (size == 2) {
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      auto [a, b] = edges[pick(rng)];
      edges.emplace_back(a, v);
      edges.emplace_back(b, v);
    }
  }
  return Graph(n, edges);
}

namespace {

template <typename Choose>
Coloring sweep_coloring(const Graph& g, const EliminationOrdering& peo, int k, Choose choose) {
  check_permutation(peo, g.n());
  if (k < 1 && g.n() > 0) throw Error(ErrorCode::NotEnoughColors, "k must be positive");
  Coloring c{k, std::vector<Color>(g.n(), 0)};
  std::vector<Color> free_colors;
  std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
  for (auto it = peo.order.rbegin(); it != peo.order.rend(); ++it) {
    Vertex v = *it;
    std::fill(used.begin(), used.end(), 0);
    for (Vertex w : g.neighbors(v)) used[c[w]] = 1;  // uncolored entries mark slot 0
    free_colors.clear();
    for (Color col = 1; col <= k; ++col) {
      if (!used[col]) free_colors.push_back(col);
    }
    if (free_colors.empty()) {
      throw Error(ErrorCode::NotEnoughColors,
                  "no free color for vertex " + std::to_string(v), static_cast<std::size_t>(v));
    }
    c[v] = choose(free_colors);
  }
  return c;
}

}  // namespace

Coloring random_proper_coloring(const Graph& g, const EliminationOrdering& peo, int k,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sweep_coloring(g, peo, k, [&](const std::vector<Color>& free_colors) {
    std::uniform_int_distribution<std::size_t> pick(0, free_colors.size() - 1);
    return free_colors[pick(rng)];
  });
}

Coloring greedy_coloring(const Graph& g, const EliminationOrdering& peo, int k) {
  return sweep_coloring(g, peo, k,
                        [](const std::vector<Color>& free_colors) { return free_colors.front(); });
}

}  // namespace recolor
