#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace recolor {

using Vertex = int;
using Color = int;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Duplicate edges are collapsed; self-loops and out-of-range endpoints throw
  // InvalidGraph.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

// Assignment of colors in {1..k} to every vertex.
struct Coloring {
  int k = 0;
  std::vector<Color> colors;

  int size() const { return static_cast<int>(colors.size()); }
  Color operator[](Vertex v) const { return colors[v]; }
  Color& operator[](Vertex v) { return colors[v]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// order[i] is the i-th eliminated vertex. For a perfect elimination ordering
// the neighbours of order[i] among order[i+1..] form a clique.
struct EliminationOrdering {
  std::vector<Vertex> order;

  int size() const { return static_cast<int>(order.size()); }
  // position()[v] is the index of v in order.
  std::vector<int> position() const;

  friend bool operator==(const EliminationOrdering&, const EliminationOrdering&) = default;
};

// Throws InvalidColoring when the assignment length differs from g.n() or a
// color lies outside {1..k}.
bool is_proper(const Graph& g, const Coloring& c);
void check_coloring_shape(const Graph& g, const Coloring& c);

// Triangle plus n-3 vertices, each attached to both ends of a uniformly random
// existing edge.
Graph gen_2tree(int n, std::uint64_t seed);

// gen_2tree(n, seed) with every edge kept independently with probability
// keep_prob.
Graph gen_partial_2tree(int n, double keep_prob, std::uint64_t seed);

// Vertex i attaches to a random clique of size 0, 1 or 2 among vertices
// 0..i-1, sizes drawn with the given relative weights. The construction order
// reversed is a perfect elimination ordering, so omega <= 3.
Graph gen_chordal_omega3(int n, std::uint64_t seed,
                         std::array<double, 3> size_weights = {1.0, 1.0, 1.0});

// Colors vertices from the back of `peo` to the front, each uniformly among
// the colors not used by already-colored neighbours.
Coloring random_proper_coloring(const Graph& g, const EliminationOrdering& peo, int k,
                                std::uint64_t seed);

// Same sweep as random_proper_coloring but always takes the smallest free
// color. Uses at most 1 + max later-degree colors.
Coloring greedy_coloring(const Graph& g, const EliminationOrdering& peo, int k);

}  // namespace recolor
