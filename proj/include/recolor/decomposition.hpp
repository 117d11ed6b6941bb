#pragma once

#include <string>
#include <utility>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;        // each bag sorted
  std::vector<std::pair<int, int>> tree_edges;  // node index pairs

  int width() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

// Reverse of a maximum cardinality search visit order, ties to the lowest
// vertex index. A perfect elimination ordering whenever g is chordal.
EliminationOrdering mcs_order(const Graph& g);

// Repeatedly removes a minimum-degree vertex (lowest index on ties). Each vertex
// has at most `degeneracy` later neighbours.
EliminationOrdering degeneracy_order(const Graph& g);

bool is_perfect_elimination(const Graph& g, const EliminationOrdering& order);

bool is_chordal(const Graph& g);

// 1 + max later-degree along `peo`. Throws NotPEO when `peo` is not perfect.
int clique_number_chordal(const Graph& g, const EliminationOrdering& peo);

// Width-2 tree decomposition by eliminating vertices of degree <= 2 (lowest
// index first), filling the chord between the two neighbours of a degree-2
// vertex. Throws NotWidth2 when every remaining vertex has degree >= 3.
TreeDecomposition reduce_width2(const Graph& g);

// Empty string when td is a tree decomposition of g of width <= max_width,
// otherwise a description of the first broken property.
std::string decomposition_problem(const Graph& g, const TreeDecomposition& td, int max_width = 2);

// Later neighbours of v along `peo`. Throws OmegaTooLarge for more than two.
std::vector<Vertex> out_neighbors(const EliminationOrdering& peo, const Graph& g, Vertex v);

// out_neighbors for every vertex at once.
std::vector<std::vector<Vertex>> out_neighborhoods(const EliminationOrdering& peo, const Graph& g);

}  // namespace recolor
