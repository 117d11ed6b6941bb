#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

// Upcoming recoloring of a neighbour: sequence position and the color it takes.
struct FutureEntry {
  std::size_t position;
  Color color;
};

struct FutureColorList {
  std::vector<FutureEntry> entries;  // positions strictly increasing
};

// Best choice among `valid` (ascending, nonempty) given the upcoming neighbour
// colors:
//   1. beta_u, when valid and never taken by a neighbour later;
//   2. otherwise the smallest valid color never taken later;
//   3. otherwise the valid color whose first upcoming use is the latest.
// Throws NoValidColor when `valid` is empty.
Color best_choice(std::span<const Color> valid, std::span<const FutureEntry> future, Color beta_u);

// best_choice with the valid set read off `current`: colors in 1..k other than
// u's own color and the colors of u's neighbours in g.
Color best_choice_color(Vertex u, const Coloring& current, const Graph& g,
                        const FutureColorList& future, Color beta_u, int k);

// Extends `seq`, which must not recolor u, to a sequence that also moves u
// from alpha_u to beta_u. u is recolored with a best choice right before each
// neighbour step that would take u's current color, and once more at the very
// end if it is not already at beta_u. Neighbours are u's neighbours in g; the
// number of colors is seq.start.k.
RecoloringSequence local_best_choice_extend(const Graph& g, Vertex u, Color alpha_u, Color beta_u,
                                            const RecoloringSequence& seq);

// Local best choice applied to peo[n-1], ..., peo[0] in turn. Requires `peo`
// perfect for g, alpha and beta proper with colors in 1..k, and
// k >= 2 + max later-degree. Throws InvalidInput otherwise.
RecoloringSequence best_choice_recoloring(const Graph& g, const EliminationOrdering& peo,
                                          const Coloring& alpha, const Coloring& beta, int k);

}  // namespace recolor
