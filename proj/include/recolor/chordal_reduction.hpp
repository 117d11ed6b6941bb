#pragma once

#include <vector>

#include "recolor/decomposition.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

// Identification of original vertices into merged vertices.
struct MergeMap {
  std::vector<Vertex> to_merged;             // original vertex -> merged vertex
  std::vector<std::vector<Vertex>> classes;  // merged vertex -> ascending originals

  friend bool operator==(const MergeMap&, const MergeMap&) = default;
};

struct MergeResult {
  Graph h;
  MergeMap map;
  Coloring alpha_h;
  TreeDecomposition td_h;  // bags of the merged graph; every bag is a clique of h
};

// Merges same-colored vertices sharing a bag, one pair at a time, bags in
// index order and the smallest pair of a bag first, until every bag is
// rainbow; then turns every bag into a clique. The result is chordal with
// omega <= 3 and alpha_h is proper on it.
// Throws InvalidDecomposition or InvalidColoring on bad input.
MergeResult merge_same_colored(const Graph& g, const TreeDecomposition& td, const Coloring& alpha);

// Replaces each step (m, c) of a sequence on the merged graph by steps
// (x, c) for every x in class m, ascending. Throws LiftFailure if the result
// is not a valid sequence on g.
RecoloringSequence lift_sequence(const RecoloringSequence& seq_h, const MergeMap& map,
                                 const Graph& g);

// Moves gamma_s to gamma_t (both using colors 1..d+1) with k >= 2d+1 colors:
// X_i -> d+1+i for i = 1..d, then X_{d+1} to target, then X_1..X_d to target,
// X_i being the gamma_s class of color i. No-op steps are dropped, so every
// vertex is recolored at most twice. Throws InvalidInput.
RecoloringSequence two_phase_transform(const Graph& g, const Coloring& gamma_s,
                                       const Coloring& gamma_t, int d, int k);

// One chordalized branch of the pipeline: coloring -> 3-coloring on g.
struct ChordalBranch {
  MergeResult merge;
  EliminationOrdering peo_h;
  RecoloringSequence seq_h;  // best choice on the merged graph
  RecoloringSequence lifted;  // the same moves on g
};

ChordalBranch chordal_branch(const Graph& g, const TreeDecomposition& td, const Coloring& coloring);

struct PipelineResult {
  TreeDecomposition td;
  ChordalBranch from_alpha;  // alpha -> gamma_1
  ChordalBranch from_beta;   // beta -> gamma_2
  RecoloringSequence bridge;  // gamma_1 -> gamma_2
  RecoloringSequence sequence;  // alpha -> beta
};

// alpha -> gamma_1, gamma_1 -> gamma_2, gamma_2 -> beta, for a graph of
// treewidth <= 2 and two proper colorings with the same k >= 5. Throws
// NotWidth2 or InvalidInput.
PipelineResult pipeline_detailed(const Graph& g, const Coloring& alpha, const Coloring& beta);
RecoloringSequence pipeline_theorem(const Graph& g, const Coloring& alpha, const Coloring& beta);

}  // namespace recolor
