#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

// Vertex recolored by the first step after `step_index` that touches the
// out-neighbourhood of the vertex recolored at `step_index`. Throws
// InvalidIndex when step_index is out of range.
std::optional<Vertex> caused_by(const RecoloringSequence& seq, const EliminationOrdering& peo,
                                const Graph& g, std::size_t step_index);

// Positions i of `trace` (the N+[v] restriction, as vertices) recoloring an
// out-neighbour of v such that v is never recolored before i, or never after i,
// or the two previous positions exist and both recolor out-neighbours.
std::vector<std::size_t> saved_positions(const std::vector<Vertex>& trace, Vertex v);

// saved_positions on restrict(seq, N+[v]).
std::vector<std::size_t> saved_steps(const RecoloringSequence& seq, const EliminationOrdering& peo,
                                     const Graph& g, Vertex v);

struct AuditViolation {
  Vertex vertex;
  int rule;           // 1: vv / vwv patterns, 2: recolor-count inequality, 3: color distinctness
  std::size_t index;  // step index in the full sequence
  std::string detail;
};

struct VertexAudit {
  int recolorings = 0;
  int out_recolorings = 0;  // sum of recolor counts over N+(v)
  int saved = 0;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  std::vector<VertexAudit> per_vertex;

  bool clean() const { return violations.empty(); }
  std::size_t saved_total() const;
  // Throws AuditViolation naming the first violation.
  void throw_if_violated() const;
};

// Checks, for every vertex v of a best-choice recoloring along `peo`:
//  1. restrict(seq, N+[v]) never recolors v twice in a row, and v,w,v with
//     w in N+(v) appears only as its last three steps;
//  2. count(v) <= 1 - r/2 + ceil(m/2) with r saved steps and m the total
//     recolorings of N+(v), evaluated exactly;
//  3. whenever restrict(seq, N+[v]) reads v, a, b^{>=1}, v with {a,b} = N+(v),
//     the colors of v before, between and after are pairwise distinct.
AuditReport audit_best_choice(const RecoloringSequence& seq, const EliminationOrdering& peo,
                              const Graph& g);

}  // namespace recolor
