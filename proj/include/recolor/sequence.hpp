#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

struct Step {
  Vertex vertex = 0;
  Color color = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

struct RecoloringSequence {
  Coloring start;
  std::vector<Step> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }

  friend bool operator==(const RecoloringSequence&, const RecoloringSequence&) = default;
};

// Replays seq on g and returns the final coloring. Throws ImproperStart,
// NoOpStep(i) or ImproperStep(i).
Coloring verify_sequence(const Graph& g, const RecoloringSequence& seq);

// Final coloring without any properness check.
Coloring final_coloring(const RecoloringSequence& seq);

// Same transformation walked backwards, starting from the final coloring.
RecoloringSequence reverse(const RecoloringSequence& seq);

// Appends `tail` to `head`. Throws InvalidInput if tail does not start where
// head ends.
RecoloringSequence concatenate(const RecoloringSequence& head, const RecoloringSequence& tail);

// Steps of seq recoloring a vertex of `members`, in order.
struct RestrictedStep {
  std::size_t index;  // position in the full sequence
  Step step;
};
std::vector<RestrictedStep> restrict(const RecoloringSequence& seq,
                                     const std::vector<Vertex>& members);

// recolor_counts(seq, n)[v] == restrict(seq, {v}).size().
std::vector<int> recolor_counts(const RecoloringSequence& seq, int n);

// Pattern tokens: a fixed vertex, a run v^{>=r} of one vertex, or r
// consecutive copies of a block of vertices.
struct FixedToken {
  Vertex vertex;
};
struct RunToken {
  Vertex vertex;
  int min_repeat;
};
struct BlockToken {
  std::vector<Vertex> block;
  int repeat;
};
using PatternToken = std::variant<FixedToken, RunToken, BlockToken>;

struct PatternQuery {
  std::vector<PatternToken> tokens;
};

// Start indices of every (possibly overlapping) occurrence of q in trace. A run
// token consumes the whole maximal run of its vertex; when it opens the pattern
// the run must also start there.
std::vector<std::size_t> find_patterns(const std::vector<Vertex>& trace, const PatternQuery& q);

}  // namespace recolor
