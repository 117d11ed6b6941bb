#include "recolor/sequence.hpp"

#include <algorithm>

#include "recolor/error.hpp"

namespace recolor {

Coloring verify_sequence(const Graph& g, const RecoloringSequence& seq) {
  check_coloring_shape(g, seq.start);
  if (!is_proper(g, seq.start)) throw Error(ErrorCode::ImproperStart, "start coloring not proper");
  Coloring cur = seq.start;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    auto [v, c] = seq.steps[i];
    if (v < 0 || v >= g.n()) {
      throw Error(ErrorCode::ImproperStep, "step " + std::to_string(i) + " names unknown vertex", i);
    }
    if (c < 1 || c > cur.k) {
      throw Error(ErrorCode::ImproperStep, "step " + std::to_string(i) + " uses color out of range",
                  i);
    }
    if (cur[v] == c) {
      throw Error(ErrorCode::NoOpStep, "step " + std::to_string(i) + " keeps the color of vertex " +
                                           std::to_string(v),
                  i);
    }
    for (Vertex w : g.neighbors(v)) {
      if (cur[w] == c) {
        throw Error(ErrorCode::ImproperStep,
                    "step " + std::to_string(i) + " gives " + std::to_string(v) +
                        " the color of neighbour " + std::to_string(w),
                    i);
      }
    }
    cur[v] = c;
  }
  return cur;
}

Coloring final_coloring(const RecoloringSequence& seq) {
  Coloring cur = seq.start;
  for (auto [v, c] : seq.steps) cur[v] = c;
  return cur;
}

RecoloringSequence reverse(const RecoloringSequence& seq) {
  std::vector<Color> before;
  before.reserve(seq.steps.size());
  Coloring cur = seq.start;
  for (auto [v, c] : seq.steps) {
    before.push_back(cur[v]);
    cur[v] = c;
  }
  RecoloringSequence out{cur, {}};
  out.steps.reserve(seq.steps.size());
  for (std::size_t i = seq.steps.size(); i-- > 0;) {
    out.steps.push_back({seq.steps[i].vertex, before[i]});
  }
  return out;
}

RecoloringSequence concatenate(const RecoloringSequence& head, const RecoloringSequence& tail) {
  if (final_coloring(head) != tail.start) {
    throw Error(ErrorCode::InvalidInput, "sequences do not join");
  }
  RecoloringSequence out = head;
  out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
  return out;
}

std::vector<RestrictedStep> restrict(const RecoloringSequence& seq,
                                     const std::vector<Vertex>& members) {
  std::vector<RestrictedStep> out;
  const Vertex top = members.empty() ? 0 : *std::max_element(members.begin(), members.end()) + 1;
  std::vector<char> in(static_cast<std::size_t>(std::max(top, 0)), 0);
  for (Vertex v : members) {
    if (v >= 0) in[v] = 1;
  }
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const Vertex v = seq.steps[i].vertex;
    if (v >= 0 && v < top && in[v]) {
      out.push_back({i, seq.steps[i]});
    }
  }
  return out;
}

std::vector<int> recolor_counts(const RecoloringSequence& seq, int n) {
  std::vector<int> counts(n, 0);
  for (const auto& s : seq.steps) ++counts[s.vertex];
  return counts;
}

namespace {

// Position just past the match of `token` at `pos`, or nullopt.
std::optional<std::size_t> match_token(const std::vector<Vertex>& trace, std::size_t pos,
                                       const PatternToken& token, bool opening) {
  if (const auto* fixed = std::get_if<FixedToken>(&token)) {
    if (pos < trace.size() && trace[pos] == fixed->vertex) return pos + 1;
    return std::nullopt;
  }
  if (const auto* run = std::get_if<RunToken>(&token)) {
    if (opening && pos > 0 && trace[pos - 1] == run->vertex) return std::nullopt;
    std::size_t end = pos;
    while (end < trace.size() && trace[end] == run->vertex) ++end;
    if (end - pos < static_cast<std::size_t>(std::max(run->min_repeat, 1))) return std::nullopt;
    return end;
  }
  const auto& block = std::get<BlockToken>(token);
  std::size_t at = pos;
  for (int r = 0; r < block.repeat; ++r) {
    for (Vertex v : block.block) {
      if (at >= trace.size() || trace[at] != v) return std::nullopt;
      ++at;
    }
  }
  return at;
}

}  // namespace

std::vector<std::size_t> find_patterns(const std::vector<Vertex>& trace, const PatternQuery& q) {
  std::vector<std::size_t> hits;
  if (q.tokens.empty()) return hits;
  for (std::size_t start = 0; start < trace.size(); ++start) {
    std::optional<std::size_t> pos = start;
    for (std::size_t t = 0; t < q.tokens.size() && pos; ++t) {
      pos = match_token(trace, *pos, q.tokens[t], t == 0);
    }
    if (pos && *pos > start) hits.push_back(start);
  }
  return hits;
}

}  // namespace recolor
