#include "recolor/audit.hpp"

#include <algorithm>

#include "recolor/decomposition.hpp"
#include "recolor/error.hpp"

namespace recolor {

std::optional<Vertex> caused_by(const RecoloringSequence& seq, const EliminationOrdering& peo,
                                const Graph& g, std::size_t step_index) {
  if (step_index >= seq.steps.size()) {
    throw Error(ErrorCode::InvalidIndex, "step index out of range", step_index);
  }
  const auto out = out_neighbors(peo, g, seq.steps[step_index].vertex);
  for (std::size_t i = step_index + 1; i < seq.steps.size(); ++i) {
    if (std::find(out.begin(), out.end(), seq.steps[i].vertex) != out.end()) {
      return seq.steps[i].vertex;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> saved_positions(const std::vector<Vertex>& trace, Vertex v) {
  std::vector<std::size_t> saved;
  const auto first_v = std::find(trace.begin(), trace.end(), v);
  const auto last_v = std::find(trace.rbegin(), trace.rend(), v);
  const std::size_t first = static_cast<std::size_t>(first_v - trace.begin());
  const std::size_t last =
      last_v == trace.rend() ? trace.size() : trace.size() - 1 - (last_v - trace.rbegin());
  const bool has_v = first_v != trace.end();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i] == v) continue;
    const bool none_before = !has_v || first > i;
    const bool none_after = !has_v || last < i;
    const bool quiet_pair = i >= 2 && trace[i - 1] != v && trace[i - 2] != v;
    if (none_before || none_after || quiet_pair) saved.push_back(i);
  }
  return saved;
}

std::vector<std::size_t> saved_steps(const RecoloringSequence& seq, const EliminationOrdering& peo,
                                     const Graph& g, Vertex v) {
  auto members = out_neighbors(peo, g, v);
  members.push_back(v);
  std::vector<Vertex> trace;
  for (const auto& r : restrict(seq, members)) trace.push_back(r.step.vertex);
  return saved_positions(trace, v);
}

std::size_t AuditReport::saved_total() const {
  std::size_t total = 0;
  for (const auto& a : per_vertex) total += static_cast<std::size_t>(a.saved);
  return total;
}

void AuditReport::throw_if_violated() const {
  if (violations.empty()) return;
  const auto& first = violations.front();
  throw Error(ErrorCode::AuditViolation,
              "vertex " + std::to_string(first.vertex) + " rule " + std::to_string(first.rule) +
                  " at step " + std::to_string(first.index) + ": " + first.detail,
              first.index);
}

AuditReport audit_best_choice(const RecoloringSequence& seq, const EliminationOrdering& peo,
                              const Graph& g) {
  const int n = g.n();
  check_coloring_shape(g, seq.start);
  const auto out = out_neighborhoods(peo, g);
  std::vector<std::vector<Vertex>> in(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : out[v]) in[w].push_back(v);
  }

  // traces[v] lists the indices of steps recoloring a vertex of N+[v].
  std::vector<std::vector<std::size_t>> traces(n);
  std::vector<Color> before(seq.steps.size());
  Coloring cur = seq.start;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto [x, c] = seq.steps[i];
    if (x < 0 || x >= n) throw Error(ErrorCode::InvalidInput, "step names unknown vertex", i);
    before[i] = cur[x];
    cur[x] = c;
    traces[x].push_back(i);
    for (Vertex y : in[x]) traces[y].push_back(i);
  }
  const auto counts = recolor_counts(seq, n);

  AuditReport report;
  report.per_vertex.resize(n);
  std::vector<Vertex> trace;
  for (Vertex v = 0; v < n; ++v) {
    const auto& idx = traces[v];
    trace.clear();
    for (std::size_t i : idx) trace.push_back(seq.steps[i].vertex);
    const std::size_t len = trace.size();

    // Rule 1.
    for (std::size_t p = 0; p + 1 < len; ++p) {
      if (trace[p] == v && trace[p + 1] == v) {
        report.violations.push_back({v, 1, idx[p + 1], "pattern vv in N+[v] restriction"});
      }
      if (p + 2 < len && trace[p] == v && trace[p + 1] != v && trace[p + 2] == v &&
          p + 2 != len - 1) {
        report.violations.push_back({v, 1, idx[p + 2], "pattern vwv before the end"});
      }
    }

    // Rule 2, doubled to stay in integers: 2*count <= 2 - r + 2*ceil(m/2).
    auto& stats = report.per_vertex[v];
    stats.recolorings = counts[v];
    for (Vertex w : out[v]) stats.out_recolorings += counts[w];
    stats.saved = static_cast<int>(saved_positions(trace, v).size());
    const int m = stats.out_recolorings;
    if (2 * stats.recolorings > 2 - stats.saved + 2 * ((m + 1) / 2)) {
      report.violations.push_back(
          {v, 2, idx.empty() ? 0 : idx.back(),
           "count " + std::to_string(stats.recolorings) + " exceeds 1 - " +
               std::to_string(stats.saved) + "/2 + ceil(" + std::to_string(m) + "/2)"});
    }

    // Rule 3.
    if (out[v].size() == 2) {
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex a = out[v][flip];
        const Vertex b = out[v][1 - flip];
        PatternQuery q{{FixedToken{v}, FixedToken{a}, RunToken{b, 1}, FixedToken{v}}};
        for (std::size_t p : find_patterns(trace, q)) {
          std::size_t end = p + 2;
          while (trace[end] == b) ++end;
          const Color initial = before[idx[p]];
          const Color middle = seq.steps[idx[p]].color;
          const Color last = seq.steps[idx[end]].color;
          if (initial == middle || initial == last || middle == last) {
            report.violations.push_back(
                {v, 3, idx[end],
                 "colors " + std::to_string(initial) + "," + std::to_string(middle) + "," +
                     std::to_string(last) + " not pairwise distinct"});
          }
        }
      }
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const AuditViolation& x, const AuditViolation& y) { return x.index < y.index; });
  return report;
}

}  // namespace recolor
