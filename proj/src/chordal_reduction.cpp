#include "recolor/chordal_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "recolor/best_choice.hpp"
#include "recolor/error.hpp"

namespace recolor {

MergeResult merge_same_colored(const Graph& g, const TreeDecomposition& td, const Coloring& alpha) {
  if (auto problem = decomposition_problem(g, td, 2); !problem.empty()) {
    throw Error(ErrorCode::InvalidDecomposition, problem);
  }
  if (!is_proper(g, alpha)) throw Error(ErrorCode::InvalidColoring, "alpha is not proper");

  const int n = g.n();
  // rep[v] == v for representatives; a representative is the smallest vertex
  // of its class.
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](Vertex v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };

  auto bags = td.bags;
  std::vector<std::vector<int>> holders(n);
  for (int b = 0; b < static_cast<int>(bags.size()); ++b) {
    for (Vertex v : bags[b]) holders[v].push_back(b);
  }

  // Merging y into x only renames y inside other bags, which keeps their color
  // multisets, so bags already scanned stay rainbow.
  for (auto& bag : bags) {
    for (;;) {
      Vertex x = -1, y = -1;
      for (std::size_t i = 0; i < bag.size() && x < 0; ++i) {
        for (std::size_t j = i + 1; j < bag.size(); ++j) {
          if (alpha[bag[i]] == alpha[bag[j]]) {
            x = bag[i];
            y = bag[j];
            break;
          }
        }
      }
      if (x < 0) break;
      rep[y] = x;
      for (int b : holders[y]) {
        auto& other = bags[b];
        std::replace(other.begin(), other.end(), y, x);
        std::sort(other.begin(), other.end());
        other.erase(std::unique(other.begin(), other.end()), other.end());
        if (std::find(holders[x].begin(), holders[x].end(), b) == holders[x].end()) {
          holders[x].push_back(b);
        }
      }
      holders[y].clear();
    }
  }

  MergeResult out;
  std::vector<Vertex> id(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    if (id[r] < 0) {
      id[r] = static_cast<Vertex>(out.map.classes.size());
      out.map.classes.emplace_back();
    }
    out.map.classes[id[r]].push_back(v);
  }
  out.map.to_merged.resize(n);
  for (Vertex v = 0; v < n; ++v) out.map.to_merged[v] = id[find(v)];

  const int m = static_cast<int>(out.map.classes.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(out.map.to_merged[u], out.map.to_merged[v]);
  out.td_h.tree_edges = td.tree_edges;
  for (auto& bag : bags) {
    std::vector<Vertex> merged;
    for (Vertex v : bag) merged.push_back(id[v]);
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i < merged.size(); ++i) {
      for (std::size_t j = i + 1; j < merged.size(); ++j) edges.emplace_back(merged[i], merged[j]);
    }
    out.td_h.bags.push_back(std::move(merged));
  }
  out.h = Graph(m, edges);
  out.alpha_h.k = alpha.k;
  for (const auto& cls : out.map.classes) out.alpha_h.colors.push_back(alpha[cls.front()]);
  return out;
}

RecoloringSequence lift_sequence(const RecoloringSequence& seq_h, const MergeMap& map,
                                 const Graph& g) {
  if (static_cast<int>(map.to_merged.size()) != g.n()) {
    throw Error(ErrorCode::LiftFailure, "merge map does not cover the graph");
  }
  const int m = static_cast<int>(map.classes.size());
  if (seq_h.start.size() != m) {
    throw Error(ErrorCode::LiftFailure, "sequence does not live on the merged graph");
  }
  RecoloringSequence out{{seq_h.start.k, std::vector<Color>(g.n())}, {}};
  for (Vertex v = 0; v < g.n(); ++v) {
    const Vertex mv = map.to_merged[v];
    if (mv < 0 || mv >= m) throw Error(ErrorCode::LiftFailure, "merge map out of range");
    out.start[v] = seq_h.start[mv];
  }
  for (const Step& s : seq_h.steps) {
    if (s.vertex < 0 || s.vertex >= m) throw Error(ErrorCode::LiftFailure, "step out of range");
    for (Vertex v : map.classes[s.vertex]) out.steps.push_back({v, s.color});
  }
  try {
    verify_sequence(g, out);
  } catch (const Error& e) {
    throw Error(ErrorCode::LiftFailure, e.what(), e.index());
  }
  return out;
}

RecoloringSequence two_phase_transform(const Graph& g, const Coloring& gamma_s,
                                       const Coloring& gamma_t, int d, int k) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidInput, why); };
  if (d < 1) fail("d must be at least 1");
  if (k < 2 * d + 1) fail("two-phase transform needs k >= 2d+1");
  if (gamma_s.size() != g.n() || gamma_t.size() != g.n()) fail("coloring length mismatch");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (gamma_s[v] < 1 || gamma_s[v] > d + 1 || gamma_t[v] < 1 || gamma_t[v] > d + 1) {
      fail("colorings must use colors 1..d+1");
    }
  }
  Coloring start{k, gamma_s.colors};
  if (!is_proper(g, start) || !is_proper(g, Coloring{k, gamma_t.colors})) {
    fail("colorings must be proper");
  }

  RecoloringSequence seq{start, {}};
  for (Color i = 1; i <= d; ++i) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (gamma_s[v] == i) seq.steps.push_back({v, d + 1 + i});
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (gamma_s[v] == d + 1 && gamma_t[v] != d + 1) seq.steps.push_back({v, gamma_t[v]});
  }
  for (Color i = 1; i <= d; ++i) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (gamma_s[v] == i) seq.steps.push_back({v, gamma_t[v]});
    }
  }
  return seq;
}

ChordalBranch chordal_branch(const Graph& g, const TreeDecomposition& td, const Coloring& coloring) {
  ChordalBranch branch;
  branch.merge = merge_same_colored(g, td, coloring);
  const Graph& h = branch.merge.h;
  branch.peo_h = mcs_order(h);
  Coloring target = greedy_coloring(h, branch.peo_h, 3);
  target.k = coloring.k;
  branch.seq_h = best_choice_recoloring(h, branch.peo_h, branch.merge.alpha_h, target, coloring.k);
  branch.lifted = lift_sequence(branch.seq_h, branch.merge.map, g);
  return branch;
}

PipelineResult pipeline_detailed(const Graph& g, const Coloring& alpha, const Coloring& beta) {
  if (alpha.k != beta.k) throw Error(ErrorCode::InvalidInput, "alpha and beta use different k");
  if (alpha.k < 5) throw Error(ErrorCode::InvalidInput, "pipeline needs at least 5 colors");
  if (!is_proper(g, alpha)) throw Error(ErrorCode::InvalidInput, "alpha is not proper");
  if (!is_proper(g, beta)) throw Error(ErrorCode::InvalidInput, "beta is not proper");
  const int k = alpha.k;

  PipelineResult out;
  out.td = reduce_width2(g);
  out.from_alpha = chordal_branch(g, out.td, alpha);
  out.from_beta = chordal_branch(g, out.td, beta);
  const Coloring gamma1 = final_coloring(out.from_alpha.lifted);
  const Coloring gamma2 = final_coloring(out.from_beta.lifted);
  out.bridge = two_phase_transform(g, gamma1, gamma2, 2, k);
  out.sequence =
      concatenate(concatenate(out.from_alpha.lifted, out.bridge), reverse(out.from_beta.lifted));
  return out;
}

RecoloringSequence pipeline_theorem(const Graph& g, const Coloring& alpha, const Coloring& beta) {
  return pipeline_detailed(g, alpha, beta).sequence;
}

}  // namespace recolor
