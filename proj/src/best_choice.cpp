#include "recolor/best_choice.hpp"

#include <algorithm>
#include <string>

#include "recolor/decomposition.hpp"
#include "recolor/error.hpp"

namespace recolor {

Color best_choice(std::span<const Color> valid, std::span<const FutureEntry> future, Color beta_u) {
  if (valid.empty()) throw Error(ErrorCode::NoValidColor, "no valid color to move to");
  auto first_use = [&](Color c) -> std::size_t {
    for (std::size_t i = 0; i < future.size(); ++i) {
      if (future[i].color == c) return i;
    }
    return future.size();
  };
  if (std::find(valid.begin(), valid.end(), beta_u) != valid.end() &&
      first_use(beta_u) == future.size()) {
    return beta_u;
  }
  Color latest = valid.front();
  std::size_t latest_use = first_use(latest);
  for (Color c : valid) {
    const std::size_t use = first_use(c);
    if (use == future.size()) return c;  // valid is ascending: smallest unused color
    if (use > latest_use) {
      latest = c;
      latest_use = use;
    }
  }
  return latest;
}

namespace {

std::vector<Color> valid_colors(Color own, std::span<const Color> neighbour_colors, int k) {
  std::vector<Color> valid;
  for (Color c = 1; c <= k; ++c) {
    if (c == own) continue;
    if (std::find(neighbour_colors.begin(), neighbour_colors.end(), c) != neighbour_colors.end()) {
      continue;
    }
    valid.push_back(c);
  }
  return valid;
}

// Local best choice on a raw step list. `slot` maps every vertex to its index
// in `neighbours` or -1 and is left as it was found.
std::vector<Step> extend_steps(const std::vector<Step>& steps, const Coloring& start, Vertex u,
                               Color alpha_u, Color beta_u, std::span<const Vertex> neighbours,
                               int k, std::vector<int>& slot) {
  for (std::size_t i = 0; i < neighbours.size(); ++i) slot[neighbours[i]] = static_cast<int>(i);

  std::vector<Color> nbr_color(neighbours.size());
  for (std::size_t i = 0; i < neighbours.size(); ++i) nbr_color[i] = start[neighbours[i]];
  std::vector<FutureEntry> future;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (slot[steps[i].vertex] >= 0) future.push_back({i, steps[i].color});
  }

  std::vector<Step> out;
  out.reserve(steps.size() + future.size() + 1);
  Color cur = alpha_u;
  std::size_t next = 0;
  for (const Step& s : steps) {
    const int at = slot[s.vertex];
    if (at >= 0) {
      if (s.color == cur) {
        const auto valid = valid_colors(cur, nbr_color, k);
        cur = best_choice(valid, std::span(future).subspan(next), beta_u);
        out.push_back({u, cur});
      }
      nbr_color[at] = s.color;
      ++next;
    }
    out.push_back(s);
  }
  if (cur != beta_u) out.push_back({u, beta_u});

  for (Vertex w : neighbours) slot[w] = -1;
  return out;
}

}  // namespace

Color best_choice_color(Vertex u, const Coloring& current, const Graph& g,
                        const FutureColorList& future, Color beta_u, int k) {
  if (u < 0 || u >= g.n()) throw Error(ErrorCode::InvalidInput, "vertex out of range");
  check_coloring_shape(g, current);
  std::vector<Color> nbr;
  for (Vertex w : g.neighbors(u)) nbr.push_back(current[w]);
  return best_choice(valid_colors(current[u], nbr, k), future.entries, beta_u);
}

RecoloringSequence local_best_choice_extend(const Graph& g, Vertex u, Color alpha_u, Color beta_u,
                                            const RecoloringSequence& seq) {
  if (u < 0 || u >= g.n()) throw Error(ErrorCode::InvalidInput, "vertex out of range");
  const int k = seq.start.k;
  if (alpha_u < 1 || alpha_u > k || beta_u < 1 || beta_u > k) {
    throw Error(ErrorCode::InvalidInput, "alpha_u or beta_u outside 1..k");
  }
  for (const Step& s : seq.steps) {
    if (s.vertex == u) throw Error(ErrorCode::InvalidInput, "sequence already recolors u");
  }
  RecoloringSequence out{seq.start, {}};
  if (out.start.size() == g.n()) out.start[u] = alpha_u;  // u's entry in seq.start is ignored
  check_coloring_shape(g, out.start);
  const auto& nbrs = g.neighbors(u);
  for (Vertex w : nbrs) {
    if (out.start[w] == alpha_u) throw Error(ErrorCode::InvalidInput, "alpha_u clashes with a neighbour");
  }
  std::vector<int> slot(g.n(), -1);
  out.steps = extend_steps(seq.steps, out.start, u, alpha_u, beta_u, nbrs, k, slot);
  try {
    verify_sequence(g, out);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("extension is not proper: ") + e.what());
  }
  return out;
}

RecoloringSequence best_choice_recoloring(const Graph& g, const EliminationOrdering& peo,
                                          const Coloring& alpha, const Coloring& beta, int k) {
  const int n = g.n();
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidInput, why); };
  if (peo.size() != n) fail("ordering length differs from vertex count");
  bool perfect = false;
  try {
    perfect = is_perfect_elimination(g, peo);
  } catch (const Error& e) {
    fail(e.what());
  }
  if (!perfect) fail("ordering is not a perfect elimination ordering");
  if (alpha.size() != n || beta.size() != n) fail("coloring length differs from vertex count");
  for (Vertex v = 0; v < n; ++v) {
    if (alpha[v] < 1 || alpha[v] > k || beta[v] < 1 || beta[v] > k) fail("color outside 1..k");
  }
  Coloring start{k, alpha.colors};
  Coloring target{k, beta.colors};
  if (!is_proper(g, start)) fail("alpha is not proper");
  if (!is_proper(g, target)) fail("beta is not proper");

  const auto pos = peo.position();
  std::vector<std::vector<Vertex>> later(n);
  std::size_t max_later = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later[v].push_back(w);
    }
    max_later = std::max(max_later, later[v].size());
  }
  if (n > 0 && k < 2 + static_cast<int>(max_later)) {
    fail("k = " + std::to_string(k) + " is below 2 + max out-degree " + std::to_string(max_later));
  }

  RecoloringSequence seq{start, {}};
  if (n == 0) return seq;
  const Vertex last = peo.order.back();
  if (alpha[last] != beta[last]) seq.steps.push_back({last, beta[last]});
  std::vector<int> slot(n, -1);
  for (int i = n - 2; i >= 0; --i) {
    const Vertex u = peo.order[i];
    seq.steps = extend_steps(seq.steps, start, u, alpha[u], beta[u], later[u], k, slot);
  }
  return seq;
}

}  // namespace recolor
