#include <doctest.h>

#include <algorithm>

#include "recolor/audit.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/decomposition.hpp"
#include "recolor/oracle.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace recolor;

namespace {

struct Instance {
  Graph g;
  EliminationOrdering peo;
  Coloring alpha, beta;
};

Instance chordal_instance(int n, std::uint64_t seed, bool greedy_target) {
  Instance in;
  in.g = gen_chordal_omega3(n, seed);
  in.peo = mcs_order(in.g);
  in.alpha = random_proper_coloring(in.g, in.peo, 5, seed + 1000);
  in.beta = greedy_target ? greedy_coloring(in.g, in.peo, 5)
                          : random_proper_coloring(in.g, in.peo, 5, seed + 2000);
  return in;
}

// G[V_i] relabelled so that suffix vertex peo[i + j] becomes j.
struct Suffix {
  Graph g;
  EliminationOrdering peo;
  std::vector<Vertex> local;  // original -> local, -1 outside
};

Suffix suffix_graph(const Graph& g, const EliminationOrdering& peo, int i) {
  Suffix s;
  s.local.assign(g.n(), -1);
  const int m = g.n() - i;
  for (int j = 0; j < m; ++j) s.local[peo.order[i + j]] = j;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : g.edges()) {
    if (s.local[a] >= 0 && s.local[b] >= 0) edges.emplace_back(s.local[a], s.local[b]);
  }
  s.g = Graph(m, edges);
  for (int j = 0; j < m; ++j) s.peo.order.push_back(j);
  return s;
}

}  // namespace

TEST_CASE("best_choice rules") {
  const std::vector<Color> v345 = {3, 4, 5};
  const std::vector<FutureEntry> f23 = {{0, 2}, {1, 3}};
  CHECK(best_choice(v345, f23, 5) == 5);

  const std::vector<Color> v34 = {3, 4};
  const std::vector<FutureEntry> f125 = {{0, 1}, {2, 2}, {5, 5}};
  CHECK(best_choice(v34, f125, 1) == 3);

  const std::vector<Color> v23 = {2, 3};
  const std::vector<FutureEntry> late = {{1, 1}, {4, 3}, {7, 2}, {9, 3}};
  CHECK(best_choice(v23, late, 5) == 2);

  // beta_u valid but used later falls through to rule 2.
  CHECK(best_choice(v345, f23, 3) == 4);

  CHECK(code_of([] { best_choice({}, {}, 1); }) == ErrorCode::NoValidColor);
}

TEST_CASE("best_choice_color reads the valid set off the graph") {
  // Path 0 - 1 - 2; vertex 1 colored 1, neighbours 2 and 3.
  std::vector<std::pair<Vertex, Vertex>> path = {{0, 1}, {1, 2}};
  const Graph g(3, path);
  const Coloring cur{5, {2, 1, 3}};
  const FutureColorList future{{{0, 1}, {3, 4}}};
  CHECK(best_choice_color(1, cur, g, future, 4, 5) == 5);  // valid {4,5}, 4 used later
  CHECK(best_choice_color(1, cur, g, future, 5, 5) == 5);
}

TEST_CASE("local_best_choice_extend") {
  // u = 0, v = 1 on K2.
  const Graph k2 = oracle::complete(2);

  SUBCASE("no conflict and alpha_u == beta_u leaves the sequence alone") {
    const RecoloringSequence seq{{5, {0, 2}}, {{1, 3}, {1, 4}}};
    const auto out = local_best_choice_extend(k2, 0, 1, 1, seq);
    CHECK(out.steps == seq.steps);
    CHECK(out.start.colors == std::vector<Color>{1, 2});
  }
  SUBCASE("K2 swap") {
    // alpha = (1, 2), beta = (2, 1). v takes u's color 1, so u moves first
    // to a best choice (3: valid {3,4,5}, none used later) and at the end to 2.
    const RecoloringSequence seq{{5, {0, 2}}, {{1, 1}}};
    const auto out = local_best_choice_extend(k2, 0, 1, 2, seq);
    CHECK(out.steps == std::vector<Step>{{0, 3}, {1, 1}, {0, 2}});
    CHECK(verify_sequence(k2, out).colors == std::vector<Color>{2, 1});
  }
  SUBCASE("no conflict but alpha_u != beta_u adds one trailing step") {
    const RecoloringSequence seq{{5, {0, 2}}, {{1, 3}}};
    const auto out = local_best_choice_extend(k2, 0, 1, 4, seq);
    CHECK(out.steps == std::vector<Step>{{1, 3}, {0, 4}});
  }
  SUBCASE("rejects a sequence that already moves u") {
    const RecoloringSequence seq{{5, {0, 2}}, {{0, 3}}};
    CHECK(code_of([&] { local_best_choice_extend(k2, 0, 1, 1, seq); }) == ErrorCode::InvalidInput);
  }
}

TEST_CASE("best_choice_recoloring examples") {
  const Graph one(1);
  const EliminationOrdering only{{0}};
  const auto single = best_choice_recoloring(one, only, Coloring{5, {1}}, Coloring{5, {2}}, 5);
  CHECK(single.steps == std::vector<Step>{{0, 2}});

  const auto in = chordal_instance(40, 4, false);
  CHECK(best_choice_recoloring(in.g, in.peo, in.alpha, in.alpha, 5).empty());

  const auto big = chordal_instance(200, 11, true);
  const auto seq = best_choice_recoloring(big.g, big.peo, big.alpha, big.beta, 5);
  CHECK(verify_sequence(big.g, seq) == big.beta);
  const auto counts = recolor_counts(seq, big.g.n());
  CHECK(*std::max_element(counts.begin(), counts.end()) <= 542);
}

TEST_CASE("best_choice_recoloring rejects bad input") {
  const Graph c4 = oracle::cycle(4);
  const Coloring a{5, {1, 2, 1, 2}};
  CHECK(code_of([&] { best_choice_recoloring(c4, mcs_order(c4), a, a, 5); }) ==
        ErrorCode::InvalidInput);
  const Graph k3 = oracle::complete(3);
  const EliminationOrdering abc{{0, 1, 2}};
  CHECK(code_of([&] {
          best_choice_recoloring(k3, abc, Coloring{3, {1, 2, 3}}, Coloring{3, {2, 3, 1}}, 3);
        }) == ErrorCode::InvalidInput);  // k < 2 + 2
  CHECK(code_of([&] {
          best_choice_recoloring(k3, abc, Coloring{5, {1, 1, 3}}, Coloring{5, {2, 3, 1}}, 5);
        }) == ErrorCode::InvalidInput);
}

TEST_CASE("best choice invariants over random chordal instances") {
  int checked_suffixes = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed * 7 % 60);
    const auto in = chordal_instance(n, seed, seed % 2 == 0);
    const auto seq = best_choice_recoloring(in.g, in.peo, in.alpha, in.beta, 5);

    // Valid and ends at beta.
    REQUIRE(verify_sequence(in.g, seq) == in.beta);

    // Rules 1 and 3 always hold; rule 2 can only be exceeded by one half.
    const auto report = audit_best_choice(seq, in.peo, in.g);
    const auto counts_all = recolor_counts(seq, in.g.n());
    for (const auto& v : report.violations) {
      CHECK(v.rule == 2);
      long m = 0;
      for (Vertex w : out_neighbors(in.peo, in.g, v.vertex)) m += counts_all[w];
      const long r = static_cast<long>(saved_steps(seq, in.peo, in.g, v.vertex).size());
      CHECK(2L * counts_all[v.vertex] == 3 - r + 2 * ((m + 1) / 2));
    }

    // Caused-by: every non-final recoloring of v is immediately answered in
    // N+(v) by a step taking v's previous color.
    std::vector<Color> cur = seq.start.colors;
    const auto counts = recolor_counts(seq, in.g.n());
    std::vector<int> seen(in.g.n(), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const auto [v, c] = seq.steps[i];
      const Color previous = cur[v];
      cur[v] = c;
      if (++seen[v] == counts[v]) continue;
      const auto cause = caused_by(seq, in.peo, in.g, i);
      REQUIRE(cause.has_value());
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        if (seq.steps[j].vertex == *cause) {
          CHECK(seq.steps[j].color == previous);
          break;
        }
      }
    }

    // Closure: the restriction to every suffix V_i is exactly the best choice
    // recoloring of G[V_i].
    for (int i = 0; i < in.g.n(); i += std::max(1, in.g.n() / 5)) {
      const auto sub = suffix_graph(in.g, in.peo, i);
      std::vector<Vertex> members(in.peo.order.begin() + i, in.peo.order.end());
      Coloring a{5, std::vector<Color>(sub.g.n())}, b = a;
      for (Vertex x : members) {
        a[sub.local[x]] = in.alpha[x];
        b[sub.local[x]] = in.beta[x];
      }
      RecoloringSequence restricted{a, {}};
      for (const auto& r : restrict(seq, members)) {
        restricted.steps.push_back({sub.local[r.step.vertex], r.step.color});
      }
      CHECK(verify_sequence(sub.g, restricted) == b);
      CHECK(restricted == best_choice_recoloring(sub.g, sub.peo, a, b, 5));
      ++checked_suffixes;
    }
  }
  CHECK(checked_suffixes > 100);
}

TEST_CASE("forced double move exceeds the half-step bound by one half") {
  // v = 0 must leave 1 before vertex 1 takes it and cannot go straight to 5.
  const Graph k3 = oracle::complete(3);
  const EliminationOrdering abc{{0, 1, 2}};
  const Coloring alpha{5, {1, 5, 4}}, beta{5, {5, 1, 3}};
  const auto seq = best_choice_recoloring(k3, abc, alpha, beta, 5);
  CHECK(seq.steps == std::vector<Step>{{2, 3}, {0, 2}, {1, 1}, {0, 5}});
  CHECK(bfs_distance(k3, 5, alpha, beta) == 4);
  CHECK(saved_steps(seq, abc, k3, 0).size() == 1);
  const auto report = audit_best_choice(seq, abc, k3);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].vertex == 0);
  CHECK(report.violations[0].rule == 2);
}

TEST_CASE("best choice also runs with more colors") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_2tree(50, seed);
    const auto peo = mcs_order(g);
    const Coloring alpha = random_proper_coloring(g, peo, 7, seed);
    const Coloring beta = random_proper_coloring(g, peo, 7, seed + 1);
    const auto seq = best_choice_recoloring(g, peo, alpha, beta, 7);
    CHECK(verify_sequence(g, seq) == beta);
  }
}
