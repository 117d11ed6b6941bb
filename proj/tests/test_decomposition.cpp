#include <doctest.h>

#include <random>

#include "recolor/decomposition.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace recolor;

namespace {

int max_later_degree(const Graph& g, const EliminationOrdering& order) {
  const auto pos = order.position();
  int most = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    int later = 0;
    for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
    most = std::max(most, later);
  }
  return most;
}

}  // namespace

TEST_CASE("mcs_order") {
  const Graph k3 = oracle::complete(3);
  CHECK(is_perfect_elimination(k3, mcs_order(k3)));
  std::vector<Vertex> perm = {0, 1, 2};
  do {
    CHECK(is_perfect_elimination(k3, EliminationOrdering{perm}));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Graph edgeless(5);
  CHECK(mcs_order(edgeless).size() == 5);
  CHECK(is_perfect_elimination(edgeless, mcs_order(edgeless)));

  const Graph c4 = oracle::cycle(4);
  CHECK_FALSE(is_perfect_elimination(c4, mcs_order(c4)));
}

TEST_CASE("is_chordal") {
  CHECK(is_chordal(oracle::complete(4)));
  CHECK_FALSE(is_chordal(oracle::cycle(4)));
  CHECK(is_chordal(gen_2tree(15, 2)));
  CHECK(is_chordal(Graph(0)));
}

TEST_CASE("is_chordal agrees with induced-cycle enumeration up to 8 vertices") {
  std::mt19937_64 rng(2024);
  int chordal = 0, total = 0;
  for (int n = 1; n <= 8; ++n) {
    for (double p : {0.2, 0.35, 0.5, 0.7, 0.9}) {
      for (int rep = 0; rep < 25; ++rep) {
        const Graph g = oracle::random_graph(n, p, rng);
        const bool expected = oracle::brute_force_chordal(g);
        CHECK(is_chordal(g) == expected);
        chordal += expected;
        ++total;
      }
    }
  }
  // Both outcomes are exercised.
  CHECK(chordal > 0);
  CHECK(chordal < total);
}

TEST_CASE("clique_number_chordal") {
  const Graph k3 = oracle::complete(3);
  CHECK(clique_number_chordal(k3, mcs_order(k3)) == 3);
  const Graph edgeless(4);
  CHECK(clique_number_chordal(edgeless, mcs_order(edgeless)) == 1);

  const Graph g = gen_chordal_omega3(40, 5);
  const int omega = clique_number_chordal(g, mcs_order(g));
  CHECK(omega >= 1);
  CHECK(omega <= 3);
  CHECK(omega == oracle::max_clique_up_to(g, 4));

  const Graph c4 = oracle::cycle(4);
  CHECK(code_of([&] { clique_number_chordal(c4, EliminationOrdering{{0, 1, 2, 3}}); }) ==
        ErrorCode::NotPEO);
}

TEST_CASE("clique_number_chordal matches exhaustive max clique for chordal graphs up to 12") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int attempt = 0; attempt < 3000 && checked < 150; ++attempt) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.55, rng);
    if (!is_chordal(g)) continue;
    CHECK(clique_number_chordal(g, mcs_order(g)) == oracle::max_clique_up_to(g, n));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("reduce_width2 examples") {
  const auto k3 = reduce_width2(oracle::complete(3));
  REQUIRE(k3.bags.size() == 1);
  CHECK(k3.bags[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(k3.width() == 2);

  CHECK(code_of([] { reduce_width2(oracle::complete(4)); }) == ErrorCode::NotWidth2);

  const Graph c5 = oracle::cycle(5);
  const auto td = reduce_width2(c5);
  CHECK(td.bags.size() == 3);
  CHECK(oracle::valid_tree_decomposition(c5, td, 3));
  CHECK(decomposition_problem(c5, td).empty());

  const auto empty = reduce_width2(Graph(0));
  CHECK(empty.bags.empty());
  const Graph isolated(3);
  CHECK(oracle::valid_tree_decomposition(isolated, reduce_width2(isolated), 3));
}

TEST_CASE("reduce_width2 yields valid decompositions on treewidth-2 families") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (int n : {3, 7, 20, 60}) {
      for (const Graph& g : {gen_2tree(n, seed), gen_partial_2tree(n, 0.5, seed),
                             gen_partial_2tree(n, 0.85, seed), gen_chordal_omega3(n, seed)}) {
        const auto td = reduce_width2(g);
        CHECK(td.width() <= 2);
        CHECK(oracle::valid_tree_decomposition(g, td, 3));
        CHECK(decomposition_problem(g, td).empty());
      }
    }
  }
}

TEST_CASE("reduce_width2 on random small graphs either decomposes or has a dense core") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.45, rng);
    try {
      const auto td = reduce_width2(g);
      CHECK(oracle::valid_tree_decomposition(g, td, 3));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotWidth2);
      CHECK(g.n() >= 4);
    }
  }
}

TEST_CASE("decomposition_problem flags broken decompositions") {
  const Graph c5 = oracle::cycle(5);
  auto td = reduce_width2(c5);

  auto oversized = td;
  oversized.bags[0] = {0, 1, 2, 3};
  CHECK_FALSE(decomposition_problem(c5, oversized).empty());

  // The path 0-1-2-3 with bags {0,1},{1,2},{2,3}; then cut the middle.
  std::vector<std::pair<Vertex, Vertex>> path = {{0, 1}, {1, 2}, {2, 3}};
  const Graph p(4, path);
  TreeDecomposition good{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  CHECK(decomposition_problem(p, good).empty());
  CHECK(oracle::valid_tree_decomposition(p, good, 3));

  TreeDecomposition split{{{0, 1}, {2, 3}, {1, 2}}, {{0, 1}, {1, 2}}};  // 1 in nodes 0 and 2 only
  CHECK_FALSE(decomposition_problem(p, split).empty());
  CHECK_FALSE(oracle::valid_tree_decomposition(p, split, 3));

  TreeDecomposition uncovered{{{0, 1}, {2, 3}}, {{0, 1}}};
  CHECK_FALSE(decomposition_problem(p, uncovered).empty());
  CHECK_FALSE(oracle::valid_tree_decomposition(p, uncovered, 3));
}

TEST_CASE("out_neighbors") {
  const Graph k3 = oracle::complete(3);
  const EliminationOrdering abc{{0, 1, 2}};
  CHECK(out_neighbors(abc, k3, 2).empty());
  CHECK(out_neighbors(abc, k3, 0) == std::vector<Vertex>{1, 2});

  const Graph g = gen_chordal_omega3(25, 1);
  const auto peo = mcs_order(g);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto out = out_neighbors(peo, g, v);
    CHECK(out.size() <= 2);
    if (out.size() == 2) CHECK(g.adjacent(out[0], out[1]));
  }
  CHECK(out_neighborhoods(peo, g)[3] == out_neighbors(peo, g, 3));

  CHECK(code_of([] {
          out_neighbors(EliminationOrdering{{0, 1, 2, 3}}, oracle::complete(4), 0);
        }) == ErrorCode::OmegaTooLarge);
}

TEST_CASE("degeneracy_order keeps at most two later neighbours on partial 2-trees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_partial_2tree(80, 0.7, seed);
    CHECK(max_later_degree(g, degeneracy_order(g)) <= 2);
  }
}
