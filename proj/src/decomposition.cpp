#include "recolor/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "recolor/error.hpp"

namespace recolor {

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

EliminationOrdering mcs_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  // (-weight, vertex): begin() is the heaviest vertex with the lowest index.
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(0, v);

  EliminationOrdering out;
  out.order.reserve(n);
  while (!queue.empty()) {
    Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    visited[v] = 1;
    out.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      queue.erase({-weight[w], w});
      ++weight[w];
      queue.emplace(-weight[w], w);
    }
  }
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

EliminationOrdering degeneracy_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(g.degree(v));
    queue.emplace(degree[v], v);
  }
  EliminationOrdering out;
  out.order.reserve(n);
  while (!queue.empty()) {
    Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = 1;
    out.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.emplace(degree[w], w);
    }
  }
  return out;
}

namespace {

void require_permutation(const EliminationOrdering& order, int n) {
  if (order.size() != n) {
    throw Error(ErrorCode::InvalidOrdering, "ordering length differs from vertex count");
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order.order) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::InvalidOrdering, "ordering is not a permutation");
    }
    seen[v] = 1;
  }
}

std::vector<Vertex> later_neighbors(const Graph& g, const std::vector<int>& pos, Vertex v) {
  std::vector<Vertex> later;
  for (Vertex w : g.neighbors(v)) {
    if (pos[w] > pos[v]) later.push_back(w);
  }
  return later;
}

}  // namespace

bool is_perfect_elimination(const Graph& g, const EliminationOrdering& order) {
  require_permutation(order, g.n());
  const auto pos = order.position();
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto later = later_neighbors(g, pos, v);
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination(g, mcs_order(g)); }

int clique_number_chordal(const Graph& g, const EliminationOrdering& peo) {
  if (!is_perfect_elimination(g, peo)) {
    throw Error(ErrorCode::NotPEO, "ordering is not a perfect elimination ordering");
  }
  if (g.n() == 0) return 0;
  const auto pos = peo.position();
  std::size_t most = 0;
  for (Vertex v = 0; v < g.n(); ++v) most = std::max(most, later_neighbors(g, pos, v).size());
  return static_cast<int>(most) + 1;
}

TreeDecomposition reduce_width2(const Graph& g) {
  const int n = g.n();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());

  std::set<Vertex> low_degree;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() <= 2) low_degree.insert(v);
  }
  auto refresh = [&](Vertex v) {
    if (adj[v].size() <= 2) {
      low_degree.insert(v);
    } else {
      low_degree.erase(v);
    }
  };

  std::vector<Vertex> elimination;
  std::vector<int> elim_index(n, -1);
  std::vector<std::vector<Vertex>> neighbors_at_elim(n);
  elimination.reserve(n);
  while (!low_degree.empty()) {
    Vertex v = *low_degree.begin();
    low_degree.erase(low_degree.begin());
    std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
    for (Vertex w : nbrs) adj[w].erase(v);
    if (nbrs.size() == 2) {
      adj[nbrs[0]].insert(nbrs[1]);
      adj[nbrs[1]].insert(nbrs[0]);
    }
    for (Vertex w : nbrs) refresh(w);
    adj[v].clear();
    elim_index[v] = static_cast<int>(elimination.size());
    elimination.push_back(v);
    neighbors_at_elim[v] = std::move(nbrs);
  }
  if (static_cast<int>(elimination.size()) != n) {
    throw Error(ErrorCode::NotWidth2, "degree-2 reduction stalls with " +
                                          std::to_string(n - elimination.size()) +
                                          " vertices of degree >= 3");
  }

  // Node i holds the bag of the i-th eliminated vertex; its parent is the bag
  // of the earliest eliminated neighbour.
  std::vector<std::vector<Vertex>> bags(n);
  std::vector<std::set<int>> tree(n);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    Vertex v = elimination[i];
    auto& bag = bags[i];
    bag = neighbors_at_elim[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    int parent = -1;
    for (Vertex w : neighbors_at_elim[v]) {
      if (parent < 0 || elim_index[w] < parent) parent = elim_index[w];
    }
    if (parent < 0) {
      roots.push_back(i);
    } else {
      tree[i].insert(parent);
      tree[parent].insert(i);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) {
    tree[roots[r - 1]].insert(roots[r]);
    tree[roots[r]].insert(roots[r - 1]);
  }

  // Contract every node whose bag is contained in a neighbouring bag.
  std::vector<char> alive(n, 1);
  std::deque<int> work;
  for (int i = 0; i < n; ++i) work.push_back(i);
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    if (!alive[a]) continue;
    for (int b : tree[a]) {
      if (!std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(), bags[a].end())) continue;
      tree[b].erase(a);
      for (int c : tree[a]) {
        if (c == b) continue;
        tree[c].erase(a);
        tree[c].insert(b);
        tree[b].insert(c);
        work.push_back(c);
      }
      tree[a].clear();
      alive[a] = 0;
      work.push_back(b);
      break;
    }
  }

  TreeDecomposition td;
  std::vector<int> renumber(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    renumber[i] = static_cast<int>(td.bags.size());
    td.bags.push_back(bags[i]);
  }
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    for (int j : tree[i]) {
      if (i < j) td.tree_edges.emplace_back(renumber[i], renumber[j]);
    }
  }
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  return td;
}

std::string decomposition_problem(const Graph& g, const TreeDecomposition& td, int max_width) {
  const int n = g.n();
  const int nodes = static_cast<int>(td.bags.size());
  for (int i = 0; i < nodes; ++i) {
    const auto& bag = td.bags[i];
    if (static_cast<int>(bag.size()) > max_width + 1) {
      return "bag " + std::to_string(i) + " exceeds width " + std::to_string(max_width);
    }
    for (Vertex v : bag) {
      if (v < 0 || v >= n) return "bag " + std::to_string(i) + " holds an unknown vertex";
    }
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end() ||
        !std::is_sorted(bag.begin(), bag.end())) {
      return "bag " + std::to_string(i) + " is not a sorted set";
    }
  }
  if (nodes == 0) return n == 0 ? std::string() : "no bags for a nonempty graph";

  std::vector<std::vector<int>> tree(nodes);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return "malformed tree edge";
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  if (static_cast<int>(td.tree_edges.size()) != nodes - 1) return "tree edge count is not nodes-1";
  {
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : tree[a]) {
        if (!seen[b]) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != nodes) return "decomposition tree is disconnected";
  }

  std::vector<std::vector<int>> holders(n);
  for (int i = 0; i < nodes; ++i) {
    for (Vertex v : td.bags[i]) holders[v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    std::vector<char> holds(nodes, 0);
    for (int i : holders[v]) holds[i] = 1;
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack = {holders[v].front()};
    seen[holders[v].front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : tree[a]) {
        if (holds[b] && !seen[b]) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != holders[v].size()) {
      return "bags holding vertex " + std::to_string(v) + " are not connected";
    }
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holders[u]) {
      const auto& bag = td.bags[i];
      if (std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
    }
  }
  return {};
}

std::vector<Vertex> out_neighbors(const EliminationOrdering& peo, const Graph& g, Vertex v) {
  require_permutation(peo, g.n());
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::InvalidIndex, "vertex out of range");
  auto later = later_neighbors(g, peo.position(), v);
  if (later.size() > 2) {
    throw Error(ErrorCode::OmegaTooLarge,
                "vertex " + std::to_string(v) + " has " + std::to_string(later.size()) +
                    " later neighbours",
                static_cast<std::size_t>(v));
  }
  return later;
}

std::vector<std::vector<Vertex>> out_neighborhoods(const EliminationOrdering& peo, const Graph& g) {
  require_permutation(peo, g.n());
  const auto pos = peo.position();
  std::vector<std::vector<Vertex>> out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    out[v] = later_neighbors(g, pos, v);
    if (out[v].size() > 2) {
      throw Error(ErrorCode::OmegaTooLarge,
                  "vertex " + std::to_string(v) + " has " + std::to_string(out[v].size()) +
                      " later neighbours",
                  static_cast<std::size_t>(v));
    }
  }
  return out;
}

}  // namespace recolor
