#include "recolor/io.hpp"

#include <fstream>

#include "recolor/error.hpp"

namespace recolor {

using nlohmann::json;

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = json{{"n", g.n()}, {"edges", std::move(edges)}};
}

void from_json(const json& j, Graph& g) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidGraph, "edge must be [u, v]");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  g = Graph(n, edges);
}

void to_json(json& j, const Coloring& c) { j = json{{"k", c.k}, {"colors", c.colors}}; }

void from_json(const json& j, Coloring& c) {
  c.k = j.at("k").get<int>();
  c.colors = j.at("colors").get<std::vector<Color>>();
}

void to_json(json& j, const TreeDecomposition& td) {
  json edges = json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  j = json{{"bags", td.bags}, {"tree_edges", std::move(edges)}};
}

void from_json(const json& j, TreeDecomposition& td) {
  td.bags = j.at("bags").get<std::vector<std::vector<Vertex>>>();
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  td.tree_edges.clear();
  for (const auto& e : j.at("tree_edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorCode::InvalidDecomposition, "tree edge must be [i, j]");
    }
    td.tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
}

void to_json(json& j, const EliminationOrdering& o) { j = json{{"order", o.order}}; }

void from_json(const json& j, EliminationOrdering& o) {
  o.order = j.at("order").get<std::vector<Vertex>>();
}

void to_json(json& j, const RecoloringSequence& s) {
  json steps = json::array();
  for (const auto& st : s.steps) steps.push_back({st.vertex, st.color});
  j = json{{"start", s.start}, {"steps", std::move(steps)}};
}

void from_json(const json& j, RecoloringSequence& s) {
  s.start = j.at("start").get<Coloring>();
  s.steps.clear();
  for (const auto& e : j.at("steps")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "step must be [v, c]");
    s.steps.push_back({e[0].get<Vertex>(), e[1].get<Color>()});
  }
}

void to_json(json& j, const MergeMap& m) {
  j = json{{"to_merged", m.to_merged}, {"classes", m.classes}};
}

void from_json(const json& j, MergeMap& m) {
  m.to_merged = j.at("to_merged").get<std::vector<Vertex>>();
  m.classes = j.at("classes").get<std::vector<std::vector<Vertex>>>();
}

void to_json(json& j, const AuditViolation& v) {
  j = json{{"vertex", v.vertex}, {"rule", v.rule}, {"index", v.index}, {"detail", v.detail}};
}

void to_json(json& j, const AuditReport& r) {
  j = json{{"clean", r.clean()}, {"violations", r.violations}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << j.dump() << '\n';
}

template <typename T>
T load(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, path + ": " + e.what());
  }
}

template Graph load<Graph>(const std::string&);
template Coloring load<Coloring>(const std::string&);
template TreeDecomposition load<TreeDecomposition>(const std::string&);
template EliminationOrdering load<EliminationOrdering>(const std::string&);
template RecoloringSequence load<RecoloringSequence>(const std::string&);
template MergeMap load<MergeMap>(const std::string&);

}  // namespace recolor
