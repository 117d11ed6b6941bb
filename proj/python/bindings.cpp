#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recolor/audit.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/chordal_reduction.hpp"
#include "recolor/decomposition.hpp"
#include "recolor/error.hpp"
#include "recolor/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace recolor;

namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

RecoloringSequence make_sequence(const Coloring& start, const std::vector<std::pair<Vertex, Color>>& steps) {
  RecoloringSequence s{start, {}};
  for (auto [v, c] : steps) s.steps.push_back({v, c});
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Recoloring sequences for graphs of treewidth at most two";

  // Messages start with the error code name, e.g. "NotWidth2: ...".
  py::register_exception<Error>(m, "RecolorError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), "n"_a)
      .def(py::init([](int n, const Edges& edges) { return Graph(n, edges); }), "n"_a, "edges"_a)
      .def_property_readonly("n", &Graph::n)
      .def("edge_count", &Graph::edge_count)
      .def("neighbors", &Graph::neighbors, "v"_a)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("add_edge", &Graph::add_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init([](int k, std::vector<Color> colors) { return Coloring{k, std::move(colors)}; }),
           "k"_a, "colors"_a)
      .def_readwrite("k", &Coloring::k)
      .def_readwrite("colors", &Coloring::colors)
      .def("__len__", &Coloring::size)
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; });

  py::class_<EliminationOrdering>(m, "EliminationOrdering")
      .def(py::init([](std::vector<Vertex> order) { return EliminationOrdering{std::move(order)}; }))
      .def_readwrite("order", &EliminationOrdering::order);

  py::class_<TreeDecomposition>(m, "TreeDecomposition")
      .def_readonly("bags", &TreeDecomposition::bags)
      .def_readonly("tree_edges", &TreeDecomposition::tree_edges)
      .def("width", &TreeDecomposition::width);

  py::class_<RecoloringSequence>(m, "RecoloringSequence")
      .def(py::init(&make_sequence), "start"_a, "steps"_a)
      .def_readonly("start", &RecoloringSequence::start)
      .def_property_readonly("steps",
                             [](const RecoloringSequence& s) {
                               std::vector<std::pair<Vertex, Color>> out;
                               for (const Step& st : s.steps) out.emplace_back(st.vertex, st.color);
                               return out;
                             })
      .def("__len__", &RecoloringSequence::size)
      .def("counts", [](const RecoloringSequence& s) { return recolor_counts(s, s.start.size()); });

  py::class_<AuditViolation>(m, "AuditViolation")
      .def_readonly("vertex", &AuditViolation::vertex)
      .def_readonly("rule", &AuditViolation::rule)
      .def_readonly("index", &AuditViolation::index)
      .def_readonly("detail", &AuditViolation::detail);

  py::class_<AuditReport>(m, "AuditReport")
      .def_readonly("violations", &AuditReport::violations)
      .def("clean", &AuditReport::clean)
      .def("saved_total", &AuditReport::saved_total);

  m.def("gen_2tree", &gen_2tree, "n"_a, "seed"_a);
  m.def("gen_partial_2tree", &gen_partial_2tree, "n"_a, "keep_prob"_a, "seed"_a);
  m.def("gen_chordal_omega3",
        [](int n, std::uint64_t seed) { return gen_chordal_omega3(n, seed); }, "n"_a, "seed"_a);
  m.def("random_proper_coloring", &random_proper_coloring, "g"_a, "order"_a, "k"_a, "seed"_a);
  m.def("greedy_coloring", &greedy_coloring, "g"_a, "order"_a, "k"_a);
  m.def("is_proper", &is_proper, "g"_a, "coloring"_a);

  m.def("mcs_order", &mcs_order, "g"_a);
  m.def("degeneracy_order", &degeneracy_order, "g"_a);
  m.def("is_chordal", &is_chordal, "g"_a);
  m.def("reduce_width2", &reduce_width2, "g"_a);

  m.def("verify_sequence", &verify_sequence, "g"_a, "seq"_a);
  m.def("best_choice_recoloring", &best_choice_recoloring, "g"_a, "peo"_a, "alpha"_a, "beta"_a,
        "k"_a);
  m.def("two_phase_transform", &two_phase_transform, "g"_a, "gamma_s"_a, "gamma_t"_a, "d"_a, "k"_a);
  m.def("pipeline", &pipeline_theorem, "g"_a, "alpha"_a, "beta"_a);
  m.def("audit", &audit_best_choice, "seq"_a, "peo"_a, "g"_a);
  m.def("bfs_distance", &bfs_distance, "g"_a, "k"_a, "alpha"_a, "beta"_a,
        "state_cap"_a = kDefaultStateCap);
}
