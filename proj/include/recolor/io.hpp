#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "recolor/audit.hpp"
#include "recolor/chordal_reduction.hpp"
#include "recolor/decomposition.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

// JSON formats:
//   Graph               {"n": int, "edges": [[u, v], ...]}  u < v, sorted
//   Coloring            {"k": int, "colors": [c_0, ..., c_{n-1}]}
//   TreeDecomposition   {"bags": [[v, ...], ...], "tree_edges": [[i, j], ...]}
//   EliminationOrdering {"order": [v_1, ..., v_n]}
//   RecoloringSequence  {"start": Coloring, "steps": [[v, c], ...]}
//   MergeMap            {"to_merged": [...], "classes": [[...], ...]}
//   AuditReport         {"clean": bool, "violations": [{vertex, rule, index, detail}, ...]}
namespace recolor {

void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);
void to_json(nlohmann::json& j, const Coloring& c);
void from_json(const nlohmann::json& j, Coloring& c);
void to_json(nlohmann::json& j, const TreeDecomposition& td);
void from_json(const nlohmann::json& j, TreeDecomposition& td);
void to_json(nlohmann::json& j, const EliminationOrdering& o);
void from_json(const nlohmann::json& j, EliminationOrdering& o);
void to_json(nlohmann::json& j, const RecoloringSequence& s);
void from_json(const nlohmann::json& j, RecoloringSequence& s);
void to_json(nlohmann::json& j, const MergeMap& m);
void from_json(const nlohmann::json& j, MergeMap& m);
void to_json(nlohmann::json& j, const AuditViolation& v);
void to_json(nlohmann::json& j, const AuditReport& r);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

// Parses with the from_json overloads above; schema errors become Io errors
// naming the file.
template <typename T>
T load(const std::string& path);

}  // namespace recolor
