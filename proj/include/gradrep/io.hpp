#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradrep/presentations.hpp"

namespace gradrep {

using json = nlohmann::json;

struct Task {
  std::string name;
  std::string command;
  json args = json::object();
};

struct Problem {
  AlgebraPtr algebra;
  std::map<std::string, ModPtr> modules;
  std::vector<std::string> module_order;
  std::vector<Task> tasks;
  json source;  // normalized input, used for canonical serialization

  const ModPtr& module(const std::string& name) const;
};

/// Validates the whole document; InputError messages start with the JSON
/// path of the offending field, e.g. "relations[1].paths[0]: unknown arrow 'x'".
Problem parse_problem(const json& doc);
/// Reads and parses a file. JSON syntax errors report line and column.
Problem load_problem(const std::string& path);
json parse_json_text(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical_text(const json& j);
std::string serialize_problem(const Problem& p);

json field_to_json(Field f);
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const json& j, const std::string& where);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(Field f, const json& j, int rows, int cols, const std::string& where);

json algebra_to_json(const GradedAlgebra& alg);
AlgebraPtr algebra_from_json(const json& doc);

json module_to_json(const GradedModule& m);
ModPtr module_from_json(const AlgebraPtr& alg, const json& j, const std::string& where = "module");
json morphism_to_json(const GradedMorphism& f);
GradedMorphism morphism_from_json(const ModPtr& src, const ModPtr& tgt, const json& j,
                                  const std::string& where = "morphism");

json element_to_json(const GradedAlgebra& alg, const AlgElement& u);
AlgElement element_from_json(const GradedAlgebra& alg, const json& j, const std::string& where);
json summands_to_json(const GradedAlgebra& alg, const std::vector<Summand>& s);
json summand_map_to_json(const SummandMap& f);
SummandMap summand_map_from_json(const AlgebraPtr& alg, const json& j, const std::string& where = "map");

}  // namespace gradrep
