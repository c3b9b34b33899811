#pragma once

#include "quinn/morita.hpp"

#include "json.hpp"

namespace quinn {

using json = nlohmann::ordered_json;

// All readers throw Error(Schema) on shape errors and Error(Axiom) when the data violate the laws.
std::optional<json> parse_json(const std::string& text, std::string* error = nullptr);
json load_json(const std::string& path);

json to_json(const FinGroup& g);
FinGroup group_from_json(const json& j);
json to_json(const FinGroupoid& g);
FinGroupoid groupoid_from_json(const json& j);
json to_json(const CrossedModule& m);
CrossedModule crossed_module_from_json(const json& j);
json to_json(const CrossedComplex& a);
CrossedComplex crossed_complex_from_json(const json& j);

// Accepts a full crossed complex, a crossed module, a group, a groupoid, or "builtin:<name>".
CrossedComplex algebra_from_json(const json& j);
CrossedComplex builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();
// The underlying group or groupoid, for inputs that have one.
FinGroupoid groupoid_input(const json& j);
FinGroup group_input(const json& j);

json to_json(const SimpSet& x);
json to_json(const Stratification& s);
// Accepts the simpset schema (tags optional) or "builtin:<catalog name>".
Stratification stratification_from_json(const json& j);

json colouring_to_json(const SimpSet& x, const Colouring& f);
Colouring colouring_from_json(const SimpSet& x, const json& j);
json homotopy_to_json(const SimpSet& x, const Homotopy& h, int k, int target);

json to_json(const Profunctor& p);
json to_json(const NatTransform& t);
json to_json(const QuinnMatrix& q);
std::string to_csv(const QuinnMatrix& q);
json to_json(const Algebra& a);
json to_json(const StateSpace& s);

}  // namespace quinn
