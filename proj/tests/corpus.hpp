#pragma once

#include "quinn/morita.hpp"

#include <string>
#include <vector>

namespace corpus {

using namespace quinn;

struct NamedGroup {
  std::string name;
  FinGroup g;
};
struct NamedModule {
  std::string name;
  CrossedModule m;
};
struct NamedAlgebra {
  std::string name;
  CrossedComplex a;
};

inline std::vector<NamedGroup> groups() {
  return {{"Z2", FinGroup::cyclic(2)}, {"Z3", FinGroup::cyclic(3)}, {"Z4", FinGroup::cyclic(4)}, {"S3", FinGroup::symmetric(3)}};
}

inline std::vector<NamedModule> modules() {
  FinGroup z2 = FinGroup::cyclic(2), z4 = FinGroup::cyclic(4);
  return {{"0:Z2->Z2", CrossedModule::trivial_action(z2, z2, {0, 0})},
          {"id:Z2->Z2", CrossedModule::trivial_action(z2, z2, {0, 1})},
          {"0:Z2->Z4", CrossedModule::trivial_action(z4, z2, {0, 0})}};
}

inline std::vector<NamedAlgebra> algebras() {
  std::vector<NamedAlgebra> out;
  for (auto& [n, g] : groups()) out.push_back({"iota1(" + n + ")", iota1(g)});
  for (auto& [n, m] : modules()) out.push_back({"iota2(" + n + ")", iota2(m)});
  return out;
}

// Cobordisms of the catalog with both boundary tags.
inline std::vector<Stratification> cobordisms() {
  std::vector<Stratification> out;
  for (const std::string& n : catalog_names()) {
    Stratification s = catalog(n);
    if (s.role == "cobordism") out.push_back(s);
  }
  return out;
}

inline bool same_shape(const SimpSet& a, const SimpSet& b) {
  if (a.num_generators() != b.num_generators()) return false;
  for (int g = 0; g < a.num_generators(); ++g)
    if (a.dim(g) != b.dim(g) || a.faces(g) != b.faces(g)) return false;
  return true;
}

// M.out and N.in are the same simplicial set in tag order.
inline bool composable(const Stratification& m, const Stratification& n) {
  return same_shape(m.tag_model("out"), n.tag_model("in"));
}

}  // namespace corpus
