#include "corpus.hpp"
#include "quinn/io.hpp"

#include "doctest.h"

#include <string>

using namespace quinn;

namespace {

std::string data(const std::string& f) { return std::string(QUINN_DATA_DIR) + "/" + f; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Schema;
}

}  // namespace

TEST_CASE("group and groupoid round trips") {
  for (auto& [name, g] : corpus::groups()) {
    CAPTURE(name);
    FinGroup h = group_from_json(to_json(g));
    CHECK(h.table() == g.table());
    CHECK(h.labels() == g.labels());
  }
  FinGroupoid i3 = FinGroupoid::codiscrete(3);
  CHECK(same_groupoid(groupoid_from_json(to_json(i3)), i3));
  FinGroup s3 = FinGroup::symmetric(3);
  FinGroupoid conj = action_groupoid(s3, 6, conjugation_action(s3));
  CHECK(same_groupoid(groupoid_from_json(to_json(conj)), conj));
}

TEST_CASE("crossed complex round trips") {
  for (auto& [name, a] : corpus::algebras()) {
    CAPTURE(name);
    CrossedComplex b = crossed_complex_from_json(to_json(a));
    CHECK(to_json(b) == to_json(a));
    CHECK(b.validate());
  }
  for (auto& [name, m] : corpus::modules()) {
    CAPTURE(name);
    CrossedModule n = crossed_module_from_json(to_json(m));
    CHECK(n.boundary == m.boundary);
    CHECK(n.action == m.action);
  }
  CrossedComplex multi = iota1(FinGroupoid::codiscrete(2));
  CHECK(to_json(crossed_complex_from_json(to_json(multi))) == to_json(multi));
}

TEST_CASE("algebra inputs are autodetected") {
  CHECK(algebra_from_json(load_json(data("s3.json"))).a1().num_arrows() == 6);
  CHECK(algebra_from_json(load_json(data("zero-z2-z4.json"))).truncation() == 2);
  CHECK(algebra_from_json(json("builtin:S3")).a1().num_arrows() == 6);
  CHECK(algebra_from_json(json("builtin:I3")).num_objects() == 3);
  CHECK(algebra_from_json(to_json(FinGroupoid::codiscrete(2))).num_objects() == 2);
  for (std::string n : builtin_algebra_names()) {
    if (auto p = n.find('<'); p != std::string::npos) n = n.substr(0, p) + "3";
    CAPTURE(n);
    CHECK(builtin_algebra(n).validate());
  }
  CHECK(group_input(load_json(data("z4.json"))).order() == 4);
  CHECK(groupoid_input(json("builtin:I2")).num_arrows() == 4);
}

TEST_CASE("stratification round trips") {
  for (const std::string& n : catalog_names()) {
    CAPTURE(n);
    Stratification s = catalog(n);
    Stratification t = stratification_from_json(to_json(s));
    CHECK(corpus::same_shape(s.space, t.space));
    CHECK(s.tags == t.tags);
    CHECK(s.role == t.role);
    CHECK(corpus::same_shape(stratification_from_json(json("builtin:" + n)).space, s.space));
  }
  Stratification pc = stratification_from_json(load_json(data("prism-circle.json")));
  CHECK(pc.space.num_generators() == 8);
}

TEST_CASE("colouring round trips") {
  CrossedComplex a = iota2(corpus::modules()[2].m);
  for (const SimpSet& x : {torus(), sphere(2)})
    for (const Colouring& f : enumerate_colourings(x, a)) CHECK(colouring_from_json(x, colouring_to_json(x, f)) == f);
}

TEST_CASE("schema errors") {
  CHECK(kind_of([] { group_from_json(json::parse(R"({"table": [[0, 1], [1]]})")); }) == ErrorKind::Schema);
  CHECK(kind_of([] { group_from_json(json::parse(R"({"table": [[0, 1], [1, 1]]})")); }) == ErrorKind::Axiom);
  CHECK(kind_of([] { algebra_from_json(json("builtin:Q8")); }) == ErrorKind::Schema);
  CHECK(kind_of([] { algebra_from_json(json("S3")); }) == ErrorKind::Schema);
  CHECK(kind_of([] { stratification_from_json(json::parse(R"({"generators": [{"id": 0, "dim": 1}]})")); }) == ErrorKind::Schema);
  CHECK(kind_of([] { load_json("/nonexistent/file.json"); }) == ErrorKind::Schema);
  CHECK(kind_of([] {
          crossed_module_from_json(json::parse(R"({"G": {"table": [[0,1],[1,0]]}, "E": {"table": [[0,1],[1,0]]}, "boundary": [1, 1]})"));
        }) == ErrorKind::Axiom);
  std::string err;
  CHECK_FALSE(parse_json("{ not json", &err).has_value());
  CHECK_FALSE(err.empty());
}

TEST_CASE("matrix output") {
  QuinnMatrix q = quinn_matrix(prism(circle()), iota1(FinGroup::symmetric(3)), 0);
  json j = to_json(q);
  CHECK(j["rows"].size() == 3);
  CHECK(j["entries"][0][0] == "1");
  CHECK(j["exact"] == true);
  std::string csv = to_csv(q);
  CHECK(csv.rfind("label,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  QuinnMatrix cu = quinn_matrix(cup(), iota1(FinGroup::symmetric(3)), Rational(1, 3));
  CHECK(to_json(cu)["entries"][0][0] == "1/6*2^(1/3)*3^(1/3)");
}

TEST_CASE("outputs are deterministic") {
  CrossedComplex a = iota1(FinGroup::symmetric(3));
  CHECK(to_json(cobordism_profunctor(handle(), a).prof).dump() == to_json(cobordism_profunctor(handle(), a).prof).dump());
  CHECK(to_json(state_space(torus(), a)).dump() == to_json(state_space(torus(), a)).dump());
}
