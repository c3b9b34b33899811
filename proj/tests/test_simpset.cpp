#include "corpus.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace quinn;

namespace {

std::vector<int> counts(const SimpSet& x) {
  std::vector<int> k;
  for (int n = 0; n <= x.max_dim(); ++n) k.push_back(k_count(n, x));
  return k;
}

std::vector<int> sub_counts(const SimpSet& x, const std::vector<int>& gens) {
  std::vector<int> k(x.max_dim() + 1, 0);
  for (int g : gens) ++k[x.dim(g)];
  return k;
}

}  // namespace

TEST_CASE("builders validate") {
  CHECK(standard_simplex(2).validate());
  CHECK(circle().validate());
  for (const std::string& n : catalog_names()) {
    CAPTURE(n);
    CHECK(catalog(n).validate());
  }
}

TEST_CASE("simplicial identity violations are reported") {
  SimpSet::Builder b;
  int u = b.add_vertex("u"), w = b.add_vertex("w");
  int e = b.add_edge(u, w, "e");
  b.add(2, {{e, {}}, {e, {}}, {e, {}}}, "t");
  REQUIRE(b.check().ok);
  Report r = b.build().validate();
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());

  SimpSet::Builder dangling;
  dangling.add_vertex();
  dangling.add(1, {{0, {}}, {7, {}}});
  CHECK_FALSE(dangling.check().ok);
  CHECK_THROWS(dangling.build());
}

TEST_CASE("cell counts of the basic spaces") {
  CHECK(counts(circle()) == std::vector<int>{1, 1});
  CHECK(counts(torus()) == std::vector<int>{1, 3, 2});
  CHECK(counts(sphere(2)) == std::vector<int>{1, 0, 1});
  CHECK(k_count(1, torus()) == 3);
  CHECK(k_count(5, sphere(2)) == 0);
  CHECK(counts(standard_simplex(3)) == std::vector<int>{4, 6, 4, 1});
  CHECK(counts(interval()) == std::vector<int>{2, 1});
}

TEST_CASE("torus faces") {
  SimpSet t = torus();
  auto gens2 = t.generators(2);
  REQUIRE(gens2.size() == 2);
  // Each triangle has three distinct nondegenerate edges; together they use each edge twice.
  std::map<int, int> uses;
  for (int c : gens2)
    for (int i = 0; i < 3; ++i) {
      CHECK_FALSE(t.face(c, i).degenerate());
      ++uses[t.face(c, i).core];
    }
  for (auto& [e, n] : uses) CHECK(n == 2);
  // σ and τ share the diagonal d1.
  CHECK(t.face(gens2[0], 1) == t.face(gens2[1], 1));
}

TEST_CASE("prism counts match the shuffle formula") {
  for (const SimpSet& x : {point(), interval(), circle(), sphere(2), torus(), standard_simplex(2)}) {
    Stratification p = prism(x);
    CHECK(p.validate());
    CHECK(counts(p.space) == oracle::prism_counts(counts(x)));
    CHECK(p.space.euler_characteristic() == x.euler_characteristic());
    CHECK(corpus::same_shape(p.tag_model("in"), x));
    CHECK(corpus::same_shape(p.tag_model("out"), x));
  }
  CHECK(counts(prism(point()).space) == std::vector<int>{2, 1});
  CHECK(counts(prism(interval()).space) == std::vector<int>{4, 5, 2});
  CHECK(counts(prism(circle()).space) == std::vector<int>{2, 4, 2});
  Stratification pc = prism(circle());
  std::vector<int> ends = pc.tag("in");
  ends.insert(ends.end(), pc.tag("out").begin(), pc.tag("out").end());
  CHECK(k_count_rel(1, pc.space, ends) == 2);
}

TEST_CASE("degeneracy words normalise idempotently") {
  std::vector<int> w;
  std::function<void(int)> go = [&](int len) {
    auto n = normalise_degeneracy_word(w);
    // The collapse set, read in descending order, is itself a word in normal form.
    CHECK(normalise_degeneracy_word(std::vector<int>(n.rbegin(), n.rend())) == n);
    CHECK(std::is_sorted(n.begin(), n.end()));
    CHECK(n.size() == w.size());
    if (len == 0) return;
    for (int i = 0; i < 4; ++i) {
      w.push_back(i);
      go(len - 1);
      w.pop_back();
    }
  };
  go(3);
  // s_i s_j = s_{j+1} s_i for i <= j.
  CHECK(normalise_degeneracy_word({0, 0}) == normalise_degeneracy_word({1, 0}));
}

TEST_CASE("gluing adds counts and euler characteristics") {
  auto cobs = corpus::cobordisms();
  int pairs = 0;
  for (const auto& m : cobs)
    for (const auto& n : cobs) {
      if (!corpus::composable(m, n)) continue;
      CAPTURE(m.name);
      CAPTURE(n.name);
      ++pairs;
      Stratification g = glue(m, n);
      CHECK(g.validate());
      SimpSet mid = m.tag_model("out");
      for (int i = 0; i <= std::max(m.space.max_dim(), n.space.max_dim()); ++i)
        CHECK(k_count(i, g.space) == k_count(i, m.space) + k_count(i, n.space) - k_count(i, mid));
      CHECK(g.space.euler_characteristic() ==
            m.space.euler_characteristic() + n.space.euler_characteristic() - mid.euler_characteristic());
      CHECK(corpus::same_shape(g.tag_model("in"), m.tag_model("in")));
      CHECK(corpus::same_shape(g.tag_model("out"), n.tag_model("out")));
    }
  CHECK(pairs >= 10);
  Stratification pc = prism(circle());
  CHECK(counts(glue(pc, pc).space) == std::vector<int>{3, 7, 4});
  CHECK(counts(glue(prism(point()), prism(point())).space) == std::vector<int>{3, 2});
}

TEST_CASE("gluing along the empty boundary is a disjoint union") {
  Stratification cp = cap(), cu = cup();
  // cap: circle -> ∅ then cup: ∅ -> circle.
  REQUIRE(corpus::composable(cp, cu));
  Stratification g = glue(cp, cu);
  CHECK(g.space.num_generators() == cp.space.num_generators() + cu.space.num_generators());
  CHECK(g.space.euler_characteristic() == 2);
}

TEST_CASE("glue is symmetric up to relabelling on counts") {
  Stratification pc = prism(circle()), h = handle();
  Stratification a = glue(pc, h), b = glue(h, pc);
  CHECK(counts(a.space) == counts(b.space));
  CHECK(a.space.euler_characteristic() == b.space.euler_characteristic());
}

TEST_CASE("window supports") {
  for (const std::string& n : {"prism-point", "prism-circle", "cup", "handle"}) {
    CAPTURE(n);
    Stratification m = catalog(n);
    Stratification w = window_support(m, m);
    CHECK(w.validate());
    CHECK(check_window_support(w, m, m));
    CHECK(counts(w.space) == oracle::prism_counts(counts(m.space)));
    // frame = two copies of M and the cylinders over both boundaries, glued along 4 boundary copies.
    std::vector<int> frame = sub_counts(w.space, w.tag("frame"));
    std::vector<int> expect(w.space.max_dim() + 1, 0);
    for (int i = 0; i <= m.space.max_dim(); ++i) expect[i] += 2 * k_count(i, m.space);
    for (const char* side : {"in", "out"}) {
      SimpSet b = m.tag_model(side);
      if (b.num_generators() == 0) continue;
      auto cyl = oracle::prism_counts(counts(b));
      for (std::size_t i = 0; i < cyl.size(); ++i) expect[i] += cyl[i] - (i <= static_cast<std::size_t>(b.max_dim()) ? 2 * k_count(i, b) : 0);
    }
    CHECK(frame == expect);
  }
  Stratification pc = prism(circle());
  std::vector<int> frame = sub_counts(window_support(pc, pc).space, window_support(pc, pc).tag("frame"));
  CHECK(frame == std::vector<int>{4, 12, 8, 0});
  CHECK_THROWS_AS(window_support(cup(), prism(circle())), Error);
}

TEST_CASE("closed and empty boundaries") {
  Stratification t = closed(torus(), "torus");
  CHECK(t.tag("in").empty());
  CHECK(t.tag("out").empty());
  Stratification w = window_support(t, t);
  std::vector<int> frame = sub_counts(w.space, w.tag("frame"));
  std::vector<int> top = sub_counts(w.space, w.tag("top")), bottom = sub_counts(w.space, w.tag("bottom"));
  for (std::size_t i = 0; i < frame.size(); ++i) CHECK(frame[i] == top[i] + bottom[i]);
}
