#include "corpus.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace quinn;

namespace {

oracle::XMod raw(const CrossedModule& m) { return {m.G.table(), m.E.table(), m.boundary}; }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("nerve counts") {
  for (auto& [name, g] : corpus::groups()) {
    CAPTURE(name);
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(n);
      long long c = count_colourings(standard_simplex(n), iota1(g));
      CHECK(c == ipow(g.order(), n));
      CHECK(c == oracle::nerve_count(g.table(), n));
    }
  }
  CHECK(count_colourings(standard_simplex(2), iota1(FinGroup::cyclic(2))) == 4);
}

TEST_CASE("crossed module nerve counts") {
  for (auto& [name, m] : corpus::modules()) {
    CAPTURE(name);
    auto o = raw(m);
    CHECK(count_colourings(standard_simplex(2), iota2(m)) == oracle::xmod_triangle_count(o));
    CHECK(count_colourings(standard_simplex(3), iota2(m)) == oracle::xmod_tetrahedron_count(o));
  }
}

TEST_CASE("closed surface counts") {
  FinGroup s3 = FinGroup::symmetric(3);
  CHECK(count_colourings(circle(), iota1(s3)) == 6);
  CHECK(count_colourings(torus(), iota1(s3)) == 18);
  for (auto& [name, g] : corpus::groups()) {
    CAPTURE(name);
    CHECK(count_colourings(torus(), iota1(g)) == oracle::hom_z2(g.table()));
    CHECK(count_colourings(sphere(2), iota1(g)) == 1);
  }
  for (auto& [name, m] : corpus::modules()) {
    CAPTURE(name);
    CHECK(count_colourings(sphere(2), iota2(m)) == static_cast<long long>(oracle::kernel(raw(m)).size()));
  }
}

TEST_CASE("enumeration is canonical and duplicate free") {
  for (auto& [name, a] : corpus::algebras()) {
    CAPTURE(name);
    auto all = enumerate_colourings(torus(), a);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(static_cast<long long>(all.size()) == count_colourings(torus(), a));
    for (const Colouring& f : all) CHECK(check_colouring(torus(), a, f));
  }
}

TEST_CASE("homotopy addition label in dimension two") {
  SimpSet t = torus();
  FinGroup s3 = FinGroup::symmetric(3);
  CrossedComplex a = iota1(s3);
  int sigma = t.generators(2)[0];
  int ea = t.face(sigma, 2).core, eb = t.face(sigma, 0).core, ec = t.face(sigma, 1).core;
  Colouring f(t.num_generators(), 0);
  for (int ga = 0; ga < 6; ++ga)
    for (int gb = 0; gb < 6; ++gb)
      for (int gc = 0; gc < 6; ++gc) {
        f[ea] = ga;
        f[eb] = gb;
        f[ec] = gc;
        CHECK(boundary_label(t, a, f, sigma) == s3.mul(s3.mul(ga, gb), s3.inv(gc)));
      }
  // Everything on the sphere's top cell is degenerate.
  SimpSet s = sphere(2);
  Colouring z(s.num_generators(), 0);
  CHECK(boundary_label(s, a, z, s.generators(2)[0]) == s3.identity());
}

TEST_CASE("boundary labels are cycles") {
  // ∂ of the label of a 3-cell is trivial once its faces satisfy their own conditions.
  for (auto& [name, m] : corpus::modules()) {
    CAPTURE(name);
    CrossedComplex a = iota2(m);
    SimpSet d3 = standard_simplex(3);
    int top = d3.generators(3)[0];
    std::vector<int> embed;
    SimpSet skel = d3.induced(d3.closure(d3.generators(2)), &embed);
    long long checked = 0;
    for_each_colouring(skel, a, {}, [&](const Colouring& f) {
      Colouring g(d3.num_generators(), 0);
      for (int i = 0; i < skel.num_generators(); ++i) g[embed[i]] = f[i];
      int l = boundary_label(d3, a, g, top);
      CHECK(m.boundary[l] == m.G.identity());
      ++checked;
      return true;
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("relative enumeration") {
  for (auto& [name, g] : corpus::groups()) {
    CAPTURE(name);
    CrossedComplex a = iota1(g);
    Stratification pc = prism(circle());
    SimpSet in = pc.tag_model("in"), out = pc.tag_model("out");
    auto ins = enumerate_colourings(in, a), outs = enumerate_colourings(out, a);
    long long total = 0;
    for (const Colouring& f : ins)
      for (const Colouring& fp : outs) {
        auto fill = enumerate_relative(pc.space, a, {boundary_condition(pc, "in", f), boundary_condition(pc, "out", fp)});
        int ge = f[in.generators(1)[0]], gp = fp[out.generators(1)[0]];
        long long expect = 0;
        for (int h = 0; h < g.order(); ++h) expect += oracle::conj(g.table(), h, ge) == gp;
        CHECK(static_cast<long long>(fill.size()) == expect);
        total += static_cast<long long>(fill.size());
      }
    CHECK(total == count_colourings(pc.space, a));
  }
  // One free edge between pinned ends.
  Stratification iv = prism(point());
  CrossedComplex s3 = iota1(FinGroup::symmetric(3));
  auto fill = enumerate_relative(iv.space, s3, {boundary_condition(iv, "in", {0}), boundary_condition(iv, "out", {0})});
  CHECK(fill.size() == 6);
}

TEST_CASE("relative and absolute enumeration agree on all cobordisms") {
  for (auto& [name, a] : corpus::algebras()) {
    CAPTURE(name);
    for (const Stratification& m : corpus::cobordisms()) {
      CAPTURE(m.name);
      if (m.space.num_generators() > 12) continue;
      auto ins = enumerate_colourings(m.tag_model("in"), a), outs = enumerate_colourings(m.tag_model("out"), a);
      std::vector<Colouring> joined;
      for (const Colouring& f : ins)
        for (const Colouring& fp : outs) {
          auto part = enumerate_relative(m.space, a, {boundary_condition(m, "in", f), boundary_condition(m, "out", fp)});
          joined.insert(joined.end(), part.begin(), part.end());
        }
      std::sort(joined.begin(), joined.end());
      CHECK(std::adjacent_find(joined.begin(), joined.end()) == joined.end());
      CHECK(joined == enumerate_colourings(m.space, a));
    }
  }
}

TEST_CASE("restriction") {
  CrossedComplex a = iota1(FinGroup::symmetric(3));
  SimpSet t = torus();
  std::vector<int> all(t.num_generators());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> skel;
  SimpSet sk = t.induced(t.closure(t.generators(1)), &skel);
  for (const Colouring& f : enumerate_colourings(t, a)) {
    CHECK(restrict_colouring(f, all) == f);
    Colouring e = restrict_colouring(f, skel);
    CHECK(check_colouring(sk, a, e));
    CHECK(e.size() == 4);
    CHECK(restrict_colouring(f, {t.generators(0)[0]}) == Colouring{0});
  }
}
