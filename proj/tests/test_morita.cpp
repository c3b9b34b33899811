#include "corpus.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace quinn;

namespace {

std::vector<FinGroupoid> corpus_groupoids() {
  std::vector<FinGroupoid> out;
  for (auto& [n, g] : corpus::groups()) {
    out.push_back(FinGroupoid::from_group(g));
    out.push_back(action_groupoid(g, g.order(), conjugation_action(g)));
  }
  for (int k = 1; k <= 4; ++k) out.push_back(FinGroupoid::codiscrete(k));
  for (auto& [n, m] : corpus::modules()) {
    out.push_back(crs_pi1(circle(), iota2(m)).groupoid);
    out.push_back(crs_pi1(sphere(2), iota2(m)).groupoid);
  }
  return out;
}

}  // namespace

TEST_CASE("groupoid algebras are associative and unital") {
  for (const FinGroupoid& g : corpus_groupoids()) {
    Algebra a = groupoid_algebra(g);
    CHECK(a.dim == g.num_arrows());
    CHECK(check_algebra(a));
    for (int x = 0; x < a.dim; ++x)
      for (int y = 0; y < a.dim; ++y)
        for (const auto& [d, v] : a.c[x][y]) CHECK((v == 1 || v == 0));
  }
}

TEST_CASE("group algebra of Z2") {
  Algebra a = groupoid_algebra(FinGroupoid::from_group(FinGroup::cyclic(2)));
  CHECK(a.dim == 2);
  CHECK(a.mul(a.basis(1), a.basis(1)) == a.basis(0));
  CHECK(a.unit == a.basis(0));
}

TEST_CASE("codiscrete groupoids give matrix algebras") {
  for (int k = 1; k <= 4; ++k) {
    FinGroupoid i = FinGroupoid::codiscrete(k);
    Algebra a = groupoid_algebra(i);
    CHECK(a.dim == k * k);
    CHECK(check_elementary_matrices(a, i));
  }
  // The elementary relations fail for a group algebra of the same dimension.
  FinGroupoid z4 = FinGroupoid::from_group(FinGroup::cyclic(4));
  FinGroupoid i2 = FinGroupoid::codiscrete(2);
  CHECK_FALSE(find_algebra_iso(groupoid_algebra(z4), groupoid_algebra(i2)).has_value());
}

TEST_CASE("algebra isomorphism search") {
  FinGroup s3 = FinGroup::symmetric(3);
  Algebra a = groupoid_algebra(action_groupoid(s3, 6, conjugation_action(s3)));
  auto self = find_algebra_iso(a, a);
  REQUIRE(self.has_value());
  CHECK(check_algebra_iso(a, a, *self));
  std::vector<int> swap(a.dim);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[7]);
  CHECK_FALSE(check_algebra_iso(a, a, swap));
}

TEST_CASE("frobenius data") {
  for (const FinGroupoid& g : corpus_groupoids()) {
    Algebra a = groupoid_algebra(g);
    FrobeniusData f = frobenius_data(g);
    CAPTURE(g.num_arrows());
    CHECK(check_frobenius(a, f));
  }
  FinGroupoid z2 = FinGroupoid::from_group(FinGroup::cyclic(2));
  FrobeniusData f = frobenius_data(z2);
  CHECK(f.lambda == std::vector<Rational>{1, 0});
  CHECK(f.e.size() == 2);
  FrobeniusData i2 = frobenius_data(FinGroupoid::codiscrete(2));
  for (auto& [x, y, c] : i2.ebar) CHECK(c == Rational(1, 2));
  // A wrong counit breaks compatibility.
  FrobeniusData bad = f;
  bad.lambda = {2, 0};
  CHECK_FALSE(check_frobenius(groupoid_algebra(z2), bad));
}

TEST_CASE("lin2 bimodules") {
  FinGroup s3 = FinGroup::symmetric(3);
  CobordismProfunctor pc = cobordism_profunctor(prism(circle()), iota1(s3));
  Bimodule m = lin2_bimodule(pc.prof);
  CHECK(m.dim == 36);
  CHECK(check_bimodule(m));
  Bimodule h = lin2_bimodule(hom_profunctor(pc.in.groupoid));
  Bimodule r = regular_bimodule(groupoid_algebra(pc.in.groupoid));
  CHECK(check_bimodule(r));
  std::vector<SparseVec> id(r.dim);
  for (int i = 0; i < r.dim; ++i) id[i] = {{i, 1}};
  CHECK(check_bimodule_iso(h, r, id));
  Profunctor empty;
  empty.left = pc.prof.left;
  empty.right = pc.prof.right;
  empty.left_act.assign(empty.left.num_arrows(), {});
  Bimodule z = lin2_bimodule(empty);
  CHECK(z.dim == 0);
  CHECK(tensor_over(m, z).result.dim == 0);
}

TEST_CASE("tensor products over groupoid algebras") {
  FinGroup s3 = FinGroup::symmetric(3);
  Algebra a = groupoid_algebra(action_groupoid(s3, 6, conjugation_action(s3)));
  Bimodule r = regular_bimodule(a);
  Tensor t = tensor_over(r, r);
  CHECK(t.result.dim == a.dim);
  CHECK(check_bimodule(t.result));
  // v ⊗ w |-> vw identifies r ⊗ r with r; check through the projection of basis tensors.
  for (int v = 0; v < a.dim; ++v)
    for (int w = 0; w < a.dim; ++w) {
      SparseVec vw = a.mul(a.basis(v), a.basis(w));
      SparseVec lhs = t.project(v, w);
      SparseVec rhs;
      for (const auto& [d, c] : vw) {
        // d ⊗ 1 with 1 = Σ identities.
        for (const auto& [u, cu] : a.unit) axpy(rhs, c * cu, t.project(d, u));
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("tensor quotients match the rank of the relations") {
  Algebra z2 = groupoid_algebra(FinGroupoid::from_group(FinGroup::cyclic(2)));
  Algebra one = groupoid_algebra(FinGroupoid::from_group(FinGroup::trivial()));
  REQUIRE(z2.unit == SparseVec{{0, Rational(1)}});
  Bimodule m = regular_bimodule(z2);
  // Left Q[Z2]-module given by the action of g on each basis vector.
  auto left_module = [&](const std::vector<SparseVec>& g_action) {
    Bimodule n;
    n.left = z2;
    n.right = one;
    n.dim = static_cast<int>(g_action.size());
    n.lact.assign(2, std::vector<SparseVec>(n.dim));
    n.ract.assign(n.dim, std::vector<SparseVec>(1));
    for (int w = 0; w < n.dim; ++w) {
      n.lact[0][w] = {{w, Rational(1)}};
      n.lact[1][w] = g_action[w];
      n.ract[w][0] = {{w, Rational(1)}};
    }
    return n;
  };
  // Independent count: dim of the tensor square minus the rank of the balancing relations.
  auto expected_dim = [&](const Bimodule& n) {
    std::vector<SparseVec> rels;
    for (int v = 0; v < m.dim; ++v)
      for (int b = 0; b < 2; ++b)
        for (int w = 0; w < n.dim; ++w) {
          SparseVec r;
          for (const auto& [v2, c] : m.ract[v][b]) axpy(r, c, {{v2 * n.dim + w, Rational(1)}});
          for (const auto& [w2, c] : n.lact[b][w]) axpy(r, -c, {{v * n.dim + w2, Rational(1)}});
          rels.push_back(r);
        }
    return m.dim * n.dim - rank(rels, m.dim * n.dim);
  };
  // Sign representation: two-term relations with ratio -1.
  Bimodule sign = left_module({SparseVec{{0, Rational(-1)}}});
  REQUIRE(check_bimodule(sign));
  Tensor ts = tensor_over(m, sign);
  CHECK(ts.result.dim == 1);
  CHECK(ts.result.dim == expected_dim(sign));
  SparseVec minus_e;
  axpy(minus_e, Rational(-1), ts.project(0, 0));
  CHECK(ts.project(1, 0) == minus_e);
  // Regular module in the basis {e, e + g}: g e = (e + g) - e gives three-term relations.
  Bimodule skew = left_module({SparseVec{{0, Rational(-1)}, {1, Rational(1)}}, SparseVec{{1, Rational(1)}}});
  REQUIRE(check_bimodule(skew));
  Tensor tk = tensor_over(m, skew);
  CHECK(tk.result.dim == 2);
  CHECK(tk.result.dim == expected_dim(skew));
  CHECK(check_bimodule(tk.result));
}

TEST_CASE("cylinder bimodules are invertible") {
  for (auto& [name, alg] : corpus::algebras()) {
    CAPTURE(name);
    CobordismProfunctor pc = cobordism_profunctor(catalog("double-prism-circle"), alg);
    Bimodule m = lin2_bimodule(pc.prof);
    Tensor t = tensor_over(m, m);
    CHECK(t.result.dim == groupoid_algebra(pc.in.groupoid).dim);
    Composite c = compose_profunctors(pc.prof, pc.prof);
    CHECK(check_bimodule_iso(lin2_bimodule(c.prof), t.result, composition_map(c, t)));
  }
}

TEST_CASE("quantum double") {
  for (auto& [name, g] : corpus::groups()) {
    CAPTURE(name);
    DoubleOracle o = quantum_double_oracle(g);
    CHECK(o.dg.dim == g.order() * g.order());
    CHECK(check_algebra(o.dg));
    CHECK(o.explicit_iso);
    CHECK(o.searched.has_value());
    if (g.is_abelian()) CHECK(o.literal_assoc);
  }
  DoubleOracle s3 = quantum_double_oracle(FinGroup::symmetric(3));
  CHECK(s3.dg.dim == 36);
  CHECK_FALSE(s3.literal_assoc);
  DoubleOracle z2 = quantum_double_oracle(FinGroup::cyclic(2), false);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(z2.dg.mul(z2.dg.basis(x), z2.dg.basis(y)) == z2.dg.mul(z2.dg.basis(y), z2.dg.basis(x)));
}
