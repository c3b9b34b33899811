#pragma once

#include "quinn/extprof.hpp"
#include "quinn/linalg.hpp"

#include <optional>

namespace quinn {

// Finite-dimensional algebra over ℚ with sparse structure constants: e_a e_b = Σ_d c[a][b][d] e_d.
struct Algebra {
  int dim = 0;
  std::vector<std::vector<SparseVec>> c;
  SparseVec unit;
  std::vector<std::string> labels;

  SparseVec mul(const SparseVec& u, const SparseVec& v) const;
  SparseVec basis(int a) const { return {{a, Rational(1)}}; }
};
Report check_algebra(const Algebra& a);
bool same_algebra(const Algebra& a, const Algebra& b);

// Arrows as basis; (x -g-> y)(x' -g'-> y') = δ(y, x') (g then g').
Algebra groupoid_algebra(const FinGroupoid& g);
// E_ij E_kl = δ_jk E_il for the arrows i -> j of I(k).
Report check_elementary_matrices(const Algebra& a, const FinGroupoid& codiscrete);

// Basis permutations preserving structure constants and the unit.
Report check_algebra_iso(const Algebra& a, const Algebra& b, const std::vector<int>& phi);
// Basis-permutation search pruned by per-element invariants and product propagation.
std::optional<std::vector<int>> find_algebra_iso(const Algebra& a, const Algebra& b);

// (A, B)-bimodule with sparse action tables on basis elements.
struct Bimodule {
  Algebra left, right;
  int dim = 0;
  std::vector<std::vector<SparseVec>> lact;  // [a][v]
  std::vector<std::vector<SparseVec>> ract;  // [v][b]
  std::vector<std::string> labels;

  SparseVec act_left(const SparseVec& a, const SparseVec& v) const;
  SparseVec act_right(const SparseVec& v, const SparseVec& b) const;
};
Report check_bimodule(const Bimodule& m);
Bimodule regular_bimodule(const Algebra& a);
Bimodule lin2_bimodule(const Profunctor& p);

// M ⊗_B N as a quotient of the tensor square; the basis is the set of free columns v*N.dim + w.
struct Tensor {
  Bimodule result;
  std::vector<int> basis;  // column of each result basis element
  std::map<int, int> position;
  std::vector<SparseVec> image;  // per column v*N.dim + w, in the result basis
  int width = 0;
  // Image of v ⊗ w in the result basis.
  SparseVec project(int v, int w) const;
};
Tensor tensor_over(const Bimodule& m, const Bimodule& n);

// phi[i] is the image of basis element i; checks equivariance and invertibility.
Report check_bimodule_iso(const Bimodule& m, const Bimodule& n, const std::vector<SparseVec>& phi);
// The map Lin²(P∘Q) -> Lin²(P) ⊗ Lin²(Q), [p, q] |-> p ⊗ q.
std::vector<SparseVec> composition_map(const Composite& pq, const Tensor& t);

struct FrobeniusData {
  std::vector<Rational> lambda;
  std::vector<std::tuple<int, int, Rational>> e, ebar;  // Σ x_i ⊗ y_i
};
FrobeniusData frobenius_data(const FinGroupoid& g);
Report check_frobenius(const Algebra& a, const FrobeniusData& f);

// Pairs (g, a), id g*|G| + a. The literal rule is (g,a)(g',a') = δ(aga⁻¹, g')(g, aa'); the associative
// one, matching the conjugation groupoid, is δ(aga⁻¹, g')(g, a'a).
Algebra quantum_double(const FinGroup& g, bool literal = false);

struct DoubleOracle {
  Algebra dg, crs;
  std::vector<int> bijection;  // crs arrow -> D(G) basis element
  Report explicit_iso, literal_assoc;
  std::optional<std::vector<int>> searched;
};
// Compares D(G) with the groupoid algebra of crs_pi1(circle, ι1(G)) through the arrow with target loop g
// and vertex value h |-> (h g h⁻¹, h⁻¹), and by an independent search.
DoubleOracle quantum_double_oracle(const FinGroup& g, bool search = true);

}  // namespace quinn
