#pragma once

#include "quinn/common.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace quinn {

// Finite group given by its multiplication table over elements 0..n-1.
class FinGroup {
public:
  FinGroup() = default;
  // Throws Error(Schema) for non-square/out-of-range tables and Error(Axiom) for non-groups.
  static FinGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  static Report check_table(const std::vector<std::vector<int>>& table);
  static FinGroup trivial();
  static FinGroup cyclic(int n);
  static FinGroup symmetric(int n);  // elements in lexicographic order of permutations
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  bool is_abelian() const;
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Subgroup consisting of `elems` (must be closed); `embed` maps new ids to old ones.
  FinGroup subgroup(const std::vector<int>& elems, std::vector<int>* embed = nullptr) const;
  // Quotient by a normal subgroup; `proj` maps old ids to coset ids. Cosets are ordered by least member.
  FinGroup quotient(const std::vector<int>& normal, std::vector<int>* proj = nullptr) const;
  bool is_normal(const std::vector<int>& elems) const;

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<std::string> labels_;
};

// Brute-force isomorphism search for tiny groups. Returns phi with phi[a] in h.
std::optional<std::vector<int>> find_group_isomorphism(const FinGroup& g, const FinGroup& h);

// Finite groupoid. compose(a, b) is the concatenation "a then b", defined when tgt(a) == src(b).
class FinGroupoid {
public:
  FinGroupoid() = default;

  struct Spec {
    int objects = 0;
    std::vector<int> src, tgt;
    // Called only for composable pairs.
    std::function<int(int, int)> compose;
    std::vector<std::string> object_labels, arrow_labels;
  };
  static Report check(const Spec& spec);
  // Identities and inverses are derived from the composition; throws on failure.
  static FinGroupoid build(const Spec& spec);

  static FinGroupoid from_group(const FinGroup& g);
  static FinGroupoid codiscrete(int k);  // I(k)
  static FinGroupoid discrete(int k);

  int num_objects() const { return nobj_; }
  int num_arrows() const { return static_cast<int>(src_.size()); }
  int src(int a) const { return src_[a]; }
  int tgt(int a) const { return tgt_[a]; }
  int id(int x) const { return id_[x]; }
  int inv(int a) const { return inv_[a]; }
  bool composable(int a, int b) const { return tgt_[a] == src_[b]; }
  int compose(int a, int b) const;
  const std::vector<int>& out(int x) const { return out_[x]; }
  const std::vector<int>& in(int x) const { return in_[x]; }
  int out_index(int a) const { return out_index_[a]; }
  std::vector<int> hom(int x, int y) const;
  bool is_identity(int a) const { return id_[src_[a]] == a; }

  const std::string& object_label(int x) const { return object_labels_[x]; }
  const std::string& arrow_label(int a) const { return arrow_labels_[a]; }

  // pi_0: component index per object (components numbered by least object).
  std::vector<int> component_of() const;
  int num_components() const;
  // Vertex group at x; `embed` maps group elements to arrows.
  FinGroup vertex_group(int x, std::vector<int>* embed = nullptr) const;
  Report validate() const;

private:
  int nobj_ = 0;
  std::vector<int> src_, tgt_, id_, inv_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> out_index_;
  std::vector<std::vector<int>> comp_;  // comp_[a][out_index(b)]
  std::vector<std::string> object_labels_, arrow_labels_;
};

// Explicit check that phi (arrow map) and psi (object map) form an isomorphism of groupoids.
Report check_groupoid_isomorphism(const FinGroupoid& g, const FinGroupoid& h, const std::vector<int>& objects,
                                  const std::vector<int>& arrows);

struct CrossedModule {
  FinGroup G, E;
  std::vector<int> boundary;             // E -> G
  std::vector<std::vector<int>> action;  // action[e][g] = e ◁ g
  Report validate() const;
  static CrossedModule trivial_action(FinGroup G, FinGroup E, std::vector<int> boundary);
};

// Level n >= 2 of a crossed complex.
struct CrossedLevel {
  std::vector<FinGroup> groups;                        // A_n(x)
  std::vector<std::vector<int>> boundary;              // [x][a]: A1 loop at x (n = 2) or element of A_{n-1}(x)
  std::vector<std::vector<std::vector<int>>> action;   // [x][a][k]: a ◁ out(x)[k], element of A_n(tgt)
};

// Finite crossed complex truncated at level N = 1 + levels.size(). Levels above N are trivial.
class CrossedComplex {
public:
  CrossedComplex() = default;
  CrossedComplex(FinGroupoid a1, std::vector<CrossedLevel> levels);

  const FinGroupoid& a1() const { return a1_; }
  int truncation() const { return 1 + static_cast<int>(levels_.size()); }
  int num_objects() const { return a1_.num_objects(); }
  bool reduced() const { return a1_.num_objects() == 1; }
  const CrossedLevel& level(int n) const { return levels_[n - 2]; }

  // Element-level access for n >= 2; above the truncation the only element is 0.
  int size(int n, int x) const;
  int mul(int n, int x, int a, int b) const;
  int inv(int n, int x, int a) const;
  int identity(int n, int x) const;
  // n = 2: an A1 arrow; n >= 3: an element of A_{n-1}(x).
  int boundary(int n, int x, int a) const;
  // a ◁ g for a in A_n(src g), n >= 2; element of A_n(tgt g).
  int act(int n, int x, int a, int g) const;
  const FinGroup& group(int n, int x) const;

  Report validate() const;

private:
  FinGroupoid a1_;
  std::vector<CrossedLevel> levels_;
};

CrossedComplex iota1(const FinGroupoid& g);
CrossedComplex iota1(const FinGroup& g);
CrossedComplex iota2(const CrossedModule& m);

// n = 1: vertex group of A1/∂A2 at c; n >= 2: ker ∂_n / im ∂_{n+1} at c.
FinGroup homotopy_group(const CrossedComplex& a, int c, int n);

// Orders and boundary maps only; enough to count homotopy groups without any action data.
struct ChainTower {
  struct Level {
    std::vector<std::vector<int>> boundary;  // [x][a], as in CrossedLevel; |A_n(x)| = boundary[x].size()
    std::vector<int> identity;               // identity element of A_n(x)
  };
  FinGroupoid a1;
  std::vector<Level> levels;  // n = 2..N
};
ChainTower chain_tower(const CrossedComplex& a);
// Σ over components of ∏_n |π_n|^{(-1)^n}.
Rational homotopy_content_by_groups(const ChainTower& t);

struct ChiPi {
  Rational by_theta;
  Rational by_groups;
};
ChiPi chi_pi(const CrossedComplex& a);
Rational chi_pi_theta(const CrossedComplex& a);

// X⫽G for a left action act[g][x] = g•x. Arrow (x,g) has id x*|G|+g and goes x -> g•x; (x,g) then (g•x,h) = (x,hg).
FinGroupoid action_groupoid(const FinGroup& g, int set_size, const std::vector<std::vector<int>>& act,
                            std::vector<std::string> object_labels = {});
Report check_left_action(const FinGroup& g, int set_size, const std::vector<std::vector<int>>& act);
int orbit_count(const FinGroup& g, int set_size, const std::vector<std::vector<int>>& act);
std::vector<std::vector<int>> conjugation_action(const FinGroup& g);  // g•x = g x g⁻¹

// G ⋉ E on pairs (h,e) with id h*|E|+e and (h',e')(h,e) = (h'h, e(e'◁h)); act[e][h] = e ◁ h.
FinGroup semidirect(const FinGroup& g, const FinGroup& e, const std::vector<std::vector<int>>& act);

}  // namespace quinn
