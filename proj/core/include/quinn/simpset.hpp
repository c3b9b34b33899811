#pragma once

#include "quinn/common.hpp"

#include <map>
#include <string>
#include <vector>

namespace quinn {

// s_A(core): a degenerate (or, for empty deg, nondegenerate) simplex. deg is the ascending set
// {t : sigma(t) = sigma(t+1)} of the collapsing surjection sigma onto the core's dimension.
struct SimplexRef {
  int core = -1;
  std::vector<int> deg;
  bool degenerate() const { return !deg.empty(); }
  auto operator<=>(const SimplexRef&) const = default;
};

// Collapse set, ascending, of the word s_{w[0]} s_{w[1]} ... s_{w[k-1]} (rightmost applied first).
// The set {d0 < ... < dk} is the normal-form word s_{dk} ... s_{d0}.
std::vector<int> normalise_degeneracy_word(const std::vector<int>& word);

// Finite simplicial set given by its nondegenerate generators. Ids are sorted by (dim, declaration).
class SimpSet {
public:
  class Builder {
  public:
    // faces[i] = d_i; faces must refer to generators declared earlier.
    int add(int dim, std::vector<SimplexRef> faces = {}, std::string label = {});
    int add_vertex(std::string label = {}) { return add(0, {}, std::move(label)); }
    int add_edge(int from, int to, std::string label = {}) { return add(1, {{to, {}}, {from, {}}}, std::move(label)); }
    int size() const { return static_cast<int>(dims_.size()); }
    Report check() const;
    // old_to_new maps declaration index to final id.
    SimpSet build(std::vector<int>* old_to_new = nullptr) const;

  private:
    std::vector<int> dims_;
    std::vector<std::vector<SimplexRef>> faces_;
    std::vector<std::string> labels_;
  };

  int num_generators() const { return static_cast<int>(dims_.size()); }
  int dim(int g) const { return dims_[g]; }
  int dim(const SimplexRef& r) const { return dims_[r.core] + static_cast<int>(r.deg.size()); }
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<int>& generators(int n) const;
  const std::vector<SimplexRef>& faces(int g) const { return faces_[g]; }
  const SimplexRef& face(int g, int i) const { return faces_[g][i]; }
  // d_i of an arbitrary simplex, in normal form.
  SimplexRef face(const SimplexRef& r, int i) const;
  // Vertex j of a generator, and of an arbitrary simplex.
  int vertex(int g, int j) const { return vertices_[g][j]; }
  int vertex(const SimplexRef& r, int j) const;
  // The 01-edge of a generator of dimension >= 1.
  const SimplexRef& edge01(int g) const { return edge01_[g]; }
  // Sub-simplex spanned by the ascending vertex positions `keep`.
  SimplexRef sub_simplex(const SimplexRef& r, const std::vector<int>& keep) const;
  const std::string& label(int g) const { return labels_[g]; }

  // Generators appearing in iterated faces of `gens` (including them), ascending.
  std::vector<int> closure(const std::vector<int>& gens) const;
  bool is_subcomplex(const std::vector<int>& gens) const;
  // Induced subcomplex on `gens` (closed); `embed` maps new ids to old.
  SimpSet induced(const std::vector<int>& gens, std::vector<int>* embed = nullptr) const;

  Report validate() const;
  int euler_characteristic() const;

private:
  std::vector<int> dims_;
  std::vector<std::vector<SimplexRef>> faces_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<int>> vertices_;
  std::vector<SimplexRef> edge01_;
  int walk_vertex(int g, int j) const;
  void cache();
};

int k_count(int i, const SimpSet& x);
// Generators of dimension i not in the subcomplex y (throws if y is not a subcomplex).
int k_count_rel(int i, const SimpSet& x, const std::vector<int>& y);

// A simplicial set with named subcomplexes ("in"/"out" for cobordisms).
struct Stratification {
  SimpSet space;
  std::map<std::string, std::vector<int>> tags;
  std::string role = "manifold";  // manifold | cobordism | window-support
  std::string name;

  const std::vector<int>& tag(const std::string& t) const;
  bool has_tag(const std::string& t) const { return tags.count(t) > 0; }
  // Tagged subcomplex as a simplicial set, generators in tag-list order within each dimension.
  SimpSet tag_model(const std::string& t, std::vector<int>* embed = nullptr) const;
  Report validate() const;
};

// Closed manifold with empty in/out.
Stratification closed(SimpSet x, std::string name = {});

SimpSet point();
SimpSet standard_simplex(int n);
SimpSet interval();
SimpSet circle();
SimpSet sphere(int n);
SimpSet torus();

// Cobordisms ∅ -> circle (disk) and circle -> ∅.
Stratification cup();
Stratification cap();
// Genus one, one boundary circle, ∅ -> circle.
Stratification one_holed_torus();
// Genus one, circle -> circle.
Stratification handle();

// X × Δ(1). Per dimension: X×{0} copies, X×{1} copies, then the cells meeting the switch.
// Tags "in" = X×{0} and "out" = X×{1}, each listed in X order.
Stratification prism(const SimpSet& x, std::string name = {});
// Cylinder over a stratification's space.
Stratification prism(const Stratification& x);
// Image in X of each generator of prism(x) under the projection X × Δ(1) -> X.
std::vector<SimplexRef> prism_projection(const SimpSet& x);

struct GlueResult {
  Stratification result;
  std::vector<int> x_map, y_map;  // generator ids of X and Y in the result
};
// Pushout of X and Y along X."out" ≅ Y."in", matched in list order per dimension.
GlueResult glue_with_maps(const Stratification& x, const Stratification& y);
Stratification glue(const Stratification& x, const Stratification& y);

// The support Z of a window with top and bottom cobordism M, filled by prism(M).
// Tags: "top" (M×{0}), "bottom" (M×{1}), "in_cyl", "out_cyl", "frame" and "in"/"out" unused.
// Tag lists are indexed like the source: top[i] is the copy of generator i of M.
Stratification window_support(const Stratification& top, const Stratification& bottom);
// Checks that a user-supplied filling carries the frame tags in the shape window_support produces.
Report check_window_support(const Stratification& w, const Stratification& top, const Stratification& bottom);

// Builders by name ("circle", "torus", "prism-circle", ...).
std::vector<std::string> catalog_names();
Stratification catalog(const std::string& name);

}  // namespace quinn
