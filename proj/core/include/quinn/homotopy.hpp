#pragma once

#include "quinn/colouring.hpp"

#include <map>
#include <unordered_map>

namespace quinn {

// A k-fold f-homotopy, one value per generator of X:
//   k = 1: vertex v -> A1 arrow into f0(v); edge e -> A2(f0(tgt e)); n-cell c -> A_{n+1}(f0(initial vertex));
//   k = 2: vertex v -> A2(f0(v)); edge e -> A3(f0(tgt e)); n-cell c -> A_{n+2}(f0(initial vertex)).
// Levels above the truncation carry 0.
using Homotopy = std::vector<int>;

// Object of A the value at generator c lives over.
int homotopy_base(const SimpSet& x, const Colouring& f, int c);
// Candidate values per generator, ascending.
std::vector<std::vector<int>> homotopy_choices(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int k);
Homotopy identity_homotopy(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int k);
void for_each_homotopy(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int k,
                       const std::function<void(const Homotopy&)>& visit);

// h^k_{n-1}(∂c) for an n-generator c: element of A_{n-1+k}(f0(initial vertex)).
int extend_on_boundary(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const Homotopy& h, int k, int c);

// Source f' of the arrow (H, f): f' -> f.
Colouring apply_homotopy(const SimpSet& x, const CrossedComplex& a, const Homotopy& h, const Colouring& f);
// (H', f') : f'' -> f' followed by (H, f) : f' -> f.
Homotopy compose_homotopies(const SimpSet& x, const CrossedComplex& a, const Homotopy& hp, const Homotopy& h, const Colouring& f);
// The inverse arrow f -> f' as an f'-homotopy.
Homotopy invert_homotopy(const SimpSet& x, const CrossedComplex& a, const Homotopy& h, const Colouring& f);
// δ of a 2-fold f-homotopy: an endo-arrow at f.
Homotopy delta2(const SimpSet& x, const CrossedComplex& a, const Homotopy& h2, const Colouring& f);
std::vector<Homotopy> delta2_images(const SimpSet& x, const CrossedComplex& a, const Colouring& f);

Homotopy restrict_homotopy(const Homotopy& h, const std::vector<int>& embed);
// Extends a homotopy on a subcomplex by identities (f is the target colouring on X).
Homotopy expand_homotopy(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const Homotopy& on_y,
                         const std::vector<int>& embed);

// π1 of CRS(Π(X), A): colourings and 2-fold-homotopy classes of homotopies.
struct CrsPi1 {
  std::vector<Colouring> objects;
  FinGroupoid groupoid;
  std::vector<Homotopy> rep;  // canonical (least) representative per arrow; target = objects[groupoid.tgt(a)]
  std::vector<std::vector<Homotopy>> deltas;  // δ-images at each object

  int object_of(const Colouring& f) const;
  Homotopy canonical(const SimpSet& x, const CrossedComplex& a, int target, const Homotopy& h) const;
  int arrow_of(const SimpSet& x, const CrossedComplex& a, int target, const Homotopy& h) const;

  std::map<Colouring, int> object_index;
  std::map<std::pair<int, Homotopy>, int> arrow_index;  // (target, canonical rep) -> arrow
};
CrsPi1 crs_pi1(const SimpSet& x, const CrossedComplex& a);
// Checks that δ-images at every object are closed under conjugation by all arrows there, so that left
// and right cosets coincide.
Report check_delta_normal(const SimpSet& x, const CrossedComplex& a, const CrsPi1& p);

// Classes of fillings (all agree on the subcomplex y) under homotopies that are identities on y.
struct RelClasses {
  std::vector<Colouring> fillings;
  std::vector<int> class_of;        // per filling
  std::vector<int> rep;             // per class: index of least filling
  std::vector<int> size;            // per class
  std::unordered_map<Colouring, int, ColouringHash> index;  // filling -> index
  int num_classes() const { return static_cast<int>(rep.size()); }
  int class_of_colouring(const Colouring& f) const;
};
RelClasses rel_classes(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& y, std::vector<Colouring> fillings);

// The rel class of (Expand η) applied to a filling; η is a homotopy on the subcomplex embedded by embed.
int holonomy_act(const SimpSet& x, const CrossedComplex& a, const RelClasses& classes, const std::vector<int>& embed,
                 const Homotopy& eta, int filling);

}  // namespace quinn
