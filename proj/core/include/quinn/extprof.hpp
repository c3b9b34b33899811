#pragma once

#include "quinn/tqft.hpp"

#include <optional>

namespace quinn {

// A profunctor G^op × G' -> Vect that is free on finite sets with groupoid actions. Element i lies over
// the object pair (x[i], y[i]). For α : x' -> x in G, left[α][i] is α·i over (x', y) when x[i] = x and -1
// otherwise; for β : y -> y' in G', right[i][β] is i·β over (x, y') when y[i] = y.
struct Profunctor {
  FinGroupoid left, right;
  std::vector<int> x, y;
  std::vector<std::vector<int>> left_act;   // [arrow][element]
  std::vector<std::vector<int>> right_act;  // [element][arrow]
  std::vector<std::string> labels;

  // Present for cobordism profunctors: least filling and size of each rel class, and the boundary colourings.
  std::vector<Colouring> reps;
  std::vector<int> class_size;
  std::vector<Colouring> left_objects, right_objects;

  int size() const { return static_cast<int>(x.size()); }
  std::vector<int> basis(int ox, int oy) const;
};

Report check_profunctor(const Profunctor& p);
bool same_groupoid(const FinGroupoid& g, const FinGroupoid& h);

// Fillings of M rel boundary, over crs_pi1 of the in and out boundaries.
struct CobordismProfunctor {
  Profunctor prof;
  CrsPi1 in, out;
  RelClasses classes;
  std::vector<int> in_embed, out_embed;
};
CobordismProfunctor cobordism_profunctor(const Stratification& m, const CrossedComplex& a);

// Hom-profunctor of G: elements are the arrows, over (src, tgt).
Profunctor hom_profunctor(const FinGroupoid& g);

// Coend over the middle groupoid. pair_class maps each composable pair (p, q) to its element.
struct Composite {
  Profunctor prof;
  std::map<std::pair<int, int>, int> pair_class;
  std::vector<std::pair<int, int>> rep;  // least pair of each element
};
Composite compose_profunctors(const Profunctor& p, const Profunctor& q);

// An equivariant bijection P -> Q (element map), or nothing if none exists.
std::optional<std::vector<int>> profunctor_iso(const Profunctor& p, const Profunctor& q);
Report check_profunctor_map(const Profunctor& p, const Profunctor& q, const std::vector<int>& phi);

// The canonical map P_M ∘ P_M' -> P_{glue(M, M')} sending [p, q] to the class of the glued filling.
std::vector<int> gluing_map(const CobordismProfunctor& pm, const CobordismProfunctor& pn, const Composite& comp,
                            const GlueResult& g, const CobordismProfunctor& glued);

// Matrix from P(x, y) to Q(x, y) for every object pair, stored densely over element ids.
struct NatTransform {
  Profunctor source, target;
  std::vector<std::vector<Rational>> m;  // [source element][target element]
};
Report check_naturality(const NatTransform& t);
bool is_identity(const NatTransform& t);
NatTransform vertical_compose(const NatTransform& s, const NatTransform& t);  // s then t
NatTransform horizontal_compose(const NatTransform& s, const NatTransform& t, const Composite& src, const Composite& tgt);
NatTransform identity_nat(const Profunctor& p);

// The window between cobordisms top and bottom filled by w (tags as from window_support), A reduced.
NatTransform window_nat_transform(const Stratification& w, const Stratification& top, const Stratification& bottom,
                                  const CrossedComplex& a);
NatTransform vertical_identity_window(const Stratification& m, const CrossedComplex& a);

}  // namespace quinn
