#pragma once

#include "quinn/finalg.hpp"
#include "quinn/simpset.hpp"

#include <functional>

namespace quinn {

// One value per generator of X: an object (dim 0), an A1 arrow f0(d1 e) -> f0(d0 e) (dim 1), or an
// element of A_n at f0 of the initial vertex (dim n >= 2; always 0 above the truncation).
using Colouring = std::vector<int>;

struct ColouringHash {
  std::size_t operator()(const Colouring& f) const noexcept {
    std::size_t h = f.size();
    for (int v : f) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Boundary of an n-generator in Π(X) as a word in its (n-1)-faces. For n = 2 the word is a path of
// edges in order; for n >= 3 the twisted term is acted on by the inverse of the 01-edge.
struct HalTerm {
  SimplexRef face;
  int sign = 1;
  bool twisted = false;
};
struct HalWord {
  int base = -1;          // initial vertex
  SimplexRef twist_edge;  // 01-edge
  std::vector<HalTerm> terms;
};
HalWord hal_word(const SimpSet& x, int c);

// Value of f on a face reference, or -1 when the face is degenerate (an identity).
int face_value(const SimpSet& x, const Colouring& f, const SimplexRef& r);
// The homotopy addition label of an n-generator, n >= 2: an A1 loop (n = 2) or an element of
// A_{n-1}(f0(base)); above the truncation of A it is the identity.
int boundary_label(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int c);

Report check_colouring(const SimpSet& x, const CrossedComplex& a, const Colouring& f);

// fixed[g] >= 0 pins generator g; an empty vector pins nothing. The visitor returns false to stop.
// Unpinned enumeration visits colourings in lexicographic order; pinned enumeration has no fixed order.
void for_each_colouring(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& fixed,
                        const std::function<bool(const Colouring&)>& visit);
std::vector<Colouring> enumerate_colourings(const SimpSet& x, const CrossedComplex& a);
long long count_colourings(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& fixed = {});

// Colourings of X restricting to the given colourings of tagged subcomplexes. Each boundary colouring is
// a colouring of the tag model (generators in tag order).
struct BoundaryCondition {
  SimpSet model;
  std::vector<int> embed;  // model id -> X id
  Colouring colouring;
};
BoundaryCondition boundary_condition(const Stratification& s, const std::string& tag, Colouring c);
std::vector<int> pin(const SimpSet& x, const std::vector<BoundaryCondition>& conds);
std::vector<Colouring> enumerate_relative(const SimpSet& x, const CrossedComplex& a, const std::vector<BoundaryCondition>& conds);

Colouring restrict_colouring(const Colouring& f, const std::vector<int>& embed);
// f ∘ p for a simplicial map p given by the image of each generator; degenerate images carry identities.
Colouring pullback_colouring(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const std::vector<SimplexRef>& image);

}  // namespace quinn
