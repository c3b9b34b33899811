#pragma once

#include "quinn/homotopy.hpp"

#include <map>

namespace quinn {

// c · ∏ p^{e_p} over primes p with exponents in (0,1), or a float when a sum of unlike radicals forced it.
class Scalar {
public:
  Scalar() = default;
  Scalar(const Rational& c) : coeff_(c) {}
  Scalar(long c) : coeff_(c) {}
  // base^e for base >= 0.
  static Scalar power(const Rational& base, const Rational& e);
  static Scalar from_double(double v);

  bool is_float() const { return float_; }
  bool is_rational() const { return !float_ && rad_.empty(); }
  bool is_zero() const { return !float_ && coeff_ == 0; }
  // Throws Error(Precondition) unless is_rational().
  const Rational& rational() const;
  double approx() const;
  std::string str() const;

  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator+(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  // Exact comparison; float values compare with relative tolerance 1e-12.
  bool operator==(const Scalar& o) const;

private:
  void normalise();
  bool float_ = false;
  double value_ = 0;
  Rational coeff_ = 0;
  std::map<long, Rational> rad_;
};

Rational theta(const CrossedComplex& a, const std::vector<int>& k_counts);  // reduced A
// ∏_k (∏ over generators c of |k-fold homotopy slots at c|)^{(-1)^k}, optionally only over internal cells.
Rational theta_at(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const std::vector<int>& fixed_cells = {});

// "[v=x,e=g,...]" with generator labels from X and element labels from A.
std::string colouring_label(const SimpSet& x, const CrossedComplex& a, const Colouring& f);

struct StateSpace {
  SimpSet space;
  std::vector<Colouring> basis;      // least colouring of each homotopy class
  std::vector<int> class_size;
  std::vector<Rational> content;     // χ^π of each class
  std::vector<std::string> labels;
  RelClasses classes;                // all colourings, classes under free homotopy
  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const Colouring& f) const;  // class index of any colouring
};
StateSpace state_space(const SimpSet& x, const CrossedComplex& a);

Rational chi_pi_component(const SimpSet& x, const CrossedComplex& a, const Colouring& f);
Rational chi_pi_rel_fibre(const SimpSet& x, const CrossedComplex& a, const std::vector<BoundaryCondition>& conds);

struct QuinnMatrix {
  StateSpace in, out;
  Rational s;
  std::vector<std::vector<Scalar>> entries;
  std::vector<std::vector<long long>> fillings;  // N(f, f')
  bool exact() const;
  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};
QuinnMatrix quinn_matrix(const Stratification& m, const CrossedComplex& a, const Rational& s);
std::vector<std::vector<Scalar>> matmul(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b);
bool is_identity(const std::vector<std::vector<Scalar>>& m);

// M_s == D_in^{s-t} M_t D_out^{t-s}, with D the diagonal of class contents.
Report s_conjugation_check(const QuinnMatrix& ms, const QuinnMatrix& mt);

// CRS(Π(X), A) through level 2 as a chain tower, for the homotopy-group path of χ^π (truncation <= 2).
ChainTower crs_chain_tower(const SimpSet& x, const CrossedComplex& a);

}  // namespace quinn
