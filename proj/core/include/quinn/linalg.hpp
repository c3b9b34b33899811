#pragma once

#include "quinn/common.hpp"

#include <map>

namespace quinn {

using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x, dropping zeros

// Incrementally built row space over ℚ in fully reduced echelon form. The pivot of each new row is its
// largest column, so the free columns skew towards small indices.
class RowSpace {
public:
  explicit RowSpace(int width = 0) : width_(width) {}
  // Returns false if v was already in the span.
  bool insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  bool is_pivot(int c) const { return rows_.count(c) > 0; }
  std::vector<int> free_columns() const;

private:
  int width_;
  std::map<int, SparseVec> rows_;  // pivot -> row with coefficient 1 at the pivot
};

int rank(const std::vector<SparseVec>& rows, int width);

}  // namespace quinn
