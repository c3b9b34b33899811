#include "quinn/linalg.hpp"

namespace quinn {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k, 0);
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

SparseVec RowSpace::reduce(SparseVec v) const {
  // Rows are fully reduced, so subtracting one never reintroduces another pivot.
  for (const auto& [p, row] : rows_) {
    auto it = v.find(p);
    if (it == v.end()) continue;
    Rational c = it->second;
    axpy(v, -c, row);
  }
  return v;
}

bool RowSpace::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int p = v.rbegin()->first;
  Rational lead = v.rbegin()->second;
  for (auto& [k, c] : v) c /= lead;
  for (auto& [q, row] : rows_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Rational c = it->second;
    axpy(row, -c, v);
  }
  rows_.emplace(p, std::move(v));
  return true;
}

std::vector<int> RowSpace::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < width_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

int rank(const std::vector<SparseVec>& rows, int width) {
  RowSpace r(width);
  for (const SparseVec& v : rows) r.insert(v);
  return r.rank();
}

}  // namespace quinn
