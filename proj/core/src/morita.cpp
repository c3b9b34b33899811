#include "quinn/morita.hpp"

#include <deque>
#include <functional>

namespace quinn {

namespace {

std::string vec_str(const SparseVec& v) {
  std::string s;
  for (const auto& [k, c] : v) s += (s.empty() ? "" : " + ") + to_string(c) + "*e" + std::to_string(k);
  return s.empty() ? "0" : s;
}

}  // namespace

// ---------------------------------------------------------------- algebras

SparseVec Algebra::mul(const SparseVec& u, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) axpy(out, ca * cb, c[a][b]);
  return out;
}

Report check_algebra(const Algebra& a) {
  if (static_cast<int>(a.c.size()) != a.dim) return Report::bad_table("structure constants have the wrong size");
  for (const auto& row : a.c) {
    if (static_cast<int>(row.size()) != a.dim) return Report::bad_table("structure constants have the wrong size");
    for (const SparseVec& v : row)
      for (const auto& [d, k] : v)
        if (d < 0 || d >= a.dim) return Report::bad_table("structure constant index out of range");
  }
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < a.dim; ++y)
      for (int z = 0; z < a.dim; ++z) {
        SparseVec l = a.mul(a.c[x][y], a.basis(z));
        SparseVec r = a.mul(a.basis(x), a.c[y][z]);
        if (l != r) return Report::fail("associativity", {x, y, z});
      }
  for (int x = 0; x < a.dim; ++x) {
    if (a.mul(a.unit, a.basis(x)) != a.basis(x)) return Report::fail("left unit", {x});
    if (a.mul(a.basis(x), a.unit) != a.basis(x)) return Report::fail("right unit", {x});
  }
  return Report::pass();
}

bool same_algebra(const Algebra& a, const Algebra& b) { return a.dim == b.dim && a.c == b.c && a.unit == b.unit; }

Algebra groupoid_algebra(const FinGroupoid& g) {
  require(g.validate());
  Algebra a;
  a.dim = g.num_arrows();
  a.c.assign(a.dim, std::vector<SparseVec>(a.dim));
  for (int x = 0; x < a.dim; ++x) {
    a.labels.push_back(g.arrow_label(x));
    for (int o = 0; o < g.num_objects(); ++o)
      for (int y : g.hom(g.tgt(x), o)) a.c[x][y][g.compose(x, y)] = 1;
  }
  for (int o = 0; o < g.num_objects(); ++o) a.unit[g.id(o)] = 1;
  return a;
}

Report check_elementary_matrices(const Algebra& a, const FinGroupoid& g) {
  if (a.dim != g.num_arrows()) return Report::fail("elementary matrices: dimension", {});
  for (int u = 0; u < a.dim; ++u)
    for (int v = 0; v < a.dim; ++v) {
      SparseVec want;
      if (g.tgt(u) == g.src(v)) {
        int il = -1;
        for (int w : g.hom(g.src(u), g.tgt(v))) il = w;
        want[il] = 1;
      }
      if (a.c[u][v] != want) return Report::fail("E_ij E_kl = δ_jk E_il", {u, v});
    }
  return Report::pass();
}

Report check_algebra_iso(const Algebra& a, const Algebra& b, const std::vector<int>& phi) {
  if (a.dim != b.dim || static_cast<int>(phi.size()) != a.dim) return Report::fail("algebra iso: dimensions differ", {});
  std::vector<char> hit(b.dim, 0);
  for (int x = 0; x < a.dim; ++x) {
    if (phi[x] < 0 || phi[x] >= b.dim || hit[phi[x]]) return Report::fail("algebra iso: not a bijection", {x});
    hit[phi[x]] = 1;
  }
  auto image = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v) out[phi[k]] = c;
    return out;
  };
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < a.dim; ++y)
      if (image(a.c[x][y]) != b.c[phi[x]][phi[y]]) return Report::fail("algebra iso: structure constants", {x, y});
  if (image(a.unit) != b.unit) return Report::fail("algebra iso: unit", {});
  return Report::pass();
}

namespace {

std::vector<std::vector<long>> invariants(const Algebra& a) {
  std::vector<std::vector<long>> inv(a.dim);
  for (int x = 0; x < a.dim; ++x) {
    const SparseVec& sq = a.c[x][x];
    long nl = 0, nr = 0, comm = 0;
    for (int y = 0; y < a.dim; ++y) {
      nl += !a.c[x][y].empty();
      nr += !a.c[y][x].empty();
      comm += a.c[x][y] == a.c[y][x];
    }
    long idem = sq == a.basis(x);
    long in_unit = a.unit.count(x) ? 1 : 0;
    inv[x] = {static_cast<long>(sq.size()), idem, nl, nr, comm, in_unit};
  }
  return inv;
}

}  // namespace

std::optional<std::vector<int>> find_algebra_iso(const Algebra& a, const Algebra& b) {
  if (a.dim != b.dim || a.unit.size() != b.unit.size()) return std::nullopt;
  const int n = a.dim;
  auto ia = invariants(a), ib = invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> phi(n, -1), inv(n, -1);
  std::vector<int> order;
  // Propagates forced images through monomial products of assigned pairs.
  auto propagate = [&](int x0, int y0) {
    std::deque<int> todo;
    auto set = [&](int x, int y) {
      if (phi[x] >= 0) return phi[x] == y;
      if (inv[y] >= 0 || ia[x] != ib[y]) return false;
      phi[x] = y;
      inv[y] = x;
      order.push_back(x);
      todo.push_back(x);
      return true;
    };
    if (!set(x0, y0)) return false;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (int z : std::vector<int>(order)) {
        for (int pass = 0; pass < 2; ++pass) {
          int u = pass ? z : x, v = pass ? x : z;
          const SparseVec& p = a.c[u][v];
          const SparseVec& q = b.c[phi[u]][phi[v]];
          if (p.size() != q.size()) return false;
          if (p.size() == 1) {
            if (p.begin()->second != q.begin()->second) return false;
            if (!set(p.begin()->first, q.begin()->first)) return false;
          }
        }
      }
    }
    return true;
  };
  std::function<bool()> rec = [&]() {
    int x = 0;
    while (x < n && phi[x] >= 0) ++x;
    if (x == n) return static_cast<bool>(check_algebra_iso(a, b, phi));
    for (int y = 0; y < n; ++y) {
      if (inv[y] >= 0 || ia[x] != ib[y]) continue;
      auto phi0 = phi, inv0 = inv;
      auto order0 = order;
      if (propagate(x, y) && rec()) return true;
      phi = std::move(phi0);
      inv = std::move(inv0);
      order = std::move(order0);
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return phi;
}

// ---------------------------------------------------------------- bimodules

SparseVec Bimodule::act_left(const SparseVec& a, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [x, cx] : a)
    for (const auto& [w, cw] : v) axpy(out, cx * cw, lact[x][w]);
  return out;
}

SparseVec Bimodule::act_right(const SparseVec& v, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [w, cw] : v)
    for (const auto& [y, cy] : b) axpy(out, cw * cy, ract[w][y]);
  return out;
}

Report check_bimodule(const Bimodule& m) {
  const Algebra& A = m.left;
  const Algebra& B = m.right;
  if (static_cast<int>(m.lact.size()) != A.dim || static_cast<int>(m.ract.size()) != m.dim)
    return Report::bad_table("bimodule action tables have the wrong size");
  for (int v = 0; v < m.dim; ++v) {
    SparseVec ev{{v, Rational(1)}};
    if (m.act_left(A.unit, ev) != ev) return Report::fail("left unit", {v});
    if (m.act_right(ev, B.unit) != ev) return Report::fail("right unit", {v});
    for (int x = 0; x < A.dim; ++x)
      for (int y = 0; y < A.dim; ++y)
        if (m.act_left(A.c[x][y], ev) != m.act_left(A.basis(x), m.lact[y][v])) return Report::fail("left module", {x, y, v});
    for (int x = 0; x < B.dim; ++x)
      for (int y = 0; y < B.dim; ++y)
        if (m.act_right(ev, B.c[x][y]) != m.act_right(m.ract[v][x], B.basis(y))) return Report::fail("right module", {v, x, y});
    for (int x = 0; x < A.dim; ++x)
      for (int y = 0; y < B.dim; ++y)
        if (m.act_right(m.lact[x][v], B.basis(y)) != m.act_left(A.basis(x), m.ract[v][y])) return Report::fail("actions commute", {x, v, y});
  }
  return Report::pass();
}

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m;
  m.left = m.right = a;
  m.dim = a.dim;
  m.lact = a.c;
  m.ract = a.c;
  m.labels = a.labels;
  return m;
}

Bimodule lin2_bimodule(const Profunctor& p) {
  Bimodule m;
  m.left = groupoid_algebra(p.left);
  m.right = groupoid_algebra(p.right);
  m.dim = p.size();
  m.labels = p.labels;
  m.lact.assign(m.left.dim, std::vector<SparseVec>(m.dim));
  m.ract.assign(m.dim, std::vector<SparseVec>(m.right.dim));
  for (int g = 0; g < m.left.dim; ++g)
    for (int v = 0; v < m.dim; ++v)
      if (p.left_act[g][v] >= 0) m.lact[g][v][p.left_act[g][v]] = 1;
  for (int v = 0; v < m.dim; ++v)
    for (int g = 0; g < m.right.dim; ++g)
      if (p.right_act[v][g] >= 0) m.ract[v][g][p.right_act[v][g]] = 1;
  return m;
}

SparseVec Tensor::project(int v, int w) const { return image[v * width + w]; }

namespace {

// Quotient of ℚ^width by relations with at most two terms: e_i = k e_j merges classes with a
// ratio, a e_i = 0 kills a class. Roots are the least column of each class, as in the echelon form.
class RatioUnionFind {
 public:
  explicit RatioUnionFind(int n) : parent_(n), ratio_(n, Rational(1)), zero_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  // Root r with e_i = ratio * e_r.
  int find(int i, Rational& ratio) {
    ratio = 1;
    int r = i;
    while (parent_[r] != r) {
      ratio *= ratio_[r];
      r = parent_[r];
    }
    // Path compression keeps the invariant e_i = ratio_[i] e_parent[i].
    Rational acc = ratio;
    for (int c = i; parent_[c] != r && c != r;) {
      int next = parent_[c];
      Rational here = ratio_[c];
      parent_[c] = r;
      ratio_[c] = acc;
      acc /= here;
      c = next;
    }
    return r;
  }
  void kill(int i) {
    Rational q;
    zero_[find(i, q)] = 1;
  }
  // a e_i + b e_j = 0
  void relate(int i, const Rational& a, int j, const Rational& b) {
    Rational qi, qj;
    int ri = find(i, qi), rj = find(j, qj);
    // a qi e_ri + b qj e_rj = 0
    Rational ci = a * qi, cj = b * qj;
    if (ri == rj) {
      if (ci + cj != 0) zero_[ri] = 1;
      return;
    }
    if (ri < rj) {
      parent_[rj] = ri;
      ratio_[rj] = -ci / cj;
      zero_[ri] |= zero_[rj];
    } else {
      parent_[ri] = rj;
      ratio_[ri] = -cj / ci;
      zero_[rj] |= zero_[ri];
    }
  }
  bool zero(int r) const { return zero_[r]; }

 private:
  std::vector<int> parent_;
  std::vector<Rational> ratio_;
  std::vector<char> zero_;
};

}  // namespace

Tensor tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.right, n.left)) throw Error(ErrorKind::Boundary, "tensor: middle algebras differ");
  const Algebra& B = m.right;
  Tensor t;
  t.width = n.dim;
  const int width = m.dim * n.dim;
  auto col = [&](int v, int w) { return v * n.dim + w; };
  // (v·b) ⊗ w - v ⊗ (b·w)
  std::vector<SparseVec> relations;
  bool short_relations = true;
  for (int v = 0; v < m.dim; ++v)
    for (int b = 0; b < B.dim; ++b)
      for (int w = 0; w < n.dim; ++w) {
        SparseVec rel;
        for (const auto& [v2, c] : m.ract[v][b]) axpy(rel, c, {{col(v2, w), Rational(1)}});
        for (const auto& [w2, c] : n.lact[b][w]) axpy(rel, -c, {{col(v, w2), Rational(1)}});
        if (rel.empty()) continue;
        short_relations = short_relations && rel.size() <= 2;
        relations.push_back(std::move(rel));
      }
  t.image.assign(width, {});
  if (short_relations) {
    RatioUnionFind uf(width);
    for (const SparseVec& rel : relations) {
      auto it = rel.begin();
      if (rel.size() == 1) {
        uf.kill(it->first);
      } else {
        auto jt = std::next(it);
        uf.relate(it->first, it->second, jt->first, jt->second);
      }
    }
    std::vector<int> root(width);
    std::vector<Rational> ratio(width);
    for (int c = 0; c < width; ++c) {
      root[c] = uf.find(c, ratio[c]);
      if (root[c] == c && !uf.zero(c)) t.basis.push_back(c);
    }
    for (std::size_t i = 0; i < t.basis.size(); ++i) t.position[t.basis[i]] = static_cast<int>(i);
    for (int c = 0; c < width; ++c)
      if (!uf.zero(root[c])) t.image[c][t.position.at(root[c])] = ratio[c];
  } else {
    RowSpace space(width);
    for (SparseVec& rel : relations) space.insert(std::move(rel));
    t.basis = space.free_columns();
    for (std::size_t i = 0; i < t.basis.size(); ++i) t.position[t.basis[i]] = static_cast<int>(i);
    for (int c = 0; c < width; ++c)
      for (const auto& [k, q] : space.reduce({{c, Rational(1)}})) t.image[c][t.position.at(k)] = q;
  }
  Bimodule& r = t.result;
  r.left = m.left;
  r.right = n.right;
  r.dim = static_cast<int>(t.basis.size());
  for (int c : t.basis) {
    int v = c / n.dim, w = c % n.dim;
    r.labels.push_back((m.labels.empty() ? std::to_string(v) : m.labels[v]) + "⊗" + (n.labels.empty() ? std::to_string(w) : n.labels[w]));
  }
  r.lact.assign(r.left.dim, std::vector<SparseVec>(r.dim));
  r.ract.assign(r.dim, std::vector<SparseVec>(r.right.dim));
  for (int i = 0; i < r.dim; ++i) {
    int v = t.basis[i] / n.dim, w = t.basis[i] % n.dim;
    for (int a = 0; a < r.left.dim; ++a)
      for (const auto& [v2, c] : m.lact[a][v]) axpy(r.lact[a][i], c, t.project(v2, w));
    for (int a = 0; a < r.right.dim; ++a)
      for (const auto& [w2, c] : n.ract[w][a]) axpy(r.ract[i][a], c, t.project(v, w2));
  }
  return t;
}

Report check_bimodule_iso(const Bimodule& m, const Bimodule& n, const std::vector<SparseVec>& phi) {
  if (m.dim != n.dim || static_cast<int>(phi.size()) != m.dim) return Report::fail("bimodule iso: dimensions differ", {m.dim, n.dim});
  if (!same_algebra(m.left, n.left) || !same_algebra(m.right, n.right)) return Report::fail("bimodule iso: algebras differ", {});
  if (rank(phi, n.dim) != n.dim) return Report::fail("bimodule iso: not invertible", {});
  auto image = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v) axpy(out, c, phi[k]);
    return out;
  };
  for (int v = 0; v < m.dim; ++v) {
    for (int a = 0; a < m.left.dim; ++a)
      if (image(m.lact[a][v]) != n.act_left(m.left.basis(a), phi[v]))
        return Report::fail("bimodule iso: left equivariance", {a, v}, vec_str(image(m.lact[a][v])));
    for (int b = 0; b < m.right.dim; ++b)
      if (image(m.ract[v][b]) != n.act_right(phi[v], m.right.basis(b))) return Report::fail("bimodule iso: right equivariance", {v, b});
  }
  return Report::pass();
}

std::vector<SparseVec> composition_map(const Composite& pq, const Tensor& t) {
  std::vector<SparseVec> phi;
  for (auto [p, q] : pq.rep) phi.push_back(t.project(p, q));
  return phi;
}

// ---------------------------------------------------------------- Frobenius data

FrobeniusData frobenius_data(const FinGroupoid& g) {
  FrobeniusData f;
  f.lambda.assign(g.num_arrows(), 0);
  for (int o = 0; o < g.num_objects(); ++o) f.lambda[g.id(o)] = 1;
  std::vector<long> out_degree(g.num_objects(), 0);
  for (int a = 0; a < g.num_arrows(); ++a) ++out_degree[g.src(a)];
  for (int a = 0; a < g.num_arrows(); ++a) {
    f.e.emplace_back(a, g.inv(a), Rational(1));
    f.ebar.emplace_back(a, g.inv(a), Rational(1, out_degree[g.src(a)]));
  }
  return f;
}

Report check_frobenius(const Algebra& a, const FrobeniusData& f) {
  const int n = a.dim;
  if (static_cast<int>(f.lambda.size()) != n) return Report::bad_table("lambda has the wrong length");
  auto lambda = [&](const SparseVec& v) {
    Rational s = 0;
    for (const auto& [k, c] : v) s += c * f.lambda[k];
    return s;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lambda(a.c[x][y]) != lambda(a.c[y][x])) return Report::fail("λ(ab) = λ(ba)", {x, y});
  // Σ (w x_i) ⊗ y_i = Σ x_i ⊗ (y_i w), as vectors on pairs u*n + v.
  auto casimir = [&](const std::vector<std::tuple<int, int, Rational>>& e, const char* what) {
    for (int w = 0; w < n; ++w) {
      SparseVec l, r;
      for (const auto& [x, y, c] : e) {
        for (const auto& [u, cu] : a.c[w][x]) axpy(l, c * cu, {{u * n + y, Rational(1)}});
        for (const auto& [v, cv] : a.c[y][w]) axpy(r, c * cv, {{x * n + v, Rational(1)}});
      }
      if (l != r) return Report::fail(what, {w});
    }
    return Report::pass();
  };
  Report r = casimir(f.e, "e is a Casimir element");
  if (!r) return r;
  SparseVec s1, s2;
  for (const auto& [x, y, c] : f.e) {
    axpy(s1, c * f.lambda[x], a.basis(y));
    axpy(s2, c * f.lambda[y], a.basis(x));
  }
  if (s1 != a.unit) return Report::fail("Σ λ(x_i) y_i = 1", {}, vec_str(s1));
  if (s2 != a.unit) return Report::fail("Σ x_i λ(y_i) = 1", {}, vec_str(s2));
  r = casimir(f.ebar, "separability element is a Casimir element");
  if (!r) return r;
  SparseVec s3;
  for (const auto& [x, y, c] : f.ebar) axpy(s3, c, a.c[x][y]);
  if (s3 != a.unit) return Report::fail("Σ x'_i y'_i = 1", {}, vec_str(s3));
  return Report::pass();
}

// ---------------------------------------------------------------- quantum double

Algebra quantum_double(const FinGroup& g, bool literal) {
  const int n = g.order();
  Algebra d;
  d.dim = n * n;
  d.c.assign(d.dim, std::vector<SparseVec>(d.dim));
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      d.labels.push_back("(" + g.label(x) + "," + g.label(a) + ")");
      int conj = g.mul(g.mul(a, x), g.inv(a));
      for (int ap = 0; ap < n; ++ap) d.c[x * n + a][conj * n + ap][x * n + (literal ? g.mul(a, ap) : g.mul(ap, a))] = 1;
    }
  for (int x = 0; x < n; ++x) d.unit[x * n + g.identity()] = 1;
  return d;
}

DoubleOracle quantum_double_oracle(const FinGroup& g, bool search) {
  DoubleOracle o;
  o.dg = quantum_double(g);
  o.literal_assoc = check_algebra(quantum_double(g, true));
  CrossedComplex a = iota1(g);
  SimpSet s1 = circle();
  CrsPi1 p = crs_pi1(s1, a);
  o.crs = groupoid_algebra(p.groupoid);
  const int vertex = s1.generators(0)[0], edge = s1.generators(1)[0];
  const int n = g.order();
  for (int arrow = 0; arrow < p.groupoid.num_arrows(); ++arrow) {
    int loop = p.objects[p.groupoid.tgt(arrow)][edge];
    int h = p.rep[arrow][vertex];
    o.bijection.push_back(g.mul(g.mul(h, loop), g.inv(h)) * n + g.inv(h));
  }
  o.explicit_iso = check_algebra_iso(o.crs, o.dg, o.bijection);
  if (search) o.searched = find_algebra_iso(o.crs, o.dg);
  return o;
}

}  // namespace quinn
