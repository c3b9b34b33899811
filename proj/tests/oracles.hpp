#pragma once

// Brute-force reference computations on raw multiplication tables. Nothing here calls into the
// library's enumeration or quotient code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline int order(const Table& t) { return static_cast<int>(t.size()); }

inline int identity(const Table& t) {
  for (int e = 0; e < order(t); ++e) {
    bool ok = true;
    for (int a = 0; a < order(t) && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
    if (ok) return e;
  }
  return -1;
}

inline int inverse(const Table& t, int a) {
  int e = identity(t);
  for (int b = 0; b < order(t); ++b)
    if (t[a][b] == e) return b;
  return -1;
}

inline int conj(const Table& t, int h, int g) { return t[t[h][g]][inverse(t, h)]; }  // h g h⁻¹

inline int conjugacy_classes(const Table& t) {
  std::set<std::set<int>> classes;
  for (int g = 0; g < order(t); ++g) {
    std::set<int> c;
    for (int h = 0; h < order(t); ++h) c.insert(conj(t, h, g));
    classes.insert(c);
  }
  return static_cast<int>(classes.size());
}

// Hom(Z², G) through the presentation <a, b | a b a⁻¹ b⁻¹>.
inline long long hom_z2(const Table& t) {
  long long n = 0;
  int e = identity(t);
  for (int a = 0; a < order(t); ++a)
    for (int b = 0; b < order(t); ++b)
      if (t[t[t[a][b]][inverse(t, a)]][inverse(t, b)] == e) ++n;
  return n;
}

// Orbits of simultaneous conjugation on commuting pairs.
inline int commuting_pair_orbits(const Table& t) {
  std::set<std::set<std::pair<int, int>>> orbits;
  for (int a = 0; a < order(t); ++a)
    for (int b = 0; b < order(t); ++b) {
      if (t[a][b] != t[b][a]) continue;
      std::set<std::pair<int, int>> o;
      for (int h = 0; h < order(t); ++h) o.insert({conj(t, h, a), conj(t, h, b)});
      orbits.insert(o);
    }
  return static_cast<int>(orbits.size());
}

// Labellings g_ij (i < j) of the edges of Δ(n) with g_ij g_jk = g_ik on every triangle.
inline long long nerve_count(const Table& t, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  std::vector<int> lab(edges.size(), 0);
  auto at = [&](int i, int j) {
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (edges[k] == std::pair{i, j}) return lab[k];
    return -1;
  };
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      for (int j = i + 1; j <= n && ok; ++j)
        for (int k = j + 1; k <= n && ok; ++k) ok = t[at(i, j)][at(j, k)] == at(i, k);
    if (ok) ++count;
    std::size_t p = 0;
    while (p < lab.size() && ++lab[p] == order(t)) lab[p++] = 0;
    if (p == lab.size()) break;
  }
  return count;
}

// Nondegenerate simplices of X × Δ(1): (x, vertex) twice, (s_B x, s_A e) with |B| = 1 fewer degeneracy
// than the dimension, and (s_j x', s_{≠j} e) for x' one dimension lower.
inline std::vector<int> prism_counts(const std::vector<int>& k) {
  std::vector<int> out(k.size() + 1, 0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    int here = n < k.size() ? k[n] : 0, below = n > 0 ? k[n - 1] : 0;
    out[n] = 2 * here + static_cast<int>(n) * here + static_cast<int>(n) * below;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

struct XMod {
  Table g, e;
  std::vector<int> boundary;
};

// (g01, g12, g02, e) with ∂e = g01 g12 g02⁻¹.
inline long long xmod_triangle_count(const XMod& m) {
  long long n = 0;
  int og = order(m.g);
  for (int a = 0; a < og; ++a)
    for (int b = 0; b < og; ++b)
      for (int c = 0; c < og; ++c)
        for (int x = 0; x < order(m.e); ++x)
          if (m.boundary[x] == m.g[m.g[a][b]][inverse(m.g, c)]) ++n;
  return n;
}

// Δ(3) for abelian E with trivial action: every face (ijk) carries e_ijk with ∂e_ijk = g_ij g_jk g_ik⁻¹,
// and the faces satisfy e_123 e_023⁻¹ e_013 e_012⁻¹ = 1.
inline long long xmod_tetrahedron_count(const XMod& m) {
  int og = order(m.g), oe = order(m.e), one = identity(m.e);
  auto gb = [&](int a, int b, int c) { return m.g[m.g[a][b]][inverse(m.g, c)]; };
  long long n = 0;
  for (int g01 = 0; g01 < og; ++g01)
    for (int g02 = 0; g02 < og; ++g02)
      for (int g03 = 0; g03 < og; ++g03)
        for (int g12 = 0; g12 < og; ++g12)
          for (int g13 = 0; g13 < og; ++g13)
            for (int g23 = 0; g23 < og; ++g23) {
              int b123 = gb(g12, g23, g13), b023 = gb(g02, g23, g03), b013 = gb(g01, g13, g03), b012 = gb(g01, g12, g02);
              for (int e123 = 0; e123 < oe; ++e123) {
                if (m.boundary[e123] != b123) continue;
                for (int e023 = 0; e023 < oe; ++e023) {
                  if (m.boundary[e023] != b023) continue;
                  for (int e013 = 0; e013 < oe; ++e013) {
                    if (m.boundary[e013] != b013) continue;
                    for (int e012 = 0; e012 < oe; ++e012) {
                      if (m.boundary[e012] != b012) continue;
                      int v = m.e[m.e[m.e[e123][inverse(m.e, e023)]][e013]][inverse(m.e, e012)];
                      if (v == one) ++n;
                    }
                  }
                }
              }
            }
  return n;
}

inline std::vector<int> kernel(const XMod& m) {
  std::vector<int> k;
  int id = identity(m.g);
  for (int x = 0; x < order(m.e); ++x)
    if (m.boundary[x] == id) k.push_back(x);
  return k;
}

inline std::set<int> image(const XMod& m) { return {m.boundary.begin(), m.boundary.end()}; }

// Groupoid given by arrows with src/tgt and a composition table (-1 when not composable).
struct RawGroupoid {
  int objects = 0;
  std::vector<int> src, tgt;
  Table comp;  // comp[a][b] = a then b
  int arrows() const { return static_cast<int>(src.size()); }
};

inline RawGroupoid conjugation_groupoid(const Table& t) {
  RawGroupoid r;
  int n = order(t);
  r.objects = n;
  // arrow (g, h): g -> h g h⁻¹, id g*n + h; (g,h) then (hgh⁻¹, h') = (g, h'h).
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      r.src.push_back(g);
      r.tgt.push_back(conj(t, h, g));
    }
  r.comp.assign(n * n, std::vector<int>(n * n, -1));
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b)
      if (r.tgt[a] == r.src[b]) r.comp[a][b] = (a / n) * n + t[b % n][a % n];
  return r;
}

// The groupoid on G with arrows classes [(g, h, e)] : g -> h g ∂(e) h⁻¹, (h, e) ~ (h ∂(a), (a⁻¹ ◁ g) e a),
// composite [(g,h,e)] then [(g',h',e')] = [(g, h'h, e (e' ◁ h))]. Trivial action only.
inline RawGroupoid xmod_loop_groupoid(const XMod& m) {
  int og = order(m.g), oe = order(m.e);
  auto key = [&](int g, int h, int e) { return (g * og + h) * oe + e; };
  std::vector<int> cls(og * og * oe, -1);
  RawGroupoid r;
  r.objects = og;
  std::vector<std::tuple<int, int, int>> rep;
  for (int g = 0; g < og; ++g)
    for (int h = 0; h < og; ++h)
      for (int e = 0; e < oe; ++e) {
        if (cls[key(g, h, e)] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back({g, h, e});
        for (int a = 0; a < oe; ++a) {
          int h2 = m.g[h][m.boundary[a]];
          int e2 = m.e[m.e[inverse(m.e, a)][e]][a];
          cls[key(g, h2, e2)] = id;
        }
        r.src.push_back(g);
        r.tgt.push_back(m.g[m.g[m.g[h][g]][m.boundary[e]]][inverse(m.g, h)]);
      }
  int n = r.arrows();
  r.comp.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (r.tgt[x] != r.src[y]) continue;
      auto [g, h, e] = rep[x];
      auto [g2, h2, e2] = rep[y];
      r.comp[x][y] = cls[key(g, m.g[h2][h], m.e[e][e2])];
    }
  return r;
}

// ker∂ ⫽ (G/∂E) for trivial action: every object has vertex group G/∂E.
inline RawGroupoid kernel_quotient_groupoid(const XMod& m) {
  std::vector<int> ker = kernel(m);
  std::set<int> im = image(m);
  // Cosets of ∂E, each as a sorted vector.
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_of(order(m.g), -1);
  for (int g = 0; g < order(m.g); ++g) {
    if (coset_of[g] >= 0) continue;
    std::vector<int> c;
    for (int i : im) c.push_back(m.g[g][i]);
    for (int x : c) coset_of[x] = static_cast<int>(cosets.size());
    cosets.push_back(c);
  }
  int q = static_cast<int>(cosets.size()), k = static_cast<int>(ker.size());
  RawGroupoid r;
  r.objects = k;
  for (int x = 0; x < k; ++x)
    for (int c = 0; c < q; ++c) {
      r.src.push_back(x);
      r.tgt.push_back(x);
    }
  r.comp.assign(k * q, std::vector<int>(k * q, -1));
  for (int a = 0; a < k * q; ++a)
    for (int b = 0; b < k * q; ++b)
      if (a / q == b / q) r.comp[a][b] = (a / q) * q + coset_of[m.g[cosets[a % q][0]][cosets[b % q][0]]];
  return r;
}

// Backtracking search for a groupoid isomorphism with a fixed object bijection. G is any type with
// num_objects, num_arrows, src, tgt and compose(a, b) defined when tgt(a) == src(b).
template <class G>
std::optional<std::vector<int>> groupoid_iso(const RawGroupoid& r, const G& g, const std::vector<int>& objects) {
  if (r.objects != g.num_objects() || r.arrows() != g.num_arrows()) return std::nullopt;
  int n = r.arrows();
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  auto full = [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (r.comp[x][y] >= 0 && g.compose(phi[x], phi[y]) != phi[r.comp[x][y]]) return false;
    return true;
  };
  std::function<bool(int)> go = [&](int a) {
    if (a == n) return full();
    for (int b = 0; b < n; ++b) {
      if (used[b] || g.src(b) != objects[r.src[a]] || g.tgt(b) != objects[r.tgt[a]]) continue;
      phi[a] = b;
      bool ok = true;
      for (int x = 0; x <= a && ok; ++x) {
        if (r.comp[x][a] >= 0 && r.comp[x][a] <= a) ok = g.compose(phi[x], b) == phi[r.comp[x][a]];
        if (ok && r.comp[a][x] >= 0 && r.comp[a][x] <= a) ok = g.compose(b, phi[x]) == phi[r.comp[a][x]];
      }
      if (ok) {
        used[b] = true;
        if (go(a + 1)) return true;
        used[b] = false;
      }
      phi[a] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

inline int components(const RawGroupoid& r) {
  std::vector<int> p(r.objects);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (int a = 0; a < r.arrows(); ++a) p[find(r.src[a])] = find(r.tgt[a]);
  int c = 0;
  for (int x = 0; x < r.objects; ++x) c += find(x) == x;
  return c;
}

}  // namespace oracle
