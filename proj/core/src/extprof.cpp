#include "quinn/extprof.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace quinn {

std::vector<int> Profunctor::basis(int ox, int oy) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (x[i] == ox && y[i] == oy) out.push_back(i);
  return out;
}

bool same_groupoid(const FinGroupoid& g, const FinGroupoid& h) {
  if (g.num_objects() != h.num_objects() || g.num_arrows() != h.num_arrows()) return false;
  for (int a = 0; a < g.num_arrows(); ++a)
    if (g.src(a) != h.src(a) || g.tgt(a) != h.tgt(a)) return false;
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int o = 0; o < g.num_objects(); ++o)
      for (int b : g.hom(g.tgt(a), o))
        if (g.compose(a, b) != h.compose(a, b)) return false;
  return true;
}

Report check_profunctor(const Profunctor& p) {
  const FinGroupoid& G = p.left;
  const FinGroupoid& H = p.right;
  const int n = p.size();
  if (static_cast<int>(p.y.size()) != n || static_cast<int>(p.left_act.size()) != G.num_arrows() ||
      static_cast<int>(p.right_act.size()) != n)
    return Report::bad_table("profunctor tables have inconsistent sizes");
  for (int i = 0; i < n; ++i) {
    if (p.x[i] < 0 || p.x[i] >= G.num_objects() || p.y[i] < 0 || p.y[i] >= H.num_objects())
      return Report::bad_table("profunctor element over an unknown object");
    if (static_cast<int>(p.right_act[i].size()) != H.num_arrows()) return Report::bad_table("right action table has the wrong width");
  }
  for (int a = 0; a < G.num_arrows(); ++a) {
    if (static_cast<int>(p.left_act[a].size()) != n) return Report::bad_table("left action table has the wrong width");
    for (int i = 0; i < n; ++i) {
      int j = p.left_act[a][i];
      bool defined = p.x[i] == G.tgt(a);
      if (defined != (j >= 0)) return Report::fail("left action domain", {a, i});
      if (!defined) continue;
      if (j >= n || p.x[j] != G.src(a) || p.y[j] != p.y[i]) return Report::fail("left action lands in the wrong fibre", {a, i});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < H.num_arrows(); ++b) {
      int j = p.right_act[i][b];
      bool defined = p.y[i] == H.src(b);
      if (defined != (j >= 0)) return Report::fail("right action domain", {i, b});
      if (!defined) continue;
      if (j >= n || p.y[j] != H.tgt(b) || p.x[j] != p.x[i]) return Report::fail("right action lands in the wrong fibre", {i, b});
    }
  for (int i = 0; i < n; ++i) {
    if (p.left_act[G.id(p.x[i])][i] != i) return Report::fail("left identity", {i});
    if (p.right_act[i][H.id(p.y[i])] != i) return Report::fail("right identity", {i});
  }
  // α'·(α·i) = (α' then α)·i
  for (int a = 0; a < G.num_arrows(); ++a)
    for (int o = 0; o < G.num_objects(); ++o)
      for (int ap : G.hom(o, G.src(a)))
        for (int i = 0; i < n; ++i) {
          if (p.x[i] != G.tgt(a)) continue;
          if (p.left_act[ap][p.left_act[a][i]] != p.left_act[G.compose(ap, a)][i]) return Report::fail("left action composition", {ap, a, i});
        }
  for (int b = 0; b < H.num_arrows(); ++b)
    for (int o = 0; o < H.num_objects(); ++o)
      for (int bp : H.hom(H.tgt(b), o))
        for (int i = 0; i < n; ++i) {
          if (p.y[i] != H.src(b)) continue;
          if (p.right_act[p.right_act[i][b]][bp] != p.right_act[i][H.compose(b, bp)]) return Report::fail("right action composition", {i, b, bp});
        }
  for (int a = 0; a < G.num_arrows(); ++a)
    for (int i = 0; i < n; ++i) {
      if (p.x[i] != G.tgt(a)) continue;
      for (int b = 0; b < H.num_arrows(); ++b) {
        if (p.y[i] != H.src(b)) continue;
        if (p.right_act[p.left_act[a][i]][b] != p.left_act[a][p.right_act[i][b]]) return Report::fail("actions do not commute", {a, i, b});
      }
    }
  return Report::pass();
}

CobordismProfunctor cobordism_profunctor(const Stratification& m, const CrossedComplex& a) {
  require(m.validate(), ErrorKind::Boundary);
  CobordismProfunctor c;
  SimpSet in_model = m.tag_model("in", &c.in_embed);
  SimpSet out_model = m.tag_model("out", &c.out_embed);
  c.in = crs_pi1(in_model, a);
  c.out = crs_pi1(out_model, a);
  std::vector<int> y = c.in_embed;
  y.insert(y.end(), c.out_embed.begin(), c.out_embed.end());
  c.classes = rel_classes(m.space, a, y, enumerate_colourings(m.space, a));
  Profunctor& p = c.prof;
  p.left = c.in.groupoid;
  p.right = c.out.groupoid;
  p.left_objects = c.in.objects;
  p.right_objects = c.out.objects;
  const int n = c.classes.num_classes();
  for (int k = 0; k < n; ++k) {
    const Colouring& f = c.classes.fillings[c.classes.rep[k]];
    p.reps.push_back(f);
    p.class_size.push_back(c.classes.size[k]);
    p.x.push_back(c.in.object_of(restrict_colouring(f, c.in_embed)));
    p.y.push_back(c.out.object_of(restrict_colouring(f, c.out_embed)));
    p.labels.push_back(colouring_label(m.space, a, f));
  }
  p.left_act.assign(p.left.num_arrows(), std::vector<int>(n, -1));
  for (int al = 0; al < p.left.num_arrows(); ++al)
    for (int k = 0; k < n; ++k)
      if (p.x[k] == p.left.tgt(al)) p.left_act[al][k] = holonomy_act(m.space, a, c.classes, c.in_embed, c.in.rep[al], c.classes.rep[k]);
  // The right action moves along β by the holonomy of β⁻¹.
  p.right_act.assign(n, std::vector<int>(p.right.num_arrows(), -1));
  for (int k = 0; k < n; ++k)
    for (int b = 0; b < p.right.num_arrows(); ++b)
      if (p.y[k] == p.right.src(b))
        p.right_act[k][b] = holonomy_act(m.space, a, c.classes, c.out_embed, c.out.rep[p.right.inv(b)], c.classes.rep[k]);
  return c;
}

Profunctor hom_profunctor(const FinGroupoid& g) {
  Profunctor p;
  p.left = p.right = g;
  const int n = g.num_arrows();
  for (int e = 0; e < n; ++e) {
    p.x.push_back(g.src(e));
    p.y.push_back(g.tgt(e));
    p.labels.push_back(g.arrow_label(e));
  }
  p.left_act.assign(n, std::vector<int>(n, -1));
  p.right_act.assign(n, std::vector<int>(n, -1));
  for (int al = 0; al < n; ++al)
    for (int e = 0; e < n; ++e) {
      if (g.tgt(al) == g.src(e)) p.left_act[al][e] = g.compose(al, e);
      if (g.tgt(e) == g.src(al)) p.right_act[e][al] = g.compose(e, al);
    }
  return p;
}

Composite compose_profunctors(const Profunctor& p, const Profunctor& q) {
  if (!same_groupoid(p.right, q.left)) throw Error(ErrorKind::Boundary, "profunctor composition: middle groupoids differ");
  const FinGroupoid& H = p.right;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (p.y[i] == q.x[j]) {
        index[{i, j}] = static_cast<int>(pairs.size());
        pairs.push_back({i, j});
      }
  UnionFind uf(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    for (int h = 0; h < H.num_arrows(); ++h) {
      if (H.src(h) != p.y[i]) continue;
      // (p·h, h⁻¹·q) ~ (p, q)
      uf.unite(static_cast<int>(k), index.at({p.right_act[i][h], q.left_act[H.inv(h)][j]}));
    }
  }
  Composite c;
  std::vector<int> number(pairs.size(), -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    int r = uf.find(static_cast<int>(k));
    if (number[r] < 0) {
      number[r] = static_cast<int>(c.rep.size());
      c.rep.push_back(pairs[r]);
    }
    c.pair_class[pairs[k]] = number[r];
  }
  Profunctor& out = c.prof;
  out.left = p.left;
  out.right = q.right;
  const int n = static_cast<int>(c.rep.size());
  for (auto [i, j] : c.rep) {
    out.x.push_back(p.x[i]);
    out.y.push_back(q.y[j]);
    out.labels.push_back("(" + (p.labels.empty() ? std::to_string(i) : p.labels[i]) + "|" +
                         (q.labels.empty() ? std::to_string(j) : q.labels[j]) + ")");
  }
  out.left_objects = p.left_objects;
  out.right_objects = q.right_objects;
  out.left_act.assign(out.left.num_arrows(), std::vector<int>(n, -1));
  out.right_act.assign(n, std::vector<int>(out.right.num_arrows(), -1));
  for (int e = 0; e < n; ++e) {
    auto [i, j] = c.rep[e];
    for (int al = 0; al < out.left.num_arrows(); ++al)
      if (out.left.tgt(al) == p.x[i]) out.left_act[al][e] = c.pair_class.at({p.left_act[al][i], j});
    for (int b = 0; b < out.right.num_arrows(); ++b)
      if (out.right.src(b) == q.y[j]) out.right_act[e][b] = c.pair_class.at({i, q.right_act[j][b]});
  }
  return c;
}

Report check_profunctor_map(const Profunctor& p, const Profunctor& q, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != p.size() || p.size() != q.size()) return Report::fail("profunctor map: sizes differ", {});
  std::vector<char> hit(q.size(), 0);
  for (int i = 0; i < p.size(); ++i) {
    int j = phi[i];
    if (j < 0 || j >= q.size() || hit[j]) return Report::fail("profunctor map is not a bijection", {i});
    hit[j] = 1;
    if (p.x[i] != q.x[j] || p.y[i] != q.y[j]) return Report::fail("profunctor map changes the fibre", {i});
  }
  for (int a = 0; a < p.left.num_arrows(); ++a)
    for (int i = 0; i < p.size(); ++i)
      if (p.left_act[a][i] >= 0 && phi[p.left_act[a][i]] != q.left_act[a][phi[i]]) return Report::fail("profunctor map: left equivariance", {a, i});
  for (int i = 0; i < p.size(); ++i)
    for (int b = 0; b < p.right.num_arrows(); ++b)
      if (p.right_act[i][b] >= 0 && phi[p.right_act[i][b]] != q.right_act[phi[i]][b]) return Report::fail("profunctor map: right equivariance", {i, b});
  return Report::pass();
}

std::optional<std::vector<int>> profunctor_iso(const Profunctor& p, const Profunctor& q) {
  if (p.size() != q.size() || !same_groupoid(p.left, q.left) || !same_groupoid(p.right, q.right)) return std::nullopt;
  std::map<std::pair<int, int>, int> fibre;
  for (int i = 0; i < p.size(); ++i) ++fibre[{p.x[i], p.y[i]}];
  for (int j = 0; j < q.size(); ++j) --fibre[{q.x[j], q.y[j]}];
  for (const auto& [k, v] : fibre)
    if (v != 0) return std::nullopt;

  const int n = p.size();
  // Extends phi along the actions from a seed; false on conflict.
  auto propagate = [&](std::vector<int>& phi, std::vector<int>& inv, int i0, int j0) {
    std::deque<int> todo;
    auto set = [&](int i, int j) {
      if (phi[i] >= 0) return phi[i] == j;
      if (inv[j] >= 0) return false;
      phi[i] = j;
      inv[j] = i;
      todo.push_back(i);
      return true;
    };
    if (!set(i0, j0)) return false;
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop_front();
      int j = phi[i];
      for (int a = 0; a < p.left.num_arrows(); ++a)
        if (p.left_act[a][i] >= 0 && !set(p.left_act[a][i], q.left_act[a][j])) return false;
      for (int b = 0; b < p.right.num_arrows(); ++b)
        if (p.right_act[i][b] >= 0 && !set(p.right_act[i][b], q.right_act[j][b])) return false;
    }
    return true;
  };
  std::vector<int> phi(n, -1), inv(n, -1);
  std::function<bool()> rec = [&]() {
    int i = 0;
    while (i < n && phi[i] >= 0) ++i;
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (inv[j] >= 0 || q.x[j] != p.x[i] || q.y[j] != p.y[i]) continue;
      std::vector<int> phi0 = phi, inv0 = inv;
      if (propagate(phi, inv, i, j) && rec()) return true;
      phi = std::move(phi0);
      inv = std::move(inv0);
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return phi;
}

std::vector<int> gluing_map(const CobordismProfunctor& pm, const CobordismProfunctor& pn, const Composite& comp,
                            const GlueResult& g, const CobordismProfunctor& glued) {
  const int G = glued.classes.fillings.empty() ? static_cast<int>(g.result.space.num_generators())
                                                : static_cast<int>(glued.classes.fillings[0].size());
  std::vector<int> phi(comp.prof.size(), -1);
  for (const auto& [pq, cls] : comp.pair_class) {
    const Colouring& fp = pm.prof.reps[pq.first];
    const Colouring& fq = pn.prof.reps[pq.second];
    Colouring h(G, -1);
    for (std::size_t i = 0; i < fp.size(); ++i) h[g.x_map[i]] = fp[i];
    for (std::size_t j = 0; j < fq.size(); ++j) {
      int t = g.y_map[j];
      if (h[t] >= 0 && h[t] != fq[j]) throw Error(ErrorKind::Boundary, "gluing: fillings disagree on the common boundary");
      h[t] = fq[j];
    }
    int image = glued.classes.class_of_colouring(h);
    if (phi[cls] >= 0 && phi[cls] != image) throw Error(ErrorKind::Axiom, "gluing map is not constant on coend classes");
    phi[cls] = image;
  }
  return phi;
}

// ---------------------------------------------------------------- natural transformations

Report check_naturality(const NatTransform& t) {
  const Profunctor& P = t.source;
  const Profunctor& Q = t.target;
  if (!same_groupoid(P.left, Q.left) || !same_groupoid(P.right, Q.right)) return Report::fail("natural transformation: end groupoids differ", {});
  if (static_cast<int>(t.m.size()) != P.size()) return Report::bad_table("natural transformation matrix has the wrong height");
  for (int i = 0; i < P.size(); ++i) {
    if (static_cast<int>(t.m[i].size()) != Q.size()) return Report::bad_table("natural transformation matrix has the wrong width");
    for (int j = 0; j < Q.size(); ++j)
      if (t.m[i][j] != 0 && (P.x[i] != Q.x[j] || P.y[i] != Q.y[j])) return Report::fail("entry between different fibres", {i, j});
  }
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < Q.size(); ++j) {
      if (P.x[i] != Q.x[j] || P.y[i] != Q.y[j]) continue;
      for (int a = 0; a < P.left.num_arrows(); ++a)
        if (P.left.tgt(a) == P.x[i] && t.m[P.left_act[a][i]][Q.left_act[a][j]] != t.m[i][j]) return Report::fail("left naturality", {a, i, j});
      for (int b = 0; b < P.right.num_arrows(); ++b)
        if (P.right.src(b) == P.y[i] && t.m[P.right_act[i][b]][Q.right_act[j][b]] != t.m[i][j]) return Report::fail("right naturality", {b, i, j});
    }
  return Report::pass();
}

bool is_identity(const NatTransform& t) {
  if (t.source.size() != t.target.size()) return false;
  for (int i = 0; i < t.source.size(); ++i) {
    if (t.source.x[i] != t.target.x[i] || t.source.y[i] != t.target.y[i]) return false;
    for (int j = 0; j < t.target.size(); ++j)
      if (t.m[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

NatTransform identity_nat(const Profunctor& p) {
  NatTransform t{p, p, std::vector<std::vector<Rational>>(p.size(), std::vector<Rational>(p.size(), 0))};
  for (int i = 0; i < p.size(); ++i) t.m[i][i] = 1;
  return t;
}

NatTransform vertical_compose(const NatTransform& s, const NatTransform& t) {
  if (s.target.size() != t.source.size()) throw Error(ErrorKind::Boundary, "vertical composition: profunctors differ");
  NatTransform r{s.source, t.target, std::vector<std::vector<Rational>>(s.source.size(), std::vector<Rational>(t.target.size(), 0))};
  for (int i = 0; i < s.source.size(); ++i)
    for (int k = 0; k < s.target.size(); ++k) {
      if (s.m[i][k] == 0) continue;
      for (int j = 0; j < t.target.size(); ++j) r.m[i][j] += s.m[i][k] * t.m[k][j];
    }
  return r;
}

NatTransform horizontal_compose(const NatTransform& s, const NatTransform& t, const Composite& src, const Composite& tgt) {
  NatTransform r{src.prof, tgt.prof, std::vector<std::vector<Rational>>(src.prof.size(), std::vector<Rational>(tgt.prof.size(), 0))};
  for (int c = 0; c < src.prof.size(); ++c) {
    auto [i, j] = src.rep[c];
    for (int ip = 0; ip < s.target.size(); ++ip) {
      if (s.m[i][ip] == 0) continue;
      for (int jp = 0; jp < t.target.size(); ++jp) {
        if (t.m[j][jp] == 0) continue;
        auto it = tgt.pair_class.find({ip, jp});
        if (it == tgt.pair_class.end()) continue;
        r.m[c][it->second] += s.m[i][ip] * t.m[j][jp];
      }
    }
  }
  return r;
}

NatTransform window_nat_transform(const Stratification& w, const Stratification& top, const Stratification& bottom,
                                  const CrossedComplex& a) {
  if (!a.reduced()) throw Error(ErrorKind::Precondition, "window matrices are computed for reduced crossed complexes");
  Report r = check_window_support(w, top, bottom);
  require(r, ErrorKind::Boundary);
  CobordismProfunctor P = cobordism_profunctor(top, a);
  CobordismProfunctor Q = cobordism_profunctor(bottom, a);
  SimpSet in_model = top.tag_model("in");
  SimpSet out_model = top.tag_model("out");
  SimpSet in_cyl = prism(in_model).space, out_cyl = prism(out_model).space;
  std::vector<SimplexRef> in_proj = prism_projection(in_model), out_proj = prism_projection(out_model);

  auto thetas = [&](const SimpSet& x, const std::vector<int>& fixed) {
    std::vector<int> k;
    for (int i = 0; i <= x.max_dim(); ++i) k.push_back(k_count_rel(i, x, fixed));
    return theta(a, k);
  };
  Rational theta_frame = thetas(w.space, w.tag("frame"));
  std::vector<int> bottom_bd = Q.in_embed;
  bottom_bd.insert(bottom_bd.end(), Q.out_embed.begin(), Q.out_embed.end());
  Rational theta_bottom = thetas(bottom.space, bottom_bd);

  NatTransform t{P.prof, Q.prof, std::vector<std::vector<Rational>>(P.prof.size(), std::vector<Rational>(Q.prof.size(), 0))};
  std::map<Colouring, int> bottom_rep;
  for (int j = 0; j < Q.prof.size(); ++j) bottom_rep[Q.prof.reps[j]] = j;
  const std::vector<int>& bottom_cells = w.tag("bottom");
  // One search per top class with the bottom left free; fillings are tallied by their bottom colouring.
  for (int i = 0; i < P.prof.size(); ++i) {
    std::vector<BoundaryCondition> conds;
    conds.push_back({top.space, w.tag("top"), P.prof.reps[i]});
    conds.push_back({in_cyl, w.tag("in_cyl"), pullback_colouring(in_model, a, P.in.objects[P.prof.x[i]], in_proj)});
    conds.push_back({out_cyl, w.tag("out_cyl"), pullback_colouring(out_model, a, P.out.objects[P.prof.y[i]], out_proj)});
    std::vector<long long> n(Q.prof.size(), 0);
    for_each_colouring(w.space, a, pin(w.space, conds), [&](const Colouring& f) {
      auto it = bottom_rep.find(restrict_colouring(f, bottom_cells));
      if (it != bottom_rep.end()) ++n[it->second];
      return true;
    });
    for (int j = 0; j < Q.prof.size(); ++j) {
      if (n[j] == 0 || P.prof.x[i] != Q.prof.x[j] || P.prof.y[i] != Q.prof.y[j]) continue;
      t.m[i][j] = Rational(static_cast<long>(n[j])) * theta_frame * Q.prof.class_size[j] * theta_bottom;
    }
  }
  return t;
}

NatTransform vertical_identity_window(const Stratification& m, const CrossedComplex& a) {
  return window_nat_transform(window_support(m, m), m, m, a);
}

}  // namespace quinn
