#include "quinn/homotopy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quinn {

int homotopy_base(const SimpSet& x, const Colouring& f, int c) {
  int n = x.dim(c);
  if (n == 0) return f[c];
  if (n == 1) return f[x.face(c, 0).core];
  return f[x.vertex(c, 0)];
}

std::vector<std::vector<int>> homotopy_choices(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int k) {
  std::vector<std::vector<int>> out(x.num_generators());
  for (int c = 0; c < x.num_generators(); ++c) {
    int level = x.dim(c) + k;
    int ob = homotopy_base(x, f, c);
    if (level == 1) {
      out[c] = a.a1().in(ob);
    } else {
      out[c].resize(a.size(level, ob));
      std::iota(out[c].begin(), out[c].end(), 0);
    }
  }
  return out;
}

Homotopy identity_homotopy(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int k) {
  Homotopy h(x.num_generators());
  for (int c = 0; c < x.num_generators(); ++c) h[c] = a.identity(x.dim(c) + k, homotopy_base(x, f, c));
  return h;
}

void for_each_homotopy(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int k,
                       const std::function<void(const Homotopy&)>& visit) {
  auto choices = homotopy_choices(x, a, f, k);
  std::vector<int> radix, digits(choices.size(), 0);
  for (const auto& c : choices) radix.push_back(static_cast<int>(c.size()));
  Homotopy h(choices.size());
  do {
    for (std::size_t i = 0; i < choices.size(); ++i) h[i] = choices[i][digits[i]];
    visit(h);
  } while (advance(digits, radix));
}

int extend_on_boundary(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const Homotopy& h, int k, int c) {
  const int n = x.dim(c);
  const int m = n - 1 + k;
  const int x0 = f[x.vertex(c, 0)];
  if (m > a.truncation()) return 0;
  const FinGroupoid& g = a.a1();
  HalWord w = hal_word(x, c);
  if (n == 2) {
    // Derivation rules h(uv) = (h(u) ◁ f(v)) h(v) and h(u⁻¹) = (h(u) ◁ f(u)⁻¹)⁻¹ along the edge path.
    int acc = a.identity(m, x0);
    int at = x0;
    for (const HalTerm& t : w.terms) {
      if (t.face.degenerate()) continue;
      int u = f[t.face.core];
      int hu = h[t.face.core];
      if (t.sign > 0) {
        acc = a.mul(m, g.tgt(u), a.act(m, at, acc, u), hu);
        at = g.tgt(u);
      } else {
        int ui = g.inv(u);
        int term = a.inv(m, g.src(u), a.act(m, g.tgt(u), hu, ui));
        acc = a.mul(m, g.src(u), a.act(m, at, acc, ui), term);
        at = g.src(u);
      }
    }
    return acc;
  }
  const int x1 = f[x.vertex(c, 1)];
  const int e = face_value(x, f, w.twist_edge);
  int acc = a.identity(m, x0);
  for (const HalTerm& t : w.terms) {
    if (t.face.degenerate()) continue;
    int v = h[t.face.core];
    if (t.twisted && e >= 0) v = a.act(m, x1, v, g.inv(e));
    if (t.sign < 0) v = a.inv(m, x0, v);
    acc = a.mul(m, x0, acc, v);
  }
  return acc;
}

namespace {

// Value of the source colouring f′ on generator c.
int apply_at(const SimpSet& x, const CrossedComplex& a, const Homotopy& h, const Colouring& f, int c) {
  const FinGroupoid& g = a.a1();
  const int N = a.truncation();
  const int n = x.dim(c);
  if (n == 0) {
    if (g.tgt(h[c]) != f[c]) throw Error(ErrorKind::Precondition, "homotopy does not target the colouring");
    return g.src(h[c]);
  }
  if (n == 1) {
    int xs = x.face(c, 1).core, ys = x.face(c, 0).core;
    int arrow = g.compose(h[xs], f[c]);
    if (N >= 2) arrow = g.compose(arrow, a.boundary(2, f[ys], h[c]));
    return g.compose(arrow, g.inv(h[ys]));
  }
  if (n > N) return 0;
  int v0 = x.vertex(c, 0);
  int x0 = f[v0];
  int val = a.mul(n, x0, f[c], extend_on_boundary(x, a, f, h, 1, c));
  val = a.mul(n, x0, val, a.boundary(n + 1, x0, h[c]));
  return a.act(n, x0, val, g.inv(h[v0]));
}

}  // namespace

Colouring apply_homotopy(const SimpSet& x, const CrossedComplex& a, const Homotopy& h, const Colouring& f) {
  Colouring fp(f.size());
  for (int c = 0; c < x.num_generators(); ++c) fp[c] = apply_at(x, a, h, f, c);
  return fp;
}

Homotopy compose_homotopies(const SimpSet& x, const CrossedComplex& a, const Homotopy& hp, const Homotopy& h, const Colouring& f) {
  const FinGroupoid& g = a.a1();
  Homotopy j(h.size());
  for (int c = 0; c < x.num_generators(); ++c) {
    const int n = x.dim(c);
    if (n == 0) {
      j[c] = g.compose(hp[c], h[c]);
      continue;
    }
    int v = n == 1 ? x.face(c, 0).core : x.vertex(c, 0);
    int y = f[v];
    int level = n + 1;
    int moved = a.act(level, g.src(h[v]), hp[c], h[v]);
    j[c] = a.mul(level, y, h[c], moved);
  }
  return j;
}

Homotopy invert_homotopy(const SimpSet& x, const CrossedComplex& a, const Homotopy& h, const Colouring& f) {
  const FinGroupoid& g = a.a1();
  Homotopy k(h.size());
  for (int c = 0; c < x.num_generators(); ++c) {
    const int n = x.dim(c);
    if (n == 0) {
      k[c] = g.inv(h[c]);
      continue;
    }
    int v = n == 1 ? x.face(c, 0).core : x.vertex(c, 0);
    int y = f[v];
    int level = n + 1;
    k[c] = a.act(level, y, a.inv(level, y, h[c]), g.inv(h[v]));
  }
  return k;
}

Homotopy delta2(const SimpSet& x, const CrossedComplex& a, const Homotopy& h2, const Colouring& f) {
  const FinGroupoid& g = a.a1();
  const int N = a.truncation();
  Homotopy d(h2.size());
  for (int c = 0; c < x.num_generators(); ++c) {
    const int n = x.dim(c);
    if (n == 0) {
      d[c] = N >= 2 ? a.boundary(2, f[c], h2[c]) : g.id(f[c]);
    } else if (n == 1) {
      int xs = x.face(c, 1).core, ys = x.face(c, 0).core;
      int y = f[ys];
      if (N < 2) {
        d[c] = 0;
        continue;
      }
      int first = a.act(2, f[xs], a.inv(2, f[xs], h2[xs]), f[c]);
      int val = a.mul(2, y, first, h2[ys]);
      d[c] = a.mul(2, y, val, a.boundary(3, y, h2[c]));
    } else {
      int x0 = f[x.vertex(c, 0)];
      int level = n + 1;
      if (level > N) {
        d[c] = 0;
        continue;
      }
      int b = extend_on_boundary(x, a, f, h2, 2, c);
      if (n % 2) b = a.inv(level, x0, b);
      d[c] = a.mul(level, x0, a.boundary(n + 2, x0, h2[c]), b);
    }
  }
  return d;
}

std::vector<Homotopy> delta2_images(const SimpSet& x, const CrossedComplex& a, const Colouring& f) {
  std::set<Homotopy> seen;
  for_each_homotopy(x, a, f, 2, [&](const Homotopy& h2) { seen.insert(delta2(x, a, h2, f)); });
  return {seen.begin(), seen.end()};
}

Homotopy restrict_homotopy(const Homotopy& h, const std::vector<int>& embed) {
  Homotopy r;
  r.reserve(embed.size());
  for (int g : embed) r.push_back(h[g]);
  return r;
}

Homotopy expand_homotopy(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const Homotopy& on_y,
                         const std::vector<int>& embed) {
  Homotopy h = identity_homotopy(x, a, f, 1);
  for (std::size_t j = 0; j < embed.size(); ++j) h[embed[j]] = on_y[j];
  return h;
}

// ---------------------------------------------------------------- crs_pi1

int CrsPi1::object_of(const Colouring& f) const {
  auto it = object_index.find(f);
  if (it == object_index.end()) throw Error(ErrorKind::Precondition, "not a colouring of this space");
  return it->second;
}

Homotopy CrsPi1::canonical(const SimpSet& x, const CrossedComplex& a, int target, const Homotopy& h) const {
  Homotopy best = h;
  for (const Homotopy& d : deltas[target]) {
    Homotopy j = compose_homotopies(x, a, h, d, objects[target]);
    if (j < best) best = j;
  }
  return best;
}

int CrsPi1::arrow_of(const SimpSet& x, const CrossedComplex& a, int target, const Homotopy& h) const {
  auto it = arrow_index.find({target, canonical(x, a, target, h)});
  if (it == arrow_index.end()) throw Error(ErrorKind::Precondition, "unknown homotopy");
  return it->second;
}

CrsPi1 crs_pi1(const SimpSet& x, const CrossedComplex& a) {
  CrsPi1 p;
  p.objects = enumerate_colourings(x, a);
  for (std::size_t i = 0; i < p.objects.size(); ++i) p.object_index[p.objects[i]] = static_cast<int>(i);
  const int nobj = static_cast<int>(p.objects.size());
  p.deltas.resize(nobj);
  FinGroupoid::Spec spec;
  spec.objects = nobj;
  for (int t = 0; t < nobj; ++t) {
    const Colouring& f = p.objects[t];
    p.deltas[t] = delta2_images(x, a, f);
    for_each_homotopy(x, a, f, 1, [&](const Homotopy& h) {
      Homotopy c = p.canonical(x, a, t, h);
      if (c != h) return;
      int id = static_cast<int>(p.rep.size());
      p.arrow_index[{t, c}] = id;
      p.rep.push_back(c);
      spec.src.push_back(p.object_of(apply_homotopy(x, a, c, f)));
      spec.tgt.push_back(t);
    });
  }
  spec.compose = [&](int u, int v) {
    // u : f'' -> f' then v : f' -> f.
    int t = spec.tgt[v];
    Homotopy j = compose_homotopies(x, a, p.rep[u], p.rep[v], p.objects[t]);
    return p.arrow_of(x, a, t, j);
  };
  for (int o = 0; o < nobj; ++o) {
    std::string s;
    for (std::size_t i = 0; i < p.objects[o].size(); ++i) s += (i ? "," : "") + std::to_string(p.objects[o][i]);
    spec.object_labels.push_back("[" + s + "]");
  }
  p.groupoid = FinGroupoid::build(spec);
  return p;
}

Report check_delta_normal(const SimpSet& x, const CrossedComplex& a, const CrsPi1& p) {
  for (int t = 0; t < static_cast<int>(p.objects.size()); ++t) {
    const Colouring& f = p.objects[t];
    std::set<Homotopy> ds(p.deltas[t].begin(), p.deltas[t].end());
    // Conjugate each δ-image by every homotopy into f: H⁻¹ D H lands at the source of H.
    bool bad = false;
    int witness = -1;
    for_each_homotopy(x, a, f, 1, [&](const Homotopy& h) {
      if (bad) return;
      Colouring src = apply_homotopy(x, a, h, f);
      int s = p.object_of(src);
      std::set<Homotopy> dsrc(p.deltas[s].begin(), p.deltas[s].end());
      Homotopy hinv = invert_homotopy(x, a, h, f);  // f -> src
      for (const Homotopy& d : ds) {
        // src -> f -> f -> src
        Homotopy left = compose_homotopies(x, a, h, d, f);
        Homotopy conj = compose_homotopies(x, a, left, hinv, src);
        if (!dsrc.count(conj)) {
          bad = true;
          witness = t;
          return;
        }
      }
    });
    if (bad) return Report::fail("delta images not closed under conjugation", {witness});
  }
  return Report::pass();
}

// ---------------------------------------------------------------- rel classes

int RelClasses::class_of_colouring(const Colouring& f) const {
  auto it = index.find(f);
  if (it == index.end()) throw Error(ErrorKind::Precondition, "not one of the fillings");
  return class_of[it->second];
}

RelClasses rel_classes(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& y, std::vector<Colouring> fillings) {
  RelClasses r;
  r.fillings = std::move(fillings);
  std::sort(r.fillings.begin(), r.fillings.end());
  r.fillings.erase(std::unique(r.fillings.begin(), r.fillings.end()), r.fillings.end());
  const int n = static_cast<int>(r.fillings.size());
  for (int i = 0; i < n; ++i) r.index[r.fillings[i]] = i;
  std::vector<char> fixed(x.num_generators(), 0);
  for (int g : y) fixed[g] = 1;
  // An elementary homotopy at c only changes c and the generators whose closure contains it.
  std::vector<std::vector<int>> star(x.num_generators());
  for (int c = 0; c < x.num_generators(); ++c)
    for (int h : x.closure({c})) star[h].push_back(c);
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    const Colouring& f = r.fillings[i];
    auto choices = homotopy_choices(x, a, f, 1);
    Homotopy h = identity_homotopy(x, a, f, 1);
    Colouring g = f;
    for (int c = 0; c < x.num_generators(); ++c) {
      if (fixed[c]) continue;
      const int id = h[c];
      for (int v : choices[c]) {
        if (v == id) continue;
        h[c] = v;
        for (int u : star[c]) g[u] = apply_at(x, a, h, f, u);
        auto it = r.index.find(g);
        if (it == r.index.end()) throw Error(ErrorKind::Precondition, "rel_classes: filling set not closed under internal homotopies");
        uf.unite(i, it->second);
      }
      h[c] = id;
      for (int u : star[c]) g[u] = f[u];
    }
  }
  r.class_of.assign(n, -1);
  std::vector<int> number(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (number[root] < 0) {
      number[root] = static_cast<int>(r.rep.size());
      r.rep.push_back(i);
      r.size.push_back(0);
    }
    r.class_of[i] = number[root];
    ++r.size[number[root]];
  }
  return r;
}

int holonomy_act(const SimpSet& x, const CrossedComplex& a, const RelClasses& classes, const std::vector<int>& embed,
                 const Homotopy& eta, int filling) {
  const Colouring& f = classes.fillings[filling];
  Homotopy h = expand_homotopy(x, a, f, eta, embed);
  return classes.class_of_colouring(apply_homotopy(x, a, h, f));
}

}  // namespace quinn
