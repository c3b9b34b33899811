#include "quinn/simpset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace quinn {

namespace {

// sigma: [m] -> [n] monotone surjection with the given deg set.
std::vector<int> surjection(const std::vector<int>& deg, int m) {
  std::vector<int> s(m + 1, 0);
  std::size_t k = 0;
  for (int t = 0; t < m; ++t) {
    bool repeat = k < deg.size() && deg[k] == t;
    if (repeat) ++k;
    s[t + 1] = s[t] + (repeat ? 0 : 1);
  }
  return s;
}

std::vector<int> deg_of(const std::vector<int>& s) {
  std::vector<int> d;
  for (std::size_t t = 0; t + 1 < s.size(); ++t)
    if (s[t] == s[t + 1]) d.push_back(static_cast<int>(t));
  return d;
}

// Strips the degeneracies in c (a subset of deg) from a surjection's deg set, reindexing the rest.
std::vector<int> factor_deg(const std::vector<int>& deg, const std::vector<int>& c) {
  std::vector<int> out;
  for (int t : deg) {
    if (std::binary_search(c.begin(), c.end(), t)) continue;
    int shift = static_cast<int>(std::lower_bound(c.begin(), c.end(), t) - c.begin());
    out.push_back(t - shift);
  }
  return out;
}

}  // namespace

std::vector<int> normalise_degeneracy_word(const std::vector<int>& word) {
  // s_{w0} ... s_{wk-1} y = (sigma_{wk-1} ∘ ... ∘ sigma_{w0})^* y; track the composite on [m].
  int m = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0) throw Error(ErrorKind::Precondition, "negative degeneracy index");
  }
  // Dimension of the result is dim(y) + k; only relative indices matter, so take y of the
  // smallest dimension compatible with the word.
  int need = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    int level = static_cast<int>(word.size() - 1 - i);  // s_{w[i]} acts on dimension dim(y)+level
    need = std::max(need, word[i] - level);
  }
  int base = need;  // dim(y)
  m = base + static_cast<int>(word.size());
  std::vector<int> s(m + 1);
  std::iota(s.begin(), s.end(), 0);
  // Apply sigma_{w0} first on [m] -> [m-1], then sigma_{w1}, ...
  for (int j : word) {
    for (int& v : s)
      if (v > j) --v;
  }
  return deg_of(s);
}

// ---------------------------------------------------------------- Builder

int SimpSet::Builder::add(int dim, std::vector<SimplexRef> faces, std::string label) {
  dims_.push_back(dim);
  faces_.push_back(std::move(faces));
  labels_.push_back(std::move(label));
  return static_cast<int>(dims_.size()) - 1;
}

Report SimpSet::Builder::check() const {
  for (std::size_t g = 0; g < dims_.size(); ++g) {
    int n = dims_[g];
    if (n < 0) return Report::bad_table("negative dimension at generator " + std::to_string(g));
    if (n == 0 ? !faces_[g].empty() : static_cast<int>(faces_[g].size()) != n + 1)
      return Report::bad_table("generator " + std::to_string(g) + " has the wrong number of faces");
    for (const SimplexRef& r : faces_[g]) {
      if (r.core < 0 || r.core >= static_cast<int>(dims_.size()))
        return Report::bad_table("dangling face reference at generator " + std::to_string(g));
      if (dims_[r.core] + static_cast<int>(r.deg.size()) != n - 1)
        return Report::bad_table("face dimension mismatch at generator " + std::to_string(g));
      for (std::size_t k = 0; k < r.deg.size(); ++k) {
        if (r.deg[k] < 0 || r.deg[k] >= n - 1 || (k > 0 && r.deg[k] <= r.deg[k - 1]))
          return Report::bad_table("degeneracy word not in ascending normal form at generator " + std::to_string(g));
      }
    }
  }
  return Report::pass();
}

SimpSet SimpSet::Builder::build(std::vector<int>* old_to_new) const {
  require(check(), ErrorKind::Schema);
  const int n = size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dims_[a] < dims_[b]; });
  std::vector<int> remap(n);
  for (int i = 0; i < n; ++i) remap[order[i]] = i;
  SimpSet s;
  int top = -1;
  for (int i = 0; i < n; ++i) {
    int g = order[i];
    s.dims_.push_back(dims_[g]);
    std::vector<SimplexRef> f = faces_[g];
    for (SimplexRef& r : f) r.core = remap[r.core];
    s.faces_.push_back(std::move(f));
    s.labels_.push_back(labels_[g].empty() ? std::to_string(i) : labels_[g]);
    top = std::max(top, dims_[g]);
  }
  s.by_dim_.assign(top + 1, {});
  for (int i = 0; i < n; ++i) s.by_dim_[s.dims_[i]].push_back(i);
  s.cache();
  if (old_to_new) *old_to_new = remap;
  return s;
}

// ---------------------------------------------------------------- SimpSet

const std::vector<int>& SimpSet::generators(int n) const {
  static const std::vector<int> none;
  if (n < 0 || n > max_dim()) return none;
  return by_dim_[n];
}

SimplexRef SimpSet::face(const SimplexRef& r, int i) const {
  const int m = dim(r);
  const int n = dims_[r.core];
  if (i < 0 || i > m || m == 0) throw Error(ErrorKind::Precondition, "face index out of range");
  std::vector<int> s = surjection(r.deg, m);
  std::vector<int> c;  // sigma ∘ delta_i : [m-1] -> [n]
  for (int t = 0; t <= m; ++t)
    if (t != i) c.push_back(s[t]);
  int missed = -1;
  for (int v = 0, k = 0; v <= n; ++v) {
    while (k < static_cast<int>(c.size()) && c[k] < v) ++k;
    if (k == static_cast<int>(c.size()) || c[k] != v) {
      missed = v;
      break;
    }
  }
  if (missed < 0) return {r.core, deg_of(c)};
  // c = delta_missed ∘ tau with tau : [m-1] -> [n-1].
  for (int& v : c)
    if (v > missed) --v;
  const SimplexRef& f = faces_[r.core][missed];
  std::vector<int> rho = surjection(f.deg, n - 1);
  std::vector<int> comp;
  for (int v : c) comp.push_back(rho[v]);
  return {f.core, deg_of(comp)};
}

void SimpSet::cache() {
  const int n = num_generators();
  vertices_.assign(n, {});
  edge01_.assign(n, {});
  for (int g = 0; g < n; ++g) {
    for (int j = 0; j <= dims_[g]; ++j) vertices_[g].push_back(walk_vertex(g, j));
    if (dims_[g] >= 1) edge01_[g] = sub_simplex({g, {}}, {0, 1});
  }
}

int SimpSet::walk_vertex(int g, int j) const {
  SimplexRef r{g, {}};
  int n = dims_[g];
  for (int k = n; k > j; --k) r = face(r, k);
  for (int k = 0; k < j; ++k) r = face(r, 0);
  return r.core;
}

int SimpSet::vertex(const SimplexRef& r, int j) const {
  std::vector<int> s = surjection(r.deg, dim(r));
  return vertex(r.core, s[j]);
}

SimplexRef SimpSet::sub_simplex(const SimplexRef& r, const std::vector<int>& keep) const {
  const int m = dim(r);
  std::vector<char> kept(m + 1, 0);
  for (int k : keep) kept[k] = 1;
  SimplexRef cur = r;
  for (int t = m; t >= 0; --t)
    if (!kept[t]) cur = face(cur, t);
  return cur;
}

std::vector<int> SimpSet::closure(const std::vector<int>& gens) const {
  std::vector<char> in(num_generators(), 0);
  std::vector<int> stack;
  for (int g : gens) {
    if (g < 0 || g >= num_generators()) throw Error(ErrorKind::Precondition, "generator id out of range");
    if (!in[g]) {
      in[g] = 1;
      stack.push_back(g);
    }
  }
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    for (const SimplexRef& f : faces_[g])
      if (!in[f.core]) {
        in[f.core] = 1;
        stack.push_back(f.core);
      }
  }
  std::vector<int> out;
  for (int g = 0; g < num_generators(); ++g)
    if (in[g]) out.push_back(g);
  return out;
}

bool SimpSet::is_subcomplex(const std::vector<int>& gens) const {
  std::vector<int> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return closure(sorted) == sorted;
}

SimpSet SimpSet::induced(const std::vector<int>& gens, std::vector<int>* embed) const {
  if (!is_subcomplex(gens)) throw Error(ErrorKind::Precondition, "not a subcomplex");
  std::vector<int> ordered = gens;
  std::stable_sort(ordered.begin(), ordered.end(), [&](int a, int b) { return dims_[a] < dims_[b]; });
  std::vector<int> pos(num_generators(), -1);
  Builder b;
  for (int g : ordered) {
    std::vector<SimplexRef> f = faces_[g];
    for (SimplexRef& r : f) r.core = pos[r.core];
    pos[g] = b.add(dims_[g], std::move(f), labels_[g]);
  }
  if (embed) *embed = ordered;
  return b.build();
}

Report SimpSet::validate() const {
  for (int g = 0; g < num_generators(); ++g) {
    const int n = dims_[g];
    if (n < 2) continue;
    SimplexRef r{g, {}};
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        SimplexRef lhs = face(face(r, j), i);
        SimplexRef rhs = face(face(r, i), j - 1);
        if (lhs != rhs) return Report::fail("simplicial identity d_i d_j = d_{j-1} d_i", {g, i, j});
      }
  }
  return Report::pass();
}

int SimpSet::euler_characteristic() const {
  int chi = 0;
  for (int n = 0; n <= max_dim(); ++n) chi += (n % 2 ? -1 : 1) * static_cast<int>(by_dim_[n].size());
  return chi;
}

int k_count(int i, const SimpSet& x) { return static_cast<int>(x.generators(i).size()); }

int k_count_rel(int i, const SimpSet& x, const std::vector<int>& y) {
  if (!x.is_subcomplex(y)) throw Error(ErrorKind::Precondition, "k_count_rel: not a subcomplex");
  std::set<int> ys(y.begin(), y.end());
  int k = 0;
  for (int g : x.generators(i)) k += !ys.count(g);
  return k;
}

// ---------------------------------------------------------------- Stratification

const std::vector<int>& Stratification::tag(const std::string& t) const {
  auto it = tags.find(t);
  if (it == tags.end()) throw Error(ErrorKind::Schema, "missing tag '" + t + "'");
  return it->second;
}

SimpSet Stratification::tag_model(const std::string& t, std::vector<int>* embed) const {
  return space.induced(tag(t), embed);
}

Report Stratification::validate() const {
  Report r = space.validate();
  if (!r) return r;
  for (const auto& [name, gens] : tags) {
    for (int g : gens)
      if (g < 0 || g >= space.num_generators()) return Report::bad_table("tag '" + name + "' refers to a missing generator");
    std::set<int> uniq(gens.begin(), gens.end());
    if (uniq.size() != gens.size()) return Report::bad_table("tag '" + name + "' lists a generator twice");
    if (!space.is_subcomplex(gens)) return Report::fail("tag '" + name + "' is not closed under faces", {});
  }
  if (has_tag("in") && has_tag("out")) {
    std::set<int> in(tag("in").begin(), tag("in").end());
    for (int g : tag("out"))
      if (in.count(g)) return Report::fail("in and out boundaries intersect", {g});
  }
  return Report::pass();
}

Stratification closed(SimpSet x, std::string name) {
  Stratification s;
  s.space = std::move(x);
  s.tags["in"] = {};
  s.tags["out"] = {};
  s.role = "manifold";
  s.name = std::move(name);
  return s;
}

// ---------------------------------------------------------------- builders

SimpSet point() {
  SimpSet::Builder b;
  b.add_vertex("v");
  return b.build();
}

SimpSet standard_simplex(int n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "standard_simplex: n < 0");
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::vector<int>, int> id;
  SimpSet::Builder b;
  for (const auto& s : subsets) {
    std::vector<SimplexRef> faces;
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + static_cast<long>(i));
        faces.push_back({id.at(f), {}});
      }
    std::string label;
    for (int v : s) label += std::to_string(v);
    id[s] = b.add(static_cast<int>(s.size()) - 1, std::move(faces), label);
  }
  return b.build();
}

SimpSet interval() { return standard_simplex(1); }

SimpSet circle() {
  SimpSet::Builder b;
  int v = b.add_vertex("v");
  b.add_edge(v, v, "e");
  return b.build();
}

SimpSet sphere(int n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "sphere: n < 0");
  SimpSet::Builder b;
  int v = b.add_vertex("v");
  if (n == 0) {
    b.add_vertex("w");
    return b.build();
  }
  std::vector<int> deg(n - 1);
  std::iota(deg.begin(), deg.end(), 0);
  b.add(n, std::vector<SimplexRef>(n + 1, SimplexRef{v, deg}), "c");
  return b.build();
}

SimpSet torus() {
  SimpSet::Builder b;
  int v = b.add_vertex("v");
  int a = b.add_edge(v, v, "a"), bb = b.add_edge(v, v, "b"), c = b.add_edge(v, v, "c");
  b.add(2, {{bb, {}}, {c, {}}, {a, {}}}, "sigma");
  b.add(2, {{a, {}}, {c, {}}, {bb, {}}}, "tau");
  return b.build();
}

namespace {

SimplexRef ref(int g) { return {g, {}}; }

}  // namespace

Stratification cup() {
  SimpSet::Builder b;
  int v = b.add_vertex("v");
  int e = b.add_edge(v, v, "e");
  b.add(2, {{v, {0}}, {v, {0}}, ref(e)}, "D");
  Stratification s;
  s.space = b.build();
  s.tags["in"] = {};
  s.tags["out"] = {0, 1};
  s.role = "cobordism";
  s.name = "cup";
  return s;
}

Stratification cap() {
  Stratification s = cup();
  s.tags["in"] = {0, 1};
  s.tags["out"] = {};
  s.name = "cap";
  return s;
}

Stratification one_holed_torus() {
  SimpSet::Builder b;
  int v = b.add_vertex("v");
  int a = b.add_edge(v, v, "a"), bb = b.add_edge(v, v, "b"), c = b.add_edge(v, v, "c");
  int d = b.add_edge(v, v, "d"), e = b.add_edge(v, v, "e");
  b.add(2, {ref(bb), ref(c), ref(a)}, "T1");
  b.add(2, {ref(a), ref(d), ref(bb)}, "T2");
  b.add(2, {ref(d), ref(c), ref(e)}, "T3");
  Stratification s;
  s.space = b.build();
  s.tags["in"] = {};
  s.tags["out"] = {v, e};
  s.role = "cobordism";
  s.name = "one-holed-torus";
  return s;
}

Stratification handle() {
  SimpSet::Builder b;
  int u = b.add_vertex("u"), w = b.add_vertex("w");
  int a = b.add_edge(u, u, "a"), bb = b.add_edge(u, u, "b"), c = b.add_edge(u, u, "c");
  int d = b.add_edge(u, u, "d"), e = b.add_edge(u, u, "e"), p = b.add_edge(u, u, "p");
  int r = b.add_edge(u, u, "r"), t = b.add_edge(u, w, "t"), sd = b.add_edge(u, w, "s");
  int q = b.add_edge(w, w, "q");
  b.add(2, {ref(bb), ref(c), ref(a)}, "T1");
  b.add(2, {ref(a), ref(d), ref(bb)}, "T2");
  b.add(2, {ref(d), ref(c), ref(e)}, "T3");
  b.add(2, {ref(e), ref(r), ref(p)}, "T4");
  b.add(2, {ref(t), ref(sd), ref(r)}, "T5");
  b.add(2, {ref(q), ref(sd), ref(t)}, "T6");
  std::vector<int> map;
  Stratification s;
  s.space = b.build(&map);
  s.tags["in"] = {map[u], map[p]};
  s.tags["out"] = {map[w], map[q]};
  s.role = "cobordism";
  s.name = "handle";
  return s;
}

// ---------------------------------------------------------------- prism

namespace {

// Nondegenerate simplex (s_A x, w) of X × Δ(1); w is a monotone map [m] -> [1].
using PrismKey = std::tuple<int, std::vector<int>, std::vector<int>>;

struct PrismData {
  Stratification strat;
  std::map<PrismKey, int> id;
  std::vector<PrismKey> key;
};

PrismData prism_impl(const SimpSet& x) {
  PrismData out;
  SimpSet::Builder b;
  std::vector<PrismKey> keys;
  std::map<PrismKey, int> decl;
  std::vector<int> in_tag, out_tag;

  auto face_of = [&](const PrismKey& k, int i) -> SimplexRef {
    const auto& [core, a, w] = k;
    SimplexRef xr = x.face(SimplexRef{core, a}, i);
    std::vector<int> w2 = w;
    w2.erase(w2.begin() + i);
    std::vector<int> bdeg = deg_of(w2);
    std::vector<int> common;
    std::set_intersection(xr.deg.begin(), xr.deg.end(), bdeg.begin(), bdeg.end(), std::back_inserter(common));
    std::vector<int> a2 = factor_deg(xr.deg, common);
    std::vector<int> w3;
    for (std::size_t t = 0; t < w2.size(); ++t)
      if (!(t > 0 && std::binary_search(common.begin(), common.end(), static_cast<int>(t) - 1))) w3.push_back(w2[t]);
    return {decl.at({xr.core, a2, w3}), common};
  };

  auto add = [&](PrismKey k, const std::string& label) {
    int m = static_cast<int>(std::get<2>(k).size()) - 1;
    std::vector<SimplexRef> faces;
    if (m > 0)
      for (int i = 0; i <= m; ++i) faces.push_back(face_of(k, i));
    int id = b.add(m, std::move(faces), label);
    decl[k] = id;
    keys.push_back(k);
    return id;
  };

  for (int m = 0; m <= x.max_dim() + 1; ++m) {
    for (int g : x.generators(m)) in_tag.push_back(add({g, {}, std::vector<int>(m + 1, 0)}, x.label(g) + "x0"));
    for (int g : x.generators(m)) out_tag.push_back(add({g, {}, std::vector<int>(m + 1, 1)}, x.label(g) + "x1"));
    for (int p = 0; p < m; ++p) {
      std::vector<int> w(m + 1, 0);
      for (int t = p + 1; t <= m; ++t) w[t] = 1;
      for (int g : x.generators(m)) add({g, {}, w}, x.label(g) + "xI" + std::to_string(p));
      for (int g : x.generators(m - 1)) add({g, {p}, w}, "s" + std::to_string(p) + x.label(g) + "xI" + std::to_string(p));
    }
  }
  std::vector<int> remap;
  out.strat.space = b.build(&remap);
  for (std::size_t i = 0; i < keys.size(); ++i) out.id[keys[i]] = remap[i];
  out.key.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out.key[remap[i]] = keys[i];
  for (int& g : in_tag) g = remap[g];
  for (int& g : out_tag) g = remap[g];
  out.strat.tags["in"] = in_tag;
  out.strat.tags["out"] = out_tag;
  out.strat.role = "cobordism";
  return out;
}

// The sub-list of `tag` of a given dimension, in list order.
std::vector<std::vector<int>> by_dimension(const SimpSet& s, const std::vector<int>& tag) {
  std::vector<std::vector<int>> out(s.max_dim() + 2);
  for (int g : tag) out[s.dim(g)].push_back(g);
  return out;
}

}  // namespace

Stratification prism(const SimpSet& x, std::string name) {
  Stratification s = prism_impl(x).strat;
  s.name = name.empty() ? "prism" : std::move(name);
  return s;
}

Stratification prism(const Stratification& x) { return prism(x.space, "prism(" + x.name + ")"); }

std::vector<SimplexRef> prism_projection(const SimpSet& x) {
  PrismData p = prism_impl(x);
  std::vector<SimplexRef> out;
  for (const auto& [core, a, w] : p.key) out.push_back({core, a});
  return out;
}

// ---------------------------------------------------------------- glue

GlueResult glue_with_maps(const Stratification& x, const Stratification& y) {
  const std::vector<int>& xo = x.tag("out");
  const std::vector<int>& yi = y.tag("in");
  auto xo_d = by_dimension(x.space, xo);
  auto yi_d = by_dimension(y.space, yi);
  std::size_t dims = std::max(xo_d.size(), yi_d.size());
  xo_d.resize(dims);
  yi_d.resize(dims);
  std::vector<int> match(y.space.num_generators(), -1);  // Y.in generator -> X generator
  for (std::size_t n = 0; n < dims; ++n) {
    if (xo_d[n].size() != yi_d[n].size())
      throw Error(ErrorKind::Boundary, "glue: boundary cell counts differ in dimension " + std::to_string(n));
    for (std::size_t k = 0; k < xo_d[n].size(); ++k) match[yi_d[n][k]] = xo_d[n][k];
  }
  if (!x.space.is_subcomplex(xo) || !y.space.is_subcomplex(yi))
    throw Error(ErrorKind::Boundary, "glue: boundary is not a subcomplex");
  for (int g : yi) {
    int h = match[g];
    for (int i = 0; i < static_cast<int>(y.space.faces(g).size()); ++i) {
      SimplexRef fy = y.space.face(g, i);
      SimplexRef fx = x.space.face(h, i);
      if (match[fy.core] != fx.core || fy.deg != fx.deg)
        throw Error(ErrorKind::Boundary, "glue: boundary matching is not face-compatible at " + y.space.label(g));
    }
  }
  int top = std::max(x.space.max_dim(), y.space.max_dim());
  SimpSet::Builder b;
  std::vector<int> xm(x.space.num_generators(), -1), ym(y.space.num_generators(), -1);
  std::vector<char> y_in(y.space.num_generators(), 0);
  for (int g : yi) y_in[g] = 1;
  for (int n = 0; n <= top; ++n) {
    for (int g : x.space.generators(n)) {
      std::vector<SimplexRef> f = x.space.faces(g);
      for (SimplexRef& r : f) r.core = xm[r.core];
      xm[g] = b.add(n, std::move(f), x.space.label(g));
    }
    for (int g : y.space.generators(n)) {
      if (y_in[g]) {
        ym[g] = xm[match[g]];
        continue;
      }
      std::vector<SimplexRef> f = y.space.faces(g);
      for (SimplexRef& r : f) r.core = ym[r.core];
      ym[g] = b.add(n, std::move(f), y.space.label(g) + "'");
    }
  }
  GlueResult out;
  std::vector<int> remap;
  out.result.space = b.build(&remap);
  for (int& g : xm) g = remap[g];
  for (int& g : ym) g = remap[g];
  for (int g : x.tag("in")) out.result.tags["in"].push_back(xm[g]);
  for (int g : y.tag("out")) out.result.tags["out"].push_back(ym[g]);
  out.result.tags.try_emplace("in");
  out.result.tags.try_emplace("out");
  out.result.role = "cobordism";
  out.result.name = x.name + ";" + y.name;
  out.x_map = std::move(xm);
  out.y_map = std::move(ym);
  return out;
}

Stratification glue(const Stratification& x, const Stratification& y) { return glue_with_maps(x, y).result; }

// ---------------------------------------------------------------- windows

namespace {

bool same_space(const SimpSet& a, const SimpSet& b) {
  if (a.num_generators() != b.num_generators()) return false;
  for (int g = 0; g < a.num_generators(); ++g)
    if (a.dim(g) != b.dim(g) || a.faces(g) != b.faces(g)) return false;
  return true;
}

void check_boundaries(const Stratification& top, const Stratification& bottom) {
  for (const char* t : {"in", "out"}) {
    SimpSet a = top.tag_model(t), b = bottom.tag_model(t);
    if (!same_space(a, b)) throw Error(ErrorKind::Boundary, std::string("window: top and bottom '") + t + "' boundaries differ");
  }
}

// Cylinder over a boundary of M, embedded in prism(M).
std::vector<int> cylinder_image(const Stratification& m, const std::string& t, const PrismData& z) {
  std::vector<int> embed;
  SimpSet model = m.tag_model(t, &embed);
  PrismData p = prism_impl(model);
  std::vector<int> out(p.key.size());
  for (std::size_t j = 0; j < p.key.size(); ++j) {
    auto [core, a, w] = p.key[j];
    out[j] = z.id.at({embed[core], a, w});
  }
  return out;
}

Report check_embedding(const SimpSet& src, const SimpSet& dst, const std::vector<int>& map, const std::string& what) {
  if (static_cast<int>(map.size()) != src.num_generators()) return Report::bad_table(what + ": wrong length");
  std::set<int> seen;
  for (int g = 0; g < src.num_generators(); ++g) {
    if (map[g] < 0 || map[g] >= dst.num_generators()) return Report::bad_table(what + ": id out of range");
    if (!seen.insert(map[g]).second) return Report::fail(what + ": not injective", {g});
    if (dst.dim(map[g]) != src.dim(g)) return Report::fail(what + ": dimension", {g});
    for (int i = 0; i < static_cast<int>(src.faces(g).size()); ++i) {
      SimplexRef a = src.face(g, i), b = dst.face(map[g], i);
      if (map[a.core] != b.core || a.deg != b.deg) return Report::fail(what + ": faces", {g, i});
    }
  }
  return Report::pass();
}

}  // namespace

Stratification window_support(const Stratification& top, const Stratification& bottom) {
  check_boundaries(top, bottom);
  if (!same_space(top.space, bottom.space) || top.tag("in") != bottom.tag("in") || top.tag("out") != bottom.tag("out"))
    throw Error(ErrorKind::Precondition, "window: the canonical filling needs identical top and bottom; supply a filling");
  PrismData z = prism_impl(top.space);
  Stratification w;
  w.space = z.strat.space;
  w.role = "window-support";
  w.name = "window(" + top.name + ")";
  w.tags["top"] = z.strat.tags["in"];
  w.tags["bottom"] = z.strat.tags["out"];
  w.tags["in_cyl"] = cylinder_image(top, "in", z);
  w.tags["out_cyl"] = cylinder_image(top, "out", z);
  std::set<int> frame;
  for (const char* t : {"top", "bottom", "in_cyl", "out_cyl"}) frame.insert(w.tags[t].begin(), w.tags[t].end());
  w.tags["frame"] = {frame.begin(), frame.end()};
  return w;
}

Report check_window_support(const Stratification& w, const Stratification& top, const Stratification& bottom) {
  try {
    check_boundaries(top, bottom);
  } catch (const Error& e) {
    return Report::fail("window boundary", {}, e.what());
  }
  for (const char* t : {"top", "bottom", "in_cyl", "out_cyl", "frame"})
    if (!w.has_tag(t)) return Report::bad_table(std::string("window support lacks tag '") + t + "'");
  Report r = w.space.validate();
  if (!r) return r;
  r = check_embedding(top.space, w.space, w.tag("top"), "top");
  if (!r) return r;
  r = check_embedding(bottom.space, w.space, w.tag("bottom"), "bottom");
  if (!r) return r;
  for (const char* t : {"in", "out"}) {
    std::string cyl = std::string(t) + "_cyl";
    std::vector<int> embed;
    SimpSet model = top.tag_model(t, &embed);
    PrismData p = prism_impl(model);
    r = check_embedding(p.strat.space, w.space, w.tag(cyl), cyl);
    if (!r) return r;
    // The cylinder ends are the boundaries of top and bottom.
    std::vector<int> bembed;
    bottom.tag_model(t, &bembed);
    const auto& ends0 = p.strat.tag("in");
    const auto& ends1 = p.strat.tag("out");
    for (std::size_t j = 0; j < embed.size(); ++j) {
      if (w.tag(cyl)[ends0[j]] != w.tag("top")[embed[j]]) return Report::fail(cyl + " does not meet top", {static_cast<int>(j)});
      if (w.tag(cyl)[ends1[j]] != w.tag("bottom")[bembed[j]]) return Report::fail(cyl + " does not meet bottom", {static_cast<int>(j)});
    }
  }
  std::set<int> frame;
  for (const char* t : {"top", "bottom", "in_cyl", "out_cyl"}) frame.insert(w.tag(t).begin(), w.tag(t).end());
  std::set<int> given(w.tag("frame").begin(), w.tag("frame").end());
  if (frame != given) return Report::fail("frame is not the union of top, bottom and cylinders", {});
  return Report::pass();
}

// ---------------------------------------------------------------- catalog

std::vector<std::string> catalog_names() {
  return {"point", "interval", "simplex-2", "simplex-3", "circle", "sphere-2", "torus", "cup", "cap",
          "one-holed-torus", "handle", "prism-point", "prism-interval", "prism-circle", "double-prism-point",
          "double-prism-circle"};
}

Stratification catalog(const std::string& name) {
  if (name == "point") return closed(point(), name);
  if (name == "interval") return closed(interval(), name);
  if (name == "simplex-2") return closed(standard_simplex(2), name);
  if (name == "simplex-3") return closed(standard_simplex(3), name);
  if (name == "circle") return closed(circle(), name);
  if (name == "sphere-2") return closed(sphere(2), name);
  if (name == "torus") return closed(torus(), name);
  if (name == "cup") return cup();
  if (name == "cap") return cap();
  if (name == "one-holed-torus") return one_holed_torus();
  if (name == "handle") return handle();
  if (name == "prism-point") return prism(point(), name);
  if (name == "prism-interval") return prism(interval(), name);
  if (name == "prism-circle") return prism(circle(), name);
  if (name == "double-prism-point") {
    Stratification s = glue(prism(point()), prism(point()));
    s.name = name;
    return s;
  }
  if (name == "double-prism-circle") {
    Stratification s = glue(prism(circle()), prism(circle()));
    s.name = name;
    return s;
  }
  throw Error(ErrorKind::Schema, "unknown builtin '" + name + "'");
}

}  // namespace quinn
