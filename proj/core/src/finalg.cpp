#include "quinn/finalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace quinn {

std::string Report::describe() const {
  if (ok) return "pass";
  std::ostringstream os;
  os << axiom;
  if (!witness.empty()) {
    os << " witness (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  if (!message.empty()) os << ": " << message;
  return os.str();
}

void require(const Report& r, ErrorKind kind) {
  if (r.ok) return;
  throw Error(r.malformed ? ErrorKind::Schema : kind, r.describe());
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool exact_rational_power(const Rational& base, const Rational& e, Rational& out) {
  mpz_class num = e.get_num(), den = e.get_den();
  if (base == 0) {
    if (e <= 0) return false;
    out = 0;
    return true;
  }
  if (base == 1 || num == 0) {
    out = 1;
    return true;
  }
  if (!den.fits_ulong_p() || !num.fits_slong_p()) return false;
  unsigned long q = den.get_ui();
  mpz_class bn = base.get_num(), bd = base.get_den();
  bool neg = bn < 0;
  if (neg) {
    if (q % 2 == 0) return false;
    bn = -bn;
  }
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), bn.get_mpz_t(), q)) return false;
  if (!mpz_root(rd.get_mpz_t(), bd.get_mpz_t(), q)) return false;
  if (neg) rn = -rn;
  long p = num.get_si();
  mpz_class pn, pd;
  unsigned long ap = static_cast<unsigned long>(p < 0 ? -p : p);
  mpz_pow_ui(pn.get_mpz_t(), rn.get_mpz_t(), ap);
  mpz_pow_ui(pd.get_mpz_t(), rd.get_mpz_t(), ap);
  out = p < 0 ? Rational(pd, pn) : Rational(pn, pd);
  out.canonicalize();
  return true;
}

// ---------------------------------------------------------------- FinGroup

Report FinGroup::check_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return Report::bad_table("empty group table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(t[a].size()) != n) return Report::bad_table("group table is not square");
    for (int b = 0; b < n; ++b)
      if (t[a][b] < 0 || t[a][b] >= n) return Report::bad_table("group table entry out of range");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool unit = true;
    for (int b = 0; b < n && unit; ++b) unit = t[a][b] == b && t[b][a] == b;
    if (unit) e = a;
  }
  if (e < 0) return Report::fail("group identity", {}, "no two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return Report::fail("group associativity", {a, b, c});
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = t[a][b] == e && t[b][a] == e;
    if (!found) return Report::fail("group inverse", {a});
  }
  return Report::pass();
}

FinGroup FinGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  require(check_table(table));
  FinGroup g;
  const int n = static_cast<int>(table.size());
  g.table_ = std::move(table);
  for (int a = 0; a < n; ++a)
    if (g.table_[a][a] == a) g.id_ = a;
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == g.id_) g.inv_[a] = b;
  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  if (static_cast<int>(labels.size()) != n) throw Error(ErrorKind::Schema, "label count differs from group order");
  g.labels_ = std::move(labels);
  return g;
}

FinGroup FinGroup::trivial() { return from_table({{0}}, {"1"}); }

FinGroup FinGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t));
}

FinGroup FinGroup::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    std::string s;
    for (int i : perms[a]) s += std::to_string(i + 1);
    labels.push_back(s);
    for (int b = 0; b < m; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index[c];
    }
  }
  return from_table(std::move(t), std::move(labels));
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  const int n = a.order(), m = b.order();
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  std::vector<std::string> labels;
  for (int x = 0; x < n * m; ++x) {
    labels.push_back("(" + a.label(x / m) + "," + b.label(x % m) + ")");
    for (int y = 0; y < n * m; ++y) t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  }
  return from_table(std::move(t), std::move(labels));
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FinGroup FinGroup::subgroup(const std::vector<int>& elems, std::vector<int>* embed) const {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(label(sorted[i]));
    for (int j = 0; j < m; ++j) {
      int p = pos[mul(sorted[i], sorted[j])];
      if (p < 0) throw Error(ErrorKind::Axiom, "subset is not closed under multiplication");
      t[i][j] = p;
    }
  }
  if (embed) *embed = sorted;
  return from_table(std::move(t), std::move(labels));
}

bool FinGroup::is_normal(const std::vector<int>& elems) const {
  std::vector<char> in(order(), 0);
  for (int e : elems) in[e] = 1;
  for (int g = 0; g < order(); ++g)
    for (int e : elems)
      if (!in[mul(mul(inv(g), e), g)]) return false;
  return true;
}

FinGroup FinGroup::quotient(const std::vector<int>& normal, std::vector<int>* proj) const {
  if (!is_normal(normal)) throw Error(ErrorKind::Axiom, "quotient by a non-normal subset");
  std::vector<int> coset(order(), -1);
  std::vector<int> reps;
  for (int g = 0; g < order(); ++g) {
    if (coset[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int e : normal) coset[mul(g, e)] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back("[" + label(reps[i]) + "]");
    for (int j = 0; j < m; ++j) t[i][j] = coset[mul(reps[i], reps[j])];
  }
  if (proj) *proj = coset;
  return from_table(std::move(t), std::move(labels));
}

namespace {

int element_order(const FinGroup& g, int a) {
  int k = 1;
  for (int x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

bool extend_iso(const FinGroup& g, const FinGroup& h, const std::vector<int>& gens, std::size_t depth,
                std::vector<int>& image, std::vector<int>& phi) {
  if (depth == gens.size()) {
    // Close up by words in the generators and check the homomorphism property.
    phi.assign(g.order(), -1);
    phi[g.identity()] = h.identity();
    std::vector<int> queue{g.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int y = g.mul(x, gens[i]);
        int v = h.mul(phi[x], image[i]);
        if (phi[y] < 0) {
          phi[y] = v;
          queue.push_back(y);
        } else if (phi[y] != v) {
          return false;
        }
      }
    }
    std::vector<char> hit(h.order(), 0);
    for (int x = 0; x < g.order(); ++x) {
      if (phi[x] < 0 || hit[phi[x]]) return false;
      hit[phi[x]] = 1;
    }
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
    return true;
  }
  int ord = element_order(g, gens[depth]);
  for (int y = 0; y < h.order(); ++y) {
    if (element_order(h, y) != ord) continue;
    image[depth] = y;
    if (extend_iso(g, h, gens, depth + 1, image, phi)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_group_isomorphism(const FinGroup& g, const FinGroup& h) {
  if (g.order() != h.order() || g.is_abelian() != h.is_abelian()) return std::nullopt;
  // Greedy generating set.
  std::vector<int> gens;
  std::vector<char> span(g.order(), 0);
  span[g.identity()] = 1;
  auto close = [&]() {
    std::vector<int> queue;
    for (int x = 0; x < g.order(); ++x)
      if (span[x]) queue.push_back(x);
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (int s : gens) {
        int y = g.mul(queue[qi], s);
        if (!span[y]) {
          span[y] = 1;
          queue.push_back(y);
        }
      }
  };
  for (int x = 0; x < g.order(); ++x)
    if (!span[x]) {
      gens.push_back(x);
      close();
    }
  std::vector<int> image(gens.size()), phi;
  if (extend_iso(g, h, gens, 0, image, phi)) return phi;
  return std::nullopt;
}

// ---------------------------------------------------------------- FinGroupoid

Report FinGroupoid::check(const Spec& s) {
  const int m = static_cast<int>(s.src.size());
  if (s.objects <= 0 && m > 0) return Report::bad_table("arrows without objects");
  if (static_cast<int>(s.tgt.size()) != m) return Report::bad_table("src/tgt length mismatch");
  if (!s.compose && m > 0) return Report::bad_table("missing composition");
  for (int a = 0; a < m; ++a)
    if (s.src[a] < 0 || s.src[a] >= s.objects || s.tgt[a] < 0 || s.tgt[a] >= s.objects)
      return Report::bad_table("arrow endpoint out of range");
  std::vector<std::vector<int>> out(s.objects), in(s.objects);
  for (int a = 0; a < m; ++a) {
    out[s.src[a]].push_back(a);
    in[s.tgt[a]].push_back(a);
  }
  std::map<std::pair<int, int>, int> table;
  for (int a = 0; a < m; ++a)
    for (int b : out[s.tgt[a]]) {
      int c = s.compose(a, b);
      if (c < 0 || c >= m) return Report::bad_table("composite missing or out of range");
      if (s.src[c] != s.src[a] || s.tgt[c] != s.tgt[b]) return Report::fail("composite endpoints", {a, b, c});
      table[{a, b}] = c;
    }
  for (int x = 0; x < s.objects; ++x) {
    int ident = -1;
    for (int a : out[x]) {
      if (s.tgt[a] != x) continue;
      bool unit = true;
      for (int b : out[x]) unit = unit && table[{a, b}] == b;
      for (int b : in[x]) unit = unit && table[{b, a}] == b;
      if (unit) {
        ident = a;
        break;
      }
    }
    if (ident < 0) return Report::fail("groupoid identity", {x});
  }
  for (int a = 0; a < m; ++a)
    for (int b : out[s.tgt[a]])
      for (int c : out[s.tgt[b]])
        if (table[{table[{a, b}], c}] != table[{a, table[{b, c}]}]) return Report::fail("groupoid associativity", {a, b, c});
  return Report::pass();
}

FinGroupoid FinGroupoid::build(const Spec& s) {
  require(check(s));
  FinGroupoid g;
  g.nobj_ = s.objects;
  g.src_ = s.src;
  g.tgt_ = s.tgt;
  const int m = static_cast<int>(s.src.size());
  g.out_.assign(g.nobj_, {});
  g.in_.assign(g.nobj_, {});
  g.out_index_.assign(m, 0);
  for (int a = 0; a < m; ++a) {
    g.out_index_[a] = static_cast<int>(g.out_[s.src[a]].size());
    g.out_[s.src[a]].push_back(a);
    g.in_[s.tgt[a]].push_back(a);
  }
  g.comp_.assign(m, {});
  for (int a = 0; a < m; ++a) {
    const auto& next = g.out_[s.tgt[a]];
    g.comp_[a].resize(next.size());
    for (std::size_t k = 0; k < next.size(); ++k) g.comp_[a][k] = s.compose(a, next[k]);
  }
  g.id_.assign(g.nobj_, -1);
  for (int x = 0; x < g.nobj_; ++x)
    for (int a : g.out_[x]) {
      if (s.tgt[a] != x) continue;
      bool unit = true;
      for (int b : g.out_[x]) unit = unit && g.compose(a, b) == b;
      for (int b : g.in_[x]) unit = unit && g.compose(b, a) == b;
      if (unit) {
        g.id_[x] = a;
        break;
      }
    }
  g.inv_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b : g.out_[s.tgt[a]])
      if (g.tgt_[b] == g.src_[a] && g.compose(a, b) == g.id_[g.src_[a]] && g.compose(b, a) == g.id_[g.tgt_[a]]) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw Error(ErrorKind::Axiom, "groupoid inverse: arrow " + std::to_string(a) + " has none");
  }
  g.object_labels_ = s.object_labels;
  g.arrow_labels_ = s.arrow_labels;
  if (g.object_labels_.size() != static_cast<std::size_t>(g.nobj_)) {
    g.object_labels_.clear();
    for (int x = 0; x < g.nobj_; ++x) g.object_labels_.push_back(std::to_string(x));
  }
  if (g.arrow_labels_.size() != static_cast<std::size_t>(m)) {
    g.arrow_labels_.clear();
    for (int a = 0; a < m; ++a) g.arrow_labels_.push_back(std::to_string(a));
  }
  return g;
}

int FinGroupoid::compose(int a, int b) const {
  if (tgt_[a] != src_[b]) throw Error(ErrorKind::Precondition, "composing non-composable arrows");
  return comp_[a][out_index_[b]];
}

std::vector<int> FinGroupoid::hom(int x, int y) const {
  std::vector<int> r;
  for (int a : out_[x])
    if (tgt_[a] == y) r.push_back(a);
  return r;
}

FinGroupoid FinGroupoid::from_group(const FinGroup& g) {
  Spec s;
  s.objects = 1;
  s.src.assign(g.order(), 0);
  s.tgt.assign(g.order(), 0);
  s.compose = [&g](int a, int b) { return g.mul(a, b); };
  s.object_labels = {"*"};
  s.arrow_labels = g.labels();
  return build(s);
}

FinGroupoid FinGroupoid::codiscrete(int k) {
  Spec s;
  s.objects = k;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      s.src.push_back(x);
      s.tgt.push_back(y);
      s.arrow_labels.push_back(std::to_string(x) + "->" + std::to_string(y));
    }
  s.compose = [k](int a, int b) { return (a / k) * k + (b % k); };
  return build(s);
}

FinGroupoid FinGroupoid::discrete(int k) {
  Spec s;
  s.objects = k;
  for (int x = 0; x < k; ++x) {
    s.src.push_back(x);
    s.tgt.push_back(x);
  }
  s.compose = [](int a, int) { return a; };
  return build(s);
}

std::vector<int> FinGroupoid::component_of() const {
  UnionFind uf(nobj_);
  for (int a = 0; a < num_arrows(); ++a) uf.unite(src_[a], tgt_[a]);
  std::vector<int> comp(nobj_), number(nobj_, -1);
  int next = 0;
  for (int x = 0; x < nobj_; ++x) {
    int r = uf.find(x);
    if (number[r] < 0) number[r] = next++;
    comp[x] = number[r];
  }
  return comp;
}

int FinGroupoid::num_components() const {
  auto c = component_of();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

FinGroup FinGroupoid::vertex_group(int x, std::vector<int>* embed) const {
  std::vector<int> loops = hom(x, x);
  std::vector<int> pos(num_arrows(), -1);
  for (std::size_t i = 0; i < loops.size(); ++i) pos[loops[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(loops.size(), std::vector<int>(loops.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    labels.push_back(arrow_labels_[loops[i]]);
    for (std::size_t j = 0; j < loops.size(); ++j) t[i][j] = pos[compose(loops[i], loops[j])];
  }
  if (embed) *embed = loops;
  return FinGroup::from_table(std::move(t), std::move(labels));
}

Report FinGroupoid::validate() const {
  Spec s;
  s.objects = nobj_;
  s.src = src_;
  s.tgt = tgt_;
  s.compose = [this](int a, int b) { return compose(a, b); };
  Report r = check(s);
  if (!r) return r;
  for (int a = 0; a < num_arrows(); ++a)
    if (compose(a, inv_[a]) != id_[src_[a]] || compose(inv_[a], a) != id_[tgt_[a]])
      return Report::fail("groupoid inverse", {a});
  return r;
}

Report check_groupoid_isomorphism(const FinGroupoid& g, const FinGroupoid& h, const std::vector<int>& ob,
                                  const std::vector<int>& ar) {
  if (g.num_objects() != h.num_objects() || g.num_arrows() != h.num_arrows())
    return Report::fail("groupoid iso: sizes", {g.num_objects(), h.num_objects(), g.num_arrows(), h.num_arrows()});
  if (static_cast<int>(ob.size()) != g.num_objects() || static_cast<int>(ar.size()) != g.num_arrows())
    return Report::bad_table("groupoid iso: map sizes");
  std::vector<char> hit_o(h.num_objects(), 0), hit_a(h.num_arrows(), 0);
  for (int x = 0; x < g.num_objects(); ++x) {
    if (ob[x] < 0 || ob[x] >= h.num_objects() || hit_o[ob[x]]) return Report::fail("groupoid iso: objects not bijective", {x});
    hit_o[ob[x]] = 1;
  }
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (ar[a] < 0 || ar[a] >= h.num_arrows() || hit_a[ar[a]]) return Report::fail("groupoid iso: arrows not bijective", {a});
    hit_a[ar[a]] = 1;
    if (h.src(ar[a]) != ob[g.src(a)] || h.tgt(ar[a]) != ob[g.tgt(a)]) return Report::fail("groupoid iso: endpoints", {a});
  }
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b : g.out(g.tgt(a)))
      if (ar[g.compose(a, b)] != h.compose(ar[a], ar[b])) return Report::fail("groupoid iso: composition", {a, b});
  return Report::pass();
}

// ---------------------------------------------------------------- crossed modules

CrossedModule CrossedModule::trivial_action(FinGroup G, FinGroup E, std::vector<int> boundary) {
  CrossedModule m;
  m.action.assign(E.order(), std::vector<int>(G.order()));
  for (int e = 0; e < E.order(); ++e)
    for (int g = 0; g < G.order(); ++g) m.action[e][g] = e;
  m.G = std::move(G);
  m.E = std::move(E);
  m.boundary = std::move(boundary);
  return m;
}

Report CrossedModule::validate() const {
  const int ng = G.order(), ne = E.order();
  if (static_cast<int>(boundary.size()) != ne) return Report::bad_table("boundary table length");
  for (int e = 0; e < ne; ++e)
    if (boundary[e] < 0 || boundary[e] >= ng) return Report::bad_table("boundary value out of range");
  if (static_cast<int>(action.size()) != ne) return Report::bad_table("action table rows");
  for (int e = 0; e < ne; ++e) {
    if (static_cast<int>(action[e].size()) != ng) return Report::bad_table("action table columns");
    for (int g = 0; g < ng; ++g)
      if (action[e][g] < 0 || action[e][g] >= ne) return Report::bad_table("action value out of range");
  }
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < ne; ++f)
      if (boundary[E.mul(e, f)] != G.mul(boundary[e], boundary[f])) return Report::fail("boundary homomorphism", {e, f});
  for (int e = 0; e < ne; ++e) {
    if (action[e][G.identity()] != e) return Report::fail("action unit", {e});
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h)
        if (action[action[e][g]][h] != action[e][G.mul(g, h)]) return Report::fail("action composition", {e, g, h});
  }
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < ne; ++f)
      for (int g = 0; g < ng; ++g)
        if (action[E.mul(e, f)][g] != E.mul(action[e][g], action[f][g])) return Report::fail("action by automorphisms", {e, f, g});
  for (int e = 0; e < ne; ++e)
    for (int g = 0; g < ng; ++g)
      if (boundary[action[e][g]] != G.mul(G.mul(G.inv(g), boundary[e]), g)) return Report::fail("first Peiffer", {e, g});
  for (int a = 0; a < ne; ++a)
    for (int e = 0; e < ne; ++e)
      if (action[a][boundary[e]] != E.mul(E.mul(E.inv(e), a), e)) return Report::fail("second Peiffer", {a, e});
  return Report::pass();
}

// ---------------------------------------------------------------- crossed complexes

CrossedComplex::CrossedComplex(FinGroupoid a1, std::vector<CrossedLevel> levels)
    : a1_(std::move(a1)), levels_(std::move(levels)) {}

const FinGroup& CrossedComplex::group(int n, int x) const {
  static const FinGroup trivial_group = FinGroup::trivial();
  if (n > truncation()) return trivial_group;
  return levels_[n - 2].groups[x];
}

int CrossedComplex::size(int n, int x) const {
  if (n == 1) return static_cast<int>(a1_.out(x).size());
  if (n > truncation()) return 1;
  return levels_[n - 2].groups[x].order();
}

int CrossedComplex::mul(int n, int x, int a, int b) const {
  if (n > truncation()) return 0;
  return levels_[n - 2].groups[x].mul(a, b);
}

int CrossedComplex::inv(int n, int x, int a) const {
  if (n > truncation()) return 0;
  return levels_[n - 2].groups[x].inv(a);
}

int CrossedComplex::identity(int n, int x) const {
  if (n == 1) return a1_.id(x);
  if (n > truncation()) return 0;
  return levels_[n - 2].groups[x].identity();
}

int CrossedComplex::boundary(int n, int x, int a) const {
  if (n > truncation()) return identity(n - 1, x);
  return levels_[n - 2].boundary[x][a];
}

int CrossedComplex::act(int n, int x, int a, int g) const {
  if (n > truncation()) return 0;
  return levels_[n - 2].action[x][a][a1_.out_index(g)];
}

Report CrossedComplex::validate() const {
  Report r = a1_.validate();
  if (!r) return r;
  const int nobj = num_objects();
  for (int n = 2; n <= truncation(); ++n) {
    const CrossedLevel& L = levels_[n - 2];
    if (static_cast<int>(L.groups.size()) != nobj || static_cast<int>(L.boundary.size()) != nobj ||
        static_cast<int>(L.action.size()) != nobj)
      return Report::bad_table("level " + std::to_string(n) + ": per-object tables missing");
    for (int x = 0; x < nobj; ++x) {
      const int sz = L.groups[x].order();
      if (static_cast<int>(L.boundary[x].size()) != sz || static_cast<int>(L.action[x].size()) != sz)
        return Report::bad_table("level " + std::to_string(n) + ": table not total");
      for (int a = 0; a < sz; ++a) {
        int b = L.boundary[x][a];
        if (n == 2 ? (b < 0 || b >= a1_.num_arrows()) : (b < 0 || b >= size(n - 1, x)))
          return Report::bad_table("level " + std::to_string(n) + ": boundary out of range");
        if (L.action[x][a].size() != a1_.out(x).size())
          return Report::bad_table("level " + std::to_string(n) + ": action not total");
        for (std::size_t k = 0; k < a1_.out(x).size(); ++k) {
          int y = a1_.tgt(a1_.out(x)[k]);
          if (L.action[x][a][k] < 0 || L.action[x][a][k] >= L.groups[y].order())
            return Report::bad_table("level " + std::to_string(n) + ": action out of range");
        }
      }
    }
  }
  for (int n = 2; n <= truncation(); ++n) {
    for (int x = 0; x < nobj; ++x) {
      const FinGroup& g = group(n, x);
      if (n >= 3 && !g.is_abelian()) return Report::fail("level " + std::to_string(n) + " abelian", {x});
      for (int a = 0; a < g.order(); ++a) {
        if (n == 2) {
          int b = boundary(2, x, a);
          if (a1_.src(b) != x || a1_.tgt(b) != x) return Report::fail("boundary base-preserving", {n, x, a});
        } else if (n >= 3 && boundary(n - 1, x, boundary(n, x, a)) != identity(n - 2 == 1 ? 1 : n - 2, x)) {
          return Report::fail("boundary squared", {n, x, a});
        }
        for (int b = 0; b < g.order(); ++b) {
          int lhs = boundary(n, x, g.mul(a, b));
          int rhs = n == 2 ? a1_.compose(boundary(2, x, a), boundary(2, x, b))
                           : group(n - 1, x).mul(boundary(n, x, a), boundary(n, x, b));
          if (lhs != rhs) return Report::fail("boundary homomorphism", {n, x, a, b});
        }
      }
    }
  }
  for (int n = 2; n <= truncation(); ++n) {
    for (int x = 0; x < nobj; ++x) {
      const FinGroup& gx = group(n, x);
      for (int a = 0; a < gx.order(); ++a) {
        if (act(n, x, a, a1_.id(x)) != a) return Report::fail("action unit", {n, x, a});
        for (int g : a1_.out(x)) {
          int y = a1_.tgt(g);
          int ag = act(n, x, a, g);
          for (int h : a1_.out(y))
            if (act(n, y, ag, h) != act(n, x, a, a1_.compose(g, h))) return Report::fail("action composition", {n, x, a, g, h});
          for (int b = 0; b < gx.order(); ++b)
            if (act(n, x, gx.mul(a, b), g) != group(n, y).mul(ag, act(n, x, b, g)))
              return Report::fail("action by automorphisms", {n, x, a, b, g});
          int lhs = boundary(n, y, ag);
          int rhs = n == 2 ? a1_.compose(a1_.compose(a1_.inv(g), boundary(2, x, a)), g) : act(n - 1, x, boundary(n, x, a), g);
          if (lhs != rhs) return Report::fail("first Peiffer", {n, x, a, g});
        }
      }
    }
  }
  if (truncation() >= 2) {
    for (int x = 0; x < nobj; ++x) {
      const FinGroup& g2 = group(2, x);
      for (int a = 0; a < g2.order(); ++a)
        for (int b = 0; b < g2.order(); ++b)
          if (act(2, x, a, boundary(2, x, b)) != g2.mul(g2.mul(g2.inv(b), a), b)) return Report::fail("second Peiffer", {x, a, b});
      for (int n = 3; n <= truncation(); ++n)
        for (int a = 0; a < size(n, x); ++a)
          for (int b = 0; b < g2.order(); ++b)
            if (act(n, x, a, boundary(2, x, b)) != a) return Report::fail("boundary of A2 acts trivially", {n, x, a, b});
    }
  }
  return Report::pass();
}

CrossedComplex iota1(const FinGroupoid& g) {
  require(g.validate());
  return CrossedComplex(g, {});
}

CrossedComplex iota1(const FinGroup& g) { return iota1(FinGroupoid::from_group(g)); }

CrossedComplex iota2(const CrossedModule& m) {
  require(m.validate());
  FinGroupoid a1 = FinGroupoid::from_group(m.G);
  CrossedLevel L;
  L.groups = {m.E};
  L.boundary = {m.boundary};
  L.action.assign(1, std::vector<std::vector<int>>(m.E.order()));
  for (int e = 0; e < m.E.order(); ++e)
    for (int g : a1.out(0)) L.action[0][e].push_back(m.action[e][g]);
  return CrossedComplex(std::move(a1), {std::move(L)});
}

namespace {

// Elements of A_n(x) with trivial boundary, and the image of ∂_{n+1} in A_n(x).
std::vector<int> kernel_at(const CrossedComplex& a, int x, int n) {
  std::vector<int> k;
  for (int e = 0; e < a.size(n, x); ++e)
    if (a.boundary(n, x, e) == a.identity(n - 1, x)) k.push_back(e);
  return k;
}

std::vector<int> image_at(const CrossedComplex& a, int x, int n) {
  std::set<int> im;
  for (int e = 0; e < a.size(n + 1, x); ++e) im.insert(a.boundary(n + 1, x, e));
  return {im.begin(), im.end()};
}

}  // namespace

FinGroup homotopy_group(const CrossedComplex& a, int c, int n) {
  if (c < 0 || c >= a.num_objects()) throw Error(ErrorKind::Precondition, "homotopy_group: not an object");
  if (n < 1) throw Error(ErrorKind::Precondition, "homotopy_group: n must be positive");
  const FinGroupoid& g = a.a1();
  if (n == 1) {
    std::vector<int> embed;
    FinGroup v = g.vertex_group(c, &embed);
    std::vector<int> pos(g.num_arrows(), -1);
    for (std::size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = static_cast<int>(i);
    std::vector<int> im;
    for (int b : image_at(a, c, 1)) im.push_back(pos[b]);
    std::sort(im.begin(), im.end());
    return v.quotient(im);
  }
  std::vector<int> ker = kernel_at(a, c, n);
  std::vector<int> embed;
  FinGroup k = a.group(n, c).subgroup(ker, &embed);
  std::vector<int> pos(a.size(n, c), -1);
  for (std::size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = static_cast<int>(i);
  std::vector<int> im;
  for (int b : image_at(a, c, n)) im.push_back(pos[b]);
  std::sort(im.begin(), im.end());
  return k.quotient(im);
}

ChainTower chain_tower(const CrossedComplex& a) {
  ChainTower t;
  t.a1 = a.a1();
  for (int n = 2; n <= a.truncation(); ++n) {
    ChainTower::Level L;
    L.boundary = a.level(n).boundary;
    for (int x = 0; x < a.num_objects(); ++x) L.identity.push_back(a.identity(n, x));
    t.levels.push_back(std::move(L));
  }
  return t;
}

Rational homotopy_content_by_groups(const ChainTower& t) {
  const FinGroupoid& g = t.a1;
  auto comp = g.component_of();
  std::vector<int> rep;
  for (int x = 0; x < g.num_objects(); ++x)
    if (comp[x] == static_cast<int>(rep.size())) rep.push_back(x);
  const int N = 1 + static_cast<int>(t.levels.size());
  Rational total = 0;
  for (int c : rep) {
    // |A_n(c)| for n >= 1 (n = 1 means the vertex group) and boundary images.
    auto order = [&](int n) -> long {
      if (n == 1) return static_cast<long>(g.hom(c, c).size());
      if (n > N) return 1;
      return static_cast<long>(t.levels[n - 2].boundary[c].size());
    };
    auto image = [&](int n) -> long {  // |im ∂_{n+1}| inside A_n(c)
      if (n + 1 > N) return 1;
      std::set<int> im(t.levels[n - 1].boundary[c].begin(), t.levels[n - 1].boundary[c].end());
      return static_cast<long>(im.size());
    };
    auto kernel = [&](int n) -> long {  // |ker ∂_n| inside A_n(c), n >= 2
      if (n > N) return 1;
      int ident = n == 2 ? g.id(c) : t.levels[n - 3].identity[c];
      long k = 0;
      for (int b : t.levels[n - 2].boundary[c]) k += b == ident;
      return k;
    };
    Rational term = 1;
    for (int n = 1; n <= N; ++n) {
      long num = n == 1 ? order(1) : kernel(n);
      Rational pin(num, image(n));
      pin.canonicalize();
      if (n % 2 == 0) term *= pin;
      else term /= pin;
    }
    total += term;
  }
  return total;
}

Rational chi_pi_theta(const CrossedComplex& a) {
  Rational total = 0;
  for (int x = 0; x < a.num_objects(); ++x) {
    Rational term = 1;
    for (int i = 1; i <= a.truncation(); ++i) {
      if (i % 2 == 0) term *= a.size(i, x);
      else term /= a.size(i, x);
    }
    total += term;
  }
  return total;
}

ChiPi chi_pi(const CrossedComplex& a) {
  require(a.validate());
  return {chi_pi_theta(a), homotopy_content_by_groups(chain_tower(a))};
}

// ---------------------------------------------------------------- actions

Report check_left_action(const FinGroup& g, int n, const std::vector<std::vector<int>>& act) {
  if (static_cast<int>(act.size()) != g.order()) return Report::bad_table("action table rows");
  for (int a = 0; a < g.order(); ++a) {
    if (static_cast<int>(act[a].size()) != n) return Report::bad_table("action table columns");
    for (int x = 0; x < n; ++x)
      if (act[a][x] < 0 || act[a][x] >= n) return Report::bad_table("action value out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (act[g.identity()][x] != x) return Report::fail("action unit", {x});
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (act[g.mul(a, b)][x] != act[a][act[b][x]]) return Report::fail("action composition", {a, b, x});
  }
  return Report::pass();
}

FinGroupoid action_groupoid(const FinGroup& g, int n, const std::vector<std::vector<int>>& act,
                            std::vector<std::string> object_labels) {
  require(check_left_action(g, n, act));
  const int m = g.order();
  FinGroupoid::Spec s;
  s.objects = n;
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a) {
      s.src.push_back(x);
      s.tgt.push_back(act[a][x]);
      s.arrow_labels.push_back("(" + (object_labels.empty() ? std::to_string(x) : object_labels[x]) + "," + g.label(a) + ")");
    }
  s.compose = [m, &g](int p, int q) { return (p / m) * m + g.mul(q % m, p % m); };
  s.object_labels = std::move(object_labels);
  return FinGroupoid::build(s);
}

int orbit_count(const FinGroup& g, int n, const std::vector<std::vector<int>>& act) {
  std::vector<char> seen(n, 0);
  int orbits = 0;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++orbits;
    for (int a = 0; a < g.order(); ++a) seen[act[a][x]] = 1;
  }
  return orbits;
}

std::vector<std::vector<int>> conjugation_action(const FinGroup& g) {
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) act[a][x] = g.mul(g.mul(a, x), g.inv(a));
  return act;
}

FinGroup semidirect(const FinGroup& g, const FinGroup& e, const std::vector<std::vector<int>>& act) {
  const int ng = g.order(), ne = e.order();
  if (static_cast<int>(act.size()) != ne) throw Error(ErrorKind::Schema, "semidirect: action rows");
  for (int x = 0; x < ne; ++x) {
    if (static_cast<int>(act[x].size()) != ng) throw Error(ErrorKind::Schema, "semidirect: action columns");
    if (act[x][g.identity()] != x) throw Error(ErrorKind::Axiom, "semidirect: action unit");
    for (int h = 0; h < ng; ++h)
      for (int k = 0; k < ng; ++k)
        if (act[act[x][h]][k] != act[x][g.mul(h, k)]) throw Error(ErrorKind::Axiom, "semidirect: not a right action");
    for (int y = 0; y < ne; ++y)
      for (int h = 0; h < ng; ++h)
        if (act[e.mul(x, y)][h] != e.mul(act[x][h], act[y][h])) throw Error(ErrorKind::Axiom, "semidirect: not by automorphisms");
  }
  const int n = ng * ne;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) {
    int h1 = p / ne, e1 = p % ne;
    labels.push_back("(" + g.label(h1) + "," + e.label(e1) + ")");
    for (int q = 0; q < n; ++q) {
      int h = q / ne, x = q % ne;
      t[p][q] = g.mul(h1, h) * ne + e.mul(x, act[e1][h]);
    }
  }
  return FinGroup::from_table(std::move(t), std::move(labels));
}

}  // namespace quinn
