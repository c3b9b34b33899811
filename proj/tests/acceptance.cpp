// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "corpus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace quinn;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

oracle::XMod raw(const CrossedModule& m) { return {m.G.table(), m.E.table(), m.boundary}; }

std::vector<std::pair<Stratification, Stratification>> composable_pairs() {
  std::vector<std::pair<Stratification, Stratification>> out;
  auto cobs = corpus::cobordisms();
  for (const auto& m : cobs)
    for (const auto& n : cobs)
      if (corpus::composable(m, n)) out.push_back({m, n});
  return out;
}

bool same_matrix(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j].is_float() || b[i][j].is_float() || !(a[i][j] == b[i][j])) return false;
  }
  return true;
}

// D(G) on pairs (g, a), id g*n + a, with (g,a)(g',a') = δ(aga⁻¹, g')(g, a'a).
std::vector<std::vector<int>> double_table(const oracle::Table& t, bool literal) {
  int n = oracle::order(t);
  std::vector<std::vector<int>> prod(n * n, std::vector<int>(n * n, -1));
  for (int g = 0; g < n; ++g)
    for (int a = 0; a < n; ++a)
      for (int g2 = 0; g2 < n; ++g2)
        for (int a2 = 0; a2 < n; ++a2)
          if (oracle::conj(t, a, g) == g2) prod[g * n + a][g2 * n + a2] = g * n + (literal ? t[a][a2] : t[a2][a]);
  return prod;
}

bool associative(const std::vector<std::vector<int>>& p) {
  int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = p[x][y], yz = p[y][z];
        int l = xy < 0 ? -1 : p[xy][z], r = yz < 0 ? -1 : p[x][yz];
        if (l != r) return false;
      }
  return true;
}

void quantum_double(Outcome& o) {
  FinGroup s3 = FinGroup::symmetric(3);
  const oracle::Table& t = s3.table();
  int n = s3.order();
  SimpSet c = circle();
  int v = c.generators(0)[0], e = c.generators(1)[0];
  CrsPi1 p = crs_pi1(c, iota1(s3));
  Algebra alg = groupoid_algebra(p.groupoid);
  auto d = double_table(t, false);
  o.expect(alg.dim == 36, "dimension 36");
  o.expect(associative(d), "D(S3) associative");
  // Arrow with target loop g and vertex value h |-> (h g h⁻¹, h⁻¹).
  std::vector<int> phi(alg.dim);
  std::set<int> image;
  for (int arr = 0; arr < p.groupoid.num_arrows(); ++arr) {
    int g = p.objects[p.groupoid.tgt(arr)][e], h = p.rep[arr][v];
    phi[arr] = oracle::conj(t, h, g) * n + oracle::inverse(t, h);
    image.insert(phi[arr]);
  }
  o.expect(static_cast<int>(image.size()) == n * n, "bijection onto D(S3)");
  int checked = 0;
  for (int x = 0; x < alg.dim; ++x)
    for (int y = 0; y < alg.dim; ++y) {
      SparseVec want;
      if (d[phi[x]][phi[y]] >= 0) want[d[phi[x]][phi[y]]] = 1;
      SparseVec got;
      for (const auto& [k, q] : alg.c[x][y]) got[phi[k]] = q;
      o.expect(got == want, "structure constants at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      ++checked;
    }
  SparseVec unit;
  for (const auto& [k, q] : alg.unit) unit[phi[k]] = q;
  SparseVec dunit;
  for (int g = 0; g < n; ++g) dunit[g * n + s3.identity()] = 1;
  o.expect(unit == dunit, "unit");
  bool literal = associative(double_table(t, true));
  o.detail << "dim 36, " << checked << " products equal exactly; literal (g,aa') rule associative: " << (literal ? "yes" : "no");
}

void state_dims(Outcome& o) {
  FinGroup s3 = FinGroup::symmetric(3), z4 = FinGroup::cyclic(4);
  int c_s3 = state_space(circle(), iota1(s3)).dim(), c_z4 = state_space(circle(), iota1(z4)).dim();
  o.expect(c_s3 == 3 && c_s3 == oracle::conjugacy_classes(s3.table()), "circle S3");
  o.expect(c_z4 == 4 && c_z4 == oracle::conjugacy_classes(z4.table()), "circle Z4");
  int t_s3 = state_space(torus(), iota1(s3)).dim();
  o.expect(t_s3 == 8 && t_s3 == oracle::commuting_pair_orbits(s3.table()), "torus S3");
  CrossedModule m = corpus::modules()[0].m;
  // ker∂ modulo the action of G; ∂E acts trivially on the kernel.
  std::vector<int> ker = oracle::kernel(raw(m));
  std::set<std::set<int>> orbits;
  for (int k : ker) {
    std::set<int> orb;
    for (int g = 0; g < m.G.order(); ++g) orb.insert(m.action[k][g]);
    orbits.insert(orb);
  }
  int sp = state_space(sphere(2), iota2(m)).dim();
  o.expect(sp == 2 && sp == static_cast<int>(orbits.size()), "sphere(2) 0:Z2->Z2");
  o.detail << "circle S3 " << c_s3 << ", circle Z4 " << c_z4 << ", torus S3 " << t_s3 << ", sphere(2) " << sp;
}

void closed_invariants(Outcome& o) {
  FinGroup s3 = FinGroup::symmetric(3);
  Scalar t = quinn_matrix(closed(torus(), "torus"), iota1(s3), 0).entries[0][0];
  Rational want = Rational(static_cast<long>(oracle::hom_z2(s3.table()))) / s3.order();
  o.expect(t.is_rational() && t.rational() == want && want == 3, "torus S3");
  CrossedModule m = corpus::modules()[0].m;
  CrossedComplex a = iota2(m);
  Scalar s = quinn_matrix(closed(sphere(2), "sphere"), a, 0).entries[0][0];
  Rational formula = Rational(static_cast<long>(oracle::kernel(raw(m)).size() * m.E.order())) / m.G.order();
  Rational groups = homotopy_content_by_groups(crs_chain_tower(sphere(2), a));
  o.expect(s.is_rational() && s.rational() == formula && formula == 2, "sphere(2) 0:Z2->Z2");
  o.expect(groups == formula, "homotopy group path");
  o.detail << "torus S3 " << t.str() << " = 18/6, sphere(2) " << s.str() << " = " << to_string(groups) << " by homotopy groups";
}

void functoriality(Outcome& o) {
  int pairs = 0, cyl = 0;
  for (auto& [name, a] : corpus::algebras()) {
    for (auto& [m, n] : composable_pairs()) {
      for (const Rational& s : {Rational(0), Rational(1)}) {
        QuinnMatrix qm = quinn_matrix(m, a, s), qn = quinn_matrix(n, a, s);
        QuinnMatrix qg = quinn_matrix(glue(m, n), a, s);
        o.expect(qg.exact(), name + " " + m.name + "∘" + n.name + " exact");
        o.expect(same_matrix(qg.entries, matmul(qm.entries, qn.entries)), name + " " + m.name + "∘" + n.name);
        ++pairs;
      }
    }
    for (const std::string& c : {"prism-point", "prism-interval", "prism-circle"}) {
      o.expect(is_identity(quinn_matrix(catalog(c), a, 0).entries), name + " " + c + " identity");
      ++cyl;
    }
  }
  o.detail << pairs << " glued products, " << cyl << " cylinders";
}

void independence(Outcome& o) {
  int n = 0;
  for (auto& [name, a] : corpus::algebras()) {
    Stratification p = catalog("prism-circle"), d = catalog("double-prism-circle");
    for (const Rational& s : {Rational(0), Rational(1, 2), Rational(1)}) {
      QuinnMatrix qp = quinn_matrix(p, a, s), qd = quinn_matrix(d, a, s);
      o.expect(same_matrix(qp.entries, qd.entries), name + " matrices");
    }
    CobordismProfunctor pp = cobordism_profunctor(p, a), pd = cobordism_profunctor(d, a);
    auto phi = profunctor_iso(pp.prof, pd.prof);
    o.expect(phi.has_value() && check_profunctor_map(pp.prof, pd.prof, *phi).ok, name + " profunctors");
    ++n;
  }
  o.detail << "prism vs double prism over the circle, " << n << " algebras, explicit isos";
}

void nerve(Outcome& o) {
  int n = 0;
  for (auto& [name, g] : corpus::groups())
    for (int k = 0; k <= 3; ++k) {
      long long c = count_colourings(standard_simplex(k), iota1(g));
      long long p = 1;
      for (int i = 0; i < k; ++i) p *= g.order();
      o.expect(c == p && c == oracle::nerve_count(g.table(), k), name + " Δ(" + std::to_string(k) + ")");
      ++n;
    }
  for (auto& [name, m] : corpus::modules()) {
    auto r = raw(m);
    long long c = count_colourings(standard_simplex(2), iota2(m));
    std::set<int> im = oracle::image(r);
    long long triples = 0;
    for (int a = 0; a < m.G.order(); ++a)
      for (int b = 0; b < m.G.order(); ++b)
        for (int cc = 0; cc < m.G.order(); ++cc) triples += im.count(m.G.mul(m.G.mul(a, b), m.G.inv(cc)));
    long long formula = triples * static_cast<long long>(oracle::kernel(r).size());
    o.expect(c == oracle::xmod_triangle_count(r) && c == formula, name + " Δ(2)");
    o.expect(count_colourings(standard_simplex(3), iota2(m)) == oracle::xmod_tetrahedron_count(r), name + " Δ(3)");
    n += 2;
  }
  o.detail << n << " nerve counts match brute force";
}

void extended(Outcome& o) {
  SimpSet c = circle(), s = sphere(2);
  int e = c.generators(1)[0], top = s.generators(2)[0];
  for (auto& [name, m] : corpus::modules()) {
    auto r = raw(m);
    CrsPi1 p = crs_pi1(c, iota2(m));
    oracle::RawGroupoid gg = oracle::xmod_loop_groupoid(r);
    o.expect(p.groupoid.num_objects() == m.G.order(), name + " object count");
    std::vector<int> objects(m.G.order(), -1);
    for (int x = 0; x < p.groupoid.num_objects(); ++x) objects[p.objects[x][e]] = x;
    o.expect(oracle::groupoid_iso(gg, p.groupoid, objects).has_value(), name + " circle groupoid");
    o.detail << name << ": " << gg.arrows() << " arrows, ";

    CrsPi1 q = crs_pi1(s, iota2(m));
    oracle::RawGroupoid kq = oracle::kernel_quotient_groupoid(r);
    std::vector<int> ker = oracle::kernel(r);
    std::vector<int> kobj(ker.size(), -1);
    for (int x = 0; x < q.groupoid.num_objects(); ++x) {
      auto it = std::find(ker.begin(), ker.end(), q.objects[x][top]);
      if (it != ker.end()) kobj[it - ker.begin()] = x;
    }
    o.expect(oracle::groupoid_iso(kq, q.groupoid, kobj).has_value(), name + " sphere groupoid");
  }
  std::string d = o.detail.str();
  o.detail.str("");
  o.detail << d << "sphere(2) groupoids ≅ ker∂⫽(G/∂E)";
}

void windows(Outcome& o) {
  int n = 0;
  for (auto& [name, a] : corpus::algebras())
    for (const std::string& c : {"prism-point", "prism-circle", "cup", "cap", "handle"}) {
      NatTransform t = vertical_identity_window(catalog(c), a);
      o.expect(check_naturality(t).ok, name + " " + c + " natural");
      if (c == "prism-point" || c == "prism-circle") o.expect(is_identity(t), name + " " + c + " identity");
      ++n;
    }
  o.detail << n << " windows natural; cylinder windows over point and circle are identities";
}

void s_parameter(Outcome& o) {
  int n = 0, half = 0;
  for (auto& [name, a] : corpus::algebras())
    for (const Stratification& m : corpus::cobordisms()) {
      QuinnMatrix q0 = quinn_matrix(m, a, 0), q1 = quinn_matrix(m, a, 1);
      o.expect(s_conjugation_check(q0, q1).ok && s_conjugation_check(q1, q0).ok, name + " " + m.name + " (0,1)");
      o.expect(s_conjugation_check(q0, q0).ok && s_conjugation_check(q1, q1).ok, name + " " + m.name + " s = t");
      n += 4;
      std::set<Rational> contents(q0.in.content.begin(), q0.in.content.end());
      contents.insert(q0.out.content.begin(), q0.out.content.end());
      if (contents.size() > 1) continue;
      QuinnMatrix qh = quinn_matrix(m, a, Rational(1, 2));
      bool exact = true;
      for (auto& row : qh.entries)
        for (auto& x : row) exact = exact && !x.is_float();
      o.expect(exact, name + " " + m.name + " s = 1/2 without float channel");
      o.expect(s_conjugation_check(qh, q0).ok && s_conjugation_check(q1, qh).ok, name + " " + m.name + " (1/2, 0/1)");
      half += 2;
    }
  o.detail << n << " integer pairs, " << half << " pairs with s = 1/2";
}

void morita(Outcome& o) {
  int tensors = 0;
  for (auto& [name, a] : corpus::algebras())
    for (auto& [m, n] : composable_pairs()) {
      if (m.space.num_generators() + n.space.num_generators() > 30) continue;
      CobordismProfunctor pm = cobordism_profunctor(m, a), pn = cobordism_profunctor(n, a);
      Bimodule bm = lin2_bimodule(pm.prof), bn = lin2_bimodule(pn.prof);
      o.expect(check_bimodule(bm).ok && check_bimodule(bn).ok, name + " bimodules");
      Tensor t = tensor_over(bm, bn);
      Composite c = compose_profunctors(pm.prof, pn.prof);
      o.expect(check_bimodule_iso(lin2_bimodule(c.prof), t.result, composition_map(c, t)).ok, name + " " + m.name + "⊗" + n.name);
      ++tensors;
    }
  for (int k = 1; k <= 4; ++k) {
    FinGroupoid i = FinGroupoid::codiscrete(k);
    o.expect(check_elementary_matrices(groupoid_algebra(i), i).ok, "I(" + std::to_string(k) + ")");
  }
  int frob = 0;
  std::vector<FinGroupoid> gs;
  for (auto& [name, g] : corpus::groups()) {
    gs.push_back(FinGroupoid::from_group(g));
    gs.push_back(action_groupoid(g, g.order(), conjugation_action(g)));
  }
  for (int k = 1; k <= 4; ++k) gs.push_back(FinGroupoid::codiscrete(k));
  for (auto& [name, a] : corpus::algebras()) gs.push_back(crs_pi1(circle(), a).groupoid);
  for (const FinGroupoid& g : gs) {
    o.expect(check_frobenius(groupoid_algebra(g), frobenius_data(g)).ok, "Frobenius");
    ++frob;
  }
  o.detail << tensors << " tensor isos, I(1..4), " << frob << " Frobenius checks";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"quantum double", quantum_double},   {"state-space dimensions", state_dims},
      {"closed invariants", closed_invariants}, {"functoriality", functoriality},
      {"stratification independence", independence}, {"nerve oracle", nerve},
      {"extended structure", extended},     {"window identities", windows},
      {"s-parameter", s_parameter},         {"Morita layer", morita},
  };
  int failed = 0, i = 0;
  for (const Criterion& c : criteria) {
    ++i;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i << ". " << c.name << " (" << o.detail.str() << ") ["
              << std::fixed << std::setprecision(2) << secs << "s]\n"
              << std::defaultfloat << std::flush;
  }
  std::cout << (criteria + 10 - criteria) - failed << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
