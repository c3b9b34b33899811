#include "quinn/tqft.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace quinn {

// ---------------------------------------------------------------- Scalar

namespace {

std::map<long, int> factor(mpz_class n) {
  std::map<long, int> out;
  if (n < 0) n = -n;
  for (long p = 2; mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw Error(ErrorKind::Precondition, "prime factor too large for the radical channel");
    ++out[n.get_si()];
  }
  return out;
}

Rational rpow(const Rational& b, long e) {
  Rational r = 1;
  Rational base = e < 0 ? Rational(1) / b : b;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

long floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

}  // namespace

void Scalar::normalise() {
  if (float_) return;
  if (coeff_ == 0) {
    rad_.clear();
    return;
  }
  for (auto it = rad_.begin(); it != rad_.end();) {
    long fl = floor_of(it->second);
    if (fl != 0) {
      coeff_ *= rpow(Rational(it->first), fl);
      it->second -= fl;
    }
    if (it->second == 0) it = rad_.erase(it);
    else ++it;
  }
}

Scalar Scalar::power(const Rational& base, const Rational& e) {
  if (base < 0) throw Error(ErrorKind::Precondition, "power of a negative base");
  if (base == 0) {
    if (e == 0) return Scalar(1);
    if (e < 0) throw Error(ErrorKind::Precondition, "negative power of zero");
    return Scalar(0);
  }
  Scalar s(1);
  for (auto [p, k] : factor(base.get_num())) s.rad_[p] += e * k;
  for (auto [p, k] : factor(base.get_den())) s.rad_[p] -= e * k;
  s.normalise();
  return s;
}

Scalar Scalar::from_double(double v) {
  Scalar s;
  s.float_ = true;
  s.value_ = v;
  return s;
}

const Rational& Scalar::rational() const {
  if (!is_rational()) throw Error(ErrorKind::Precondition, "scalar is not rational: " + str());
  return coeff_;
}

double Scalar::approx() const {
  if (float_) return value_;
  double v = coeff_.get_d();
  for (const auto& [p, e] : rad_) v *= std::pow(static_cast<double>(p), e.get_d());
  return v;
}

std::string Scalar::str() const {
  if (float_) {
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
  }
  std::string s = coeff_ == 1 && !rad_.empty() ? "" : coeff_.get_str();
  for (const auto& [p, e] : rad_) s += (s.empty() ? "" : "*") + std::to_string(p) + "^(" + e.get_str() + ")";
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (float_ || o.float_) return from_double(approx() * o.approx());
  Scalar r;
  r.coeff_ = coeff_ * o.coeff_;
  r.rad_ = rad_;
  for (const auto& [p, e] : o.rad_) r.rad_[p] += e;
  r.normalise();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error(ErrorKind::Precondition, "division by zero");
  if (float_ || o.float_) return from_double(approx() / o.approx());
  Scalar r;
  r.coeff_ = coeff_ / o.coeff_;
  r.rad_ = rad_;
  for (const auto& [p, e] : o.rad_) r.rad_[p] -= e;
  r.normalise();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (!float_ && !o.float_ && rad_ == o.rad_) {
    Scalar r = *this;
    r.coeff_ += o.coeff_;
    r.normalise();
    return r;
  }
  return from_double(approx() + o.approx());
}

bool Scalar::operator==(const Scalar& o) const {
  if (!float_ && !o.float_) return coeff_ == o.coeff_ && rad_ == o.rad_;
  double a = approx(), b = o.approx();
  return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// ---------------------------------------------------------------- Θ and χ^π

namespace {

long level_size(const CrossedComplex& a, int n) {
  if (n == 1) return a.a1().num_arrows();
  return a.size(n, 0);
}

void require_reduced(const CrossedComplex& a) {
  if (!a.reduced()) throw Error(ErrorKind::Precondition, "this formula is stated for reduced crossed complexes");
}

}  // namespace

Rational theta(const CrossedComplex& a, const std::vector<int>& k) {
  require_reduced(a);
  Rational r = 1;
  for (int kk = 1; kk <= a.truncation(); ++kk) {
    Rational prod = 1;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (int c = 0; c < k[i]; ++c) prod *= level_size(a, static_cast<int>(i) + kk);
    if (kk % 2) r /= prod;
    else r *= prod;
  }
  return r;
}

Rational theta_at(const SimpSet& x, const CrossedComplex& a, const Colouring& f, const std::vector<int>& fixed_cells) {
  std::vector<char> fixed(x.num_generators(), 0);
  for (int g : fixed_cells) fixed[g] = 1;
  Rational r = 1;
  for (int k = 1; k <= a.truncation(); ++k) {
    auto choices = homotopy_choices(x, a, f, k);
    Rational prod = 1;
    for (int c = 0; c < x.num_generators(); ++c)
      if (!fixed[c]) prod *= static_cast<long>(choices[c].size());
    if (k % 2) r /= prod;
    else r *= prod;
  }
  return r;
}

std::string colouring_label(const SimpSet& x, const CrossedComplex& a, const Colouring& f) {
  std::string s = "[";
  for (int c = 0; c < x.num_generators(); ++c) {
    if (c) s += ",";
    s += x.label(c) + "=";
    int n = x.dim(c);
    if (n == 0) s += a.a1().object_label(f[c]);
    else if (n == 1) s += a.a1().arrow_label(f[c]);
    else if (n <= a.truncation()) s += a.group(n, f[x.vertex(c, 0)]).label(f[c]);
    else s += "1";
  }
  return s + "]";
}

int StateSpace::index_of(const Colouring& f) const { return classes.class_of_colouring(f); }

StateSpace state_space(const SimpSet& x, const CrossedComplex& a) {
  StateSpace st;
  st.space = x;
  st.classes = rel_classes(x, a, {}, enumerate_colourings(x, a));
  for (int c = 0; c < st.classes.num_classes(); ++c) {
    const Colouring& f = st.classes.fillings[st.classes.rep[c]];
    st.basis.push_back(f);
    st.class_size.push_back(st.classes.size[c]);
    st.content.push_back(Rational(st.classes.size[c]) * theta_at(x, a, f));
    st.labels.push_back(colouring_label(x, a, f));
  }
  return st;
}

Rational chi_pi_component(const SimpSet& x, const CrossedComplex& a, const Colouring& f) {
  RelClasses rc = rel_classes(x, a, {}, enumerate_colourings(x, a));
  int cls = rc.class_of_colouring(f);
  return Rational(rc.size[cls]) * theta_at(x, a, f);
}

Rational chi_pi_rel_fibre(const SimpSet& x, const CrossedComplex& a, const std::vector<BoundaryCondition>& conds) {
  std::vector<int> fixed;
  for (const BoundaryCondition& b : conds) fixed.insert(fixed.end(), b.embed.begin(), b.embed.end());
  Rational total = 0;
  for (const Colouring& h : enumerate_relative(x, a, conds)) total += theta_at(x, a, h, fixed);
  return total;
}

bool QuinnMatrix::exact() const {
  for (const auto& row : entries)
    for (const Scalar& e : row)
      if (!e.is_rational()) return false;
  return true;
}

QuinnMatrix quinn_matrix(const Stratification& m, const CrossedComplex& a, const Rational& s) {
  require_reduced(a);
  require(m.validate(), ErrorKind::Boundary);
  require(a.validate());
  std::vector<int> in_embed, out_embed;
  SimpSet in_model = m.tag_model("in", &in_embed);
  SimpSet out_model = m.tag_model("out", &out_embed);
  QuinnMatrix q;
  q.s = s;
  q.in = state_space(in_model, a);
  q.out = state_space(out_model, a);
  q.fillings.assign(q.in.dim(), std::vector<long long>(q.out.dim(), 0));
  for (int i = 0; i < q.in.dim(); ++i)
    for (int j = 0; j < q.out.dim(); ++j) {
      std::vector<int> fixed(m.space.num_generators(), -1);
      bool clash = false;
      for (std::size_t t = 0; t < in_embed.size(); ++t) fixed[in_embed[t]] = q.in.basis[i][t];
      for (std::size_t t = 0; t < out_embed.size(); ++t) {
        int& v = fixed[out_embed[t]];
        clash = clash || (v >= 0 && v != q.out.basis[j][t]);
        v = q.out.basis[j][t];
      }
      if (!clash) q.fillings[i][j] = count_colourings(m.space, a, fixed);
    }
  std::vector<int> k;
  std::vector<int> boundary = in_embed;
  boundary.insert(boundary.end(), out_embed.begin(), out_embed.end());
  for (int i = 0; i <= m.space.max_dim(); ++i) k.push_back(k_count_rel(i, m.space, boundary));
  Rational theta_rel = theta(a, k);
  q.entries.assign(q.in.dim(), std::vector<Scalar>(q.out.dim()));
  for (int i = 0; i < q.in.dim(); ++i)
    for (int j = 0; j < q.out.dim(); ++j) {
      if (q.fillings[i][j] == 0) continue;
      Scalar e(Rational(static_cast<long>(q.fillings[i][j])) * theta_rel);
      q.entries[i][j] = e * Scalar::power(q.in.content[i], s) * Scalar::power(q.out.content[j], 1 - s);
    }
  return q;
}

std::vector<std::vector<Scalar>> matmul(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
  std::size_t n = a.size(), m = b.size(), p = b.empty() ? 0 : b[0].size();
  for (const auto& row : a)
    if (row.size() != m) throw Error(ErrorKind::Boundary, "matrix dimensions do not match");
  std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool is_identity(const std::vector<std::vector<Scalar>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!(m[i][j] == Scalar(i == j ? 1 : 0))) return false;
  }
  return true;
}

Report s_conjugation_check(const QuinnMatrix& ms, const QuinnMatrix& mt) {
  if (ms.rows() != mt.rows() || ms.cols() != mt.cols()) return Report::bad_table("s-conjugation: dimension mismatch");
  for (int i = 0; i < ms.rows(); ++i)
    for (int j = 0; j < ms.cols(); ++j) {
      Scalar rhs = Scalar::power(ms.in.content[i], ms.s - mt.s) * mt.entries[i][j] *
                   Scalar::power(ms.out.content[j], mt.s - ms.s);
      if (!(rhs == ms.entries[i][j])) return Report::fail("s-conjugation identity", {i, j}, ms.entries[i][j].str() + " vs " + rhs.str());
    }
  return Report::pass();
}

// ---------------------------------------------------------------- CRS chain tower

ChainTower crs_chain_tower(const SimpSet& x, const CrossedComplex& a) {
  if (a.truncation() > 2) throw Error(ErrorKind::Precondition, "crs_chain_tower: only truncation <= 2 is materialised");
  std::vector<Colouring> objects = enumerate_colourings(x, a);
  std::map<Colouring, int> obj;
  for (std::size_t i = 0; i < objects.size(); ++i) obj[objects[i]] = static_cast<int>(i);
  std::map<std::pair<int, Homotopy>, int> arrow;
  std::vector<Homotopy> hs;
  FinGroupoid::Spec spec;
  spec.objects = static_cast<int>(objects.size());
  for (int t = 0; t < spec.objects; ++t)
    for_each_homotopy(x, a, objects[t], 1, [&](const Homotopy& h) {
      arrow[{t, h}] = static_cast<int>(hs.size());
      hs.push_back(h);
      spec.src.push_back(obj.at(apply_homotopy(x, a, h, objects[t])));
      spec.tgt.push_back(t);
    });
  spec.compose = [&](int u, int v) {
    int t = spec.tgt[v];
    return arrow.at({t, compose_homotopies(x, a, hs[u], hs[v], objects[t])});
  };
  ChainTower tower;
  tower.a1 = FinGroupoid::build(spec);
  if (a.truncation() == 2) {
    ChainTower::Level L;
    for (int t = 0; t < spec.objects; ++t) {
      std::vector<int> bd;
      Homotopy id2 = identity_homotopy(x, a, objects[t], 2);
      int ident = -1;
      for_each_homotopy(x, a, objects[t], 2, [&](const Homotopy& h2) {
        if (h2 == id2) ident = static_cast<int>(bd.size());
        bd.push_back(arrow.at({t, delta2(x, a, h2, objects[t])}));
      });
      L.boundary.push_back(std::move(bd));
      L.identity.push_back(ident);
    }
    tower.levels.push_back(std::move(L));
  }
  return tower;
}

}  // namespace quinn
