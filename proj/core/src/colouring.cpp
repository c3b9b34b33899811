#include "quinn/colouring.hpp"

#include <algorithm>

namespace quinn {

HalWord hal_word(const SimpSet& x, int c) {
  const int n = x.dim(c);
  if (n < 2) throw Error(ErrorKind::Precondition, "hal_word: generator of dimension < 2");
  HalWord w;
  w.base = x.vertex(c, 0);
  w.twist_edge = x.edge01(c);
  auto f = [&](int i) { return x.face(c, i); };
  if (n == 2) {
    w.terms = {{f(2), 1, false}, {f(0), 1, false}, {f(1), -1, false}};
  } else if (n == 3) {
    w.terms = {{f(0), 1, true}, {f(2), 1, false}, {f(1), -1, false}, {f(3), -1, false}};
  } else {
    w.terms.push_back({f(0), 1, true});
    for (int j = 1; j <= n; ++j) w.terms.push_back({f(j), j % 2 ? -1 : 1, false});
  }
  return w;
}

int face_value(const SimpSet&, const Colouring& f, const SimplexRef& r) { return r.degenerate() ? -1 : f[r.core]; }

namespace {

int label_from_word(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int n, const HalWord& w, int x1) {
  const int m = n - 1;
  const int x0 = f[w.base];
  const FinGroupoid& g = a.a1();
  if (n == 2) {
    int acc = g.id(x0);
    for (const HalTerm& t : w.terms) {
      int v = face_value(x, f, t.face);
      if (v < 0) continue;
      acc = g.compose(acc, t.sign > 0 ? v : g.inv(v));
    }
    return acc;
  }
  const int e = face_value(x, f, w.twist_edge);
  int acc = a.identity(m, x0);
  for (const HalTerm& t : w.terms) {
    int v = face_value(x, f, t.face);
    if (v < 0) continue;
    if (t.twisted && e >= 0) v = a.act(m, x1, v, g.inv(e));
    if (t.sign < 0) v = a.inv(m, x0, v);
    acc = a.mul(m, x0, acc, v);
  }
  return acc;
}

}  // namespace

int boundary_label(const SimpSet& x, const CrossedComplex& a, const Colouring& f, int c) {
  const int n = x.dim(c);
  if (n - 1 > a.truncation()) return 0;
  return label_from_word(x, a, f, n, hal_word(x, c), n == 2 ? -1 : f[x.vertex(c, 1)]);
}

Report check_colouring(const SimpSet& x, const CrossedComplex& a, const Colouring& f) {
  if (static_cast<int>(f.size()) != x.num_generators()) return Report::bad_table("colouring has the wrong length");
  const FinGroupoid& g = a.a1();
  const int N = a.truncation();
  for (int c = 0; c < x.num_generators(); ++c) {
    const int n = x.dim(c);
    if (n == 0) {
      if (f[c] < 0 || f[c] >= g.num_objects()) return Report::bad_table("vertex value out of range");
      continue;
    }
    if (n == 1) {
      if (f[c] < 0 || f[c] >= g.num_arrows()) return Report::bad_table("edge value out of range");
      if (g.src(f[c]) != f[x.face(c, 1).core] || g.tgt(f[c]) != f[x.face(c, 0).core])
        return Report::fail("edge colour endpoints", {c});
      continue;
    }
    const int x0 = f[x.vertex(c, 0)];
    if (n > N) {
      if (f[c] != 0) return Report::fail("value above truncation", {c});
      if (n == N + 1 && boundary_label(x, a, f, c) != a.identity(N, x0)) return Report::fail("cell boundary not trivial above truncation", {c});
      continue;
    }
    if (f[c] < 0 || f[c] >= a.size(n, x0)) return Report::bad_table("cell value out of range");
    if (a.boundary(n, x0, f[c]) != boundary_label(x, a, f, c)) return Report::fail("homotopy addition boundary", {c});
  }
  return Report::pass();
}

namespace {

// Backtracking search over colourings. Cells are assigned in a fixed order; a constraint cell is
// checked as soon as its last proper face is assigned. In counting mode, trailing unpinned cells
// with no cofaces are not enumerated but contribute their number of candidates as a factor.
class Search {
 public:
  Search(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& fixed, bool counting)
      : x_(x), a_(a), g_(a.a1()), N_(a.truncation()), G_(x.num_generators()), fixed_(fixed) {
    if (!fixed.empty() && static_cast<int>(fixed.size()) != G_) throw Error(ErrorKind::Precondition, "pin vector has the wrong length");
    // fibre_[n][x][b]: elements of A_n(x) with boundary b.
    fibre_.resize(N_ + 1);
    for (int n = 2; n <= N_; ++n) {
      fibre_[n].resize(g_.num_objects());
      for (int ob = 0; ob < g_.num_objects(); ++ob) {
        int range = n == 2 ? g_.num_arrows() : a.size(n - 1, ob);
        fibre_[n][ob].assign(range, {});
        for (int e = 0; e < a.size(n, ob); ++e) fibre_[n][ob][a.boundary(n, ob, e)].push_back(e);
      }
    }
    plan(counting);
    hal_.resize(G_);
    second_.assign(G_, -1);
    for (int c = 0; c < G_; ++c) {
      if (x.dim(c) < 2 || x.dim(c) - 1 > N_) continue;
      hal_[c] = hal_word(x, c);
      second_[c] = x.vertex(c, 1);
    }
    objects_.resize(g_.num_objects());
    for (int i = 0; i < g_.num_objects(); ++i) objects_[i] = i;
    f_.assign(G_, 0);
  }

  void visit(const std::function<bool(const Colouring&)>& v) {
    visit_ = &v;
    rec(0);
  }

  long long count() {
    total_ = 0;
    rec(0);
    return total_;
  }

 private:
  int pinned(int c) const { return fixed_.empty() ? -1 : fixed_[c]; }

  // Without pins and outside counting mode the order is generator order, which keeps the
  // enumeration lexicographic. Otherwise pinned cells go first, then greedily whichever ready cell
  // completes the most faces of other cells.
  void plan(bool counting) {
    std::vector<std::vector<int>> proper(G_), cofaces(G_);
    for (int c = 0; c < G_; ++c) {
      for (int h : x_.closure({c}))
        if (h != c) proper[c].push_back(h);
      for (int h : proper[c]) cofaces[h].push_back(c);
    }
    order_.reserve(G_);
    if (fixed_.empty() && !counting) {
      for (int c = 0; c < G_; ++c) order_.push_back(c);
      leaves_from_ = G_;
    } else {
      std::vector<int> missing(G_);
      std::vector<char> placed(G_, 0), leaf(G_, 0);
      int leaves = 0;
      for (int c = 0; c < G_; ++c) {
        missing[c] = static_cast<int>(proper[c].size());
        leaf[c] = counting && pinned(c) < 0 && cofaces[c].empty();
        leaves += leaf[c];
      }
      auto place = [&](int c) {
        placed[c] = 1;
        order_.push_back(c);
        for (int u : cofaces[c]) --missing[u];
      };
      for (int d = 0; d <= x_.max_dim(); ++d)
        for (int c = 0; c < G_; ++c)
          if (!placed[c] && x_.dim(c) == d && pinned(c) >= 0 && missing[c] == 0) place(c);
      while (static_cast<int>(order_.size()) < G_ - leaves) {
        int best = -1, best_score = -1;
        for (int c = 0; c < G_; ++c) {
          if (placed[c] || leaf[c] || missing[c] != 0) continue;
          if (x_.dim(c) >= 2) {
            best = c;
            break;
          }
          int score = 0;
          for (int u : cofaces[c]) score += missing[u] == 1;
          if (score > best_score) best = c, best_score = score;
        }
        place(best);
      }
      leaves_from_ = static_cast<int>(order_.size());
      for (int c = 0; c < G_; ++c)
        if (leaf[c]) order_.push_back(c);
    }
    std::vector<int> position(G_);
    for (int i = 0; i < G_; ++i) position[order_[i]] = i;
    trigger_.assign(G_, {});
    for (int c = 0; c < G_; ++c) {
      int n = x_.dim(c);
      if (n < 2 || n > N_ + 1) continue;
      int t = -1;
      for (int h : proper[c]) t = std::max(t, position[h]);
      trigger_[t].push_back(c);
    }
  }

  int label(int c) const {
    const int n = x_.dim(c);
    return label_from_word(x_, a_, f_, n, hal_[c], n == 2 ? -1 : f_[second_[c]]);
  }

  bool feasible(int c) const {
    int n = x_.dim(c);
    int x0 = f_[hal_[c].base];
    int b = label(c);
    if (n == N_ + 1) return b == a_.identity(N_, x0);
    return !fibre_[n][x0][b].empty();
  }

  // Candidates for cell pos given its faces. Cells above dimension N carry 0; those at N + 1 are
  // checked by their trigger.
  const std::vector<int>& candidates(int pos, std::vector<int>& scratch) const {
    static const std::vector<int> zero{0};
    const int n = x_.dim(pos);
    if (n == 0) return objects_;
    if (n == 1) return scratch = g_.hom(f_[x_.face(pos, 1).core], f_[x_.face(pos, 0).core]);
    if (n <= N_) return fibre_[n][f_[hal_[pos].base]][label(pos)];
    return zero;
  }

  void rec(int step) {
    if (stop_) return;
    if (step == leaves_from_ && !visit_) {
      long long k = 1;
      std::vector<int> scratch;
      for (int i = step; i < G_ && k; ++i) k *= static_cast<long long>(candidates(order_[i], scratch).size());
      total_ += k;
      return;
    }
    if (step == G_) {
      if (!(*visit_)(f_)) stop_ = true;
      return;
    }
    const int pos = order_[step];
    std::vector<int> scratch;
    const std::vector<int>& cands = candidates(pos, scratch);
    const int p = pinned(pos);
    for (int v : cands) {
      if (p >= 0 && v != p) continue;
      f_[pos] = v;
      bool ok = true;
      for (int c : trigger_[step])
        if (!feasible(c)) {
          ok = false;
          break;
        }
      if (ok) rec(step + 1);
      if (stop_) return;
    }
  }

  const SimpSet& x_;
  const CrossedComplex& a_;
  const FinGroupoid& g_;
  const int N_, G_;
  const std::vector<int>& fixed_;
  std::vector<std::vector<std::vector<std::vector<int>>>> fibre_;
  std::vector<int> order_, objects_;
  std::vector<std::vector<int>> trigger_;
  std::vector<HalWord> hal_;
  std::vector<int> second_;
  int leaves_from_ = 0;
  Colouring f_;
  const std::function<bool(const Colouring&)>* visit_ = nullptr;
  bool stop_ = false;
  long long total_ = 0;
};

}  // namespace

void for_each_colouring(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& fixed,
                        const std::function<bool(const Colouring&)>& visit) {
  Search(x, a, fixed, false).visit(visit);
}

std::vector<Colouring> enumerate_colourings(const SimpSet& x, const CrossedComplex& a) {
  std::vector<Colouring> out;
  for_each_colouring(x, a, {}, [&](const Colouring& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

long long count_colourings(const SimpSet& x, const CrossedComplex& a, const std::vector<int>& fixed) {
  return Search(x, a, fixed, true).count();
}

BoundaryCondition boundary_condition(const Stratification& s, const std::string& tag, Colouring c) {
  BoundaryCondition b;
  b.model = s.tag_model(tag, &b.embed);
  b.colouring = std::move(c);
  return b;
}

std::vector<int> pin(const SimpSet& x, const std::vector<BoundaryCondition>& conds) {
  std::vector<int> fixed(x.num_generators(), -1);
  for (const BoundaryCondition& b : conds) {
    if (b.embed.size() != b.colouring.size()) throw Error(ErrorKind::Precondition, "boundary colouring has the wrong length");
    for (std::size_t j = 0; j < b.embed.size(); ++j) {
      int g = b.embed[j];
      if (fixed[g] >= 0 && fixed[g] != b.colouring[j]) throw Error(ErrorKind::Boundary, "boundary colourings disagree");
      fixed[g] = b.colouring[j];
    }
  }
  return fixed;
}

std::vector<Colouring> enumerate_relative(const SimpSet& x, const CrossedComplex& a, const std::vector<BoundaryCondition>& conds) {
  for (const BoundaryCondition& b : conds) {
    Report r = check_colouring(b.model, a, b.colouring);
    if (!r) throw Error(ErrorKind::Boundary, "invalid boundary colouring: " + r.describe());
  }
  std::vector<Colouring> out;
  for_each_colouring(x, a, pin(x, conds), [&](const Colouring& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Colouring restrict_colouring(const Colouring& f, const std::vector<int>& embed) {
  Colouring r;
  r.reserve(embed.size());
  for (int g : embed) r.push_back(f[g]);
  return r;
}

Colouring pullback_colouring(const SimpSet& x, const CrossedComplex& a, const Colouring& f,
                             const std::vector<SimplexRef>& image) {
  Colouring out;
  out.reserve(image.size());
  for (const SimplexRef& r : image) {
    if (!r.degenerate()) {
      out.push_back(f[r.core]);
      continue;
    }
    const int n = x.dim(r);
    const int base = f[x.dim(r.core) == 0 ? r.core : x.vertex(r.core, 0)];
    if (n == 1) out.push_back(a.a1().id(base));
    else out.push_back(n <= a.truncation() ? a.identity(n, base) : 0);
  }
  return out;
}

}  // namespace quinn
