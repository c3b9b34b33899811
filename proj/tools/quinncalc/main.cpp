// quinncalc: batch front end for the finite crossed-complex TQFT library.
#include "quinn/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>

using namespace quinn;

namespace {

struct RunConfig {
  std::string format;
  std::string s = "0";
  bool exact_only = false;
  int threads = 1;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema: return 2;
    case ErrorKind::Axiom:
    case ErrorKind::Precondition: return 3;
    case ErrorKind::Boundary: return 4;
  }
  return 1;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Axiom: return "axiom";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Boundary: return "boundary";
  }
  return "error";
}

// "1/2", "-3", "0.25" or "1e-1", all read exactly.
Rational parse_rational(const std::string& text) {
  try {
    if (text.find_first_of(".eE") == std::string::npos) {
      Rational q;
      if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0) throw std::invalid_argument("rational");
      q.canonicalize();
      return q;
    }
    std::string mant = text, exp_part;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
      mant = text.substr(0, e);
      exp_part = text.substr(e + 1);
    }
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg || (!mant.empty() && mant[0] == '+')) mant = mant.substr(1);
    auto dot = mant.find('.');
    std::string digits = mant, frac;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot);
      frac = mant.substr(dot + 1);
    }
    std::string all = digits + frac;
    if (all.empty() || all.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("digits");
    Rational q{mpz_class(all)};
    long shift = -static_cast<long>(frac.size()) + (exp_part.empty() ? 0 : std::stol(exp_part));
    mpz_class ten = 10, p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0) q /= p;
    else q *= p;
    return neg ? Rational(-q) : q;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Schema, "--s: not a number: " + text);
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_json(const RunConfig& c, const std::string& cmd) {
  if (c.format != "json") throw Error(ErrorKind::Schema, cmd + " only writes JSON");
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

Stratification load_space(const std::string& path) { return stratification_from_json(load_json(path)); }
CrossedComplex load_algebra(const std::string& path) { return algebra_from_json(load_json(path)); }

int run_validate(const RunConfig& c, const std::string& input) {
  require_json(c, "validate");
  json j = load_json(input);
  json out;
  bool is_space = j.is_object() && j.contains("generators");
  if (j.is_string()) {
    std::string n = j.get<std::string>();
    auto names = catalog_names();
    is_space = n.rfind("builtin:", 0) == 0 && std::find(names.begin(), names.end(), n.substr(8)) != names.end();
  }
  if (is_space) {
    Stratification s = stratification_from_json(j);
    out = {{"valid", true}, {"kind", "stratification"}, {"generators", s.space.num_generators()},
           {"dim", s.space.max_dim()}, {"euler", s.space.euler_characteristic()}};
  } else {
    CrossedComplex a = algebra_from_json(j);
    out = {{"valid", true}, {"kind", "crossed-complex"}, {"objects", a.num_objects()}, {"arrows", a.a1().num_arrows()},
           {"truncation", a.truncation()}, {"reduced", a.reduced()}};
  }
  emit(out);
  return 0;
}

int run_catalog(const RunConfig& c, const std::string& name) {
  require_json(c, "catalog");
  if (!name.empty()) {
    emit(to_json(stratification_from_json(json("builtin:" + name))));
    return 0;
  }
  json out = json::object();
  for (const std::string& n : catalog_names()) out[n] = to_json(catalog(n));
  emit(out);
  return 0;
}

int run_colour_count(const RunConfig& c, const std::string& space, const std::string& alg) {
  Stratification s = load_space(space);
  CrossedComplex a = load_algebra(alg);
  long long n = count_colourings(s.space, a);
  if (c.format == "csv") std::cout << "count\n" << n << "\n";
  else emit({{"count", n}});
  return 0;
}

int run_colour_list(const RunConfig& c, const std::string& space, const std::string& alg, long limit) {
  require_json(c, "colour-list");
  Stratification s = load_space(space);
  CrossedComplex a = load_algebra(alg);
  json list = json::array();
  long long total = 0;
  for_each_colouring(s.space, a, {}, [&](const Colouring& f) {
    ++total;
    if (limit < 0 || static_cast<long>(list.size()) < limit) list.push_back(colouring_to_json(s.space, f));
    return true;
  });
  emit({{"count", total}, {"colourings", list}});
  return 0;
}

int run_state_space(const RunConfig& c, const std::string& space, const std::string& alg) {
  Stratification s = load_space(space);
  CrossedComplex a = load_algebra(alg);
  StateSpace st = state_space(s.space, a);
  if (c.format == "csv") {
    std::cout << "label,class_size,content\n";
    for (int i = 0; i < st.dim(); ++i) std::cout << csv_quote(st.labels[i]) << "," << st.class_size[i] << "," << to_string(st.content[i]) << "\n";
  } else {
    emit(to_json(st));
  }
  return 0;
}

int run_quinn_matrix(const RunConfig& c, const std::string& cob, const std::string& alg) {
  Stratification m = load_space(cob);
  CrossedComplex a = load_algebra(alg);
  QuinnMatrix q = quinn_matrix(m, a, parse_rational(c.s));
  if (c.exact_only && !q.exact())
    throw Error(ErrorKind::Precondition, "--exact-only: entries at s = " + c.s + " are not rational");
  bool floats = false;
  for (const auto& row : q.entries)
    for (const Scalar& e : row) floats = floats || e.is_float();
  if (floats) std::cerr << "note: float channel in use (relative tolerance 1e-12)\n";
  if (c.format == "csv") std::cout << to_csv(q);
  else emit(to_json(q));
  return 0;
}

int run_ext_groupoid(const RunConfig& c, const std::string& space, const std::string& alg) {
  require_json(c, "ext-groupoid");
  Stratification s = load_space(space);
  CrossedComplex a = load_algebra(alg);
  CrsPi1 p = crs_pi1(s.space, a);
  json j = to_json(p.groupoid);
  json objs = json::array(), labels = json::array();
  for (const Colouring& f : p.objects) {
    objs.push_back(colouring_to_json(s.space, f));
    labels.push_back(colouring_label(s.space, a, f));
  }
  j["objects"] = labels;
  j["colourings"] = objs;
  json reps = json::array();
  for (int e = 0; e < p.groupoid.num_arrows(); ++e) reps.push_back(homotopy_to_json(s.space, p.rep[e], 1, p.groupoid.tgt(e)));
  j["homotopies"] = reps;
  j["components"] = p.groupoid.num_components();
  emit(j);
  return 0;
}

int run_profunctor(const RunConfig& c, const std::string& cob, const std::string& alg) {
  require_json(c, "profunctor");
  Stratification m = load_space(cob);
  CrossedComplex a = load_algebra(alg);
  CobordismProfunctor p = cobordism_profunctor(m, a);
  require(check_profunctor(p.prof));
  json j = to_json(p.prof);
  auto relabel = [&](const char* side, const char* tag, const CrsPi1& pi) {
    SimpSet model = m.tag_model(tag);
    json labels = json::array();
    for (const Colouring& f : pi.objects) labels.push_back(colouring_label(model, a, f));
    j[side]["objects"] = labels;
  };
  relabel("left", "in", p.in);
  relabel("right", "out", p.out);
  emit(j);
  return 0;
}

int run_nat_transform(const RunConfig& c, const std::string& cob, const std::string& window, const std::string& top,
                      const std::string& bottom, const std::string& alg) {
  require_json(c, "nat-transform");
  CrossedComplex a = load_algebra(alg);
  NatTransform t;
  if (!cob.empty()) {
    t = vertical_identity_window(load_space(cob), a);
  } else {
    if (top.empty() || bottom.empty()) throw Error(ErrorKind::Schema, "nat-transform needs --cobordism, or --top and --bottom");
    Stratification ts = load_space(top), bs = load_space(bottom);
    Stratification w = window.empty() ? window_support(ts, bs) : load_space(window);
    t = window_nat_transform(w, ts, bs, a);
  }
  require(check_naturality(t));
  emit(to_json(t));
  return 0;
}

int run_algebra(const RunConfig& c, const std::string& from) {
  Algebra alg = groupoid_algebra(groupoid_input(load_json(from)));
  require(check_algebra(alg));
  if (c.format == "csv") {
    std::cout << "a,b,d,coefficient\n";
    for (int x = 0; x < alg.dim; ++x)
      for (int y = 0; y < alg.dim; ++y)
        for (const auto& [d, v] : alg.c[x][y]) std::cout << x << "," << y << "," << d << "," << to_string(v) << "\n";
  } else {
    emit(to_json(alg));
  }
  return 0;
}

int run_double(const RunConfig& c, const std::string& group) {
  FinGroup g = group_input(load_json(group));
  DoubleOracle o = quantum_double_oracle(g);
  bool found = static_cast<bool>(o.explicit_iso);
  if (c.format == "json") {
    emit({{"iso", found ? "found" : "not found"}, {"dim", o.dg.dim}, {"explicit", o.explicit_iso.describe()},
          {"search", o.searched.has_value() ? "found" : "not found"}, {"literalRuleAssociative", static_cast<bool>(o.literal_assoc)},
          {"bijection", o.bijection}});
  } else {
    std::cout << "iso: " << (found ? "found" : "not found") << ", dim " << o.dg.dim << "\n";
  }
  return found ? 0 : 3;
}

int run_chi_pi(const RunConfig& c, const std::string& alg, const std::string& space) {
  CrossedComplex a = load_algebra(alg);
  if (space.empty()) {
    ChiPi x = chi_pi(a);
    if (c.format == "csv") std::cout << "by_theta,by_groups\n" << to_string(x.by_theta) << "," << to_string(x.by_groups) << "\n";
    else emit({{"byTheta", to_string(x.by_theta)}, {"byGroups", to_string(x.by_groups)}});
    return 0;
  }
  Stratification s = load_space(space);
  StateSpace st = state_space(s.space, a);
  Rational total = 0;
  for (const Rational& r : st.content) total += r;
  if (c.format == "csv") {
    std::cout << "label,chi_pi\n";
    for (int i = 0; i < st.dim(); ++i) std::cout << csv_quote(st.labels[i]) << "," << to_string(st.content[i]) << "\n";
  } else {
    json comps = json::array();
    for (int i = 0; i < st.dim(); ++i) comps.push_back({{"label", st.labels[i]}, {"chiPi", to_string(st.content[i])}});
    json out = {{"components", comps}, {"total", to_string(total)}};
    if (a.truncation() <= 2) out["byGroups"] = to_string(homotopy_content_by_groups(crs_chain_tower(s.space, a)));
    emit(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite total homotopy TQFT calculator"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* t = std::getenv("QUINNCALC_THREADS")) cfg.threads = std::max(1, std::atoi(t));

  std::string input, space, algebra, cobordism, window, top, bottom, name, from, group;
  long limit = -1;

  auto* validate = app.add_subcommand("validate", "Check an algebra or space file");
  validate->add_option("input", input, "JSON file or builtin:<name>")->required();
  auto* cat = app.add_subcommand("catalog", "Emit the built-in stratifications");
  cat->add_option("--name", name, "Emit only this entry");
  auto* ccount = app.add_subcommand("colour-count", "Count colourings");
  auto* clist = app.add_subcommand("colour-list", "List colourings");
  auto* state = app.add_subcommand("state-space", "Homotopy classes of colourings");
  auto* ext = app.add_subcommand("ext-groupoid", "π1 of the mapping crossed complex");
  auto* chi = app.add_subcommand("chi-pi", "Homotopy content");
  for (auto* sc : {ccount, clist, state, ext}) {
    sc->add_option("--space", space, "Space (simpset JSON or builtin:<name>)")->required();
    sc->add_option("--algebra", algebra, "Crossed complex, crossed module, group or groupoid")->required();
  }
  clist->add_option("--limit", limit, "List at most this many");
  chi->add_option("--algebra", algebra, "Crossed complex")->required();
  chi->add_option("--space", space, "Per-component values over this space");
  auto* qm = app.add_subcommand("quinn-matrix", "Matrix of a cobordism");
  auto* prof = app.add_subcommand("profunctor", "Profunctor of a cobordism");
  for (auto* sc : {qm, prof}) {
    sc->add_option("--cobordism", cobordism, "Cobordism with in/out tags")->required();
    sc->add_option("--algebra", algebra, "Reduced crossed complex")->required();
  }
  qm->add_option("--s", cfg.s, "Normalisation parameter (rational)");
  qm->add_flag("--exact-only", cfg.exact_only, "Fail unless every entry is rational");
  auto* nat = app.add_subcommand("nat-transform", "Matrices of a window");
  nat->add_option("--cobordism", cobordism, "Vertical identity window over this cobordism");
  nat->add_option("--window", window, "Window support with frame tags");
  nat->add_option("--top", top, "Top cobordism");
  nat->add_option("--bottom", bottom, "Bottom cobordism");
  nat->add_option("--algebra", algebra, "Reduced crossed complex")->required();
  auto* alg = app.add_subcommand("algebra", "Groupoid algebra structure constants");
  alg->add_option("--from", from, "Groupoid, group or builtin:<name>")->required();
  auto* dbl = app.add_subcommand("double", "Quantum double oracle");
  dbl->add_option("--group", group, "Group or builtin:<name>")->required();
  for (auto* sc : app.get_subcommands({}))
    sc->add_option("--format", cfg.format, "Output format (json or csv)")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (cfg.format.empty()) cfg.format = qm->parsed() ? "csv" : dbl->parsed() ? "text" : "json";

  try {
    if (validate->parsed()) return run_validate(cfg, input);
    if (cat->parsed()) return run_catalog(cfg, name);
    if (ccount->parsed()) return run_colour_count(cfg, space, algebra);
    if (clist->parsed()) return run_colour_list(cfg, space, algebra, limit);
    if (state->parsed()) return run_state_space(cfg, space, algebra);
    if (qm->parsed()) return run_quinn_matrix(cfg, cobordism, algebra);
    if (ext->parsed()) return run_ext_groupoid(cfg, space, algebra);
    if (prof->parsed()) return run_profunctor(cfg, cobordism, algebra);
    if (nat->parsed()) return run_nat_transform(cfg, cobordism, window, top, bottom, algebra);
    if (alg->parsed()) return run_algebra(cfg, from);
    if (dbl->parsed()) return run_double(cfg, group);
    if (chi->parsed()) return run_chi_pi(cfg, algebra, space);
  } catch (const Error& e) {
    std::cerr << json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
