#include "quinn/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

namespace quinn {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema(what + ": expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) schema(what + ": expected an array");
  std::vector<int> out;
  for (const json& v : j) out.push_back(as_int(v, what));
  return out;
}

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  schema("labels must be strings or integers");
}

std::vector<std::string> labels_of(const json& j, const std::string& what) {
  if (!j.is_array()) schema(what + ": expected an array");
  std::vector<std::string> out;
  for (const json& v : j) out.push_back(label_of(v));
  return out;
}

std::string rational_str(const Rational& q) { return to_string(q); }

json table_json(const std::vector<std::vector<int>>& t) {
  json j = json::array();
  for (const auto& row : t) j.push_back(row);
  return j;
}

std::vector<std::vector<int>> table_of(const json& j, const std::string& what) {
  if (!j.is_array()) schema(what + ": expected an array of rows");
  std::vector<std::vector<int>> t;
  for (const json& row : j) t.push_back(int_list(row, what));
  return t;
}

// Arrows, composition and labels shared by the groupoid and level-1 schemas.
FinGroupoid::Spec groupoid_spec(const json& arrows_j, const json& compose_j, int nobj) {
  FinGroupoid::Spec s;
  s.objects = nobj;
  if (!arrows_j.is_array()) schema("arrows: expected an array");
  const int m = static_cast<int>(arrows_j.size());
  s.src.assign(m, -1);
  s.tgt.assign(m, -1);
  s.arrow_labels.assign(m, "");
  std::vector<char> seen(m, 0);
  for (const json& a : arrows_j) {
    int id = as_int(field(a, "id"), "arrow id");
    if (id < 0 || id >= m || seen[id]) schema("arrow ids must be a permutation of 0..n-1");
    seen[id] = 1;
    s.src[id] = as_int(field(a, "src"), "arrow src");
    s.tgt[id] = as_int(field(a, "tgt"), "arrow tgt");
    if (s.src[id] < 0 || s.src[id] >= nobj || s.tgt[id] < 0 || s.tgt[id] >= nobj) schema("arrow endpoint out of range");
    s.arrow_labels[id] = a.contains("label") ? label_of(a.at("label")) : std::to_string(id);
  }
  auto table = std::make_shared<std::map<std::pair<int, int>, int>>();
  if (!compose_j.is_array()) schema("compose: expected an array of [a, b, a then b]");
  for (const json& t : compose_j) {
    std::vector<int> abc = int_list(t, "compose entry");
    if (abc.size() != 3) schema("compose entries have three ids");
    for (int v : abc)
      if (v < 0 || v >= m) schema("compose entry out of range");
    if (s.tgt[abc[0]] != s.src[abc[1]]) schema("compose entry for a non-composable pair");
    (*table)[{abc[0], abc[1]}] = abc[2];
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (s.tgt[a] == s.src[b] && !table->count({a, b}))
        schema("compose table lacks the pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  s.compose = [table](int a, int b) { return table->at({a, b}); };
  return s;
}

json groupoid_body(const FinGroupoid& g, json& out) {
  json arrows = json::array(), compose = json::array();
  for (int a = 0; a < g.num_arrows(); ++a)
    arrows.push_back({{"id", a}, {"src", g.src(a)}, {"tgt", g.tgt(a)}, {"label", g.arrow_label(a)}});
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int b : g.out(g.tgt(a))) compose.push_back({a, b, g.compose(a, b)});
  out["arrows"] = arrows;
  out["compose"] = compose;
  return out;
}

json object_labels(const FinGroupoid& g) {
  json o = json::array();
  for (int x = 0; x < g.num_objects(); ++x) o.push_back(g.object_label(x));
  return o;
}

int object_count(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_array()) return static_cast<int>(j.size());
  schema("objects: expected a count or a list of labels");
}

}  // namespace

std::optional<json> parse_json(const std::string& text, std::string* error) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    if (error) *error = e.what();
    return std::nullopt;
  }
}

json load_json(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) return path;
  std::ifstream in(path);
  if (!in) schema("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string err;
  auto j = parse_json(ss.str(), &err);
  if (!j) schema(path + ": " + err);
  return *j;
}

// ---------------------------------------------------------------- groups, groupoids, crossed complexes

json to_json(const FinGroup& g) { return {{"table", table_json(g.table())}, {"labels", g.labels()}}; }

FinGroup group_from_json(const json& j) {
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = labels_of(j.at("labels"), "labels");
  return FinGroup::from_table(table_of(field(j, "table"), "table"), labels);
}

json to_json(const FinGroupoid& g) {
  json out;
  out["objects"] = object_labels(g);
  groupoid_body(g, out);
  return out;
}

FinGroupoid groupoid_from_json(const json& j) {
  const json& objs = field(j, "objects");
  FinGroupoid::Spec s = groupoid_spec(field(j, "arrows"), field(j, "compose"), object_count(objs));
  if (objs.is_array()) s.object_labels = labels_of(objs, "objects");
  require(FinGroupoid::check(s));
  return FinGroupoid::build(s);
}

json to_json(const CrossedModule& m) {
  return {{"G", to_json(m.G)}, {"E", to_json(m.E)}, {"boundary", m.boundary}, {"action", table_json(m.action)}};
}

CrossedModule crossed_module_from_json(const json& j) {
  CrossedModule m;
  m.G = group_from_json(field(j, "G"));
  m.E = group_from_json(field(j, "E"));
  m.boundary = int_list(field(j, "boundary"), "boundary");
  if (static_cast<int>(m.boundary.size()) != m.E.order()) schema("boundary: one image per element of E");
  for (int b : m.boundary)
    if (b < 0 || b >= m.G.order()) schema("boundary image out of range");
  if (j.contains("action")) {
    m.action = table_of(j.at("action"), "action");
    if (static_cast<int>(m.action.size()) != m.E.order()) schema("action: one row per element of E");
    for (const auto& row : m.action) {
      if (static_cast<int>(row.size()) != m.G.order()) schema("action: one column per element of G");
      for (int v : row)
        if (v < 0 || v >= m.E.order()) schema("action value out of range");
    }
  } else {
    m = CrossedModule::trivial_action(m.G, m.E, m.boundary);
  }
  require(m.validate());
  return m;
}

json to_json(const CrossedComplex& a) {
  const FinGroupoid& g = a.a1();
  json out;
  out["objects"] = object_labels(g);
  json l1;
  groupoid_body(g, l1);
  json inv = json::array();
  for (int e = 0; e < g.num_arrows(); ++e) inv.push_back(g.inv(e));
  l1["inv"] = inv;
  out["level1"] = l1;
  json levels = json::array();
  for (int n = 2; n <= a.truncation(); ++n) {
    json L;
    L["n"] = n;
    json groups = json::object(), boundary = json::array(), action = json::array();
    for (int x = 0; x < g.num_objects(); ++x) {
      const FinGroup& grp = a.group(n, x);
      groups[std::to_string(x)] = {{"elements", grp.labels()}, {"table", table_json(grp.table())}};
      for (int e = 0; e < grp.order(); ++e) {
        if (a.reduced()) boundary.push_back({e, a.boundary(n, x, e)});
        else boundary.push_back({x, e, a.boundary(n, x, e)});
        for (int arrow : g.out(x)) action.push_back({e, arrow, a.act(n, x, e, arrow)});
      }
    }
    L["groups"] = groups;
    L["boundary"] = boundary;
    L["action"] = action;
    levels.push_back(L);
  }
  out["levels"] = levels;
  out["truncation"] = a.truncation();
  return out;
}

CrossedComplex crossed_complex_from_json(const json& j) {
  const json& objs = field(j, "objects");
  const int nobj = object_count(objs);
  const json& l1 = field(j, "level1");
  FinGroupoid::Spec s = groupoid_spec(field(l1, "arrows"), field(l1, "compose"), nobj);
  if (objs.is_array()) s.object_labels = labels_of(objs, "objects");
  require(FinGroupoid::check(s));
  FinGroupoid a1 = FinGroupoid::build(s);
  if (l1.contains("inv")) {
    std::vector<int> inv = int_list(l1.at("inv"), "inv");
    if (static_cast<int>(inv.size()) != a1.num_arrows()) schema("inv: one entry per arrow");
    for (int e = 0; e < a1.num_arrows(); ++e)
      if (inv[e] != a1.inv(e)) throw Error(ErrorKind::Axiom, "inv table disagrees with the composition");
  }
  std::vector<CrossedLevel> levels;
  const json empty = json::array();
  const json& levels_j = j.contains("levels") ? j.at("levels") : empty;
  if (!levels_j.is_array()) schema("levels: expected an array");
  for (const json& lj : levels_j) {
    const int n = as_int(field(lj, "n"), "level n");
    if (n != static_cast<int>(levels.size()) + 2) schema("levels must be listed as n = 2, 3, ...");
    CrossedLevel L;
    const json& groups = field(lj, "groups");
    for (int x = 0; x < nobj; ++x) {
      std::string key = std::to_string(x);
      if (!groups.contains(key)) schema("level " + std::to_string(n) + " lacks the group at object " + key);
      const json& gj = groups.at(key);
      std::vector<std::string> labels;
      if (gj.contains("elements")) labels = labels_of(gj.at("elements"), "elements");
      L.groups.push_back(FinGroup::from_table(table_of(field(gj, "table"), "table"), labels));
    }
    L.boundary.resize(nobj);
    for (int x = 0; x < nobj; ++x) L.boundary[x].assign(L.groups[x].order(), -1);
    for (const json& bj : field(lj, "boundary")) {
      std::vector<int> t = int_list(bj, "boundary entry");
      if (t.size() == 2 && nobj == 1) t.insert(t.begin(), 0);
      if (t.size() != 3) schema("boundary entries are [x, e, image] ([e, image] for one object)");
      if (t[0] < 0 || t[0] >= nobj || t[1] < 0 || t[1] >= L.groups[t[0]].order()) schema("boundary entry out of range");
      int range = n == 2 ? a1.num_arrows() : levels.back().groups[t[0]].order();
      if (t[2] < 0 || t[2] >= range) schema("boundary image out of range");
      L.boundary[t[0]][t[1]] = t[2];
    }
    for (int x = 0; x < nobj; ++x)
      for (int e = 0; e < L.groups[x].order(); ++e)
        if (L.boundary[x][e] < 0) schema("boundary table is incomplete");
    L.action.resize(nobj);
    for (int x = 0; x < nobj; ++x)
      L.action[x].assign(L.groups[x].order(), std::vector<int>(a1.out(x).size(), -1));
    for (const json& aj : field(lj, "action")) {
      std::vector<int> t = int_list(aj, "action entry");
      if (t.size() != 3 || t[1] < 0 || t[1] >= a1.num_arrows()) schema("action entries are [e, arrow, e ◁ arrow]");
      int x = a1.src(t[1]), y = a1.tgt(t[1]);
      if (t[0] < 0 || t[0] >= L.groups[x].order() || t[2] < 0 || t[2] >= L.groups[y].order()) schema("action entry out of range");
      const auto& out = a1.out(x);
      int k = static_cast<int>(std::find(out.begin(), out.end(), t[1]) - out.begin());
      L.action[x][t[0]][k] = t[2];
    }
    for (const auto& ax : L.action)
      for (const auto& row : ax)
        for (int v : row)
          if (v < 0) schema("action table is incomplete");
    levels.push_back(std::move(L));
  }
  if (j.contains("truncation") && as_int(j.at("truncation"), "truncation") != 1 + static_cast<int>(levels.size()))
    schema("truncation does not match the number of levels");
  CrossedComplex a(std::move(a1), std::move(levels));
  require(a.validate());
  return a;
}

std::vector<std::string> builtin_algebra_names() {
  return {"Z<n>", "S<n>", "I<k>", "zero-Z2-Z2", "id-Z2", "zero-Z2-Z4"};
}

namespace {

bool parse_indexed(const std::string& name, char prefix, int& n) {
  if (name.size() < 2 || name[0] != prefix) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  n = std::stoi(name.substr(1));
  return n >= 1 && n <= 64;
}

std::string strip_builtin(const json& j) {
  if (!j.is_string()) return {};
  std::string s = j.get<std::string>();
  if (s.rfind("builtin:", 0) != 0) schema("string inputs must be builtin:<name>");
  return s.substr(8);
}

}  // namespace

CrossedComplex builtin_algebra(const std::string& name) {
  int n = 0;
  if (parse_indexed(name, 'Z', n)) return iota1(FinGroup::cyclic(n));
  if (parse_indexed(name, 'S', n) && n <= 5) return iota1(FinGroup::symmetric(n));
  if (parse_indexed(name, 'I', n)) return iota1(FinGroupoid::codiscrete(n));
  FinGroup z2 = FinGroup::cyclic(2);
  if (name == "zero-Z2-Z2") return iota2(CrossedModule::trivial_action(z2, z2, {0, 0}));
  if (name == "id-Z2") return iota2(CrossedModule::trivial_action(z2, z2, {0, 1}));
  if (name == "zero-Z2-Z4") return iota2(CrossedModule::trivial_action(FinGroup::cyclic(4), z2, {0, 0}));
  schema("unknown builtin algebra '" + name + "'");
}

CrossedComplex algebra_from_json(const json& j) {
  if (j.is_string()) return builtin_algebra(strip_builtin(j));
  if (!j.is_object()) schema("algebra input must be an object");
  if (j.contains("level1")) return crossed_complex_from_json(j);
  if (j.contains("G") && j.contains("E")) return iota2(crossed_module_from_json(j));
  if (j.contains("table")) return iota1(group_from_json(j));
  if (j.contains("arrows")) return iota1(groupoid_from_json(j));
  schema("unrecognised algebra input (expected a crossed complex, crossed module, group or groupoid)");
}

FinGroup group_input(const json& j) {
  if (j.is_string()) {
    std::string name = strip_builtin(j);
    int n = 0;
    if (parse_indexed(name, 'Z', n)) return FinGroup::cyclic(n);
    if (parse_indexed(name, 'S', n) && n <= 5) return FinGroup::symmetric(n);
    schema("builtin '" + name + "' is not a group");
  }
  return group_from_json(j);
}

FinGroupoid groupoid_input(const json& j) {
  if (j.is_string()) {
    std::string name = strip_builtin(j);
    int n = 0;
    if (parse_indexed(name, 'I', n)) return FinGroupoid::codiscrete(n);
    return FinGroupoid::from_group(group_input(j));
  }
  if (j.contains("arrows")) return groupoid_from_json(j);
  if (j.contains("level1")) return crossed_complex_from_json(j).a1();
  return FinGroupoid::from_group(group_from_json(j));
}

// ---------------------------------------------------------------- simplicial sets

json to_json(const SimpSet& x) {
  json gens = json::array(), faces = json::array();
  for (int g = 0; g < x.num_generators(); ++g) {
    gens.push_back({{"id", g}, {"dim", x.dim(g)}, {"label", x.label(g)}});
    for (int i = 0; i < static_cast<int>(x.faces(g).size()); ++i)
      faces.push_back({{"of", g}, {"i", i}, {"core", x.face(g, i).core}, {"deg", x.face(g, i).deg}});
  }
  return {{"generators", gens}, {"faces", faces}};
}

json to_json(const Stratification& s) {
  json j;
  j["name"] = s.name;
  j["role"] = s.role;
  json body = to_json(s.space);
  j["generators"] = body["generators"];
  j["faces"] = body["faces"];
  json tags = json::object();
  for (const auto& [t, ids] : s.tags) tags[t] = ids;
  j["tags"] = tags;
  return j;
}

Stratification stratification_from_json(const json& j) {
  if (j.is_string()) {
    std::string name = strip_builtin(j);
    auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) schema("unknown builtin space '" + name + "'");
    return catalog(name);
  }
  const json& gens = field(j, "generators");
  if (!gens.is_array()) schema("generators: expected an array");
  struct Gen {
    int id, dim;
    std::string label;
  };
  std::vector<Gen> list;
  std::map<int, int> pos;
  for (const json& g : gens) {
    Gen e{as_int(field(g, "id"), "generator id"), as_int(field(g, "dim"), "generator dim"), ""};
    if (e.dim < 0) schema("generator dimension must be >= 0");
    e.label = g.contains("label") ? label_of(g.at("label")) : std::to_string(e.id);
    if (!pos.emplace(e.id, static_cast<int>(list.size())).second) schema("duplicate generator id " + std::to_string(e.id));
    list.push_back(e);
  }
  std::vector<std::vector<std::optional<SimplexRef>>> faces(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) faces[k].assign(list[k].dim == 0 ? 0 : list[k].dim + 1, std::nullopt);
  const json empty = json::array();
  for (const json& f : j.contains("faces") ? j.at("faces") : empty) {
    int of = as_int(field(f, "of"), "face of");
    if (!pos.count(of)) schema("face of an unknown generator " + std::to_string(of));
    int k = pos[of];
    int i = as_int(field(f, "i"), "face index");
    if (i < 0 || i >= static_cast<int>(faces[k].size())) schema("face index out of range");
    if (faces[k][i]) schema("face given twice");
    int core = as_int(field(f, "core"), "face core");
    if (!pos.count(core)) schema("face refers to an unknown generator " + std::to_string(core));
    std::vector<int> deg = f.contains("deg") ? int_list(f.at("deg"), "deg") : std::vector<int>{};
    faces[k][i] = SimplexRef{core, deg};
  }
  std::vector<int> order(list.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return list[a].dim < list[b].dim; });
  SimpSet::Builder b;
  std::map<int, int> declared;  // json id -> builder index
  for (int k : order) {
    std::vector<SimplexRef> fs;
    for (std::size_t i = 0; i < faces[k].size(); ++i) {
      if (!faces[k][i]) schema("generator " + std::to_string(list[k].id) + " lacks face " + std::to_string(i));
      SimplexRef r = *faces[k][i];
      auto it = declared.find(r.core);
      if (it == declared.end()) schema("face of generator " + std::to_string(list[k].id) + " has too high a dimension");
      r.core = it->second;
      fs.push_back(r);
    }
    declared[list[k].id] = b.add(list[k].dim, std::move(fs), list[k].label);
  }
  require(b.check(), ErrorKind::Schema);
  std::vector<int> remap;
  Stratification s;
  s.space = b.build(&remap);
  require(s.space.validate(), ErrorKind::Schema);
  if (j.contains("tags")) {
    const json& tags = j.at("tags");
    if (!tags.is_object()) schema("tags: expected an object");
    for (const auto& [t, ids] : tags.items()) {
      std::vector<int> mapped;
      for (int id : int_list(ids, "tag " + t)) {
        if (!declared.count(id)) schema("tag " + t + " refers to an unknown generator");
        mapped.push_back(remap[declared[id]]);
      }
      s.tags[t] = mapped;
    }
  }
  for (const char* t : {"in", "out"})
    if (!s.tags.count(t)) s.tags[t] = {};
  s.name = j.contains("name") ? label_of(j.at("name")) : "";
  bool cob = j.contains("role") ? label_of(j.at("role")) == "cobordism" : !s.tags["in"].empty() || !s.tags["out"].empty();
  s.role = j.contains("role") ? label_of(j.at("role")) : (cob ? "cobordism" : "manifold");
  require(s.validate(), ErrorKind::Boundary);
  return s;
}

// ---------------------------------------------------------------- colourings and homotopies

json colouring_to_json(const SimpSet& x, const Colouring& f) {
  json v = json::object(), levels = json::object();
  for (int g = 0; g < x.num_generators(); ++g) {
    if (x.dim(g) == 0) v[std::to_string(g)] = f[g];
    else levels[std::to_string(x.dim(g))][std::to_string(g)] = f[g];
  }
  return {{"vertices", v}, {"levels", levels}};
}

Colouring colouring_from_json(const SimpSet& x, const json& j) {
  Colouring f(x.num_generators(), -1);
  for (const auto& [k, v] : field(j, "vertices").items()) {
    int g = std::stoi(k);
    if (g < 0 || g >= x.num_generators() || x.dim(g) != 0) schema("colouring: vertex key " + k + " is not a vertex");
    f[g] = as_int(v, "vertex value");
  }
  if (j.contains("levels"))
    for (const auto& [n, vals] : j.at("levels").items())
      for (const auto& [k, v] : vals.items()) {
        int g = std::stoi(k);
        if (g < 0 || g >= x.num_generators() || x.dim(g) != std::stoi(n)) schema("colouring: key " + k + " at level " + n);
        f[g] = as_int(v, "value");
      }
  for (int g = 0; g < x.num_generators(); ++g)
    if (f[g] < 0) {
      if (x.dim(g) >= 2) f[g] = 0;
      else schema("colouring lacks generator " + std::to_string(g));
    }
  return f;
}

json homotopy_to_json(const SimpSet& x, const Homotopy& h, int k, int target) {
  json values = json::object();
  for (int g = 0; g < x.num_generators(); ++g) values[std::to_string(x.dim(g))][std::to_string(g)] = h[g];
  return {{"k", k}, {"target", target}, {"values", values}};
}

// ---------------------------------------------------------------- profunctors, matrices, algebras

json to_json(const Profunctor& p) {
  json j;
  j["left"] = to_json(p.left);
  j["right"] = to_json(p.right);
  json basis = json::object();
  for (int i = 0; i < p.size(); ++i) basis["(" + std::to_string(p.x[i]) + "," + std::to_string(p.y[i]) + ")"].push_back(i);
  j["basis"] = basis;
  j["labels"] = p.labels;
  if (!p.class_size.empty()) j["classSize"] = p.class_size;
  json la = json::array(), ra = json::array();
  for (int a = 0; a < p.left.num_arrows(); ++a)
    for (int i = 0; i < p.size(); ++i)
      if (p.left_act[a][i] >= 0) la.push_back({a, i, p.left_act[a][i]});
  for (int i = 0; i < p.size(); ++i)
    for (int b = 0; b < p.right.num_arrows(); ++b)
      if (p.right_act[i][b] >= 0) ra.push_back({i, b, p.right_act[i][b]});
  j["leftAct"] = la;
  j["rightAct"] = ra;
  return j;
}

json to_json(const NatTransform& t) {
  json blocks = json::array();
  std::map<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>> fibres;
  for (int i = 0; i < t.source.size(); ++i) fibres[{t.source.x[i], t.source.y[i]}].first.push_back(i);
  for (int j = 0; j < t.target.size(); ++j) fibres[{t.target.x[j], t.target.y[j]}].second.push_back(j);
  for (const auto& [xy, rc] : fibres) {
    json m = json::array();
    for (int i : rc.first) {
      json row = json::array();
      for (int j : rc.second) row.push_back(rational_str(t.m[i][j]));
      m.push_back(row);
    }
    blocks.push_back({{"pair", {xy.first, xy.second}}, {"rows", rc.first}, {"cols", rc.second}, {"matrix", m}});
  }
  return {{"sourceLabels", t.source.labels}, {"targetLabels", t.target.labels}, {"blocks", blocks},
          {"identity", is_identity(t)}, {"natural", static_cast<bool>(check_naturality(t))}};
}

json to_json(const QuinnMatrix& q) {
  json entries = json::array(), approx = json::array(), fill = json::array();
  bool flo = false;
  for (int i = 0; i < q.rows(); ++i) {
    json row = json::array(), arow = json::array();
    for (int j = 0; j < q.cols(); ++j) {
      row.push_back(q.entries[i][j].str());
      arow.push_back(q.entries[i][j].approx());
      flo = flo || q.entries[i][j].is_float();
    }
    entries.push_back(row);
    approx.push_back(arow);
    fill.push_back(q.fillings[i]);
  }
  auto contents = [](const StateSpace& s) {
    json c = json::array();
    for (const Rational& r : s.content) c.push_back(rational_str(r));
    return c;
  };
  return {{"s", rational_str(q.s)}, {"rows", q.in.labels}, {"cols", q.out.labels}, {"entries", entries},
          {"approx", approx}, {"fillings", fill}, {"rowContent", contents(q.in)}, {"colContent", contents(q.out)},
          {"exact", q.exact()}, {"floatChannel", flo}};
}

std::string to_csv(const QuinnMatrix& q) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::string s = "label";
  for (const std::string& l : q.out.labels) s += "," + quote(l);
  s += "\n";
  for (int i = 0; i < q.rows(); ++i) {
    s += quote(q.in.labels[i]);
    for (int j = 0; j < q.cols(); ++j) s += "," + (q.entries[i][j].is_float() ? "~" : std::string()) + q.entries[i][j].str();
    s += "\n";
  }
  return s;
}

json to_json(const Algebra& a) {
  json unit = json::array(), c = json::array();
  for (const auto& [k, v] : a.unit) unit.push_back({k, rational_str(v)});
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < a.dim; ++y)
      for (const auto& [d, v] : a.c[x][y]) c.push_back({x, y, d, rational_str(v)});
  return {{"dim", a.dim}, {"labels", a.labels}, {"unit", unit}, {"constants", c}};
}

json to_json(const StateSpace& s) {
  json basis = json::array();
  for (int i = 0; i < s.dim(); ++i)
    basis.push_back({{"label", s.labels[i]}, {"colouring", colouring_to_json(s.space, s.basis[i])},
                     {"classSize", s.class_size[i]}, {"content", rational_str(s.content[i])}});
  return {{"dim", s.dim()}, {"basis", basis}};
}

}  // namespace quinn
