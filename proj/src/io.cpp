#include "segal/io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace segal {

namespace {

std::string at(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

void keys(const json& j, const std::string& where, const std::set<std::string>& required,
          const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  for (auto& [k, v] : j.items())
    if (!required.count(k) && !optional.count(k)) throw InputError(at(where, k), "unknown field");
  for (auto& k : required)
    if (!j.contains(k)) throw InputError(at(where, k), "missing field");
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected a string");
  return j.get<std::string>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where, "expected an integer");
  return j.get<int>();
}

bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) throw InputError(where, "expected a boolean");
  return j.get<bool>();
}

std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (size_t k = 0; k < j.size(); ++k) {
    out.push_back(str(j[k], where + "[" + std::to_string(k) + "]"));
    if (!seen.insert(out.back()).second) throw InputError(where, "duplicate id " + out.back());
  }
  return out;
}

std::map<std::string, int> index(const std::vector<std::string>& ids) {
  std::map<std::string, int> m;
  for (size_t k = 0; k < ids.size(); ++k) m[ids[k]] = static_cast<int>(k);
  return m;
}

int lookup(const std::map<std::string, int>& m, const std::string& id, const std::string& where) {
  auto it = m.find(id);
  if (it == m.end()) throw InputError(where, "unknown id " + id);
  return it->second;
}

// total function dom -> cod given as {id: id}
std::vector<int> table(const json& j, const std::vector<std::string>& dom, const std::map<std::string, int>& cod,
                       const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto di = index(dom);
  std::vector<int> t(dom.size(), -1);
  for (auto& [k, v] : j.items()) {
    int x = lookup(di, k, where);
    t[x] = lookup(cod, str(v, at(where, k)), at(where, k));
  }
  for (size_t x = 0; x < t.size(); ++x)
    if (t[x] < 0) throw InputError(where, "not total: no value for " + dom[x]);
  return t;
}

json table_json(const std::vector<int>& t, const std::vector<std::string>& dom, const std::vector<std::string>& cod) {
  json j = json::object();
  for (size_t x = 0; x < t.size(); ++x) j[dom[x]] = cod[t[x]];
  return j;
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& where) {
  auto c = key.find(',');
  if (c == std::string::npos || key.find(',', c + 1) != std::string::npos)
    throw InputError(where, "expected a key of the form \"a,b\"");
  return {key.substr(0, c), key.substr(c + 1)};
}

std::pair<int, int> int_pair(const std::string& key, const std::string& where) {
  auto [a, b] = split_pair(key, where);
  try {
    size_t p = 0, q = 0;
    int x = std::stoi(a, &p), y = std::stoi(b, &q);
    if (p != a.size() || q != b.size()) throw std::invalid_argument(key);
    return {x, y};
  } catch (const std::exception&) {
    throw InputError(where, "expected integer indices \"n,i\"");
  }
}

void level_tables(const json& j, const std::string& where, int N, bool face, const SSet& X,
                  std::vector<std::vector<std::vector<int>>>& out) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  std::vector<std::map<std::string, int>> idx;
  for (auto& l : X.ids) idx.push_back(index(l));
  for (auto& [k, v] : j.items()) {
    auto [n, i] = int_pair(k, at(where, k));
    int lo = face ? 1 : 0, hi = face ? N : N - 1;
    if (n < lo || n > hi || i < 0 || i > n) throw InputError(at(where, k), "index out of range");
    int m = face ? n - 1 : n + 1;
    out[n][i] = table(v, X.ids[n], idx[m], at(where, k));
  }
  for (int n = face ? 1 : 0; n <= (face ? N : N - 1); ++n)
    for (int i = 0; i <= n; ++i)
      if (out[n][i].size() != X.ids[n].size())
        throw InputError(at(where, std::to_string(n) + "," + std::to_string(i)), "missing table");
}

}  // namespace

std::string data_dir() {
  if (const char* d = std::getenv("SEGAL_DATA")) return d;
  return SEGAL_DATA_DIR;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// simplicial sets

SSet sset_from_json(const json& j, const std::string& where) {
  keys(j, where, {"N", "levels", "face"}, {"semi", "degeneracy"});
  SSet X;
  X.N = integer(j["N"], at(where, "N"));
  if (X.N < 1) throw InputError(at(where, "N"), "truncation level must be at least 1");
  X.semi = j.contains("semi") ? boolean(j["semi"], at(where, "semi")) : false;
  auto& lv = j["levels"];
  if (!lv.is_array() || static_cast<int>(lv.size()) != X.N + 1)
    throw InputError(at(where, "levels"), "expected " + std::to_string(X.N + 1) + " levels");
  for (int n = 0; n <= X.N; ++n) X.ids.push_back(strings(lv[n], at(where, "levels") + "[" + std::to_string(n) + "]"));
  X.face.assign(X.N + 1, {});
  for (int n = 1; n <= X.N; ++n) X.face[n].assign(n + 1, {});
  level_tables(j["face"], at(where, "face"), X.N, true, X, X.face);
  if (!X.semi) {
    if (!j.contains("degeneracy")) throw InputError(at(where, "degeneracy"), "missing field");
    X.degen.assign(X.N, {});
    for (int n = 0; n < X.N; ++n) X.degen[n].assign(n + 1, {});
    level_tables(j["degeneracy"], at(where, "degeneracy"), X.N, false, X, X.degen);
  } else if (j.contains("degeneracy")) {
    throw InputError(at(where, "degeneracy"), "semi-simplicial input carries no degeneracies");
  }
  return X;
}

json to_json(const SSet& X) {
  json j;
  j["N"] = X.N;
  j["semi"] = X.semi;
  j["levels"] = X.ids;
  json f = json::object(), s = json::object();
  for (int n = 1; n <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      f[std::to_string(n) + "," + std::to_string(i)] = table_json(X.face[n][i], X.ids[n], X.ids[n - 1]);
  j["face"] = f;
  if (!X.semi) {
    for (int n = 0; n < X.N; ++n)
      for (int i = 0; i <= n; ++i)
        s[std::to_string(n) + "," + std::to_string(i)] = table_json(X.degen[n][i], X.ids[n], X.ids[n + 1]);
    j["degeneracy"] = s;
  }
  return j;
}

SMap smap_from_json(const json& j, const std::string& where) {
  keys(j, where, {"source", "target", "components"});
  SMap F;
  F.src = sset_from_json(j["source"], at(where, "source"));
  F.tgt = sset_from_json(j["target"], at(where, "target"));
  if (F.src.N != F.tgt.N) throw InputError(where, "source and target truncations differ");
  auto& c = j["components"];
  if (!c.is_array() || static_cast<int>(c.size()) != F.src.N + 1)
    throw InputError(at(where, "components"), "expected one table per level");
  for (int n = 0; n <= F.src.N; ++n)
    F.comp.push_back(table(c[n], F.src.ids[n], index(F.tgt.ids[n]), at(where, "components") + "[" + std::to_string(n) + "]"));
  return F;
}

json to_json(const SMap& F) {
  json j;
  j["source"] = to_json(F.src);
  j["target"] = to_json(F.tgt);
  j["components"] = json::array();
  for (int n = 0; n <= F.src.N; ++n) j["components"].push_back(table_json(F.comp[n], F.src.ids[n], F.tgt.ids[n]));
  return j;
}

// ---------------------------------------------------------------------------
// categories and groupoids

namespace {

template <class C>
void read_category_fields(const json& j, const std::string& where, C& out, std::vector<int>& ident) {
  out.objects = strings(j["objects"], at(where, "objects"));
  auto oi = index(out.objects);
  auto& ms = j["morphisms"];
  if (!ms.is_array()) throw InputError(at(where, "morphisms"), "expected an array");
  std::set<std::string> seen;
  for (size_t k = 0; k < ms.size(); ++k) {
    std::string w = at(where, "morphisms") + "[" + std::to_string(k) + "]";
    keys(ms[k], w, {"id", "src", "tgt"});
    typename C::Arrow a;
    a.id = str(ms[k]["id"], at(w, "id"));
    if (a.id.find(',') != std::string::npos) throw InputError(at(w, "id"), "ids may not contain ','");
    if (!seen.insert(a.id).second) throw InputError(at(w, "id"), "duplicate id " + a.id);
    a.src = lookup(oi, str(ms[k]["src"], at(w, "src")), at(w, "src"));
    a.tgt = lookup(oi, str(ms[k]["tgt"], at(w, "tgt")), at(w, "tgt"));
    out.mor.push_back(a);
  }
  std::map<std::string, int> mi;
  for (size_t k = 0; k < out.mor.size(); ++k) mi[out.mor[k].id] = static_cast<int>(k);
  auto& cp = j["compose"];
  if (!cp.is_object()) throw InputError(at(where, "compose"), "expected an object");
  for (auto& [k, v] : cp.items()) {
    std::string w = at(where, "compose") + "." + k;
    auto [g, f] = split_pair(k, w);
    out.comp[{lookup(mi, g, w), lookup(mi, f, w)}] = lookup(mi, str(v, w), w);
  }
  ident = table(j["identity"], out.objects, mi, at(where, "identity"));
}

template <class C>
json category_fields(const C& c, const std::vector<int>& ident) {
  json j;
  j["objects"] = c.objects;
  j["morphisms"] = json::array();
  for (auto& a : c.mor) j["morphisms"].push_back({{"id", a.id}, {"src", c.objects[a.src]}, {"tgt", c.objects[a.tgt]}});
  json cp = json::object();
  for (auto& [gf, h] : c.comp) cp[c.mor[gf.first].id + "," + c.mor[gf.second].id] = c.mor[h].id;
  j["compose"] = cp;
  json id = json::object();
  for (size_t a = 0; a < c.objects.size(); ++a) id[c.objects[a]] = c.mor[ident[a]].id;
  j["identity"] = id;
  return j;
}

}  // namespace

FinCategory category_from_json(const json& j, const std::string& where) {
  keys(j, where, {"objects", "morphisms", "compose", "identity"}, {"name"});
  FinCategory C;
  read_category_fields(j, where, C, C.ident);
  if (auto err = validate_category(C); !err.empty()) throw InputError(where, "not a category: " + err);
  return C;
}

json to_json(const FinCategory& C) { return category_fields(C, C.ident); }

FinGroupoid groupoid_from_json(const json& j, const std::string& where) {
  keys(j, where, {"objects", "morphisms", "compose", "identity", "inverse"}, {"name"});
  FinGroupoid G;
  read_category_fields(j, where, G, G.identity);
  std::vector<std::string> mids;
  std::map<std::string, int> mi;
  for (size_t k = 0; k < G.mor.size(); ++k) {
    mids.push_back(G.mor[k].id);
    mi[G.mor[k].id] = static_cast<int>(k);
  }
  G.inverse = table(j["inverse"], mids, mi, at(where, "inverse"));
  return G;
}

json to_json(const FinGroupoid& G) {
  json j = category_fields(G, G.identity);
  json inv = json::object();
  for (size_t k = 0; k < G.mor.size(); ++k) inv[G.mor[k].id] = G.mor[G.inverse[k]].id;
  j["inverse"] = inv;
  return j;
}

// ---------------------------------------------------------------------------
// groups, actions, presheaves

Group group_from_json(const json& j, const std::string& where) {
  keys(j, where, {"elements", "table"}, {"name"});
  Group G;
  G.names = strings(j["elements"], at(where, "elements"));
  auto gi = index(G.names);
  auto& t = j["table"];
  if (!t.is_array() || t.size() != G.names.size()) throw InputError(at(where, "table"), "expected one row per element");
  for (size_t r = 0; r < t.size(); ++r) {
    std::string w = at(where, "table") + "[" + std::to_string(r) + "]";
    if (!t[r].is_array() || t[r].size() != G.names.size()) throw InputError(w, "row has wrong length");
    std::vector<int> row;
    for (size_t c = 0; c < t[r].size(); ++c) row.push_back(lookup(gi, str(t[r][c], w), w));
    G.mul.push_back(row);
  }
  G.e = -1;
  for (int g = 0; g < G.order() && G.e < 0; ++g) {
    bool unit = true;
    for (int h = 0; h < G.order(); ++h) unit = unit && G.mul[g][h] == h && G.mul[h][g] == h;
    if (unit) G.e = g;
  }
  if (G.e < 0) throw InputError(where, "no identity element");
  if (auto err = validate_group(G); !err.empty()) throw InputError(where, "not a group: " + err);
  return G;
}

json to_json(const Group& G, const std::string& name) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["elements"] = G.names;
  j["table"] = json::array();
  for (auto& row : G.mul) {
    json r = json::array();
    for (int x : row) r.push_back(G.names[x]);
    j["table"].push_back(r);
  }
  return j;
}

GroupAction action_from_json(const json& j, const std::string& where) {
  keys(j, where, {"group", "points", "action"}, {"name"});
  GroupAction A;
  A.G = j["group"].is_string() ? catalog_group(j["group"].get<std::string>())
                               : group_from_json(j["group"], at(where, "group"));
  auto pts = strings(j["points"], at(where, "points"));
  A.points = static_cast<int>(pts.size());
  auto pi = index(pts);
  auto& act = j["action"];
  if (!act.is_object()) throw InputError(at(where, "action"), "expected an object");
  A.act.assign(A.G.order(), {});
  auto gi = index(A.G.names);
  for (auto& [g, row] : act.items()) {
    std::string w = at(where, "action") + "." + g;
    int x = lookup(gi, g, w);
    if (!row.is_array() || row.size() != pts.size()) throw InputError(w, "expected one image per point");
    for (auto& y : row) A.act[x].push_back(lookup(pi, str(y, w), w));
  }
  for (int g = 0; g < A.G.order(); ++g)
    if (A.act[g].empty() && A.points > 0) throw InputError(at(where, "action"), "no row for " + A.G.names[g]);
  if (auto err = validate_action(A); !err.empty()) throw InputError(where, "not an action: " + err);
  return A;
}

Presheaf presheaf_from_json(const json& j, const std::string& where) {
  keys(j, where, {"base", "values", "restrict"}, {"name"});
  Presheaf F;
  F.base = j["base"].is_string() ? catalog_category(j["base"].get<std::string>())
                                 : category_from_json(j["base"], at(where, "base"));
  auto& vals = j["values"];
  keys(vals, at(where, "values"), std::set<std::string>(F.base.objects.begin(), F.base.objects.end()));
  for (auto& o : F.base.objects) F.values.push_back(strings(vals[o], at(where, "values") + "." + o));
  auto& res = j["restrict"];
  std::set<std::string> mids;
  for (auto& a : F.base.mor) mids.insert(a.id);
  keys(res, at(where, "restrict"), mids);
  for (auto& a : F.base.mor)
    F.restrict.push_back(
        table(res[a.id], F.values[a.tgt], index(F.values[a.src]), at(where, "restrict") + "." + a.id));
  if (auto err = validate_presheaf(F); !err.empty()) throw InputError(where, "not a presheaf: " + err);
  return F;
}

// ---------------------------------------------------------------------------
// instances

std::shared_ptr<ProtoExact> InstanceSpec::make() const {
  if (instance == "vect_f1") return vect_f1(max_size);
  return vect_fq(q, max_size);
}

ContextPtr InstanceSpec::duality(std::shared_ptr<const ProtoExact> C) const {
  if (instance == "vect_f1") return f1_duality(C);
  return fq_duality(C, sign);
}

InstanceSpec instance_from_json(const json& j, const std::string& where) {
  keys(j, where, {"instance", "max_size"}, {"q", "sign", "name"});
  InstanceSpec s;
  s.instance = str(j["instance"], at(where, "instance"));
  if (s.instance != "vect_f1" && s.instance != "vect_fq") throw InputError(at(where, "instance"), "unknown instance");
  s.max_size = integer(j["max_size"], at(where, "max_size"));
  if (s.max_size < 0) throw InputError(at(where, "max_size"), "must be nonnegative");
  if (s.instance == "vect_fq") {
    if (!j.contains("q")) throw InputError(at(where, "q"), "missing field");
    s.q = integer(j["q"], at(where, "q"));
  }
  if (j.contains("sign")) {
    s.sign = integer(j["sign"], at(where, "sign"));
    if (s.sign != 1 && s.sign != -1) throw InputError(at(where, "sign"), "must be 1 or -1");
  }
  return s;
}

StabilityFraming stability_from_json(const json& j, const std::string& where) {
  keys(j, where, {"zeta", "f"}, {"name"});
  StabilityFraming s;
  auto& z = j["zeta"];
  if (!z.is_array() || z.empty()) throw InputError(at(where, "zeta"), "expected a nonempty array");
  for (size_t k = 0; k < z.size(); ++k) {
    std::string w = at(where, "zeta") + "[" + std::to_string(k) + "]";
    if (!z[k].is_array() || z[k].size() != 2) throw InputError(w, "expected [re, im]");
    s.zeta.push_back({integer(z[k][0], w), integer(z[k][1], w)});
    auto [re, im] = s.zeta.back();
    if (im < 0 || (im == 0 && re >= 0)) throw InputError(w, "outside the upper half-plane");
  }
  auto& f = j["f"];
  if (!f.is_array() || f.size() != z.size()) throw InputError(at(where, "f"), "expected one framing per vertex");
  for (size_t k = 0; k < f.size(); ++k) {
    int v = integer(f[k], at(where, "f") + "[" + std::to_string(k) + "]");
    if (v < 0) throw InputError(at(where, "f"), "framing must be nonnegative");
    s.f.push_back(v);
  }
  return s;
}

// ---------------------------------------------------------------------------
// pentagon data

PentagonDatum pentagon_from_json(const json& j, const std::string& where) {
  keys(j, where, {"X2", "a"}, {"name"});
  PentagonDatum D;
  D.X2 = strings(j["X2"], at(where, "X2"));
  auto xi = index(D.X2);
  const int n = static_cast<int>(D.X2.size());
  D.a.assign(n * n, {-1, -1});
  auto& a = j["a"];
  if (!a.is_object()) throw InputError(at(where, "a"), "expected an object");
  for (auto& [k, v] : a.items()) {
    std::string w = at(where, "a") + "." + k;
    auto [x, y] = split_pair(k, w);
    if (!v.is_array() || v.size() != 2) throw InputError(w, "expected a pair");
    D.a[lookup(xi, x, w) * n + lookup(xi, y, w)] = {lookup(xi, str(v[0], w), w), lookup(xi, str(v[1], w), w)};
  }
  for (int k = 0; k < n * n; ++k)
    if (D.a[k].first < 0) throw InputError(at(where, "a"), "not total: no value for " + D.X2[k / n] + "," + D.X2[k % n]);
  return D;
}

json to_json(const PentagonDatum& D) {
  json j;
  j["X2"] = D.X2;
  json a = json::object();
  const int n = static_cast<int>(D.X2.size());
  for (int k = 0; k < n * n; ++k)
    a[D.X2[k / n] + "," + D.X2[k % n]] = {D.X2[D.a[k].first], D.X2[D.a[k].second]};
  j["a"] = a;
  return j;
}

APentagonDatum apentagon_from_json(const json& j, const PentagonDatum& D, const std::string& where) {
  keys(j, where, {"Y1", "alpha"}, {"name"});
  APentagonDatum E;
  E.Y1 = strings(j["Y1"], at(where, "Y1"));
  auto xi = index(D.X2), yi = index(E.Y1);
  const int n = static_cast<int>(E.Y1.size());
  E.alpha.assign(D.X2.size() * n, {-1, -1});
  auto& a = j["alpha"];
  if (!a.is_object()) throw InputError(at(where, "alpha"), "expected an object");
  for (auto& [k, v] : a.items()) {
    std::string w = at(where, "alpha") + "." + k;
    auto [x, m] = split_pair(k, w);
    if (!v.is_array() || v.size() != 2) throw InputError(w, "expected a pair");
    E.alpha[lookup(xi, x, w) * n + lookup(yi, m, w)] = {lookup(yi, str(v[0], w), w), lookup(yi, str(v[1], w), w)};
  }
  for (size_t k = 0; k < E.alpha.size(); ++k)
    if (E.alpha[k].first < 0)
      throw InputError(at(where, "alpha"), "not total: no value for " + D.X2[k / n] + "," + E.Y1[k % n]);
  return E;
}

json to_json(const PentagonDatum& D, const APentagonDatum& E) {
  json j;
  j["Y1"] = E.Y1;
  json a = json::object();
  const int n = static_cast<int>(E.Y1.size());
  for (size_t k = 0; k < E.alpha.size(); ++k)
    a[D.X2[k / n] + "," + E.Y1[k % n]] = {E.Y1[E.alpha[k].first], E.Y1[E.alpha[k].second]};
  j["alpha"] = a;
  return j;
}

// ---------------------------------------------------------------------------
// reports and tables

json to_json(const CheckReport& r) {
  json j;
  j["condition"] = r.condition;
  j["N"] = r.N;
  j["header"] = r.header;
  j["instances"] = json::array();
  for (auto& c : r.instances) {
    json e;
    e["params"] = {{"label", c.label}, {"n", c.n}, {"i", c.i}, {"j", c.j}};
    e["verdict"] = verdict_name(c.verdict);
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["instances"].push_back(e);
  }
  j["verdict"] = verdict_name(r.overall());
  j["pass"] = r.pass();
  if (!r.pass()) j["first_failure"] = r.first_failure();
  return j;
}

json to_json(const HallTable& T) {
  json j;
  j["instance"] = T.instance;
  j["bound"] = T.bound;
  j["basis"] = json::array();
  for (size_t b = 0; b < T.basis.size(); ++b)
    j["basis"].push_back({{"label", T.label(b)}, {"grade", T.grade[b]}, {"aut", to_string(T.aut[b])}});
  j["mult"] = json::array();
  for (auto& [k, v] : T.mult) {
    auto [u, vv, w] = k;
    j["mult"].push_back({{"U", T.label(u)}, {"V", T.label(vv)}, {"W", T.label(w)}, {"count", to_string(v)}});
  }
  return j;
}

json to_json(const HallModuleTable& M, const HallTable& T) {
  json j;
  j["instance"] = M.instance;
  j["bound"] = M.bound;
  j["basis"] = json::array();
  for (size_t b = 0; b < M.basis.size(); ++b)
    j["basis"].push_back({{"label", M.labels[b]}, {"grade", M.grade[b]}, {"aut", to_string(M.aut[b])}});
  j["act"] = json::array();
  for (auto& [k, v] : M.act) {
    auto [u, m, n] = k;
    j["act"].push_back({{"U", T.label(u)}, {"M", M.labels[m]}, {"N", M.labels[n]}, {"count", to_string(v)}});
  }
  return j;
}

json to_json(const SetHallTable& T, const SSet& X) {
  json j;
  j["f"] = json::array();
  for (auto& [k, v] : T.f) {
    auto [x, y, z] = k;
    j["f"].push_back({{"U", X.ids[1][x]}, {"V", X.ids[1][y]}, {"W", X.ids[1][z]}, {"count", to_string(v)}});
  }
  j["hom"] = json::object();
  for (auto& [ab, edges] : T.hom) {
    json e = json::array();
    for (int x : edges) e.push_back(X.ids[1][x]);
    j["hom"][X.ids[0][ab.first] + "," + X.ids[0][ab.second]] = e;
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const HallTable& T) {
  std::ostringstream out;
  out << "U,V,W,count\n";
  for (auto& [k, v] : T.mult) {
    auto [u, vv, w] = k;
    out << csv_field(T.label(u)) << ',' << csv_field(T.label(vv)) << ',' << csv_field(T.label(w)) << ',' << v
        << '\n';
  }
  return out.str();
}

std::string to_csv(const HallModuleTable& M, const HallTable& T) {
  std::ostringstream out;
  out << "U,V,W,count\n";
  for (auto& [k, v] : M.act) {
    auto [u, m, n] = k;
    out << csv_field(T.label(u)) << ',' << csv_field(M.labels[m]) << ',' << csv_field(M.labels[n]) << ',' << v
        << '\n';
  }
  return out.str();
}

json to_json(const Interpolation& I) {
  json j;
  j["stable"] = I.stable;
  j["coeffs"] = json::array();
  for (auto& c : I.coeffs) j["coeffs"].push_back(to_string(c));
  if (I.at_one) j["at_one"] = to_string(*I.at_one);
  if (!I.note.empty()) j["note"] = I.note;
  return j;
}

json to_json(const TableInterpolation& I) {
  json j;
  j["stable"] = I.stable;
  j["entries"] = json::array();
  for (auto& [k, e] : I.entries) {
    json x = to_json(e);
    x["key"] = k;
    j["entries"].push_back(x);
  }
  return j;
}

// ---------------------------------------------------------------------------
// catalog

json catalog(const std::string& file) { return read_json(data_dir() + "/catalog/" + file); }

std::vector<std::string> catalog_names(const std::string& file, const std::string& list) {
  json j = catalog(file);
  if (!j.contains(list) || !j[list].is_object()) throw InputError(file, "missing list " + list);
  std::vector<std::string> out;
  for (auto& [k, v] : j[list].items()) out.push_back(k);
  return out;
}

Group catalog_group(const std::string& name) {
  json j = catalog("groups.json");
  if (!j["groups"].contains(name)) throw InputError("groups.json", "no group named " + name);
  return group_from_json(j["groups"][name], "groups." + name);
}

FinCategory catalog_category(const std::string& name) {
  json j = catalog("categories.json");
  if (!j["categories"].contains(name)) throw InputError("categories.json", "no category named " + name);
  return category_from_json(j["categories"][name], "categories." + name);
}

}  // namespace segal
