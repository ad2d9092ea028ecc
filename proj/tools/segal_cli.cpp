#include "segal/category.hpp"
#include "segal/hall.hpp"
#include "segal/io.hpp"
#include "segal/multicat.hpp"
#include "segal/protoexact.hpp"
#include "segal/segal_check.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace segal;

namespace {

struct Options {
  std::string kind, input, name, out, format = "json", condition, side = "right";
  std::string instance = "vect_f1", stability = "single_phase", group, action, theorem;
  std::vector<int> qs;
  int levels = 3, max_size = 2, m = 1, max_degree = -1, sign = 1;
  bool unital = false, module = false, torsor = false, all = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("--out", "cannot write " + o.out);
  f << text;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw InputError("--side", "expected left or right");
}

void need_levels(int N) {
  if (N < 1) throw InputError("--levels", "must be at least 1");
}

json input_or_catalog(const Options& o, const std::string& file, const std::string& list) {
  if (!o.input.empty()) return read_json(o.input);
  if (o.name.empty()) throw InputError("--input", "either --input or --name is required");
  json c = catalog(file);
  if (!c[list].contains(o.name)) throw InputError("--name", "no catalog entry " + o.name + " in " + file);
  return c[list][o.name];
}

CheckReport summary(const std::string& condition, int N, const std::vector<CheckInstance>& items) {
  CheckReport r;
  r.condition = condition;
  r.N = N;
  r.instances = items;
  return r;
}

CheckInstance item(const std::string& label, bool ok, const std::string& witness = {}) {
  CheckInstance c;
  c.label = label;
  c.verdict = ok ? Verdict::pass : Verdict::fail;
  if (!ok) c.witness = witness;
  return c;
}

CheckReport from_groupoid_report(const std::string& condition, int N, const GroupoidReport& g) {
  std::vector<CheckInstance> items;
  if (g.pass) items.push_back(item("validation", true));
  for (auto& w : g.witnesses) items.push_back(item("validation", false, w));
  return summary(condition, N, items);
}

std::shared_ptr<ProtoExact> make_instance(const Options& o) {
  InstanceSpec s;
  s.instance = o.instance;
  s.max_size = o.max_size;
  if (o.instance == "vect_fq") {
    if (o.qs.size() != 1) throw InputError("--q", "vect_fq needs a single --q");
    s.q = o.qs[0];
  } else if (o.instance != "vect_f1") {
    throw InputError("--instance", "expected vect_f1 or vect_fq");
  }
  if (o.max_size < 0) throw InputError("--max-size", "must be nonnegative");
  return s.make();
}

ContextPtr make_duality(const Options& o, std::shared_ptr<const ProtoExact> C) {
  if (o.instance == "vect_f1") return f1_duality(C);
  return fq_duality(C, o.sign);
}

int finish(const Options& o, json j, bool pass) {
  j["pass"] = pass;
  emit(o, dump(j));
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// build

int cmd_build(const Options& o) {
  need_levels(o.levels);
  const int N = o.levels;
  if (o.kind == "nerve") {
    FinCategory C = category_from_json(input_or_catalog(o, "categories.json", "categories"), o.name);
    emit(o, dump(to_json(nerve(C, N))));
  } else if (o.kind == "simplex") {
    if (o.m < 0) throw InputError("--m", "must be nonnegative");
    emit(o, dump(to_json(standard_simplex(o.m, N))));
  } else if (o.kind == "pentagon") {
    PentagonDatum D = o.group.empty() ? pentagon_from_json(read_json(o.input)) : group_pentagon(catalog_group(o.group));
    emit(o, dump(to_json(nerve_from_pentagon(D, N))));
  } else if (o.kind == "apentagon") {
    if (o.group.empty()) throw InputError("--group", "required for apentagon");
    Group G = catalog_group(o.group);
    GroupAction A = o.action.empty() ? regular_action(G) : action_from_json(read_json(o.action), "action");
    emit(o, dump(to_json(nerve_from_apentagon(group_pentagon(A.G), action_apentagon(A), N))));
  } else if (o.kind == "path-space") {
    SSet X = sset_from_json(read_json(o.input));
    emit(o, dump(to_json(path_space(X, parse_side(o.side)))));
  } else if (o.kind == "edgewise") {
    SSet X = sset_from_json(read_json(o.input));
    emit(o, dump(to_json(edgewise_subdivision(X, N).to_base)));
  } else if (o.kind == "grothendieck") {
    Presheaf F = presheaf_from_json(input_or_catalog(o, "presheaves.json", "presheaves"), o.name);
    emit(o, dump(to_json(nerve_map(grothendieck(F), N))));
  } else {
    throw InputError("kind", "unknown construction " + o.kind);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const Options& o) {
  need_levels(o.levels);
  const int N = o.levels;
  json in = read_json(o.input);
  json j;
  bool pass = true;
  if (o.condition == "simplicial") {
    SSet X = sset_from_json(in);
    auto v = validate_simplicial(X);
    std::vector<CheckInstance> items;
    for (auto& s : v.structural) items.push_back(item("structural", false, s));
    for (auto& w : v.violations) {
      auto c = item(w.identity, false, "simplex " + w.simplex);
      c.n = w.n, c.i = w.i, c.j = w.j;
      items.push_back(c);
    }
    if (items.empty()) items.push_back(item("simplicial identities", true));
    CheckReport r = summary("simplicial identities", X.N, items);
    j = to_json(r);
    pass = r.pass();
  } else if (o.condition == "1segal" || o.condition == "2segal") {
    SSet X = sset_from_json(in);
    CheckReport r = o.condition == "1segal" ? check_1segal(X, N) : check_2segal(X, N, o.unital);
    j = to_json(r);
    pass = r.pass();
    if (o.condition == "2segal") j["related"]["1segal"] = to_json(check_1segal(X, N));
  } else if (o.condition == "rel1segal") {
    CheckReport r = check_rel1segal(smap_from_json(in), parse_side(o.side), N);
    j = to_json(r);
    pass = r.pass();
  } else if (o.condition == "rel2segal") {
    CheckReport r = check_rel2segal(smap_from_json(in), N, o.unital);
    j = to_json(r);
    pass = r.pass();
  } else if (o.condition == "rel2segal-outside") {
    CheckReport r = check_rel2segal_outside(smap_from_json(in), N);
    j = to_json(r);
    pass = r.pass();
  } else if (o.condition == "subdivisions") {
    auto c = crosscheck_subdivision_criteria(smap_from_json(in), N);
    j["relative"] = to_json(c.relative);
    j["subdivisions"] = to_json(c.subdivisions);
    j["maximal"] = to_json(c.maximal);
    j["triangulations"] = to_json(c.triangulations);
    j["base"] = to_json(c.base);
    j["agree"] = c.agree;
    pass = c.agree && c.relative.pass();
  } else {
    throw InputError("--condition", "unknown condition " + o.condition);
  }
  return finish(o, j, pass);
}

// ---------------------------------------------------------------------------
// hall

int cmd_hall(const Options& o) {
  if (!o.input.empty()) {
    json in = read_json(o.input);
    if (o.module) {
      SMap F = smap_from_json(in);
      auto T = hall_constants_set(F.tgt);
      auto M = hall_module_constants_set(F);
      auto r = verify_set_module(F, T, M);
      json j;
      j["algebra"] = to_json(T, F.tgt);
      j["module"] = json::array();
      for (auto& [k, v] : M.g) {
        auto [x, a, b] = k;
        j["module"].push_back({{"U", F.tgt.ids[1][x]}, {"M", F.src.ids[0][a]}, {"N", F.src.ids[0][b]},
                               {"count", to_string(v)}});
      }
      j["failures"] = r.failures;
      return finish(o, j, r.pass);
    }
    SSet X = sset_from_json(in);
    auto T = hall_constants_set(X);
    auto r = verify_set_algebra(X, T);
    json j = to_json(T, X);
    j["failures"] = r.failures;
    return finish(o, j, r.pass);
  }
  auto C = make_instance(o);
  HallTable T = hall_constants(*C, o.max_size);
  if (o.module) {
    HallModuleTable M = hall_module_constants(*C, make_duality(o, C), o.max_size);
    auto r = verify_module(T, M);
    if (o.format == "csv") {
      emit(o, to_csv(M, T));
      return r.pass ? 0 : 1;
    }
    json j = to_json(M, T);
    j["failures"] = r.failures;
    return finish(o, j, r.pass);
  }
  auto r = verify_algebra(T);
  auto D = coalgebra_table(*C, T);
  auto h = verify_hopf(T, D);
  bool pass = r.pass && h.pass;
  if (o.format == "csv") {
    emit(o, to_csv(T));
    return pass ? 0 : 1;
  }
  json j = to_json(T);
  j["failures"] = r.failures;
  for (auto& f : h.failures) j["failures"].push_back(f);
  return finish(o, j, pass);
}

// ---------------------------------------------------------------------------
// verify-theorem

const std::map<std::string, std::string>& theorem_aliases() {
  static const std::map<std::string, std::string> m = {
      {"waldSegal", "waldhausen-2segal"},
      {"sd2Segal", "hermitian-rel2segal"},
      {"stabFrameSegal", "stable-framed-rel2segal"},
      {"catUnoriNerve", "unoriented-nerve-rel1segal"},
      {"twNerveRel2Segal", "twisted-nerve-rel2segal"},
      {"relPathSpace", "path-space-rel2segal"},
      {"relNerve", "grothendieck-rel1segal"},
      {"multiCatModule", "multicat-roundtrip"},
      {"2SegFrom1Seg", "segal-implication"},
      {"heckeWaldhausen", "hecke-waldhausen"},
  };
  return m;
}

StabilityFraming stability_option(const Options& o) {
  json c = catalog("stability.json");
  if (c["stability"].contains(o.stability)) return stability_from_json(c["stability"][o.stability], o.stability);
  return stability_from_json(read_json(o.stability), o.stability);
}

std::vector<std::pair<std::string, SSet>> catalog_nerves(int N) {
  std::vector<std::pair<std::string, SSet>> out;
  for (auto& n : catalog_names("categories.json", "categories")) out.push_back({n, nerve(catalog_category(n), N)});
  return out;
}

int cmd_theorem(const Options& o) {
  need_levels(o.levels);
  const int N = o.levels;
  std::string name = o.theorem;
  if (auto it = theorem_aliases().find(name); it != theorem_aliases().end()) name = it->second;
  json j;
  j["theorem"] = name;
  j["parameters"] = {{"instance", o.instance}, {"max_size", o.max_size}, {"levels", N}};
  std::vector<CheckReport> reports;
  if (name == "waldhausen-2segal") {
    auto S = waldhausen_S(make_instance(o), N);
    reports.push_back(from_groupoid_report("simplicial identities", N, validate_sgrpd(*S.X)));
    reports.push_back(check_2segal(*S.X, N, true));
  } else if (name == "hermitian-rel2segal") {
    auto C = make_instance(o);
    auto R = hermitian_R(C, make_duality(o, C), N);
    reports.push_back(from_groupoid_report("simplicial map", N, validate_sgrpd_map(*R.F)));
    reports.push_back(check_rel2segal(*R.F, N, true));
  } else if (name == "stable-framed-rel2segal") {
    if (o.instance != "vect_fq") throw InputError("--instance", "stable framed construction needs vect_fq");
    auto C = make_instance(o);
    auto SF = stability_option(o);
    auto R = stable_framed_S(C, SF, N);
    j["parameters"]["stability"] = o.stability;
    j["parameters"]["note"] = "the zero object with zero section is not stable framed";
    reports.push_back(from_groupoid_report("simplicial map", N, validate_sgrpd_map(*R.F)));
    reports.push_back(check_rel2segal(*R.F, N, true));
  } else if (name == "unoriented-nerve-rel1segal") {
    auto C = make_instance(o);
    auto U = unoriented_nerve(make_duality(o, C), N);
    reports.push_back(from_groupoid_report("simplicial map", N, validate_sgrpd_map(*U.F)));
    reports.push_back(check_rel1segal(*U.F, Side::right, N));
  } else if (name == "twisted-nerve-rel2segal") {
    auto C = make_instance(o);
    auto T = unoriented_twisted_cyclic_nerve(make_duality(o, C), N);
    reports.push_back(from_groupoid_report("simplicial map", N, validate_sgrpd_map(*T.F)));
    reports.push_back(check_rel2segal(*T.F, N, true));
  } else if (name == "hecke-waldhausen") {
    json h = catalog("actions.json");
    std::string which = o.name.empty() ? "Z2_in_Z4" : o.name;
    if (!h["hecke"].contains(which)) throw InputError("--name", "no hecke entry " + which);
    GroupAction A = action_from_json(h["actions"][h["hecke"][which]["action"].get<std::string>()], which);
    std::vector<int> H;
    for (auto& e : h["hecke"][which]["subgroup"]) {
      auto it = std::find(A.G.names.begin(), A.G.names.end(), e.get<std::string>());
      if (it == A.G.names.end()) throw InputError("hecke." + which, "unknown element");
      H.push_back(static_cast<int>(it - A.G.names.begin()));
    }
    auto HW = hecke_waldhausen(A, H, N);
    j["parameters"]["hecke"] = which;
    reports.push_back(check_rel1segal(*HW.F, Side::left, N));
    reports.push_back(check_rel1segal(*HW.F, Side::right, N));
  } else if (name == "path-space-rel2segal") {
    auto bases = catalog_nerves(N + 1);
    for (auto g : {"Z1", "Z2", "Z3"}) bases.push_back({std::string("pentagon ") + g, nerve_from_pentagon(group_pentagon(catalog_group(g)), N + 1)});
    for (auto& [n, X] : bases)
      for (Side s : {Side::left, Side::right}) {
        auto r = check_rel2segal(path_space(X, s), N, !X.semi);
        r.condition = n + (s == Side::left ? " left" : " right") + " path space: " + r.condition;
        reports.push_back(r);
      }
  } else if (name == "grothendieck-rel1segal") {
    json p = catalog("presheaves.json");
    for (auto& [n, v] : p["presheaves"].items()) {
      auto F = grothendieck(presheaf_from_json(v, n));
      auto fib = is_discrete_right_fibration(F);
      reports.push_back(summary(n + ": discrete right fibration", N, {item("lifts", fib.ok, fib.witness)}));
      auto r = check_rel1segal(nerve_map(F, N), Side::right, N);
      r.condition = n + ": " + r.condition;
      reports.push_back(r);
    }
  } else if (name == "multicat-roundtrip") {
    std::vector<CheckInstance> items;
    for (auto& [n, X] : catalog_nerves(N + 1)) {
      auto P = path_space(X, Side::right);
      std::string e = roundtrip_nerve(P, N);
      items.push_back(item(n + " right path space", e.empty(), e));
      auto [A, M] = to_multicat(P, N);
      e = roundtrip_multicat(A, M, N);
      items.push_back(item(n + " multicategory", e.empty(), e));
    }
    for (auto g : {"Z2", "Z3", "Z4"}) {
      Group G = catalog_group(g);
      auto F = nerve_from_apentagon(group_pentagon(G), action_apentagon(regular_action(G)), N);
      std::string e = roundtrip_nerve(F, N);
      items.push_back(item(std::string(g) + " torsor nerve", e.empty(), e));
    }
    reports.push_back(summary("multicategory roundtrip", N, items));
  } else if (name == "segal-implication") {
    for (auto& [n, X] : catalog_nerves(N)) {
      auto one = check_1segal(X, N);
      auto two = check_2segal(X, N, true);
      reports.push_back(summary(n + ": 1-Segal implies unital 2-Segal", N,
                                {item("1-Segal", one.pass(), one.first_failure()),
                                 item("unital 2-Segal", two.pass(), two.first_failure())}));
    }
  } else {
    std::string names;
    for (auto& [a, b] : theorem_aliases()) names += " " + b;
    throw InputError("theorem", "unknown theorem " + o.theorem + "; known:" + names);
  }
  bool pass = true;
  j["reports"] = json::array();
  for (auto& r : reports) {
    j["reports"].push_back(to_json(r));
    pass = pass && r.pass();
  }
  return finish(o, j, pass);
}

// ---------------------------------------------------------------------------
// pentagon

json pentagon_run(const PentagonDatum& D, const GroupAction* A, int N, bool& pass) {
  json j;
  auto v = pentagon_check(D);
  j["pentagon"] = {{"ok", v.ok}, {"bijective", v.bijective}};
  if (!v.error.empty()) j["pentagon"]["error"] = v.error;
  if (!v.witness.empty()) j["pentagon"]["witness"] = v.witness;
  pass = v.ok;
  if (!v.ok) return j;
  auto X = nerve_from_pentagon(D, N);
  j["nerve_sizes"] = json::array();
  for (int n = 0; n <= N; ++n) j["nerve_sizes"].push_back(X.size(n));
  auto r = check_2segal(X, N, false);
  j["2segal"] = to_json(r);
  pass = pass && r.pass();
  if (!A) return j;
  auto E = action_apentagon(*A);
  auto w = apentagon_check(D, E);
  j["apentagon"] = {{"ok", w.ok}, {"bijective", w.bijective}};
  if (!w.error.empty()) j["apentagon"]["error"] = w.error;
  if (!w.witness.empty()) j["apentagon"]["witness"] = w.witness;
  pass = pass && w.ok;
  if (!w.ok) return j;
  auto F = nerve_from_apentagon(D, E, N);
  auto s = check_rel2segal(F, N, false);
  j["rel2segal"] = to_json(s);
  pass = pass && s.pass();
  return j;
}

int cmd_pentagon(const Options& o) {
  need_levels(o.levels);
  json j;
  bool pass = true;
  if (o.all) {
    j["groups"] = json::object();
    for (auto& g : catalog_names("groups.json", "groups")) {
      Group G = catalog_group(g);
      GroupAction A = regular_action(G);
      bool ok = true;
      j["groups"][g] = pentagon_run(group_pentagon(G), o.torsor ? &A : nullptr, o.levels, ok);
      pass = pass && ok;
    }
    return finish(o, j, pass);
  }
  if (!o.group.empty()) {
    Group G = catalog_group(o.group);
    GroupAction A = o.action.empty() ? regular_action(G) : action_from_json(read_json(o.action), "action");
    bool with_action = o.torsor || !o.action.empty();
    j = pentagon_run(group_pentagon(G), with_action ? &A : nullptr, o.levels, pass);
    j["group"] = o.group;
  } else {
    if (o.input.empty()) throw InputError("--input", "either --group, --all or --input is required");
    j = pentagon_run(pentagon_from_json(read_json(o.input)), nullptr, o.levels, pass);
  }
  return finish(o, j, pass);
}

// ---------------------------------------------------------------------------
// interpolate

int cmd_interpolate(const Options& o) {
  if (!o.input.empty()) {
    json in = read_json(o.input);
    if (!in.is_object() || !in.contains("samples") || in.size() != 1u + (in.contains("max_degree") ? 1u : 0u))
      throw InputError(o.input, "expected {\"samples\": [[q, value]], \"max_degree\"?}");
    std::vector<std::pair<Int, Rat>> samples;
    for (auto& s : in["samples"]) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer()) throw InputError("samples", "expected [q, value]");
      Rat v = s[1].is_string() ? Rat(s[1].get<std::string>()) : Rat(s[1].get<long long>());
      samples.push_back({Int(s[0].get<long long>()), v});
    }
    int d = o.max_degree >= 0 ? o.max_degree : in.value("max_degree", static_cast<int>(samples.size()) - 2);
    auto I = interpolate(samples, d);
    return finish(o, to_json(I), I.stable);
  }
  if (o.qs.empty()) throw InputError("--q", "at least one q is required");
  std::map<int, Labelled> fam;
  for (int q : o.qs) {
    auto C = vect_fq(q, o.max_size);
    auto T = hall_constants(*C, o.max_size);
    if (o.module) {
      auto M = hall_module_constants(*C, fq_duality(C, o.sign), o.max_size);
      fam[q] = labelled(T, M, [](const std::string& s) { return s.find("e=+") != std::string::npos; });
    } else {
      fam[q] = labelled(T);
    }
  }
  int d = o.max_degree >= 0 ? o.max_degree : static_cast<int>(o.qs.size()) - 2;
  auto I = q_interpolate(fam, d);
  json j = to_json(I);
  j["qs"] = o.qs;
  return finish(o, j, I.stable);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Segal-condition checker and Hall table tool"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "output path (stdout when absent)");
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--levels", o.levels, "truncation level N");
  };
  auto build = app.add_subcommand("build", "construct a simplicial set or map");
  build->add_option("kind", o.kind, "nerve | simplex | pentagon | apentagon | path-space | edgewise | grothendieck")
      ->required();
  build->add_option("--input", o.input, "input JSON");
  build->add_option("--name", o.name, "catalog entry");
  build->add_option("--m", o.m, "simplex dimension");
  build->add_option("--group", o.group, "catalog group");
  build->add_option("--action", o.action, "group action JSON");
  build->add_option("--side", o.side, "left or right");
  common(build);

  auto check = app.add_subcommand("check", "run a Segal condition on a simplicial set or map");
  check->add_option("--condition", o.condition,
                    "simplicial | 1segal | 2segal | rel1segal | rel2segal | rel2segal-outside | subdivisions")
      ->required();
  check->add_option("--input", o.input, "simplicial set or map JSON")->required();
  check->add_flag("--unital", o.unital, "include the unital conditions");
  check->add_option("--side", o.side, "left or right");
  common(check);

  auto hall = app.add_subcommand("hall", "Hall algebra or module structure constants");
  hall->add_option("--instance", o.instance, "vect_f1 or vect_fq");
  hall->add_option("--max-size", o.max_size, "size or dimension bound");
  hall->add_option("--q", o.qs, "field order for vect_fq");
  hall->add_option("--sign", o.sign, "form sign for vect_fq");
  hall->add_option("--input", o.input, "set-level input: simplicial set, or map with --module");
  hall->add_flag("--module", o.module, "module constants");
  common(hall);

  auto thm = app.add_subcommand("verify-theorem", "run the checks behind a finite-scale statement");
  thm->add_option("theorem", o.theorem, "statement name")->required();
  thm->add_option("--instance", o.instance, "vect_f1 or vect_fq");
  thm->add_option("--max-size", o.max_size, "size or dimension bound");
  thm->add_option("--q", o.qs, "field order for vect_fq");
  thm->add_option("--sign", o.sign, "form sign for vect_fq");
  thm->add_option("--stability", o.stability, "catalog stability entry or JSON path");
  thm->add_option("--name", o.name, "catalog entry");
  common(thm);

  auto pent = app.add_subcommand("pentagon", "pentagon and a-pentagon equations and their nerves");
  pent->add_option("--group", o.group, "catalog group, a(x, y) = (xy, y)");
  pent->add_option("--input", o.input, "pentagon datum JSON");
  pent->add_option("--action", o.action, "group action JSON for the a-pentagon");
  pent->add_flag("--torsor", o.torsor, "use the regular action");
  pent->add_flag("--all", o.all, "every catalog group");
  common(pent);

  auto interp = app.add_subcommand("interpolate", "interpolate structure constants in q");
  interp->add_option("--input", o.input, "samples JSON");
  interp->add_option("--q", o.qs, "field orders")->delimiter(',');
  interp->add_option("--max-size", o.max_size, "dimension bound");
  interp->add_option("--max-degree", o.max_degree, "degree bound");
  interp->add_option("--sign", o.sign, "form sign");
  interp->add_flag("--module", o.module, "orthogonal module constants, Witt type +");
  common(interp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*build) return cmd_build(o);
    if (*check) return cmd_check(o);
    if (*hall) return cmd_hall(o);
    if (*thm) return cmd_theorem(o);
    if (*pent) return cmd_pentagon(o);
    if (*interp) return cmd_interpolate(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
