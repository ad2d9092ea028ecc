#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/category.hpp"
#include "segal/hall.hpp"
#include "segal/io.hpp"
#include "segal/multicat.hpp"
#include "segal/segal_check.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace segal;

namespace {

// every triangulation membrane map bijective for 3 <= n <= N
bool membranes_bijective(const SSet& X, int N) {
  for (int n = 3; n <= N; ++n)
    for (auto& T : enumerate_triangulations(n)) {
      auto cells = subdivision_subset(T);
      auto M = membrane_space(cells, X);
      std::set<std::vector<int>> img;
      for (int k = 0; k < X.size(n); ++k) img.insert(membrane_restriction(X, n, k, cells));
      if (static_cast<int>(img.size()) != X.size(n) || img.size() != M.size()) return false;
    }
  return true;
}

// X0 = {*}, X1 = {a, b}, X2 = {p : (a, a) -> b, q : (b, a) -> a} and X3 every compatible face tuple
SSet associativity_defect() {
  SSet X;
  X.N = 3;
  X.semi = true;
  X.ids = {{"*"}, {"a", "b"}, {"p", "q"}, {}};
  X.face = {{}, {{0, 0}, {0, 0}}, {{0, 0}, {1, 0}, {0, 1}}, {}};
  // d0 p = a, d1 p = b, d2 p = a; d0 q = a, d1 q = a, d2 q = b
  std::vector<std::vector<int>> f3(4);
  for (int t = 0; t < 16; ++t) {
    int s[4] = {t & 1, t >> 1 & 1, t >> 2 & 1, t >> 3 & 1};
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ok = ok && X.face[2][i][s[j]] == X.face[2][j - 1][s[i]];
    if (!ok) continue;
    X.ids[3].push_back("t" + std::to_string(t));
    for (int i = 0; i < 4; ++i) f3[i].push_back(s[i]);
  }
  X.face[3] = f3;
  return X;
}

std::vector<std::pair<std::string, SSet>> nerves(int N) {
  std::vector<std::pair<std::string, SSet>> out;
  for (auto& n : catalog_names("categories.json", "categories")) out.push_back({n, nerve(catalog_category(n), N)});
  return out;
}

SMap identity_of(const SSet& X) {
  SMap id{X, X, {}};
  for (int n = 0; n <= X.N; ++n) {
    id.comp.push_back({});
    for (int k = 0; k < X.size(n); ++k) id.comp[n].push_back(k);
  }
  return id;
}

SSet fixture(const std::string& f) { return sset_from_json(read_json(data_dir() + "/catalog/fixtures/" + f)); }

}  // namespace

TEST_CASE("triangulation counts follow the Catalan recursion") {
  CHECK(oracle::catalan(4) == 14);
  for (int n = 2; n <= 8; ++n) {
    auto Ts = enumerate_triangulations(n);
    CHECK(static_cast<long>(Ts.size()) == oracle::catalan(n - 1));
    std::set<std::vector<std::pair<int, int>>> distinct;
    for (auto T : Ts) {
      CHECK(check_subdivision(T).empty());
      CHECK(static_cast<int>(T.diagonals.size()) == n - 2);
      std::sort(T.diagonals.begin(), T.diagonals.end());
      distinct.insert(T.diagonals);
    }
    CHECK(distinct.size() == Ts.size());
  }
  std::vector<long> want{2, 5, 14, 42};
  for (int n = 3; n <= 6; ++n) CHECK(static_cast<long>(enumerate_triangulations(n).size()) == want[n - 3]);
}

TEST_CASE("symmetric subdivisions") {
  for (int n = 1; n <= 3; ++n) {
    auto S = enumerate_symmetric_subdivisions(n);
    CHECK(static_cast<int>(S.size()) == oracle::symmetric_subdivisions(n));
    for (auto& P : S) CHECK(check_subdivision(P.polygon()).empty());
  }
  auto two = enumerate_symmetric_subdivisions(2);
  CHECK(two.size() == 3u);
  CHECK(std::count_if(two.begin(), two.end(), [](auto& P) { return !P.horizontal.empty() || !P.pairs.empty(); }) == 2);
  CHECK(enumerate_symmetric_subdivisions(3).size() == 11u);
  CHECK_THROWS_AS(enumerate_symmetric_subdivisions(0), std::invalid_argument);

  SUBCASE("maximal ones are not refined by anything else") {
    auto all = enumerate_symmetric_subdivisions(3);
    for (auto& P : all) {
      CHECK(refines(P, P));
      bool maximal = is_maximal(P, all);
      bool refined = false;
      for (auto& Q : all) refined = refined || (refines(Q, P) && !refines(P, Q));
      CHECK(maximal == !refined);
    }
  }
}

TEST_CASE("nerves of categories are 1-Segal and unital 2-Segal") {
  for (auto& [name, X] : nerves(4)) {
    CAPTURE(name);
    CHECK(check_1segal(X, 4).pass());
    CHECK(check_2segal(X, 4, true).pass());
  }
}

TEST_CASE("the circle fixture is 2-Segal but not 1-Segal") {
  auto X = fixture("circle.json");
  CHECK(validate_simplicial(X).pass);
  CHECK(check_2segal(X, 3, true).pass());
  auto one = check_1segal(X, 3);
  CHECK_FALSE(one.pass());
  CHECK(one.first_failure().find("not surjective") != std::string::npos);
}

TEST_CASE("an empty top level breaks 2-Segal") {
  auto X = fixture("empty_top.json");
  auto r = check_2segal(X, 3, false);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.first_failure().empty());
}

TEST_CASE("associativity defect") {
  auto X = associativity_defect();
  REQUIRE(validate_simplicial(X).pass);
  CHECK(X.size(3) == 0);
  // both triangulations of the square carry two membranes
  for (auto& T : enumerate_triangulations(3)) CHECK(membrane_space(subdivision_subset(T), X).size() == 2u);
  auto r = check_2segal(X, 3, false);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.first_failure().empty());
  CHECK_THROWS_AS(hall_constants_set(X), std::invalid_argument);
  auto T = hall_constants_set(X, true);
  CHECK(T.at(0, 0, 1) == 1);
  CHECK(T.at(1, 0, 0) == 1);
  CHECK_FALSE(verify_set_algebra(X, T).pass);
}

TEST_CASE("property: 2-Segal verdict matches direct membrane bijectivity") {
  std::vector<std::pair<std::string, SSet>> inputs = nerves(4);
  inputs.push_back({"circle", fixture("circle.json")});
  inputs.push_back({"empty top", fixture("empty_top.json")});
  inputs.push_back({"defect", associativity_defect()});
  for (auto g : {"Z1", "Z2", "Z3", "S3"}) inputs.push_back({g, nerve_from_pentagon(group_pentagon(catalog_group(g)), 4)});
  for (auto& [name, X] : inputs) {
    CAPTURE(name);
    CHECK(check_2segal(X, X.N, false).pass() == membranes_bijective(X, X.N));
  }
}

TEST_CASE("relative 1-Segal: split form agrees with outside squares") {
  auto agree = [](const CheckReport& r) {
    for (auto& c : r.instances)
      if (c.label == "split vs outside") return c.verdict == Verdict::pass;
    return false;
  };
  json p = catalog("presheaves.json");
  for (auto& [name, v] : p["presheaves"].items()) {
    auto F = nerve_map(grothendieck(presheaf_from_json(v, name)), 3);
    auto r = check_rel1segal(F, Side::right, 3);
    CHECK(r.pass());
    CHECK(agree(r));
    CHECK(agree(check_rel1segal(F, Side::left, 3)));
  }
  auto C = poset_category(1);
  CatFunctor bad{C, poset_category(0), {0, 0}, std::vector<int>(C.mor.size(), 0)};
  auto r = check_rel1segal(nerve_map(bad, 3), Side::right, 3);
  CHECK_FALSE(r.pass());
  CHECK(agree(r));
  // base must be 1-Segal
  auto circ = fixture("circle.json");
  CHECK_THROWS_AS(check_rel1segal(identity_of(circ), Side::right, 3), std::invalid_argument);
}

TEST_CASE("path spaces are relative 2-Segal") {
  for (auto& [name, X] : nerves(4))
    for (Side s : {Side::left, Side::right}) {
      CAPTURE(name);
      auto P = path_space(X, s);
      CHECK(check_rel2segal(P, 3, true).pass());
      CHECK(check_rel2segal_outside(P, 3).pass());
    }
  auto C = fixture("circle.json");
  CHECK(check_rel2segal(path_space(C, Side::right), 2, true).pass());
}

TEST_CASE("three subdivision criteria agree") {
  for (auto& [name, X] : nerves(4)) {
    CAPTURE(name);
    auto c = crosscheck_subdivision_criteria(path_space(X, Side::left), 3);
    CHECK(c.agree);
    CHECK(c.relative.pass());
  }
  // the identity of the circle is not relative 2-Segal
  auto c = crosscheck_subdivision_criteria(identity_of(fixture("circle.json")), 3);
  CHECK(c.agree);
  CHECK_FALSE(c.relative.pass());
  CHECK_FALSE(c.subdivisions.pass());
}

TEST_CASE("report accessors") {
  CheckReport r;
  r.instances.push_back({"a", 2, 0, 0, Verdict::pass, ""});
  CHECK(r.pass());
  CHECK(r.first_failure().empty());
  r.instances.push_back({"b", 3, 1, 0, Verdict::inconclusive, "shallow"});
  CHECK(r.overall() == Verdict::inconclusive);
  r.instances.push_back({"c", 2, 1, 0, Verdict::fail, "broken"});
  CHECK(r.overall() == Verdict::fail);
  CHECK(r.first_failure().find("broken") != std::string::npos);
  CHECK(std::string(verdict_name(Verdict::fail)) == "fail");
}
