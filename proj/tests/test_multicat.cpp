#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/category.hpp"
#include "segal/io.hpp"
#include "segal/multicat.hpp"
#include "segal/segal_check.hpp"

#include "oracles.hpp"

#include <array>

using namespace segal;

namespace {

using Triple3 = std::array<int, 3>;

// a acting on coordinates (r, s) of a triple
Triple3 apply(const PentagonDatum& D, Triple3 t, int r, int s) {
  const int n = static_cast<int>(D.X2.size());
  auto [u, v] = D.a[t[r] * n + t[s]];
  t[r] = u;
  t[s] = v;
  return t;
}

bool pentagon_oracle(const PentagonDatum& D) {
  const int n = static_cast<int>(D.X2.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple3 t{x, y, z};
        auto lhs = apply(D, apply(D, apply(D, t, 0, 1), 0, 2), 1, 2);
        auto rhs = apply(D, apply(D, t, 1, 2), 0, 1);
        if (lhs != rhs) return false;
      }
  return true;
}

PentagonDatum fixture_pentagon() {
  return pentagon_from_json(read_json(data_dir() + "/catalog/fixtures/pentagon_swap.json"));
}

}  // namespace

TEST_CASE("group pentagons satisfy the pentagon equation") {
  for (auto& name : catalog_names("groups.json", "groups")) {
    CAPTURE(name);
    auto D = group_pentagon(catalog_group(name));
    CHECK(pentagon_oracle(D));
    auto v = pentagon_check(D);
    CHECK(v.ok);
    CHECK(v.bijective);
  }
}

TEST_CASE("pentagon check agrees with the oracle on the swap and on broken data") {
  auto S = fixture_pentagon();
  CHECK(pentagon_check(S).ok == pentagon_oracle(S));
  // a(x, y) = (y, x) on Z2 is a bijection but the two sides disagree
  PentagonDatum swap{{"0", "1"}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  CHECK_FALSE(pentagon_oracle(swap));
  CHECK(pentagon_check(swap).ok == pentagon_oracle(swap));
  PentagonDatum collide{{"0", "1"}, {{0, 0}, {0, 0}, {0, 1}, {1, 1}}};
  auto v = pentagon_check(collide);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.bijective);
  CHECK(v.error.find("not a bijection") != std::string::npos);
  CHECK_THROWS_AS(nerve_from_pentagon(collide, 3), std::invalid_argument);
}

TEST_CASE("pentagon nerve sizes match tuple enumeration") {
  for (auto& name : catalog_names("groups.json", "groups")) {
    Group G = catalog_group(name);
    CAPTURE(name);
    auto D = group_pentagon(G);
    auto X = nerve_from_pentagon(D, 4);
    CHECK(X.size(0) == 1);
    long expect = 1;
    for (int n = 1; n <= 4; ++n) {
      CHECK(X.size(n) == expect);
      expect *= G.order();
    }
    for (int n = 0; n <= 3; ++n) CHECK(X.size(n) == oracle::pentagon_tuples(D, n));
    if (G.order() <= 3) CHECK(X.size(4) == oracle::pentagon_tuples(D, 4));
  }
  // Z2: 16 tuples on the four faces of a 3-simplex, four satisfy the constraint
  auto D = group_pentagon(catalog_group("Z2"));
  CHECK(oracle::pentagon_tuples(D, 3) == 4);
}

TEST_CASE("pentagon nerves are 2-Segal") {
  for (auto g : {"Z1", "Z2", "Z3", "Z2xZ2", "S3"}) {
    auto X = nerve_from_pentagon(group_pentagon(catalog_group(g)), 4);
    CHECK(validate_simplicial(X).pass);
    CHECK(check_2segal(X, 4, false).pass());
  }
}

TEST_CASE("torsors give relative 2-Segal nerves; non-free actions are rejected") {
  for (auto g : {"Z2", "Z3", "Z4", "S3"}) {
    Group G = catalog_group(g);
    auto D = group_pentagon(G);
    auto E = action_apentagon(regular_action(G));
    CHECK(apentagon_check(D, E).ok);
    auto F = nerve_from_apentagon(D, E, 4);
    CHECK(validate_map(F).pass);
    CHECK(check_rel2segal(F, 4, false).pass());
  }
  auto A = action_from_json(read_json(data_dir() + "/catalog/fixtures/trivial_action.json"));
  auto v = apentagon_check(group_pentagon(A.G), action_apentagon(A));
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.bijective);
  CHECK(v.error.find("not a bijection") != std::string::npos);
  CHECK_THROWS_AS(nerve_from_apentagon(group_pentagon(A.G), action_apentagon(A), 3), std::invalid_argument);
}

TEST_CASE("multicategories of nerves") {
  for (auto& name : catalog_names("categories.json", "categories")) {
    CAPTURE(name);
    auto X = nerve(catalog_category(name), 4);
    auto M = to_multicategory(X, 4);
    CHECK(validate_multicat(M).pass);
    CHECK_FALSE(M.semi());
    CHECK(M.X0.size() == static_cast<size_t>(X.size(0)));
    CHECK(M.X1.size() == static_cast<size_t>(X.size(1)));
    CHECK(roundtrip_nerve(X, 4).empty());
    auto Y = from_multicategory(M, 4);
    CHECK(same_multicat(to_multicategory(Y, 4), M));
  }
}

TEST_CASE("property: module roundtrips on path spaces and torsors") {
  for (auto& name : catalog_names("categories.json", "categories")) {
    CAPTURE(name);
    auto P = path_space(nerve(catalog_category(name), 5), Side::right);
    CHECK(roundtrip_nerve(P, 4).empty());
    auto [X, Y] = to_multicat(P, 4);
    CHECK(validate_multimodule(X, Y).pass);
    CHECK(roundtrip_multicat(X, Y, 4).empty());
  }
  for (auto g : {"Z2", "Z3"}) {
    Group G = catalog_group(g);
    auto D = group_pentagon(G);
    auto E = action_apentagon(regular_action(G));
    auto F = nerve_from_apentagon(D, E, 4);
    CHECK(roundtrip_nerve(F, 4).empty());
    auto X = pentagon_multicat(D);
    auto Y = apentagon_module(D, E);
    CHECK(X.semi());
    CHECK(validate_multicat(X).pass);
    CHECK(validate_multimodule(X, Y).pass);
    CHECK(roundtrip_multicat(X, Y, 4).empty());
  }
}

TEST_CASE("incoherent data is rejected") {
  auto X = pentagon_multicat(group_pentagon(catalog_group("Z3")));
  auto broken = X;
  auto it = broken.a.begin();
  auto first = it->second;
  auto second = std::next(it)->second;
  it->second = second;
  std::next(it)->second = first;
  std::string why;
  CHECK_FALSE(same_multicat(X, broken, &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(validate_multicat(broken).pass);
  CHECK_THROWS_AS(from_multicategory(broken, 4), std::invalid_argument);
}

TEST_CASE("pentagon JSON roundtrip") {
  auto D = group_pentagon(catalog_group("S3"));
  auto E = pentagon_from_json(to_json(D));
  CHECK(E.X2 == D.X2);
  CHECK(E.a == D.a);
  json bad = to_json(D);
  bad["a"].erase(bad["a"].begin());
  CHECK_THROWS_AS(pentagon_from_json(bad), InputError);
}
