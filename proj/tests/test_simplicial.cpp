#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/category.hpp"
#include "segal/io.hpp"
#include "segal/segal_check.hpp"
#include "segal/simplicial.hpp"

#include <algorithm>
#include <set>

using namespace segal;

namespace {

// all functions [n] -> [m], keeping the weakly monotone ones
int monotone_count(int n, int m) {
  int total = 1, count = 0;
  for (int k = 0; k <= n; ++k) total *= m + 1;
  for (int code = 0; code < total; ++code) {
    std::vector<int> v;
    int c = code;
    for (int k = 0; k <= n; ++k) {
      v.push_back(c % (m + 1));
      c /= m + 1;
    }
    count += std::is_sorted(v.begin(), v.end());
  }
  return count;
}

std::vector<std::vector<int>> sorted_cells(std::vector<std::vector<int>> c) {
  std::sort(c.begin(), c.end());
  return c;
}

bool injective(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()).size() == v.size(); }

}  // namespace

TEST_CASE("standard simplex level sizes match monotone map counts") {
  for (int m = 0; m <= 3; ++m) {
    auto X = standard_simplex(m, 3);
    for (int n = 0; n <= 3; ++n) CHECK(X.size(n) == monotone_count(n, m));
    CHECK(validate_simplicial(X).pass);
  }
  auto X = standard_simplex(2, 3);
  CHECK(std::vector<int>{X.size(0), X.size(1), X.size(2), X.size(3)} == std::vector<int>{3, 6, 10, 15});
  CHECK(standard_simplex(1, 3).size(3) == 5);
  auto P = standard_simplex(0, 2);
  for (int n = 0; n <= 2; ++n) CHECK(P.size(n) == 1);
}

TEST_CASE("a corrupted face table is caught as an identity failure") {
  auto X = standard_simplex(2, 3);
  int k = X.find(2, X.ids[2][X.size(2) - 1]);
  X.face[2][1][k] = (X.face[2][1][k] + 1) % X.size(1);
  auto r = validate_simplicial(X);
  CHECK_FALSE(r.pass);
  CHECK(r.structural.empty());
  REQUIRE_FALSE(r.violations.empty());
  bool names_it = false;
  for (auto& v : r.violations) names_it = names_it || v.simplex == X.ids[2][k];
  CHECK(names_it);
}

TEST_CASE("a partial face table is a structural error") {
  auto X = standard_simplex(1, 2);
  X.face[2][0].pop_back();
  auto r = validate_simplicial(X);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.structural.empty());
  CHECK(r.violations.empty());
}

TEST_CASE("nerve of the poset [3] validates") {
  auto X = nerve(poset_category(3), 4);
  CHECK(validate_simplicial(X).pass);
  CHECK(X.size(3) == monotone_count(3, 3));
}

TEST_CASE("subdivision cells") {
  CHECK(sorted_cells(subdivision_subset({3, {{0, 2}}})) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}});
  CHECK(sorted_cells(subdivision_subset({3, {{1, 3}}})) == std::vector<std::vector<int>>{{0, 1, 3}, {1, 2, 3}});
  CHECK(subdivision_subset({5, {}}) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
  CHECK_THROWS_AS(subdivision_subset({3, {{0, 2}, {1, 3}}}), std::invalid_argument);
  CHECK_FALSE(check_subdivision({4, {{0, 1}}}).empty());
  CHECK_FALSE(check_subdivision({4, {{0, 4}}}).empty());
}

TEST_CASE("crossing test agrees with the interleaving criterion") {
  const int n = 7;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          std::set<int> ends{i, j, k, l};
          bool expect = ends.size() == 4 && ((i < k && k < j && j < l) || (k < i && i < l && l < j));
          CHECK(diagonals_cross({i, j}, {k, l}) == expect);
        }
}

TEST_CASE("membrane spaces") {
  auto X = nerve(poset_category(3), 4);
  for (auto& T : enumerate_triangulations(3)) CHECK(membrane_space(subdivision_subset(T), X).size() == 35u);

  SUBCASE("trivial subdivision is in bijection with the top level") {
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::vector<int>> cells{{}};
      for (int v = 0; v <= n; ++v) cells[0].push_back(v);
      auto M = membrane_space(cells, X);
      CHECK(static_cast<int>(M.size()) == X.size(n));
      std::vector<int> img;
      for (int k = 0; k < X.size(n); ++k) {
        auto t = membrane_restriction(X, n, k, cells);
        img.push_back(static_cast<int>(std::find(M.begin(), M.end(), t) - M.begin()));
      }
      CHECK(injective(img));
    }
  }

  SUBCASE("empty second level gives no membranes") {
    SSet E;
    E.N = 2;
    E.semi = true;
    E.ids = {{"x"}, {"e"}, {}};
    E.face = {{}, {{0}, {0}}, {{}, {}, {}}};
    CHECK(validate_simplicial(E).pass);
    CHECK(membrane_space(subdivision_subset({3, {{0, 2}}}), truncate(E, 2)).empty());
  }
}

TEST_CASE("property: nerves of catalog categories have every membrane map bijective") {
  for (auto& name : catalog_names("categories.json", "categories")) {
    CAPTURE(name);
    auto X = nerve(catalog_category(name), 4);
    for (int n = 2; n <= 4; ++n)
      for (auto& T : enumerate_triangulations(n)) {
        auto cells = subdivision_subset(T);
        auto M = membrane_space(cells, X);
        REQUIRE(static_cast<int>(M.size()) == X.size(n));
        std::set<std::vector<int>> img;
        for (int k = 0; k < X.size(n); ++k) img.insert(membrane_restriction(X, n, k, cells));
        CHECK(static_cast<int>(img.size()) == X.size(n));
      }
  }
}

TEST_CASE("edgewise subdivision") {
  auto E = edgewise_subdivision(standard_simplex(1, 3), 1);
  CHECK(E.Xe.size(1) == 5);
  CHECK(validate_simplicial(E.Xe).pass);
  CHECK(validate_map(E.to_base).pass);
  auto P = edgewise_subdivision(standard_simplex(0, 3), 1);
  for (int n = 0; n <= 1; ++n) CHECK(P.Xe.size(n) == 1);
  CHECK_THROWS_AS(edgewise_subdivision(standard_simplex(1, 3), 2), std::invalid_argument);
}

TEST_CASE("property: edgewise subdivision always validates") {
  std::vector<SSet> inputs{standard_simplex(2, 5), nerve(poset_category(2), 5)};
  for (auto& name : catalog_names("categories.json", "categories")) inputs.push_back(nerve(catalog_category(name), 5));
  for (auto& X : inputs) {
    auto E = edgewise_subdivision(X, 2);
    CHECK(validate_simplicial(E.Xe).pass);
    CHECK(validate_map(E.to_base).pass);
    for (int m = 0; m <= 2; ++m) CHECK(E.Xe.size(m) == X.size(2 * m + 1));
  }
}

TEST_CASE("path spaces") {
  auto X = standard_simplex(1, 3);
  for (Side s : {Side::left, Side::right}) {
    auto P = path_space(X, s);
    CHECK(P.src.N == 2);
    CHECK(P.src.size(0) == 3);
    CHECK(validate_simplicial(P.src).pass);
    CHECK(validate_map(P).pass);
  }
  CHECK_THROWS_AS(path_space(truncate(X, 1), Side::left), std::invalid_argument);
}
