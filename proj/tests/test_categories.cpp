#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/category.hpp"
#include "segal/io.hpp"
#include "segal/protoexact.hpp"
#include "segal/segal_check.hpp"

using namespace segal;

namespace {

// commuting squares: (f, g, a, b) with b f = g a
int commuting_squares(const FinCategory& C) {
  int count = 0;
  for (size_t f = 0; f < C.mor.size(); ++f)
    for (size_t g = 0; g < C.mor.size(); ++g)
      for (size_t a = 0; a < C.mor.size(); ++a)
        for (size_t b = 0; b < C.mor.size(); ++b) {
          if (C.mor[a].src != C.mor[f].src || C.mor[a].tgt != C.mor[g].src) continue;
          if (C.mor[b].src != C.mor[f].tgt || C.mor[b].tgt != C.mor[g].tgt) continue;
          count += C.compose_ids(b, static_cast<int>(f)) == C.compose_ids(static_cast<int>(g), a);
        }
  return count;
}

// composable n-chains by recursion on the last arrow
long chains(const FinCategory& C, int n) {
  std::vector<long> ending(C.objects.size(), 1);
  for (int k = 0; k < n; ++k) {
    std::vector<long> next(C.objects.size(), 0);
    for (auto& m : C.mor) next[m.tgt] += ending[m.src];
    ending = next;
  }
  long total = 0;
  for (long e : ending) total += e;
  return total;
}

std::vector<FinCategory> catalog_categories() {
  std::vector<FinCategory> out;
  for (auto& n : catalog_names("categories.json", "categories")) out.push_back(catalog_category(n));
  return out;
}

}  // namespace

TEST_CASE("catalog categories validate") {
  for (auto& C : catalog_categories()) CHECK(validate_category(C).empty());
  for (int n = 0; n <= 4; ++n) CHECK(validate_category(poset_category(n)).empty());
  CHECK(validate_category(group_category(quaternion_group())).empty());
}

TEST_CASE("malformed category fixture is rejected") {
  auto j = read_json(data_dir() + "/catalog/fixtures/malformed_category.json");
  try {
    category_from_json(j);
    FAIL("accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not a category") != std::string::npos);
  }
}

TEST_CASE("nerve level sizes count composable chains") {
  for (auto& C : catalog_categories()) {
    auto X = nerve(C, 4);
    CHECK(validate_simplicial(X).pass);
    for (int n = 0; n <= 4; ++n) CHECK(X.size(n) == chains(C, n));
  }
}

TEST_CASE("property: nerve and category are inverse") {
  for (auto& C : catalog_categories()) {
    auto X = nerve(C, 3);
    auto D = nerve_to_category(X);
    std::string why;
    CHECK_MESSAGE(same_category(C, D, &why), why);
    CHECK(is_isomorphism(spine_comparison(X, D)));
    CHECK(check_1segal(X, 3).pass());
  }
}

TEST_CASE("nerve_to_category rejects non 1-Segal input") {
  auto j = read_json(data_dir() + "/catalog/fixtures/circle.json");
  auto X = sset_from_json(j);
  CHECK_THROWS_AS(nerve_to_category(X), std::invalid_argument);
}

TEST_CASE("opposite and arrow categories") {
  for (auto& C : catalog_categories()) {
    CHECK(validate_category(opposite(C)).empty());
    CHECK(same_category(opposite(opposite(C)), C));
    auto A = arrow_category(C);
    CHECK(validate_category(A).empty());
    CHECK(A.objects.size() == C.mor.size());
    CHECK(static_cast<int>(A.mor.size()) == commuting_squares(C));
    CHECK(validate_cat_functor(target_projection(C)).empty());
  }
}

TEST_CASE("nerve maps of functors") {
  auto C = poset_category(2);
  CatFunctor F{C, poset_category(0), {0, 0, 0}, std::vector<int>(C.mor.size(), 0)};
  CHECK(validate_cat_functor(F).empty());
  CHECK(validate_map(nerve_map(F, 3)).pass);
  F.obj[1] = 5;
  CHECK_FALSE(validate_cat_functor(F).empty());
}

TEST_CASE("Grothendieck construction") {
  json p = catalog("presheaves.json");
  for (auto& [name, v] : p["presheaves"].items()) {
    CAPTURE(name);
    auto F = presheaf_from_json(v, name);
    CHECK(validate_presheaf(F).empty());
    auto G = grothendieck(F);
    CHECK(validate_cat_functor(G).empty());
    size_t elements = 0;
    for (auto& vals : F.values) elements += vals.size();
    CHECK(G.src.objects.size() == elements);
    CHECK(is_discrete_right_fibration(G).ok);
    CHECK(check_rel1segal(nerve_map(G, 3), Side::right, 3).pass());
  }
}

TEST_CASE("a non-fibration is detected") {
  // the identity of the point has two lifts ending at 1
  auto C = poset_category(1);
  CatFunctor F{C, poset_category(0), {0, 0}, std::vector<int>(C.mor.size(), 0)};
  auto v = is_discrete_right_fibration(F);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
  CHECK_FALSE(check_rel1segal(nerve_map(F, 3), Side::right, 3).pass());
}

TEST_CASE("Hecke-Waldhausen action groupoids") {
  Group Z4 = catalog_group("Z4");
  auto HW = hecke_waldhausen(regular_action(Z4), {0, 2}, 3);
  CHECK(validate_sgrpd(*HW.H).pass);
  CHECK(validate_sgrpd(*HW.G).pass);
  CHECK(validate_sgrpd_map(*HW.F).pass);
  CHECK(check_rel1segal(*HW.F, Side::left, 3).pass());
  CHECK(check_rel1segal(*HW.F, Side::right, 3).pass());
  CHECK(check_1segal(*HW.G, 3).pass());
  // level n of G \\ E^{n+1} has |E|^{n+1} / |G| classes for a free action
  for (int n = 0; n <= 3; ++n) {
    int expect = 1;
    for (int k = 0; k <= n; ++k) expect *= 4;
    CHECK(HW.G->lvl[n]->classes() == expect / 4);
    CHECK(HW.H->lvl[n]->classes() == expect / 2);
  }
  CHECK_THROWS_AS(hecke_waldhausen(regular_action(Z4), {0, 1}, 3), std::invalid_argument);
}

TEST_CASE("unoriented nerves over F_1") {
  auto C = vect_f1(2);
  auto ctx = f1_duality(C);
  auto U = unoriented_nerve(ctx, 3);
  CHECK(validate_sgrpd_map(*U.F).pass);
  CHECK(check_rel1segal(*U.F, Side::right, 3).pass());
  auto T = unoriented_twisted_cyclic_nerve(ctx, 2);
  CHECK(validate_sgrpd_map(*T.F).pass);
  CHECK(check_rel2segal(*T.F, 2, true).pass());
}
