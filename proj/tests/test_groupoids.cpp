#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/groupoid.hpp"
#include "segal/io.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace segal;

namespace {

GroupAction on_point(const Group& G) { return {G, 1, std::vector<std::vector<int>>(G.order(), {0})}; }

GroupAction trivial_on(const Group& G, int points) {
  std::vector<int> id(points);
  for (int x = 0; x < points; ++x) id[x] = x;
  return {G, points, std::vector<std::vector<int>>(G.order(), id)};
}

FinGroupoid one_object(const Group& G) { return action_groupoid(on_point(G), 0); }

// one-object groupoids: morphism g has index g
GroupoidFunctor group_hom(const Group& A, const Group& B, const std::vector<int>& h) {
  return {one_object(A), one_object(B), {0}, h};
}

GroupoidFunctor to_terminal(const FinGroupoid& G) {
  GroupoidFunctor F{G, one_object(cyclic_group(1)), std::vector<int>(G.objects.size(), 0),
                    std::vector<int>(G.mor.size(), 0)};
  return F;
}

// inclusion of a single object with all its automorphisms
GroupoidFunctor include_object(const FinGroupoid& G, int x) {
  FinGroupoid S;
  S.objects = {G.objects[x]};
  auto auts = G.homs(x, x);
  std::map<int, int> at;
  for (int m : auts) {
    at[m] = static_cast<int>(S.mor.size());
    S.mor.push_back({G.mor[m].id, 0, 0});
  }
  for (int m : auts) {
    S.inverse.push_back(at[G.inverse[m]]);
    for (int k : auts) S.comp[{at[k], at[m]}] = at[G.compose(k, m)];
  }
  S.identity = {at[G.identity[x]]};
  return {S, G, {x}, auts};
}

// pseudo-pullback object and morphism counts by direct enumeration
std::pair<int, int> pullback_counts(const GroupoidFunctor& F, const GroupoidFunctor& G) {
  const auto& C = F.tgt;
  int objects = 0, morphisms = 0;
  for (size_t a = 0; a < F.src.objects.size(); ++a)
    for (size_t b = 0; b < G.src.objects.size(); ++b)
      for (int gamma : C.homs(F.obj[a], G.obj[b])) {
        ++objects;
        for (size_t f = 0; f < F.src.mor.size(); ++f)
          for (size_t g = 0; g < G.src.mor.size(); ++g) {
            if (F.src.mor[f].src != static_cast<int>(a) || G.src.mor[g].src != static_cast<int>(b)) continue;
            // some gamma' with gamma' F(f) = G(g) gamma always exists; count the pair once
            int lhs = C.compose(G.mor[g], gamma);
            for (int gp : C.homs(F.obj[F.src.mor[f].tgt], G.obj[G.src.mor[g].tgt]))
              if (C.compose(gp, F.mor[f]) == lhs) ++morphisms;
          }
      }
  return {objects, morphisms};
}

bool same(const FinGroupoid& a, const FinGroupoid& b) {
  if (a.objects != b.objects || a.mor.size() != b.mor.size() || a.comp != b.comp) return false;
  for (size_t m = 0; m < a.mor.size(); ++m)
    if (a.mor[m].id != b.mor[m].id) return false;
  return true;
}

std::multiset<int> pi0_profile(const FinGroupoid& G) {
  std::multiset<int> s;
  for (auto& c : pi0_with_aut(G)) s.insert(c.aut);
  return s;
}

std::vector<GroupoidFunctor> catalog_equivalences() {
  std::vector<GroupoidFunctor> out;
  for (auto& name : catalog_names("groups.json", "groups")) {
    Group G = catalog_group(name);
    if (G.order() > 4) continue;
    out.push_back(identity_functor(one_object(G)));
    auto R = action_groupoid(regular_action(G), 0);
    out.push_back(to_terminal(R));
    out.push_back(include_object(R, 0));
  }
  return out;
}

}  // namespace

TEST_CASE("validate_groupoid") {
  CHECK(validate_groupoid(one_object(cyclic_group(2))).pass);
  CHECK(validate_groupoid(action_groupoid(regular_action(cyclic_group(2)), 2)).pass);
  auto G = one_object(cyclic_group(3));
  G.comp[{1, 1}] = 0;
  auto r = validate_groupoid(G);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("pi0_with_aut") {
  auto Z2 = one_object(cyclic_group(2));
  auto p = pi0_with_aut(Z2);
  REQUIRE(p.size() == 1);
  CHECK(p[0].aut == 2);
  auto D = action_groupoid(trivial_on(cyclic_group(1), 3), 0);
  p = pi0_with_aut(D);
  REQUIRE(p.size() == 3);
  for (auto& c : p) CHECK(c.aut == 1);
  CHECK(p[0].rep == 0);
}

TEST_CASE("action groupoids") {
  auto R = action_groupoid(regular_action(cyclic_group(2)), 0);
  CHECK(R.objects.size() == 2);
  CHECK(R.mor.size() == 4);
  auto p = pi0_with_aut(R);
  REQUIRE(p.size() == 1);
  CHECK(p[0].aut == 1);
  auto T = action_groupoid(trivial_on(cyclic_group(1), 2), 2);
  CHECK(T.objects.size() == 8);
  CHECK(pi0_with_aut(T).size() == 8);
  auto P = action_groupoid(on_point(cyclic_group(2)), 1);
  CHECK(P.objects.size() == 1);
  CHECK(pi0_with_aut(P)[0].aut == 2);
  GroupAction bad{cyclic_group(2), 2, {{0, 1}, {0, 0}}};
  CHECK_FALSE(validate_action(bad).empty());
  CHECK_THROWS_AS(action_groupoid(bad, 0), std::invalid_argument);
}

TEST_CASE("pseudo-pullbacks") {
  auto Z2 = one_object(cyclic_group(2));
  auto id = identity_functor(Z2);
  auto P = pseudo_pullback(id, id);
  CHECK(P.P.objects.size() == 2);
  CHECK(P.P.mor.size() == 8);
  CHECK(validate_groupoid(P.P).pass);
  CHECK(is_equivalence(P.toA).equivalence);
  auto counts = pullback_counts(id, id);
  CHECK(counts.first == 2);
  CHECK(counts.second == 8);

  SUBCASE("over a terminal groupoid it is the product") {
    auto A = one_object(cyclic_group(2)), B = one_object(cyclic_group(3));
    auto Q = pseudo_pullback(to_terminal(A), to_terminal(B));
    CHECK(Q.P.objects.size() == 1);
    CHECK(Q.P.mor.size() == 6);
  }
  SUBCASE("empty factor") {
    FinGroupoid E;
    GroupoidFunctor F{E, Z2, {}, {}};
    auto Q = pseudo_pullback(F, id);
    CHECK(Q.P.objects.empty());
  }
  SUBCASE("mismatched codomains") {
    CHECK_THROWS_AS(pseudo_pullback(id, identity_functor(one_object(cyclic_group(3)))), std::invalid_argument);
  }
  SUBCASE("counts against enumeration on catalog maps") {
    for (auto& F : catalog_equivalences())
      for (auto& G : catalog_equivalences()) {
        if (!same(F.tgt, G.tgt)) continue;
        auto Q = pseudo_pullback(F, G);
        auto c = pullback_counts(F, G);
        CHECK(static_cast<int>(Q.P.objects.size()) == c.first);
        CHECK(static_cast<int>(Q.P.mor.size()) == c.second);
        CHECK(validate_groupoid(Q.P).pass);
      }
  }
}

TEST_CASE("is_equivalence") {
  auto Z2 = one_object(cyclic_group(2));
  CHECK(is_equivalence(identity_functor(Z2)).equivalence);
  auto t = is_equivalence(to_terminal(Z2));
  CHECK_FALSE(t.equivalence);
  REQUIRE(t.aut_orders.size() == 1);
  CHECK(t.aut_orders[0] == std::pair<int, int>{2, 1});
  auto R = action_groupoid(regular_action(cyclic_group(3)), 0);
  CHECK(is_equivalence(include_object(R, 1)).equivalence);
  CHECK(is_equivalence(to_terminal(R)).equivalence);
  // Z4 -> Z4, x -> 2x is not faithful
  CHECK_FALSE(is_equivalence(group_hom(cyclic_group(4), cyclic_group(4), {0, 2, 0, 2})).equivalence);
  CHECK(is_equivalence(group_hom(cyclic_group(4), cyclic_group(4), {0, 3, 2, 1})).equivalence);
}

TEST_CASE("property: equivalences compose and detect through pullbacks") {
  auto eqs = catalog_equivalences();
  for (auto& f : eqs) {
    CHECK(is_equivalence(f).equivalence);
    CHECK(validate_functor(f).pass);
    for (auto& g : eqs) {
      if (!same(g.src, f.tgt)) continue;
      CHECK(is_equivalence(compose(g, f)).equivalence);
    }
    auto P = pseudo_pullback(f, identity_functor(f.tgt));
    CHECK(is_equivalence(P.toB).equivalence);
    CHECK(pi0_profile(f.src) == pi0_profile(f.tgt));
  }
}

TEST_CASE("implicit levels agree with explicit classification") {
  for (auto& name : catalog_names("groups.json", "groups")) {
    Group G = catalog_group(name);
    if (G.order() > 6) continue;
    for (int n = 0; n <= 1; ++n) {
      auto E = action_groupoid(regular_action(G), n);
      Level L(std::make_shared<ExplicitGroupoid>(E));
      auto p = pi0_with_aut(E);
      REQUIRE(L.classes() == static_cast<int>(p.size()));
      std::multiset<int> a, b;
      for (int c = 0; c < L.classes(); ++c) a.insert(static_cast<int>(L.aut(c).size()));
      for (auto& c : p) b.insert(c.aut);
      CHECK(a == b);
      Rat mass = 0;
      for (auto& c : p) mass += Rat(1, c.aut);
      CHECK(L.mass() == mass);
    }
  }
}

TEST_CASE("homotopy Cartesian squares") {
  auto Z2 = one_object(cyclic_group(2));
  auto pt = one_object(cyclic_group(1));
  auto lift = [](const GroupoidFunctor& F) {
    Functor f;
    f.obj = [F](const Key& x) { return Key{F.obj[x[0]]}; };
    f.code = [F](const Mor& m) { return Key{F.mor[m.code[0]]}; };
    return f;
  };
  auto level = [](const FinGroupoid& G) { return Level(std::make_shared<ExplicitGroupoid>(G)); };
  auto toZ2 = GroupoidFunctor{pt, Z2, {0}, {0}};
  auto bang = to_terminal(Z2);
  // pt -> pt x^h_{Z2} pt is not an equivalence: the loop space of BZ2 is Z2
  auto LP = level(pt), LZ = level(Z2);
  CHECK_FALSE(homotopy_cartesian(LP, LP, LZ, LP, lift(identity_functor(pt)), lift(identity_functor(pt)), lift(toZ2),
                                 lift(toZ2))
                  .ok);
  // Z2 -> Z2 x^h_pt pt is an equivalence
  CHECK(homotopy_cartesian(LZ, LZ, LP, LP, lift(identity_functor(Z2)), lift(bang), lift(bang),
                           lift(identity_functor(pt)))
            .ok);
  // two points -> EZ2 over pt -> BZ2: the fibre of EZ2 -> BZ2 is discrete of size 2
  auto two = action_groupoid(trivial_on(cyclic_group(1), 2), 0);
  auto EZ2 = action_groupoid(regular_action(cyclic_group(2)), 0);
  GroupoidFunctor incl{two, EZ2, {0, 1}, {0, 2}};
  GroupoidFunctor proj{EZ2, Z2, {0, 0}, {0, 1, 0, 1}};
  REQUIRE(validate_functor(incl).pass);
  REQUIRE(validate_functor(proj).pass);
  auto L2 = level(two), LE = level(EZ2);
  CHECK(homotopy_cartesian(L2, LE, LZ, LP, lift(incl), lift(to_terminal(two)), lift(proj), lift(toZ2)).ok);
  // one point is not enough
  GroupoidFunctor incl1{pt, EZ2, {0}, {0}};
  CHECK_FALSE(homotopy_cartesian(LP, LE, LZ, LP, lift(incl1), lift(identity_functor(pt)), lift(proj), lift(toZ2)).ok);
  // the pseudo-pullback has the right shape
  auto P = pseudo_pullback(proj, toZ2);
  CHECK(pi0_profile(P.P) == std::multiset<int>{1, 1});
  CHECK(equivalence(LZ, LZ, lift(identity_functor(Z2))).ok);
  CHECK_FALSE(equivalence(LZ, LP, lift(bang)).ok);
}

TEST_CASE("groupoid JSON roundtrip") {
  FinGroupoid G;
  G.objects = {"x", "y"};
  G.mor = {{"1x", 0, 0}, {"1y", 1, 1}, {"f", 0, 1}, {"g", 1, 0}};
  G.identity = {0, 1};
  G.inverse = {0, 1, 3, 2};
  G.comp = {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 0}, 2}, {{1, 2}, 2}, {{3, 1}, 3}, {{0, 3}, 3}, {{3, 2}, 0}, {{2, 3}, 1}};
  REQUIRE(validate_groupoid(G).pass);
  auto H = groupoid_from_json(to_json(G));
  CHECK(dump(to_json(H)) == dump(to_json(G)));
  json bad = to_json(G);
  bad["extra"] = 1;
  CHECK_THROWS_AS(groupoid_from_json(bad), InputError);
}
