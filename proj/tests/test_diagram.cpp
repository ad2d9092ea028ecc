#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/category.hpp"
#include "segal/diagram.hpp"
#include "segal/io.hpp"
#include "segal/protoexact.hpp"

#include <algorithm>

using namespace segal;

namespace {

std::vector<int> after(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> h;
  for (int x : f) h.push_back(g[x]);
  return h;
}

bool monotone(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

}  // namespace

TEST_CASE("coface and codegeneracy maps satisfy the cosimplicial identities") {
  for (int m = 2; m <= 6; ++m)
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) CHECK(after(face_map(m, j), face_map(m - 1, i)) == after(face_map(m, i), face_map(m - 1, j - 1)));
  for (int m = 0; m <= 5; ++m)
    for (int i = 0; i <= m; ++i) {
      CHECK(after(degen_map(m, i), face_map(m + 1, i)) == identity_map(m));
      CHECK(after(degen_map(m, i), face_map(m + 1, i + 1)) == identity_map(m));
      CHECK(monotone(degen_map(m, i)));
    }
  CHECK(face_map(3, 1) == std::vector<int>{0, 2, 3});
  CHECK(degen_map(2, 1) == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("doubling is functorial and commutes with the involution") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(double_map(n, identity_map(n)) == identity_map(2 * n + 1));
    for (int i = 0; i <= n; ++i) {
      auto d = double_map(n, face_map(n, i));
      CHECK(d == edge_face_map(n, i));
      CHECK(monotone(d));
      for (int k = 0; k < static_cast<int>(d.size()); ++k)
        CHECK(d[d.size() - 1 - k] == 2 * n + 1 - d[k]);
      for (int j = 0; j < n; ++j) {
        auto f = after(face_map(n, i), face_map(n - 1, j));
        CHECK(double_map(n, f) == after(double_map(n, face_map(n, i)), double_map(n - 1, face_map(n - 1, j))));
      }
    }
    for (int i = 0; i <= n; ++i) CHECK(double_map(n, degen_map(n, i)) == edge_degen_map(n, i));
  }
}

TEST_CASE("grid bookkeeping") {
  for (int n = 0; n <= 4; ++n) {
    Grid g{n};
    auto S = grid_shape(n);
    CHECK(S.nv == g.vertices());
    CHECK(static_cast<int>(S.slots.size()) == g.slots());
    std::vector<int> seen;
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) seen.push_back(g.vertex(i, j));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    for (int i = 0; i <= n; ++i)
      for (int j = i; j < n; ++j) {
        auto& s = S.slots[g.hslot(i, j)];
        CHECK(s.u == g.vertex(i, j));
        CHECK(s.w == g.vertex(i, j + 1));
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto& s = S.slots[g.vslot(i, j)];
        CHECK(s.u == g.vertex(i, j));
        CHECK(s.w == g.vertex(i + 1, j));
      }
  }
}

TEST_CASE("shape involutions are involutions") {
  for (int n = 0; n <= 4; ++n) {
    for (auto inv : {chain_involution(n), grid_involution(n)}) {
      for (size_t v = 0; v < inv.vstar.size(); ++v) CHECK(inv.vstar[inv.vstar[v]] == static_cast<int>(v));
      for (size_t s = 0; s < inv.sstar.size(); ++s) CHECK(inv.sstar[inv.sstar[s]] == static_cast<int>(s));
    }
    auto S = chain_shape(n);
    auto inv = chain_involution(n);
    for (size_t s = 0; s < S.slots.size(); ++s) {
      auto& a = S.slots[s];
      auto& b = S.slots[inv.sstar[s]];
      CHECK(b.u == inv.vstar[a.w]);
      CHECK(b.w == inv.vstar[a.u]);
    }
  }
}

TEST_CASE("categorified nerve of a poset is its nerve") {
  for (int p = 1; p <= 3; ++p) {
    auto C = std::make_shared<FinCategory>(poset_category(p));
    auto B = categorified_nerve(plain_context(C), 3);
    CHECK(validate_sgrpd(*B.X).pass);
    auto X = nerve(*C, 3);
    for (int n = 0; n <= 3; ++n) {
      CHECK(B.X->lvl[n]->classes() == X.size(n));
      CHECK(B.X->lvl[n]->mass() == Rat(X.size(n)));
    }
  }
}

TEST_CASE("categorified nerve of a group: one class per level") {
  for (auto& name : {"Z2", "Z3", "S3"}) {
    Group G = catalog_group(name);
    auto C = std::make_shared<FinCategory>(group_category(G));
    auto B = categorified_nerve(plain_context(C), 3);
    CHECK(validate_sgrpd(*B.X).pass);
    for (int n = 0; n <= 3; ++n) {
      REQUIRE(B.X->lvl[n]->classes() == 1);
      CHECK(static_cast<int>(B.X->lvl[n]->aut(0).size()) == G.order());
    }
    CHECK(check_2segal(*B.X, 3, true).pass());
    CHECK(check_1segal(*B.X, 3).pass());
  }
}

TEST_CASE("F_1 duality and identity twist") {
  auto C = vect_f1(3);
  auto ctx = f1_duality(C);
  CHECK(validate_duality(ctx->D).empty());
  CHECK(validate_twist(ctx->D, identity_twist(ctx->D)).empty());
  auto amb = ctx->amb();
  CHECK(Ambient::covariant("PP"));
  CHECK_FALSE(Ambient::covariant("P"));
  CHECK(Ambient::covariant(""));
  for (int a = 0; a <= 3; ++a) CHECK(amb.obj("PP", a) == a);
}

TEST_CASE("property: the chain reindexing is functorial on keys") {
  auto C = vect_f1(2);
  auto B = categorified_nerve(plain_context(C), 3);
  for (int n = 2; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int c = 0; c < B.X->lvl[n]->classes(); ++c) {
          Key x = B.X->lvl[n]->rep(c);
          // d_i d_j = d_{j-1} d_i on objects
          CHECK(B.X->face[n - 1][i].obj(B.X->face[n][j].obj(x)) == B.X->face[n - 1][j - 1].obj(B.X->face[n][i].obj(x)));
        }
}
