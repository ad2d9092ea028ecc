#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segal/exact.hpp"
#include "segal/protoexact.hpp"
#include "segal/segal_check.hpp"

#include "oracles.hpp"

#include <set>

using namespace segal;

namespace {

// partial injections [a] -> [b] by enumerating all partial functions
int partial_injections(int a, int b) {
  int total = 1, count = 0;
  for (int k = 0; k < a; ++k) total *= b + 1;
  for (int code = 0; code < total; ++code) {
    std::set<int> img;
    int c = code, defined = 0;
    for (int k = 0; k < a; ++k) {
      int v = c % (b + 1) - 1;
      c /= b + 1;
      if (v >= 0) {
        img.insert(v);
        ++defined;
      }
    }
    count += static_cast<int>(img.size()) == defined;
  }
  return count;
}

// all subspaces of F_q^n
int subspace_count(int q, int n) {
  int total = 0;
  for (int k = 0; k <= n; ++k) total += oracle::subspaces_of_dim(q, n, k);
  return total;
}

Int gl_order(int q, int n) {
  Int r = 1, qn = 1;
  for (int k = 0; k < n; ++k) qn *= q;
  Int qk = 1;
  for (int k = 0; k < n; ++k) {
    r *= qn - qk;
    qk *= q;
  }
  return r;
}

}  // namespace

TEST_CASE("F_1 hom sets are partial injections") {
  auto C = vect_f1(3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      CHECK(static_cast<int>(C->homs(a, b).size()) == partial_injections(a, b));
      for (Code f : C->homs(a, b)) CHECK(f1_encode(b, f1_decode(a, b, f)) == f);
    }
  Int fact = 1;
  for (int a = 0; a <= 3; ++a) {
    if (a > 0) fact *= a;
    CHECK(C->aut_order(a) == fact);
    CHECK(C->aut_order(a) == Int(C->isos(a, a).size()));
  }
}

TEST_CASE("F_q automorphism groups") {
  for (int q : {2, 3}) {
    auto C = vect_fq(q, 2);
    for (int n = 0; n <= 2; ++n) {
      CHECK(C->aut_order(n) == gl_order(q, n));
      CHECK(C->aut_order(n) == Int(C->isos(n, n).size()));
    }
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        CHECK(static_cast<int>(C->homs(a, b).size()) == oracle::ipow(q, a * b));
        for (Code f : C->homs(a, b)) CHECK(fq_encode(q, fq_decode(q, a, b, f), a) == f);
      }
  }
  CHECK_THROWS_AS(vect_fq(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(vect_f1(-1), std::invalid_argument);
}

TEST_CASE("inflations and deflations") {
  auto C = vect_fq(2, 2);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (Code f : C->homs(a, b)) {
        int r = oracle::rank_mod(fq_decode(2, a, b, f), 2);
        CHECK(C->is_inflation(a, b, f) == (r == a));
        CHECK(C->is_deflation(a, b, f) == (r == b));
      }
  auto F = vect_f1(3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (Code f : F->homs(a, b)) {
        auto v = f1_decode(a, b, f);
        int defined = 0;
        for (int x : v) defined += x >= 0;
        CHECK(F->is_inflation(a, b, f) == (defined == a));
        CHECK(F->is_deflation(a, b, f) == (defined == b));
      }
}

TEST_CASE("subobject counts") {
  auto F = vect_f1(4);
  for (int w = 0; w <= 4; ++w) CHECK(static_cast<int>(F->subobjects(w).size()) == oracle::ipow(2, w));
  for (int q : {2, 3}) {
    auto C = vect_fq(q, 2);
    for (int w = 0; w <= 2; ++w) CHECK(static_cast<int>(C->subobjects(w).size()) == subspace_count(q, w));
  }
  CHECK(subspace_count(2, 3) == 16);
}

TEST_CASE("axioms hold on the instances and fail on the corrupted one") {
  CHECK(validate_protoexact(*vect_f1(3), 3).pass);
  CHECK(validate_protoexact(*vect_fq(2, 2), 2).pass);
  CHECK(validate_protoexact(*vect_fq(3, 1), 1).pass);
  auto bad = validate_protoexact(*corrupted_deflations(vect_f1(3)), 3);
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations[0].find("axiom") == 0);
}

TEST_CASE("completed squares are biCartesian") {
  for (auto C : {vect_f1(3), vect_fq(2, 2)}) {
    const int B = C->bound();
    for (int V = 0; V <= B; ++V)
      for (auto& sub : C->subobjects(V)) {
        // pushout along the deflation U ->> 0
        auto s = C->complete_pushout(sub.U, V, 0, sub.i, C->zero_map(sub.U, 0));
        CHECK(C->commutes(s));
        CHECK(C->is_bicartesian(s));
        CHECK(is_cartesian(*C, s, B));
        CHECK(is_cocartesian(*C, s, B));
      }
  }
}

TEST_CASE("dualities") {
  auto F = vect_f1(3);
  auto ctx = f1_duality(F);
  CHECK(validate_duality(ctx->D).empty());
  CHECK(validate_exact_duality(*F, ctx->D, 3).pass);
  auto C = vect_fq(3, 2);
  for (int sign : {1, -1}) {
    auto d = fq_duality(C, sign);
    CHECK(validate_duality(d->D).empty());
    CHECK(validate_exact_duality(*C, d->D, 2).pass);
  }
}

TEST_CASE("isotropic reduction over F_1") {
  auto F = vect_f1(2);
  auto ctx = f1_duality(F);
  // the hyperbolic form on 2 swaps the points
  Code hyper = -1;
  for (Code psi : F->isos(2, 2))
    if (f1_decode(2, 2, psi) == std::vector<int>{1, 0}) hyper = psi;
  REQUIRE(hyper >= 0);
  Code incl = F->std_inflation(1, 2);
  auto r = isotropic_reduction(*F, ctx->D, 2, hyper, 1, incl);
  REQUIRE(r.ok);
  CHECK(r.M == 0);
  CHECK(r.perp == 1);
  // the diagonal form has no isotropic point
  Code diag = F->identity(2);
  CHECK_FALSE(isotropic_reduction(*F, ctx->D, 2, diag, 1, incl).ok);
}

TEST_CASE("stability") {
  auto C = vect_fq(2, 2);
  StabilityFraming bad{{{0, -1}}, {1}};
  CHECK_FALSE(stability_report(*C, bad, 1, 0).valid_zeta);
  CHECK_THROWS_AS(stable_framed_S(C, bad, 2), std::invalid_argument);
  StabilityFraming SF{{{0, 1}}, {1}};
  // k -> k nonzero is stable framed; the zero section is not
  Code one = C->identity(1);
  CHECK(stability_report(*C, SF, 1, one).stable_framed);
  CHECK_FALSE(stability_report(*C, SF, 1, C->zero_map(1, 1)).stable_framed);
  // a single phase: everything semistable, a line generates k^2 only when it is all of it
  auto line = stability_report(*C, SF, 2, C->std_inflation(1, 2));
  CHECK(line.semistable);
  CHECK_FALSE(line.stable_framed);
  CHECK_THROWS_AS(stable_framed_S(C, StabilityFraming{{{0, 1}}, {5}}, 2), std::invalid_argument);
}

TEST_CASE("Waldhausen construction at small size") {
  auto S = waldhausen_S(vect_f1(2), 3);
  CHECK(validate_sgrpd(*S.X).pass);
  CHECK(S.X->lvl[0]->classes() == 1);
  CHECK(S.X->lvl[1]->classes() == 3);
  // S_2: conflations U >-> W ->> V up to iso, one per (U, V) with |U| + |V| <= 2
  CHECK(S.X->lvl[2]->classes() == 6);
  CHECK(check_2segal(*S.X, 3, true).pass());
  auto T = waldhausen_S(vect_fq(2, 1), 3);
  CHECK(check_2segal(*T.X, 3, true).pass());
}

TEST_CASE("hermitian construction at small size") {
  auto C = vect_f1(2);
  auto R = hermitian_R(C, f1_duality(C), 2);
  CHECK(validate_sgrpd_map(*R.F).pass);
  CHECK(check_rel2segal(*R.F, 2, true).pass());
  auto D = vect_fq(3, 1);
  auto Q = hermitian_R(D, fq_duality(D, 1), 2);
  CHECK(check_rel2segal(*Q.F, 2, true).pass());
}

TEST_CASE("stable framed construction at small size") {
  auto C = vect_fq(2, 1);
  auto R = stable_framed_S(C, StabilityFraming{{{0, 1}}, {1}}, 2);
  CHECK(validate_sgrpd_map(*R.F).pass);
  CHECK(check_rel2segal(*R.F, 2, true).pass());
  auto S = waldhausen_S(C, 3);
  auto forget = forget_framing(R, S);
  CHECK(forget.size() == 3u);
}
