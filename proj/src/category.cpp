#include "segal/category.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace segal {

std::vector<Code> FinCategory::homs(int a, int b) const {
  std::vector<Code> out;
  for (int m = 0; m < static_cast<int>(mor.size()); ++m)
    if (mor[m].src == a && mor[m].tgt == b) out.push_back(m);
  return out;
}

Code FinCategory::compose(int, int, int, Code g, Code f) const {
  return comp.at({static_cast<int>(g), static_cast<int>(f)});
}

bool FinCategory::valid(int a, int b, Code f) const {
  return f >= 0 && f < static_cast<Code>(mor.size()) && mor[f].src == a && mor[f].tgt == b;
}

std::string FinCategory::show(int, int, Code f) const { return mor.at(f).id; }

int FinCategory::find_object(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(objects.size()); ++i)
    if (objects[i] == id) return i;
  return -1;
}

int FinCategory::find_morphism(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(mor.size()); ++i)
    if (mor[i].id == id) return i;
  return -1;
}

int FinCategory::compose_ids(int g, int f) const {
  auto it = comp.find({g, f});
  return it == comp.end() ? -1 : it->second;
}

std::string validate_category(const FinCategory& C) {
  const int no = C.object_count(), nm = static_cast<int>(C.mor.size());
  if (static_cast<int>(C.ident.size()) != no) return "identity table has wrong length";
  for (int m = 0; m < nm; ++m)
    if (C.mor[m].src < 0 || C.mor[m].src >= no || C.mor[m].tgt < 0 || C.mor[m].tgt >= no)
      return "morphism " + C.mor[m].id + " has an unknown endpoint";
  for (int a = 0; a < no; ++a) {
    int e = C.ident[a];
    if (e < 0 || e >= nm || C.mor[e].src != a || C.mor[e].tgt != a) return "identity of " + C.objects[a] + " ill-typed";
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      bool composable = C.mor[f].tgt == C.mor[g].src;
      int h = C.compose_ids(g, f);
      if (composable != (h >= 0)) return "composition of " + C.mor[g].id + " o " + C.mor[f].id + " mis-specified";
      if (!composable) continue;
      if (h >= nm || C.mor[h].src != C.mor[f].src || C.mor[h].tgt != C.mor[g].tgt)
        return "composite " + C.mor[g].id + " o " + C.mor[f].id + " ill-typed";
    }
  for (int f = 0; f < nm; ++f) {
    if (C.compose_ids(C.ident[C.mor[f].tgt], f) != f || C.compose_ids(f, C.ident[C.mor[f].src]) != f)
      return "unit law fails at " + C.mor[f].id;
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (C.mor[f].tgt != C.mor[g].src) continue;
      int gf = C.compose_ids(g, f);
      for (int h = 0; h < nm; ++h) {
        if (C.mor[g].tgt != C.mor[h].src) continue;
        if (C.compose_ids(h, gf) != C.compose_ids(C.compose_ids(h, g), f))
          return "associativity fails at (" + C.mor[h].id + ", " + C.mor[g].id + ", " + C.mor[f].id + ")";
      }
    }
  return {};
}

FinCategory poset_category(int n) {
  FinCategory C;
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i <= n; ++i) C.objects.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      idx[{i, j}] = static_cast<int>(C.mor.size());
      C.mor.push_back({std::to_string(i) + "-" + std::to_string(j), i, j});
    }
  for (int i = 0; i <= n; ++i) C.ident.push_back(idx[{i, i}]);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) C.comp[{idx[{j, k}], idx[{i, j}]}] = idx[{i, k}];
  return C;
}

FinCategory group_category(const Group& G) {
  FinCategory C;
  C.objects = {"*"};
  for (int g = 0; g < G.order(); ++g) C.mor.push_back({G.names[g], 0, 0});
  C.ident = {G.e};
  for (int g = 0; g < G.order(); ++g)
    for (int f = 0; f < G.order(); ++f) C.comp[{g, f}] = G.mul[g][f];
  return C;
}

FinCategory arrow_category(const FinCategory& C) {
  FinCategory A;
  const int nm = static_cast<int>(C.mor.size());
  for (auto& m : C.mor) A.objects.push_back(m.id);
  // a morphism f -> f' is (u, v) with v f = f' u
  std::map<std::tuple<int, int, int, int>, int> idx;  // (u, v, f, f')
  std::vector<std::pair<int, int>> uv;
  for (int f = 0; f < nm; ++f)
    for (int f2 = 0; f2 < nm; ++f2)
      for (int u = 0; u < nm; ++u) {
        if (C.mor[u].src != C.mor[f].src || C.mor[u].tgt != C.mor[f2].src) continue;
        for (int v = 0; v < nm; ++v) {
          if (C.mor[v].src != C.mor[f].tgt || C.mor[v].tgt != C.mor[f2].tgt) continue;
          if (C.compose_ids(v, f) != C.compose_ids(f2, u)) continue;
          idx[{u, v, f, f2}] = static_cast<int>(A.mor.size());
          A.mor.push_back({"(" + C.mor[u].id + "," + C.mor[v].id + ")", f, f2});
          uv.push_back({u, v});
        }
      }
  for (int f = 0; f < nm; ++f) A.ident.push_back(idx.at({C.ident[C.mor[f].src], C.ident[C.mor[f].tgt], f, f}));
  for (int a = 0; a < static_cast<int>(A.mor.size()); ++a)
    for (int b = 0; b < static_cast<int>(A.mor.size()); ++b) {
      if (A.mor[a].tgt != A.mor[b].src) continue;
      int u = C.compose_ids(uv[b].first, uv[a].first);
      int v = C.compose_ids(uv[b].second, uv[a].second);
      A.comp[{b, a}] = idx.at({u, v, A.mor[a].src, A.mor[b].tgt});
    }
  return A;
}

FinCategory opposite(const FinCategory& C) {
  FinCategory O;
  O.objects = C.objects;
  for (auto& m : C.mor) O.mor.push_back({m.id, m.tgt, m.src});
  O.ident = C.ident;
  for (auto& [gf, h] : C.comp) O.comp[{gf.second, gf.first}] = h;
  return O;
}

std::string validate_cat_functor(const CatFunctor& F) {
  if (F.obj.size() != F.src.objects.size() || F.mor.size() != F.src.mor.size()) return "functor tables have wrong length";
  for (int m = 0; m < static_cast<int>(F.src.mor.size()); ++m) {
    const auto& a = F.src.mor[m];
    const auto& b = F.tgt.mor.at(F.mor[m]);
    if (b.src != F.obj[a.src] || b.tgt != F.obj[a.tgt]) return "functor breaks endpoints of " + a.id;
  }
  for (int x = 0; x < static_cast<int>(F.src.objects.size()); ++x)
    if (F.mor[F.src.ident[x]] != F.tgt.ident[F.obj[x]]) return "functor breaks identity of " + F.src.objects[x];
  for (auto& [gf, h] : F.src.comp)
    if (F.tgt.compose_ids(F.mor[gf.first], F.mor[gf.second]) != F.mor[h])
      return "functor breaks composition " + F.src.mor[gf.first].id + " o " + F.src.mor[gf.second].id;
  return {};
}

namespace {

std::vector<std::vector<std::vector<int>>> chains(const FinCategory& C, int N) {
  std::vector<std::vector<std::vector<int>>> L(N + 1);
  for (int x = 0; x < C.object_count(); ++x) L[0].push_back({x});
  if (N >= 1)
    for (int m = 0; m < static_cast<int>(C.mor.size()); ++m) L[1].push_back({m});
  for (int n = 2; n <= N; ++n)
    for (auto& c : L[n - 1])
      for (int m = 0; m < static_cast<int>(C.mor.size()); ++m)
        if (C.mor[m].src == C.mor[c.back()].tgt) {
          auto d = c;
          d.push_back(m);
          L[n].push_back(d);
        }
  return L;
}

std::string chain_id(const FinCategory& C, int n, const std::vector<int>& c) {
  if (n == 0) return C.objects[c[0]];
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "|" : "") + C.mor[c[k]].id;
  return s;
}

std::vector<int> chain_face(const FinCategory& C, int n, int i, const std::vector<int>& c) {
  if (n == 1) return {i == 0 ? C.mor[c[0]].tgt : C.mor[c[0]].src};
  std::vector<int> d;
  for (int k = 0; k < n; ++k) {
    // vertex i sits between c[i-1] and c[i]
    if (i == 0 && k == 0) continue;
    if (i == n && k == n - 1) continue;
    if (i > 0 && i < n && k == i - 1) {
      d.push_back(C.compose_ids(c[i], c[i - 1]));
      ++k;
      continue;
    }
    d.push_back(c[k]);
  }
  return d;
}

std::vector<int> chain_degen(const FinCategory& C, int n, int i, const std::vector<int>& c) {
  if (n == 0) return {C.ident[c[0]]};
  int v = i < n ? C.mor[c[i]].src : C.mor[c[n - 1]].tgt;
  std::vector<int> d = c;
  d.insert(d.begin() + i, C.ident[v]);
  return d;
}

}  // namespace

SSet nerve(const FinCategory& C, int N) {
  auto L = chains(C, N);
  SSet X;
  X.N = N;
  X.semi = false;
  std::vector<std::map<std::vector<int>, int>> idx(N + 1);
  X.ids.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (auto& c : L[n]) {
      idx[n][c] = static_cast<int>(X.ids[n].size());
      X.ids[n].push_back(chain_id(C, n, c));
    }
  X.face.resize(N + 1);
  X.degen.resize(N);
  for (int n = 1; n <= N; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(L[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < L[n].size(); ++k) X.face[n][i][k] = idx[n - 1].at(chain_face(C, n, i, L[n][k]));
  }
  for (int n = 0; n < N; ++n) {
    X.degen[n].assign(n + 1, std::vector<int>(L[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < L[n].size(); ++k) X.degen[n][i][k] = idx[n + 1].at(chain_degen(C, n, i, L[n][k]));
  }
  return X;
}

SMap nerve_map(const CatFunctor& F, int N) {
  SMap M;
  M.src = nerve(F.src, N);
  M.tgt = nerve(F.tgt, N);
  auto L = chains(F.src, N);
  auto T = chains(F.tgt, N);
  M.comp.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::map<std::vector<int>, int> tidx;
    for (std::size_t k = 0; k < T[n].size(); ++k) tidx[T[n][k]] = static_cast<int>(k);
    for (auto& c : L[n]) {
      std::vector<int> d;
      for (int m : c) d.push_back(n == 0 ? F.obj[m] : F.mor[m]);
      M.comp[n].push_back(tidx.at(d));
    }
  }
  return M;
}

FinCategory nerve_to_category(const SSet& X) {
  if (X.N < 2) throw std::invalid_argument("nerve_to_category needs levels up to 2");
  FinCategory C;
  C.objects = X.ids[0];
  for (int m = 0; m < X.size(1); ++m) C.mor.push_back({X.ids[1][m], X.d(1, 1, m), X.d(1, 0, m)});
  if (X.semi) throw std::invalid_argument("nerve_to_category needs degeneracies");
  for (int x = 0; x < X.size(0); ++x) C.ident.push_back(X.s(0, 0, x));
  std::map<std::pair<int, int>, int> spine;  // (f, g) -> 2-simplex
  for (int t = 0; t < X.size(2); ++t) {
    std::pair<int, int> key{X.d(2, 2, t), X.d(2, 0, t)};
    if (!spine.emplace(key, t).second)
      throw std::invalid_argument("not 1-Segal: two 2-simplices over " + X.ids[1][key.first] + ", " + X.ids[1][key.second]);
  }
  for (int f = 0; f < X.size(1); ++f)
    for (int g = 0; g < X.size(1); ++g) {
      if (X.d(1, 0, f) != X.d(1, 1, g)) continue;
      auto it = spine.find({f, g});
      if (it == spine.end())
        throw std::invalid_argument("not 1-Segal: no 2-simplex over " + X.ids[1][f] + ", " + X.ids[1][g]);
      C.comp[{g, f}] = X.d(2, 1, it->second);
    }
  return C;
}

SMap spine_comparison(const SSet& X, const FinCategory& C) {
  SMap M;
  M.src = X;
  M.tgt = nerve(C, X.N);
  M.comp.resize(X.N + 1);
  for (int n = 0; n <= X.N; ++n)
    for (int k = 0; k < X.size(n); ++k) {
      std::string id;
      if (n == 0) {
        id = X.ids[0][k];
      } else {
        for (int i = 0; i < n; ++i) {
          int e = restrict_simplex(X, n, k, {i, i + 1});
          id += (i ? "|" : "") + C.mor[e].id;
        }
      }
      M.comp[n].push_back(M.tgt.find(n, id));
    }
  return M;
}

bool is_isomorphism(const SMap& F) {
  if (!validate_map(F).pass) return false;
  for (int n = 0; n <= F.src.N; ++n) {
    if (F.src.size(n) != F.tgt.size(n)) return false;
    std::set<int> img(F.comp[n].begin(), F.comp[n].end());
    if (static_cast<int>(img.size()) != F.src.size(n) || img.count(-1)) return false;
  }
  return true;
}

bool same_category(const FinCategory& a, const FinCategory& b, std::string* why) {
  auto fail = [&](std::string w) {
    if (why) *why = std::move(w);
    return false;
  };
  if (std::set<std::string>(a.objects.begin(), a.objects.end()) !=
      std::set<std::string>(b.objects.begin(), b.objects.end()))
    return fail("object sets differ");
  if (a.mor.size() != b.mor.size()) return fail("morphism counts differ");
  std::vector<int> mm(a.mor.size());
  for (std::size_t m = 0; m < a.mor.size(); ++m) {
    int k = b.find_morphism(a.mor[m].id);
    if (k < 0) return fail("missing morphism " + a.mor[m].id);
    if (a.objects[a.mor[m].src] != b.objects[b.mor[k].src] || a.objects[a.mor[m].tgt] != b.objects[b.mor[k].tgt])
      return fail("endpoints differ for " + a.mor[m].id);
    mm[m] = k;
  }
  for (int x = 0; x < a.object_count(); ++x)
    if (mm[a.ident[x]] != b.ident[b.find_object(a.objects[x])]) return fail("identity differs at " + a.objects[x]);
  for (auto& [gf, h] : a.comp)
    if (b.compose_ids(mm[gf.first], mm[gf.second]) != mm[h])
      return fail("composition differs at " + a.mor[gf.first].id + " o " + a.mor[gf.second].id);
  return true;
}

std::string validate_presheaf(const Presheaf& F) {
  const FinCategory& C = F.base;
  if (F.values.size() != C.objects.size() || F.restrict.size() != C.mor.size()) return "presheaf tables have wrong length";
  for (int m = 0; m < static_cast<int>(C.mor.size()); ++m) {
    const auto& r = F.restrict[m];
    if (r.size() != F.values[C.mor[m].tgt].size()) return "restriction along " + C.mor[m].id + " not total";
    for (int v : r)
      if (v < 0 || v >= static_cast<int>(F.values[C.mor[m].src].size()))
        return "restriction along " + C.mor[m].id + " leaves its codomain";
  }
  for (int x = 0; x < C.object_count(); ++x)
    for (int v = 0; v < static_cast<int>(F.values[x].size()); ++v)
      if (F.restrict[C.ident[x]][v] != v) return "identity of " + C.objects[x] + " acts nontrivially";
  for (auto& [gf, h] : C.comp) {
    auto [g, f] = gf;
    for (int v = 0; v < static_cast<int>(F.values[C.mor[g].tgt].size()); ++v)
      if (F.restrict[h][v] != F.restrict[f][F.restrict[g][v]])
        return "restriction not functorial at " + C.mor[g].id + " o " + C.mor[f].id;
  }
  return {};
}

CatFunctor grothendieck(const Presheaf& F) {
  if (auto err = validate_presheaf(F); !err.empty()) throw std::invalid_argument(err);
  const FinCategory& C = F.base;
  CatFunctor P;
  P.tgt = C;
  FinCategory& E = P.src;
  std::map<std::pair<int, int>, int> oidx;
  for (int c = 0; c < C.object_count(); ++c)
    for (int v = 0; v < static_cast<int>(F.values[c].size()); ++v) {
      oidx[{c, v}] = static_cast<int>(E.objects.size());
      E.objects.push_back(C.objects[c] + ":" + F.values[c][v]);
      P.obj.push_back(c);
    }
  // morphism (x : c1 -> c2, v2) goes from (c1, F(x)(v2)) to (c2, v2)
  std::map<std::pair<int, int>, int> midx;
  for (int x = 0; x < static_cast<int>(C.mor.size()); ++x) {
    int c1 = C.mor[x].src, c2 = C.mor[x].tgt;
    for (int v2 = 0; v2 < static_cast<int>(F.values[c2].size()); ++v2) {
      midx[{x, v2}] = static_cast<int>(E.mor.size());
      E.mor.push_back({C.mor[x].id + "@" + F.values[c2][v2], oidx.at({c1, F.restrict[x][v2]}), oidx.at({c2, v2})});
      P.mor.push_back(x);
    }
  }
  for (int c = 0; c < C.object_count(); ++c)
    for (int v = 0; v < static_cast<int>(F.values[c].size()); ++v) E.ident.push_back(midx.at({C.ident[c], v}));
  for (auto& [xv, a] : midx)
    for (auto& [yw, b] : midx) {
      auto [x, v2] = xv;
      auto [y, v3] = yw;
      if (C.mor[y].src != C.mor[x].tgt || F.restrict[y][v3] != v2) continue;
      E.comp[{b, a}] = midx.at({C.compose_ids(y, x), v3});
    }
  return P;
}

FibrationVerdict is_discrete_right_fibration(const CatFunctor& F) {
  FibrationVerdict r;
  for (int y = 0; y < F.src.object_count(); ++y)
    for (int x = 0; x < static_cast<int>(F.tgt.mor.size()); ++x) {
      if (F.tgt.mor[x].tgt != F.obj[y]) continue;
      int lifts = 0;
      for (int m = 0; m < static_cast<int>(F.src.mor.size()); ++m)
        if (F.src.mor[m].tgt == y && F.mor[m] == x) ++lifts;
      if (lifts != 1) {
        r.ok = false;
        r.witness = std::to_string(lifts) + " lifts of " + F.tgt.mor[x].id + " ending at " + F.src.objects[y];
        return r;
      }
    }
  return r;
}

CatFunctor target_projection(const FinCategory& C) {
  CatFunctor P;
  P.src = arrow_category(C);
  P.tgt = C;
  for (auto& m : C.mor) P.obj.push_back(m.tgt);
  for (auto& m : P.src.mor) {
    // id is "(u,v)"
    std::string inner = m.id.substr(1, m.id.size() - 2);
    std::string v = inner.substr(inner.find(',') + 1);
    P.mor.push_back(C.find_morphism(v));
  }
  return P;
}

ContextPtr plain_context(std::shared_ptr<const BaseCategory> C) {
  auto ctx = std::make_shared<Context>();
  ctx->C = std::move(C);
  return ctx;
}

namespace {

// layout helpers for keys [vertices..., slots...]
Key chain_key(const std::vector<int>& xs, const std::vector<Code>& fs) {
  Key k(xs.begin(), xs.end());
  k.insert(k.end(), fs.begin(), fs.end());
  return k;
}

std::vector<int> object_reps(const BaseCategory& C) {
  std::vector<int> out;
  for (int a = 0; a < C.object_count(); ++a)
    if (C.iso_class(a) == a) out.push_back(a);
  return out;
}

// chains of length n starting from the reps of level n-1
std::vector<Key> chain_cover(const BaseCategory& C, int n, const SGrpd* prev) {
  std::vector<Key> out;
  if (n == 0) {
    for (int a : object_reps(C)) out.push_back({a});
    return out;
  }
  const Level& L = *prev->lvl[n - 1];
  for (int c = 0; c < L.classes(); ++c) {
    Key r = L.rep(c);
    std::vector<int> xs(r.begin(), r.begin() + n);
    std::vector<Code> fs(r.begin() + n, r.end());
    for (int b : object_reps(C))
      for (Code f : C.homs(xs.back(), b)) {
        auto x2 = xs;
        x2.push_back(b);
        auto f2 = fs;
        f2.push_back(f);
        out.push_back(chain_key(x2, f2));
      }
  }
  return out;
}

// chain slots 0..n-1 and a last slot n : x_n -> T(x_0)
Reindex cyclic_reindex(int n, const std::vector<int>& phi) {
  Reindex r = chain_reindex(n, phi);
  const int m = static_cast<int>(phi.size()) - 1;
  SlotExpr e;
  for (int j = phi[m]; j < n; ++j) e.steps.push_back({j, ""});
  e.steps.push_back({n, ""});
  for (int j = 0; j < phi[0]; ++j) e.steps.push_back({j, "T"});
  r.slots.push_back(e);
  return r;
}

// normal forms of U_n over the chain reps of the categorified nerve
std::vector<Key> unoriented_cover(const Ambient& amb, int n, const Level& chains_n) {
  const BaseCategory& C = *amb.C;
  const Duality& D = *amb.D;
  const int M = 2 * n + 1;
  std::vector<Key> out;
  for (int c = 0; c < chains_n.classes(); ++c) {
    Key r = chains_n.rep(c);
    std::vector<int> xs(M + 1);
    std::vector<Code> fs(M);
    for (int k = 0; k <= n; ++k) {
      xs[k] = static_cast<int>(r[k]);
      xs[M - k] = D.obj(xs[k]);
    }
    for (int k = 0; k < n; ++k) {
      fs[k] = r[n + 1 + k];
      // slot M-1-k : P(x_{k+1}) -> P(x_k)
      fs[M - 1 - k] = D.mor(xs[k], xs[k + 1], fs[k]);
    }
    std::vector<Code> forms(M + 1);
    for (int k = 0; k <= n; ++k) {
      forms[k] = D.theta(xs[k]);
      forms[M - k] = C.identity(xs[M - k]);
    }
    int xn = xs[n], pxn = D.obj(xn);
    for (Code g : C.homs(xn, pxn)) {
      // P(g) Theta = g
      if (C.compose(xn, D.obj(pxn), pxn, D.mor(xn, pxn, g), D.theta(xn)) != g) continue;
      fs[n] = g;
      Key k = chain_key(xs, fs);
      k.insert(k.end(), forms.begin(), forms.end());
      out.push_back(k);
    }
  }
  return out;
}

bool twisted_form_condition(const Ambient& amb, int M, int last, int base, const Key& x) {
  const BaseCategory& C = *amb.C;
  const Duality& D = *amb.D;
  const Twist& W = *amb.W;
  int x0 = static_cast<int>(x[0]), z = static_cast<int>(x[M]);
  const int nv = M + 1;
  Code h = x[nv + last];
  Code psi0 = x[nv + base], psiz = x[nv + base + M];
  int tx0 = W.obj(x0), pz = D.obj(z), tpz = W.obj(pz);
  Code lhs = C.compose(z, tx0, tpz, W.mor(x0, pz, psi0), h);
  int px0 = D.obj(x0), ptx0 = D.obj(tx0), tptx0 = W.obj(ptx0);
  Code ph = D.mor(z, tx0, h);               // P T x0 -> P z
  Code tph = W.mor(ptx0, pz, ph);           // T P T x0 -> T P z
  Code pstar = C.compose(px0, tptx0, tpz, tph, W.lambda(x0));
  Code rhs = C.compose(z, px0, tpz, pstar, psiz);
  return lhs == rhs;
}

}  // namespace

Built categorified_nerve(ContextPtr ctx, int N) {
  Construction c;
  c.name = "N";
  c.N = N;
  c.shape = chain_shape;
  c.cover = [ctx](int n, const SGrpd& X) { return chain_cover(*ctx->C, n, &X); };
  c.reindex = chain_reindex;
  return assemble(ctx, c);
}

std::shared_ptr<DiagramGroupoid> hermitian_diagrams(ContextPtr ctx) {
  Shape shape;
  shape.nv = 1;
  shape.fixed = {false};
  ShapeInvolution inv{{0}, {}};
  add_form_slots(shape, inv);
  auto pred = [ctx, shape, inv](const Key& x) { return forms_valid(ctx->amb(), shape, x, 0, inv); };
  auto cover = [ctx, shape, inv]() {
    std::vector<Key> out;
    for (int a : object_reps(*ctx->C))
      for (auto& k : enumerate_forms(ctx->amb(), shape, 0, inv, {a})) out.push_back(k);
    return out;
  };
  return std::make_shared<DiagramGroupoid>(ctx->amb(), shape, pred, cover);
}

FinGroupoid hermitian_groupoid(ContextPtr ctx) {
  auto G = hermitian_diagrams(ctx);
  return to_explicit(*G, G->cover());
}

RelativeBuilt unoriented_nerve(ContextPtr ctx, int N) {
  RelativeBuilt R;
  Built chains2 = categorified_nerve(ctx, N);
  R.X = chains2;
  auto nerveX = chains2.X;
  Construction c;
  c.name = "U";
  c.N = N;
  c.shape = [](int n) {
    const int M = 2 * n + 1;
    Shape s = chain_shape(M);
    add_form_slots(s, chain_involution(M));
    return s;
  };
  c.valid = [](const Ambient& amb, const Shape& s, int n, const Key& x) {
    const int M = 2 * n + 1;
    return forms_valid(amb, s, x, M, chain_involution(M));
  };
  c.cover = [ctx, nerveX](int n, const SGrpd&) { return unoriented_cover(ctx->amb(), n, *nerveX->lvl[n]); };
  c.reindex = [](int n, const std::vector<int>& phi) {
    auto psi = double_map(n, phi);
    Reindex r = chain_reindex(2 * n + 1, psi);
    add_form_steps(r, 2 * n + 1);
    return r;
  };
  R.Y = assemble(ctx, c);
  R.F = reindex_map(R.Y, R.X, [](int n) { return chain_reindex(2 * n + 1, identity_map(n)); });
  return R;
}

Built twisted_cyclic_nerve(ContextPtr ctx, int N) {
  Built chains2 = categorified_nerve(ctx, N);
  auto nerveX = chains2.X;
  Construction c;
  c.name = "NC";
  c.N = N;
  c.shape = [](int n) {
    Shape s = chain_shape(n);
    s.slots.push_back({n, "", 0, "T"});
    return s;
  };
  c.cover = [ctx, nerveX](int n, const SGrpd&) {
    const BaseCategory& C = *ctx->C;
    const Level& L = *nerveX->lvl[n];
    std::vector<Key> out;
    for (int k = 0; k < L.classes(); ++k) {
      Key r = L.rep(k);
      int x0 = static_cast<int>(r[0]), xn = static_cast<int>(r[n]);
      for (Code f : C.homs(xn, ctx->W.obj(x0))) {
        Key y = r;
        y.push_back(f);
        out.push_back(y);
      }
    }
    return out;
  };
  c.reindex = cyclic_reindex;
  return assemble(ctx, c);
}

RelativeBuilt unoriented_twisted_cyclic_nerve(ContextPtr ctx, int N) {
  RelativeBuilt R;
  R.X = twisted_cyclic_nerve(ctx, N);
  Built chains2 = categorified_nerve(ctx, N);
  auto nerveX = chains2.X;
  Construction c;
  c.name = "NU";
  c.N = N;
  c.shape = [](int n) {
    const int M = 2 * n + 1;
    Shape s = chain_shape(M);
    s.slots.push_back({M, "", 0, "T"});
    add_form_slots(s, chain_involution(M));
    return s;
  };
  c.valid = [](const Ambient& amb, const Shape& s, int n, const Key& x) {
    const int M = 2 * n + 1;
    return forms_valid(amb, s, x, M + 1, chain_involution(M)) && twisted_form_condition(amb, M, M, M + 1, x);
  };
  c.cover = [ctx, nerveX](int n, const SGrpd&) {
    const int M = 2 * n + 1;
    const Ambient amb = ctx->amb();
    std::vector<Key> out;
    for (const Key& u : unoriented_cover(amb, n, *nerveX->lvl[n])) {
      int x0 = static_cast<int>(u[0]), z = static_cast<int>(u[M]);
      for (Code h : amb.C->homs(z, ctx->W.obj(x0))) {
        // insert the last slot before the forms
        Key k(u.begin(), u.begin() + (M + 1) + M);
        k.push_back(h);
        k.insert(k.end(), u.begin() + (M + 1) + M, u.end());
        if (twisted_form_condition(amb, M, M, M + 1, k)) out.push_back(k);
      }
    }
    return out;
  };
  c.reindex = [](int n, const std::vector<int>& phi) {
    auto psi = double_map(n, phi);
    Reindex r = cyclic_reindex(2 * n + 1, psi);
    add_form_steps(r, 2 * n + 2);
    return r;
  };
  R.Y = assemble(ctx, c);
  R.F = reindex_map(R.Y, R.X, [](int n) { return cyclic_reindex(2 * n + 1, identity_map(n)); });
  return R;
}

namespace {

int tuple_index(const std::vector<int>& t, int points) {
  int idx = 0;
  for (int v : t) idx = idx * points + v;
  return idx;
}

std::vector<int> tuple_of(int idx, int len, int points) {
  std::vector<int> t(len);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = idx % points;
    idx /= points;
  }
  return t;
}

Functor tuple_reindex(const std::vector<int>& phi, int n, int points, int ng) {
  Functor F;
  auto map_obj = [phi, n, points](std::int64_t x) {
    auto t = tuple_of(static_cast<int>(x), n + 1, points);
    std::vector<int> u;
    for (int k : phi) u.push_back(t[k]);
    return static_cast<std::int64_t>(tuple_index(u, points));
  };
  F.obj = [map_obj](const Key& x) { return Key{map_obj(x[0])}; };
  F.code = [map_obj, ng](const Mor& m) {
    std::int64_t x = m.code[0] / ng, g = m.code[0] % ng;
    return Key{map_obj(x) * ng + g};
  };
  return F;
}

}  // namespace

SGrpd action_sgrpd(const GroupAction& A, int N) {
  SGrpd X;
  X.N = N;
  const int ng = A.G.order();
  for (int n = 0; n <= N; ++n)
    X.lvl.push_back(std::make_shared<Level>(std::make_shared<ExplicitGroupoid>(action_groupoid(A, n)),
                                            "E^" + std::to_string(n + 1)));
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) X.face[n].push_back(tuple_reindex(face_map(n, i), n, A.points, ng));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) X.degen[n].push_back(tuple_reindex(degen_map(n, i), n, A.points, ng));
  return X;
}

HeckeWaldhausen hecke_waldhausen(const GroupAction& A, const std::vector<int>& H, int N) {
  Group sub = subgroup(A.G, H);
  GroupAction AH;
  AH.G = sub;
  AH.points = A.points;
  for (int h : H) AH.act.push_back(A.act[h]);
  HeckeWaldhausen R;
  R.H = std::make_shared<SGrpd>(action_sgrpd(AH, N));
  R.G = std::make_shared<SGrpd>(action_sgrpd(A, N));
  R.F = std::make_shared<SGrpdMap>();
  R.F->src = R.H;
  R.F->tgt = R.G;
  const int nh = sub.order(), ng = A.G.order();
  for (int n = 0; n <= N; ++n) {
    Functor F;
    F.obj = [](const Key& x) { return x; };
    F.code = [H, nh, ng](const Mor& m) {
      std::int64_t x = m.code[0] / nh, h = m.code[0] % nh;
      return Key{x * ng + H[h]};
    };
    R.F->comp.push_back(F);
  }
  return R;
}

SSet pi0_sset(const SGrpd& X) {
  SSet S;
  S.N = X.N;
  S.semi = X.semi;
  S.ids.resize(X.N + 1);
  for (int n = 0; n <= X.N; ++n)
    for (int c = 0; c < X.lvl[n]->classes(); ++c) S.ids[n].push_back(key_string(X.lvl[n]->rep(c)));
  S.face.resize(X.N + 1);
  for (int n = 1; n <= X.N; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> t;
      for (int c = 0; c < X.lvl[n]->classes(); ++c) t.push_back(X.lvl[n - 1]->canon(X.face[n][i].obj(X.lvl[n]->rep(c))).first);
      S.face[n].push_back(t);
    }
  if (!X.semi) {
    S.degen.resize(X.N);
    for (int n = 0; n < X.N; ++n)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> t;
        for (int c = 0; c < X.lvl[n]->classes(); ++c)
          t.push_back(X.lvl[n + 1]->canon(X.degen[n][i].obj(X.lvl[n]->rep(c))).first);
        S.degen[n].push_back(t);
      }
  }
  return S;
}

SMap pi0_map(const SGrpdMap& F) {
  SMap M;
  M.src = pi0_sset(*F.src);
  M.tgt = pi0_sset(*F.tgt);
  M.comp.resize(F.src->N + 1);
  for (int n = 0; n <= F.src->N; ++n)
    for (int c = 0; c < F.src->lvl[n]->classes(); ++c)
      M.comp[n].push_back(F.tgt->lvl[n]->canon(F.comp[n].obj(F.src->lvl[n]->rep(c))).first);
  return M;
}

}  // namespace segal
