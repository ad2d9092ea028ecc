#include "segal/multicat.hpp"

#include "segal/diagram.hpp"
#include "segal/segal_check.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace segal {

namespace {

// pairs and triples of [n] in lexicographic order
struct Index {
  int n = 0;
  std::map<std::pair<int, int>, int> pr;
  std::map<std::array<int, 3>, int> tr;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::array<int, 3>> triples;
  int P(int i, int j) const { return pr.at({i, j}); }
  int T(int i, int j, int k) const { return tr.at({i, j, k}); }
};

const Index& index_of(int n) {
  static std::map<int, Index> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Index I;
  I.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      I.pr[{i, j}] = static_cast<int>(I.pairs.size());
      I.pairs.push_back({i, j});
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        I.tr[{i, j, k}] = static_cast<int>(I.triples.size());
        I.triples.push_back({i, j, k});
      }
  return cache[n] = I;
}

struct XT {
  std::vector<int> v, e, p;
};
struct YT {
  int x = 0;
  std::vector<int> w, y;
};

std::string join_ids(const std::vector<std::string>& names, const std::vector<int>& ks) {
  std::string s;
  for (std::size_t k = 0; k < ks.size(); ++k) s += (k ? ";" : "") + names[ks[k]];
  return s;
}

std::pair<int, int> lookup(const PairMap& m, int a, int b) {
  auto it = m.find({a, b});
  if (it == m.end()) return {-1, -1};
  return it->second;
}

// ---------------------------------------------------------------------------

class Rebuild {
 public:
  Rebuild(const MultiCategory& C, const MultiModule* Mo, int N) : C_(C), Mo_(Mo), N_(N) {}

  void run() {
    xs_.resize(N_ + 1);
    xfind_.resize(N_ + 1);
    for (int v = 0; v < static_cast<int>(C_.X0.size()); ++v) addx(0, XT{{v}, {}, {}});
    if (N_ >= 1)
      for (int e = 0; e < static_cast<int>(C_.X1.size()); ++e) addx(1, XT{{C_.src[e], C_.tgt[e]}, {e}, {}});
    if (N_ >= 2)
      for (int p = 0; p < static_cast<int>(C_.M.size()); ++p)
        addx(2, XT{{C_.src[C_.m2[p]], C_.tgt[C_.m2[p]], C_.tgt[C_.m0[p]]}, {C_.m2[p], C_.m1[p], C_.m0[p]}, {p}});
    for (int n = 3; n <= N_; ++n) extend_x(n);
    if (!Mo_) return;
    ys_.resize(N_ + 1);
    yfind_.resize(N_ + 1);
    const MultiModule& Y = *Mo_;
    for (int w = 0; w < static_cast<int>(Y.Y0.size()); ++w) addy(0, YT{Y.F0[w], {w}, {}});
    if (N_ >= 1)
      for (int y = 0; y < static_cast<int>(Y.Y1.size()); ++y) addy(1, YT{Y.yx[y], {Y.yout[y], Y.yin[y]}, {y}});
    for (int n = 2; n <= N_; ++n) extend_y(n);
  }

  SSet xset() const {
    SSet X;
    X.N = N_;
    X.semi = C_.semi();
    X.ids.resize(N_ + 1);
    X.face.resize(N_ + 1);
    for (int n = 0; n <= N_; ++n)
      for (auto& t : xs_[n]) X.ids[n].push_back(xid(n, t));
    for (int n = 1; n <= N_; ++n) {
      X.face[n].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        for (auto& t : xs_[n]) X.face[n][i].push_back(xfind(n - 1, pullx(n, t, face_map(n, i))));
    }
    if (!X.semi) {
      X.degen.resize(N_);
      for (int n = 0; n < N_; ++n) {
        X.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
          for (auto& t : xs_[n]) X.degen[n][i].push_back(xfind(n + 1, pullx(n, t, degen_map(n, i))));
      }
    }
    return X;
  }

  SMap ymap() const {
    SMap F;
    F.tgt = xset();
    SSet& Y = F.src;
    Y.N = N_;
    Y.semi = C_.semi();
    Y.ids.resize(N_ + 1);
    Y.face.resize(N_ + 1);
    F.comp.resize(N_ + 1);
    for (int n = 0; n <= N_; ++n)
      for (auto& t : ys_[n]) {
        Y.ids[n].push_back(yid(n, t));
        F.comp[n].push_back(t.x);
      }
    for (int n = 1; n <= N_; ++n) {
      Y.face[n].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        for (auto& t : ys_[n]) Y.face[n][i].push_back(yfind(n - 1, pully(n, t, face_map(n, i))));
    }
    if (!Y.semi) {
      Y.degen.resize(N_);
      for (int n = 0; n < N_; ++n) {
        Y.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
          for (auto& t : ys_[n]) Y.degen[n][i].push_back(yfind(n + 1, pully(n, t, degen_map(n, i))));
      }
    }
    return F;
  }

 private:
  static std::vector<int> xkey(int n, const XT& t) {
    if (n == 0) return t.v;
    if (n == 1) return t.e;
    return t.p;
  }
  static std::vector<int> ykey(int n, const YT& t) {
    if (n == 0) return t.w;
    std::vector<int> k{t.x};
    k.insert(k.end(), t.y.begin(), t.y.end());
    return k;
  }
  void addx(int n, const XT& t) {
    auto k = xkey(n, t);
    if (xfind_[n].count(k)) return;
    xfind_[n][k] = static_cast<int>(xs_[n].size());
    xs_[n].push_back(t);
  }
  void addy(int n, const YT& t) {
    auto k = ykey(n, t);
    if (yfind_[n].count(k)) return;
    yfind_[n][k] = static_cast<int>(ys_[n].size());
    ys_[n].push_back(t);
  }
  int xfind(int n, const XT& t) const {
    auto it = xfind_[n].find(xkey(n, t));
    if (it == xfind_[n].end())
      throw std::invalid_argument("incoherent: a face or degeneracy of a level " + std::to_string(n + 1) +
                                  " tuple is not a coherent tuple");
    return it->second;
  }
  int yfind(int n, const YT& t) const {
    auto it = yfind_[n].find(ykey(n, t));
    if (it == yfind_[n].end())
      throw std::invalid_argument("incoherent: a face or degeneracy of a level " + std::to_string(n + 1) +
                                  " module tuple is not a coherent tuple");
    return it->second;
  }

  std::string xid(int n, const XT& t) const {
    if (n == 0) return C_.X0[t.v[0]];
    if (n == 1) return C_.X1[t.e[0]];
    if (n == 2) return C_.M[t.p[0]];
    return "(" + join_ids(C_.M, t.p) + ")";
  }
  std::string yid(int n, const YT& t) const {
    if (n == 0) return Mo_->Y0[t.w[0]];
    if (n == 1) return Mo_->Y1[t.y[0]];
    return "(" + xid(n, xs_[n][t.x]) + "|" + join_ids(Mo_->Y1, t.y) + ")";
  }

  // t pulled back along phi : [k] -> [n]
  XT pullx(int n, const XT& t, const std::vector<int>& phi) const {
    const int k = static_cast<int>(phi.size()) - 1;
    const Index& I = index_of(n);
    const Index& J = index_of(k);
    XT u;
    for (int a = 0; a <= k; ++a) u.v.push_back(t.v[phi[a]]);
    for (auto [a, b] : J.pairs) {
      int fa = phi[a], fb = phi[b];
      u.e.push_back(fa == fb ? C_.e.at(t.v[fa]) : t.e[I.P(fa, fb)]);
    }
    for (auto [a, b, c] : J.triples) {
      int fa = phi[a], fb = phi[b], fc = phi[c];
      if (fa == fb)
        u.p.push_back(C_.il.at(t.e[I.P(fb, fc)]));
      else if (fb == fc)
        u.p.push_back(C_.ir.at(t.e[I.P(fa, fb)]));
      else
        u.p.push_back(t.p[I.T(fa, fb, fc)]);
    }
    return u;
  }
  YT pully(int n, const YT& t, const std::vector<int>& phi) const {
    const int k = static_cast<int>(phi.size()) - 1;
    const Index& I = index_of(n);
    const Index& J = index_of(k);
    YT u;
    u.x = xfind(k, pullx(n, xs_[n][t.x], phi));
    for (int a = 0; a <= k; ++a) u.w.push_back(t.w[phi[a]]);
    for (auto [a, b] : J.pairs) {
      int fa = phi[a], fb = phi[b];
      u.y.push_back(fa == fb ? Mo_->iota.at(t.w[fa]) : t.y[I.P(fa, fb)]);
    }
    return u;
  }

  bool coherent_x(int n, const XT& t) const {
    const Index& I = index_of(n);
    for (int q = 0; q < static_cast<int>(I.pairs.size()); ++q) {
      auto [i, j] = I.pairs[q];
      if (C_.src[t.e[q]] != t.v[i] || C_.tgt[t.e[q]] != t.v[j]) return false;
    }
    for (int q = 0; q < static_cast<int>(I.triples.size()); ++q) {
      auto [i, j, k] = I.triples[q];
      int p = t.p[q];
      if (C_.m2[p] != t.e[I.P(i, j)] || C_.m0[p] != t.e[I.P(j, k)] || C_.m1[p] != t.e[I.P(i, k)]) return false;
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            if (lookup(C_.a, t.p[I.T(i, j, k)], t.p[I.T(i, k, l)]) !=
                std::make_pair(t.p[I.T(i, j, l)], t.p[I.T(j, k, l)]))
              return false;
    return true;
  }

  void extend_x(int n) {
    const Index& I = index_of(n);
    const Index& H = index_of(n - 1);
    for (const XT& t : xs_[n - 1]) {
      const int base = t.e[H.P(0, n - 1)];
      for (int p = 0; p < static_cast<int>(C_.M.size()); ++p) {
        if (C_.m2[p] != base) continue;
        XT u;
        u.v = t.v;
        u.v.push_back(-1);
        u.e.assign(I.pairs.size(), -1);
        u.p.assign(I.triples.size(), -1);
        for (auto [i, j] : H.pairs) u.e[I.P(i, j)] = t.e[H.P(i, j)];
        for (auto [i, j, k] : H.triples) u.p[I.T(i, j, k)] = t.p[H.T(i, j, k)];
        u.p[I.T(0, n - 1, n)] = p;
        bool ok = true;
        for (int j = 1; j <= n - 2 && ok; ++j) {
          auto r = lookup(C_.a, u.p[I.T(0, j, n - 1)], p);
          if (r.first < 0) ok = false;
          u.p[I.T(0, j, n)] = r.first;
          u.p[I.T(j, n - 1, n)] = r.second;
        }
        for (int i = 1; i <= n - 1 && ok; ++i)
          for (int j = i + 1; j <= n - 1 && ok; ++j) {
            auto r = lookup(C_.a, u.p[I.T(0, i, j)], u.p[I.T(0, j, n)]);
            if (r.first < 0 || r.first != u.p[I.T(0, i, n)]) ok = false;
            int& slot = u.p[I.T(i, j, n)];
            if (slot >= 0 && slot != r.second) ok = false;
            slot = r.second;
          }
        if (!ok) continue;
        u.e[I.P(0, n)] = C_.m1[p];
        for (int i = 1; i <= n - 1; ++i) u.e[I.P(i, n)] = C_.m0[u.p[I.T(0, i, n)]];
        u.v[n] = C_.tgt[u.e[I.P(0, n)]];
        if (coherent_x(n, u)) addx(n, u);
      }
    }
  }

  bool coherent_y(int n, const YT& t) const {
    const MultiModule& Y = *Mo_;
    const Index& I = index_of(n);
    const XT& x = xs_[n][t.x];
    for (int i = 0; i <= n; ++i)
      if (Y.F0[t.w[i]] != x.v[i]) return false;
    for (int q = 0; q < static_cast<int>(I.pairs.size()); ++q) {
      auto [i, j] = I.pairs[q];
      int y = t.y[q];
      if (Y.yx[y] != x.e[q] || Y.yout[y] != t.w[i] || Y.yin[y] != t.w[j]) return false;
    }
    for (auto [i, j, k] : I.triples)
      if (lookup(Y.alpha, x.p[I.T(i, j, k)], t.y[I.P(i, k)]) != std::make_pair(t.y[I.P(i, j)], t.y[I.P(j, k)]))
        return false;
    return true;
  }

  void extend_y(int n) {
    const MultiModule& Y = *Mo_;
    const Index& I = index_of(n);
    for (int xi = 0; xi < static_cast<int>(xs_[n].size()); ++xi) {
      const XT& x = xs_[n][xi];
      for (int y0 = 0; y0 < static_cast<int>(Y.Y1.size()); ++y0) {
        if (Y.yx[y0] != x.e[I.P(0, n)]) continue;
        YT u;
        u.x = xi;
        u.y.assign(I.pairs.size(), -1);
        u.w.assign(n + 1, -1);
        u.y[I.P(0, n)] = y0;
        bool ok = true;
        for (int j = 1; j <= n - 1 && ok; ++j) {
          auto r = lookup(Y.alpha, x.p[I.T(0, j, n)], y0);
          if (r.first < 0) ok = false;
          u.y[I.P(0, j)] = r.first;
          u.y[I.P(j, n)] = r.second;
        }
        for (int i = 1; i <= n - 1 && ok; ++i)
          for (int j = i + 1; j <= n - 1 && ok; ++j) {
            auto r = lookup(Y.alpha, x.p[I.T(i, j, n)], u.y[I.P(i, n)]);
            if (r.first < 0 || r.second != u.y[I.P(j, n)]) ok = false;
            u.y[I.P(i, j)] = r.first;
          }
        if (!ok) continue;
        for (int i = 0; i < n; ++i) u.w[i] = Y.yout[u.y[I.P(i, n)]];
        u.w[n] = Y.yin[y0];
        if (coherent_y(n, u)) addy(n, u);
      }
    }
  }

  const MultiCategory& C_;
  const MultiModule* Mo_;
  int N_;
  std::vector<std::vector<XT>> xs_;
  std::vector<std::map<std::vector<int>, int>> xfind_;
  std::vector<std::vector<YT>> ys_;
  std::vector<std::map<std::vector<int>, int>> yfind_;
};

bool in_range(const std::vector<int>& v, std::size_t n) {
  for (int x : v)
    if (x < 0 || x >= static_cast<int>(n)) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

CoherenceReport validate_multicat(const MultiCategory& X) {
  CoherenceReport R;
  auto fail = [&](const std::string& s) {
    R.pass = false;
    R.failures.push_back(s);
  };
  const std::size_t n0 = X.X0.size(), n1 = X.X1.size(), nm = X.M.size();
  if (X.src.size() != n1 || X.tgt.size() != n1 || !in_range(X.src, n0) || !in_range(X.tgt, n0) ||
      X.m2.size() != nm || X.m0.size() != nm || X.m1.size() != nm || !in_range(X.m2, n1) || !in_range(X.m0, n1) ||
      !in_range(X.m1, n1)) {
    fail("malformed span data");
    return R;
  }
  for (std::size_t p = 0; p < nm; ++p)
    if (X.tgt[X.m2[p]] != X.src[X.m0[p]] || X.src[X.m1[p]] != X.src[X.m2[p]] || X.tgt[X.m1[p]] != X.tgt[X.m0[p]])
      fail("span legs ill-typed at " + X.M[p]);
  // associator: bijection between composable pairs of the two shapes
  std::set<std::pair<int, int>> dom, cod, hit;
  for (int p = 0; p < static_cast<int>(nm); ++p)
    for (int q = 0; q < static_cast<int>(nm); ++q) {
      if (X.m1[p] == X.m2[q]) dom.insert({p, q});
      if (X.m0[p] == X.m1[q]) cod.insert({p, q});
    }
  for (auto& [k, v] : X.a) {
    if (!dom.count(k)) {
      fail("associator defined outside its domain at (" + X.M[k.first] + "," + X.M[k.second] + ")");
      continue;
    }
    if (!cod.count(v)) {
      fail("associator leaves its codomain at (" + X.M[k.first] + "," + X.M[k.second] + ")");
      continue;
    }
    if (!hit.insert(v).second) fail("associator not injective at (" + X.M[k.first] + "," + X.M[k.second] + ")");
    auto [p, q] = k;
    auto [r, s] = v;
    if (X.m2[r] != X.m2[p] || X.m2[s] != X.m0[p] || X.m0[s] != X.m0[q] || X.m1[r] != X.m1[q])
      fail("associator changes the boundary at (" + X.M[p] + "," + X.M[q] + ")");
  }
  if (X.a.size() != dom.size()) fail("associator not total");
  if (hit.size() != cod.size()) fail("associator not surjective");
  if (!R.pass) return R;
  // Mac Lane pentagon on composable triples
  for (auto [x, y] : dom)
    for (int z = 0; z < static_cast<int>(nm); ++z) {
      if (X.m1[y] != X.m2[z]) continue;
      auto [u, v] = X.a.at({x, y});
      if (!X.a.count({u, z})) continue;
      auto [r1, r3] = X.a.at({u, z});
      auto [s1, s2] = X.a.at({y, z});
      if (!X.a.count({x, s1}) || !X.a.count({v, r3})) {
        fail("pentagon undefined at (" + X.M[x] + "," + X.M[y] + "," + X.M[z] + ")");
        continue;
      }
      auto [t1, t2] = X.a.at({x, s1});
      if (r1 != t1 || X.a.at({v, r3}) != std::make_pair(t2, s2))
        fail("pentagon fails at (" + X.M[x] + "," + X.M[y] + "," + X.M[z] + ")");
    }
  if (X.semi()) return R;
  if (X.e.size() != n0 || !in_range(X.e, n1) || X.il.size() != n1 || X.ir.size() != n1 || !in_range(X.il, nm) ||
      !in_range(X.ir, nm)) {
    fail("malformed unit data");
    return R;
  }
  std::set<int> units(X.e.begin(), X.e.end());
  for (std::size_t v = 0; v < n0; ++v) {
    if (X.src[X.e[v]] != static_cast<int>(v) || X.tgt[X.e[v]] != static_cast<int>(v))
      fail("unit at " + X.X0[v] + " is not an endomorphism");
    if (X.il[X.e[v]] != X.ir[X.e[v]]) fail("left and right units differ at " + X.X0[v]);
  }
  std::size_t left = 0, right = 0;
  for (std::size_t p = 0; p < nm; ++p) {
    left += units.count(X.m2[p]);
    right += units.count(X.m0[p]);
  }
  if (std::set<int>(X.il.begin(), X.il.end()).size() != n1 || left != n1) fail("left unit map not bijective");
  if (std::set<int>(X.ir.begin(), X.ir.end()).size() != n1 || right != n1) fail("right unit map not bijective");
  for (std::size_t x = 0; x < n1; ++x) {
    int l = X.il[x], r = X.ir[x];
    if (X.m2[l] != X.e[X.src[x]] || X.m0[l] != static_cast<int>(x) || X.m1[l] != static_cast<int>(x))
      fail("left unit ill-typed at " + X.X1[x]);
    if (X.m2[r] != static_cast<int>(x) || X.m0[r] != X.e[X.tgt[x]] || X.m1[r] != static_cast<int>(x))
      fail("right unit ill-typed at " + X.X1[x]);
  }
  if (!R.pass) return R;
  // associator on degenerate data
  for (int p = 0; p < static_cast<int>(nm); ++p) {
    int x = X.m2[p], y = X.m0[p], z = X.m1[p];
    if (lookup(X.a, X.il[x], p) != std::make_pair(X.il[z], p)) fail("unit compatibility s_0 at " + X.M[p]);
    if (lookup(X.a, X.ir[x], p) != std::make_pair(p, X.il[y])) fail("unit compatibility s_1 at " + X.M[p]);
    if (lookup(X.a, p, X.ir[z]) != std::make_pair(p, X.ir[y])) fail("unit compatibility s_2 at " + X.M[p]);
  }
  return R;
}

CoherenceReport validate_multimodule(const MultiCategory& X, const MultiModule& Y) {
  CoherenceReport R;
  auto fail = [&](const std::string& s) {
    R.pass = false;
    R.failures.push_back(s);
  };
  const std::size_t w0 = Y.Y0.size(), y1 = Y.Y1.size(), nm = X.M.size();
  if (Y.F0.size() != w0 || !in_range(Y.F0, X.X0.size()) || Y.yx.size() != y1 || Y.yin.size() != y1 ||
      Y.yout.size() != y1 || !in_range(Y.yx, X.X1.size()) || !in_range(Y.yin, w0) || !in_range(Y.yout, w0)) {
    fail("malformed action data");
    return R;
  }
  for (std::size_t y = 0; y < y1; ++y)
    if (Y.F0[Y.yin[y]] != X.tgt[Y.yx[y]] || Y.F0[Y.yout[y]] != X.src[Y.yx[y]])
      fail("action legs ill-typed at " + Y.Y1[y]);
  std::set<std::pair<int, int>> dom, cod, hit;
  for (int p = 0; p < static_cast<int>(nm); ++p)
    for (int y = 0; y < static_cast<int>(y1); ++y)
      if (X.m1[p] == Y.yx[y]) dom.insert({p, y});
  for (int a = 0; a < static_cast<int>(y1); ++a)
    for (int b = 0; b < static_cast<int>(y1); ++b)
      if (Y.yin[a] == Y.yout[b]) cod.insert({a, b});
  for (auto& [k, v] : Y.alpha) {
    if (!dom.count(k) || !cod.count(v)) {
      fail("module associator outside its domain or codomain at (" + X.M[k.first] + "," + Y.Y1[k.second] + ")");
      continue;
    }
    if (!hit.insert(v).second) fail("module associator not injective at (" + X.M[k.first] + "," + Y.Y1[k.second] + ")");
    auto [p, y] = k;
    auto [a, b] = v;
    if (Y.yx[a] != X.m2[p] || Y.yx[b] != X.m0[p] || Y.yout[a] != Y.yout[y] || Y.yin[b] != Y.yin[y])
      fail("module associator changes the boundary at (" + X.M[p] + "," + Y.Y1[y] + ")");
  }
  if (Y.alpha.size() != dom.size()) fail("module associator not total");
  if (hit.size() != cod.size()) fail("module associator not surjective");
  if (!R.pass) return R;
  for (auto& [xy, uv] : X.a) {
    auto [x, y] = xy;
    auto [u, v] = uv;
    for (int m = 0; m < static_cast<int>(y1); ++m) {
      if (X.m1[y] != Y.yx[m]) continue;
      auto [y01, y13] = Y.alpha.at({u, m});
      auto [y12, y23] = lookup(Y.alpha, v, y13);
      auto [y02, z23] = Y.alpha.at({y, m});
      auto [z01, z12] = lookup(Y.alpha, x, y02);
      if (y01 != z01 || y12 != z12 || y23 != z23)
        fail("module pentagon fails at (" + X.M[x] + "," + X.M[y] + "," + Y.Y1[m] + ")");
    }
  }
  if (X.semi()) return R;
  if (Y.iota.size() != w0 || !in_range(Y.iota, y1)) {
    fail("malformed module unit");
    return R;
  }
  std::set<int> units(X.e.begin(), X.e.end());
  std::size_t count = 0;
  for (std::size_t y = 0; y < y1; ++y) count += units.count(Y.yx[y]);
  if (std::set<int>(Y.iota.begin(), Y.iota.end()).size() != w0 || count != w0) fail("module unit not bijective");
  for (std::size_t w = 0; w < w0; ++w) {
    int y = Y.iota[w];
    if (Y.yx[y] != X.e[Y.F0[w]] || Y.yin[y] != static_cast<int>(w) || Y.yout[y] != static_cast<int>(w))
      fail("module unit ill-typed at " + Y.Y0[w]);
  }
  if (!R.pass) return R;
  for (int y = 0; y < static_cast<int>(y1); ++y) {
    int x = Y.yx[y];
    if (lookup(Y.alpha, X.il[x], y) != std::make_pair(Y.iota[Y.yout[y]], y))
      fail("module unit compatibility s_0 at " + Y.Y1[y]);
    if (lookup(Y.alpha, X.ir[x], y) != std::make_pair(y, Y.iota[Y.yin[y]]))
      fail("module unit compatibility s_1 at " + Y.Y1[y]);
  }
  return R;
}

// ---------------------------------------------------------------------------

MultiCategory to_multicategory(const SSet& X, int N) {
  if (N < 3 || X.N < N) throw std::invalid_argument("multivalued categories need truncation >= 3");
  auto rep = check_2segal(X, N, !X.semi);
  if (!rep.pass()) throw std::invalid_argument("not 2-Segal: " + rep.first_failure());
  MultiCategory C;
  C.X0 = X.ids[0];
  C.X1 = X.ids[1];
  C.M = X.ids[2];
  C.src = X.face[1][1];
  C.tgt = X.face[1][0];
  C.m2 = X.face[2][2];
  C.m0 = X.face[2][0];
  C.m1 = X.face[2][1];
  for (int t = 0; t < X.size(3); ++t) {
    std::pair<int, int> k{X.d(3, 3, t), X.d(3, 1, t)}, v{X.d(3, 2, t), X.d(3, 0, t)};
    auto [it, fresh] = C.a.emplace(k, v);
    if (!fresh && it->second != v) throw std::invalid_argument("associator not a function at " + X.ids[3][t]);
  }
  if (!X.semi) {
    C.e = X.degen[0][0];
    C.il = X.degen[1][0];
    C.ir = X.degen[1][1];
  }
  return C;
}

std::pair<MultiCategory, MultiModule> to_multicat(const SMap& F, int N) {
  const SSet& Y = F.src;
  MultiCategory C = to_multicategory(F.tgt, N);
  if (Y.N < N) throw std::invalid_argument("module needs truncation >= N");
  auto rep = check_rel2segal(F, N, !F.tgt.semi && !Y.semi);
  if (!rep.pass()) throw std::invalid_argument("not relative 2-Segal: " + rep.first_failure());
  MultiModule M;
  M.Y0 = Y.ids[0];
  M.Y1 = Y.ids[1];
  M.F0 = F.comp[0];
  M.yx = F.comp[1];
  M.yin = Y.face[1][0];
  M.yout = Y.face[1][1];
  for (int w = 0; w < Y.size(2); ++w) {
    std::pair<int, int> k{F.comp[2][w], Y.d(2, 1, w)}, v{Y.d(2, 2, w), Y.d(2, 0, w)};
    auto [it, fresh] = M.alpha.emplace(k, v);
    if (!fresh && it->second != v) throw std::invalid_argument("module associator not a function at " + Y.ids[2][w]);
  }
  if (!Y.semi && !F.tgt.semi) M.iota = Y.degen[0][0];
  return {C, M};
}

SSet from_multicategory(const MultiCategory& X, int N) {
  auto rep = validate_multicat(X);
  if (!rep.pass) throw std::invalid_argument("incoherent: " + rep.failures.front());
  Rebuild B(X, nullptr, N);
  B.run();
  SSet out = B.xset();
  auto v = validate_simplicial(out);
  if (!v.pass) throw std::invalid_argument("incoherent: rebuilt levels fail the simplicial identities");
  return out;
}

SMap from_multicat(const MultiCategory& X, const MultiModule& Y, int N) {
  auto rep = validate_multicat(X);
  if (!rep.pass) throw std::invalid_argument("incoherent: " + rep.failures.front());
  rep = validate_multimodule(X, Y);
  if (!rep.pass) throw std::invalid_argument("incoherent module: " + rep.failures.front());
  Rebuild B(X, &Y, N);
  B.run();
  SMap F = B.ymap();
  if (!validate_map(F).pass || !validate_simplicial(F.src).pass || !validate_simplicial(F.tgt).pass)
    throw std::invalid_argument("incoherent: rebuilt levels fail the simplicial identities");
  return F;
}

bool same_multicat(const MultiCategory& a, const MultiCategory& b, std::string* why) {
  auto differ = [&](const char* what) {
    if (why) *why = what;
    return false;
  };
  if (a.X0 != b.X0) return differ("objects");
  if (a.X1 != b.X1) return differ("arrows");
  if (a.M != b.M) return differ("composition span");
  if (a.src != b.src || a.tgt != b.tgt) return differ("source or target");
  if (a.m2 != b.m2 || a.m0 != b.m0 || a.m1 != b.m1) return differ("composition legs");
  if (a.a != b.a) return differ("associator");
  if (a.e != b.e || a.il != b.il || a.ir != b.ir) return differ("units");
  return true;
}

bool same_multimodule(const MultiModule& a, const MultiModule& b, std::string* why) {
  auto differ = [&](const char* what) {
    if (why) *why = what;
    return false;
  };
  if (a.Y0 != b.Y0 || a.Y1 != b.Y1) return differ("module sets");
  if (a.F0 != b.F0) return differ("anchor");
  if (a.yx != b.yx || a.yin != b.yin || a.yout != b.yout) return differ("action legs");
  if (a.alpha != b.alpha) return differ("module associator");
  if (a.iota != b.iota) return differ("module unit");
  return true;
}

namespace {

std::string tuple_id_x(const SSet& X, int n, int k) {
  if (n <= 2) return X.ids[n][k];
  std::string s = "(";
  bool first = true;
  for (auto [i, j, l] : index_of(n).triples) {
    s += (first ? "" : ";") + X.ids[2][restrict_simplex(X, n, k, {i, j, l})];
    first = false;
  }
  return s + ")";
}

std::string tuple_id_y(const SMap& F, int n, int k) {
  const SSet& Y = F.src;
  if (n <= 1) return Y.ids[n][k];
  std::string s = "(" + tuple_id_x(F.tgt, n, F.comp[n][k]) + "|";
  bool first = true;
  for (auto [i, j] : index_of(n).pairs) {
    s += (first ? "" : ";") + Y.ids[1][restrict_simplex(Y, n, k, {i, j})];
    first = false;
  }
  return s + ")";
}

// levelwise map by ids; empty string when it is a simplicial isomorphism
std::string match(const SSet& A, const SSet& B, int N, const std::function<std::string(int, int)>& id,
                  std::vector<std::vector<int>>& phi, const char* what) {
  phi.assign(N + 1, {});
  for (int n = 0; n <= N; ++n) {
    std::unordered_map<std::string, int> where;
    for (int k = 0; k < B.size(n); ++k) where[B.ids[n][k]] = k;
    if (A.size(n) != B.size(n))
      return std::string(what) + " level " + std::to_string(n) + ": " + std::to_string(A.size(n)) + " vs " +
             std::to_string(B.size(n)) + " simplices";
    std::set<int> seen;
    for (int k = 0; k < A.size(n); ++k) {
      auto it = where.find(id(n, k));
      if (it == where.end()) return std::string(what) + " level " + std::to_string(n) + ": " + A.ids[n][k] + " unmatched";
      if (!seen.insert(it->second).second) return std::string(what) + " level " + std::to_string(n) + ": not injective";
      phi[n].push_back(it->second);
    }
  }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < A.size(n); ++k)
        if (phi[n - 1][A.d(n, i, k)] != B.d(n, i, phi[n][k]))
          return std::string(what) + ": face d_" + std::to_string(i) + " not preserved at " + A.ids[n][k];
  if (!A.semi && !B.semi)
    for (int n = 0; n < N; ++n)
      for (int i = 0; i <= n; ++i)
        for (int k = 0; k < A.size(n); ++k)
          if (phi[n + 1][A.s(n, i, k)] != B.s(n, i, phi[n][k]))
            return std::string(what) + ": degeneracy s_" + std::to_string(i) + " not preserved at " + A.ids[n][k];
  return {};
}

}  // namespace

std::string roundtrip_nerve(const SSet& X, int N) {
  SSet G = from_multicategory(to_multicategory(X, N), N);
  std::vector<std::vector<int>> phi;
  return match(truncate(X, N), G, N, [&](int n, int k) { return tuple_id_x(X, n, k); }, phi, "base");
}

std::string roundtrip_nerve(const SMap& F, int N) {
  auto [C, M] = to_multicat(F, N);
  SMap G = from_multicat(C, M, N);
  std::vector<std::vector<int>> px, py;
  auto err = match(truncate(F.tgt, N), G.tgt, N, [&](int n, int k) { return tuple_id_x(F.tgt, n, k); }, px, "base");
  if (!err.empty()) return err;
  err = match(truncate(F.src, N), G.src, N, [&](int n, int k) { return tuple_id_y(F, n, k); }, py, "total");
  if (!err.empty()) return err;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k < F.src.size(n); ++k)
      if (G.comp[n][py[n][k]] != px[n][F.comp[n][k]]) return "projection not preserved at " + F.src.ids[n][k];
  return {};
}

std::string roundtrip_multicat(const MultiCategory& X, const MultiModule& Y, int N) {
  SMap F = from_multicat(X, Y, N);
  auto [C, M] = to_multicat(F, N);
  std::string why;
  if (!same_multicat(X, C, &why)) return "category differs: " + why;
  if (!same_multimodule(Y, M, &why)) return "module differs: " + why;
  return {};
}

// ---------------------------------------------------------------------------

PentagonDatum group_pentagon(const Group& G) {
  PentagonDatum D;
  D.X2 = G.names;
  const int n = G.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) D.a.push_back({G.mul[x][y], y});
  return D;
}

APentagonDatum action_apentagon(const GroupAction& A) {
  APentagonDatum E;
  for (int m = 0; m < A.points; ++m) E.Y1.push_back("m" + std::to_string(m));
  for (int x = 0; x < A.G.order(); ++x)
    for (int m = 0; m < A.points; ++m) E.alpha.push_back({A.act[x][m], m});
  return E;
}

EquationVerdict pentagon_check(const PentagonDatum& D) {
  EquationVerdict V;
  const int n = static_cast<int>(D.X2.size());
  if (static_cast<int>(D.a.size()) != n * n) {
    V.ok = V.bijective = false;
    V.error = "a has " + std::to_string(D.a.size()) + " entries, expected " + std::to_string(n * n);
    return V;
  }
  std::set<std::pair<int, int>> img;
  for (int k = 0; k < n * n; ++k) {
    auto [u, v] = D.a[k];
    if (u < 0 || u >= n || v < 0 || v >= n || !img.insert(D.a[k]).second) {
      V.ok = V.bijective = false;
      V.error = "a is not a bijection: repeated or invalid value at (" + D.X2[k / n] + "," + D.X2[k % n] + ")";
      return V;
    }
  }
  auto a = [&](int x, int y) { return D.a[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto [u, v] = a(x, y);
        auto [u2, w] = a(u, z);
        auto [v2, w2] = a(v, w);
        auto [y2, z2] = a(y, z);
        auto [x3, y3] = a(x, y2);
        if (std::make_tuple(u2, v2, w2) != std::make_tuple(x3, y3, z2)) {
          V.ok = false;
          V.witness = "(" + D.X2[x] + "," + D.X2[y] + "," + D.X2[z] + ")";
          return V;
        }
      }
  return V;
}

EquationVerdict apentagon_check(const PentagonDatum& D, const APentagonDatum& E) {
  EquationVerdict V = pentagon_check(D);
  if (!V.ok) {
    if (V.bijective) V.error = "a does not satisfy the pentagon equation at " + V.witness;
    return V;
  }
  const int n = static_cast<int>(D.X2.size());
  const int m = static_cast<int>(E.Y1.size());
  if (static_cast<int>(E.alpha.size()) != n * m) {
    V.ok = V.bijective = false;
    V.error = "alpha has the wrong number of entries";
    return V;
  }
  std::set<std::pair<int, int>> img;
  for (int k = 0; k < n * m; ++k) {
    auto [u, v] = E.alpha[k];
    if (u < 0 || u >= m || v < 0 || v >= m || !img.insert(E.alpha[k]).second) {
      V.ok = V.bijective = false;
      V.error = "alpha is not a bijection: repeated or invalid value at (" + D.X2[k / m] + "," + E.Y1[k % m] + ")";
      return V;
    }
  }
  if (n * m != m * m) {
    V.ok = V.bijective = false;
    V.error = "alpha is not a bijection: |X2 x Y1| != |Y1 x Y1|";
    return V;
  }
  auto a = [&](int x, int y) { return D.a[x * n + y]; };
  auto al = [&](int x, int y) { return E.alpha[x * m + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int k = 0; k < m; ++k) {
        auto [u, v] = a(x, y);
        auto [y01, y13] = al(u, k);
        auto [y12, y23] = al(v, y13);
        auto [y02, z23] = al(y, k);
        auto [z01, z12] = al(x, y02);
        if (std::make_tuple(y01, y12, y23) != std::make_tuple(z01, z12, z23)) {
          V.ok = false;
          V.witness = "(" + D.X2[x] + "," + D.X2[y] + "," + E.Y1[k] + ")";
          return V;
        }
      }
  return V;
}

MultiCategory pentagon_multicat(const PentagonDatum& D) {
  MultiCategory C;
  const int n = static_cast<int>(D.X2.size());
  C.X0 = {"*"};
  C.X1 = {"*"};
  C.M = D.X2;
  C.src = C.tgt = {0};
  C.m2.assign(n, 0);
  C.m0.assign(n, 0);
  C.m1.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) C.a[{x, y}] = D.a[x * n + y];
  return C;
}

MultiModule apentagon_module(const PentagonDatum& D, const APentagonDatum& E) {
  MultiModule M;
  const int n = static_cast<int>(D.X2.size());
  const int m = static_cast<int>(E.Y1.size());
  M.Y0 = {"*"};
  M.Y1 = E.Y1;
  M.F0 = {0};
  M.yx.assign(m, 0);
  M.yin.assign(m, 0);
  M.yout.assign(m, 0);
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < m; ++k) M.alpha[{x, k}] = E.alpha[x * m + k];
  return M;
}

SSet nerve_from_pentagon(const PentagonDatum& D, int N) {
  auto V = pentagon_check(D);
  if (!V.ok) throw std::invalid_argument(V.bijective ? "pentagon equation fails at " + V.witness : V.error);
  return from_multicategory(pentagon_multicat(D), N);
}

SMap nerve_from_apentagon(const PentagonDatum& D, const APentagonDatum& E, int N) {
  auto V = apentagon_check(D, E);
  if (!V.ok) throw std::invalid_argument(V.bijective ? "a-pentagon equation fails at " + V.witness : V.error);
  return from_multicat(pentagon_multicat(D), apentagon_module(D, E), N);
}

}  // namespace segal
