#include "segal/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segal {

int FinGroupoid::compose(int g, int f) const {
  auto it = comp.find({g, f});
  return it == comp.end() ? -1 : it->second;
}

std::vector<int> FinGroupoid::homs(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < static_cast<int>(mor.size()); ++m)
    if (mor[m].src == x && mor[m].tgt == y) out.push_back(m);
  return out;
}

GroupoidReport validate_groupoid(const FinGroupoid& G) {
  GroupoidReport r;
  auto fail = [&](std::string w) {
    r.pass = false;
    r.witnesses.push_back(std::move(w));
  };
  const int no = static_cast<int>(G.objects.size());
  const int nm = static_cast<int>(G.mor.size());
  for (int m = 0; m < nm; ++m)
    if (G.mor[m].src < 0 || G.mor[m].src >= no || G.mor[m].tgt < 0 || G.mor[m].tgt >= no)
      fail("morphism " + G.mor[m].id + " has endpoints out of range");
  if (static_cast<int>(G.identity.size()) != no) fail("identity table not total");
  if (static_cast<int>(G.inverse.size()) != nm) fail("inverse table not total");
  if (!r.pass) return r;
  for (int x = 0; x < no; ++x) {
    int e = G.identity[x];
    if (e < 0 || e >= nm || G.mor[e].src != x || G.mor[e].tgt != x)
      fail("identity of " + G.objects[x] + " is not an endomorphism of it");
  }
  for (auto& [gf, h] : G.comp) {
    auto [g, f] = gf;
    if (g < 0 || g >= nm || f < 0 || f >= nm || h < 0 || h >= nm) {
      fail("composition entry out of range");
      continue;
    }
    if (G.mor[f].tgt != G.mor[g].src) fail("composite of non-composable " + G.mor[g].id + "," + G.mor[f].id);
    else if (G.mor[h].src != G.mor[f].src || G.mor[h].tgt != G.mor[g].tgt)
      fail("composite " + G.mor[g].id + "," + G.mor[f].id + " has wrong endpoints");
  }
  if (!r.pass) return r;
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (G.mor[f].tgt == G.mor[g].src && G.compose(g, f) < 0)
        fail("composition undefined on " + G.mor[g].id + "," + G.mor[f].id);
  if (!r.pass) return r;
  for (int f = 0; f < nm; ++f) {
    if (G.compose(f, G.identity[G.mor[f].src]) != f || G.compose(G.identity[G.mor[f].tgt], f) != f)
      fail("unit law fails at " + G.mor[f].id);
    int fi = G.inverse[f];
    if (fi < 0 || fi >= nm || G.compose(fi, f) != G.identity[G.mor[f].src] ||
        G.compose(f, fi) != G.identity[G.mor[f].tgt])
      fail("inverse law fails at " + G.mor[f].id);
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (G.mor[f].tgt != G.mor[g].src) continue;
      int gf = G.compose(g, f);
      for (int h = 0; h < nm; ++h) {
        if (G.mor[g].tgt != G.mor[h].src) continue;
        if (G.compose(h, gf) != G.compose(G.compose(h, g), f))
          fail("associativity fails at (" + G.mor[h].id + "," + G.mor[g].id + "," + G.mor[f].id + ")");
      }
    }
  return r;
}

std::vector<int> component_of(const FinGroupoid& G) {
  const int no = static_cast<int>(G.objects.size());
  std::vector<int> parent(no);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (auto& m : G.mor) parent[root(m.src)] = root(m.tgt);
  // components ordered by minimal identifier of their representative
  std::map<int, int> best;  // root -> rep
  for (int x = 0; x < no; ++x) {
    int r = root(x);
    auto it = best.find(r);
    if (it == best.end() || G.objects[x] < G.objects[it->second]) best[r] = x;
  }
  std::vector<std::pair<std::string, int>> order;
  for (auto& [r, x] : best) order.emplace_back(G.objects[x], r);
  std::sort(order.begin(), order.end());
  std::map<int, int> idx;
  for (int c = 0; c < static_cast<int>(order.size()); ++c) idx[order[c].second] = c;
  std::vector<int> out(no);
  for (int x = 0; x < no; ++x) out[x] = idx[root(x)];
  return out;
}

std::vector<Component> pi0_with_aut(const FinGroupoid& G) {
  auto comp = component_of(G);
  int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Component> out(nc, Component{-1, 0});
  for (int x = 0; x < static_cast<int>(G.objects.size()); ++x) {
    auto& c = out[comp[x]];
    if (c.rep < 0 || G.objects[x] < G.objects[c.rep]) c.rep = x;
  }
  for (auto& m : G.mor)
    if (m.src == m.tgt && m.src == out[comp[m.src]].rep) ++out[comp[m.src]].aut;
  return out;
}

GroupoidReport validate_functor(const GroupoidFunctor& F) {
  GroupoidReport r;
  auto fail = [&](std::string w) {
    r.pass = false;
    r.witnesses.push_back(std::move(w));
  };
  if (F.obj.size() != F.src.objects.size() || F.mor.size() != F.src.mor.size()) {
    fail("functor tables not total");
    return r;
  }
  for (std::size_t m = 0; m < F.mor.size(); ++m) {
    auto& a = F.src.mor[m];
    auto& b = F.tgt.mor.at(F.mor[m]);
    if (b.src != F.obj[a.src] || b.tgt != F.obj[a.tgt]) fail("endpoints not preserved at " + a.id);
  }
  for (std::size_t x = 0; x < F.obj.size(); ++x)
    if (F.mor[F.src.identity[x]] != F.tgt.identity[F.obj[x]])
      fail("identity not preserved at " + F.src.objects[x]);
  for (auto& [gf, h] : F.src.comp)
    if (F.mor[h] != F.tgt.compose(F.mor[gf.first], F.mor[gf.second]))
      fail("composition not preserved at " + F.src.mor[gf.first].id + "," + F.src.mor[gf.second].id);
  return r;
}

PseudoPullback pseudo_pullback(const GroupoidFunctor& F, const GroupoidFunctor& G) {
  if (F.tgt.objects != G.tgt.objects || F.tgt.mor.size() != G.tgt.mor.size())
    throw std::invalid_argument("functors do not share a codomain");
  const FinGroupoid& A = F.src;
  const FinGroupoid& B = G.src;
  const FinGroupoid& C = F.tgt;
  PseudoPullback out;
  FinGroupoid& P = out.P;
  struct Obj {
    int a, b, gamma;
  };
  std::vector<Obj> objs;
  std::map<std::tuple<int, int, int>, int> oidx;
  for (int a = 0; a < static_cast<int>(A.objects.size()); ++a)
    for (int b = 0; b < static_cast<int>(B.objects.size()); ++b)
      for (int g : C.homs(F.obj[a], G.obj[b])) {
        oidx[{a, b, g}] = static_cast<int>(objs.size());
        objs.push_back({a, b, g});
        P.objects.push_back("(" + A.objects[a] + "," + B.objects[b] + "," + C.mor[g].id + ")");
      }
  struct M {
    int f, g;
  };
  std::vector<M> mors;
  std::map<std::tuple<int, int, int>, int> midx;  // (src obj, f, g)
  for (int s = 0; s < static_cast<int>(objs.size()); ++s)
    for (int f = 0; f < static_cast<int>(A.mor.size()); ++f) {
      if (A.mor[f].src != objs[s].a) continue;
      for (int g = 0; g < static_cast<int>(B.mor.size()); ++g) {
        if (B.mor[g].src != objs[s].b) continue;
        // target gamma' = G(g) gamma F(f)^{-1}
        int gp = C.compose(C.compose(G.mor[g], objs[s].gamma), C.inverse[F.mor[f]]);
        int t = oidx.at({A.mor[f].tgt, B.mor[g].tgt, gp});
        midx[{s, f, g}] = static_cast<int>(mors.size());
        mors.push_back({f, g});
        P.mor.push_back({"(" + A.mor[f].id + "," + B.mor[g].id + ")@" + std::to_string(s), s, t});
      }
    }
  P.identity.resize(objs.size());
  for (int s = 0; s < static_cast<int>(objs.size()); ++s)
    P.identity[s] = midx.at({s, A.identity[objs[s].a], B.identity[objs[s].b]});
  P.inverse.resize(mors.size());
  for (int m = 0; m < static_cast<int>(mors.size()); ++m) {
    int t = P.mor[m].tgt;
    P.inverse[m] = midx.at({t, A.inverse[mors[m].f], B.inverse[mors[m].g]});
    for (int k = 0; k < static_cast<int>(mors.size()); ++k)
      if (P.mor[k].src == t)
        P.comp[{k, m}] = midx.at({P.mor[m].src, A.compose(mors[k].f, mors[m].f), B.compose(mors[k].g, mors[m].g)});
  }
  out.toA.src = P;
  out.toA.tgt = A;
  out.toB.src = P;
  out.toB.tgt = B;
  for (auto& o : objs) {
    out.toA.obj.push_back(o.a);
    out.toB.obj.push_back(o.b);
  }
  for (auto& m : mors) {
    out.toA.mor.push_back(m.f);
    out.toB.mor.push_back(m.g);
  }
  return out;
}

EquivalenceCertificate is_equivalence(const GroupoidFunctor& F) {
  EquivalenceCertificate cert;
  auto ca = component_of(F.src);
  auto cb = component_of(F.tgt);
  auto pa = pi0_with_aut(F.src);
  auto pb = pi0_with_aut(F.tgt);
  cert.pi0_map.assign(pa.size(), -1);
  std::vector<int> hits(pb.size(), 0);
  for (std::size_t c = 0; c < pa.size(); ++c) {
    int x = pa[c].rep;
    int d = cb[F.obj[x]];
    cert.pi0_map[c] = d;
    ++hits[d];
    // Aut(x) -> Aut(F x): injective and orders equal
    std::set<int> image;
    int autx = 0;
    for (int m : F.src.homs(x, x)) {
      ++autx;
      image.insert(F.mor[m]);
    }
    int autfx = static_cast<int>(F.tgt.homs(F.obj[x], F.obj[x]).size());
    cert.aut_orders.emplace_back(autx, autfx);
    if (static_cast<int>(image.size()) != autx)
      cert.defects.push_back("Aut not injective at " + F.src.objects[x]);
    if (autx != autfx)
      cert.defects.push_back("Aut orders differ at " + F.src.objects[x] + ": " + std::to_string(autx) +
                             " vs " + std::to_string(autfx));
  }
  for (std::size_t d = 0; d < pb.size(); ++d) {
    if (hits[d] == 0) cert.defects.push_back("component of " + F.tgt.objects[pb[d].rep] + " not hit");
    if (hits[d] > 1) cert.defects.push_back("component of " + F.tgt.objects[pb[d].rep] + " hit twice");
  }
  cert.equivalence = cert.defects.empty();
  return cert;
}

GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f) {
  GroupoidFunctor h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (int x : f.obj) h.obj.push_back(g.obj[x]);
  for (int m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

GroupoidFunctor identity_functor(const FinGroupoid& G) {
  GroupoidFunctor F;
  F.src = G;
  F.tgt = G;
  F.obj.resize(G.objects.size());
  F.mor.resize(G.mor.size());
  std::iota(F.obj.begin(), F.obj.end(), 0);
  std::iota(F.mor.begin(), F.mor.end(), 0);
  return F;
}

int Group::inv(int g) const {
  for (int h = 0; h < order(); ++h)
    if (mul[g][h] == e) return h;
  throw std::runtime_error("element without inverse");
}

std::string validate_group(const Group& G) {
  const int n = G.order();
  if (n == 0) return "empty group";
  if (static_cast<int>(G.mul.size()) != n) return "table size mismatch";
  for (auto& row : G.mul) {
    if (static_cast<int>(row.size()) != n) return "table size mismatch";
    for (int v : row)
      if (v < 0 || v >= n) return "table entry out of range";
  }
  for (int g = 0; g < n; ++g)
    if (G.mul[G.e][g] != g || G.mul[g][G.e] != g) return "identity law fails at " + G.names[g];
  for (int g = 0; g < n; ++g) {
    bool has = false;
    for (int h = 0; h < n; ++h) has |= G.mul[g][h] == G.e && G.mul[h][g] == G.e;
    if (!has) return "no inverse for " + G.names[g];
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul[G.mul[a][b]][c] != G.mul[a][G.mul[b][c]])
          return "associativity fails at (" + G.names[a] + "," + G.names[b] + "," + G.names[c] + ")";
  return {};
}

Group cyclic_group(int n) {
  Group G;
  for (int i = 0; i < n; ++i) G.names.push_back(std::to_string(i));
  G.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
  return G;
}

Group dihedral_group(int n) {
  // r^a s^b encoded as a + n b
  Group G;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < n; ++a) G.names.push_back((b ? "sr" : "r") + std::to_string(a));
  G.mul.assign(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int a1 = x % n, b1 = x / n, a2 = y % n, b2 = y / n;
      // r^a1 s^b1 r^a2 s^b2 = r^(a1 + (-1)^b1 a2) s^(b1+b2)
      int a = ((a1 + (b1 ? -a2 : a2)) % n + n) % n;
      G.mul[x][y] = a + n * ((b1 + b2) % 2);
    }
  return G;
}

Group quaternion_group() {
  // elements +-1, +-i, +-j, +-k as sign*4 + unit
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* unit_name[4] = {"1", "i", "j", "k"};
  Group G;
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 4; ++u) G.names.push_back(std::string(s ? "-" : "") + unit_name[u]);
  G.mul.assign(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int s = (x / 4 + y / 4 + sign_mul[x % 4][y % 4]) % 2;
      G.mul[x][y] = 4 * s + unit_mul[x % 4][y % 4];
    }
  return G;
}

Group product_group(const Group& a, const Group& b) {
  Group G;
  const int m = b.order();
  for (auto& x : a.names)
    for (auto& y : b.names) G.names.push_back(x + "." + y);
  G.mul.assign(a.order() * m, std::vector<int>(a.order() * m));
  for (int x = 0; x < a.order() * m; ++x)
    for (int y = 0; y < a.order() * m; ++y)
      G.mul[x][y] = a.mul[x / m][y / m] * m + b.mul[x % m][y % m];
  G.e = a.e * m + b.e;
  return G;
}

Group subgroup(const Group& G, const std::vector<int>& elems) {
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
  Group H;
  for (int g : elems) H.names.push_back(G.names[g]);
  H.mul.assign(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto it = pos.find(G.mul[elems[i]][elems[j]]);
      if (it == pos.end()) throw std::invalid_argument("subset not closed under the group operation");
      H.mul[i][j] = it->second;
    }
  auto it = pos.find(G.e);
  if (it == pos.end()) throw std::invalid_argument("subset does not contain the identity");
  H.e = it->second;
  return H;
}

std::string validate_action(const GroupAction& A) {
  if (auto err = validate_group(A.G); !err.empty()) return err;
  if (static_cast<int>(A.act.size()) != A.G.order()) return "action table size mismatch";
  for (auto& row : A.act) {
    if (static_cast<int>(row.size()) != A.points) return "action table size mismatch";
    for (int v : row)
      if (v < 0 || v >= A.points) return "action entry out of range";
  }
  for (int x = 0; x < A.points; ++x) {
    if (A.act[A.G.e][x] != x) return "identity acts nontrivially on point " + std::to_string(x);
    for (int g = 0; g < A.G.order(); ++g)
      for (int h = 0; h < A.G.order(); ++h)
        if (A.act[A.G.mul[g][h]][x] != A.act[g][A.act[h][x]])
          return "not an action at (" + A.G.names[g] + "," + A.G.names[h] + "," + std::to_string(x) + ")";
  }
  return {};
}

GroupAction regular_action(const Group& G) {
  GroupAction A;
  A.G = G;
  A.points = G.order();
  A.act = G.mul;
  return A;
}

FinGroupoid action_groupoid(const GroupAction& A, int n) {
  if (auto err = validate_action(A); !err.empty()) throw std::invalid_argument(err);
  FinGroupoid P;
  const int k = n + 1;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      tuples.push_back(cur);
      return;
    }
    for (int x = 0; x < A.points; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::map<std::vector<int>, int> oidx;
  for (auto& t : tuples) {
    std::string s;
    for (int x : t) s += (s.empty() ? "" : ",") + std::to_string(x);
    oidx[t] = static_cast<int>(P.objects.size());
    P.objects.push_back(s);
  }
  const int ng = A.G.order();
  auto act = [&](int g, const std::vector<int>& t) {
    std::vector<int> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = A.act[g][t[i]];
    return r;
  };
  // morphism (g, x) has index x*ng + g
  for (std::size_t x = 0; x < tuples.size(); ++x)
    for (int g = 0; g < ng; ++g)
      P.mor.push_back({A.G.names[g] + "@" + P.objects[x], static_cast<int>(x), oidx[act(g, tuples[x])]});
  P.identity.resize(tuples.size());
  for (std::size_t x = 0; x < tuples.size(); ++x) P.identity[x] = static_cast<int>(x) * ng + A.G.e;
  P.inverse.resize(P.mor.size());
  for (int m = 0; m < static_cast<int>(P.mor.size()); ++m) {
    int g = m % ng;
    P.inverse[m] = P.mor[m].tgt * ng + A.G.inv(g);
    int y = P.mor[m].tgt;
    for (int h = 0; h < ng; ++h) P.comp[{y * ng + h, m}] = P.mor[m].src * ng + A.G.mul[h][g];
  }
  return P;
}

// ---------------------------------------------------------------------------

std::string key_string(const Key& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

std::string Groupoid::describe(const Key& x) const { return key_string(x); }

Level::Level(std::shared_ptr<const Groupoid> g, std::string name) : g_(std::move(g)), name_(std::move(name)) {}

void Level::classify_locked() const {
  if (done_) return;
  done_ = true;
  for (const Key& x : g_->cover()) {
    if (cache_.count(x)) continue;
    Key inv = g_->invariant(x);
    bool found = false;
    std::vector<Mor> iso;
    for (int c : buckets_[inv]) {
      iso.clear();
      g_->homs(reps_[c], x, false, iso);
      if (!iso.empty()) {
        cache_.emplace(x, std::make_pair(c, iso.front()));
        found = true;
        break;
      }
    }
    if (found) continue;
    int c = static_cast<int>(reps_.size());
    reps_.push_back(x);
    std::vector<Mor> a;
    g_->homs(x, x, true, a);
    auts_.push_back(std::move(a));
    buckets_[inv].push_back(c);
    cache_.emplace(x, std::make_pair(c, g_->identity(x)));
  }
}

std::pair<int, Mor> Level::canon_locked(const Key& x) const {
  classify_locked();
  auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  Key inv = g_->invariant(x);
  std::vector<Mor> iso;
  auto b = buckets_.find(inv);
  if (b != buckets_.end())
    for (int c : b->second) {
      iso.clear();
      g_->homs(reps_[c], x, false, iso);
      if (!iso.empty()) {
        auto r = std::make_pair(c, iso.front());
        cache_.emplace(x, r);
        return r;
      }
    }
  throw std::runtime_error("object outside the classified cover of " + name_ + ": " + g_->describe(x));
}

int Level::classes() const {
  std::lock_guard<std::mutex> lk(mu_);
  classify_locked();
  return static_cast<int>(reps_.size());
}

Key Level::rep(int c) const {
  std::lock_guard<std::mutex> lk(mu_);
  classify_locked();
  return reps_.at(c);
}

std::vector<Mor> Level::aut(int c) const {
  std::lock_guard<std::mutex> lk(mu_);
  classify_locked();
  return auts_.at(c);
}

std::pair<int, Mor> Level::canon(const Key& x) const {
  std::lock_guard<std::mutex> lk(mu_);
  return canon_locked(x);
}

Rat Level::mass() const {
  std::lock_guard<std::mutex> lk(mu_);
  classify_locked();
  Rat m = 0;
  for (auto& a : auts_) m += Rat(1, static_cast<long>(a.size()));
  return m;
}

Functor compose(const Functor& g, const Functor& f) {
  return {[g, f](const Key& x) { return g.obj(f.obj(x)); }, [g, f](const Mor& m) { return g.code(f(m)); }};
}

Functor identity_functor() {
  return {[](const Key& x) { return x; }, [](const Mor& m) { return m.code; }};
}

Functor SGrpd::restrict(int n, const std::vector<int>& S) const {
  std::vector<bool> keep(n + 1, false);
  for (int v : S) keep[v] = true;
  Functor F = identity_functor();
  int level = n;
  for (int v = n; v >= 0; --v)
    if (!keep[v]) {
      F = compose(face[level][v], F);
      --level;
    }
  return F;
}

namespace {

bool same(const Mor& a, const Mor& b) { return a.src == b.src && a.tgt == b.tgt && a.code == b.code; }

}  // namespace

GroupoidReport validate_sgrpd(const SGrpd& X) {
  GroupoidReport r;
  auto fail = [&](std::string w) {
    r.pass = false;
    r.witnesses.push_back(std::move(w));
  };
  for (int n = 0; n <= X.N; ++n) {
    const Level& L = *X.lvl[n];
    for (int c = 0; c < L.classes(); ++c) {
      Key x = L.rep(c);
      auto auts = L.aut(c);
      auto check = [&](const Functor& lhs, const Functor& rhs, const std::string& what) {
        if (lhs.obj(x) != rhs.obj(x)) {
          fail(what + " fails on object " + L.G().describe(x) + " at level " + std::to_string(n));
          return;
        }
        for (auto& a : auts)
          if (!same(lhs(a), rhs(a))) {
            fail(what + " fails on an automorphism of " + L.G().describe(x) + " at level " + std::to_string(n));
            return;
          }
      };
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
          check(compose(X.face[n - 1][i], X.face[n][j]), compose(X.face[n - 1][j - 1], X.face[n][i]),
                "d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                    std::to_string(i));
      if (X.semi || n >= X.N) continue;
      Functor id = identity_functor();
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          Functor lhs = compose(X.face[n + 1][i], X.degen[n][j]);
          std::string what = "d" + std::to_string(i) + " s" + std::to_string(j);
          if (i == j || i == j + 1) check(lhs, id, what + " = id");
          else if (n >= 1)
            check(lhs, i < j ? compose(X.degen[n - 1][j - 1], X.face[n][i]) : compose(X.degen[n - 1][j], X.face[n][i - 1]),
                  what);
        }
      if (n + 2 <= X.N)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            check(compose(X.degen[n + 1][i], X.degen[n][j]), compose(X.degen[n + 1][j + 1], X.degen[n][i]),
                  "s" + std::to_string(i) + " s" + std::to_string(j));
    }
  }
  return r;
}

GroupoidReport validate_sgrpd_map(const SGrpdMap& F) {
  GroupoidReport r;
  const SGrpd& Y = *F.src;
  const SGrpd& X = *F.tgt;
  for (int n = 0; n <= Y.N; ++n) {
    const Level& L = *Y.lvl[n];
    for (int c = 0; c < L.classes(); ++c) {
      Key y = L.rep(c);
      auto auts = L.aut(c);
      auto check = [&](const Functor& lhs, const Functor& rhs, const std::string& what) {
        bool ok = lhs.obj(y) == rhs.obj(y);
        for (auto& a : auts) ok = ok && same(lhs(a), rhs(a));
        if (!ok) {
          r.pass = false;
          r.witnesses.push_back(what + " fails at " + L.G().describe(y) + " level " + std::to_string(n));
        }
      };
      for (int i = 0; i <= n && n >= 1; ++i)
        check(compose(F.comp[n - 1], Y.face[n][i]), compose(X.face[n][i], F.comp[n]), "F d" + std::to_string(i));
      if (!Y.semi && !X.semi && n < Y.N)
        for (int i = 0; i <= n; ++i)
          check(compose(F.comp[n + 1], Y.degen[n][i]), compose(X.degen[n][i], F.comp[n]), "F s" + std::to_string(i));
    }
  }
  return r;
}

SquareVerdict homotopy_cartesian(const Level& A, const Level& B, const Level& C, const Level& D,
                                 const Functor& fb, const Functor& fd, const Functor& F,
                                 const Functor& G) {
  SquareVerdict v;
  const Groupoid& gC = C.G();
  auto fail = [&](std::string w) {
    if (v.ok) v.witness = std::move(w);
    v.ok = false;
  };
  // G(Aut d) for each class of D, with multiplicities
  const int nd = D.classes();
  std::vector<std::map<Key, int>> gAut(nd);
  auto gaut = [&](int d) -> const std::map<Key, int>& {
    auto& m = gAut[d];
    if (m.empty())
      for (auto& g : D.aut(d)) ++m[G(g).code];
    return m;
  };
  struct Img {
    int a;
    Mor gamma;  // F(rep b) -> G(rep d)
  };
  std::map<std::pair<int, int>, std::vector<Img>> images;
  const int na = A.classes();
  for (int a = 0; a < na; ++a) {
    Key x = A.rep(a);
    Key bx = fb.obj(x), dx = fd.obj(x);
    if (F.obj(bx) != G.obj(dx)) throw std::logic_error("square does not commute on " + A.G().describe(x));
    auto [cb, tb] = B.canon(bx);
    auto [cd, td] = D.canon(dx);
    Mor gamma = gC.compose(gC.inverse(G(td)), F(tb));
    // automorphisms: kernel of Aut(a) -> Aut(b) x Aut(d), and |Stab| = |Aut a|
    auto auts = A.aut(a);
    int kernel = 0;
    for (auto& al : auts) {
      Mor b1 = fb(al), d1 = fd(al);
      if (b1.code == B.G().identity(bx).code && d1.code == D.G().identity(dx).code) ++kernel;
    }
    if (kernel != 1) {
      fail("automorphisms of " + A.G().describe(x) + " not detected by the projections");
      continue;
    }
    const auto& mult = gaut(cd);
    Mor ginv = gC.inverse(gamma);
    long stab = 0;
    for (auto& f : B.aut(cb)) {
      Mor h = gC.compose(gamma, gC.compose(F(f), ginv));
      auto it = mult.find(h.code);
      if (it != mult.end()) stab += it->second;
    }
    if (stab != static_cast<long>(auts.size())) {
      fail("automorphism group of " + A.G().describe(x) + " has order " + std::to_string(auts.size()) +
           " but its image in the 2-pullback has " + std::to_string(stab));
      continue;
    }
    auto& bucket = images[{cb, cd}];
    for (auto& other : bucket) {
      // orbit test: exists f, g with G(g) gamma F(f)^{-1} = gamma'
      Mor oinv = gC.inverse(other.gamma);
      bool hit = false;
      for (auto& f : B.aut(cb)) {
        Mor h = gC.compose(gamma, gC.compose(F(f), oinv));
        if (mult.count(h.code)) {
          hit = true;
          break;
        }
      }
      if (hit) {
        fail("objects " + A.G().describe(A.rep(other.a)) + " and " + A.G().describe(x) +
             " are not isomorphic but have isomorphic images");
        break;
      }
    }
    bucket.push_back({a, gamma});
  }
  if (!v.ok) return v;
  // groupoid cardinality of the 2-pullback
  Rat massP = 0;
  std::map<int, std::vector<int>> dByC;
  for (int d = 0; d < nd; ++d) dByC[C.canon(G.obj(D.rep(d))).first].push_back(d);
  for (int b = 0; b < B.classes(); ++b) {
    int c = C.canon(F.obj(B.rep(b))).first;
    auto it = dByC.find(c);
    if (it == dByC.end()) continue;
    long ac = static_cast<long>(C.aut(c).size());
    long ab = static_cast<long>(B.aut(b).size());
    for (int d : it->second) massP += Rat(ac, ab * static_cast<long>(D.aut(d).size()));
  }
  Rat massA = A.mass();
  if (massA == massP) return v;
  // locate a component of the 2-pullback that is missed
  for (int b = 0; b < B.classes() && v.ok; ++b) {
    Key rb = B.rep(b);
    auto [c, t1] = C.canon(F.obj(rb));
    auto it = dByC.find(c);
    if (it == dByC.end()) continue;
    for (int d : it->second) {
      Key rd = D.rep(d);
      Mor t2 = C.canon(G.obj(rd)).second;
      const auto& mult = gaut(d);
      auto& bucket = images[{b, d}];
      for (auto& z : C.aut(c)) {
        Mor gamma = gC.compose(t2, gC.compose(z, gC.inverse(t1)));
        Mor ginv = gC.inverse(gamma);
        bool hit = false;
        for (auto& im : bucket) {
          for (auto& f : B.aut(b)) {
            Mor h = gC.compose(im.gamma, gC.compose(F(f), ginv));
            if (mult.count(h.code)) {
              hit = true;
              break;
            }
          }
          if (hit) break;
        }
        if (!hit) {
          fail("2-pullback object (" + B.G().describe(rb) + ", " + D.G().describe(rd) + ", " +
               key_string(gamma.code) + ") has no preimage");
          break;
        }
      }
      if (!v.ok) break;
    }
  }
  if (v.ok) fail("groupoid cardinalities differ: " + to_string(massA) + " vs " + to_string(massP));
  return v;
}

SquareVerdict equivalence(const Level& A, const Level& B, const Functor& F) {
  SquareVerdict v;
  std::vector<int> hit(B.classes(), -1);
  for (int a = 0; a < A.classes(); ++a) {
    Key x = A.rep(a);
    Key fx = F.obj(x);
    auto [b, t] = B.canon(fx);
    if (hit[b] >= 0) {
      v.ok = false;
      v.witness = "objects " + A.G().describe(A.rep(hit[b])) + " and " + A.G().describe(x) + " have isomorphic images";
      return v;
    }
    hit[b] = a;
    auto auts = A.aut(a);
    std::set<Key> image;
    for (auto& al : auts) image.insert(F(al).code);
    if (image.size() != auts.size() || auts.size() != B.aut(b).size()) {
      v.ok = false;
      v.witness = "automorphisms of " + A.G().describe(x) + " (" + std::to_string(auts.size()) + ") vs image (" +
                  std::to_string(B.aut(b).size()) + ")";
      return v;
    }
  }
  for (int b = 0; b < B.classes(); ++b)
    if (hit[b] < 0) {
      v.ok = false;
      v.witness = "object " + B.G().describe(B.rep(b)) + " not in the essential image";
      return v;
    }
  return v;
}

ExplicitGroupoid::ExplicitGroupoid(FinGroupoid G) : G_(std::move(G)) {
  for (int m = 0; m < static_cast<int>(G_.mor.size()); ++m) hom_[{G_.mor[m].src, G_.mor[m].tgt}].push_back(m);
}

std::vector<Key> ExplicitGroupoid::cover() const {
  std::vector<Key> out;
  for (int x = 0; x < static_cast<int>(G_.objects.size()); ++x) out.push_back({x});
  return out;
}

bool ExplicitGroupoid::is_object(const Key& x) const {
  return x.size() == 1 && x[0] >= 0 && x[0] < static_cast<std::int64_t>(G_.objects.size());
}

Mor ExplicitGroupoid::identity(const Key& x) const { return {x, x, {G_.identity[x[0]]}}; }

Mor ExplicitGroupoid::compose(const Mor& g, const Mor& f) const {
  return {f.src, g.tgt, {G_.compose(static_cast<int>(g.code[0]), static_cast<int>(f.code[0]))}};
}

Mor ExplicitGroupoid::inverse(const Mor& f) const { return {f.tgt, f.src, {G_.inverse[f.code[0]]}}; }

void ExplicitGroupoid::homs(const Key& x, const Key& y, bool all, std::vector<Mor>& out) const {
  auto it = hom_.find({static_cast<int>(x[0]), static_cast<int>(y[0])});
  if (it == hom_.end()) return;
  for (int m : it->second) {
    out.push_back({x, y, {m}});
    if (!all) return;
  }
}

std::string ExplicitGroupoid::describe(const Key& x) const { return G_.objects[x[0]]; }

FinGroupoid to_explicit(const Groupoid& G, const std::vector<Key>& objects) {
  FinGroupoid E;
  std::map<Key, int> oidx;
  for (auto& x : objects) {
    oidx[x] = static_cast<int>(E.objects.size());
    E.objects.push_back(G.describe(x));
  }
  std::map<std::tuple<Key, Key, Key>, int> midx;
  std::vector<Mor> mors;
  for (auto& x : objects)
    for (auto& y : objects) {
      std::vector<Mor> hs;
      G.homs(x, y, true, hs);
      for (auto& h : hs) {
        midx[{h.src, h.tgt, h.code}] = static_cast<int>(mors.size());
        E.mor.push_back({E.objects[oidx[x]] + "->" + E.objects[oidx[y]] + ":" + key_string(h.code), oidx[x], oidx[y]});
        mors.push_back(h);
      }
    }
  for (auto& x : objects) {
    Mor e = G.identity(x);
    E.identity.push_back(midx.at({e.src, e.tgt, e.code}));
  }
  for (auto& m : mors) {
    Mor i = G.inverse(m);
    E.inverse.push_back(midx.at({i.src, i.tgt, i.code}));
  }
  for (int f = 0; f < static_cast<int>(mors.size()); ++f)
    for (int g = 0; g < static_cast<int>(mors.size()); ++g)
      if (mors[f].tgt == mors[g].src) {
        Mor h = G.compose(mors[g], mors[f]);
        E.comp[{g, f}] = midx.at({h.src, h.tgt, h.code});
      }
  return E;
}

}  // namespace segal
