#include "segal/segal_check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace segal {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

Verdict CheckReport::overall() const {
  bool inconclusive = false;
  for (auto& c : instances) {
    if (c.verdict == Verdict::fail) return Verdict::fail;
    if (c.verdict == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::pass;
}

std::string CheckReport::first_failure() const {
  const CheckInstance* best = nullptr;
  for (auto& c : instances)
    if (c.verdict == Verdict::fail &&
        (!best || std::tie(c.n, c.i, c.j) < std::tie(best->n, best->i, best->j)))
      best = &c;
  if (!best) return {};
  return best->label + " (n=" + std::to_string(best->n) + ", i=" + std::to_string(best->i) +
         ", j=" + std::to_string(best->j) + "): " + best->witness;
}

void CheckReport::append(const CheckReport& other) {
  instances.insert(instances.end(), other.instances.begin(), other.instances.end());
}

// ---------------------------------------------------------------------------
// polygons

std::vector<PolygonSubdivision> enumerate_triangulations(int n) {
  if (n < 2) throw std::invalid_argument("triangulations need n >= 2");
  // triangulations of the polygon on vertices lo..hi, as diagonal lists
  std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, int>>>> memo;
  std::function<const std::vector<std::vector<std::pair<int, int>>>&(int, int)> tri =
      [&](int lo, int hi) -> const std::vector<std::vector<std::pair<int, int>>>& {
    auto key = std::make_pair(lo, hi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::pair<int, int>>> out;
    if (hi - lo < 2) {
      out.push_back({});
    } else {
      for (int k = lo + 1; k < hi; ++k)
        for (auto& a : tri(lo, k))
          for (auto& b : tri(k, hi)) {
            auto d = a;
            d.insert(d.end(), b.begin(), b.end());
            if (k > lo + 1) d.push_back({lo, k});
            if (k < hi - 1) d.push_back({k, hi});
            out.push_back(d);
          }
    }
    return memo[key] = out;
  };
  std::vector<PolygonSubdivision> out;
  for (auto d : tri(0, n)) {
    std::sort(d.begin(), d.end());
    out.push_back({n, d});
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.diagonals < b.diagonals; });
  return out;
}

PolygonSubdivision SymmetricSubdivision::polygon() const {
  PolygonSubdivision P;
  P.n = 2 * n + 1;
  auto prime = [&](int k) { return 2 * n + 1 - k; };
  for (int i : horizontal) P.diagonals.push_back({i, prime(i)});
  for (auto [i, j] : pairs) {
    P.diagonals.push_back({i, j});
    P.diagonals.push_back({prime(j), prime(i)});
  }
  return P;
}

std::string SymmetricSubdivision::show() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : horizontal) {
    os << (first ? "" : " ") << i << "'" << i;
    first = false;
  }
  for (auto [i, j] : pairs) {
    os << (first ? "" : " ") << i << j << "&" << i << "'" << j << "'";
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<SymmetricSubdivision> enumerate_symmetric_subdivisions(int n) {
  if (n < 1) throw std::invalid_argument("symmetric subdivisions need n >= 1");
  struct Unit {
    bool horizontal;
    int i, j;
  };
  std::vector<Unit> units;
  for (int i = 1; i < n; ++i) units.push_back({true, i, i});
  for (int i = 0; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) units.push_back({false, i, j});
  std::vector<SymmetricSubdivision> out;
  SymmetricSubdivision cur;
  cur.n = n;
  std::function<void(std::size_t)> rec = [&](std::size_t u) {
    if (u == units.size()) {
      out.push_back(cur);
      return;
    }
    rec(u + 1);
    auto saved = cur;
    if (units[u].horizontal)
      cur.horizontal.push_back(units[u].i);
    else
      cur.pairs.push_back({units[u].i, units[u].j});
    if (check_subdivision(cur.polygon()).empty()) rec(u + 1);
    cur = saved;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    auto sa = a.horizontal.size() + a.pairs.size(), sb = b.horizontal.size() + b.pairs.size();
    if (sa != sb) return sa < sb;
    return std::tie(a.horizontal, a.pairs) < std::tie(b.horizontal, b.pairs);
  });
  return out;
}

bool refines(const SymmetricSubdivision& a, const SymmetricSubdivision& b) {
  for (int i : b.horizontal)
    if (std::find(a.horizontal.begin(), a.horizontal.end(), i) == a.horizontal.end()) return false;
  for (auto p : b.pairs)
    if (std::find(a.pairs.begin(), a.pairs.end(), p) == a.pairs.end()) return false;
  return true;
}

bool is_maximal(const SymmetricSubdivision& P, const std::vector<SymmetricSubdivision>& all) {
  const auto size = P.horizontal.size() + P.pairs.size();
  for (auto& Q : all)
    if (Q.horizontal.size() + Q.pairs.size() > size && refines(Q, P)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// set level

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// A -> B x_C D strict; fb, fd indexed by A, F by B, G by D
struct SetSquare {
  std::vector<int> fb, fd, F, G;
  int sizeB = 0, sizeD = 0;
  std::function<std::string(int)> nameA;
};

CheckInstance set_square(const std::string& label, int n, int i, int j, const SetSquare& s) {
  CheckInstance c{label, n, i, j, Verdict::pass, {}};
  std::map<std::pair<int, int>, int> hit;
  for (std::size_t a = 0; a < s.fb.size(); ++a) {
    auto key = std::make_pair(s.fb[a], s.fd[a]);
    auto [it, fresh] = hit.emplace(key, static_cast<int>(a));
    if (!fresh) {
      c.verdict = Verdict::fail;
      c.witness = "not injective: " + s.nameA(it->second) + " and " + s.nameA(static_cast<int>(a)) +
                  " have the same image";
      return c;
    }
  }
  std::map<int, std::vector<int>> byC;
  for (int d = 0; d < s.sizeD; ++d) byC[s.G[d]].push_back(d);
  for (int b = 0; b < s.sizeB; ++b) {
    auto it = byC.find(s.F[b]);
    if (it == byC.end()) continue;
    for (int d : it->second)
      if (!hit.count({b, d})) {
        c.verdict = Verdict::fail;
        c.witness = "not surjective: pair (" + std::to_string(b) + "," + std::to_string(d) + ") missed";
        return c;
      }
  }
  return c;
}

CheckInstance inconclusive(const std::string& label, int n, int i, int j) {
  return {label, n, i, j, Verdict::inconclusive, "truncation too shallow"};
}

std::vector<int> compose_tables(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = g[f[k]];
  return out;
}

std::function<std::string(int)> namer(const SSet& X, int n) {
  return [&X, n](int k) { return "'" + X.ids[n][k] + "'"; };
}

std::string lbl(const char* f, int a, int b) {
  return std::string(f) + "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

CheckReport check_1segal(const SSet& X, int N) {
  CheckReport R;
  R.condition = "1-Segal";
  R.N = N;
  R.header = "criterion X_n -> X_{0..i} x_{X_i} X_{i..n}, 0 < i < n";
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) {
      if (n > X.N) {
        R.instances.push_back(inconclusive("segal", n, i, 0));
        continue;
      }
      SetSquare s;
      s.fb = restrict_level(X, n, range(0, i));
      s.fd = restrict_level(X, n, range(i, n));
      s.F = restrict_level(X, i, {i});
      s.G = restrict_level(X, n - i, {0});
      s.sizeB = X.size(i);
      s.sizeD = X.size(n - i);
      s.nameA = namer(X, n);
      R.instances.push_back(set_square("segal", n, i, 0, s));
    }
  return R;
}

CheckReport check_2segal(const SSet& X, int N, bool unital) {
  if (unital && X.semi) throw std::invalid_argument("unital conditions need degeneracies");
  CheckReport R;
  R.condition = unital ? "unital 2-Segal" : "2-Segal";
  R.N = N;
  R.header = "criterion f_{i,j} with i = 0 or j = n";
  for (int n = 3; n <= N; ++n) {
    std::vector<std::pair<int, int>> ij;
    for (int j = 2; j <= n - 1; ++j) ij.push_back({0, j});
    for (int i = 1; i <= n - 2; ++i) ij.push_back({i, n});
    for (auto [i, j] : ij) {
      if (n > X.N) {
        R.instances.push_back(inconclusive(lbl("f", i, j), n, i, j));
        continue;
      }
      auto outer = join(range(0, i), range(j, n));
      const int ko = static_cast<int>(outer.size()) - 1;
      SetSquare s;
      s.fb = restrict_level(X, n, range(i, j));
      s.fd = restrict_level(X, n, outer);
      s.F = restrict_level(X, j - i, {0, j - i});
      s.G = restrict_level(X, ko, {i, i + 1});
      s.sizeB = X.size(j - i);
      s.sizeD = X.size(ko);
      s.nameA = namer(X, n);
      R.instances.push_back(set_square(lbl("f", i, j), n, i, j, s));
    }
  }
  if (unital)
    for (int n = 2; n <= N; ++n)
      for (int i = 0; i <= n - 1; ++i) {
        if (n > X.N) {
          R.instances.push_back(inconclusive("unit s_" + std::to_string(i), n, i, 0));
          continue;
        }
        SetSquare s;
        s.fb = restrict_level(X, n - 1, {i});
        s.fd = X.degen[n - 1][i];
        s.F = X.degen[0][0];
        s.G = restrict_level(X, n, {i, i + 1});
        s.sizeB = X.size(0);
        s.sizeD = X.size(n);
        s.nameA = namer(X, n - 1);
        R.instances.push_back(set_square("unit s_" + std::to_string(i), n, i, 0, s));
      }
  return R;
}

CheckReport check_rel1segal(const SMap& F, Side side, int N) {
  const SSet& X = F.tgt;
  const SSet& Y = F.src;
  if (!check_1segal(X, N).pass()) throw std::invalid_argument("base is not 1-Segal");
  const bool right = side == Side::right;
  CheckReport R;
  R.condition = right ? "right relative 1-Segal" : "left relative 1-Segal";
  R.N = N;
  R.header = right ? "Y_n -> X_{0..i} x_{X_i} Y_{i..n}; split form (F_1, d_0) : Y_1 -> X_1 x_{X_0} Y_0"
                   : "Y_n -> Y_{0..i} x_{X_i} X_{i..n}; split form (F_1, d_1) : Y_1 -> X_1 x_{X_0} Y_0";
  // outside squares
  CheckReport outside;
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      if (n > Y.N || n > X.N) {
        outside.instances.push_back(inconclusive("outside", n, i, 0));
        continue;
      }
      SetSquare s;
      if (right) {
        s.fb = restrict_level(Y, n, range(i, n));
        s.fd = compose_tables(F.comp[i], restrict_level(Y, n, range(0, i)));
        s.F = compose_tables(F.comp[0], restrict_level(Y, n - i, {0}));
        s.G = restrict_level(X, i, {i});
        s.sizeB = Y.size(n - i);
        s.sizeD = X.size(i);
      } else {
        s.fb = restrict_level(Y, n, range(0, i));
        s.fd = compose_tables(F.comp[n - i], restrict_level(Y, n, range(i, n)));
        s.F = compose_tables(F.comp[0], restrict_level(Y, i, {i}));
        s.G = restrict_level(X, n - i, {0});
        s.sizeB = Y.size(i);
        s.sizeD = X.size(n - i);
      }
      s.nameA = namer(Y, n);
      outside.instances.push_back(set_square("outside", n, i, 0, s));
    }
  // split form
  CheckReport split = check_1segal(Y, N);
  for (auto& c : split.instances) c.label = "Y " + c.label;
  {
    SetSquare s;
    s.fb = F.comp[1];
    s.fd = restrict_level(Y, 1, {right ? 1 : 0});
    s.F = restrict_level(X, 1, {right ? 1 : 0});
    s.G = F.comp[0];
    s.sizeB = X.size(1);
    s.sizeD = Y.size(0);
    s.nameA = namer(Y, 1);
    split.instances.push_back(set_square(right ? "(F_1, d_0)" : "(F_1, d_1)", 1, 0, 0, s));
  }
  R.append(outside);
  R.append(split);
  CheckInstance agree{"split vs outside", 0, 0, 0, Verdict::pass, {}};
  if (outside.overall() != split.overall()) {
    agree.verdict = Verdict::fail;
    agree.witness = std::string("outside ") + verdict_name(outside.overall()) + ", split " +
                    verdict_name(split.overall());
  }
  R.instances.push_back(agree);
  return R;
}

CheckReport check_rel2segal(const SMap& F, int N, bool unital) {
  const SSet& X = F.tgt;
  const SSet& Y = F.src;
  if (!check_2segal(X, N, false).pass()) throw std::invalid_argument("base is not 2-Segal");
  if (unital && (X.semi || Y.semi)) throw std::invalid_argument("unital conditions need degeneracies");
  CheckReport R = check_1segal(Y, N);
  for (auto& c : R.instances) c.label = "Y " + c.label;
  R.condition = unital ? "unital relative 2-Segal" : "relative 2-Segal";
  R.N = N;
  R.header = "Y 1-Segal and Y_n -> X_n x_{X_{0,n}} Y_{0,n}";
  for (int n = 1; n <= N; ++n) {
    if (n > Y.N || n > X.N) {
      R.instances.push_back(inconclusive("relative", n, 0, n));
      continue;
    }
    SetSquare s;
    s.fb = F.comp[n];
    s.fd = restrict_level(Y, n, {0, n});
    s.F = restrict_level(X, n, {0, n});
    s.G = F.comp[1];
    s.sizeB = X.size(n);
    s.sizeD = Y.size(1);
    s.nameA = namer(Y, n);
    R.instances.push_back(set_square("relative", n, 0, n, s));
  }
  if (unital)
    for (int n = 2; n <= N; ++n)
      for (int i = 0; i <= n - 1; ++i) {
        if (n > Y.N || n > X.N) {
          R.instances.push_back(inconclusive("unit s_" + std::to_string(i), n, i, 0));
          continue;
        }
        SetSquare s;
        s.fb = compose_tables(F.comp[0], restrict_level(Y, n - 1, {i}));
        s.fd = Y.degen[n - 1][i];
        s.F = X.degen[0][0];
        s.G = compose_tables(F.comp[1], restrict_level(Y, n, {i, i + 1}));
        s.sizeB = X.size(0);
        s.sizeD = Y.size(n);
        s.nameA = namer(Y, n - 1);
        R.instances.push_back(set_square("unit s_" + std::to_string(i), n, i, 0, s));
      }
  return R;
}

CheckReport check_rel2segal_outside(const SMap& F, int N) {
  const SSet& X = F.tgt;
  const SSet& Y = F.src;
  CheckReport R;
  R.condition = "relative 2-Segal outside squares";
  R.N = N;
  R.header = "Y_n -> X_{i..j} x_{X_{i,j}} Y_{0..i,j..n}, 0 <= i < j <= n";
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (n > Y.N || n > X.N) {
          R.instances.push_back(inconclusive(lbl("outside", i, j), n, i, j));
          continue;
        }
        auto outer = join(range(0, i), range(j, n));
        const int ko = static_cast<int>(outer.size()) - 1;
        SetSquare s;
        s.fb = compose_tables(F.comp[j - i], restrict_level(Y, n, range(i, j)));
        s.fd = restrict_level(Y, n, outer);
        s.F = restrict_level(X, j - i, {0, j - i});
        s.G = compose_tables(F.comp[1], restrict_level(Y, ko, {i, i + 1}));
        s.sizeB = X.size(j - i);
        s.sizeD = Y.size(ko);
        s.nameA = namer(Y, n);
        R.instances.push_back(set_square(lbl("outside", i, j), n, i, j, s));
      }
  return R;
}

// ---------------------------------------------------------------------------
// symmetric membranes

SymmetricCells symmetric_cells(const SymmetricSubdivision& P) {
  const int n = P.n;
  const int M = 2 * n + 1;
  std::vector<std::vector<int>> cells;
  if (M >= 2) {
    auto Q = P.polygon();
    cells = subdivision_subset(Q);
  }
  SymmetricCells out;
  for (auto& c : cells) {
    std::vector<int> half;
    bool has_primed = false, has_unprimed = false;
    for (int p : c) {
      if (p <= n) {
        half.push_back(p);
        has_unprimed = true;
      } else {
        has_primed = true;
      }
    }
    if (has_primed && has_unprimed)
      out.ycells.push_back(half);
    else if (has_unprimed)
      out.xcells.push_back(half);
  }
  return out;
}

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> positions_in(const std::vector<int>& sub, const std::vector<int>& in) {
  std::vector<int> pos;
  for (int v : sub) pos.push_back(static_cast<int>(std::lower_bound(in.begin(), in.end(), v) - in.begin()));
  return pos;
}

}  // namespace

std::vector<std::vector<int>> symmetric_membranes(const SMap& F, const SymmetricCells& cells) {
  const SSet& X = F.tgt;
  const SSet& Y = F.src;
  // cell list: Y cells first, then X cells; value in X for every shared face with an X cell
  struct Cell {
    bool y;
    std::vector<int> S;
  };
  std::vector<Cell> all;
  for (auto& S : cells.ycells) all.push_back({true, S});
  for (auto& S : cells.xcells) all.push_back({false, S});
  const int c = static_cast<int>(all.size());
  for (auto& cell : all)
    if (static_cast<int>(cell.S.size()) - 1 > (cell.y ? Y.N : X.N))
      throw std::invalid_argument("cell above truncation");
  // res[a][b][k]: image of simplex k of cell a on the face shared with b, in Y when both are Y cells
  std::vector<std::vector<std::vector<int>>> res(c, std::vector<std::vector<int>>(c));
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      if (a == b) continue;
      auto I = intersect(all[a].S, all[b].S);
      if (I.empty()) continue;
      const int lvl = static_cast<int>(all[a].S.size()) - 1;
      auto pos = positions_in(I, all[a].S);
      if (all[a].y) {
        auto r = restrict_level(Y, lvl, pos);
        if (!all[b].y) r = compose_tables(F.comp[I.size() - 1], r);
        res[a][b] = r;
      } else {
        res[a][b] = restrict_level(X, lvl, pos);
      }
    }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(c);
  std::function<void(int)> rec = [&](int a) {
    if (a == c) {
      out.push_back(cur);
      return;
    }
    const int lvl = static_cast<int>(all[a].S.size()) - 1;
    const int size = all[a].y ? Y.size(lvl) : X.size(lvl);
    for (int k = 0; k < size; ++k) {
      bool ok = true;
      for (int b = 0; b < a && ok; ++b)
        if (!res[a][b].empty() && res[a][b][k] != res[b][a][cur[b]]) ok = false;
      if (!ok) continue;
      cur[a] = k;
      rec(a + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> symmetric_restriction(const SMap& F, int n, int k, const SymmetricCells& cells) {
  std::vector<int> t;
  for (auto& S : cells.ycells) t.push_back(restrict_simplex(F.src, n, k, S));
  for (auto& S : cells.xcells) t.push_back(F.comp[S.size() - 1][restrict_simplex(F.src, n, k, S)]);
  return t;
}

CrosscheckReport crosscheck_subdivision_criteria(const SMap& F, int N) {
  CrosscheckReport out;
  const SSet& X = F.tgt;
  const SSet& Y = F.src;
  out.base = check_2segal(X, N, false);
  out.triangulations.condition = "triangulations";
  out.triangulations.N = N;
  for (int n = 3; n <= N; ++n)
    for (auto& T : enumerate_triangulations(n)) {
      std::ostringstream os;
      os << "T";
      for (auto [a, b] : T.diagonals) os << " " << a << b;
      if (n > X.N) {
        out.triangulations.instances.push_back(inconclusive(os.str(), n, 0, 0));
        continue;
      }
      auto cells = subdivision_subset(T);
      auto mem = membrane_space(cells, X);
      std::sort(mem.begin(), mem.end());
      std::vector<std::vector<int>> img;
      for (int k = 0; k < X.size(n); ++k) img.push_back(membrane_restriction(X, n, k, cells));
      std::sort(img.begin(), img.end());
      CheckInstance c{os.str(), n, 0, 0, Verdict::pass, {}};
      if (std::adjacent_find(img.begin(), img.end()) != img.end() || img != mem) {
        c.verdict = Verdict::fail;
        c.witness = std::to_string(X.size(n)) + " simplices vs " + std::to_string(mem.size()) + " membranes";
      }
      out.triangulations.instances.push_back(c);
    }
  bool base_ok = out.base.pass();
  out.relative.condition = "relative 2-Segal";
  if (base_ok) {
    out.relative = check_rel2segal(F, N, false);
  } else {
    out.relative.instances.push_back({"base", 0, 0, 0, Verdict::fail, "base not 2-Segal"});
  }
  out.subdivisions.condition = "symmetric subdivisions";
  out.maximal.condition = "maximal symmetric subdivisions";
  out.subdivisions.N = out.maximal.N = N;
  for (int n = 2; n <= N; ++n) {
    auto all = enumerate_symmetric_subdivisions(n);
    for (auto& P : all) {
      CheckInstance c{P.show(), n, 0, 0, Verdict::pass, {}};
      if (n > Y.N || n > X.N) {
        c.verdict = Verdict::inconclusive;
        c.witness = "truncation too shallow";
      } else {
        auto cells = symmetric_cells(P);
        auto mem = symmetric_membranes(F, cells);
        std::vector<std::vector<int>> img;
        for (int k = 0; k < Y.size(n); ++k) img.push_back(symmetric_restriction(F, n, k, cells));
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end() || img != mem) {
          c.verdict = Verdict::fail;
          c.witness = std::to_string(Y.size(n)) + " simplices vs " + std::to_string(mem.size()) + " membranes";
        }
      }
      out.subdivisions.instances.push_back(c);
      if (is_maximal(P, all)) out.maximal.instances.push_back(c);
    }
  }
  const bool tri_ok = out.triangulations.overall() == out.base.overall();
  const bool rel_ok = !base_ok || (out.relative.overall() == out.subdivisions.overall() &&
                                   out.subdivisions.overall() == out.maximal.overall());
  out.agree = tri_ok && rel_ok;
  return out;
}

// ---------------------------------------------------------------------------
// groupoid level

namespace {

CheckInstance grpd_square(const std::string& label, int n, int i, int j, const Level& A, const Level& B,
                          const Level& C, const Level& D, const Functor& fb, const Functor& fd, const Functor& F,
                          const Functor& G) {
  auto v = homotopy_cartesian(A, B, C, D, fb, fd, F, G);
  return {label, n, i, j, v.ok ? Verdict::pass : Verdict::fail, v.witness};
}

}  // namespace

CheckReport check_1segal(const SGrpd& X, int N) {
  CheckReport R;
  R.condition = "1-Segal";
  R.N = N;
  R.header = "criterion X_n -> X_{0..i} x^h_{X_i} X_{i..n}, 0 < i < n";
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) {
      if (n > X.N) {
        R.instances.push_back(inconclusive("segal", n, i, 0));
        continue;
      }
      R.instances.push_back(grpd_square("segal", n, i, 0, *X.lvl[n], *X.lvl[i], *X.lvl[0], *X.lvl[n - i],
                                        X.restrict(n, range(0, i)), X.restrict(n, range(i, n)),
                                        X.restrict(i, {i}), X.restrict(n - i, {0})));
    }
  return R;
}

CheckReport check_2segal(const SGrpd& X, int N, bool unital) {
  if (unital && X.semi) throw std::invalid_argument("unital conditions need degeneracies");
  CheckReport R;
  R.condition = unital ? "unital 2-Segal" : "2-Segal";
  R.N = N;
  R.header = "criterion f_{i,j} with i = 0 or j = n";
  for (int n = 3; n <= N; ++n) {
    std::vector<std::pair<int, int>> ij;
    for (int j = 2; j <= n - 1; ++j) ij.push_back({0, j});
    for (int i = 1; i <= n - 2; ++i) ij.push_back({i, n});
    for (auto [i, j] : ij) {
      if (n > X.N) {
        R.instances.push_back(inconclusive(lbl("f", i, j), n, i, j));
        continue;
      }
      auto outer = join(range(0, i), range(j, n));
      const int ko = static_cast<int>(outer.size()) - 1;
      R.instances.push_back(grpd_square(lbl("f", i, j), n, i, j, *X.lvl[n], *X.lvl[j - i], *X.lvl[1], *X.lvl[ko],
                                        X.restrict(n, range(i, j)), X.restrict(n, outer),
                                        X.restrict(j - i, {0, j - i}), X.restrict(ko, {i, i + 1})));
    }
  }
  if (unital)
    for (int n = 2; n <= N; ++n)
      for (int i = 0; i <= n - 1; ++i) {
        const std::string l = "unit s_" + std::to_string(i);
        if (n > X.N) {
          R.instances.push_back(inconclusive(l, n, i, 0));
          continue;
        }
        R.instances.push_back(grpd_square(l, n, i, 0, *X.lvl[n - 1], *X.lvl[0], *X.lvl[1], *X.lvl[n],
                                          X.restrict(n - 1, {i}), X.degen[n - 1][i], X.degen[0][0],
                                          X.restrict(n, {i, i + 1})));
      }
  return R;
}

CheckReport check_rel1segal(const SGrpdMap& F, Side side, int N) {
  const SGrpd& X = *F.tgt;
  const SGrpd& Y = *F.src;
  if (!check_1segal(X, N).pass()) throw std::invalid_argument("base is not 1-Segal");
  const bool right = side == Side::right;
  CheckReport R;
  R.condition = right ? "right relative 1-Segal" : "left relative 1-Segal";
  R.N = N;
  R.header = right ? "Y_n -> X_{0..i} x^h_{X_i} Y_{i..n}; split form (F_1, d_0) : Y_1 -> X_1 x^h_{X_0} Y_0"
                   : "Y_n -> Y_{0..i} x^h_{X_i} X_{i..n}; split form (F_1, d_1) : Y_1 -> X_1 x^h_{X_0} Y_0";
  CheckReport outside;
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      if (n > Y.N || n > X.N) {
        outside.instances.push_back(inconclusive("outside", n, i, 0));
        continue;
      }
      if (right)
        outside.instances.push_back(grpd_square("outside", n, i, 0, *Y.lvl[n], *Y.lvl[n - i], *X.lvl[0], *X.lvl[i],
                                                Y.restrict(n, range(i, n)),
                                                compose(F.comp[i], Y.restrict(n, range(0, i))),
                                                compose(F.comp[0], Y.restrict(n - i, {0})), X.restrict(i, {i})));
      else
        outside.instances.push_back(grpd_square("outside", n, i, 0, *Y.lvl[n], *Y.lvl[i], *X.lvl[0], *X.lvl[n - i],
                                                Y.restrict(n, range(0, i)),
                                                compose(F.comp[n - i], Y.restrict(n, range(i, n))),
                                                compose(F.comp[0], Y.restrict(i, {i})), X.restrict(n - i, {0})));
    }
  CheckReport split = check_1segal(Y, N);
  for (auto& c : split.instances) c.label = "Y " + c.label;
  split.instances.push_back(grpd_square(right ? "(F_1, d_0)" : "(F_1, d_1)", 1, 0, 0, *Y.lvl[1], *X.lvl[1],
                                        *X.lvl[0], *Y.lvl[0], F.comp[1], Y.restrict(1, {right ? 1 : 0}),
                                        X.restrict(1, {right ? 1 : 0}), F.comp[0]));
  R.append(outside);
  R.append(split);
  CheckInstance agree{"split vs outside", 0, 0, 0, Verdict::pass, {}};
  if (outside.overall() != split.overall()) {
    agree.verdict = Verdict::fail;
    agree.witness = std::string("outside ") + verdict_name(outside.overall()) + ", split " +
                    verdict_name(split.overall());
  }
  R.instances.push_back(agree);
  return R;
}

CheckReport check_rel2segal(const SGrpdMap& F, int N, bool unital) {
  const SGrpd& X = *F.tgt;
  const SGrpd& Y = *F.src;
  if (!check_2segal(X, N, false).pass()) throw std::invalid_argument("base is not 2-Segal");
  if (unital && (X.semi || Y.semi)) throw std::invalid_argument("unital conditions need degeneracies");
  CheckReport R = check_1segal(Y, N);
  for (auto& c : R.instances) c.label = "Y " + c.label;
  R.condition = unital ? "unital relative 2-Segal" : "relative 2-Segal";
  R.N = N;
  R.header = "Y 1-Segal and Y_n -> X_n x^h_{X_{0,n}} Y_{0,n}";
  for (int n = 1; n <= N; ++n) {
    if (n > Y.N || n > X.N) {
      R.instances.push_back(inconclusive("relative", n, 0, n));
      continue;
    }
    R.instances.push_back(grpd_square("relative", n, 0, n, *Y.lvl[n], *X.lvl[n], *X.lvl[1], *Y.lvl[1], F.comp[n],
                                      Y.restrict(n, {0, n}), X.restrict(n, {0, n}), F.comp[1]));
  }
  if (unital)
    for (int n = 2; n <= N; ++n)
      for (int i = 0; i <= n - 1; ++i) {
        const std::string l = "unit s_" + std::to_string(i);
        if (n > Y.N || n > X.N) {
          R.instances.push_back(inconclusive(l, n, i, 0));
          continue;
        }
        R.instances.push_back(grpd_square(l, n, i, 0, *Y.lvl[n - 1], *X.lvl[0], *X.lvl[1], *Y.lvl[n],
                                          compose(F.comp[0], Y.restrict(n - 1, {i})), Y.degen[n - 1][i],
                                          X.degen[0][0], compose(F.comp[1], Y.restrict(n, {i, i + 1}))));
      }
  return R;
}

}  // namespace segal
