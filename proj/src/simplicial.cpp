#include "segal/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace segal {

int SSet::find(int n, const std::string& id) const {
  if (n < 0 || n >= static_cast<int>(ids.size())) return -1;
  auto it = std::find(ids[n].begin(), ids[n].end(), id);
  return it == ids[n].end() ? -1 : static_cast<int>(it - ids[n].begin());
}

namespace {

bool table_ok(const std::vector<int>& t, int dom, int cod) {
  if (static_cast<int>(t.size()) != dom) return false;
  for (int v : t)
    if (v < 0 || v >= cod) return false;
  return true;
}

}  // namespace

ValidationReport validate_simplicial(const SSet& X) {
  ValidationReport r;
  auto structural = [&](std::string msg) {
    r.pass = false;
    r.structural.push_back(std::move(msg));
  };
  if (X.N < 1) structural("truncation level below 1");
  if (static_cast<int>(X.ids.size()) != X.N + 1) {
    structural("expected " + std::to_string(X.N + 1) + " levels");
    return r;
  }
  if (static_cast<int>(X.face.size()) < X.N + 1) {
    structural("face tables missing");
    return r;
  }
  for (int n = 1; n <= X.N; ++n) {
    if (static_cast<int>(X.face[n].size()) != n + 1) {
      structural("face[" + std::to_string(n) + "] has wrong arity");
      continue;
    }
    for (int i = 0; i <= n; ++i)
      if (!table_ok(X.face[n][i], X.size(n), X.size(n - 1)))
        structural("face[" + std::to_string(n) + "][" + std::to_string(i) + "] not total");
  }
  if (!X.semi) {
    if (static_cast<int>(X.degen.size()) < X.N) {
      structural("degeneracy tables missing");
    } else {
      for (int n = 0; n < X.N; ++n) {
        if (static_cast<int>(X.degen[n].size()) != n + 1) {
          structural("degeneracy[" + std::to_string(n) + "] has wrong arity");
          continue;
        }
        for (int i = 0; i <= n; ++i)
          if (!table_ok(X.degen[n][i], X.size(n), X.size(n + 1)))
            structural("degeneracy[" + std::to_string(n) + "][" + std::to_string(i) +
                       "] not total");
      }
    }
  }
  if (!r.structural.empty()) return r;

  auto fail = [&](int n, int i, int j, int k, const char* what) {
    r.pass = false;
    r.violations.push_back({n, i, j, X.ids[n][k], what});
  };
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= X.N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int k = 0; k < X.size(n); ++k)
          if (X.d(n - 1, i, X.d(n, j, k)) != X.d(n - 1, j - 1, X.d(n, i, k)))
            fail(n, i, j, k, "d_i d_j = d_{j-1} d_i");
  if (X.semi) return r;
  for (int n = 0; n < X.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k < X.size(n); ++k) {
        int sk = X.s(n, j, k);
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = X.d(n + 1, i, sk);
          if (i == j || i == j + 1) {
            if (lhs != k) fail(n, i, j, k, "d_j s_j = d_{j+1} s_j = id");
          } else if (n >= 1) {
            int rhs = i < j ? X.s(n - 1, j - 1, X.d(n, i, k)) : X.s(n - 1, j, X.d(n, i - 1, k));
            if (lhs != rhs) fail(n, i, j, k, i < j ? "d_i s_j = s_{j-1} d_i" : "d_i s_j = s_j d_{i-1}");
          }
        }
      }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= X.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int k = 0; k < X.size(n); ++k)
          if (X.s(n + 1, i, X.s(n, j, k)) != X.s(n + 1, j + 1, X.s(n, i, k)))
            fail(n, i, j, k, "s_i s_j = s_{j+1} s_i");
  return r;
}

ValidationReport validate_map(const SMap& F) {
  ValidationReport r;
  if (F.src.N != F.tgt.N) {
    r.pass = false;
    r.structural.push_back("truncation mismatch");
    return r;
  }
  for (int n = 0; n <= F.src.N; ++n)
    if (n >= static_cast<int>(F.comp.size()) || !table_ok(F.comp[n], F.src.size(n), F.tgt.size(n))) {
      r.pass = false;
      r.structural.push_back("component " + std::to_string(n) + " not total");
    }
  if (!r.pass) return r;
  for (int n = 1; n <= F.src.N; ++n)
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < F.src.size(n); ++k)
        if (F.comp[n - 1][F.src.d(n, i, k)] != F.tgt.d(n, i, F.comp[n][k])) {
          r.pass = false;
          r.violations.push_back({n, i, -1, F.src.ids[n][k], "F d_i = d_i F"});
        }
  if (!F.src.semi && !F.tgt.semi)
    for (int n = 0; n < F.src.N; ++n)
      for (int i = 0; i <= n; ++i)
        for (int k = 0; k < F.src.size(n); ++k)
          if (F.comp[n + 1][F.src.s(n, i, k)] != F.tgt.s(n, i, F.comp[n][k])) {
            r.pass = false;
            r.violations.push_back({n, i, -1, F.src.ids[n][k], "F s_i = s_i F"});
          }
  return r;
}

SSetBuilder::SSetBuilder(int N, bool semi) : index_(N + 1) {
  X_.N = N;
  X_.semi = semi;
  X_.ids.resize(N + 1);
  X_.face.resize(N + 1);
  if (!semi) X_.degen.resize(N);
}

void SSetBuilder::level(int n, std::vector<std::string> ids) {
  index_[n].clear();
  for (int k = 0; k < static_cast<int>(ids.size()); ++k) index_[n].emplace(ids[k], k);
  X_.ids[n] = std::move(ids);
}

int SSetBuilder::lookup(int n, const std::string& id) const {
  auto it = index_[n].find(id);
  if (it == index_[n].end())
    throw std::runtime_error("simplex '" + id + "' missing at level " + std::to_string(n));
  return it->second;
}

void SSetBuilder::faces(const std::function<std::string(int, int, const std::string&)>& rule) {
  for (int n = 1; n <= X_.N; ++n) {
    X_.face[n].assign(n + 1, std::vector<int>(X_.ids[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < X_.ids[n].size(); ++k)
        X_.face[n][i][k] = lookup(n - 1, rule(n, i, X_.ids[n][k]));
  }
}

void SSetBuilder::degeneracies(
    const std::function<std::string(int, int, const std::string&)>& rule) {
  if (X_.semi) return;
  for (int n = 0; n < X_.N; ++n) {
    X_.degen[n].assign(n + 1, std::vector<int>(X_.ids[n].size()));
    for (int i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < X_.ids[n].size(); ++k)
        X_.degen[n][i][k] = lookup(n + 1, rule(n, i, X_.ids[n][k]));
  }
}

SSet SSetBuilder::build() const { return X_; }

namespace {

void monotone(int n, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n + 1) {
    out.push_back(cur);
    return;
  }
  for (int v = cur.empty() ? 0 : cur.back(); v <= m; ++v) {
    cur.push_back(v);
    monotone(n, m, cur, out);
    cur.pop_back();
  }
}

std::string seq_id(const std::vector<int>& v, int m) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (m >= 10 && i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> parse_seq(const std::string& s, int m) {
  std::vector<int> v;
  if (m < 10) {
    for (char c : s) v.push_back(c - '0');
    return v;
  }
  std::size_t p = 0;
  while (p <= s.size()) {
    std::size_t q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    v.push_back(std::stoi(s.substr(p, q - p)));
    p = q + 1;
  }
  return v;
}

}  // namespace

SSet standard_simplex(int m, int N) {
  if (N < 1) throw std::invalid_argument("truncation must be >= 1");
  SSetBuilder b(N, false);
  for (int n = 0; n <= N; ++n) {
    std::vector<std::vector<int>> maps;
    std::vector<int> cur;
    monotone(n, m, cur, maps);
    std::vector<std::string> ids;
    for (auto& v : maps) ids.push_back(seq_id(v, m));
    b.level(n, std::move(ids));
  }
  b.faces([m](int, int i, const std::string& id) {
    auto v = parse_seq(id, m);
    v.erase(v.begin() + i);
    return seq_id(v, m);
  });
  b.degeneracies([m](int, int i, const std::string& id) {
    auto v = parse_seq(id, m);
    v.insert(v.begin() + i, v[i]);
    return seq_id(v, m);
  });
  return b.build();
}

int restrict_simplex(const SSet& X, int n, int k, const std::vector<int>& S) {
  std::vector<bool> keep(n + 1, false);
  for (int v : S) keep[v] = true;
  int level = n;
  for (int v = n; v >= 0; --v)
    if (!keep[v]) {
      k = X.d(level, v, k);
      --level;
    }
  return k;
}

std::vector<int> restrict_level(const SSet& X, int n, const std::vector<int>& S) {
  std::vector<int> out(X.size(n));
  for (int k = 0; k < X.size(n); ++k) out[k] = restrict_simplex(X, n, k, S);
  return out;
}

bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto [i, j] = a;
  if (i > j) std::swap(i, j);
  auto inside = [&](int v) { return i < v && v < j; };
  auto [k, l] = b;
  if (k == i || k == j || l == i || l == j) return false;
  return inside(k) != inside(l);
}

std::string check_subdivision(const PolygonSubdivision& P) {
  if (P.n < 2) return "polygon parameter below 2";
  const int V = P.n + 1;
  for (auto [i, j] : P.diagonals) {
    if (i < 0 || j < 0 || i > P.n || j > P.n || i == j) return "diagonal out of range";
    int d = std::abs(i - j);
    if (d == 1 || d == V - 1) return "diagonal joins adjacent vertices";
  }
  for (std::size_t a = 0; a < P.diagonals.size(); ++a)
    for (std::size_t b = a + 1; b < P.diagonals.size(); ++b) {
      auto x = P.diagonals[a], y = P.diagonals[b];
      if (std::minmax(x.first, x.second) == std::minmax(y.first, y.second))
        return "repeated diagonal";
      if (diagonals_cross(x, y))
        return "diagonals {" + std::to_string(x.first) + "," + std::to_string(x.second) +
               "} and {" + std::to_string(y.first) + "," + std::to_string(y.second) + "} cross";
    }
  return {};
}

std::vector<std::vector<int>> subdivision_subset(const PolygonSubdivision& P) {
  if (auto err = check_subdivision(P); !err.empty()) throw std::invalid_argument(err);
  std::vector<std::vector<int>> cells(1);
  for (int v = 0; v <= P.n; ++v) cells[0].push_back(v);
  for (auto [a, b] : P.diagonals) {
    int i = std::min(a, b), j = std::max(a, b);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto& cell = cells[c];
      if (!std::binary_search(cell.begin(), cell.end(), i) ||
          !std::binary_search(cell.begin(), cell.end(), j))
        continue;
      std::vector<int> in, out;
      for (int v : cell) {
        if (v >= i && v <= j) in.push_back(v);
        if (v <= i || v >= j) out.push_back(v);
      }
      if (in.size() < 3 || out.size() < 3) continue;
      cell = in;
      cells.push_back(out);
      break;
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

namespace {

std::vector<int> positions(const std::vector<int>& sub, const std::vector<int>& in) {
  std::vector<int> pos;
  for (int v : sub) pos.push_back(static_cast<int>(std::lower_bound(in.begin(), in.end(), v) - in.begin()));
  return pos;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

std::vector<std::vector<int>> membrane_space(const std::vector<std::vector<int>>& cells,
                                             const SSet& X) {
  const int c = static_cast<int>(cells.size());
  for (auto& S : cells)
    if (static_cast<int>(S.size()) - 1 > X.N)
      throw std::invalid_argument("cell above truncation");
  // restriction tables for every ordered pair of overlapping cells
  std::vector<std::vector<std::vector<int>>> res(c, std::vector<std::vector<int>>(c));
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      if (a == b) continue;
      auto I = intersect(cells[a], cells[b]);
      if (I.empty()) continue;
      res[a][b] = restrict_level(X, static_cast<int>(cells[a].size()) - 1, positions(I, cells[a]));
    }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(c);
  std::function<void(int)> rec = [&](int a) {
    if (a == c) {
      out.push_back(cur);
      return;
    }
    const int lvl = static_cast<int>(cells[a].size()) - 1;
    for (int k = 0; k < X.size(lvl); ++k) {
      bool ok = true;
      for (int b = 0; b < a && ok; ++b)
        if (!res[a][b].empty() && res[a][b][k] != res[b][a][cur[b]]) ok = false;
      if (!ok) continue;
      cur[a] = k;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<int> membrane_restriction(const SSet& X, int n, int k,
                                      const std::vector<std::vector<int>>& cells) {
  std::vector<int> t;
  for (auto& S : cells) t.push_back(restrict_simplex(X, n, k, S));
  return t;
}

Edgewise edgewise_subdivision(const SSet& X, int M) {
  if (2 * M + 1 > X.N) throw std::invalid_argument("truncation too shallow for edgewise subdivision");
  SSet E;
  E.N = M;
  E.semi = X.semi;
  E.ids.resize(M + 1);
  E.face.resize(M + 1);
  for (int m = 0; m <= M; ++m) E.ids[m] = X.ids[2 * m + 1];
  for (int m = 1; m <= M; ++m) {
    E.face[m].assign(m + 1, {});
    for (int i = 0; i <= m; ++i) {
      auto& t = E.face[m][i];
      t.resize(E.size(m));
      for (int k = 0; k < E.size(m); ++k)
        t[k] = X.d(2 * m, i, X.d(2 * m + 1, 2 * m + 1 - i, k));
    }
  }
  if (!E.semi) {
    E.degen.resize(M);
    for (int m = 0; m < M; ++m) {
      E.degen[m].assign(m + 1, {});
      for (int i = 0; i <= m; ++i) {
        auto& t = E.degen[m][i];
        t.resize(E.size(m));
        for (int k = 0; k < E.size(m); ++k)
          t[k] = X.s(2 * m + 2, i, X.s(2 * m + 1, 2 * m + 1 - i, k));
      }
    }
  }
  SMap F;
  F.src = E;
  F.tgt = truncate(X, M);
  F.comp.resize(M + 1);
  for (int m = 0; m <= M; ++m) {
    std::vector<int> first;
    for (int v = 0; v <= m; ++v) first.push_back(v);
    F.comp[m] = restrict_level(X, 2 * m + 1, first);
  }
  return {E, F};
}

SSet truncate(const SSet& X, int N) {
  SSet T = X;
  T.N = N;
  T.ids.resize(N + 1);
  T.face.resize(N + 1);
  if (!T.semi) T.degen.resize(N);
  return T;
}

SMap path_space(const SSet& X, Side side) {
  if (X.N < 2) throw std::invalid_argument("path space needs truncation >= 2");
  const int M = X.N - 1;
  SSet P;
  P.N = M;
  P.semi = X.semi;
  P.ids.resize(M + 1);
  P.face.resize(M + 1);
  const int shift = side == Side::left ? 1 : 0;
  for (int m = 0; m <= M; ++m) P.ids[m] = X.ids[m + 1];
  for (int m = 1; m <= M; ++m) {
    P.face[m].resize(m + 1);
    for (int i = 0; i <= m; ++i) P.face[m][i] = X.face[m + 1][i + shift];
  }
  if (!P.semi) {
    P.degen.resize(M);
    for (int m = 0; m < M; ++m) {
      P.degen[m].resize(m + 1);
      for (int i = 0; i <= m; ++i) P.degen[m][i] = X.degen[m + 1][i + shift];
    }
  }
  SMap F;
  F.src = P;
  F.tgt = truncate(X, M);
  F.comp.resize(M + 1);
  for (int m = 0; m <= M; ++m) F.comp[m] = X.face[m + 1][side == Side::left ? 0 : m + 1];
  return F;
}

}  // namespace segal
