#include "segal/hall.hpp"

#include "segal/segal_check.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace segal {

namespace {

Int lookup(const std::map<Triple, Int>& m, int a, int b, int c) {
  auto it = m.find({a, b, c});
  return it == m.end() ? Int(0) : it->second;
}

// by first coordinate: a -> [(b, c, count)]
std::map<int, std::vector<std::tuple<int, int, Int>>> by_first(const std::map<Triple, Int>& m) {
  std::map<int, std::vector<std::tuple<int, int, Int>>> out;
  for (auto& [k, v] : m) out[std::get<0>(k)].push_back({std::get<1>(k), std::get<2>(k), v});
  return out;
}

using Quad = std::tuple<int, int, int, int>;

std::string show_quad(const char* what, const Quad& q, const Int& l, const Int& r) {
  auto [a, b, c, d] = q;
  return std::string(what) + " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") -> " +
         std::to_string(d) + ": " + l.str() + " != " + r.str();
}

void compare(AlgebraReport& R, const char* what, const std::map<Quad, Int>& L, const std::map<Quad, Int>& Rm) {
  std::set<Quad> keys;
  for (auto& [k, v] : L) keys.insert(k);
  for (auto& [k, v] : Rm) keys.insert(k);
  for (auto& k : keys) {
    ++R.checked;
    Int l = L.count(k) ? L.at(k) : Int(0), r = Rm.count(k) ? Rm.at(k) : Int(0);
    if (l != r) {
      R.pass = false;
      R.failures.push_back(show_quad(what, k, l, r));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// set level

Int SetHallTable::at(int x, int y, int z) const { return lookup(f, x, y, z); }
Int SetModuleTable::at(int x, int m, int n) const { return lookup(g, x, m, n); }

SetHallTable hall_constants_set(const SSet& X, bool force) {
  if (X.N < 2) throw std::invalid_argument("constants need level 2");
  if (!force) {
    auto rep = check_2segal(X, X.N, false);
    if (!rep.pass())
      throw std::invalid_argument("not 2-Segal, associativity not guaranteed: " +
                                  (rep.first_failure().empty() ? std::string("inconclusive") : rep.first_failure()));
  }
  SetHallTable T;
  for (int p = 0; p < X.size(2); ++p) T.f[{X.d(2, 2, p), X.d(2, 0, p), X.d(2, 1, p)}] += 1;
  for (int x = 0; x < X.size(1); ++x) T.hom[{X.d(1, 1, x), X.d(1, 0, x)}].push_back(x);
  return T;
}

AlgebraReport verify_set_algebra(const SSet& X, const SetHallTable& T) {
  AlgebraReport R;
  auto F = by_first(T.f);
  std::map<Quad, Int> L, Rm;
  for (auto& [k, c1] : T.f) {
    auto [x, y, e] = k;
    if (F.count(e))
      for (auto& [z, w, c2] : F[e]) L[{x, y, z, w}] += c1 * c2;
  }
  for (auto& [k, c1] : T.f) {
    auto [y, z, e] = k;
    for (int x = 0; x < X.size(1); ++x)
      if (F.count(x))
        for (auto& [e2, w, c2] : F[x])
          if (e2 == e) Rm[{x, y, z, w}] += c1 * c2;
  }
  compare(R, "associativity", L, Rm);
  if (!X.semi) {
    std::map<Quad, Int> lu, ru, id;
    for (int a = 0; a < X.size(0); ++a) {
      int e = X.s(0, 0, a);
      for (auto& [k, c] : T.f) {
        auto [x, y, w] = k;
        if (x == e) lu[{0, y, 0, w}] += c;
        if (y == e) ru[{0, x, 0, w}] += c;
      }
    }
    for (int y = 0; y < X.size(1); ++y) id[{0, y, 0, y}] = 1;
    compare(R, "left unit", lu, id);
    compare(R, "right unit", ru, id);
  }
  return R;
}

SetModuleTable hall_module_constants_set(const SMap& F, bool force) {
  const SSet& Y = F.src;
  if (Y.N < 1) throw std::invalid_argument("module constants need level 1");
  if (!force) {
    const int N = std::min(F.src.N, F.tgt.N);
    auto rep = check_rel2segal(F, N, false);
    if (!rep.pass())
      throw std::invalid_argument("not relative 2-Segal: " +
                                  (rep.first_failure().empty() ? std::string("inconclusive") : rep.first_failure()));
  }
  SetModuleTable M;
  for (int q = 0; q < Y.size(1); ++q) M.g[{F.comp[1][q], Y.d(1, 0, q), Y.d(1, 1, q)}] += 1;
  return M;
}

AlgebraReport verify_set_module(const SMap& F, const SetHallTable& T, const SetModuleTable& M) {
  AlgebraReport R;
  auto G = by_first(M.g);
  // (x y) m and x (y m)
  std::map<Quad, Int> L, Rm;
  for (auto& [k, c1] : T.f) {
    auto [x, y, e] = k;
    if (G.count(e))
      for (auto& [m, z, c2] : G[e]) L[{x, y, m, z}] += c1 * c2;
  }
  for (auto& [k, c1] : M.g) {
    auto [y, m, eta] = k;
    for (auto& [x, list] : G)
      for (auto& [m2, z, c2] : list)
        if (m2 == eta) Rm[{x, y, m, z}] += c1 * c2;
  }
  compare(R, "module associativity", L, Rm);
  const SSet& X = F.tgt;
  if (!X.semi) {
    std::map<Quad, Int> u, id;
    for (int a = 0; a < X.size(0); ++a) {
      int e = X.s(0, 0, a);
      for (auto& [k, c] : M.g)
        if (std::get<0>(k) == e) u[{0, std::get<1>(k), 0, std::get<2>(k)}] += c;
    }
    for (int m = 0; m < F.src.size(0); ++m) id[{0, m, 0, m}] = 1;
    compare(R, "module unit", u, id);
  }
  return R;
}

// ---------------------------------------------------------------------------
// proto-exact instances

Int HallTable::at(int u, int v, int w) const { return lookup(mult, u, v, w); }
Int HallModuleTable::at(int u, int m, int n) const { return lookup(act, u, m, n); }

int HallModuleTable::find(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  return -1;
}

namespace {

std::vector<int> class_index(const ProtoExact& C, int bound, HallTable& T) {
  std::vector<int> idx(bound + 1, -1);
  for (int a = 0; a <= bound; ++a) {
    int c = C.iso_class(a);
    if (c == a) {
      idx[a] = static_cast<int>(T.basis.size());
      T.basis.push_back(a);
      T.grade.push_back(a);
      T.aut.push_back(C.aut_order(a));
    } else {
      idx[a] = idx[c];
    }
  }
  return idx;
}

}  // namespace

HallTable hall_constants(const ProtoExact& C, int bound) {
  if (bound > C.bound()) throw std::invalid_argument("bound exceeds the instance");
  HallTable T;
  T.instance = C.name();
  T.bound = bound;
  auto idx = class_index(C, bound, T);
  for (int w = 0; w <= bound; ++w) {
    if (C.iso_class(w) != w) continue;
    for (auto& s : C.subobjects(w)) T.mult[{idx[s.U], idx[s.Q], idx[w]}] += 1;
  }
  return T;
}

Int conflation_pairs(const ProtoExact& C, int U, int W, int V) {
  std::vector<Code> infl, defl;
  for (Code f : C.homs(U, W))
    if (C.is_inflation(U, W, f)) infl.push_back(f);
  for (Code f : C.homs(W, V))
    if (C.is_deflation(W, V, f)) defl.push_back(f);
  const Code zUV = C.zero_map(U, V), zU0 = C.zero_map(U, 0), z0V = C.zero_map(0, V);
  Int n = 0;
  for (Code i : infl)
    for (Code p : defl) {
      if (C.compose(U, W, V, p, i) != zUV) continue;
      ProtoExact::Square s{U, W, 0, V, i, zU0, z0V, p};
      if (C.is_bicartesian(s)) n += 1;
    }
  return n;
}

Int span_constant(const ProtoExact& C, int U, int V, int W) {
  Int pairs = conflation_pairs(C, U, W, V);
  Int d = C.aut_order(U) * C.aut_order(V);
  if (pairs % d != 0) throw std::logic_error("automorphisms do not act freely on conflations");
  return pairs / d;
}

namespace {

int legendre(long a, int q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) return 0;
  long r = 1, b = a;
  for (int e = (q - 1) / 2; e > 0; e >>= 1, b = b * b % q)
    if (e & 1) r = r * b % q;
  return r == 1 ? 1 : -1;
}

long det_mod(std::vector<std::vector<int>> M, int q) {
  const int n = static_cast<int>(M.size());
  long det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (M[r][c] % q) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = (q - det) % q;
    }
    det = det * M[c][c] % q;
    long inv = 1;
    for (int e = q - 2, b = M[c][c]; e > 0; e >>= 1, b = static_cast<int>(1L * b * b % q))
      if (e & 1) inv = inv * b % q;
    for (int r = c + 1; r < n; ++r) {
      long t = M[r][c] * inv % q;
      for (int k = c; k < n; ++k) M[r][k] = static_cast<int>(((M[r][k] - t * M[c][k]) % q + q) % q);
    }
  }
  return det;
}

}  // namespace

std::string form_label(const ProtoExact& C, int n, Code psi) {
  const int q = C.field();
  if (q == 1) {
    auto v = f1_decode(n, n, psi);
    int d = 0;
    for (int k = 0; k < n; ++k) d += v[k] == k;
    return "w=" + std::to_string((n - d) / 2) + " d=" + std::to_string(d);
  }
  if (q > 1) {
    if (n == 0) return "n=0 e=+";
    long c = det_mod(fq_decode(q, n, n, psi), q);
    if ((n / 2) % 2) c = (q - c) % q;
    return "n=" + std::to_string(n) + (legendre(c, q) == 1 ? " e=+" : " e=-");
  }
  return "n=" + std::to_string(n) + " psi=" + std::to_string(psi);
}

HallModuleTable hall_module_constants(const ProtoExact& C, ContextPtr duality, int bound) {
  if (bound > C.bound()) throw std::invalid_argument("bound exceeds the instance");
  HallTable A;
  auto idx = class_index(C, bound, A);
  Level L(hermitian_diagrams(duality), "forms");
  HallModuleTable M;
  M.instance = C.name();
  M.bound = bound;
  std::vector<int> to_basis(L.classes(), -1);
  for (int c = 0; c < L.classes(); ++c) {
    Key r = L.rep(c);
    if (r[0] > bound) continue;
    to_basis[c] = static_cast<int>(M.basis.size());
    M.basis.push_back(r);
    M.grade.push_back(static_cast<int>(r[0]));
    M.aut.push_back(Int(L.aut(c).size()));
    M.labels.push_back(form_label(C, static_cast<int>(r[0]), r[1]));
  }
  for (std::size_t b = 0; b < M.basis.size(); ++b) {
    const int n = static_cast<int>(M.basis[b][0]);
    const Code psi = M.basis[b][1];
    for (auto& s : C.subobjects(n)) {
      if (2 * s.U > n) continue;
      auto red = isotropic_reduction(C, duality->D, n, psi, s.U, s.i);
      if (!red.ok) {
        if (red.error.rfind("not isotropic", 0) == 0) continue;
        throw std::runtime_error("reduction assumption fails on " + M.labels[b] + ": " + red.error);
      }
      int m = to_basis.at(L.canon(Key{red.M, red.psiM}).first);
      M.act[{idx[s.U], m, static_cast<int>(b)}] += 1;
    }
  }
  return M;
}

Rat CoalgebraTable::at(int w, int u, int v) const {
  auto it = comult.find({w, u, v});
  return it == comult.end() ? Rat(0) : it->second;
}

CoalgebraTable coalgebra_table(const ProtoExact& C, const HallTable& T) {
  CoalgebraTable D;
  const int n = static_cast<int>(T.basis.size());
  for (int b = 0; b < n; ++b) D.pairing.push_back(Rat(1) / Rat(T.aut[b]));
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (T.grade[u] + T.grade[v] != T.grade[w]) continue;
        Int pairs = conflation_pairs(C, T.basis[u], T.basis[w], T.basis[v]);
        if (pairs != 0) D.comult[{w, u, v}] = Rat(pairs) / Rat(T.aut[w]);
      }
  return D;
}

AlgebraReport verify_algebra(const HallTable& T) {
  AlgebraReport R;
  const int n = static_cast<int>(T.basis.size());
  auto fail = [&](const std::string& s) {
    R.pass = false;
    R.failures.push_back(s);
  };
  for (auto& [k, v] : T.mult) {
    auto [u, w, x] = k;
    if (T.grade[u] + T.grade[w] != T.grade[x]) fail("grading: " + T.label(u) + T.label(w) + " -> " + T.label(x));
    if (v < 0) fail("negative constant");
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int z = 0; z < n; ++z) {
        const int g = T.grade[u] + T.grade[v] + T.grade[z];
        if (g > T.bound) continue;
        for (int w = 0; w < n; ++w) {
          if (T.grade[w] != g) continue;
          ++R.checked;
          Int l = 0, r = 0;
          for (int e = 0; e < n; ++e) {
            l += T.at(u, v, e) * T.at(e, z, w);
            r += T.at(v, z, e) * T.at(u, e, w);
          }
          if (l != r)
            fail("associativity (" + T.label(u) + "," + T.label(v) + "," + T.label(z) + ") -> " + T.label(w) + ": " +
                 l.str() + " != " + r.str());
        }
      }
  int zero = -1;
  for (int b = 0; b < n; ++b)
    if (T.grade[b] == 0) zero = b;
  if (zero < 0) {
    fail("no unit class");
    return R;
  }
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      ++R.checked;
      Int d = u == w ? 1 : 0;
      if (T.at(zero, u, w) != d || T.at(u, zero, w) != d) fail("unit at " + T.label(u) + " -> " + T.label(w));
    }
  return R;
}

AlgebraReport verify_module(const HallTable& T, const HallModuleTable& M) {
  AlgebraReport R;
  const int n = static_cast<int>(T.basis.size());
  const int m = static_cast<int>(M.basis.size());
  auto fail = [&](const std::string& s) {
    R.pass = false;
    R.failures.push_back(s);
  };
  for (auto& [k, v] : M.act) {
    auto [u, a, b] = k;
    if (2 * T.grade[u] + M.grade[a] != M.grade[b]) fail("grading: " + T.label(u) + " " + M.labels[a]);
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int a = 0; a < m; ++a) {
        const int g = 2 * (T.grade[u] + T.grade[v]) + M.grade[a];
        if (g > M.bound) continue;
        for (int b = 0; b < m; ++b) {
          if (M.grade[b] != g) continue;
          ++R.checked;
          Int l = 0, r = 0;
          for (int e = 0; e < n; ++e) l += T.at(u, v, e) * M.at(e, a, b);
          for (int k = 0; k < m; ++k) r += M.at(v, a, k) * M.at(u, k, b);
          if (l != r)
            fail("module associativity (" + T.label(u) + "," + T.label(v) + "," + M.labels[a] + ") -> " + M.labels[b] +
                 ": " + l.str() + " != " + r.str());
        }
      }
  int zero = -1;
  for (int b = 0; b < n; ++b)
    if (T.grade[b] == 0) zero = b;
  for (int a = 0; a < m && zero >= 0; ++a)
    for (int b = 0; b < m; ++b) {
      ++R.checked;
      if (M.at(zero, a, b) != (a == b ? 1 : 0)) fail("module unit at " + M.labels[a] + " -> " + M.labels[b]);
    }
  return R;
}

AlgebraReport verify_hopf(const HallTable& T, const CoalgebraTable& D) {
  AlgebraReport R;
  const int n = static_cast<int>(T.basis.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (T.grade[u] + T.grade[v] > T.bound) continue;
        ++R.checked;
        Rat lhs = D.at(w, u, v) * D.pairing[u] * D.pairing[v];
        Rat rhs = Rat(T.at(u, v, w)) * D.pairing[w];
        if (lhs != rhs) {
          R.pass = false;
          R.failures.push_back("hopf (" + T.label(u) + "," + T.label(v) + ") -> " + T.label(w) + ": " +
                               to_string(lhs) + " != " + to_string(rhs));
        }
      }
  return R;
}

AlgebraReport verify_adjoint(const HallTable& T, const CoalgebraTable& D) {
  AlgebraReport R;
  const int n = static_cast<int>(T.basis.size());
  // (1_U 1_V, 1_W) = (1_V, d_U 1_W) and (1_V 1_U, 1_W) = (1_V, d'_U 1_W)
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (T.grade[u] + T.grade[v] > T.bound) continue;
        ++R.checked;
        Rat left = Rat(T.at(u, v, w)) * D.pairing[w];
        Rat right = Rat(T.at(v, u, w)) * D.pairing[w];
        Rat dl = D.at(w, u, v) * D.pairing[u] * D.pairing[v];
        Rat dr = D.at(w, v, u) * D.pairing[u] * D.pairing[v];
        if (left != dl || right != dr) {
          R.pass = false;
          R.failures.push_back("adjoint at (" + T.label(u) + "," + T.label(v) + ") -> " + T.label(w));
        }
      }
  return R;
}

// ---------------------------------------------------------------------------
// interpolation

Rat Interpolation::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

std::vector<Rat> lagrange(const std::vector<std::pair<Int, Rat>>& s) {
  const std::size_t n = s.size();
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rat(s[j].first);
      }
      basis = next;
      denom *= Rat(s[i].first - s[j].first);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += s[i].second * basis[k] / denom;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

Interpolation interpolate(const std::vector<std::pair<Int, Rat>>& samples, int max_degree) {
  Interpolation I;
  std::set<Int> xs;
  for (auto& s : samples) xs.insert(s.first);
  if (xs.size() != samples.size()) throw std::invalid_argument("repeated sample point");
  I.coeffs = lagrange(samples);
  const int degree = static_cast<int>(I.coeffs.size()) - 1;
  bool stable = samples.size() >= 2 && degree <= max_degree;
  for (std::size_t k = 0; stable && k < samples.size(); ++k) {
    auto sub = samples;
    sub.erase(sub.begin() + static_cast<long>(k));
    if (lagrange(sub) != I.coeffs) stable = false;
  }
  I.stable = stable;
  if (stable)
    I.at_one = I.eval(Rat(1));
  else
    I.note = "insufficient sample points";
  return I;
}

Labelled labelled(const HallTable& T) {
  Labelled out;
  for (auto& [k, v] : T.mult) {
    auto [u, w, x] = k;
    out[{T.label(u), T.label(w), T.label(x)}] = v;
  }
  return out;
}

Labelled labelled(const HallTable& T, const HallModuleTable& M, const std::function<bool(const std::string&)>& keep) {
  Labelled out;
  for (auto& [k, v] : M.act) {
    auto [u, a, b] = k;
    if (keep && !(keep(M.labels[a]) && keep(M.labels[b]))) continue;
    out[{T.label(u), M.labels[a], M.labels[b]}] = v;
  }
  return out;
}

TableInterpolation q_interpolate(const std::map<int, Labelled>& family, int max_degree) {
  TableInterpolation out;
  std::set<std::vector<std::string>> keys;
  for (auto& [q, t] : family)
    for (auto& [k, v] : t) keys.insert(k);
  for (auto& k : keys) {
    std::vector<std::pair<Int, Rat>> s;
    for (auto& [q, t] : family) {
      auto it = t.find(k);
      s.push_back({Int(q), it == t.end() ? Rat(0) : Rat(it->second)});
    }
    auto I = interpolate(s, max_degree);
    out.stable = out.stable && I.stable;
    out.entries[k] = I;
  }
  return out;
}

}  // namespace segal
