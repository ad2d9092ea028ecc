#include "segal/protoexact.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segal {

bool ProtoExact::commutes(const Square& s) const {
  return compose(s.U, s.V, s.X, s.q, s.i) == compose(s.U, s.W, s.X, s.j, s.p);
}

bool ProtoExact::is_bicartesian(const Square& s) const {
  if (!is_inflation(s.U, s.V, s.i) || !is_deflation(s.U, s.W, s.p)) return false;
  if (!is_inflation(s.W, s.X, s.j) || !is_deflation(s.V, s.X, s.q)) return false;
  return commutes(s) && s.U - s.W == s.V - s.X;
}

namespace {

Code ipow(Code b, int e) {
  Code r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// ---------------------------------------------------------------------------
// F_1

class F1Category : public ProtoExact {
 public:
  explicit F1Category(int bound) : bound_(bound) {
    homs_.resize(bound + 1, std::vector<std::vector<Code>>(bound + 1));
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b) {
        Code total = ipow(b + 1, a);
        for (Code f = 0; f < total; ++f) {
          auto v = f1_decode(a, b, f);
          std::vector<bool> hit(b, false);
          bool ok = true;
          for (int t : v) {
            if (t < 0) continue;
            if (hit[t]) ok = false;
            hit[t] = true;
          }
          if (ok) homs_[a][b].push_back(f);
        }
      }
  }
  std::string name() const override { return "Vect_F1(" + std::to_string(bound_) + ")"; }
  int field() const override { return 1; }
  Int aut_order(int a) const override {
    Int r = 1;
    for (int k = 2; k <= a; ++k) r *= k;
    return r;
  }
  int object_count() const override { return bound_ + 1; }
  std::vector<Code> homs(int a, int b) const override { return homs_.at(a).at(b); }
  Code identity(int a) const override {
    std::vector<int> v(a);
    for (int k = 0; k < a; ++k) v[k] = k;
    return f1_encode(a, v);
  }
  Code compose(int a, int b, int c, Code g, Code f) const override {
    auto vf = f1_decode(a, b, f), vg = f1_decode(b, c, g);
    std::vector<int> v(a);
    for (int k = 0; k < a; ++k) v[k] = vf[k] < 0 ? -1 : vg[vf[k]];
    return f1_encode(c, v);
  }
  bool valid(int a, int b, Code f) const override {
    if (a < 0 || b < 0 || a > bound_ || b > bound_) return false;
    const auto& h = homs_[a][b];
    return std::binary_search(h.begin(), h.end(), f);
  }
  std::string show(int a, int b, Code f) const override {
    std::ostringstream os;
    os << a << "->" << b << ":[";
    auto v = f1_decode(a, b, f);
    for (int k = 0; k < a; ++k) os << (k ? "," : "") << v[k];
    os << "]";
    return os.str();
  }
  Code mor_invariant(int a, int b, Code f) const override { return defined(a, b, f); }
  bool is_iso(int a, int b, Code f) const override { return a == b && defined(a, b, f) == a; }
  Code inverse(int a, int b, Code f) const override {
    if (!is_iso(a, b, f)) throw std::logic_error("not an isomorphism: " + show(a, b, f));
    auto v = f1_decode(a, b, f);
    std::vector<int> w(b);
    for (int k = 0; k < a; ++k) w[v[k]] = k;
    return f1_encode(a, w);
  }

  bool is_inflation(int a, int b, Code f) const override { return valid(a, b, f) && defined(a, b, f) == a; }
  bool is_deflation(int a, int b, Code f) const override { return valid(a, b, f) && defined(a, b, f) == b; }
  Code zero_map(int, int) const override { return 0; }
  Code std_inflation(int a, int b) const override {
    std::vector<int> v(a);
    for (int k = 0; k < a; ++k) v[k] = k;
    return f1_encode(b, v);
  }
  Code std_deflation(int b, int k) const override {
    std::vector<int> v(b);
    for (int t = 0; t < b; ++t) v[t] = t < k ? -1 : t - k;
    return f1_encode(b - k, v);
  }
  Square complete_pushout(int U, int V, int W, Code i, Code p) const override {
    // X = W followed by V \ i(U)
    auto vi = f1_decode(U, V, i), vp = f1_decode(U, W, p);
    std::vector<int> pre(V, -2);
    for (int u = 0; u < U; ++u) pre[vi[u]] = u;
    Square s{U, V, W, 0, i, p, 0, 0};
    std::vector<int> q(V);
    int next = W;
    for (int v = 0; v < V; ++v) q[v] = pre[v] == -2 ? next++ : vp[pre[v]];
    s.X = next;
    s.j = std_inflation(W, s.X);
    s.q = f1_encode(s.X, q);
    return s;
  }
  Square complete_pullback(int V, int W, int X, Code j, Code q) const override {
    // U = elements of V killed by q or landing in j(W), in order
    auto vj = f1_decode(W, X, j), vq = f1_decode(V, X, q);
    std::vector<int> pre(X, -1);
    for (int w = 0; w < W; ++w) pre[vj[w]] = w;
    std::vector<int> iv, pv;
    for (int v = 0; v < V; ++v) {
      if (vq[v] >= 0 && pre[vq[v]] < 0) continue;
      iv.push_back(v);
      pv.push_back(vq[v] < 0 ? -1 : pre[vq[v]]);
    }
    Square s;
    s.U = static_cast<int>(iv.size());
    s.V = V;
    s.W = W;
    s.X = X;
    s.i = f1_encode(V, iv);
    s.p = f1_encode(W, pv);
    s.j = j;
    s.q = q;
    return s;
  }
  std::vector<Sub> subobjects(int W) const override {
    std::vector<Sub> out;
    for (int mask = 0; mask < (1 << W); ++mask) {
      std::vector<int> iv, pv(W);
      int next = 0;
      for (int t = 0; t < W; ++t) {
        if (mask >> t & 1) {
          iv.push_back(t);
          pv[t] = -1;
        } else {
          pv[t] = next++;
        }
      }
      Sub s;
      s.U = static_cast<int>(iv.size());
      s.Q = next;
      s.i = f1_encode(W, iv);
      s.p = f1_encode(next, pv);
      out.push_back(s);
    }
    return out;
  }

 protected:
  std::vector<Code> find_isos(int a, int b) const override {
    std::vector<Code> out;
    if (a != b) return out;
    for (Code f : homs_[a][b])
      if (defined(a, b, f) == a) out.push_back(f);
    return out;
  }

 private:
  static int defined(int a, int b, Code f) {
    int n = 0;
    for (int t : f1_decode(a, b, f)) n += t >= 0;
    return n;
  }
  int bound_;
  std::vector<std::vector<std::vector<Code>>> homs_;
};

// ---------------------------------------------------------------------------
// linear algebra mod q

using Mat = std::vector<std::vector<int>>;

int inv_mod(int a, int q) {
  int r = 1;
  for (int e = q - 2; e > 0; --e) r = r * a % q;
  return r;
}

Mat matmul(const Mat& A, const Mat& B, int inner, int cols, int q) {
  Mat C(A.size(), std::vector<int>(cols, 0));
  for (std::size_t r = 0; r < A.size(); ++r)
    for (int k = 0; k < inner; ++k)
      if (A[r][k])
        for (int c = 0; c < cols; ++c) C[r][c] = (C[r][c] + A[r][k] * B[k][c]) % q;
  return C;
}

// reduced row echelon form, zero rows dropped
struct Rref {
  Mat R;
  std::vector<int> piv;
};
Rref rref(Mat A, int cols, int q) {
  Rref out;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < A.size(); ++c) {
    std::size_t p = row;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    int iv = inv_mod(A[row][c], q);
    for (int& x : A[row]) x = x * iv % q;
    for (std::size_t r = 0; r < A.size(); ++r) {
      if (r == row || A[r][c] == 0) continue;
      int f = A[r][c];
      for (int k = 0; k < cols; ++k) A[r][k] = ((A[r][k] - f * A[row][k]) % q + q) % q;
    }
    out.piv.push_back(c);
    ++row;
  }
  A.resize(row);
  out.R = std::move(A);
  return out;
}

int rank_of(const Mat& A, int cols, int q) { return static_cast<int>(rref(A, cols, q).piv.size()); }

// basis vectors of the kernel of A (rows x cols)
Mat nullspace(const Mat& A, int cols, int q) {
  Rref r = rref(A, cols, q);
  std::vector<bool> pivot(cols, false);
  for (int c : r.piv) pivot[c] = true;
  Mat out;
  for (int f = 0; f < cols; ++f) {
    if (pivot[f]) continue;
    std::vector<int> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < r.piv.size(); ++k) v[r.piv[k]] = (q - r.R[k][f]) % q;
    out.push_back(v);
  }
  return out;
}

// quotient map F^n -> F^n / span(rows), rows in reduced echelon form
Mat quotient_map(const Rref& S, int n, int q) {
  std::vector<bool> pivot(n, false);
  for (int c : S.piv) pivot[c] = true;
  Mat Qm;
  for (int j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    std::vector<int> row(n, 0);
    row[j] = 1;
    for (std::size_t k = 0; k < S.piv.size(); ++k) row[S.piv[k]] = (q - S.R[k][j]) % q;
    Qm.push_back(row);
  }
  return Qm;
}

Mat transpose(const Mat& A, int cols) {
  Mat T(cols, std::vector<int>(A.size()));
  for (std::size_t r = 0; r < A.size(); ++r)
    for (int c = 0; c < cols; ++c) T[c][r] = A[r][c];
  return T;
}

// ---------------------------------------------------------------------------
// F_q

class FqCategory : public ProtoExact {
 public:
  FqCategory(int q, int bound) : q_(q), bound_(bound) {}
  int q() const { return q_; }
  std::string name() const override { return "Vect_F" + std::to_string(q_) + "(" + std::to_string(bound_) + ")"; }
  int field() const override { return q_; }
  Int aut_order(int a) const override {
    Int r = 1, qa = pow(Int(q_), a), qk = 1;
    for (int k = 0; k < a; ++k, qk *= q_) r *= qa - qk;
    return r;
  }
  int object_count() const override { return bound_ + 1; }
  std::vector<Code> homs(int a, int b) const override {
    std::vector<Code> out(static_cast<std::size_t>(ipow(q_, a * b)));
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = static_cast<Code>(f);
    return out;
  }
  Code identity(int a) const override { return std_inflation(a, a); }
  Code compose(int a, int b, int c, Code g, Code f) const override {
    return enc(matmul(dec(b, c, g), dec(a, b, f), b, a, q_), a);
  }
  bool valid(int a, int b, Code f) const override {
    return a >= 0 && b >= 0 && a <= bound_ && b <= bound_ && f >= 0 && f < ipow(q_, a * b);
  }
  std::string show(int a, int b, Code f) const override {
    std::ostringstream os;
    os << a << "->" << b << ":[";
    auto M = dec(a, b, f);
    for (int r = 0; r < b; ++r) {
      os << (r ? "," : "") << "[";
      for (int c = 0; c < a; ++c) os << (c ? "," : "") << M[r][c];
      os << "]";
    }
    os << "]";
    return os.str();
  }
  Code mor_invariant(int a, int b, Code f) const override { return rank_of(dec(a, b, f), a, q_); }
  bool is_iso(int a, int b, Code f) const override { return a == b && valid(a, b, f) && rank(a, b, f) == a; }
  Code inverse(int a, int b, Code f) const override {
    if (!is_iso(a, b, f)) throw std::logic_error("not an isomorphism: " + show(a, b, f));
    Mat M = dec(a, b, f);
    for (int r = 0; r < a; ++r) {
      M[r].resize(2 * a, 0);
      M[r][a + r] = 1;
    }
    Rref R = rref(M, 2 * a, q_);
    Mat inv(a, std::vector<int>(a));
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < a; ++c) inv[r][c] = R.R[r][a + c];
    return enc(inv, a);
  }

  bool is_inflation(int a, int b, Code f) const override { return valid(a, b, f) && rank(a, b, f) == a; }
  bool is_deflation(int a, int b, Code f) const override { return valid(a, b, f) && rank(a, b, f) == b; }
  Code zero_map(int, int) const override { return 0; }
  Code std_inflation(int a, int b) const override {
    Mat M(b, std::vector<int>(a, 0));
    for (int k = 0; k < a; ++k) M[k][k] = 1;
    return enc(M, a);
  }
  Code std_deflation(int b, int k) const override {
    Mat M(b - k, std::vector<int>(b, 0));
    for (int r = 0; r < b - k; ++r) M[r][r + k] = 1;
    return enc(M, b);
  }
  Square complete_pushout(int U, int V, int W, Code i, Code p) const override {
    // X = (V + W) / image of (i, -p)
    Mat mi = dec(U, V, i), mp = dec(U, W, p);
    Mat rows(U, std::vector<int>(V + W));
    for (int u = 0; u < U; ++u) {
      for (int v = 0; v < V; ++v) rows[u][v] = mi[v][u];
      for (int w = 0; w < W; ++w) rows[u][V + w] = (q_ - mp[w][u]) % q_;
    }
    Mat Qm = quotient_map(rref(rows, V + W, q_), V + W, q_);
    Square s{U, V, W, static_cast<int>(Qm.size()), i, p, 0, 0};
    Mat mq(s.X, std::vector<int>(V)), mj(s.X, std::vector<int>(W));
    for (int x = 0; x < s.X; ++x) {
      for (int v = 0; v < V; ++v) mq[x][v] = Qm[x][v];
      for (int w = 0; w < W; ++w) mj[x][w] = Qm[x][V + w];
    }
    s.q = enc(mq, V);
    s.j = enc(mj, W);
    return s;
  }
  Square complete_pullback(int V, int W, int X, Code j, Code q) const override {
    // U = kernel of (q, -j) on V + W
    Mat mq = dec(V, X, q), mj = dec(W, X, j);
    Mat A(X, std::vector<int>(V + W));
    for (int x = 0; x < X; ++x) {
      for (int v = 0; v < V; ++v) A[x][v] = mq[x][v];
      for (int w = 0; w < W; ++w) A[x][V + w] = (q_ - mj[x][w]) % q_;
    }
    Mat basis = nullspace(A, V + W, q_);
    Square s;
    s.U = static_cast<int>(basis.size());
    s.V = V;
    s.W = W;
    s.X = X;
    Mat mi(V, std::vector<int>(s.U)), mp(W, std::vector<int>(s.U));
    for (int u = 0; u < s.U; ++u) {
      for (int v = 0; v < V; ++v) mi[v][u] = basis[u][v];
      for (int w = 0; w < W; ++w) mp[w][u] = basis[u][V + w];
    }
    s.i = enc(mi, s.U);
    s.p = enc(mp, s.U);
    s.j = j;
    s.q = q;
    return s;
  }
  std::vector<Sub> subobjects(int W) const override {
    std::vector<Sub> out;
    for (int k = 0; k <= W; ++k)
      for (const Rref& S : echelon_forms(k, W)) {
        Sub s;
        s.U = k;
        s.Q = W - k;
        s.i = enc(transpose(S.R, W), k);
        s.p = enc(quotient_map(S, W, q_), W);
        out.push_back(s);
      }
    return out;
  }

  Mat dec(int a, int b, Code f) const { return fq_decode(q_, a, b, f); }
  Code enc(const Mat& M, int a) const { return fq_encode(q_, M, a); }
  int rank(int a, int b, Code f) const { return rank_of(dec(a, b, f), a, q_); }

 protected:
  std::vector<Code> find_isos(int a, int b) const override {
    std::vector<Code> out;
    if (a != b) return out;
    for (Code f : homs(a, b))
      if (rank(a, b, f) == a) out.push_back(f);
    return out;
  }

 private:
  // all k-dimensional subspaces of F^W as reduced echelon matrices
  std::vector<Rref> echelon_forms(int k, int W) const {
    std::vector<Rref> out;
    std::vector<int> piv;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(piv.size()) == k) {
        std::vector<std::pair<int, int>> free;
        std::vector<bool> isp(W, false);
        for (int c : piv) isp[c] = true;
        for (int r = 0; r < k; ++r)
          for (int c = piv[r] + 1; c < W; ++c)
            if (!isp[c]) free.push_back({r, c});
        Code total = ipow(q_, static_cast<int>(free.size()));
        for (Code t = 0; t < total; ++t) {
          Rref S;
          S.piv = piv;
          S.R.assign(k, std::vector<int>(W, 0));
          for (int r = 0; r < k; ++r) S.R[r][piv[r]] = 1;
          Code x = t;
          for (auto [r, c] : free) {
            S.R[r][c] = static_cast<int>(x % q_);
            x /= q_;
          }
          out.push_back(S);
        }
        return;
      }
      for (int c = from; c < W; ++c) {
        piv.push_back(c);
        choose(c + 1);
        piv.pop_back();
      }
    };
    choose(0);
    return out;
  }

  int q_, bound_;
};

// ---------------------------------------------------------------------------

class Corrupted : public ProtoExact {
 public:
  explicit Corrupted(std::shared_ptr<const ProtoExact> inner) : in_(std::move(inner)) {
    int b = in_->bound();
    for (Code f : in_->isos(b, b))
      if (f != in_->identity(b)) {
        bad_ = f;
        break;
      }
  }
  std::string name() const override { return in_->name() + "[corrupted]"; }
  int field() const override { return in_->field(); }
  Int aut_order(int a) const override { return in_->aut_order(a); }
  int object_count() const override { return in_->object_count(); }
  std::vector<Code> homs(int a, int b) const override { return in_->homs(a, b); }
  Code identity(int a) const override { return in_->identity(a); }
  Code compose(int a, int b, int c, Code g, Code f) const override { return in_->compose(a, b, c, g, f); }
  bool valid(int a, int b, Code f) const override { return in_->valid(a, b, f); }
  std::string show(int a, int b, Code f) const override { return in_->show(a, b, f); }
  Code mor_invariant(int a, int b, Code f) const override { return in_->mor_invariant(a, b, f); }
  bool is_iso(int a, int b, Code f) const override { return in_->is_iso(a, b, f); }
  Code inverse(int a, int b, Code f) const override { return in_->inverse(a, b, f); }
  bool is_inflation(int a, int b, Code f) const override { return in_->is_inflation(a, b, f); }
  bool is_deflation(int a, int b, Code f) const override {
    if (a == bound() && b == bound() && f == bad_) return false;
    return in_->is_deflation(a, b, f);
  }
  Code zero_map(int a, int b) const override { return in_->zero_map(a, b); }
  Code std_inflation(int a, int b) const override { return in_->std_inflation(a, b); }
  Code std_deflation(int b, int k) const override { return in_->std_deflation(b, k); }
  Square complete_pushout(int U, int V, int W, Code i, Code p) const override {
    return in_->complete_pushout(U, V, W, i, p);
  }
  Square complete_pullback(int V, int W, int X, Code j, Code q) const override {
    return in_->complete_pullback(V, W, X, j, q);
  }
  std::vector<Sub> subobjects(int W) const override { return in_->subobjects(W); }

 private:
  std::shared_ptr<const ProtoExact> in_;
  Code bad_ = -1;
};

}  // namespace

std::vector<int> f1_decode(int a, int b, Code f) {
  std::vector<int> v(a);
  for (int k = 0; k < a; ++k) {
    v[k] = static_cast<int>(f % (b + 1)) - 1;
    f /= b + 1;
  }
  return v;
}

Code f1_encode(int b, const std::vector<int>& v) {
  Code f = 0;
  for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) f = f * (b + 1) + (v[k] + 1);
  return f;
}

std::vector<std::vector<int>> fq_decode(int q, int a, int b, Code f) {
  std::vector<std::vector<int>> M(b, std::vector<int>(a));
  for (int r = 0; r < b; ++r)
    for (int c = 0; c < a; ++c) {
      M[r][c] = static_cast<int>(f % q);
      f /= q;
    }
  return M;
}

Code fq_encode(int q, const std::vector<std::vector<int>>& m, int a) {
  Code f = 0;
  for (int r = static_cast<int>(m.size()) - 1; r >= 0; --r)
    for (int c = a - 1; c >= 0; --c) f = f * q + ((m[r][c] % q) + q) % q;
  return f;
}

std::shared_ptr<ProtoExact> vect_f1(int max_size) {
  if (max_size < 0) throw std::invalid_argument("negative size bound");
  return std::make_shared<F1Category>(max_size);
}

std::shared_ptr<ProtoExact> vect_fq(int q, int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("negative dimension bound");
  bool prime = q >= 2;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) prime = false;
  if (!prime) throw std::invalid_argument("q = " + std::to_string(q) + " is not prime");
  return std::make_shared<FqCategory>(q, max_dim);
}

std::shared_ptr<ProtoExact> corrupted_deflations(std::shared_ptr<const ProtoExact> inner) {
  return std::make_shared<Corrupted>(std::move(inner));
}

// ---------------------------------------------------------------------------
// universal properties by counting against test objects

namespace {

struct PairHash {
  std::set<std::pair<Code, Code>> seen;
  bool injective = true;
  void add(Code a, Code b) {
    if (!seen.insert({a, b}).second) injective = false;
  }
};

}  // namespace

bool is_cartesian(const ProtoExact& C, const ProtoExact::Square& s, int bound) {
  if (!C.commutes(s)) return false;
  for (int T = 0; T <= bound; ++T) {
    PairHash h;
    for (Code u : C.homs(T, s.U)) h.add(C.compose(T, s.U, s.V, s.i, u), C.compose(T, s.U, s.W, s.p, u));
    if (!h.injective) return false;
    std::map<Code, long> left, right;
    for (Code a : C.homs(T, s.V)) ++left[C.compose(T, s.V, s.X, s.q, a)];
    for (Code b : C.homs(T, s.W)) ++right[C.compose(T, s.W, s.X, s.j, b)];
    long pairs = 0;
    for (auto& [c, n] : left) {
      auto it = right.find(c);
      if (it != right.end()) pairs += n * it->second;
    }
    if (pairs != static_cast<long>(h.seen.size())) return false;
  }
  return true;
}

bool is_cocartesian(const ProtoExact& C, const ProtoExact::Square& s, int bound) {
  if (!C.commutes(s)) return false;
  for (int T = 0; T <= bound; ++T) {
    PairHash h;
    for (Code x : C.homs(s.X, T)) h.add(C.compose(s.V, s.X, T, x, s.q), C.compose(s.W, s.X, T, x, s.j));
    if (!h.injective) return false;
    std::map<Code, long> left, right;
    for (Code a : C.homs(s.V, T)) ++left[C.compose(s.U, s.V, T, a, s.i)];
    for (Code b : C.homs(s.W, T)) ++right[C.compose(s.U, s.W, T, b, s.p)];
    long pairs = 0;
    for (auto& [c, n] : left) {
      auto it = right.find(c);
      if (it != right.end()) pairs += n * it->second;
    }
    if (pairs != static_cast<long>(h.seen.size())) return false;
  }
  return true;
}

namespace {

std::string show_square(const ProtoExact& C, const ProtoExact::Square& s) {
  return "i=" + C.show(s.U, s.V, s.i) + " p=" + C.show(s.U, s.W, s.p) + " j=" + C.show(s.W, s.X, s.j) +
         " q=" + C.show(s.V, s.X, s.q);
}

std::vector<Code> filtered(const ProtoExact& C, int a, int b, bool infl) {
  std::vector<Code> out;
  for (Code f : C.homs(a, b))
    if (infl ? C.is_inflation(a, b, f) : C.is_deflation(a, b, f)) out.push_back(f);
  return out;
}

}  // namespace

AxiomReport validate_protoexact(const ProtoExact& C, int bound) {
  AxiomReport R;
  bound = std::min(bound, C.bound());
  auto fail = [&](const std::string& s) {
    R.pass = false;
    if (R.violations.size() < 20) R.violations.push_back(s);
  };
  // (i)
  for (int U = 0; U <= bound; ++U) {
    auto in = C.homs(0, U), out = C.homs(U, 0);
    if (in.size() != 1 || out.size() != 1) fail("axiom (i): 0 is not a zero object against " + C.object_name(U));
    for (Code f : in)
      if (!C.is_inflation(0, U, f)) fail("axiom (i): " + C.show(0, U, f) + " not an inflation");
    for (Code f : out)
      if (!C.is_deflation(U, 0, f)) fail("axiom (i): " + C.show(U, 0, f) + " not a deflation");
  }
  // (ii)
  std::vector<std::vector<std::vector<Code>>> I(bound + 1), D(bound + 1);
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      I[a].push_back(filtered(C, a, b, true));
      D[a].push_back(filtered(C, a, b, false));
    }
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      for (Code f : C.isos(a, b)) {
        if (!C.is_inflation(a, b, f)) fail("axiom (ii): isomorphism " + C.show(a, b, f) + " not an inflation");
        if (!C.is_deflation(a, b, f)) fail("axiom (ii): isomorphism " + C.show(a, b, f) + " not a deflation");
      }
      for (int c = 0; c <= bound; ++c) {
        for (Code f : I[a][b])
          for (Code g : I[b][c])
            if (!C.is_inflation(a, c, C.compose(a, b, c, g, f)))
              fail("axiom (ii): inflations not closed at " + C.show(b, c, g) + " o " + C.show(a, b, f));
        for (Code f : D[a][b])
          for (Code g : D[b][c])
            if (!C.is_deflation(a, c, C.compose(a, b, c, g, f)))
              fail("axiom (ii): deflations not closed at " + C.show(b, c, g) + " o " + C.show(a, b, f));
      }
    }
  if (!R.pass) return R;
  // (iii) and the size criterion used by is_bicartesian
  for (int U = 0; U <= bound; ++U)
    for (int V = 0; V <= bound; ++V)
      for (int W = 0; W <= bound; ++W)
        for (int X = 0; X <= bound; ++X)
          for (Code i : I[U][V])
            for (Code p : D[U][W])
              for (Code j : I[W][X])
                for (Code q : D[V][X]) {
                  ProtoExact::Square s{U, V, W, X, i, p, j, q};
                  if (!C.commutes(s)) continue;
                  bool cart = is_cartesian(C, s, bound), cocart = is_cocartesian(C, s, bound);
                  if (cart != cocart) fail("axiom (iii): Cartesian != coCartesian for " + show_square(C, s));
                  if (C.is_bicartesian(s) != (cart && cocart))
                    fail("axiom (iii): size criterion disagrees for " + show_square(C, s));
                }
  // (iv) and (v)
  for (int V = 0; V <= bound; ++V)
    for (int W = 0; W <= bound; ++W)
      for (int X = 0; X <= bound; ++X)
        for (Code j : I[W][X])
          for (Code q : D[V][X]) {
            auto s = C.complete_pullback(V, W, X, j, q);
            if (s.U > bound) continue;
            if (!C.is_bicartesian(s) || !is_cartesian(C, s, bound) || !is_cocartesian(C, s, bound))
              fail("axiom (iv): completion fails for " + show_square(C, s));
          }
  for (int U = 0; U <= bound; ++U)
    for (int V = 0; V <= bound; ++V)
      for (int W = 0; W <= bound; ++W)
        for (Code i : I[U][V])
          for (Code p : D[U][W]) {
            auto s = C.complete_pushout(U, V, W, i, p);
            if (s.X > bound) continue;
            if (!C.is_bicartesian(s) || !is_cartesian(C, s, bound) || !is_cocartesian(C, s, bound))
              fail("axiom (v): completion fails for " + show_square(C, s));
          }
  return R;
}

ContextPtr f1_duality(std::shared_ptr<const ProtoExact> C) {
  auto ctx = std::make_shared<Context>();
  const ProtoExact* c = C.get();
  ctx->C = C;
  ctx->D.C = c;
  ctx->D.obj = [](int a) { return a; };
  ctx->D.mor = [](int a, int b, Code f) {
    auto v = f1_decode(a, b, f);
    std::vector<int> w(b, -1);
    for (int k = 0; k < a; ++k)
      if (v[k] >= 0) w[v[k]] = k;
    return f1_encode(a, w);
  };
  ctx->D.theta = [c](int a) { return c->identity(a); };
  ctx->W = identity_twist(ctx->D);
  return ctx;
}

ContextPtr fq_duality(std::shared_ptr<const ProtoExact> C, int sign) {
  auto fq = std::dynamic_pointer_cast<const FqCategory>(C);
  if (!fq) throw std::invalid_argument("transpose duality needs an F_q instance");
  const int q = fq->q();
  const int s = ((sign % q) + q) % q;
  if (s * s % q != 1) throw std::invalid_argument("sign must square to 1");
  auto ctx = std::make_shared<Context>();
  ctx->C = C;
  ctx->D.C = C.get();
  ctx->D.obj = [](int a) { return a; };
  ctx->D.mor = [q](int a, int b, Code f) { return fq_encode(q, transpose(fq_decode(q, a, b, f), a), b); };
  ctx->D.theta = [q, s](int a) {
    Mat M(a, std::vector<int>(a, 0));
    for (int k = 0; k < a; ++k) M[k][k] = s;
    return fq_encode(q, M, a);
  };
  ctx->W = identity_twist(ctx->D);
  return ctx;
}

AxiomReport validate_exact_duality(const ProtoExact& C, const Duality& D, int bound) {
  AxiomReport R;
  bound = std::min(bound, C.bound());
  auto fail = [&](const std::string& s) {
    R.pass = false;
    if (R.violations.size() < 20) R.violations.push_back(s);
  };
  std::string d = validate_duality(D);
  if (!d.empty()) fail("duality: " + d);
  if (D.obj(0) != 0) fail("P(0) is not 0");
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (Code f : C.homs(a, b)) {
        if (C.is_inflation(a, b, f) && !C.is_deflation(D.obj(b), D.obj(a), D.mor(a, b, f)))
          fail("P(" + C.show(a, b, f) + ") not a deflation");
        if (C.is_deflation(a, b, f) && !C.is_inflation(D.obj(b), D.obj(a), D.mor(a, b, f)))
          fail("P(" + C.show(a, b, f) + ") not an inflation");
      }
  for (int U = 0; U <= bound; ++U)
    for (int V = 0; V <= bound; ++V)
      for (int W = 0; W <= bound; ++W)
        for (Code i : C.homs(U, V)) {
          if (!C.is_inflation(U, V, i)) continue;
          for (Code p : C.homs(U, W)) {
            if (!C.is_deflation(U, W, p)) continue;
            auto s = C.complete_pushout(U, V, W, i, p);
            if (s.X > bound) continue;
            ProtoExact::Square t{D.obj(s.X), D.obj(s.V), D.obj(s.W), D.obj(s.U),
                                 D.mor(s.V, s.X, s.q), D.mor(s.W, s.X, s.j),
                                 D.mor(s.U, s.W, s.p), D.mor(s.U, s.V, s.i)};
            if (!C.is_bicartesian(t)) fail("P does not preserve the biCartesian square " + show_square(C, s));
          }
        }
  return R;
}

// ---------------------------------------------------------------------------
// S-construction

namespace {

// normal flag for block sizes a_1..a_n: vertex and slot codes in grid order
std::pair<std::vector<int>, std::vector<Code>> normal_flag(const ProtoExact& C, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  Grid g{n};
  std::vector<int> pre(n + 1, 0);
  for (int k = 0; k < n; ++k) pre[k + 1] = pre[k] + a[k];
  auto A = [&](int i, int j) { return pre[j] - pre[i]; };
  std::vector<int> verts(g.vertices());
  std::vector<Code> slots(g.slots());
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) verts[g.vertex(i, j)] = A(i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j < n; ++j) slots[g.hslot(i, j)] = C.std_inflation(A(i, j), A(i, j + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) slots[g.vslot(i, j)] = C.std_deflation(A(i, j), a[i]);
  return {verts, slots};
}

// size vectors of length n with total at most bound
void compositions(int n, int bound, std::vector<int>& cur, const std::function<void()>& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit();
    return;
  }
  for (int k = 0; k <= bound; ++k) {
    cur.push_back(k);
    compositions(n, bound - k, cur, emit);
    cur.pop_back();
  }
}

// grid part of a key whose vertex block has length nv
bool s_valid(const ProtoExact& C, int n, int nv, const Key& x) {
  Grid g{n};
  auto V = [&](int i, int j) { return static_cast<int>(x[g.vertex(i, j)]); };
  auto H = [&](int i, int j) { return x[nv + g.hslot(i, j)]; };
  auto D = [&](int i, int j) { return x[nv + g.vslot(i, j)]; };
  for (int i = 0; i <= n; ++i)
    if (V(i, i) != C.zero()) return false;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j < n; ++j)
      if (!C.is_inflation(V(i, j), V(i, j + 1), H(i, j))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!C.is_deflation(V(i, j), V(i + 1, j), D(i, j))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ProtoExact::Square s{V(i, j), V(i, j + 1), V(i + 1, j), V(i + 1, j + 1), H(i, j), D(i, j), H(i + 1, j),
                           D(i, j + 1)};
      if (!C.is_bicartesian(s)) return false;
    }
  return true;
}

std::string describe_grid(int n, int nv, const Key& x) {
  Grid g{n};
  std::ostringstream os;
  os << "sizes";
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) os << " " << x[g.vertex(i, j)];
  os << " maps " << key_string(Key(x.begin() + nv, x.end()));
  return os.str();
}

}  // namespace

Built waldhausen_S(std::shared_ptr<const ProtoExact> C, int N) {
  auto ctx = plain_context(C);
  Construction c;
  c.name = "S";
  c.N = N;
  c.shape = grid_shape;
  c.valid = [C](const Ambient&, const Shape& s, int n, const Key& x) { return s_valid(*C, n, s.nv, x); };
  c.cover = [C](int n, const SGrpd&) {
    std::vector<Key> out;
    std::vector<int> cur;
    compositions(n, C->bound(), cur, [&] {
      auto [v, s] = normal_flag(*C, cur);
      Key k(v.begin(), v.end());
      k.insert(k.end(), s.begin(), s.end());
      out.push_back(k);
    });
    return out;
  };
  c.reindex = grid_reindex;
  c.describe = [](int n, const Key& x) { return describe_grid(n, Grid{n}.vertices(), x); };
  return assemble(ctx, c);
}

// ---------------------------------------------------------------------------
// isotropic reduction

Reduction isotropic_reduction(const ProtoExact& C, const Duality& D, int N, Code psi, int U, Code i) {
  Reduction r;
  if (!C.is_inflation(U, N, i)) {
    r.error = "not an inflation: " + C.show(U, N, i);
    return r;
  }
  const int PN = D.obj(N), PU = D.obj(U);
  if (!C.is_iso(N, PN, psi)) {
    r.error = "form is not an isomorphism";
    return r;
  }
  Code Pi = D.mor(U, N, i);                     // P N ->> P U
  Code def = C.compose(N, PN, PU, Pi, psi);     // N ->> P U
  if (C.compose(U, N, PU, def, i) != C.zero_map(U, PU)) {
    r.error = "not isotropic: P(i) psi i != 0";
    return r;
  }
  if (!C.is_deflation(N, PU, def)) {
    r.error = "P(i) psi is not a deflation";
    return r;
  }
  auto perp = C.complete_pullback(N, C.zero(), PU, C.zero_map(C.zero(), PU), def);
  r.perp = perp.U;
  r.k = perp.i;
  std::vector<Code> lifts;
  for (Code c : C.homs(U, r.perp))
    if (C.compose(U, r.perp, N, r.k, c) == i) lifts.push_back(c);
  if (lifts.size() != 1) {
    r.error = std::to_string(lifts.size()) + " factorizations of U through its orthogonal";
    return r;
  }
  Code c = lifts[0];
  if (!C.is_inflation(U, r.perp, c)) {
    r.error = "U -> U^perp is not an inflation";
    return r;
  }
  auto push = C.complete_pushout(U, r.perp, C.zero(), c, C.zero_map(U, C.zero()));
  r.M = push.X;
  r.pi = push.q;
  // P(k) psi k = P(pi) psi_M pi
  const int Pperp = D.obj(r.perp), PM = D.obj(r.M);
  Code Pk = D.mor(r.perp, N, r.k);
  Code lhs = C.compose(r.perp, PN, Pperp, Pk, C.compose(r.perp, N, PN, psi, r.k));
  Code Ppi = D.mor(r.perp, r.M, r.pi);
  std::vector<Code> cand;
  for (Code m : C.isos(r.M, PM)) {
    Code rhs = C.compose(r.perp, PM, Pperp, Ppi, C.compose(r.perp, r.M, PM, m, r.pi));
    if (rhs == lhs) cand.push_back(m);
  }
  if (cand.size() != 1) {
    r.error = std::to_string(cand.size()) + " candidate forms on the reduction";
    return r;
  }
  r.psiM = cand[0];
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------------
// R-construction

RelativeBuilt hermitian_R(std::shared_ptr<const ProtoExact> C, ContextPtr duality, int N) {
  auto rep = validate_exact_duality(*C, duality->D, C->bound());
  if (!rep.pass) throw std::invalid_argument("duality not exact: " + rep.violations.front());
  RelativeBuilt R;
  R.X = waldhausen_S(C, N);
  Construction c;
  c.name = "R";
  c.N = N;
  c.shape = [](int n) {
    const int M = 2 * n + 1;
    Shape s = grid_shape(M);
    add_form_slots(s, grid_involution(M));
    return s;
  };
  c.valid = [C](const Ambient& amb, const Shape& s, int n, const Key& x) {
    const int M = 2 * n + 1;
    return s_valid(*C, M, s.nv, x) && forms_valid(amb, s, x, Grid{M}.slots(), grid_involution(M));
  };
  c.cover = [C, duality](int n, const SGrpd&) {
    const int M = 2 * n + 1;
    Shape s = grid_shape(M);
    auto inv = grid_involution(M);
    add_form_slots(s, inv);
    std::vector<Key> out;
    std::vector<int> half;
    // a_k = a_{M+1-k}; the middle block a_{n+1} pairs with itself
    std::function<void(int)> rec = [&](int left) {
      if (static_cast<int>(half.size()) == n + 1) {
        std::vector<int> a(M);
        for (int k = 0; k <= n; ++k) a[k] = a[M - 1 - k] = half[k];
        auto [v, sl] = normal_flag(*C, a);
        Key k(v.begin(), v.end());
        k.insert(k.end(), sl.begin(), sl.end());
        for (auto& x : enumerate_forms(duality->amb(), s, Grid{M}.slots(), inv, k)) out.push_back(x);
        return;
      }
      const bool middle = static_cast<int>(half.size()) == n;
      for (int t = 0; (middle ? t : 2 * t) <= left; ++t) {
        half.push_back(t);
        rec(left - (middle ? t : 2 * t));
        half.pop_back();
      }
    };
    rec(C->bound());
    return out;
  };
  c.reindex = [](int n, const std::vector<int>& phi) {
    Reindex r = grid_reindex(2 * n + 1, double_map(n, phi));
    add_form_steps(r, Grid{2 * n + 1}.slots());
    return r;
  };
  c.describe = [](int n, const Key& x) { return describe_grid(2 * n + 1, Grid{2 * n + 1}.vertices(), x); };
  R.Y = assemble(duality, c);
  R.F = reindex_map(R.Y, R.X, [](int n) { return grid_reindex(2 * n + 1, identity_map(n)); });
  return R;
}

// ---------------------------------------------------------------------------
// stability and framings

namespace {

bool valid_zeta(const std::pair<long, long>& z) { return z.second > 0 || (z.second == 0 && z.first < 0); }

// phase(a) < phase(b) for a, b in the upper half plane
bool phase_less(std::pair<Int, Int> a, std::pair<Int, Int> b) { return a.first * b.second - a.second * b.first > 0; }

}  // namespace

StabilityReport stability_report(const ProtoExact& C, const StabilityFraming& SF, int A, Code s) {
  StabilityReport r;
  if (SF.zeta.empty() || SF.f.empty()) {
    r.valid_zeta = false;
    r.note = "missing zeta or framing";
    return r;
  }
  if (!valid_zeta(SF.zeta[0])) {
    r.valid_zeta = false;
    r.note = "zeta outside the upper half plane";
    return r;
  }
  const int f = SF.f[0];
  auto Z = [&](int d) { return std::make_pair(Int(SF.zeta[0].first) * d, Int(SF.zeta[0].second) * d); };
  std::ostringstream os;
  os << "Z=(" << Z(A).first << "," << Z(A).second << ")";
  if (A == 0) {
    r.note = os.str() + "; zero object excluded";
    return r;
  }
  auto subs = C.subobjects(A);
  r.semistable = true;
  for (auto& sub : subs)
    if (sub.U > 0 && sub.U < A && phase_less(Z(A), Z(sub.U))) r.semistable = false;
  r.stable_framed = r.semistable;
  for (auto& sub : subs) {
    if (!r.stable_framed) break;
    if (sub.U == A) continue;
    bool contains = false;
    for (Code t : C.homs(f, sub.U))
      if (C.compose(f, sub.U, A, sub.i, t) == s) {
        contains = true;
        break;
      }
    if (!contains) continue;
    if (sub.U == 0 || !phase_less(Z(sub.U), Z(A))) r.stable_framed = false;
  }
  r.note = os.str();
  return r;
}

RelativeBuilt stable_framed_S(std::shared_ptr<const ProtoExact> C, const StabilityFraming& SF, int N) {
  if (SF.zeta.empty() || !valid_zeta(SF.zeta[0])) throw std::invalid_argument("zeta outside the upper half plane");
  if (SF.f.empty() || SF.f[0] < 0 || SF.f[0] > C->bound()) throw std::invalid_argument("framing out of range");
  const int f = SF.f[0];
  RelativeBuilt R;
  R.X = waldhausen_S(C, N);
  Construction c;
  c.name = "SF";
  c.N = N;
  // grid on [n+1], framing vertex F last, then sections F -> A_{i,n+1}
  c.shape = [](int n) {
    Grid g{n + 1};
    Shape s = grid_shape(n + 1);
    const int F = s.nv++;
    s.fixed.resize(s.nv, false);
    s.fixed[F] = true;
    for (int i = 0; i <= n + 1; ++i) s.slots.push_back({F, "", g.vertex(i, n + 1), ""});
    return s;
  };
  c.valid = [C, SF, f](const Ambient&, const Shape& s, int n, const Key& x) {
    Grid g{n + 1};
    const int F = g.vertices(), base = g.slots();
    if (x[F] != f || !s_valid(*C, n + 1, s.nv, x)) return false;
    auto sec = [&](int i) { return x[s.nv + base + i]; };
    for (int i = 0; i <= n; ++i) {
      int a = static_cast<int>(x[g.vertex(i, n + 1)]), b = static_cast<int>(x[g.vertex(i + 1, n + 1)]);
      if (C->compose(f, a, b, x[s.nv + g.vslot(i, n + 1)], sec(i)) != sec(i + 1)) return false;
      if (!stability_report(*C, SF, a, sec(i)).stable_framed) return false;
    }
    return true;
  };
  c.cover = [C, SF, f](int n, const SGrpd&) {
    Grid g{n + 1};
    std::vector<Key> out;
    std::vector<int> cur;
    compositions(n + 1, C->bound(), cur, [&] {
      auto [v, sl] = normal_flag(*C, cur);
      int M0 = v[g.vertex(0, n + 1)];
      for (Code s0 : C->homs(f, M0)) {
        std::vector<Code> sec{s0};
        bool ok = true;
        for (int i = 0; i <= n && ok; ++i) {
          int a = v[g.vertex(i, n + 1)], b = v[g.vertex(i + 1, n + 1)];
          ok = stability_report(*C, SF, a, sec[i]).stable_framed;
          sec.push_back(C->compose(f, a, b, sl[g.vslot(i, n + 1)], sec[i]));
        }
        if (!ok) continue;
        Key k(v.begin(), v.end());
        k.push_back(f);
        k.insert(k.end(), sl.begin(), sl.end());
        k.insert(k.end(), sec.begin(), sec.end());
        out.push_back(k);
      }
    });
    return out;
  };
  c.reindex = [](int n, const std::vector<int>& phi) {
    const int m = static_cast<int>(phi.size()) - 1;
    auto ext = phi;
    ext.push_back(n + 1);
    Reindex r = grid_reindex(n + 1, ext);
    r.vmap.push_back(Grid{n + 1}.vertices());
    const int base = Grid{n + 1}.slots();
    for (int i = 0; i <= m + 1; ++i) r.slots.push_back({{{base + ext[i], ""}}});
    return r;
  };
  c.describe = [](int n, const Key& x) { return describe_grid(n + 1, Grid{n + 1}.vertices() + 1, x); };
  R.Y = assemble(plain_context(C), c);
  R.F = reindex_map(R.Y, R.X, [](int n) { return grid_reindex(n + 1, identity_map(n)); });
  return R;
}

std::vector<Functor> forget_framing(const RelativeBuilt& SF, const Built& S) {
  std::vector<Functor> out;
  for (int n = 0; n <= SF.Y.X->N && n + 1 <= S.X->N; ++n)
    out.push_back(make_reindex(SF.Y.G[n], S.shapes[n + 1], grid_reindex(n + 1, identity_map(n + 1))));
  return out;
}

}  // namespace segal
