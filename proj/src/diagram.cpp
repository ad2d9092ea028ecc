#include "segal/diagram.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace segal {

bool BaseCategory::valid(int a, int b, Code f) const {
  if (a < 0 || b < 0 || a >= object_count() || b >= object_count()) return false;
  auto h = homs(a, b);
  return std::find(h.begin(), h.end(), f) != h.end();
}

std::string BaseCategory::show(int a, int b, Code f) const {
  return object_name(a) + "->" + object_name(b) + ":" + std::to_string(f);
}

bool BaseCategory::is_iso(int a, int b, Code f) const {
  const auto& v = isos(a, b);
  return std::find(v.begin(), v.end(), f) != v.end();
}

const std::vector<Code>& BaseCategory::isos(int a, int b) const {
  {
    std::lock_guard<std::mutex> lk(cache_.mu);
    auto it = cache_.isos.find({a, b});
    if (it != cache_.isos.end()) return it->second;
  }
  std::vector<Code> out = find_isos(a, b);
  std::lock_guard<std::mutex> lk(cache_.mu);
  return cache_.isos.emplace(std::make_pair(a, b), std::move(out)).first->second;
}

std::vector<Code> BaseCategory::find_isos(int a, int b) const {
  std::vector<Code> out;
  auto back = homs(b, a);
  for (Code f : homs(a, b))
    for (Code g : back)
      if (compose(a, b, a, g, f) == identity(a) && compose(b, a, b, f, g) == identity(b)) {
        out.push_back(f);
        break;
      }
  return out;
}

Code BaseCategory::inverse(int a, int b, Code f) const {
  {
    std::lock_guard<std::mutex> lk(cache_.mu);
    auto it = cache_.inv.find({a, b, f});
    if (it != cache_.inv.end()) return it->second;
  }
  for (Code g : homs(b, a))
    if (compose(a, b, a, g, f) == identity(a) && compose(b, a, b, f, g) == identity(b)) {
      std::lock_guard<std::mutex> lk(cache_.mu);
      cache_.inv[{a, b, f}] = g;
      return g;
    }
  throw std::logic_error("not an isomorphism: " + show(a, b, f));
}

int BaseCategory::iso_class(int a) const {
  for (int b = 0; b < a; ++b)
    if (!isos(b, a).empty()) return b;
  return a;
}

std::string validate_duality(const Duality& D) {
  const BaseCategory& C = *D.C;
  const int n = C.object_count();
  for (int a = 0; a < n; ++a) {
    int pa = D.obj(a);
    if (pa < 0 || pa >= n) return "P(" + C.object_name(a) + ") out of range";
    if (D.mor(a, a, C.identity(a)) != C.identity(pa)) return "P fails on identity of " + C.object_name(a);
    int ppa = D.obj(pa);
    Code th = D.theta(a);
    if (!C.is_iso(a, ppa, th)) return "Theta_" + C.object_name(a) + " not an isomorphism";
    // P(Theta_a) o Theta_{P a} = id
    Code lhs = C.compose(pa, D.obj(ppa), pa, D.mor(a, ppa, th), D.theta(pa));
    if (lhs != C.identity(pa)) return "P(Theta) Theta_P != id at " + C.object_name(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (Code f : C.homs(a, b)) {
        int pa = D.obj(a), pb = D.obj(b);
        Code pf = D.mor(a, b, f);
        if (!C.valid(pb, pa, pf)) return "P(" + C.show(a, b, f) + ") ill-typed";
        // Theta natural: PP(f) Theta_a = Theta_b f
        Code ppf = D.mor(pb, pa, pf);
        if (C.compose(a, D.obj(pa), D.obj(pb), ppf, D.theta(a)) != C.compose(a, b, D.obj(pb), D.theta(b), f))
          return "Theta not natural at " + C.show(a, b, f);
        for (int c = 0; c < n; ++c)
          for (Code g : C.homs(b, c)) {
            int pc = D.obj(c);
            Code lhs = D.mor(a, c, C.compose(a, b, c, g, f));
            Code rhs = C.compose(pc, pb, pa, pf, D.mor(b, c, g));
            if (lhs != rhs) return "P not functorial on " + C.show(b, c, g) + " o " + C.show(a, b, f);
          }
      }
  return {};
}

Twist identity_twist(const Duality& D) {
  const BaseCategory* C = D.C;
  Twist W;
  W.obj = [](int a) { return a; };
  W.mor = [](int, int, Code f) { return f; };
  W.lambda = [C, D](int a) { return C->identity(D.obj(a)); };
  return W;
}

std::string validate_twist(const Duality& D, const Twist& W) {
  const BaseCategory& C = *D.C;
  const int n = C.object_count();
  auto P = [&](int a) { return D.obj(a); };
  auto T = [&](int a) { return W.obj(a); };
  for (int a = 0; a < n; ++a) {
    if (W.mor(a, a, C.identity(a)) != C.identity(T(a))) return "T fails on identity of " + C.object_name(a);
    if (!C.valid(P(a), T(P(T(a))), W.lambda(a))) return "lambda ill-typed at " + C.object_name(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (Code f : C.homs(a, b)) {
        Code tf = W.mor(a, b, f);
        if (!C.valid(T(a), T(b), tf)) return "T(" + C.show(a, b, f) + ") ill-typed";
        for (int c = 0; c < n; ++c)
          for (Code g : C.homs(b, c))
            if (W.mor(a, c, C.compose(a, b, c, g, f)) != C.compose(T(a), T(b), T(c), W.mor(b, c, g), tf))
              return "T not functorial at " + C.show(b, c, g) + " o " + C.show(a, b, f);
        // TPT(f) lambda_b = lambda_a P(f)
        Code ptf = D.mor(T(a), T(b), tf);                  // PT(b) -> PT(a)
        Code tptf = W.mor(P(T(b)), P(T(a)), ptf);          // TPT(b) -> TPT(a)
        Code lhs = C.compose(P(b), T(P(T(b))), T(P(T(a))), tptf, W.lambda(b));
        Code rhs = C.compose(P(b), P(a), T(P(T(a))), W.lambda(a), D.mor(a, b, f));
        if (lhs != rhs) return "lambda not natural at " + C.show(a, b, f);
      }
  for (int x = 0; x < n; ++x) {
    // TP(lambda_x) o lambda_{PT x} o Theta_{T x} = T(Theta_x)
    int tx = T(x), px = P(x);
    int tptx = T(P(tx));
    Code lam = W.lambda(x);                                   // P x -> TPT x
    Code plam = D.mor(px, tptx, lam);                         // P TPT x -> P P x
    Code tplam = W.mor(P(tptx), P(px), plam);                 // TPTPT x -> TPP x
    int ptx = P(tx);
    Code l2 = W.lambda(ptx);                                  // P PT x -> T P T PT x
    int ppt = P(ptx);
    int mid = T(P(T(ptx)));
    Code lhs = C.compose(tx, ppt, mid, l2, D.theta(tx));
    lhs = C.compose(tx, mid, T(P(px)), tplam, lhs);
    Code rhs = W.mor(x, P(px), D.theta(x));
    if (lhs != rhs) return "loop compatibility fails at " + C.object_name(x);
  }
  return {};
}

bool Ambient::covariant(const std::string& w) {
  return std::count(w.begin(), w.end(), 'P') % 2 == 0;
}

int Ambient::obj(const std::string& w, int a) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) a = *it == 'P' ? D->obj(a) : W->obj(a);
  return a;
}

Code Ambient::mor(const std::string& w, int a, int b, Code f) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 'P') {
      f = D->mor(a, b, f);
      int pa = D->obj(a), pb = D->obj(b);
      a = pb;
      b = pa;
    } else {
      f = W->mor(a, b, f);
      a = W->obj(a);
      b = W->obj(b);
    }
  }
  return f;
}

DiagramGroupoid::DiagramGroupoid(Ambient amb, Shape shape, Pred valid, Cover cover, Describe describe)
    : amb_(amb), shape_(std::move(shape)), valid_(std::move(valid)), cover_(std::move(cover)),
      describe_(std::move(describe)) {
  if (shape_.fixed.empty()) shape_.fixed.assign(shape_.nv, false);
  std::vector<std::vector<int>> adj(shape_.nv);
  for (auto& s : shape_.slots) {
    adj[s.u].push_back(s.w);
    adj[s.w].push_back(s.u);
  }
  std::vector<int> pos(shape_.nv, -1);
  for (int start = 0; start < shape_.nv; ++start) {
    if (pos[start] >= 0) continue;
    std::deque<int> q{start};
    pos[start] = static_cast<int>(order_.size());
    order_.push_back(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (pos[w] < 0) {
          pos[w] = static_cast<int>(order_.size());
          order_.push_back(w);
          q.push_back(w);
        }
    }
  }
  checks_.assign(shape_.nv, {});
  for (int s = 0; s < static_cast<int>(shape_.slots.size()); ++s)
    checks_[std::max(pos[shape_.slots[s].u], pos[shape_.slots[s].w])].push_back(s);
}

int DiagramGroupoid::slot_src(const Key& x, int s) const {
  return amb_.obj(shape_.slots[s].A, vertex(x, shape_.slots[s].u));
}

int DiagramGroupoid::slot_tgt(const Key& x, int s) const {
  return amb_.obj(shape_.slots[s].B, vertex(x, shape_.slots[s].w));
}

bool DiagramGroupoid::slot_well_typed(const Key& x, int s) const {
  return amb_.C->valid(slot_src(x, s), slot_tgt(x, s), slot(x, s));
}

bool DiagramGroupoid::is_object(const Key& x) const {
  if (static_cast<int>(x.size()) != shape_.nv + static_cast<int>(shape_.slots.size())) return false;
  for (int v = 0; v < shape_.nv; ++v)
    if (x[v] < 0 || x[v] >= amb_.C->object_count()) return false;
  for (int s = 0; s < static_cast<int>(shape_.slots.size()); ++s)
    if (!slot_well_typed(x, s)) return false;
  return !valid_ || valid_(x);
}

Mor DiagramGroupoid::identity(const Key& x) const {
  Key g(shape_.nv);
  for (int v = 0; v < shape_.nv; ++v) g[v] = amb_.C->identity(vertex(x, v));
  return {x, x, g};
}

Mor DiagramGroupoid::compose(const Mor& g, const Mor& f) const {
  Key c(shape_.nv);
  for (int v = 0; v < shape_.nv; ++v)
    c[v] = amb_.C->compose(vertex(f.src, v), vertex(f.tgt, v), vertex(g.tgt, v), g.code[v], f.code[v]);
  return {f.src, g.tgt, c};
}

Mor DiagramGroupoid::inverse(const Mor& f) const {
  Key c(shape_.nv);
  for (int v = 0; v < shape_.nv; ++v) c[v] = amb_.C->inverse(vertex(f.src, v), vertex(f.tgt, v), f.code[v]);
  return {f.tgt, f.src, c};
}

Code DiagramGroupoid::transport(const Key& x, const Key& y, const Key& g, int s) const {
  const BaseCategory& C = *amb_.C;
  const Slot& sl = shape_.slots[s];
  int xu = vertex(x, sl.u), yu = vertex(y, sl.u), xw = vertex(x, sl.w), yw = vertex(y, sl.w);
  // e1 : A(y_u) -> A(x_u), e2 : B(x_w) -> B(y_w)
  Code e1 = Ambient::covariant(sl.A) ? amb_.mor(sl.A, yu, xu, C.inverse(xu, yu, g[sl.u]))
                                     : amb_.mor(sl.A, xu, yu, g[sl.u]);
  Code e2 = Ambient::covariant(sl.B) ? amb_.mor(sl.B, xw, yw, g[sl.w])
                                     : amb_.mor(sl.B, yw, xw, C.inverse(xw, yw, g[sl.w]));
  int ayu = amb_.obj(sl.A, yu), axu = amb_.obj(sl.A, xu);
  int bxw = amb_.obj(sl.B, xw), byw = amb_.obj(sl.B, yw);
  Code m = C.compose(ayu, axu, bxw, slot(x, s), e1);
  return C.compose(ayu, bxw, byw, e2, m);
}

void DiagramGroupoid::homs(const Key& x, const Key& y, bool all, std::vector<Mor>& out) const {
  const BaseCategory& C = *amb_.C;
  for (int v = 0; v < shape_.nv; ++v) {
    if (C.isos(vertex(x, v), vertex(y, v)).empty()) return;
    if (shape_.fixed[v] && x[v] != y[v]) return;
  }
  Key g(shape_.nv, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int p) {
    if (stop) return;
    if (p == shape_.nv) {
      out.push_back({x, y, g});
      if (!all) stop = true;
      return;
    }
    int v = order_[p];
    std::vector<Code> single;
    const std::vector<Code>* cand;
    if (shape_.fixed[v]) {
      single.push_back(C.identity(vertex(x, v)));
      cand = &single;
    } else {
      cand = &C.isos(vertex(x, v), vertex(y, v));
    }
    for (Code c : *cand) {
      g[v] = c;
      bool ok = true;
      for (int s : checks_[p])
        if (transport(x, y, g, s) != slot(y, s)) {
          ok = false;
          break;
        }
      if (ok) rec(p + 1);
      if (stop) return;
    }
  };
  rec(0);
}

Key DiagramGroupoid::invariant(const Key& x) const {
  Key k;
  for (int v = 0; v < shape_.nv; ++v) k.push_back(amb_.C->iso_class(vertex(x, v)));
  for (int s = 0; s < static_cast<int>(shape_.slots.size()); ++s)
    k.push_back(amb_.C->mor_invariant(slot_src(x, s), slot_tgt(x, s), slot(x, s)));
  return k;
}

std::string DiagramGroupoid::describe(const Key& x) const {
  if (describe_) return describe_(x);
  return key_string(x);
}

Functor make_reindex(std::shared_ptr<const DiagramGroupoid> from, const Shape& to, Reindex r) {
  auto rp = std::make_shared<Reindex>(std::move(r));
  auto shape = std::make_shared<Shape>(to);
  Functor F;
  F.obj = [from, rp, shape](const Key& x) {
    const Ambient& amb = from->ambient();
    const BaseCategory& C = *amb.C;
    Key y;
    y.reserve(shape->nv + shape->slots.size());
    for (int v : rp->vmap) y.push_back(x[v]);
    for (std::size_t s = 0; s < shape->slots.size(); ++s) {
      const SlotExpr& e = rp->slots[s];
      if (e.steps.empty()) {
        const Slot& sl = shape->slots[s];
        y.push_back(C.identity(amb.obj(sl.A, static_cast<int>(y[sl.u]))));
        continue;
      }
      int a = -1, b = -1;
      Code acc = 0;
      for (auto& [os, word] : e.steps) {
        int sa = amb.obj(word, from->slot_src(x, os));
        int sb = amb.obj(word, from->slot_tgt(x, os));
        Code m = amb.mor(word, from->slot_src(x, os), from->slot_tgt(x, os), from->slot(x, os));
        if (a < 0) {
          a = sa;
          acc = m;
        } else {
          acc = C.compose(a, sa, sb, m, acc);
        }
        b = sb;
      }
      (void)b;
      y.push_back(acc);
    }
    return y;
  };
  F.code = [rp](const Mor& m) {
    Key c;
    c.reserve(rp->vmap.size());
    for (int v : rp->vmap) c.push_back(m.code[v]);
    return c;
  };
  return F;
}

std::vector<int> face_map(int m, int i) {
  std::vector<int> phi;
  for (int k = 0; k <= m; ++k)
    if (k != i) phi.push_back(k);
  return phi;
}

std::vector<int> degen_map(int m, int i) {
  std::vector<int> phi;
  for (int k = 0; k <= m; ++k) {
    phi.push_back(k);
    if (k == i) phi.push_back(k);
  }
  return phi;
}

std::vector<int> edge_face_map(int n, int i) {
  const int M = 2 * n + 1;
  std::vector<int> phi;
  for (int k = 0; k <= M; ++k)
    if (k != i && k != M - i) phi.push_back(k);
  return phi;
}

std::vector<int> edge_degen_map(int n, int i) {
  const int M = 2 * n + 1;
  std::vector<int> phi;
  for (int k = 0; k <= M; ++k) {
    phi.push_back(k);
    if (k == i || k == M - i) phi.push_back(k);
  }
  return phi;
}

std::vector<int> identity_map(int n) {
  std::vector<int> v(n + 1);
  for (int k = 0; k <= n; ++k) v[k] = k;
  return v;
}

std::vector<int> double_map(int n, const std::vector<int>& phi) {
  const int m = static_cast<int>(phi.size()) - 1;
  std::vector<int> psi(2 * m + 2);
  for (int k = 0; k <= m; ++k) {
    psi[k] = phi[k];
    psi[2 * m + 1 - k] = 2 * n + 1 - phi[k];
  }
  return psi;
}

void add_form_steps(Reindex& r, int old_base) {
  for (int v : r.vmap) r.slots.push_back({{{old_base + v, ""}}});
}

Shape chain_shape(int n) {
  Shape s;
  s.nv = n + 1;
  for (int k = 0; k < n; ++k) s.slots.push_back({k, "", k + 1, ""});
  s.fixed.assign(s.nv, false);
  return s;
}

Reindex chain_reindex(int n, const std::vector<int>& phi) {
  (void)n;
  Reindex r;
  r.vmap = phi;
  for (std::size_t k = 0; k + 1 < phi.size(); ++k) {
    SlotExpr e;
    for (int j = phi[k]; j < phi[k + 1]; ++j) e.steps.push_back({j, ""});
    r.slots.push_back(e);
  }
  return r;
}

int Grid::vertex(int i, int j) const {
  // row i holds (i,i)..(i,n)
  return i * (n + 1) - i * (i - 1) / 2 + (j - i);
}

int Grid::hslot(int i, int j) const {
  // horizontal slots first, row-major over i <= j < n
  return i * n - i * (i - 1) / 2 + (j - i);
}

int Grid::vslot(int i, int j) const {
  // vertical slots after the n(n+1)/2 horizontals, ordered by (i, j) with i < j
  return n * (n + 1) / 2 + i * n - i * (i - 1) / 2 + (j - i - 1);
}

Shape grid_shape(int n) {
  Grid g{n};
  Shape s;
  s.nv = g.vertices();
  s.slots.resize(g.slots());
  for (int i = 0; i <= n; ++i)
    for (int j = i; j < n; ++j) s.slots[g.hslot(i, j)] = {g.vertex(i, j), "", g.vertex(i, j + 1), ""};
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.slots[g.vslot(i, j)] = {g.vertex(i, j), "", g.vertex(i + 1, j), ""};
  s.fixed.assign(s.nv, false);
  return s;
}

Reindex grid_reindex(int n, const std::vector<int>& phi) {
  Grid old{n};
  Grid g{static_cast<int>(phi.size()) - 1};
  Reindex r;
  r.vmap.resize(g.vertices());
  r.slots.resize(g.slots());
  for (int i = 0; i <= g.n; ++i)
    for (int j = i; j <= g.n; ++j) r.vmap[g.vertex(i, j)] = old.vertex(phi[i], phi[j]);
  for (int i = 0; i <= g.n; ++i)
    for (int j = i; j < g.n; ++j) {
      SlotExpr& e = r.slots[g.hslot(i, j)];
      for (int k = phi[j]; k < phi[j + 1]; ++k) e.steps.push_back({old.hslot(phi[i], k), ""});
    }
  for (int i = 0; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      SlotExpr& e = r.slots[g.vslot(i, j)];
      for (int k = phi[i]; k < phi[i + 1]; ++k) e.steps.push_back({old.vslot(k, phi[j]), ""});
    }
  return r;
}

ShapeInvolution chain_involution(int n) {
  ShapeInvolution inv;
  for (int k = 0; k <= n; ++k) inv.vstar.push_back(n - k);
  // slot k : k -> k+1 goes to slot n-k-1 : n-k-1 -> n-k
  for (int k = 0; k < n; ++k) inv.sstar.push_back(n - k - 1);
  return inv;
}

ShapeInvolution grid_involution(int n) {
  Grid g{n};
  ShapeInvolution inv;
  inv.vstar.resize(g.vertices());
  inv.sstar.resize(g.slots());
  for (int p = 0; p <= n; ++p)
    for (int q = p; q <= n; ++q) inv.vstar[g.vertex(p, q)] = g.vertex(n - q, n - p);
  for (int p = 0; p <= n; ++p)
    for (int q = p; q < n; ++q) inv.sstar[g.hslot(p, q)] = g.vslot(n - q - 1, n - p);
  for (int p = 0; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) inv.sstar[g.vslot(p, q)] = g.hslot(n - q, n - p - 1);
  return inv;
}

void add_form_slots(Shape& shape, const ShapeInvolution& inv) {
  for (int v = 0; v < shape.nv; ++v) shape.slots.push_back({v, "", inv.vstar[v], "P"});
}

namespace {

// naturality of the forms along slot s, symmetry at vertex v
bool natural_at(const Ambient& amb, const Shape& shape, int base, const ShapeInvolution& inv, const Key& x,
                int s) {
  const BaseCategory& C = *amb.C;
  const Duality& D = *amb.D;
  const Slot& sl = shape.slots[s];
  int u = sl.u, w = sl.w;
  int ss = inv.sstar[s];
  int xu = static_cast<int>(x[u]), xw = static_cast<int>(x[w]);
  int xus = static_cast<int>(x[inv.vstar[u]]), xws = static_cast<int>(x[inv.vstar[w]]);
  Code m = x[shape.nv + s], ms = x[shape.nv + ss];  // ms : x_{w*} -> x_{u*}
  Code psu = x[shape.nv + base + u], psw = x[shape.nv + base + w];
  Code lhs = C.compose(xu, xw, D.obj(xws), psw, m);
  Code rhs = C.compose(xu, D.obj(xus), D.obj(xws), D.mor(xws, xus, ms), psu);
  return lhs == rhs;
}

bool symmetric_at(const Ambient& amb, const Shape& shape, int base, const ShapeInvolution& inv, const Key& x,
                  int v) {
  const BaseCategory& C = *amb.C;
  const Duality& D = *amb.D;
  int vs = inv.vstar[v];
  int xv = static_cast<int>(x[v]), xvs = static_cast<int>(x[vs]);
  Code pv = x[shape.nv + base + v], pvs = x[shape.nv + base + vs];  // pvs : x_{v*} -> P(x_v)
  Code lhs = C.compose(xv, D.obj(D.obj(xv)), D.obj(xvs), D.mor(xvs, D.obj(xv), pvs), D.theta(xv));
  return lhs == pv;
}

}  // namespace

bool forms_valid(const Ambient& amb, const Shape& shape, const Key& x, int base, const ShapeInvolution& inv) {
  for (int v = 0; v < shape.nv; ++v) {
    int xv = static_cast<int>(x[v]);
    int pxs = amb.D->obj(static_cast<int>(x[inv.vstar[v]]));
    if (!amb.C->is_iso(xv, pxs, x[shape.nv + base + v])) return false;
    if (!symmetric_at(amb, shape, base, inv, x, v)) return false;
  }
  for (int s = 0; s < static_cast<int>(inv.sstar.size()); ++s)
    if (!natural_at(amb, shape, base, inv, x, s)) return false;
  return true;
}

std::vector<Key> enumerate_forms(const Ambient& amb, const Shape& shape, int base, const ShapeInvolution& inv,
                                 const Key& diagram) {
  const int nv = shape.nv;
  std::vector<Key> out;
  Key x = diagram;
  x.resize(nv + base + nv, 0);
  std::vector<bool> set(nv, false);
  // constraints become decidable once both endpoints carry forms
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      out.push_back(x);
      return;
    }
    int xv = static_cast<int>(x[v]);
    int target = amb.D->obj(static_cast<int>(x[inv.vstar[v]]));
    for (Code c : amb.C->isos(xv, target)) {
      x[nv + base + v] = c;
      set[v] = true;
      bool ok = true;
      int vs = inv.vstar[v];
      if (set[vs]) ok = symmetric_at(amb, shape, base, inv, x, v) && symmetric_at(amb, shape, base, inv, x, vs);
      for (int s = 0; ok && s < static_cast<int>(inv.sstar.size()); ++s) {
        const Slot& sl = shape.slots[s];
        if ((sl.u == v || sl.w == v) && set[sl.u] && set[sl.w]) ok = natural_at(amb, shape, base, inv, x, s);
      }
      if (ok) rec(v + 1);
      set[v] = false;
    }
  };
  rec(0);
  return out;
}

}  // namespace segal

namespace segal {

Built assemble(ContextPtr ctx, const Construction& c) {
  Built b;
  b.X = std::make_shared<SGrpd>();
  b.X->N = c.N;
  b.X->semi = c.semi;
  std::weak_ptr<SGrpd> weak = b.X;
  for (int n = 0; n <= c.N; ++n) {
    Shape shape = c.shape(n);
    b.shapes.push_back(shape);
    DiagramGroupoid::Pred pred;
    if (c.valid) pred = [ctx, valid = c.valid, shape, n](const Key& x) { return valid(ctx->amb(), shape, n, x); };
    DiagramGroupoid::Cover cover = [ctx, weak, cov = c.cover, n]() {
      auto X = weak.lock();
      if (!X) throw std::logic_error("simplicial groupoid released before classification");
      return cov(n, *X);
    };
    DiagramGroupoid::Describe describe;
    if (c.describe) describe = [d = c.describe, n](const Key& x) { return d(n, x); };
    auto G = std::make_shared<DiagramGroupoid>(ctx->amb(), shape, pred, cover, describe);
    b.G.push_back(G);
    b.X->lvl.push_back(std::make_shared<Level>(G, c.name + "_" + std::to_string(n)));
  }
  b.X->face.resize(c.N + 1);
  b.X->degen.resize(c.N + 1);
  for (int n = 1; n <= c.N; ++n)
    for (int i = 0; i <= n; ++i)
      b.X->face[n].push_back(make_reindex(b.G[n], b.shapes[n - 1], c.reindex(n, face_map(n, i))));
  if (!c.semi)
    for (int n = 0; n < c.N; ++n)
      for (int i = 0; i <= n; ++i)
        b.X->degen[n].push_back(make_reindex(b.G[n], b.shapes[n + 1], c.reindex(n, degen_map(n, i))));
  return b;
}

std::shared_ptr<SGrpdMap> reindex_map(const Built& from, const Built& to, const std::function<Reindex(int)>& r) {
  auto F = std::make_shared<SGrpdMap>();
  F->src = from.X;
  F->tgt = to.X;
  for (int n = 0; n <= from.X->N; ++n) F->comp.push_back(make_reindex(from.G[n], to.shapes[n], r(n)));
  return F;
}

}  // namespace segal
