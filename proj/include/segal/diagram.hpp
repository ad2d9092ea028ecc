#pragma once

#include "segal/groupoid.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace segal {

using Code = std::int64_t;

// Finite category with integer objects 0..object_count()-1 and integer morphism codes.
class BaseCategory {
 public:
  virtual ~BaseCategory() = default;
  virtual int object_count() const = 0;
  virtual std::vector<Code> homs(int a, int b) const = 0;
  virtual Code identity(int a) const = 0;
  // g o f for f : a -> b, g : b -> c
  virtual Code compose(int a, int b, int c, Code g, Code f) const = 0;
  virtual bool valid(int a, int b, Code f) const;
  virtual std::string object_name(int a) const { return std::to_string(a); }
  virtual std::string show(int a, int b, Code f) const;
  // invariant of a morphism under composition with isomorphisms on both sides
  virtual Code mor_invariant(int, int, Code) const { return 0; }
  virtual bool is_iso(int a, int b, Code f) const;
  virtual Code inverse(int a, int b, Code f) const;

  const std::vector<Code>& isos(int a, int b) const;
  int iso_class(int a) const;

 protected:
  // uncached; default searches homs(a, b) x homs(b, a)
  virtual std::vector<Code> find_isos(int a, int b) const;

 private:
  struct Cache {
    Cache() = default;
    Cache(const Cache&) {}
    Cache& operator=(const Cache&) {
      std::lock_guard<std::mutex> lk(mu);
      isos.clear();
      inv.clear();
      return *this;
    }
    std::mutex mu;
    std::map<std::pair<int, int>, std::vector<Code>> isos;
    std::map<std::tuple<int, int, Code>, Code> inv;
  };
  mutable Cache cache_;
};

// contravariant involution (P, Theta)
struct Duality {
  const BaseCategory* C = nullptr;
  std::function<int(int)> obj;
  std::function<Code(int, int, Code)> mor;  // f : a -> b  gives  P(f) : P(b) -> P(a)
  std::function<Code(int)> theta;           // a -> P(P(a))
};
std::string validate_duality(const Duality& D);

// endofunctor T with lambda : P -> T P T
struct Twist {
  std::function<int(int)> obj;
  std::function<Code(int, int, Code)> mor;
  std::function<Code(int)> lambda;  // P(a) -> T P T(a)
};
Twist identity_twist(const Duality& D);
std::string validate_twist(const Duality& D, const Twist& W);

// Words in P and T, applied right to left ("TP" is T o P).
struct Ambient {
  const BaseCategory* C = nullptr;
  const Duality* D = nullptr;
  const Twist* W = nullptr;

  static bool covariant(const std::string& w);
  int obj(const std::string& w, int a) const;
  // image of f : a -> b under the word (direction reversed when contravariant)
  Code mor(const std::string& w, int a, int b, Code f) const;
};

struct Slot {
  int u = 0;
  std::string A;
  int w = 0;
  std::string B;  // morphism A(x_u) -> B(x_w)
};

struct Shape {
  int nv = 0;
  std::vector<Slot> slots;
  std::vector<bool> fixed;  // vertices pinned to identity isomorphisms
};

// Groupoid of diagrams: key = [vertex objects..., slot codes...],
// morphisms = families of vertex isomorphisms g_v acting on slots by
// m -> B*(g_w) m A*(g_u)^-1.
class DiagramGroupoid : public Groupoid {
 public:
  using Pred = std::function<bool(const Key&)>;
  using Cover = std::function<std::vector<Key>()>;
  using Describe = std::function<std::string(const Key&)>;

  DiagramGroupoid(Ambient amb, Shape shape, Pred valid, Cover cover, Describe describe = {});

  const Ambient& ambient() const { return amb_; }
  const Shape& shape() const { return shape_; }
  int vertex(const Key& x, int v) const { return static_cast<int>(x[v]); }
  Code slot(const Key& x, int s) const { return x[shape_.nv + s]; }
  int slot_src(const Key& x, int s) const;
  int slot_tgt(const Key& x, int s) const;

  std::vector<Key> cover() const override { return cover_(); }
  bool is_object(const Key& x) const override;
  Mor identity(const Key& x) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor inverse(const Mor& f) const override;
  void homs(const Key& x, const Key& y, bool all, std::vector<Mor>& out) const override;
  Key invariant(const Key& x) const override;
  std::string describe(const Key& x) const override;

  // image of slot s of x under the vertex isomorphisms g (codes, x -> y)
  Code transport(const Key& x, const Key& y, const Key& g, int s) const;

 private:
  bool slot_well_typed(const Key& x, int s) const;

  Ambient amb_;
  Shape shape_;
  Pred valid_;
  Cover cover_;
  Describe describe_;
  std::vector<int> order_;
  std::vector<std::vector<int>> checks_;  // slots decided once order_[p] is assigned
};

// Functor between diagram groupoids given by a vertex map and slot expressions.
struct SlotExpr {
  // composite of old slots, each with a covariant word applied; identity when empty
  std::vector<std::pair<int, std::string>> steps;
};
struct Reindex {
  std::vector<int> vmap;  // new vertex -> old vertex
  std::vector<SlotExpr> slots;
};
Functor make_reindex(std::shared_ptr<const DiagramGroupoid> from, const Shape& to, Reindex r);

// monotone maps
std::vector<int> face_map(int m, int i);   // [m-1] -> [m] skipping i
std::vector<int> degen_map(int m, int i);  // [m+1] -> [m] hitting i twice
std::vector<int> edge_face_map(int n, int i);   // [2n-1] -> [2n+1], skipping i and i'
std::vector<int> edge_degen_map(int n, int i);  // [2n+3] -> [2n+1], doubling i and i'
std::vector<int> identity_map(int n);
// phi : [m] -> [n] doubled to [2m+1] -> [2n+1], k' = 2n+1-k
std::vector<int> double_map(int n, const std::vector<int>& phi);

// chains x_0 -> ... -> x_n : slot k is x_k -> x_{k+1}
Shape chain_shape(int n);
Reindex chain_reindex(int n, const std::vector<int>& phi);  // phi : [m] -> [n]

// Ar_n grids: vertices (i,j) with i <= j, horizontal (i,j)->(i,j+1), vertical (i,j)->(i+1,j)
struct Grid {
  int n = 0;
  int vertex(int i, int j) const;
  int vertices() const { return (n + 1) * (n + 2) / 2; }
  int hslot(int i, int j) const;  // i <= j < n
  int vslot(int i, int j) const;  // i < j
  int slots() const { return n * (n + 1); }
};
Shape grid_shape(int n);
Reindex grid_reindex(int n, const std::vector<int>& phi);  // phi : [m] -> [n]

// involution on a shape used by forms psi_v : x_v -> P(x_{v*})
struct ShapeInvolution {
  std::vector<int> vstar;
  std::vector<int> sstar;  // slot u->w  goes to slot w*->u*
};
ShapeInvolution chain_involution(int n);  // on chain [n], k* = n - k
ShapeInvolution grid_involution(int n);   // on Ar_n, (p,q)* = (n-q, n-p)
// appends form slots; they occupy positions base..base+nv-1 where base is the slot count before
void add_form_slots(Shape& shape, const ShapeInvolution& inv);
// symmetry at every vertex, naturality along slots 0..sstar.size()-1
bool forms_valid(const Ambient& amb, const Shape& shape, const Key& x, int base, const ShapeInvolution& inv);
// all form families completing a key that holds vertices and the first base slots
// form slot of each new vertex v taken from old form slot old_base + r.vmap[v]
void add_form_steps(Reindex& r, int old_base);
std::vector<Key> enumerate_forms(const Ambient& amb, const Shape& shape, int base, const ShapeInvolution& inv,
                                 const Key& diagram);

// category with optional duality and twist, shared by the diagram levels built on it
struct Context {
  std::shared_ptr<const BaseCategory> C;
  Duality D;
  Twist W;
  Ambient amb() const { return {C.get(), &D, &W}; }
};
using ContextPtr = std::shared_ptr<const Context>;

// simplicial groupoid whose levels are diagram groupoids and whose faces and
// degeneracies are reindexings along monotone maps
struct Construction {
  std::string name;
  int N = 1;
  bool semi = false;
  std::function<Shape(int)> shape;
  std::function<bool(const Ambient&, const Shape&, int, const Key&)> valid;  // optional
  std::function<std::vector<Key>(int, const SGrpd&)> cover;                  // may use levels below
  std::function<Reindex(int, const std::vector<int>&)> reindex;              // level n along phi : [m] -> [n]
  std::function<std::string(int, const Key&)> describe;                      // optional
};

struct Built {
  std::shared_ptr<SGrpd> X;
  std::vector<std::shared_ptr<const DiagramGroupoid>> G;
  std::vector<Shape> shapes;
};
Built assemble(ContextPtr ctx, const Construction& c);
std::shared_ptr<SGrpdMap> reindex_map(const Built& from, const Built& to, const std::function<Reindex(int)>& r);

}  // namespace segal
