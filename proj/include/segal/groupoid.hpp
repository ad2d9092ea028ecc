#pragma once

#include "segal/exact.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace segal {

// ---------------------------------------------------------------------------
// Explicit finite groupoids

struct FinGroupoid {
  struct Arrow {
    std::string id;
    int src = 0, tgt = 0;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> mor;
  std::map<std::pair<int, int>, int> comp;  // (g, f) -> g o f
  std::vector<int> identity;                // per object
  std::vector<int> inverse;                 // per morphism

  int compose(int g, int f) const;  // -1 when undefined
  std::vector<int> homs(int x, int y) const;
};

struct GroupoidReport {
  bool pass = true;
  std::vector<std::string> witnesses;
};

GroupoidReport validate_groupoid(const FinGroupoid& G);

struct Component {
  int rep = 0;  // object index
  int aut = 0;  // |Aut(rep)|
};
std::vector<Component> pi0_with_aut(const FinGroupoid& G);
std::vector<int> component_of(const FinGroupoid& G);  // per object, index into pi0_with_aut

struct GroupoidFunctor {
  FinGroupoid src, tgt;
  std::vector<int> obj, mor;
};

GroupoidReport validate_functor(const GroupoidFunctor& F);

struct PseudoPullback {
  FinGroupoid P;
  GroupoidFunctor toA, toB;
};
PseudoPullback pseudo_pullback(const GroupoidFunctor& F, const GroupoidFunctor& G);

struct EquivalenceCertificate {
  bool equivalence = false;
  std::vector<int> pi0_map;                       // source component -> target component
  std::vector<std::pair<int, int>> aut_orders;    // per source component
  std::vector<std::string> defects;
};
EquivalenceCertificate is_equivalence(const GroupoidFunctor& F);
GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f);
GroupoidFunctor identity_functor(const FinGroupoid& G);

struct Group {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;  // mul[g][h] = g h
  int e = 0;
  int order() const { return static_cast<int>(names.size()); }
  int inv(int g) const;
};
std::string validate_group(const Group& G);
Group cyclic_group(int n);
Group dihedral_group(int n);  // order 2n
Group quaternion_group();
Group product_group(const Group& a, const Group& b);
Group subgroup(const Group& G, const std::vector<int>& elems);  // names and table restricted

struct GroupAction {
  Group G;
  int points = 0;
  std::vector<std::vector<int>> act;  // act[g][x]
};
std::string validate_action(const GroupAction& A);
GroupAction regular_action(const Group& G);
FinGroupoid action_groupoid(const GroupAction& A, int n);

// ---------------------------------------------------------------------------
// Implicit groupoids: objects are integer keys, morphisms carry integer codes.

using Key = std::vector<std::int64_t>;

struct Mor {
  Key src, tgt, code;
};

class Groupoid {
 public:
  virtual ~Groupoid() = default;
  // finite list meeting every isomorphism class
  virtual std::vector<Key> cover() const = 0;
  virtual bool is_object(const Key& x) const = 0;
  virtual Mor identity(const Key& x) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g o f
  virtual Mor inverse(const Mor& f) const = 0;
  // isomorphisms x -> y; only the first one unless all
  virtual void homs(const Key& x, const Key& y, bool all, std::vector<Mor>& out) const = 0;
  virtual Key invariant(const Key&) const { return {}; }
  virtual std::string describe(const Key& x) const;
};

std::string key_string(const Key& k);

class Level {
 public:
  explicit Level(std::shared_ptr<const Groupoid> g, std::string name = {});
  const Groupoid& G() const { return *g_; }
  const std::string& name() const { return name_; }
  int classes() const;
  Key rep(int c) const;
  std::vector<Mor> aut(int c) const;
  // class of x and a transport rep(c) -> x
  std::pair<int, Mor> canon(const Key& x) const;
  Rat mass() const;

 private:
  void classify_locked() const;
  std::pair<int, Mor> canon_locked(const Key& x) const;

  std::shared_ptr<const Groupoid> g_;
  std::string name_;
  mutable std::mutex mu_;
  mutable bool done_ = false;
  mutable std::vector<Key> reps_;
  mutable std::vector<std::vector<Mor>> auts_;
  mutable std::map<Key, std::vector<int>> buckets_;
  mutable std::map<Key, std::pair<int, Mor>> cache_;
};

struct Functor {
  std::function<Key(const Key&)> obj;
  std::function<Key(const Mor&)> code;
  Mor operator()(const Mor& m) const { return {obj(m.src), obj(m.tgt), code(m)}; }
};
Functor compose(const Functor& g, const Functor& f);
Functor identity_functor();

struct SGrpd {
  int N = 1;
  bool semi = false;
  std::vector<std::shared_ptr<Level>> lvl;
  std::vector<std::vector<Functor>> face;   // face[n][i] : lvl[n] -> lvl[n-1]
  std::vector<std::vector<Functor>> degen;  // degen[n][i] : lvl[n] -> lvl[n+1]
  // X_n -> X_S, S sorted subset of [n]
  Functor restrict(int n, const std::vector<int>& S) const;
};

struct SGrpdMap {
  std::shared_ptr<SGrpd> src, tgt;
  std::vector<Functor> comp;
};

// Simplicial identities on class representatives and their automorphisms.
GroupoidReport validate_sgrpd(const SGrpd& X);
GroupoidReport validate_sgrpd_map(const SGrpdMap& F);

// Decides whether the strictly commuting square
//   A --fb--> B
//   |fd       |F
//   D --G---> C
// is homotopy Cartesian, i.e. A -> B x^(2)_C D is an equivalence.
struct SquareVerdict {
  bool ok = true;
  std::string witness;
};
SquareVerdict homotopy_cartesian(const Level& A, const Level& B, const Level& C, const Level& D,
                                 const Functor& fb, const Functor& fd, const Functor& F,
                                 const Functor& G);
// whether F : A -> B is an equivalence
SquareVerdict equivalence(const Level& A, const Level& B, const Functor& F);

// adaptor: explicit groupoid as implicit one (keys {object}, codes {morphism})
class ExplicitGroupoid : public Groupoid {
 public:
  explicit ExplicitGroupoid(FinGroupoid G);
  const FinGroupoid& data() const { return G_; }
  std::vector<Key> cover() const override;
  bool is_object(const Key& x) const override;
  Mor identity(const Key& x) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor inverse(const Mor& f) const override;
  void homs(const Key& x, const Key& y, bool all, std::vector<Mor>& out) const override;
  std::string describe(const Key& x) const override;

 private:
  FinGroupoid G_;
  std::map<std::pair<int, int>, std::vector<int>> hom_;
};

// explicit groupoid of all cover objects and all isomorphisms between them
FinGroupoid to_explicit(const Groupoid& G, const std::vector<Key>& objects);

}  // namespace segal
