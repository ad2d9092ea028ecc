#pragma once

#include "segal/diagram.hpp"
#include "segal/simplicial.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace segal {

// Explicit finite category; morphism codes are indices into mor.
class FinCategory : public BaseCategory {
 public:
  struct Arrow {
    std::string id;
    int src = 0, tgt = 0;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> mor;
  std::map<std::pair<int, int>, int> comp;  // (g, f) -> g o f
  std::vector<int> ident;

  int object_count() const override { return static_cast<int>(objects.size()); }
  std::vector<Code> homs(int a, int b) const override;
  Code identity(int a) const override { return ident.at(a); }
  Code compose(int a, int b, int c, Code g, Code f) const override;
  bool valid(int a, int b, Code f) const override;
  std::string object_name(int a) const override { return objects.at(a); }
  std::string show(int a, int b, Code f) const override;

  int find_object(const std::string& id) const;
  int find_morphism(const std::string& id) const;
  int compose_ids(int g, int f) const;  // -1 when not composable
};

// empty string when the axioms hold
std::string validate_category(const FinCategory& C);
FinCategory poset_category(int n);            // [n]
FinCategory group_category(const Group& G);   // one object
FinCategory arrow_category(const FinCategory& C);
FinCategory opposite(const FinCategory& C);

struct CatFunctor {
  FinCategory src, tgt;
  std::vector<int> obj, mor;
};
std::string validate_cat_functor(const CatFunctor& F);

// level n: composable chains f_1..f_n, ids joined by '|'
SSet nerve(const FinCategory& C, int N);
SMap nerve_map(const CatFunctor& F, int N);
// throws std::invalid_argument when X is not 1-Segal in low degrees
FinCategory nerve_to_category(const SSet& X);
// X_n -> nerve level n by spine edges
SMap spine_comparison(const SSet& X, const FinCategory& C);
bool is_isomorphism(const SMap& F);
// same objects and morphisms by id, same composition
bool same_category(const FinCategory& a, const FinCategory& b, std::string* why = nullptr);

struct Presheaf {
  FinCategory base;
  std::vector<std::vector<std::string>> values;  // per object
  std::vector<std::vector<int>> restrict;        // per morphism c1 -> c2 : values[c2] -> values[c1]
};
std::string validate_presheaf(const Presheaf& F);
CatFunctor grothendieck(const Presheaf& F);

struct FibrationVerdict {
  bool ok = true;
  std::string witness;
};
FibrationVerdict is_discrete_right_fibration(const CatFunctor& F);
// target projection Ar(C) -> C
CatFunctor target_projection(const FinCategory& C);

// Context helpers for explicit categories
ContextPtr plain_context(std::shared_ptr<const BaseCategory> C);

// categorified nerve: level n = chains x_0 -> ... -> x_n up to componentwise isomorphism
Built categorified_nerve(ContextPtr ctx, int N);

// groupoid of symmetric forms (N, psi : N -> P N)
std::shared_ptr<DiagramGroupoid> hermitian_diagrams(ContextPtr ctx);
FinGroupoid hermitian_groupoid(ContextPtr ctx);

struct RelativeBuilt {
  Built Y, X;
  std::shared_ptr<SGrpdMap> F;
};

// U_n : chains on [2n+1] with forms, over the categorified nerve
RelativeBuilt unoriented_nerve(ContextPtr ctx, int N);
// NC^T_n : chains x_0 -> ... -> x_n -> T(x_0)
Built twisted_cyclic_nerve(ContextPtr ctx, int N);
RelativeBuilt unoriented_twisted_cyclic_nerve(ContextPtr ctx, int N);

// action groupoids G \\ E^{n+1} with the inclusion of H
struct HeckeWaldhausen {
  std::shared_ptr<SGrpd> H, G;
  std::shared_ptr<SGrpdMap> F;
};
SGrpd action_sgrpd(const GroupAction& A, int N);
// throws std::invalid_argument when H is not a subgroup
HeckeWaldhausen hecke_waldhausen(const GroupAction& A, const std::vector<int>& H, int N);

// connected components levelwise
SSet pi0_sset(const SGrpd& X);
SMap pi0_map(const SGrpdMap& F);

}  // namespace segal
