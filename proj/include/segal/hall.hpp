#pragma once

#include "segal/exact.hpp"
#include "segal/protoexact.hpp"
#include "segal/simplicial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace segal {

using Triple = std::tuple<int, int, int>;

struct AlgebraReport {
  bool pass = true;
  std::vector<std::string> failures;
  int checked = 0;
};

// ---------------------------------------------------------------------------
// set level

// f^{x''}_{x,x'} = #{p in X_2 : d2 p = x, d0 p = x', d1 p = x''}
struct SetHallTable {
  std::map<Triple, Int> f;                             // (x, x', x'')
  std::map<std::pair<int, int>, std::vector<int>> hom;  // X_{a->b}: edges with d1 = a, d0 = b
  Int at(int x, int y, int z) const;
};
// throws std::invalid_argument unless X is 2-Segal up to its truncation, or force
SetHallTable hall_constants_set(const SSet& X, bool force = false);
AlgebraReport verify_set_algebra(const SSet& X, const SetHallTable& T);

// g^{xi''}_{x,xi'} = #{q in Y_1 : F_1 q = x, d0 q = xi', d1 q = xi''}
struct SetModuleTable {
  std::map<Triple, Int> g;  // (x, xi', xi'')
  Int at(int x, int m, int n) const;
};
SetModuleTable hall_module_constants_set(const SMap& F, bool force = false);
AlgebraReport verify_set_module(const SMap& F, const SetHallTable& T, const SetModuleTable& M);

// ---------------------------------------------------------------------------
// proto-exact instances

struct HallTable {
  std::string instance;
  int bound = 0;
  std::vector<int> basis;  // object of each class
  std::vector<int> grade;
  std::vector<Int> aut;
  std::map<Triple, Int> mult;  // (U, V, W) -> F^W_{U,V}, nonzero entries
  Int at(int u, int v, int w) const;
  std::string label(int b) const { return "[" + std::to_string(grade[b]) + "]"; }
};
// admissible subobjects of W isomorphic to U with quotient isomorphic to V
HallTable hall_constants(const ProtoExact& C, int bound);
// conflation pairs (U >-> W, W ->> V) with the given objects, by direct enumeration
Int conflation_pairs(const ProtoExact& C, int U, int W, int V);
// span form: objects of the d1-fibre of S_2 over W modulo morphisms over id_W
Int span_constant(const ProtoExact& C, int U, int V, int W);

struct HallModuleTable {
  std::string instance;
  int bound = 0;
  std::vector<Key> basis;  // (N, psi) class representatives
  std::vector<int> grade;
  std::vector<Int> aut;
  std::vector<std::string> labels;
  std::map<Triple, Int> act;  // (U, M, N) -> G^N_{U,M}; U indexes the algebra basis
  Int at(int u, int m, int n) const;
  int find(const std::string& label) const;  // -1 when absent
};
// isotropic subobjects of N isomorphic to U whose reduction is isometric to M;
// throws std::runtime_error when a reduction fails for a reason other than isotropy
HallModuleTable hall_module_constants(const ProtoExact& C, ContextPtr duality, int bound);
// "w=.. d=.." over F_1 (Witt index, fixed points), "n=.. e=+|-" over F_q (Witt type)
std::string form_label(const ProtoExact& C, int n, Code psi);

struct CoalgebraTable {
  std::vector<Rat> pairing;      // (1_U, 1_U) = 1/|Aut U|
  std::map<Triple, Rat> comult;  // (W, U, V) -> coefficient of 1_U (x) 1_V in Delta 1_W
  Rat at(int w, int u, int v) const;
};
CoalgebraTable coalgebra_table(const ProtoExact& C, const HallTable& T);

AlgebraReport verify_algebra(const HallTable& T);
AlgebraReport verify_module(const HallTable& T, const HallModuleTable& M);
// (1_U (x) 1_V, Delta 1_W) = (1_U 1_V, 1_W) for all triples within the bound
AlgebraReport verify_hopf(const HallTable& T, const CoalgebraTable& D);
// left multiplication by 1_U and contraction of Delta with 1_U are adjoint under the Green form
AlgebraReport verify_adjoint(const HallTable& T, const CoalgebraTable& D);

// ---------------------------------------------------------------------------
// interpolation in q

struct Interpolation {
  bool stable = false;
  std::string note;
  std::vector<Rat> coeffs;  // ascending powers
  std::optional<Rat> at_one;
  Rat eval(const Rat& x) const;
};
// Lagrange through all samples; stable when every leave-one-out subset gives the same
// polynomial and its degree is at most max_degree
Interpolation interpolate(const std::vector<std::pair<Int, Rat>>& samples, int max_degree);

using Labelled = std::map<std::vector<std::string>, Int>;
Labelled labelled(const HallTable& T);
// entries whose N label passes keep (all when empty)
Labelled labelled(const HallTable& T, const HallModuleTable& M,
                  const std::function<bool(const std::string&)>& keep = {});

struct TableInterpolation {
  bool stable = true;
  std::map<std::vector<std::string>, Interpolation> entries;
};
// family: q -> table; missing entries count as zero
TableInterpolation q_interpolate(const std::map<int, Labelled>& family, int max_degree);

}  // namespace segal
