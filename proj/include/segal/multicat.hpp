#pragma once

#include "segal/groupoid.hpp"
#include "segal/simplicial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace segal {

using PairMap = std::map<std::pair<int, int>, std::pair<int, int>>;

// Multivalued (semi)category. Composition is the span X1 x_X0 X1 <- M -> X1;
// unit data is empty in the semi case.
struct MultiCategory {
  std::vector<std::string> X0, X1, M;
  std::vector<int> src, tgt;     // X1 -> X0
  std::vector<int> m2, m0, m1;   // M -> X1: first factor, second factor, composite
  PairMap a;                     // (p012, p023) -> (p013, p123)
  std::vector<int> e;            // X0 -> X1
  std::vector<int> il, ir;       // X1 -> M, inverse unit bijections
  bool semi() const { return e.empty(); }
};

// action span X1 x_X0 Y0 <- Y1 -> Y0
struct MultiModule {
  std::vector<std::string> Y0, Y1;
  std::vector<int> F0;            // Y0 -> X0
  std::vector<int> yx, yin, yout;  // Y1 -> X1 (F_1), Y0 (d0, acted on), Y0 (d1, result)
  PairMap alpha;                   // (p012, y02) -> (y01, y12)
  std::vector<int> iota;           // Y0 -> Y1
};

struct CoherenceReport {
  bool pass = true;
  std::vector<std::string> failures;
};
CoherenceReport validate_multicat(const MultiCategory& X);
CoherenceReport validate_multimodule(const MultiCategory& X, const MultiModule& Y);

// throws std::invalid_argument unless the (unital when possible) 2-Segal checks pass, N >= 3
MultiCategory to_multicategory(const SSet& X, int N);
std::pair<MultiCategory, MultiModule> to_multicat(const SMap& F, int N);
// coherent tuples; throws std::invalid_argument with a witness on incoherent input
SSet from_multicategory(const MultiCategory& X, int N);
SMap from_multicat(const MultiCategory& X, const MultiModule& Y, int N);

bool same_multicat(const MultiCategory& a, const MultiCategory& b, std::string* why = nullptr);
bool same_multimodule(const MultiModule& a, const MultiModule& b, std::string* why = nullptr);
// empty when F is isomorphic to from_multicat(to_multicat(F)) by the tuple-of-faces map
std::string roundtrip_nerve(const SMap& F, int N);
std::string roundtrip_nerve(const SSet& X, int N);
// empty when to_multicat(from_multicat(X, Y)) reproduces X and Y
std::string roundtrip_multicat(const MultiCategory& X, const MultiModule& Y, int N);

// ---------------------------------------------------------------------------
// pentagon and a-pentagon equations

struct PentagonDatum {
  std::vector<std::string> X2;
  std::vector<std::pair<int, int>> a;  // a[x * |X2| + y]
};
struct APentagonDatum {
  std::vector<std::string> Y1;
  std::vector<std::pair<int, int>> alpha;  // alpha[x * |Y1| + m]
};
// a(x, y) = (xy, y)
PentagonDatum group_pentagon(const Group& G);
// alpha(x, m) = (x.m, m)
APentagonDatum action_apentagon(const GroupAction& A);

struct EquationVerdict {
  bool ok = true;
  bool bijective = true;
  std::string error;    // set when not bijective
  std::string witness;  // failing triple
};
// a23 a13 a12 = a12 a23 on X2^3
EquationVerdict pentagon_check(const PentagonDatum& D);
// alpha23 alpha13 a12 = alpha12 alpha23 on X2 x X2 x Y1
EquationVerdict apentagon_check(const PentagonDatum& D, const APentagonDatum& E);

MultiCategory pentagon_multicat(const PentagonDatum& D);
MultiModule apentagon_module(const PentagonDatum& D, const APentagonDatum& E);
// throw std::invalid_argument unless the equations hold
SSet nerve_from_pentagon(const PentagonDatum& D, int N);
SMap nerve_from_apentagon(const PentagonDatum& D, const APentagonDatum& E, int N);

}  // namespace segal
