#pragma once

#include "segal/category.hpp"
#include "segal/diagram.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace segal {

// Finite proto-exact category on a skeleton 0..bound, graded by size.
class ProtoExact : public BaseCategory {
 public:
  struct Square {
    int U = 0, V = 0, W = 0, X = 0;
    Code i = 0, p = 0, j = 0, q = 0;  // i : U >-> V, p : U ->> W, j : W >-> X, q : V ->> X
  };
  struct Sub {
    int U = 0, Q = 0;
    Code i = 0, p = 0;  // U >-> W ->> Q
  };

  virtual std::string name() const = 0;
  // 1 for F_1, q for F_q, 0 otherwise
  virtual int field() const { return 0; }
  // |Aut(a)|; default enumerates isos(a, a)
  virtual Int aut_order(int a) const { return Int(isos(a, a).size()); }
  int bound() const { return object_count() - 1; }
  int zero() const { return 0; }
  virtual bool is_inflation(int a, int b, Code f) const = 0;
  virtual bool is_deflation(int a, int b, Code f) const = 0;
  virtual Code zero_map(int a, int b) const = 0;
  virtual Code std_inflation(int a, int b) const = 0;  // onto the first a coordinates
  virtual Code std_deflation(int b, int k) const = 0;  // b ->> b-k, killing the first k
  // completes W <<- U >-> V
  virtual Square complete_pushout(int U, int V, int W, Code i, Code p) const = 0;
  // completes W >-> X <<- V
  virtual Square complete_pullback(int V, int W, int X, Code j, Code q) const = 0;
  // admissible subobjects of W, one inflation each, with the chosen quotient
  virtual std::vector<Sub> subobjects(int W) const = 0;

  bool commutes(const Square& s) const;
  // shape, commutativity and size(U) - size(W) = size(V) - size(X)
  bool is_bicartesian(const Square& s) const;
};

std::shared_ptr<ProtoExact> vect_f1(int max_size);
// throws std::invalid_argument unless q is prime
std::shared_ptr<ProtoExact> vect_fq(int q, int max_dim);
// deflations lose one non-identity automorphism of the largest object
std::shared_ptr<ProtoExact> corrupted_deflations(std::shared_ptr<const ProtoExact> inner);

// F_1 partial bijections: entry k is the image of k or -1
std::vector<int> f1_decode(int a, int b, Code f);
Code f1_encode(int b, const std::vector<int>& v);
// F_q matrices, b rows and a columns
std::vector<std::vector<int>> fq_decode(int q, int a, int b, Code f);
Code fq_encode(int q, const std::vector<std::vector<int>>& m, int a);

struct AxiomReport {
  bool pass = true;
  std::vector<std::string> violations;  // "axiom (k): ..."
};
// axioms (i)-(v) on all diagrams with objects of size <= bound; universal properties
// are tested against all objects of size <= bound
AxiomReport validate_protoexact(const ProtoExact& C, int bound);
bool is_cartesian(const ProtoExact& C, const ProtoExact::Square& s, int bound);
bool is_cocartesian(const ProtoExact& C, const ProtoExact::Square& s, int bound);

// standard dualities: F_1 (identity on objects, inverse relation), F_q (transpose, Theta = sign)
ContextPtr f1_duality(std::shared_ptr<const ProtoExact> C);
ContextPtr fq_duality(std::shared_ptr<const ProtoExact> C, int sign);
// P(0) = 0, P exchanges inflations and deflations, biCartesian squares go to biCartesian squares
AxiomReport validate_exact_duality(const ProtoExact& C, const Duality& D, int bound);

Built waldhausen_S(std::shared_ptr<const ProtoExact> C, int N);

struct Reduction {
  bool ok = false;
  std::string error;
  int perp = 0;  // U^perp
  Code k = 0;    // U^perp >-> N
  int M = 0;
  Code pi = 0;   // U^perp ->> M
  Code psiM = 0;
};
// isotropic reduction of (N, psi) by i : U >-> N; psi_M found by exhaustive search
Reduction isotropic_reduction(const ProtoExact& C, const Duality& D, int N, Code psi, int U, Code i);

RelativeBuilt hermitian_R(std::shared_ptr<const ProtoExact> C, ContextPtr duality, int N);

struct StabilityFraming {
  std::vector<std::pair<long, long>> zeta;  // (Re, Im) per vertex
  std::vector<int> f;                       // framing dimension per vertex
};
struct StabilityReport {
  bool valid_zeta = true;
  bool semistable = false;
  bool stable_framed = false;
  std::string note;
};
// single-vertex F_q instance; s : k^f -> A as a matrix code
StabilityReport stability_report(const ProtoExact& C, const StabilityFraming& SF, int A, Code s);
RelativeBuilt stable_framed_S(std::shared_ptr<const ProtoExact> C, const StabilityFraming& SF, int N);
// level n -> S_{n+1}, forgetting the framing
std::vector<Functor> forget_framing(const RelativeBuilt& SF, const Built& S);

}  // namespace segal
