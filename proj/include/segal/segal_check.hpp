#pragma once

#include "segal/groupoid.hpp"
#include "segal/simplicial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace segal {

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);

struct CheckInstance {
  std::string label;  // e.g. "f_{0,2}" or "unit s_1"
  int n = 0, i = 0, j = 0;
  Verdict verdict = Verdict::pass;
  std::string witness;
};

struct CheckReport {
  std::string condition;
  int N = 0;
  std::string header;  // conventions in force
  std::vector<CheckInstance> instances;

  Verdict overall() const;
  bool pass() const { return overall() == Verdict::pass; }
  // smallest failing instance, empty when none
  std::string first_failure() const;
  void append(const CheckReport& other);
};

std::vector<PolygonSubdivision> enumerate_triangulations(int n);

// symmetric subdivisions of the (2n+2)-gon 0..n, n'..0'
struct SymmetricSubdivision {
  int n = 1;
  std::vector<int> horizontal;               // i with diagonal {i', i}, 0 < i < n
  std::vector<std::pair<int, int>> pairs;    // {i, j} together with {i', j'}
  // diagonals of the (2n+2)-gon with k' at position 2n+1-k
  PolygonSubdivision polygon() const;
  std::string show() const;
};
std::vector<SymmetricSubdivision> enumerate_symmetric_subdivisions(int n);
// diagonal set of a contains that of b
bool refines(const SymmetricSubdivision& a, const SymmetricSubdivision& b);
bool is_maximal(const SymmetricSubdivision& P, const std::vector<SymmetricSubdivision>& all);

// set level
CheckReport check_1segal(const SSet& X, int N);
CheckReport check_2segal(const SSet& X, int N, bool unital);
// throws std::invalid_argument when the base is not 1-Segal at N
CheckReport check_rel1segal(const SMap& F, Side side, int N);
// throws std::invalid_argument when the base is not 2-Segal at N
CheckReport check_rel2segal(const SMap& F, int N, bool unital);
// all (n, i, j) outside squares of the relative 2-Segal diagram
CheckReport check_rel2segal_outside(const SMap& F, int N);

// symmetric membranes: one simplex per cell, Y on symmetric cells, X on paired cells
struct SymmetricCells {
  std::vector<std::vector<int>> ycells;  // unprimed halves S of cells S u S'
  std::vector<std::vector<int>> xcells;  // unprimed member of each pair
};
SymmetricCells symmetric_cells(const SymmetricSubdivision& P);
std::vector<std::vector<int>> symmetric_membranes(const SMap& F, const SymmetricCells& cells);
// f_P on simplex k of Y_n
std::vector<int> symmetric_restriction(const SMap& F, int n, int k, const SymmetricCells& cells);

struct CrosscheckReport {
  CheckReport relative;      // check_rel2segal
  CheckReport subdivisions;  // f_P for every symmetric subdivision
  CheckReport maximal;       // f_P for maximal ones
  CheckReport triangulations;  // base: f_T for every triangulation
  CheckReport base;            // base: criterion (iii)
  bool agree = false;
};
CrosscheckReport crosscheck_subdivision_criteria(const SMap& F, int N);

// groupoid level
CheckReport check_1segal(const SGrpd& X, int N);
CheckReport check_2segal(const SGrpd& X, int N, bool unital);
CheckReport check_rel1segal(const SGrpdMap& F, Side side, int N);
CheckReport check_rel2segal(const SGrpdMap& F, int N, bool unital);

}  // namespace segal
