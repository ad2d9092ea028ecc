#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace segal {

// Truncated (semi-)simplicial set with explicit tables.
// Simplices are indices into ids[n]; face[n][i][k] is the index of d_i of simplex k.
struct SSet {
  int N = 1;
  bool semi = false;
  std::vector<std::vector<std::string>> ids;
  std::vector<std::vector<std::vector<int>>> face;   // face[n], n >= 1
  std::vector<std::vector<std::vector<int>>> degen;  // degen[n], n < N

  int size(int n) const { return static_cast<int>(ids[n].size()); }
  int d(int n, int i, int k) const { return face[n][i][k]; }
  int s(int n, int i, int k) const { return degen[n][i][k]; }
  int find(int n, const std::string& id) const;
};

struct SMap {
  SSet src;
  SSet tgt;
  std::vector<std::vector<int>> comp;  // comp[n][k]
};

struct Violation {
  int n = 0, i = 0, j = 0;
  std::string simplex;
  std::string identity;
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> structural;
  std::vector<Violation> violations;
};

ValidationReport validate_simplicial(const SSet& X);
ValidationReport validate_map(const SMap& F);

// Builds an SSet from id lists and face/degeneracy rules given on ids.
class SSetBuilder {
 public:
  SSetBuilder(int N, bool semi);
  void level(int n, std::vector<std::string> ids);
  // rule(n, i, id) returns the id of d_i (resp. s_i) of the simplex
  void faces(const std::function<std::string(int, int, const std::string&)>& rule);
  void degeneracies(const std::function<std::string(int, int, const std::string&)>& rule);
  SSet build() const;

 private:
  SSet X_;
  std::vector<std::unordered_map<std::string, int>> index_;
  int lookup(int n, const std::string& id) const;
};

SSet standard_simplex(int m, int N);

// X_n -> X_S for S a sorted subset of [n]
int restrict_simplex(const SSet& X, int n, int k, const std::vector<int>& S);
std::vector<int> restrict_level(const SSet& X, int n, const std::vector<int>& S);

struct PolygonSubdivision {
  int n = 2;  // polygon P_n with vertices 0..n
  std::vector<std::pair<int, int>> diagonals;
};

bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b);
// empty string when valid
std::string check_subdivision(const PolygonSubdivision& P);
std::vector<std::vector<int>> subdivision_subset(const PolygonSubdivision& P);

// Compatible tuples of simplices, one per cell (cells are sorted subsets of [n]).
std::vector<std::vector<int>> membrane_space(const std::vector<std::vector<int>>& cells,
                                             const SSet& X);
// image of X_n in the membrane set, as tuples
std::vector<int> membrane_restriction(const SSet& X, int n, int k,
                                      const std::vector<std::vector<int>>& cells);

struct Edgewise {
  SSet Xe;
  SMap to_base;  // X^e -> X via [m] into the first half of [2m+1]
};
Edgewise edgewise_subdivision(const SSet& X, int M);

enum class Side { left, right };
SMap path_space(const SSet& X, Side side);

// levels 0..N of X
SSet truncate(const SSet& X, int N);

}  // namespace segal
