#pragma once

#include <utility>
#include <vector>

namespace ringbethe {

// A permutation of {0..n-1} (0-based internally; the formulas' sigma(j) for
// j = 1..N is map[j-1]+1). `inversions` lists the value pairs (beta, alpha)
// with beta > alpha whose preimages are out of order.
struct Perm {
  std::vector<int> map;
  int sign = 1;
  std::vector<std::pair<int, int>> inversions;

  int operator()(int j) const { return map[j]; }
  int size() const { return static_cast<int>(map.size()); }
  int inverse(int v) const;
};

Perm make_perm(std::vector<int> images);
std::vector<Perm> all_perms(int n);  // lexicographic order
Perm identity_perm(int n);

}  // namespace ringbethe
