#pragma once

#include <vector>

namespace ringbethe {

// Integer vector ell with sum(ell) = level, indexing winding sectors.
// m_index: position of the minimum, taken as far right as possible
// (ell_j > ell_m for m < j <= N). M_index: position of the maximum, taken
// as far left as possible (ell_i < ell_M for i < M). Both 0-based.
struct LatticePoint {
  std::vector<int> ell;
  int level = 0;
  int max_ell = 0;
  int min_ell = 0;
  int m_index = 0;
  int M_index = 0;
};

LatticePoint make_lattice_point(std::vector<int> ell);

// All points of Z^n(level) with max(ell) < max_bound.
std::vector<LatticePoint> enumerate_lattice(int n, int level, int max_bound);

// Points with max(ell) == k exactly.
std::vector<LatticePoint> lattice_shell(int n, int level, int k);

}  // namespace ringbethe
