#include "ringbethe/lattice.hpp"

#include <algorithm>

#include "ringbethe/errors.hpp"

namespace ringbethe {

LatticePoint make_lattice_point(std::vector<int> ell) {
  require(!ell.empty(), errc::invalid_params, "lattice point must have dimension >= 1");
  LatticePoint lp;
  lp.ell = std::move(ell);
  lp.level = 0;
  lp.max_ell = lp.ell[0];
  lp.min_ell = lp.ell[0];
  for (int v : lp.ell) {
    lp.level += v;
    lp.max_ell = std::max(lp.max_ell, v);
    lp.min_ell = std::min(lp.min_ell, v);
  }
  const int n = static_cast<int>(lp.ell.size());
  for (int j = 0; j < n; ++j) {
    if (lp.ell[static_cast<size_t>(j)] == lp.min_ell) lp.m_index = j;  // last argmin
  }
  for (int j = n - 1; j >= 0; --j) {
    if (lp.ell[static_cast<size_t>(j)] == lp.max_ell) lp.M_index = j;  // first argmax
  }
  return lp;
}

std::vector<LatticePoint> enumerate_lattice(int n, int level, int max_bound) {
  std::vector<LatticePoint> out;
  // Each component lies in [level - (n-1)(max_bound-1), max_bound-1].
  const int hi = max_bound - 1;
  const long lo_l = static_cast<long>(level) - static_cast<long>(n - 1) * hi;
  if (lo_l > hi) return out;
  const int lo = static_cast<int>(lo_l);
  std::vector<int> cur(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int idx, int partial) -> void {
    if (idx == n - 1) {
      const int last = level - partial;
      if (last >= lo && last <= hi) {
        cur[static_cast<size_t>(idx)] = last;
        out.push_back(make_lattice_point(cur));
      }
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      // remaining components are bounded by hi each
      const long rest = static_cast<long>(level) - partial - v;
      const int left = n - 1 - idx;
      if (rest > static_cast<long>(left) * hi || rest < static_cast<long>(left) * lo) continue;
      cur[static_cast<size_t>(idx)] = v;
      self(self, idx + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.ell < b.ell; });
  return out;
}

std::vector<LatticePoint> lattice_shell(int n, int level, int k) {
  std::vector<LatticePoint> all = enumerate_lattice(n, level, k + 1);
  std::vector<LatticePoint> out;
  for (auto& lp : all)
    if (lp.max_ell == k) out.push_back(std::move(lp));
  return out;
}

}  // namespace ringbethe
