#include "ringbethe/perm.hpp"

#include <algorithm>

#include "ringbethe/errors.hpp"

namespace ringbethe {

int Perm::inverse(int v) const {
  for (int j = 0; j < size(); ++j)
    if (map[j] == v) return j;
  fail(errc::invalid_params, "value not in permutation range");
}

Perm make_perm(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images) {
    require(v >= 0 && v < n && !seen[static_cast<size_t>(v)], errc::invalid_params,
            "not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
  Perm p;
  p.map = std::move(images);
  // inversion pair (beta, alpha): beta > alpha appearing in reversed preimage order
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.map[i] > p.map[j]) p.inversions.emplace_back(p.map[i], p.map[j]);
  p.sign = (p.inversions.size() % 2 == 0) ? 1 : -1;
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  std::vector<Perm> out;
  do {
    out.push_back(make_perm(idx));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

Perm identity_perm(int n) {
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  return make_perm(std::move(idx));
}

}  // namespace ringbethe
