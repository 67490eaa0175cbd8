#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ringbethe/errors.hpp"

namespace ringbethe {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

// ASEP on a ring of length `ring` with `n` particles. Right-jump rate p,
// left-jump rate q = 1-p. p = 1 is allowed (TASEP limit, tau = 0).
struct ModelParams {
  int n = 1;
  int ring = 1;
  double p = 0.5;
  double q = 0.5;
  double tau = 1.0;

  ModelParams() = default;
  ModelParams(int n_, int ring_, double p_);
};

// q-TAZRP on a ring. b[i] = (1-q) * a[i] are the single-occupancy jump rates
// of sites 1..L, extended L-periodically.
struct ZrpParams {
  int n = 1;
  int ring = 1;
  double q = 0.5;
  std::vector<double> b;  // length ring; defaults to all ones

  ZrpParams() = default;
  ZrpParams(int n_, int ring_, double q_, std::vector<double> b_ = {});

  // b at lattice site `site` (any integer), L-periodic with sites 1..L.
  double b_at(long site) const;
  bool uniform_unit_b() const;
  double max_b() const;
};

// Ring site class of an absolute coordinate: [x] in {1..L}.
inline long ring_class(long x, int ring) {
  long m = (x - 1) % ring;
  if (m < 0) m += ring;
  return m + 1;
}

// Winding-carrying configurations. ASEP: x_1 < ... < x_N < x_1 + L.
struct AsepConfig {
  std::vector<long> x;
};

// q-TAZRP: x_N + L >= x_1 >= x_2 >= ... >= x_N.
struct ZrpConfig {
  std::vector<long> x;
};

bool is_asep_config(const std::vector<long>& x, int n, int ring);
bool is_zrp_config(const std::vector<long>& x, int n, int ring);

AsepConfig make_asep_config(std::vector<long> x, const ModelParams& mp);
ZrpConfig make_zrp_config(std::vector<long> x, const ZrpParams& zp);

// Cyclic translations: (z_1,...,z_N) -> (z_2,...,z_N, z_1 +/- L).
AsepConfig cyclic_translate(const AsepConfig& c, const ModelParams& mp);
ZrpConfig cyclic_translate(const ZrpConfig& c, const ZrpParams& zp);

// All configurations whose coordinates lie in the window [base, base+L);
// one representative per ring state: C(L,N) for ASEP, multichoose(L,N) for ZRP.
std::vector<AsepConfig> enumerate_ring_states(const ModelParams& mp, long base);
std::vector<ZrpConfig> enumerate_ring_states(const ZrpParams& zp, long base);

// Extended product: forward product for n >= m, 1 for n = m-1, and the
// inverted product over k = n+1 .. m-1 when n <= m-1.
cplx prime_prod(const std::function<cplx(long)>& f, long m, long n);
cplxl prime_prod_l(const std::function<cplxl(long)>& f, long m, long n);

}  // namespace ringbethe
