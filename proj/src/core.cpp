#include "ringbethe/core.hpp"

#include <algorithm>
#include <cmath>

namespace ringbethe {

ModelParams::ModelParams(int n_, int ring_, double p_) : n(n_), ring(ring_), p(p_) {
  require(n >= 1, errc::invalid_params, "particle count must be >= 1");
  require(ring >= n, errc::invalid_params, "ring length must be >= particle count");
  require(p > 0.0 && p <= 1.0, errc::invalid_params, "right-jump rate p must lie in (0, 1]");
  q = 1.0 - p;
  tau = q / p;
}

ZrpParams::ZrpParams(int n_, int ring_, double q_, std::vector<double> b_)
    : n(n_), ring(ring_), q(q_), b(std::move(b_)) {
  require(n >= 1, errc::invalid_params, "particle count must be >= 1");
  require(ring >= 1, errc::invalid_params, "ring length must be >= 1");
  require(q > 0.0 && q < 1.0, errc::invalid_params, "deformation q must lie in (0, 1)");
  if (b.empty()) b.assign(static_cast<size_t>(ring), 1.0);
  require(static_cast<int>(b.size()) == ring, errc::invalid_params,
          "site rate vector must have length L");
  for (double v : b)
    require(v > 0.0, errc::invalid_params, "site rates must be positive");
}

double ZrpParams::b_at(long site) const { return b[static_cast<size_t>(ring_class(site, ring) - 1)]; }

bool ZrpParams::uniform_unit_b() const {
  return std::all_of(b.begin(), b.end(), [](double v) { return v == 1.0; });
}

double ZrpParams::max_b() const { return *std::max_element(b.begin(), b.end()); }

bool is_asep_config(const std::vector<long>& x, int n, int ring) {
  if (static_cast<int>(x.size()) != n) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (!(x[i] < x[i + 1])) return false;
  return x[n - 1] < x[0] + ring;
}

bool is_zrp_config(const std::vector<long>& x, int n, int ring) {
  if (static_cast<int>(x.size()) != n) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (!(x[i] >= x[i + 1])) return false;
  return x[0] <= x[n - 1] + ring;
}

AsepConfig make_asep_config(std::vector<long> x, const ModelParams& mp) {
  require(is_asep_config(x, mp.n, mp.ring), errc::invalid_params,
          "not an ASEP ring configuration (need x_1 < ... < x_N < x_1 + L)");
  return AsepConfig{std::move(x)};
}

ZrpConfig make_zrp_config(std::vector<long> x, const ZrpParams& zp) {
  require(is_zrp_config(x, zp.n, zp.ring), errc::invalid_params,
          "not a q-TAZRP ring configuration (need x_N + L >= x_1 >= ... >= x_N)");
  return ZrpConfig{std::move(x)};
}

AsepConfig cyclic_translate(const AsepConfig& c, const ModelParams& mp) {
  std::vector<long> z(c.x.begin() + 1, c.x.end());
  z.push_back(c.x[0] + mp.ring);
  return AsepConfig{std::move(z)};
}

ZrpConfig cyclic_translate(const ZrpConfig& c, const ZrpParams& zp) {
  std::vector<long> z(c.x.begin() + 1, c.x.end());
  z.push_back(c.x[0] - zp.ring);
  return ZrpConfig{std::move(z)};
}

std::vector<AsepConfig> enumerate_ring_states(const ModelParams& mp, long base) {
  // strictly increasing n-subsets of [base, base+L)
  std::vector<AsepConfig> out;
  std::vector<long> cur(static_cast<size_t>(mp.n));
  auto rec = [&](auto&& self, int idx, long lo) -> void {
    if (idx == mp.n) {
      out.push_back(AsepConfig{cur});
      return;
    }
    for (long v = lo; v < base + mp.ring; ++v) {
      cur[static_cast<size_t>(idx)] = v;
      self(self, idx + 1, v + 1);
    }
  };
  rec(rec, 0, base);
  return out;
}

std::vector<ZrpConfig> enumerate_ring_states(const ZrpParams& zp, long base) {
  // weakly decreasing n-multisets of [base, base+L)
  std::vector<ZrpConfig> out;
  std::vector<long> cur(static_cast<size_t>(zp.n));
  auto rec = [&](auto&& self, int idx, long hi) -> void {
    if (idx == zp.n) {
      out.push_back(ZrpConfig{cur});
      return;
    }
    for (long v = hi; v >= base; --v) {
      cur[static_cast<size_t>(idx)] = v;
      self(self, idx + 1, v);
    }
  };
  rec(rec, 0, base + zp.ring - 1);
  return out;
}

namespace {

template <typename C, typename F>
C prime_prod_impl(const F& f, long m, long n) {
  if (n >= m) {
    C acc(1);
    for (long k = m; k <= n; ++k) acc *= f(k);
    return acc;
  }
  if (n == m - 1) return C(1);
  C acc(1);
  for (long k = n + 1; k <= m - 1; ++k) {
    C v = f(k);
    require(std::abs(v) > 0.0, errc::pole, "prime_prod: inverted factor vanishes");
    acc /= v;
  }
  return acc;
}

}  // namespace

cplx prime_prod(const std::function<cplx(long)>& f, long m, long n) {
  return prime_prod_impl<cplx>(f, m, n);
}

cplxl prime_prod_l(const std::function<cplxl(long)>& f, long m, long n) {
  return prime_prod_impl<cplxl>(f, m, n);
}

}  // namespace ringbethe
