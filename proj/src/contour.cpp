#include "ringbethe/contour.hpp"

#include <algorithm>
#include <cmath>

namespace ringbethe {

namespace {

bool is_pow2(int m) { return m >= 1 && (m & (m - 1)) == 0; }

}  // namespace

void validate_contour(const ContourSpec& spec) {
  require(!spec.radii.empty(), errc::invalid_params, "contour needs at least one radius");
  for (double r : spec.radii)
    require(r > 0.0, errc::invalid_params, "contour radii must be positive");
  require(spec.nodes >= 8 && is_pow2(spec.nodes), errc::invalid_params,
          "node count must be a power of two >= 8");
}

std::vector<double> jittered_radii(double base, int nvars, double jitter) {
  std::vector<double> radii(static_cast<size_t>(nvars));
  for (int i = 1; i <= nvars; ++i)
    radii[static_cast<size_t>(i - 1)] =
        base * (1.0 + jitter * static_cast<double>(nvars - 2 * i) / nvars);
  return radii;
}

ContourSpec asep_default_contour(const ModelParams& mp, int nvars) {
  ContourSpec spec;
  spec.radii = jittered_radii(mp.p * mp.p / 2.0, nvars, spec.jitter);
  spec.nodes = 64;
  return spec;
}

double asep_table_radius(const ModelParams& mp) {
  // largest r with r (1 + q r) = 0.8 p, so |p + q xi xi' - xi| >= 0.2 p
  // stays clear of every pair-factor zero on the torus
  if (mp.q == 0.0) return 0.8 * mp.p;
  const double disc = 1.0 + 3.2 * mp.q * mp.p;
  return (std::sqrt(disc) - 1.0) / (2.0 * mp.q);
}

ContourSpec asep_table_contour(const ModelParams& mp, int nvars) {
  ContourSpec spec;
  spec.jitter = 0.02;
  spec.radii = jittered_radii(asep_table_radius(mp), nvars, spec.jitter);
  spec.nodes = 64;
  return spec;
}

ContourSpec zrp_default_contour(const ZrpParams& zp, int nvars) {
  ContourSpec spec;
  spec.jitter = 0.02;
  spec.radii = jittered_radii(2.0 * zp.max_b() + zp.n + 1.0, nvars, spec.jitter);
  spec.nodes = 64;
  return spec;
}

double zrp_tail_ratio(const ZrpParams& zp, double radius) {
  const double L = zp.ring, N = zp.n, R = radius;
  return std::pow(R, 2.0 * L * N) / std::pow(R - 1.0, L * (2.0 * N - 1.0)) *
         std::pow((1.0 + zp.q) / (1.0 - zp.q), 2.0 * N * N);
}

void fft_pow2(std::vector<cplxl>& data, bool forward) {
  const size_t m = data.size();
  require(is_pow2(static_cast<int>(m)), errc::invalid_params, "fft length must be a power of two");
  // bit reversal
  for (size_t i = 1, j = 0; i < m; ++i) {
    size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  const long double sign = forward ? -1.0L : 1.0L;
  for (size_t len = 2; len <= m; len <<= 1) {
    const long double ang = sign * 2.0L * 3.14159265358979323846264338327950288L / len;
    const cplxl wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < m; i += len) {
      cplxl w(1.0L, 0.0L);
      for (size_t k = 0; k < len / 2; ++k) {
        const cplxl u = data[i + k];
        const cplxl v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<cplx> circle_nodes(double radius, int nodes) {
  std::vector<cplx> xs(static_cast<size_t>(nodes));
  for (int a = 0; a < nodes; ++a) {
    const double th = 2.0 * M_PI * a / nodes;
    xs[static_cast<size_t>(a)] = radius * cplx(std::cos(th), std::sin(th));
  }
  return xs;
}

cplx circle_integral_nd(const std::function<cplx(const std::vector<cplx>&)>& f,
                        const ContourSpec& spec) {
  validate_contour(spec);
  const int n = static_cast<int>(spec.radii.size());
  const int m = spec.nodes;
  std::vector<std::vector<cplx>> nodes(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) nodes[static_cast<size_t>(v)] = circle_nodes(spec.radii[static_cast<size_t>(v)], m);

  std::vector<int> idx(static_cast<size_t>(n), 0);
  std::vector<cplx> xi(static_cast<size_t>(n));
  cplxl acc(0.0L, 0.0L);
  while (true) {
    cplx w(1.0, 0.0);
    for (int v = 0; v < n; ++v) {
      xi[static_cast<size_t>(v)] = nodes[static_cast<size_t>(v)][static_cast<size_t>(idx[static_cast<size_t>(v)])];
      w *= xi[static_cast<size_t>(v)];
    }
    const cplx fv = f(xi);
    require(std::isfinite(fv.real()) && std::isfinite(fv.imag()), errc::evaluation,
            "integrand not finite at a quadrature node");
    acc += cplxl(fv * w);
    int v = n - 1;
    for (; v >= 0; --v) {
      if (++idx[static_cast<size_t>(v)] < m) break;
      idx[static_cast<size_t>(v)] = 0;
    }
    if (v < 0) break;
  }
  long double norm = 1.0L;
  for (int v = 0; v < n; ++v) norm /= m;
  acc *= norm;
  return cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

std::pair<cplx, double> refine_until(const std::function<cplx(const std::vector<cplx>&)>& f,
                                     ContourSpec spec, double tol_abs, int node_cap) {
  validate_contour(spec);
  cplx prev = circle_integral_nd(f, spec);
  while (spec.nodes < node_cap) {
    spec.nodes *= 2;
    const cplx cur = circle_integral_nd(f, spec);
    const double delta = std::abs(cur - prev);
    if (delta < tol_abs) return {cur, delta};
    prev = cur;
  }
  ContourSpec probe = spec;
  probe.nodes = spec.nodes;  // last evaluated at spec.nodes
  fail(errc::no_convergence, "node-doubling did not converge below tolerance at the node cap");
}

std::pair<cplx, double> lattice_sum(const std::function<cplx(const LatticePoint&)>& term, int n,
                                    int level, const TruncationSpec& trunc, int* k_used) {
  require(trunc.k_start >= 1 && trunc.k_cap >= trunc.k_start && trunc.tol_abs > 0.0,
          errc::invalid_params, "bad truncation spec");
  cplx total(0.0, 0.0);
  double shell_mag = 0.0;
  int k = trunc.k_start;
  {
    cplx block(0.0, 0.0);
    for (const auto& lp : enumerate_lattice(n, level, trunc.k_start + 1)) block += term(lp);
    total += block;
    shell_mag = std::abs(block);
  }
  if (!trunc.adaptive) {
    if (k_used) *k_used = trunc.k_start;
    return {total, shell_mag};
  }
  while (shell_mag >= trunc.tol_abs) {
    ++k;
    if (k > trunc.k_cap)
      fail(errc::no_convergence, "lattice sum did not converge before the shell cap");
    cplx shell(0.0, 0.0);
    for (const auto& lp : lattice_shell(n, level, k)) shell += term(lp);
    total += shell;
    shell_mag = std::abs(shell);
  }
  if (k_used) *k_used = k;
  return {total, shell_mag};
}

}  // namespace ringbethe
