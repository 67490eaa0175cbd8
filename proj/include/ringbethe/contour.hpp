#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "ringbethe/core.hpp"
#include "ringbethe/lattice.hpp"

namespace ringbethe {

// Product-of-circles contour: per-variable radii, trapezoid nodes on each
// circle. Node counts are powers of two so refinement can reuse samples.
struct ContourSpec {
  std::vector<double> radii;
  int nodes = 64;
  double jitter = 0.05;
};

void validate_contour(const ContourSpec& spec);

// Spread `nvars` radii around `base`: r_i = base * (1 + jitter*(n-2i)/n).
std::vector<double> jittered_radii(double base, int nvars, double jitter);

// Spec default for per-term ASEP operations: r = p^2/2.
ContourSpec asep_default_contour(const ModelParams& mp, int nvars);
// Pole-clearance radius used by the windowed evaluators (see notes in
// asep.cpp): largest base r with r(1 + q r) <= 0.8 p.
double asep_table_radius(const ModelParams& mp);
ContourSpec asep_table_contour(const ModelParams& mp, int nvars);

// q-TAZRP contour: R = 2 max(b) + N + 1, outside every pole b_[i].
ContourSpec zrp_default_contour(const ZrpParams& zp, int nvars);
// Lemma-style tail-bound ratio for the one-point contour; advisory only
// (the lattice sums terminate exactly), reported when > 1.
double zrp_tail_ratio(const ZrpParams& zp, double radius);

struct TruncationSpec {
  int k_start = 1;
  int k_cap = 16;
  double tol_abs = 1e-12;
  bool adaptive = true;
};

// Result of a probability evaluation plus its numerical diagnostics.
struct ProbResult {
  double value = 0.0;
  double imag_residual = 0.0;
  double quad_err = 0.0;
  double trunc_err = 0.0;
  int nodes_used = 0;
  int k_used = 0;
  std::vector<double> radii;
};

// In-place radix-2 FFT, data.size() a power of two.
// forward: X[k] = sum_a x[a] exp(-2 pi i a k / M).
void fft_pow2(std::vector<cplxl>& data, bool forward);

// Nodes of the trapezoid rule on |xi| = r.
std::vector<cplx> circle_nodes(double radius, int nodes);

// Tensor-trapezoid approximation of prod_j (2 pi i)^{-1} oint f dxi_j.
cplx circle_integral_nd(const std::function<cplx(const std::vector<cplx>&)>& f,
                        const ContourSpec& spec);

// Doubles nodes until successive estimates differ by < tol_abs; returns the
// last estimate and the last delta. Throws no_convergence at the node cap.
std::pair<cplx, double> refine_until(const std::function<cplx(const std::vector<cplx>&)>& f,
                                     ContourSpec spec, double tol_abs, int node_cap = 4096);

// Shell-by-shell summation over Z^n(level): the first block takes
// max(ell) <= k_start, then single shells max(ell) = k; stops when a full
// shell's magnitude drops below tol_abs. Returns (sum, last shell magnitude).
std::pair<cplx, double> lattice_sum(const std::function<cplx(const LatticePoint&)>& term, int n,
                                    int level, const TruncationSpec& trunc, int* k_used = nullptr);

}  // namespace ringbethe
