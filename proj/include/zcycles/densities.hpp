#pragma once

#include <vector>

#include "zcycles/common.hpp"
#include "zcycles/series.hpp"

namespace zcycles {

// Parameters for spaces of 0-cycles Z^{d}_n(X): m colors, multiplicity n,
// X a connected manifold of real dimension dim (even: dim = 2r).
// (m,n) = (1,1) is normalized to (1,2).
struct DensityParams {
  ManifoldData X;
  int m = 1;
  int n = 2;

  int mn() const { return m * n; }
  bool even_dim() const { return X.dim % 2 == 0; }
  int r() const;               // dim = 2r (even case only)
  int g() const;               // g = 2r(mn-1) - 1
  int weight_shift() const;    // r(mn-1), the Hodge weight shift of the kernel factor
};

DensityParams make_density_params(const ManifoldData& X, int m, int n);

// E2 page of the Leray spectral sequence for Z^{d}_n(X), X of even dimension:
// nonzero rows at q = j*g for j <= min_i floor(d_i/n),
//   E2^{*,jg} = Sym^j_gr H^*(X)[g] (x) (x)_i Sym^{d_i - nj}_gr H^*(X),
// zeroed outside p+q <= 2r|d| (the support bound; automatic but enforced)
BiGradedDims e2_dims(const DensityParams& P, const std::vector<int>& d);

// total-degree Poincare series of the E2 page (= of Z by degeneration)
Series1 poincare_Z_finite(const DensityParams& P, const std::vector<int>& d, int t_trunc);
// odd-dimensional X route: Z ~ product of symmetric products
Series1 poincare_via_sym(const DensityParams& P, const std::vector<int>& d, int t_trunc);

// stable limits:
//   limiting_poincare = prod_{i>=0} (1-(-t)^{i+g})^{-(-1)^{i+g} b_i}
//                     * ( prod_{i>=1} (1-(-t)^i)^{-(-1)^i b_i} )^m
//   limiting_density  = the first product alone
Series1 limiting_poincare(const DensityParams& P, int t_trunc);
Series1 limiting_density(const DensityParams& P, int t_trunc);

// finite-d density: P_{Z^{d}} / prod_i P_{Sym^{d_i} X}
Series1 density_finite(const DensityParams& P, const std::vector<int>& d, int t_trunc);

// Euler characteristic of Z^{d}_n(X) via the Hopf alternating sum over e2_dims
long euler_char_z(const DensityParams& P, const std::vector<int>& d);
// generating function sum_{d} chi(Z^{d}_n(X)) x^{|d|} = (1-x^{mn})^chi (1-x)^{-m chi}
Series1 euler_gf(const DensityParams& P, int x_trunc);
// ratio against sum_d chi(Sym^d) x^{|d|}: (1-x^{mn})^chi
Series1 euler_ratio(const DensityParams& P, int x_trunc);
// the Hopf sums assembled into a single-variable series, for comparison
Series1 euler_gf_from_e2(const DensityParams& P, int x_trunc);

// Hodge-Deligne polynomial of the E2 page of Z^{d}_n(X); the kernel factor
// carries the (r(mn-1), r(mn-1)) weight shift
Series2 hd_Z_finite(const DensityParams& P, const std::vector<int>& d, int tu, int tv);
// finite-d HD density: hd_Z_finite / prod_i HD(Sym^{d_i} X)
Series2 hd_density_finite(const DensityParams& P, const std::vector<int>& d, int tu, int tv);
// limiting HD density:
//   prod_{p,q} prod_i (1-(-1)^{i+g} u^{p+s} v^{q+s})^{-(-1)^{i+g} h^{p,q,i}},  s = r(mn-1)
Series2 hd_limit(const DensityParams& P, int tu, int tv);

struct CoincidenceEntry {
  int m = 0, n = 0;
  Series1 density{0};
};

struct FinitePairSpec {
  int m1, n1;
  std::vector<int> d1;
  int m2, n2;
  std::vector<int> d2;
};

struct FinitePairResult {
  FinitePairSpec spec;
  int agree_through = -1;  // orders 0..agree_through match; trunc if all match
};

struct CoincidenceReport {
  int N_product = 0;
  std::vector<CoincidenceEntry> factorizations;
  bool all_equal = false;
  std::vector<FinitePairResult> finite_pairs;
};

// limiting densities across every factorization m*n = N_product, with exact
// equality across them, plus finite-d agreement orders for requested pairs
CoincidenceReport coincidence_report(const ManifoldData& X, int N_product, int t_trunc,
                                     const std::vector<FinitePairSpec>& pairs = {});

}  // namespace zcycles
