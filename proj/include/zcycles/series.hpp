#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zcycles/common.hpp"

namespace zcycles {

// dense truncated power series with integer coefficients
struct Series1 {
  int trunc = 0;          // coefficients kept through degree trunc
  std::vector<Int> c;     // size trunc+1

  explicit Series1(int trunc_ = 0) : trunc(trunc_), c(trunc_ + 1, Int(0)) {}
  Int& operator[](int k) { return c.at(k); }
  const Int& operator[](int k) const { return c.at(k); }
};

struct Series2 {
  int tu = 0, tv = 0;
  std::vector<Int> c;     // index u*(tv+1)+v

  Series2() : c(1, Int(0)) {}
  Series2(int tu_, int tv_) : tu(tu_), tv(tv_), c((tu_ + 1) * (tv_ + 1), Int(0)) {}
  Int& at(int u, int v) { return c.at(u * (tv + 1) + v); }
  const Int& at(int u, int v) const { return c.at(u * (tv + 1) + v); }
};

Series1 one1(int trunc);
Series1 monomial1(int trunc, int deg, const Int& coeff = 1);
Series1 add(const Series1& a, const Series1& b);
Series1 sub(const Series1& a, const Series1& b);
Series1 mul(const Series1& a, const Series1& b);
Series1 pow(const Series1& a, long e);
// inverse, requires constant coefficient +-1
Series1 reciprocal(const Series1& a);
// (1 + sign*t^deg)^e for any integer e
Series1 binomial_factor1(int trunc, int sign, int deg, long e);
bool equal_through(const Series1& a, const Series1& b, int order);
// first degree where coefficients differ, or -1 if equal through shared range
int first_difference(const Series1& a, const Series1& b);
std::string pretty(const Series1& s, const std::string& var = "t");

Series2 one2(int tu, int tv);
Series2 add(const Series2& a, const Series2& b);
Series2 sub(const Series2& a, const Series2& b);
Series2 mul(const Series2& a, const Series2& b);
Series2 reciprocal(const Series2& a);
// (1 + sign*u^du v^dv)^e
Series2 binomial_factor2(int tu, int tv, int sign, int du, int dv, long e);
bool equal_through_total(const Series2& a, const Series2& b, int total_degree);
std::string pretty(const Series2& s, const std::string& u = "u", const std::string& v = "v");

// polynomial in a tracking variable x with Series2 coefficients; index = x power
using Tracked2 = std::vector<Series2>;
Tracked2 tracked_one(int klen, int tu, int tv);
Tracked2 tracked_mul(const Tracked2& a, const Tracked2& b);
// (1 + sign*x*u^du v^dv)^e expanded in x
Tracked2 tracked_binomial(int klen, int tu, int tv, int sign, int du, int dv, long e);

// Betti numbers and optional Hodge-Deligne data of a connected manifold /
// variety; dim is the real dimension, hodge keys are (p,q,i)
struct ManifoldData {
  int dim = 0;
  std::vector<long> betti;                   // b_0, b_1, ...
  std::map<std::array<int, 3>, long> hodge;  // (p,q,i) -> h^{p,q}(H^i)
  bool has_hodge = false;

  long b(int i) const;
  long euler() const;
  void validate() const;  // b_0 = 1, betti range, hodge rows sum to betti
};

ManifoldData manifold_affine_line();    // C:  b = (1)
ManifoldData manifold_punctured_line(); // C^x: b = (1,1)
ManifoldData manifold_sphere2();        // S^2: b = (1,0,1)
ManifoldData manifold_torus2();         // T^2: b = (1,2,1)
ManifoldData manifold_euclidean(int N); // R^N

// graded symmetric powers, x-tracked:
//   sum_k P_{Sym^k V}(t) x^k = prod_{i even} (1-x t^i)^{-dim V_i}
//                            * prod_{i odd}  (1+x t^i)^{dim V_i}
// Output is a Series2 in (x, t); degrees must be >= 0.
Series2 sym_power_series(const GradedDims& V, int x_trunc, int t_trunc);
// bigraded input collapses to total degree p+q, which also governs parity
Series2 sym_power_series(const BiGradedDims& V, int x_trunc, int t_trunc);

// coefficient extraction
Series1 coefficient_of_x(const Series2& s, int k);

// Poincare series of Sym^d X; d = -1 means the stable (d -> infinity) series,
// read at row x^{trunc+1} where all coefficients have stabilized
Series1 sym_product_poincare(const ManifoldData& X, int d, int t_trunc);
// Hodge-Deligne polynomial of Sym^d X in (u,v); d = -1 stable
Series2 sym_product_hd(const ManifoldData& X, int d, int tu, int tv);

}  // namespace zcycles
