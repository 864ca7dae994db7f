#pragma once

#include <map>
#include <vector>

#include "zcycles/common.hpp"
#include "zcycles/linalg.hpp"
#include "zcycles/poset.hpp"

namespace zcycles {

// Reduced rational homology of the order complex of the proper part of a
// bounded poset.  Conventions for tiny posets: a single element contributes
// Z in degree -2, a two element poset contributes Z in degree -1 (the empty
// simplex of the augmented complex); the degree -2 case is handled explicitly
// and never emerges from matrix arithmetic.
GradedDims reduced_homology(const BoundedPoset& P, const Limits& limits = default_limits());

struct TorsionReport {
  bool torsion_free = true;
  GradedDims dims;                       // ranks recomputed from integral SNF
  std::map<int, std::vector<Int>> divisors;  // per boundary map domain degree
};

// integral route: Smith normal form of every boundary matrix of the augmented
// complex; dims must repeat the rational answer and all divisors must be units
TorsionReport integral_torsion_check(const BoundedPoset& P,
                                     const Limits& limits = default_limits());

// columns of the boundary map C_k -> C_{k-1} of the augmented order complex
// (k = 0 maps vertices to the empty simplex)
std::vector<SparseQVec> boundary_columns(const OrderComplex& C, int k);
std::vector<SparseZVec> boundary_columns_integral(const OrderComplex& C, int k);

// tensor-factor convolution: dims of (x) over factors, degrees add
GradedDims convolve(const std::vector<GradedDims>& factors);

struct KunnethReport {
  bool ok = false;
  GradedDims down_set_dims;  // H~ of Delta(Pi(<=I) proper part)
  GradedDims product_dims;   // convolution of block factors, shifted
  int block_count = 0;
};

// checks H~_{k+2(l-1)}(Delta(Pi^D_n(<=I))) == (+) over k_1+..+k_l = k of the
// block factors, l = number of blocks of I
KunnethReport kunneth_rank_check(const ColoredSet& D, int n, const NEqualsPartition& I,
                                 const Limits& limits = default_limits());
KunnethReport kunneth_rank_check(const PartitionLattice& L, const NEqualsPartition& I,
                                 const Limits& limits = default_limits());

}  // namespace zcycles
