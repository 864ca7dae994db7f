#pragma once

#include <map>
#include <vector>

#include "zcycles/common.hpp"
#include "zcycles/homology.hpp"
#include "zcycles/poset.hpp"
#include "zcycles/shelling.hpp"

namespace zcycles {

// The no-(n,..,n)-equal-points arrangement in (R^N)^D: subspaces X_I for the
// nontrivial colored n-equals partitions I
struct ArrangementSpec {
  ColoredSet D;
  int n = 2;
  int ambient_dim = 2;  // N >= 2

  ArrangementSpec(ColoredSet d, int n_, int N);
};

// H^i of the complement, one summand H~_{N cd(I) - i - 2}(Delta(Pi(<=I)))
// per lattice element I; ranks from falling chains (fast) or the matrix
// oracle (use_oracle)
GradedDims ordered_cohomology_dims(const ArrangementSpec& spec, bool use_oracle = false,
                                   const Limits& limits = default_limits());

// sgn(permutation induced on the blocks of I)^N; pre: g fixes I
int block_permutation_character(const ColoredSet& D, const SymmetryGroupElement& g,
                                const NEqualsPartition& I, int ambient_dim);

// Character of g on the orientation module coor(X_I): the ambient top class
// contributes sgn_D(g)^N and the blockwise top class of X_I contributes
// block_permutation_character.  The ambient factor is required to reproduce
// the odd-N Betti numbers; see the regression tests.
int orientation_character(const ColoredSet& D, const SymmetryGroupElement& g,
                          const NEqualsPartition& I, int ambient_dim);

// dimensions of the S_D-invariant part of H^i, by Burnside averaging of
// traces on the summand homologies times orientation characters
GradedDims invariant_dims(const ArrangementSpec& spec,
                          const Limits& limits = default_limits());

}  // namespace zcycles
