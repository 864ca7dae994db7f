#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zcycles/colored_set.hpp"
#include "zcycles/common.hpp"

namespace zcycles {

// Partition of a colored ground set in which every non-singleton block
// contains at least n elements of every color ("colored n-equals partition").
// Blocks are element bitmasks, kept sorted by their smallest element; this is
// the canonical form, so partitions compare with ==.
struct NEqualsPartition {
  std::vector<uint32_t> blocks;

  bool operator==(const NEqualsPartition& o) const { return blocks == o.blocks; }
  bool operator!=(const NEqualsPartition& o) const { return blocks != o.blocks; }
  bool operator<(const NEqualsPartition& o) const { return blocks < o.blocks; }

  int block_count() const { return static_cast<int>(blocks.size()); }
  // mask of the block containing element id
  uint32_t block_of(int id) const;
};

// (m,n)=(1,1) and (1,2) define the same lattice; all entry points normalize
// n=1 with one color to n=2 so that edge labels and densities agree
int normalized_n(const ColoredSet& D, int n);

bool is_nequals_block(const ColoredSet& D, uint32_t mask, int n);
bool is_valid_partition(const ColoredSet& D, const NEqualsPartition& I, int n);

NEqualsPartition canonicalize(std::vector<uint32_t> blocks);

NEqualsPartition discrete_partition(const ColoredSet& D);
// the one-block partition, present iff it is n-equals (all d_i >= n, or |D| <= 1)
std::optional<NEqualsPartition> one_block_partition(const ColoredSet& D, int n);

// all colored n-equals partitions, sorted canonically; guarded by
// limits.max_ground_set
std::vector<NEqualsPartition> enumerate_partitions(const ColoredSet& D, int n,
                                                   const Limits& limits = default_limits());

// I <= J in refinement order (every block of I lies inside a block of J)
bool refines(const NEqualsPartition& I, const NEqualsPartition& J);

// finest common coarsening; always n-equals again (asserted)
NEqualsPartition join(const ColoredSet& D, int n, const NEqualsPartition& I,
                      const NEqualsPartition& J);

// cd(I) = |D| - #blocks
int codim(const ColoredSet& D, const NEqualsPartition& I);
// cd of the diagonal subspace X_I inside X^D for dim_R(X) = ambient_dim
int codim_in(const ColoredSet& D, const NEqualsPartition& I, int ambient_dim);

// transversality: cd(I) + cd(J) == cd(I v J)
bool transverse(const ColoredSet& D, int n, const NEqualsPartition& I,
                const NEqualsPartition& J);

// upper covers of I in the refinement order.  Every cover merges one group of
// blocks: two non-singletons, a non-singleton plus one singleton, or exactly
// n singletons of every color into a new block.
std::vector<NEqualsPartition> covers_of(const ColoredSet& D, int n,
                                        const NEqualsPartition& I);

NEqualsPartition apply(const ColoredSet& D, const SymmetryGroupElement& g,
                       const NEqualsPartition& I);
// 1-based color-1 style: blocks permuted by g; sign of that permutation
int block_permutation_sign(const ColoredSet& D, const SymmetryGroupElement& g,
                           const NEqualsPartition& I);

std::vector<NEqualsPartition> orbit(const ColoredSet& D, const NEqualsPartition& I,
                                    const Limits& limits = default_limits());
long stabilizer_order(const ColoredSet& D, const NEqualsPartition& I,
                      const Limits& limits = default_limits());

std::string describe(const ColoredSet& D, const NEqualsPartition& I);

}  // namespace zcycles
