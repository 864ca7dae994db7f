#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zcycles/common.hpp"
#include "zcycles/partition.hpp"

namespace zcycles {

// Finite bounded poset on ids 0..size-1 with explicit order relation and
// Hasse diagram.  topo is a linear extension; simplices of the order complex
// keep their vertices sorted by topo position, so poset automorphisms act on
// chains without orientation signs.
struct BoundedPoset {
  int size = 0;
  int bottom = -1;
  int top = -1;
  std::vector<std::vector<bool>> leq;       // leq[a][b] <=> a <= b
  std::vector<std::vector<int>> covers_up;  // Hasse edges a -> b, b covers a
  std::vector<int> topo;                    // linear extension
  std::vector<int> topo_pos;                // inverse of topo

  bool less(int a, int b) const { return a != b && leq[a][b]; }
};

// generic constructor: order computed pairwise from a predicate
BoundedPoset poset_from_leq(int size, const std::function<bool(int, int)>& leq_fn,
                            const Limits& limits = default_limits());

// Colored n-equals partition lattice with ids attached to the generic poset.
struct PartitionLattice {
  ColoredSet D;
  int n;  // normalized
  std::vector<NEqualsPartition> elements;  // canonical enumeration order, index = id
  BoundedPoset poset;

  int id_of(const NEqualsPartition& I) const;
  bool has_one_block_top() const;  // top element is the single-block partition
};

// builds the full lattice Pi^D_n; pairwise refinement checks + transitive
// reduction.  Guarded by limits (enumeration size, poset matrix size).
PartitionLattice build_lattice(const ColoredSet& D, int n,
                               const Limits& limits = default_limits());
// same thing from a pre-enumerated element list
BoundedPoset from_partitions(const std::vector<NEqualsPartition>& elements,
                             const Limits& limits = default_limits());

// induced subposet with a translation table back to the parent ids
struct InducedPoset {
  BoundedPoset poset;
  std::vector<int> orig;  // sub id -> parent id
};

InducedPoset interval(const BoundedPoset& P, int a, int b);
InducedPoset down_set(const BoundedPoset& P, int x);

// Pi^D_n(<= J) factors as a product of the lattices of J's blocks (all blocks,
// singletons included).  Returns one lattice per block, in block order.
std::vector<PartitionLattice> product_decomposition(const ColoredSet& D, int n,
                                                    const NEqualsPartition& J,
                                                    const Limits& limits = default_limits());

// order complex of the proper part P minus {bottom, top}; simplices[k] lists
// (k+1)-element chains as vectors of P-ids sorted along the order
struct OrderComplex {
  std::vector<std::vector<std::vector<int>>> simplices;  // by dimension
  std::size_t total() const;
};

OrderComplex order_complex(const BoundedPoset& P, const Limits& limits = default_limits());

// maximal chains bottom..top (each includes both bounds)
std::vector<std::vector<int>> maximal_chains(const BoundedPoset& P);
// maximal chains of the interval [a,b]
std::vector<std::vector<int>> maximal_chains(const BoundedPoset& P, int a, int b);

std::string hasse_dot(const PartitionLattice& L);

}  // namespace zcycles
