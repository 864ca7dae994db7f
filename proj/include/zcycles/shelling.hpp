#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zcycles/common.hpp"
#include "zcycles/poset.hpp"

namespace zcycles {

enum class EdgeKind { BlockCreation, SingletonAdd, BlockMerge };

// Value in the label order Lambda: barred color-1 elements, all below the
// m-tuples; bars ordered like color 1; tuples lexicographic, where the first
// coordinate lives in the order a-eps < a and a-eps > b for every b < a.
struct LambdaLabel {
  bool is_bar = false;
  int bar_index = 0;             // 1-based color-1 index when is_bar
  std::vector<int> coords;       // m coordinates, 1-based per-color indices
  bool first_minus_eps = false;  // the -eps flag on coords[0]

  bool operator==(const LambdaLabel& o) const;
  bool operator<(const LambdaLabel& o) const;
  bool operator<=(const LambdaLabel& o) const { return *this < o || *this == o; }
  std::string str() const;
};

// classification of a covering edge I < J by what the one changed block does
EdgeKind classify_edge(const ColoredSet& D, int n, const NEqualsPartition& I,
                       const NEqualsPartition& J);

// Label rules: a created block B gets (max B_1, ..., max B_m); adding a
// singleton a of color i>1 to B gets (max B_1, ..., max B_{i-1}, a, d_{i+1},
// ..., d_m) with d_j the global color maxima; adding a of color 1 gets
// (a - delta*eps, d_2, ..., d_m), delta = 1 iff a < max B_1; merging B and C
// gets the bar over max(B_1 u C_1).
LambdaLabel edge_label(const ColoredSet& D, int n, const NEqualsPartition& I,
                       const NEqualsPartition& J);

struct LabelledLattice {
  PartitionLattice lat;
  // labels are mutable data so tests can corrupt them and watch verify_el fail
  std::map<std::pair<int, int>, LambdaLabel> labels;  // Hasse edge (a,b) -> label

  const LambdaLabel& label(int a, int b) const;
  std::vector<LambdaLabel> word(const std::vector<int>& chain) const;
};

LabelledLattice build_labelled_lattice(const ColoredSet& D, int n,
                                       const Limits& limits = default_limits());

bool is_rising(const std::vector<LambdaLabel>& word);
bool is_falling(const std::vector<LambdaLabel>& word);
bool lex_less(const std::vector<LambdaLabel>& a, const std::vector<LambdaLabel>& b);

std::vector<std::vector<int>> rising_chains(const LabelledLattice& L, int a, int b);
std::vector<std::vector<int>> falling_chains(const LabelledLattice& L, int a, int b);

struct ELCounterexample {
  int a = -1, b = -1;
  long rising_count = 0;
  bool lex_first = false;
  std::string detail;
};

struct ELVerifyResult {
  bool pass = false;
  long intervals_checked = 0;
  std::optional<ELCounterexample> counterexample;
};

// the definition, checked literally: every interval has exactly one rising
// maximal chain and that chain is lexicographically strictly first
ELVerifyResult verify_el(const LabelledLattice& L);

// H~_r gets one generator per falling chain of length r+2 (Bjorner-Wachs);
// an interval [a,a] yields degree -2, a single edge yields degree -1
GradedDims homology_via_falling_chains(const LabelledLattice& L, int a, int b);
GradedDims homology_via_falling_chains(const LabelledLattice& L);  // [0^, 1^]

}  // namespace zcycles
