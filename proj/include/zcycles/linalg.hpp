#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zcycles/common.hpp"

namespace zcycles {

// sparse vector, index -> value, zeros never stored
using SparseQVec = std::map<int, Rat>;
using SparseZVec = std::map<int, Int>;

// Incremental column echelon basis over Q.  Vectors keep unit leading
// coefficients at distinct leading indices, which makes membership tests and
// coordinate extraction a single forward substitution.
class EchelonBasis {
 public:
  // reduces v against the basis; if nonzero remains, normalizes and inserts.
  // Returns true when v was independent.
  bool insert(SparseQVec v);
  bool in_span(SparseQVec v) const;
  // coefficients of v in the stored basis; nullopt if v is outside the span
  std::optional<std::vector<Rat>> coords(SparseQVec v) const;
  long rank() const { return static_cast<long>(vecs_.size()); }
  const std::vector<SparseQVec>& vectors() const { return vecs_; }

 private:
  std::vector<SparseQVec> vecs_;
  std::map<int, int> lead_;  // leading index -> position in vecs_
};

long rank_rational(const std::vector<SparseQVec>& columns);

// diagonal of a Smith normal form (invariant factors, nonnegative, each
// dividing the next); pivots chosen by minimal magnitude to control growth
std::vector<Int> smith_divisors(std::vector<SparseZVec> rows);

bool all_units(const std::vector<Int>& divisors);

}  // namespace zcycles
