#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcycles/common.hpp"

namespace zcycles {

// An m-colored finite ground set D = D(1) u ... u D(m), |D(i)| = d_i.
// Elements are numbered densely 0..total()-1, color-major: color i occupies
// [offset(i), offset(i)+size(i)).  Within a color, elements are ordered by
// their 1-based index; this is the order used by the edge labelling.
class ColoredSet {
 public:
  explicit ColoredSet(std::vector<int> sizes);

  int colors() const { return static_cast<int>(sizes_.size()); }
  int size(int color) const { return sizes_.at(color - 1); }
  const std::vector<int>& sizes() const { return sizes_; }
  int total() const { return total_; }

  int offset(int color) const { return offsets_.at(color - 1); }
  // (color, 1-based index) -> dense id
  int element(int color, int index) const;
  int color_of(int id) const;
  int index_of(int id) const;  // 1-based index within its color

  // bitmask of all elements of the given color
  uint32_t color_mask(int color) const { return color_masks_.at(color - 1); }
  uint32_t full_mask() const { return full_mask_; }

  bool operator==(const ColoredSet& o) const { return sizes_ == o.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  std::vector<uint32_t> color_masks_;
  uint32_t full_mask_ = 0;
  int total_ = 0;
};

// Element of S_{d_1} x ... x S_{d_m} acting on D color by color.
struct SymmetryGroupElement {
  // perms[c][j] = 0-based image of the j-th element of color c+1
  std::vector<std::vector<int>> perms;

  int apply(const ColoredSet& D, int id) const;
  // sign of the induced permutation of D (= product of per-color signs)
  int sign() const;
  bool operator==(const SymmetryGroupElement& o) const { return perms == o.perms; }
};

// all Prod_i d_i! group elements; guarded by limits.max_symmetry_ground
std::vector<SymmetryGroupElement> enumerate_symmetry_group(
    const ColoredSet& D, const Limits& limits = default_limits());

int permutation_sign(const std::vector<int>& perm);

std::string describe(const ColoredSet& D);

}  // namespace zcycles
