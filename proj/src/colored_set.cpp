#include "zcycles/colored_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zcycles {

ColoredSet::ColoredSet(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw invalid_input_error("colored set needs at least one color");
  for (int d : sizes_)
    if (d < 0) throw invalid_input_error("color sizes must be nonnegative");
  offsets_.resize(sizes_.size());
  color_masks_.resize(sizes_.size());
  int at = 0;
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    offsets_[c] = at;
    at += sizes_[c];
  }
  total_ = at;
  if (total_ > 30)
    throw invalid_input_error("ground set too large (bitmask representation caps |D| at 30)");
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    uint32_t mask = 0;
    for (int j = 0; j < sizes_[c]; ++j) mask |= uint32_t{1} << (offsets_[c] + j);
    color_masks_[c] = mask;
    full_mask_ |= mask;
  }
}

int ColoredSet::element(int color, int index) const {
  if (color < 1 || color > colors() || index < 1 || index > size(color))
    throw invalid_input_error("element (" + std::to_string(color) + "," +
                              std::to_string(index) + ") out of range");
  return offset(color) + index - 1;
}

int ColoredSet::color_of(int id) const {
  for (int c = colors(); c >= 1; --c)
    if (id >= offset(c)) return c;
  throw invalid_input_error("element id out of range");
}

int ColoredSet::index_of(int id) const { return id - offset(color_of(id)) + 1; }

int SymmetryGroupElement::apply(const ColoredSet& D, int id) const {
  int c = D.color_of(id);
  int j = id - D.offset(c);
  return D.offset(c) + perms.at(c - 1).at(j);
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int SymmetryGroupElement::sign() const {
  int s = 1;
  for (const auto& p : perms) s *= permutation_sign(p);
  return s;
}

std::vector<SymmetryGroupElement> enumerate_symmetry_group(const ColoredSet& D,
                                                           const Limits& limits) {
  if (D.total() > limits.max_symmetry_ground)
    throw resource_limit_error("symmetry group enumeration limited to |D| <= " +
                               std::to_string(limits.max_symmetry_ground));
  // per-color permutation lists, combined as a cartesian product
  std::vector<std::vector<std::vector<int>>> per_color(D.colors());
  for (int c = 1; c <= D.colors(); ++c) {
    std::vector<int> p(D.size(c));
    std::iota(p.begin(), p.end(), 0);
    do {
      per_color[c - 1].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<SymmetryGroupElement> out;
  std::vector<std::size_t> idx(D.colors(), 0);
  while (true) {
    SymmetryGroupElement g;
    g.perms.resize(D.colors());
    for (int c = 0; c < D.colors(); ++c) g.perms[c] = per_color[c][idx[c]];
    out.push_back(std::move(g));
    int c = D.colors() - 1;
    while (c >= 0 && ++idx[c] == per_color[c].size()) idx[c--] = 0;
    if (c < 0) break;
  }
  return out;
}

std::string describe(const ColoredSet& D) {
  std::ostringstream os;
  os << "(";
  for (int c = 1; c <= D.colors(); ++c) os << (c > 1 ? "," : "") << D.size(c);
  os << ")";
  return os.str();
}

}  // namespace zcycles
