#include "zcycles/partition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace zcycles {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }
int lowest(uint32_t m) { return std::countr_zero(m); }

// all size-k subsets of pool, as masks
void combinations(const std::vector<int>& pool, int k, std::size_t from, uint32_t acc,
                  std::vector<uint32_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  if (from + k > pool.size()) return;
  for (std::size_t i = from; i + k <= pool.size(); ++i)
    combinations(pool, k - 1, i + 1, acc | (uint32_t{1} << pool[i]), out);
}

}  // namespace

uint32_t NEqualsPartition::block_of(int id) const {
  uint32_t bit = uint32_t{1} << id;
  for (uint32_t b : blocks)
    if (b & bit) return b;
  throw invalid_input_error("element not covered by partition");
}

int normalized_n(const ColoredSet& D, int n) {
  if (n < 1) throw invalid_input_error("n must be >= 1");
  return (D.colors() == 1 && n == 1) ? 2 : n;
}

bool is_nequals_block(const ColoredSet& D, uint32_t mask, int n) {
  if (popcount(mask) <= 1) return true;
  for (int c = 1; c <= D.colors(); ++c)
    if (popcount(mask & D.color_mask(c)) < n) return false;
  return true;
}

bool is_valid_partition(const ColoredSet& D, const NEqualsPartition& I, int n) {
  uint32_t seen = 0;
  for (uint32_t b : I.blocks) {
    if (b == 0 || (b & seen)) return false;
    if (!is_nequals_block(D, b, n)) return false;
    seen |= b;
  }
  return seen == D.full_mask();
}

NEqualsPartition canonicalize(std::vector<uint32_t> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](uint32_t a, uint32_t b) { return lowest(a) < lowest(b); });
  return NEqualsPartition{std::move(blocks)};
}

NEqualsPartition discrete_partition(const ColoredSet& D) {
  std::vector<uint32_t> blocks;
  for (int i = 0; i < D.total(); ++i) blocks.push_back(uint32_t{1} << i);
  return NEqualsPartition{std::move(blocks)};
}

std::optional<NEqualsPartition> one_block_partition(const ColoredSet& D, int n) {
  if (D.total() == 0) return NEqualsPartition{{}};
  uint32_t full = D.full_mask();
  if (!is_nequals_block(D, full, normalized_n(D, n))) return std::nullopt;
  return NEqualsPartition{{full}};
}

std::vector<NEqualsPartition> enumerate_partitions(const ColoredSet& D, int n,
                                                   const Limits& limits) {
  if (D.total() > limits.max_ground_set)
    throw resource_limit_error("partition enumeration limited to |D| <= " +
                               std::to_string(limits.max_ground_set) +
                               " (raise the limit explicitly to go further)");
  n = normalized_n(D, n);
  std::vector<NEqualsPartition> out;
  std::vector<uint32_t> blocks;
  // grow set partitions element by element; filter n-equals at the leaves
  std::function<void(int)> rec = [&](int elem) {
    if (elem == D.total()) {
      for (uint32_t b : blocks)
        if (!is_nequals_block(D, b, n)) return;
      out.push_back(canonicalize(blocks));
      return;
    }
    uint32_t bit = uint32_t{1} << elem;
    // index loop: rec() grows and shrinks the vector, invalidating references
    for (std::size_t i = 0, count = blocks.size(); i < count; ++i) {
      blocks[i] |= bit;
      rec(elem + 1);
      blocks[i] &= ~bit;
    }
    blocks.push_back(bit);
    rec(elem + 1);
    blocks.pop_back();
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const NEqualsPartition& I, const NEqualsPartition& J) {
  for (uint32_t b : I.blocks) {
    uint32_t jb = J.block_of(lowest(b));
    if ((b & ~jb) != 0) return false;
  }
  return true;
}

NEqualsPartition join(const ColoredSet& D, int n, const NEqualsPartition& I,
                      const NEqualsPartition& J) {
  // union-find on I's blocks, merged along J's blocks
  std::vector<int> parent(I.blocks.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> owner(D.total(), -1);
  for (std::size_t i = 0; i < I.blocks.size(); ++i)
    for (int e = 0; e < D.total(); ++e)
      if (I.blocks[i] & (uint32_t{1} << e)) owner[e] = static_cast<int>(i);
  for (uint32_t jb : J.blocks) {
    int first = -1;
    for (int e = 0; e < D.total(); ++e) {
      if (!(jb & (uint32_t{1} << e))) continue;
      if (first < 0)
        first = find(owner[e]);
      else
        parent[find(owner[e])] = first;
    }
  }
  std::map<int, uint32_t> classes;
  for (std::size_t i = 0; i < I.blocks.size(); ++i) classes[find(static_cast<int>(i))] |= I.blocks[i];
  std::vector<uint32_t> blocks;
  for (auto& [root, mask] : classes) blocks.push_back(mask);
  NEqualsPartition K = canonicalize(std::move(blocks));
  if (!is_valid_partition(D, K, normalized_n(D, n)))
    throw invalid_input_error("join left the n-equals family (inputs invalid?)");
  return K;
}

int codim(const ColoredSet& D, const NEqualsPartition& I) {
  return D.total() - I.block_count();
}

int codim_in(const ColoredSet& D, const NEqualsPartition& I, int ambient_dim) {
  if (ambient_dim < 1) throw invalid_input_error("ambient dimension must be >= 1");
  return ambient_dim * codim(D, I);
}

bool transverse(const ColoredSet& D, int n, const NEqualsPartition& I,
                const NEqualsPartition& J) {
  return codim(D, I) + codim(D, J) == codim(D, join(D, n, I, J));
}

std::vector<NEqualsPartition> covers_of(const ColoredSet& D, int n,
                                        const NEqualsPartition& I) {
  n = normalized_n(D, n);
  std::vector<NEqualsPartition> out;
  std::vector<std::size_t> singles, bigs;
  for (std::size_t i = 0; i < I.blocks.size(); ++i)
    (popcount(I.blocks[i]) == 1 ? singles : bigs).push_back(i);

  auto merged = [&](uint32_t dropped, uint32_t added) {
    std::vector<uint32_t> blocks;
    for (uint32_t b : I.blocks)
      if (!(b & dropped)) blocks.push_back(b);
    blocks.push_back(added);
    out.push_back(canonicalize(std::move(blocks)));
  };

  for (std::size_t x = 0; x < bigs.size(); ++x)
    for (std::size_t y = x + 1; y < bigs.size(); ++y) {
      uint32_t u = I.blocks[bigs[x]] | I.blocks[bigs[y]];
      merged(u, u);
    }
  for (std::size_t x : bigs)
    for (std::size_t s : singles) {
      uint32_t u = I.blocks[x] | I.blocks[s];
      merged(u, u);
    }
  // creations: exactly n singleton elements of every color
  std::vector<std::vector<int>> single_by_color(D.colors());
  for (std::size_t s : singles) {
    int e = lowest(I.blocks[s]);
    single_by_color[D.color_of(e) - 1].push_back(e);
  }
  std::vector<std::vector<uint32_t>> choices(D.colors());
  bool feasible = true;
  for (int c = 0; c < D.colors(); ++c) {
    combinations(single_by_color[c], n, 0, 0, choices[c]);
    if (choices[c].empty()) feasible = false;
  }
  if (feasible) {
    std::vector<std::size_t> idx(D.colors(), 0);
    while (true) {
      uint32_t u = 0;
      for (int c = 0; c < D.colors(); ++c) u |= choices[c][idx[c]];
      merged(u, u);
      int c = D.colors() - 1;
      while (c >= 0 && ++idx[c] == choices[c].size()) idx[c--] = 0;
      if (c < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NEqualsPartition apply(const ColoredSet& D, const SymmetryGroupElement& g,
                       const NEqualsPartition& I) {
  std::vector<uint32_t> blocks;
  for (uint32_t b : I.blocks) {
    uint32_t image = 0;
    for (int e = 0; e < D.total(); ++e)
      if (b & (uint32_t{1} << e)) image |= uint32_t{1} << g.apply(D, e);
    blocks.push_back(image);
  }
  return canonicalize(std::move(blocks));
}

int block_permutation_sign(const ColoredSet& D, const SymmetryGroupElement& g,
                           const NEqualsPartition& I) {
  NEqualsPartition J = apply(D, g, I);
  if (!(J == I)) throw invalid_input_error("partition is not fixed by the group element");
  std::vector<int> perm(I.blocks.size());
  for (std::size_t i = 0; i < I.blocks.size(); ++i) {
    uint32_t image = 0;
    for (int e = 0; e < D.total(); ++e)
      if (I.blocks[i] & (uint32_t{1} << e)) image |= uint32_t{1} << g.apply(D, e);
    auto it = std::find(I.blocks.begin(), I.blocks.end(), image);
    perm[i] = static_cast<int>(it - I.blocks.begin());
  }
  return permutation_sign(perm);
}

std::vector<NEqualsPartition> orbit(const ColoredSet& D, const NEqualsPartition& I,
                                    const Limits& limits) {
  std::set<NEqualsPartition> seen;
  for (const auto& g : enumerate_symmetry_group(D, limits)) seen.insert(apply(D, g, I));
  return {seen.begin(), seen.end()};
}

long stabilizer_order(const ColoredSet& D, const NEqualsPartition& I,
                      const Limits& limits) {
  long count = 0;
  for (const auto& g : enumerate_symmetry_group(D, limits))
    if (apply(D, g, I) == I) ++count;
  return count;
}

std::string describe(const ColoredSet& D, const NEqualsPartition& I) {
  static const char* letters = "abcdefgh";
  std::ostringstream os;
  for (std::size_t i = 0; i < I.blocks.size(); ++i) {
    os << (i ? "|" : "") << "(";
    bool first = true;
    for (int e = 0; e < D.total(); ++e)
      if (I.blocks[i] & (uint32_t{1} << e)) {
        if (!first) os << " ";
        first = false;
        int c = D.color_of(e);
        if (D.colors() > 1) os << letters[(c - 1) % 8];
        os << D.index_of(e);
      }
    os << ")";
  }
  return os.str();
}

}  // namespace zcycles
