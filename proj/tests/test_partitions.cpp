#include <doctest.h>

#include <algorithm>
#include <set>

#include "zcycles/partition.hpp"

using namespace zcycles;

namespace {

NEqualsPartition parse_blocks(std::vector<std::vector<int>> blocks) {
  std::vector<uint32_t> masks;
  for (const auto& b : blocks) {
    uint32_t m = 0;
    for (int e : b) m |= uint32_t{1} << e;
    masks.push_back(m);
  }
  return canonicalize(std::move(masks));
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("normalized_n folds (1,1) into (1,2)") {
  ColoredSet one(std::vector<int>{4});
  ColoredSet two(std::vector<int>{2, 2});
  CHECK(normalized_n(one, 1) == 2);
  CHECK(normalized_n(one, 2) == 2);
  CHECK(normalized_n(two, 1) == 1);
  CHECK_THROWS_AS(normalized_n(one, 0), invalid_input_error);
}

TEST_CASE("block validity needs n of every color") {
  ColoredSet D(std::vector<int>{2, 3});
  // elements 0,1 are color 1; 2,3,4 are color 2
  CHECK(is_nequals_block(D, 0b00001, 2));        // singleton always fine
  CHECK(is_nequals_block(D, 0b01111, 2));        // 2+2
  CHECK_FALSE(is_nequals_block(D, 0b00111, 2));  // 2+1
  CHECK_FALSE(is_nequals_block(D, 0b11100, 2));  // 0+3
  CHECK(is_nequals_block(D, 0b00101, 1));        // 1+1 at n=1
}

TEST_CASE("partition validity rejects overlap, gaps, and bad blocks") {
  ColoredSet D(std::vector<int>{3});
  CHECK(is_valid_partition(D, parse_blocks({{0, 1}, {2}}), 2));
  CHECK_FALSE(is_valid_partition(D, NEqualsPartition{{0b011, 0b010, 0b100}}, 2));  // overlap
  CHECK_FALSE(is_valid_partition(D, NEqualsPartition{{0b001, 0b100}}, 2));         // gap
  ColoredSet E(std::vector<int>{2, 2});
  CHECK_FALSE(is_valid_partition(E, parse_blocks({{0, 1}, {2, 3}}), 2));  // same-color pair
}

TEST_CASE("enumeration counts match hand counts") {
  Limits lim = default_limits();
  auto count = [&](std::vector<int> sizes, int n) {
    return enumerate_partitions(ColoredSet(sizes), n, lim).size();
  };
  // n = 2, one color: every set partition qualifies (Bell numbers)
  CHECK(count({3}, 2) == 5);
  CHECK(count({4}, 2) == 15);
  CHECK(count({5}, 2) == 52);
  CHECK(count({6}, 2) == 203);
  // n = 3, one color: blocks of size 1 or >= 3
  CHECK(count({5}, 3) == 17);  // 1 + C(5,3) + C(5,4) + 1
  CHECK(count({6}, 3) == 53);  // 1 + 20 + 15 + 6 + 1 + 10
  // colored
  CHECK(count({2, 2}, 1) == 12);
  CHECK(count({2, 2}, 2) == 2);  // discrete and the full block only
  CHECK(count({1, 3}, 2) == 1);  // no valid big block: only 0^
}

TEST_CASE("enumerated partitions are valid, canonical, sorted, unique") {
  Limits lim = default_limits();
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{5}, 2}, {{6}, 3}, {{2, 3}, 1}, {{2, 2, 2}, 1}}) {
    ColoredSet D(sizes);
    auto parts = enumerate_partitions(D, n, lim);
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    CHECK(std::set<NEqualsPartition>(parts.begin(), parts.end()).size() == parts.size());
    uint32_t all = D.full_mask();
    for (const auto& p : parts) {
      CHECK(is_valid_partition(D, p, normalized_n(D, n)));
      uint32_t seen = 0;
      int prev_low = -1;
      for (uint32_t b : p.blocks) {
        int low = 0;
        while (!(b & (uint32_t{1} << low))) ++low;
        CHECK(low > prev_low);  // canonical block order
        prev_low = low;
        seen |= b;
      }
      CHECK(seen == all);
    }
  }
}

TEST_CASE("enumeration guard") {
  Limits lim = default_limits();
  CHECK_THROWS_AS(enumerate_partitions(ColoredSet(std::vector<int>{11}), 2, lim),
                  resource_limit_error);
}

TEST_CASE("one_block_partition exists iff every color has at least n elements") {
  CHECK(one_block_partition(ColoredSet(std::vector<int>{4}), 2).has_value());
  CHECK(one_block_partition(ColoredSet(std::vector<int>{2, 3}), 2).has_value());
  CHECK_FALSE(one_block_partition(ColoredSet(std::vector<int>{1, 3}), 2).has_value());
  CHECK_FALSE(one_block_partition(ColoredSet(std::vector<int>{2}), 3).has_value());
}

TEST_CASE("join is the least upper bound") {
  Limits lim = default_limits();
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{{{4}, 2}, {{2, 2}, 1}}) {
    ColoredSet D(sizes);
    auto parts = enumerate_partitions(D, n, lim);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        NEqualsPartition j = join(D, n, a, b);
        CHECK(refines(a, j));
        CHECK(refines(b, j));
        for (const auto& c : parts)
          if (refines(a, c) && refines(b, c)) CHECK(refines(j, c));
      }
  }
}

TEST_CASE("codimension and transversality") {
  ColoredSet D(std::vector<int>{4});
  NEqualsPartition ab = parse_blocks({{0, 1}, {2}, {3}});
  NEqualsPartition cd = parse_blocks({{0}, {1}, {2, 3}});
  NEqualsPartition abc = parse_blocks({{0, 1, 2}, {3}});
  CHECK(codim(D, ab) == 1);
  CHECK(codim(D, abc) == 2);
  CHECK(codim_in(D, ab, 3) == 3);
  CHECK(transverse(D, 2, ab, cd));        // join has codim 2
  CHECK_FALSE(transverse(D, 2, ab, abc)); // join = abc, codim 2 != 1 + 2
}

TEST_CASE("covers match the transitive reduction of refinement") {
  Limits lim = default_limits();
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{5}, 2}, {{6}, 3}, {{2, 3}, 1}, {{3, 3}, 2}}) {
    ColoredSet D(sizes);
    auto parts = enumerate_partitions(D, n, lim);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      // reduction: strict successors with nothing strictly between
      std::vector<NEqualsPartition> expected;
      for (const auto& q : parts) {
        if (!(refines(parts[i], q)) || q == parts[i]) continue;
        bool cover = true;
        for (const auto& r : parts)
          if (!(r == parts[i]) && !(r == q) && refines(parts[i], r) && refines(r, q)) {
            cover = false;
            break;
          }
        if (cover) expected.push_back(q);
      }
      std::sort(expected.begin(), expected.end());
      CHECK(covers_of(D, n, parts[i]) == expected);
    }
  }
}

TEST_CASE("symmetry group size and orbit-stabilizer") {
  Limits lim = default_limits();
  ColoredSet D(std::vector<int>{2, 2});
  auto group = enumerate_symmetry_group(D, lim);
  CHECK(group.size() == 4);
  long order = static_cast<long>(group.size());
  for (const auto& I : enumerate_partitions(D, 1, lim))
    CHECK(static_cast<long>(orbit(D, I, lim).size()) * stabilizer_order(D, I, lim) == order);

  ColoredSet E(std::vector<int>{4});
  auto ge = enumerate_symmetry_group(E, lim);
  CHECK(ge.size() == 24);
  int sign_sum = 0;
  for (const auto& g : ge) sign_sum += g.sign();
  CHECK(sign_sum == 0);
}

TEST_CASE("apply respects the lattice and block_permutation_sign needs a fixed point") {
  Limits lim = default_limits();
  ColoredSet D(std::vector<int>{4});
  auto parts = enumerate_partitions(D, 2, lim);
  std::set<NEqualsPartition> all(parts.begin(), parts.end());
  for (const auto& g : enumerate_symmetry_group(D, lim))
    for (const auto& I : parts) CHECK(all.count(apply(D, g, I)) == 1);

  // the double transposition (12)(34) fixes (12)|(34) and swaps nothing across
  SymmetryGroupElement swap_both{{{1, 0, 3, 2}}};
  NEqualsPartition I = parse_blocks({{0, 1}, {2, 3}});
  CHECK(block_permutation_sign(D, swap_both, I) == 1);
  // (13)(24) maps (12)|(34) to itself while exchanging the two blocks
  SymmetryGroupElement cross{{{2, 3, 0, 1}}};
  CHECK(block_permutation_sign(D, cross, I) == -1);
  NEqualsPartition J = parse_blocks({{0, 1}, {2}, {3}});
  CHECK_THROWS_AS(block_permutation_sign(D, cross, J), invalid_input_error);
}

TEST_CASE("describe is stable") {
  ColoredSet D(std::vector<int>{2, 2});
  CHECK(describe(D, parse_blocks({{0, 2}, {1}, {3}})) == "(a1 b1)|(a2)|(b2)");
  ColoredSet E(std::vector<int>{3});
  CHECK(describe(E, parse_blocks({{0, 1, 2}})) == "(1 2 3)");
}

}  // TEST_SUITE
