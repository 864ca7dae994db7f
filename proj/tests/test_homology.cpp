#include <doctest.h>

#include "zcycles/homology.hpp"
#include "zcycles/poset.hpp"

using namespace zcycles;

namespace {

GradedDims proper_homology(std::vector<int> sizes, int n) {
  PartitionLattice L = build_lattice(ColoredSet(sizes), n, default_limits());
  return reduced_homology(L.poset);
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("tiny poset conventions") {
  CHECK(proper_homology({1}, 2) == GradedDims{{-2, 1}});      // one element poset
  CHECK(proper_homology({2}, 2) == GradedDims{{-1, 1}});      // bare bounded pair
  CHECK(proper_homology({2, 2}, 2) == GradedDims{{-1, 1}});   // colored bare pair
}

TEST_CASE("one color, n = 2: top homology has rank (d-1)!") {
  CHECK(proper_homology({3}, 2) == GradedDims{{0, 2}});
  CHECK(proper_homology({4}, 2) == GradedDims{{1, 6}});
  CHECK(proper_homology({5}, 2) == GradedDims{{2, 24}});
}

TEST_CASE("one color, n = 3") {
  // matrix oracle values
  CHECK(proper_homology({4}, 3) == GradedDims{{0, 3}});
  CHECK(proper_homology({5}, 3) == GradedDims{{1, 6}});
  // non-pure case: homology in two degrees
  CHECK(proper_homology({6}, 3) == GradedDims{{1, 10}, {2, 10}});
}

TEST_CASE("colored lattices") {
  // matrix oracle values
  CHECK(proper_homology({2, 2}, 1) == GradedDims{{1, 3}});
  CHECK(proper_homology({2, 3}, 1) == GradedDims{{2, 7}});
  CHECK(proper_homology({3, 3}, 1) == GradedDims{{3, 31}});
  CHECK(proper_homology({2, 3}, 2) == GradedDims{{0, 2}});
  CHECK(proper_homology({3, 3}, 2) == GradedDims{{1, 4}});
  CHECK(proper_homology({2, 2, 2}, 1) == GradedDims{{1, 4}, {2, 1}});
}

TEST_CASE("boundary squares to zero") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{4}), 2, default_limits());
  OrderComplex C = order_complex(L.poset, default_limits());
  for (int k = 1; k < static_cast<int>(C.simplices.size()); ++k) {
    auto cols = boundary_columns(C, k);
    auto lower = boundary_columns(C, k - 1);
    for (const auto& col : cols) {
      SparseQVec acc;
      for (const auto& [row, coeff] : col)
        for (const auto& [row2, coeff2] : lower[row]) {
          acc[row2] += coeff * coeff2;
          if (acc[row2] == 0) acc.erase(row2);
        }
      CHECK(acc.empty());
    }
  }
}

TEST_CASE("integral route repeats the rational ranks with unit divisors") {
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{5}, 2}, {{6}, 3}, {{2, 3}, 1}, {{2, 2, 2}, 1}}) {
    PartitionLattice L = build_lattice(ColoredSet(sizes), n, default_limits());
    TorsionReport rep = integral_torsion_check(L.poset);
    CHECK(rep.torsion_free);
    CHECK(rep.dims == reduced_homology(L.poset));
    for (const auto& [deg, divs] : rep.divisors)
      for (const Int& d : divs) CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("kunneth ranks hold for every element of small lattices") {
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{4}, 2}, {{5}, 2}, {{6}, 3}, {{2, 3}, 1}}) {
    PartitionLattice L = build_lattice(ColoredSet(sizes), n, default_limits());
    for (const auto& I : L.elements) {
      KunnethReport rep = kunneth_rank_check(L, I);
      CHECK(rep.ok);
      CHECK(rep.down_set_dims == rep.product_dims);
      CHECK(rep.block_count == static_cast<int>(I.block_count()));
    }
  }
}

TEST_CASE("kunneth worked example: two 2-blocks in the lattice of a 4 set") {
  ColoredSet D(std::vector<int>{4});
  NEqualsPartition I = canonicalize({0b0011, 0b1100});
  KunnethReport rep = kunneth_rank_check(D, 2, I);
  CHECK(rep.ok);
  CHECK(rep.block_count == 2);
  // down set is a diamond: proper part is two incomparable points, H~_0 = 1;
  // factor side is {-1:1} (x) {-1:1} shifted by 2(l-1) = 2
  CHECK(rep.down_set_dims == GradedDims{{0, 1}});
}

TEST_CASE("convolve adds degrees and multiplies ranks") {
  GradedDims a{{-2, 1}};
  GradedDims b{{0, 2}, {1, 3}};
  CHECK(convolve({a, b}) == GradedDims{{-2, 2}, {-1, 3}});
  CHECK(convolve({b, b}) == GradedDims{{0, 4}, {1, 12}, {2, 9}});
  CHECK(convolve({}) == GradedDims{{0, 1}});
}

}  // TEST_SUITE
