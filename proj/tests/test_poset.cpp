#include <doctest.h>

#include <algorithm>
#include <set>

#include "zcycles/poset.hpp"

using namespace zcycles;

TEST_SUITE("poset") {

TEST_CASE("poset_from_leq on a diamond") {
  // 0 < 1,2 < 3
  auto leq = [](int a, int b) {
    if (a == b) return true;
    if (a == 0) return true;
    if (b == 3) return true;
    return false;
  };
  BoundedPoset P = poset_from_leq(4, leq, default_limits());
  CHECK(P.bottom == 0);
  CHECK(P.top == 3);
  CHECK(P.covers_up[0] == std::vector<int>{1, 2});
  CHECK(P.covers_up[1] == std::vector<int>{3});
  CHECK(P.covers_up[2] == std::vector<int>{3});
  CHECK(P.covers_up[3].empty());
}

TEST_CASE("poset_from_leq rejects unbounded posets") {
  // two incomparable points
  auto leq = [](int a, int b) { return a == b; };
  CHECK_THROWS_AS(poset_from_leq(2, leq, default_limits()), invalid_input_error);
}

TEST_CASE("build_lattice structure for (3), n = 2") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{3}), 2, default_limits());
  CHECK(L.poset.size == 5);
  CHECK(L.elements[L.poset.bottom] == discrete_partition(L.D));
  CHECK(L.elements[L.poset.top] == *one_block_partition(L.D, 2));
  CHECK(L.has_one_block_top());
  CHECK(L.poset.covers_up[L.poset.bottom].size() == 3);
  long edges = 0;
  for (const auto& ups : L.poset.covers_up) edges += static_cast<long>(ups.size());
  CHECK(edges == 6);
}

TEST_CASE("lattices without a one-block top collapse to a point") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{1, 3}), 2, default_limits());
  CHECK(L.poset.size == 1);
  CHECK_FALSE(L.has_one_block_top());
  CHECK(L.poset.bottom == L.poset.top);
}

TEST_CASE("generated covers equal the transitive reduction of the order") {
  Limits lim = default_limits();
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{5}, 2}, {{6}, 3}, {{2, 3}, 1}, {{2, 2, 2}, 1}}) {
    PartitionLattice L = build_lattice(ColoredSet(sizes), n, lim);
    BoundedPoset R = from_partitions(L.elements, lim);  // covers by reduction
    REQUIRE(R.size == L.poset.size);
    for (int a = 0; a < R.size; ++a) {
      auto got = L.poset.covers_up[a];
      auto want = R.covers_up[a];
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("topo order is a linear extension") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{5}), 2, default_limits());
  const BoundedPoset& P = L.poset;
  for (int a = 0; a < P.size; ++a)
    for (int b = 0; b < P.size; ++b)
      if (P.less(a, b)) CHECK(P.topo_pos[a] < P.topo_pos[b]);
}

TEST_CASE("intervals are convex subposets with inherited covers") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{4}), 2, default_limits());
  const BoundedPoset& P = L.poset;
  int atom = P.covers_up[P.bottom][0];
  InducedPoset S = interval(P, atom, P.top);
  // [atom, 1^] in the partition lattice of 4 is a partition lattice of 3
  CHECK(S.poset.size == 5);
  CHECK(S.orig[S.poset.bottom] == atom);
  CHECK(S.orig[S.poset.top] == P.top);
  for (int i = 0; i < S.poset.size; ++i)
    for (int j = 0; j < S.poset.size; ++j)
      CHECK(S.poset.leq[i][j] == P.leq[S.orig[i]][S.orig[j]]);
  CHECK_THROWS_AS(interval(P, P.top, P.bottom), invalid_input_error);
}

TEST_CASE("down_set of an atom is the two element chain") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{4}), 2, default_limits());
  int atom = L.poset.covers_up[L.poset.bottom][0];
  CHECK(down_set(L.poset, atom).poset.size == 2);
  CHECK(down_set(L.poset, L.poset.bottom).poset.size == 1);
}

TEST_CASE("product decomposition splits along blocks") {
  ColoredSet D(std::vector<int>{4});
  NEqualsPartition I = canonicalize({0b0011, 0b1100});
  auto factors = product_decomposition(D, 2, I, default_limits());
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].poset.size == 2);  // partitions of a 2-set
  CHECK(factors[1].poset.size == 2);
  NEqualsPartition J = canonicalize({0b0111, 0b1000});
  auto f2 = product_decomposition(D, 2, J, default_limits());
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].poset.size == 5);  // partitions of a 3-set
  CHECK(f2[1].poset.size == 1);  // singleton block
}

TEST_CASE("order complex of the proper part") {
  PartitionLattice L3 = build_lattice(ColoredSet(std::vector<int>{3}), 2, default_limits());
  OrderComplex C3 = order_complex(L3.poset, default_limits());
  REQUIRE(C3.simplices.size() == 1);  // three isolated vertices
  CHECK(C3.simplices[0].size() == 3);

  PartitionLattice L4 = build_lattice(ColoredSet(std::vector<int>{4}), 2, default_limits());
  OrderComplex C4 = order_complex(L4.poset, default_limits());
  REQUIRE(C4.simplices.size() == 2);
  CHECK(C4.simplices[0].size() == 13);  // proper elements of Bell(4) lattice
  // edges: atom < coatom pairs; each 2+2 coatom covers 2 atoms, each 3+1 coatom 3
  CHECK(C4.simplices[1].size() == 3 * 2 + 4 * 3);
  for (const auto& s : C4.simplices[1]) CHECK(L4.poset.less(s[0], s[1]));
}

TEST_CASE("order complex budget guard") {
  Limits lim = default_limits();
  lim.max_simplices = 10;
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{5}), 2, lim);
  CHECK_THROWS_AS(order_complex(L.poset, lim), resource_limit_error);
}

TEST_CASE("maximal chain counts in small partition lattices") {
  // d!(d-1)!/2^(d-1) maximal chains in the full partition lattice
  PartitionLattice L3 = build_lattice(ColoredSet(std::vector<int>{3}), 2, default_limits());
  CHECK(maximal_chains(L3.poset).size() == 3);
  PartitionLattice L4 = build_lattice(ColoredSet(std::vector<int>{4}), 2, default_limits());
  CHECK(maximal_chains(L4.poset).size() == 18);
}

TEST_CASE("non-pure interval in the 3-equal lattice of a 6 set") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{6}), 3, default_limits());
  CHECK(L.poset.size == 53);
  NEqualsPartition I = canonicalize({0b000111, 0b001000, 0b010000, 0b100000});
  auto chains = maximal_chains(L.poset, L.id_of(I), L.poset.top);
  std::set<std::size_t> lengths;
  for (const auto& c : chains) lengths.insert(c.size());
  CHECK(lengths == std::set<std::size_t>{3, 4});  // lengths 2 and 3: not graded
  CHECK(chains.size() == 7);
}

TEST_CASE("hasse_dot shape") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{3}), 2, default_limits());
  std::string dot = hasse_dot(L);
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("(1 2 3)") != std::string::npos);
}

}  // TEST_SUITE
