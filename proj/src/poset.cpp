#include "zcycles/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace zcycles {

namespace {

void finish_structure(BoundedPoset& P) {
  // linear extension by down-set size (strictly monotone along <)
  std::vector<int> weight(P.size, 0);
  for (int b = 0; b < P.size; ++b)
    for (int a = 0; a < P.size; ++a)
      if (P.leq[a][b]) ++weight[b];
  P.topo.resize(P.size);
  std::iota(P.topo.begin(), P.topo.end(), 0);
  std::sort(P.topo.begin(), P.topo.end(), [&](int x, int y) {
    return weight[x] != weight[y] ? weight[x] < weight[y] : x < y;
  });
  P.topo_pos.assign(P.size, 0);
  for (int i = 0; i < P.size; ++i) P.topo_pos[P.topo[i]] = i;

  P.bottom = P.top = -1;
  for (int x = 0; x < P.size; ++x) {
    bool is_bot = true, is_top = true;
    for (int y = 0; y < P.size; ++y) {
      is_bot = is_bot && P.leq[x][y];
      is_top = is_top && P.leq[y][x];
    }
    if (is_bot) P.bottom = x;
    if (is_top) P.top = x;
  }
  if (P.size > 0 && (P.bottom < 0 || P.top < 0))
    throw invalid_input_error("poset is not bounded (no global bottom/top)");
}

void covers_by_reduction(BoundedPoset& P) {
  P.covers_up.assign(P.size, {});
  for (int a = 0; a < P.size; ++a) {
    std::vector<int> ups;
    for (int b = 0; b < P.size; ++b)
      if (P.less(a, b)) ups.push_back(b);
    for (int b : ups) {
      bool cover = true;
      for (int c : ups)
        if (c != b && P.less(c, b)) {
          cover = false;
          break;
        }
      if (cover) P.covers_up[a].push_back(b);
    }
  }
}

}  // namespace

BoundedPoset poset_from_leq(int size, const std::function<bool(int, int)>& leq_fn,
                            const Limits& limits) {
  if (size > limits.max_poset_elements)
    throw resource_limit_error("poset too large for an explicit order matrix");
  BoundedPoset P;
  P.size = size;
  P.leq.assign(size, std::vector<bool>(size, false));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) P.leq[a][b] = leq_fn(a, b);
  covers_by_reduction(P);
  finish_structure(P);
  return P;
}

int PartitionLattice::id_of(const NEqualsPartition& I) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), I);
  if (it == elements.end() || !(*it == I))
    throw invalid_input_error("partition is not an element of the lattice");
  return static_cast<int>(it - elements.begin());
}

bool PartitionLattice::has_one_block_top() const {
  auto top = one_block_partition(D, n);
  return top.has_value() && elements[poset.top] == *top;
}

BoundedPoset from_partitions(const std::vector<NEqualsPartition>& elements,
                             const Limits& limits) {
  return poset_from_leq(
      static_cast<int>(elements.size()),
      [&](int a, int b) { return refines(elements[a], elements[b]); }, limits);
}

PartitionLattice build_lattice(const ColoredSet& D, int n, const Limits& limits) {
  PartitionLattice L{D, normalized_n(D, n), enumerate_partitions(D, n, limits), {}};
  int size = static_cast<int>(L.elements.size());
  if (size > limits.max_poset_elements)
    throw resource_limit_error("lattice too large for an explicit order matrix");
  BoundedPoset& P = L.poset;
  P.size = size;
  P.leq.assign(size, std::vector<bool>(size, false));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) P.leq[a][b] = refines(L.elements[a], L.elements[b]);
  // Hasse edges come from the domain cover generator, not a transitive
  // reduction pass; the equivalence is asserted by tests
  P.covers_up.assign(size, {});
  for (int a = 0; a < size; ++a)
    for (const auto& J : covers_of(D, L.n, L.elements[a]))
      P.covers_up[a].push_back(L.id_of(J));
  finish_structure(P);
  return L;
}

InducedPoset interval(const BoundedPoset& P, int a, int b) {
  if (a < 0 || b < 0 || a >= P.size || b >= P.size || !P.leq[a][b])
    throw invalid_input_error("interval endpoints not ordered a <= b");
  InducedPoset S;
  for (int i = 0; i < P.size; ++i) {
    int x = P.topo[i];
    if (P.leq[a][x] && P.leq[x][b]) S.orig.push_back(x);
  }
  int size = static_cast<int>(S.orig.size());
  std::vector<int> local(P.size, -1);
  for (int i = 0; i < size; ++i) local[S.orig[i]] = i;
  BoundedPoset& Q = S.poset;
  Q.size = size;
  Q.leq.assign(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) Q.leq[i][j] = P.leq[S.orig[i]][S.orig[j]];
  // interval of a poset is convex, so covers restrict
  Q.covers_up.assign(size, {});
  for (int i = 0; i < size; ++i)
    for (int up : P.covers_up[S.orig[i]])
      if (local[up] >= 0 && P.leq[up][b]) Q.covers_up[i].push_back(local[up]);
  finish_structure(Q);
  return S;
}

InducedPoset down_set(const BoundedPoset& P, int x) { return interval(P, P.bottom, x); }

std::vector<PartitionLattice> product_decomposition(const ColoredSet& D, int n,
                                                    const NEqualsPartition& J,
                                                    const Limits& limits) {
  n = normalized_n(D, n);
  std::vector<PartitionLattice> out;
  for (uint32_t block : J.blocks) {
    std::vector<int> counts(D.colors(), 0);
    std::vector<int> members;
    for (int e = 0; e < D.total(); ++e)
      if (block & (uint32_t{1} << e)) {
        ++counts[D.color_of(e) - 1];
        members.push_back(e);
      }
    out.push_back(build_lattice(ColoredSet(counts), n, limits));
  }
  return out;
}

std::size_t OrderComplex::total() const {
  std::size_t t = 0;
  for (const auto& dim : simplices) t += dim.size();
  return t;
}

OrderComplex order_complex(const BoundedPoset& P, const Limits& limits) {
  OrderComplex C;
  std::vector<int> proper;
  for (int i = 0; i < P.size; ++i) {
    int x = P.topo[i];
    if (x != P.bottom && x != P.top) proper.push_back(x);
  }
  std::size_t count = 0;
  std::vector<int> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t i = from; i < proper.size(); ++i) {
      int x = proper[i];
      if (!chain.empty() && !P.less(chain.back(), x)) continue;
      chain.push_back(x);
      if (++count > limits.max_simplices)
        throw resource_limit_error("order complex exceeds the simplex budget");
      std::size_t dim = chain.size() - 1;
      if (C.simplices.size() <= dim) C.simplices.resize(dim + 1);
      C.simplices[dim].push_back(chain);
      extend(i + 1);
      chain.pop_back();
    }
  };
  extend(0);
  return C;
}

std::vector<std::vector<int>> maximal_chains(const BoundedPoset& P) {
  return maximal_chains(P, P.bottom, P.top);
}

std::vector<std::vector<int>> maximal_chains(const BoundedPoset& P, int a, int b) {
  if (!P.leq[a][b]) throw invalid_input_error("interval endpoints not ordered a <= b");
  std::vector<std::vector<int>> out;
  std::vector<int> chain{a};
  std::function<void()> extend = [&]() {
    if (chain.back() == b) {
      out.push_back(chain);
      return;
    }
    for (int up : P.covers_up[chain.back()])
      if (P.leq[up][b]) {
        chain.push_back(up);
        extend();
        chain.pop_back();
      }
  };
  extend();
  return out;
}

std::string hasse_dot(const PartitionLattice& L) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < L.poset.size; ++i)
    os << "  n" << i << " [label=\"" << describe(L.D, L.elements[i]) << "\"];\n";
  for (int a = 0; a < L.poset.size; ++a)
    for (int b : L.poset.covers_up[a]) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zcycles
