#include "zcycles/homology.hpp"

#include <algorithm>
#include <map>

namespace zcycles {

namespace {

// index of each simplex inside its dimension slice
std::map<std::vector<int>, int> index_of(const OrderComplex& C, int dim) {
  std::map<std::vector<int>, int> idx;
  if (dim < 0 || dim >= static_cast<int>(C.simplices.size())) return idx;
  const auto& slice = C.simplices[dim];
  for (std::size_t i = 0; i < slice.size(); ++i) idx.emplace(slice[i], static_cast<int>(i));
  return idx;
}

template <typename Vec, typename Num>
std::vector<Vec> boundary_impl(const OrderComplex& C, int k) {
  std::vector<Vec> cols;
  if (k < 0 || k >= static_cast<int>(C.simplices.size())) return cols;
  if (k == 0) {
    // augmentation: every vertex maps to the empty simplex
    cols.assign(C.simplices[0].size(), Vec{{0, Num(1)}});
    return cols;
  }
  auto faces = index_of(C, k - 1);
  for (const auto& simplex : C.simplices[k]) {
    Vec col;
    std::vector<int> face(simplex.size() - 1);
    for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
      face.clear();
      for (std::size_t j = 0; j < simplex.size(); ++j)
        if (j != drop) face.push_back(simplex[j]);
      col.emplace(faces.at(face), Num(drop % 2 == 0 ? 1 : -1));
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::vector<SparseQVec> boundary_columns(const OrderComplex& C, int k) {
  return boundary_impl<SparseQVec, Rat>(C, k);
}

std::vector<SparseZVec> boundary_columns_integral(const OrderComplex& C, int k) {
  return boundary_impl<SparseZVec, Int>(C, k);
}

GradedDims reduced_homology(const BoundedPoset& P, const Limits& limits) {
  GradedDims out;
  if (P.size == 0) return out;
  if (P.size == 1) {
    out[-2] = 1;  // convention for the one element poset
    return out;
  }
  OrderComplex C = order_complex(P, limits);
  int top = static_cast<int>(C.simplices.size());  // dims 0..top-1 present
  std::vector<long> cells(top + 1, 0), ranks(top + 2, 0);
  for (int k = 0; k < top; ++k) cells[k] = static_cast<long>(C.simplices[k].size());
  for (int k = 0; k <= top; ++k) ranks[k] = rank_rational(boundary_columns(C, k));
  // augmented complex: C_{-1} is one dimensional
  long h_empty = 1 - ranks[0];
  if (h_empty != 0) out[-1] = h_empty;
  for (int k = 0; k < top; ++k) {
    long h = cells[k] - ranks[k] - ranks[k + 1];
    if (h != 0) out[k] = h;
  }
  return out;
}

TorsionReport integral_torsion_check(const BoundedPoset& P, const Limits& limits) {
  TorsionReport rep;
  if (P.size == 0) return rep;
  if (P.size == 1) {
    rep.dims[-2] = 1;
    return rep;
  }
  OrderComplex C = order_complex(P, limits);
  int top = static_cast<int>(C.simplices.size());
  std::vector<long> cells(top + 1, 0), ranks(top + 2, 0);
  for (int k = 0; k < top; ++k) cells[k] = static_cast<long>(C.simplices[k].size());
  for (int k = 0; k <= top; ++k) {
    auto cols = boundary_columns_integral(C, k);
    // rows of the transpose are the columns; SNF is transpose invariant
    std::vector<SparseZVec> rows(cols.begin(), cols.end());
    auto div = smith_divisors(std::move(rows));
    ranks[k] = static_cast<long>(div.size());
    if (!all_units(div)) rep.torsion_free = false;
    if (!div.empty()) rep.divisors[k] = std::move(div);
  }
  long h_empty = 1 - ranks[0];
  if (h_empty != 0) rep.dims[-1] = h_empty;
  for (int k = 0; k < top; ++k) {
    long h = cells[k] - ranks[k] - ranks[k + 1];
    if (h != 0) rep.dims[k] = h;
  }
  return rep;
}

GradedDims convolve(const std::vector<GradedDims>& factors) {
  GradedDims acc{{0, 1}};
  for (const auto& f : factors) {
    GradedDims next;
    for (const auto& [da, ca] : acc)
      for (const auto& [db, cb] : f) next[da + db] += ca * cb;
    drop_zeros(next);
    acc = std::move(next);
  }
  return acc;
}

KunnethReport kunneth_rank_check(const ColoredSet& D, int n, const NEqualsPartition& I,
                                 const Limits& limits) {
  return kunneth_rank_check(build_lattice(D, n, limits), I, limits);
}

KunnethReport kunneth_rank_check(const PartitionLattice& L, const NEqualsPartition& I,
                                 const Limits& limits) {
  KunnethReport rep;
  rep.block_count = I.block_count();
  InducedPoset sub = down_set(L.poset, L.id_of(I));
  rep.down_set_dims = reduced_homology(sub.poset, limits);

  std::vector<GradedDims> factors;
  for (const auto& F : product_decomposition(L.D, L.n, I, limits))
    factors.push_back(reduced_homology(F.poset, limits));
  GradedDims conv = convolve(factors);
  // H~_{k+2(l-1)} of the down set matches the degree-k convolution
  int shift = 2 * (rep.block_count - 1);
  for (const auto& [k, dim] : conv) rep.product_dims[k + shift] = dim;
  drop_zeros(rep.product_dims);
  rep.ok = rep.product_dims == rep.down_set_dims;
  return rep;
}

}  // namespace zcycles
