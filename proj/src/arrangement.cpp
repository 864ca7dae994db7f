#include "zcycles/arrangement.hpp"

#include <algorithm>

namespace zcycles {

namespace {

// one summand of the arrangement lattice: down set complex with enough
// structure to trace poset automorphisms on reduced homology
struct SummandData {
  InducedPoset sub;
  std::vector<int> local;  // parent id -> sub id (or -1)
  OrderComplex complex;
  std::vector<std::map<std::vector<int>, int>> index;  // simplex -> position, per dim
  std::vector<EchelonBasis> image;  // image[k+1] = basis of im(C_{k+1} -> C_k)
  int top_dim = -1;
};

SummandData make_summand(const BoundedPoset& P, int x, const Limits& limits) {
  SummandData S;
  S.sub = down_set(P, x);
  S.local.assign(P.size, -1);
  for (std::size_t i = 0; i < S.sub.orig.size(); ++i)
    S.local[S.sub.orig[i]] = static_cast<int>(i);
  if (S.sub.poset.size <= 1) return S;
  S.complex = order_complex(S.sub.poset, limits);
  S.top_dim = static_cast<int>(S.complex.simplices.size()) - 1;
  S.index.resize(S.top_dim + 1);
  for (int k = 0; k <= S.top_dim; ++k)
    for (std::size_t i = 0; i < S.complex.simplices[k].size(); ++i)
      S.index[k].emplace(S.complex.simplices[k][i], static_cast<int>(i));
  // image[k+1] holds a basis of B_{k} = im(C_{k+1} -> C_k), k = -1..top
  S.image.resize(S.top_dim + 2);
  for (int k = 0; k <= S.top_dim + 1; ++k) {
    EchelonBasis basis;
    for (auto& col : boundary_columns(S.complex, k)) basis.insert(std::move(col));
    S.image[k] = std::move(basis);
  }
  return S;
}

// trace of the permutation (simplex relabeling) on an echelonized subspace
Rat trace_on_subspace(const EchelonBasis& basis, const std::vector<int>& simplex_perm) {
  Rat tr(0);
  const auto& vecs = basis.vectors();
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    SparseQVec image;
    for (const auto& [i, v] : vecs[j]) image[simplex_perm[i]] = v;
    auto c = basis.coords(std::move(image));
    if (!c) throw invalid_input_error("boundary image not stable under the group action");
    tr += (*c)[j];
  }
  return tr;
}

// traces of g on reduced homology of the down set, by degree
std::map<int, Rat> homology_traces(const SummandData& S,
                                   const std::vector<int>& parent_perm) {
  std::map<int, Rat> tr;
  if (S.sub.poset.size == 1) {
    tr[-2] = 1;  // the one element poset carries its conventional class
    return tr;
  }
  // permutation of sub ids, then of simplices per dimension
  int size = S.sub.poset.size;
  std::vector<int> sub_perm(size);
  for (int i = 0; i < size; ++i) sub_perm[i] = S.local[parent_perm[S.sub.orig[i]]];

  std::vector<std::vector<int>> simplex_perm(S.top_dim + 1);
  std::vector<long> fixed(S.top_dim + 1, 0);
  for (int k = 0; k <= S.top_dim; ++k) {
    const auto& slice = S.complex.simplices[k];
    simplex_perm[k].resize(slice.size());
    for (std::size_t i = 0; i < slice.size(); ++i) {
      std::vector<int> image;
      for (int v : slice[i]) image.push_back(sub_perm[v]);
      std::sort(image.begin(), image.end(),
                [&](int a, int b) { return S.sub.poset.topo_pos[a] < S.sub.poset.topo_pos[b]; });
      int to = S.index[k].at(image);
      simplex_perm[k][i] = to;
      if (to == static_cast<int>(i)) ++fixed[k];
    }
  }
  // tr on B_k = im(C_{k+1} -> C_k); B_{-1} uses the trivial one-point perm
  auto trace_B = [&](int k) -> Rat {
    if (k + 1 < 0 || k + 1 > S.top_dim + 1) return Rat(0);
    if (k + 1 > S.top_dim) return Rat(0);  // no (k+1)-simplices
    if (k == -1) return Rat(S.image[0].rank());  // the empty simplex is fixed
    return trace_on_subspace(S.image[k + 1], simplex_perm[k]);
  };
  // reduced H_k: tr = tr(C_k) - tr(B_{k-1}) - tr(B_k)
  tr[-1] = Rat(1) - trace_B(-1);
  for (int k = 0; k <= S.top_dim; ++k) tr[k] = Rat(fixed[k]) - trace_B(k - 1) - trace_B(k);
  return tr;
}

}  // namespace

ArrangementSpec::ArrangementSpec(ColoredSet d, int n_, int N)
    : D(std::move(d)), n(normalized_n(D, n_)), ambient_dim(N) {
  if (N < 2) throw invalid_input_error("ambient dimension must be >= 2");
}

GradedDims ordered_cohomology_dims(const ArrangementSpec& spec, bool use_oracle,
                                   const Limits& limits) {
  GradedDims out;
  if (use_oracle) {
    PartitionLattice L = build_lattice(spec.D, spec.n, limits);
    for (int x = 0; x < L.poset.size; ++x) {
      GradedDims dims = reduced_homology(down_set(L.poset, x).poset, limits);
      int cd = codim(spec.D, L.elements[x]);
      for (const auto& [k, dim] : dims) out[spec.ambient_dim * cd - k - 2] += dim;
    }
  } else {
    LabelledLattice L = build_labelled_lattice(spec.D, spec.n, limits);
    for (int x = 0; x < L.lat.poset.size; ++x) {
      GradedDims dims = homology_via_falling_chains(L, L.lat.poset.bottom, x);
      int cd = codim(spec.D, L.lat.elements[x]);
      for (const auto& [k, dim] : dims) out[spec.ambient_dim * cd - k - 2] += dim;
    }
  }
  drop_zeros(out);
  return out;
}

int block_permutation_character(const ColoredSet& D, const SymmetryGroupElement& g,
                                const NEqualsPartition& I, int ambient_dim) {
  int s = block_permutation_sign(D, g, I);
  return ambient_dim % 2 == 0 ? 1 : s;
}

int orientation_character(const ColoredSet& D, const SymmetryGroupElement& g,
                          const NEqualsPartition& I, int ambient_dim) {
  int ambient = ambient_dim % 2 == 0 ? 1 : g.sign();
  return ambient * block_permutation_character(D, g, I, ambient_dim);
}

GradedDims invariant_dims(const ArrangementSpec& spec, const Limits& limits) {
  PartitionLattice L = build_lattice(spec.D, spec.n, limits);
  auto group = enumerate_symmetry_group(spec.D, limits);
  const int size = L.poset.size;

  std::vector<SummandData> summands;
  summands.reserve(size);
  for (int x = 0; x < size; ++x) summands.push_back(make_summand(L.poset, x, limits));

  std::map<int, Rat> acc;
  for (const auto& g : group) {
    std::vector<int> parent_perm(size);
    for (int x = 0; x < size; ++x) parent_perm[x] = L.id_of(apply(spec.D, g, L.elements[x]));
    for (int x = 0; x < size; ++x) {
      if (parent_perm[x] != x) continue;  // only fixed summands contribute
      int chi = orientation_character(spec.D, g, L.elements[x], spec.ambient_dim);
      int cd = codim(spec.D, L.elements[x]);
      for (const auto& [k, t] : homology_traces(summands[x], parent_perm))
        acc[spec.ambient_dim * cd - k - 2] += Rat(chi) * t;
    }
  }
  GradedDims out;
  Rat order(static_cast<long>(group.size()));
  for (const auto& [deg, total] : acc) {
    Rat avg = total / order;
    if (avg.get_den() != 1)
      throw invalid_input_error("Burnside average is not an integer (trace bug)");
    long v = avg.get_num().get_si();
    if (v != 0) out[deg] = v;
  }
  return out;
}

}  // namespace zcycles
