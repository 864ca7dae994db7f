#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "zcycles/common.hpp"

namespace zcycles {

// sparse element of a graded ring, basis index -> coefficient
using SparseElt = std::map<int, Rat>;
// sparse rank-k tensor, basis index tuple -> coefficient
using Tensor = std::map<std::vector<int>, Rat>;

struct RingBasisElement {
  std::string name;
  int degree = 0;
};

// rational cohomology ring of a compact orientable space plus the restriction
// map to an open piece, the input of the degeneration criterion
struct RingData {
  std::vector<RingBasisElement> basis;
  std::vector<std::vector<SparseElt>> products;  // products[a][b] = e_a e_b
  std::vector<Rat> trace;                        // T as a functional on the basis
  int top_degree = 0;
  int unit = 0;

  std::vector<RingBasisElement> target_basis;
  std::vector<std::vector<Rat>> restriction;  // target rows x source columns

  void validate() const;
  SparseElt mul_basis(const SparseElt& x, int b) const;
  SparseElt mul(const SparseElt& x, const SparseElt& y) const;
  Rat trace_of(const SparseElt& x) const;
  int index_of(const std::string& name) const;
};

RingData ring_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json ring_to_json(const RingData& ring);

RingData ring_point();
RingData ring_sphere2_to_c();          // S^2 restricting to C, omega -> 0
RingData ring_torus2_to_punctured();   // T^2 restricting to T^2 minus a point

// columns express each Poincare-dual basis vector in the e-basis,
// T(e_a cup dual[b]) = delta_ab; throws on a singular pairing
std::vector<SparseElt> dual_basis(const RingData& ring);

// sum over tuples of T(e_{i_1} ... e_{i_mn}) dual_{i_1} (x) ... (x) dual_{i_mn},
// expanded in the e-basis
Tensor kappa_element(const RingData& ring, int mn);

// kappa pushed through the restriction on every tensor factor
Tensor restricted_kappa(const RingData& ring, int mn);

// true iff restricted_kappa vanishes; then all Leray differentials vanish
bool degeneration_holds(const RingData& ring, int mn);

// transposition of factors pos, pos+1 with the Koszul sign
Tensor swap_adjacent(const RingData& ring, const Tensor& t, int pos);

std::string tensor_pretty(const Tensor& t, const std::vector<RingBasisElement>& basis);
nlohmann::ordered_json tensor_to_json(const Tensor& t, const std::vector<RingBasisElement>& basis);

}  // namespace zcycles
