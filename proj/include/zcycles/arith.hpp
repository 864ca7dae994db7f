#pragma once

#include <map>
#include <string>
#include <vector>

#include "zcycles/common.hpp"

namespace zcycles {

// polynomial over the prime field F_q, coefficient c[i] at t^i, no trailing
// zeros; the empty vector is the zero polynomial
struct FqPoly {
  long q = 2;
  std::vector<long> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const FqPoly& o) const { return q == o.q && c == o.c; }
};

bool is_prime(long q);

FqPoly fq_poly(long q, std::vector<long> coeffs);
FqPoly fq_add(const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const FqPoly& a, const FqPoly& b);
// quotient; remainder written through rem if non-null
FqPoly fq_divmod(const FqPoly& a, const FqPoly& b, FqPoly* rem = nullptr);
FqPoly fq_monic(const FqPoly& a);
FqPoly fq_gcd(const FqPoly& a, const FqPoly& b);  // monic
FqPoly fq_derivative(const FqPoly& a);
// inverse of the Frobenius h -> h^q; input must be a q-th power
FqPoly fq_qth_root(const FqPoly& a);
std::string fq_str(const FqPoly& a);

// multiplicity -> product of the irreducible factors with exactly that
// multiplicity (monic, non-constant entries only)
std::map<int, FqPoly> squarefree_decomposition(const FqPoly& f);
int max_multiplicity(const FqPoly& f);

// no non-constant b with b^n dividing every entry
bool relatively_n_prime(const std::vector<FqPoly>& tuple, int n);

struct FqRatioResult {
  Int total;
  Int count;
  Rat ratio;
};
// exact count over all m-tuples of monic polynomials with the given degrees
FqRatioResult nprime_ratio_fq(long q, int m, int n, const std::vector<int>& degrees,
                              const Limits& lim = default_limits());

struct IntDensityResult {
  Int total;
  Int count;
  Rat density;
};
// Mobius-sieve count of relatively n-prime m-tuples in [1, bound]^m
IntDensityResult nprime_density_integers(int m, int n, const Int& bound);
// direct tuple enumeration, small inputs only (test oracle)
Int nprime_count_bruteforce(int m, int n, long bound);

struct RatInterval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  Rat width() const { return hi - lo; }
};
// certified enclosure from the partial sum plus integral tail bounds
RatInterval zeta_enclosure(int s, long terms = 1000);
RatInterval zeta_inverse_enclosure(int s, long terms = 1000);
// zeta inverse for the affine line over F_q: 1 - q^{1-s}
Rat zeta_inverse_fq(long q, int s);

}  // namespace zcycles
