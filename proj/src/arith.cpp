#include "zcycles/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace zcycles {

namespace {

long mod_norm(long v, long q) {
  long r = v % q;
  return r < 0 ? r + q : r;
}

long mod_inv(long a, long q) {
  // q prime, a != 0 mod q
  long t = 0, nt = 1, r = q, nr = mod_norm(a, q);
  while (nr != 0) {
    long qt = r / nr;
    long tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  return mod_norm(t, q);
}

void strip(FqPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

void check_field(const FqPoly& a, const FqPoly& b) {
  if (a.q != b.q) throw invalid_input_error("mixed moduli in polynomial arithmetic");
}

}  // namespace

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

FqPoly fq_poly(long q, std::vector<long> coeffs) {
  if (!is_prime(q)) throw invalid_input_error("modulus must be prime");
  FqPoly a{q, std::move(coeffs)};
  for (long& v : a.c) v = mod_norm(v, q);
  strip(a);
  return a;
}

FqPoly fq_add(const FqPoly& a, const FqPoly& b) {
  check_field(a, b);
  FqPoly out{a.q, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    long v = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    out.c[i] = mod_norm(v, a.q);
  }
  strip(out);
  return out;
}

FqPoly fq_sub(const FqPoly& a, const FqPoly& b) {
  check_field(a, b);
  FqPoly out{a.q, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    long v = (i < a.c.size() ? a.c[i] : 0) - (i < b.c.size() ? b.c[i] : 0);
    out.c[i] = mod_norm(v, a.q);
  }
  strip(out);
  return out;
}

FqPoly fq_mul(const FqPoly& a, const FqPoly& b) {
  check_field(a, b);
  if (a.is_zero() || b.is_zero()) return FqPoly{a.q, {}};
  FqPoly out{a.q, std::vector<long>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = mod_norm(out.c[i + j] + a.c[i] * b.c[j], a.q);
  strip(out);
  return out;
}

FqPoly fq_divmod(const FqPoly& a, const FqPoly& b, FqPoly* rem) {
  check_field(a, b);
  if (b.is_zero()) throw invalid_input_error("polynomial division by zero");
  FqPoly r = a;
  FqPoly quot{a.q, {}};
  if (a.degree() >= b.degree()) quot.c.assign(a.degree() - b.degree() + 1, 0);
  long inv_lead = mod_inv(b.c.back(), a.q);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    long f = mod_norm(r.c.back() * inv_lead, a.q);
    quot.c[shift] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[i + shift] = mod_norm(r.c[i + shift] - f * b.c[i], a.q);
    strip(r);
  }
  strip(quot);
  if (rem) *rem = r;
  return quot;
}

FqPoly fq_monic(const FqPoly& a) {
  if (a.is_zero()) return a;
  long inv = mod_inv(a.c.back(), a.q);
  FqPoly out = a;
  for (long& v : out.c) v = mod_norm(v * inv, a.q);
  return out;
}

FqPoly fq_gcd(const FqPoly& a, const FqPoly& b) {
  check_field(a, b);
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r;
    fq_divmod(x, y, &r);
    x = y;
    y = r;
  }
  return fq_monic(x);
}

FqPoly fq_derivative(const FqPoly& a) {
  FqPoly out{a.q, {}};
  if (a.degree() < 1) return out;
  out.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    out.c[i - 1] = mod_norm(a.c[i] * static_cast<long>(i % a.q), a.q);
  strip(out);
  return out;
}

FqPoly fq_qth_root(const FqPoly& a) {
  // over the prime field, (sum a_i t^i)^q = sum a_i t^{iq}
  FqPoly out{a.q, {}};
  if (a.is_zero()) return out;
  if (a.degree() % a.q != 0) throw invalid_input_error("not a q-th power");
  out.c.assign(a.degree() / a.q + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i % a.q == 0)
      out.c[i / a.q] = a.c[i];
    else if (a.c[i] != 0)
      throw invalid_input_error("not a q-th power");
  }
  return out;
}

std::string fq_str(const FqPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i >= 1) os << (a.c[i] != 1 ? "*t" : "t");
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::map<int, FqPoly> squarefree_decomposition(const FqPoly& f) {
  if (f.is_zero()) throw invalid_input_error("squarefree decomposition of zero");
  std::map<int, FqPoly> out;
  FqPoly g = fq_monic(f);
  if (g.degree() == 0) return out;
  const long p = f.q;
  FqPoly d = fq_derivative(g);
  if (d.is_zero()) {
    for (const auto& [k, v] : squarefree_decomposition(fq_qth_root(g)))
      out[k * static_cast<int>(p)] = v;
    return out;
  }
  FqPoly c = fq_gcd(g, d);
  FqPoly w = fq_divmod(g, c);
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = fq_gcd(w, c);
    FqPoly z = fq_divmod(w, y);
    if (z.degree() > 0) out[i] = z;
    c = fq_divmod(c, y);
    w = y;
    ++i;
  }
  // the leftover carries every factor whose multiplicity is divisible by p
  if (c.degree() > 0)
    for (const auto& [k, v] : squarefree_decomposition(fq_qth_root(c)))
      out[k * static_cast<int>(p)] = v;
  return out;
}

int max_multiplicity(const FqPoly& f) {
  auto parts = squarefree_decomposition(f);
  return parts.empty() ? 0 : parts.rbegin()->first;
}

bool relatively_n_prime(const std::vector<FqPoly>& tuple, int n) {
  if (tuple.empty()) throw invalid_input_error("empty tuple");
  if (n < 1) throw invalid_input_error("n must be >= 1");
  FqPoly g = tuple[0];
  for (std::size_t i = 1; i < tuple.size(); ++i) g = fq_gcd(g, tuple[i]);
  if (g.degree() <= 0) return true;
  return max_multiplicity(g) < n;
}

FqRatioResult nprime_ratio_fq(long q, int m, int n, const std::vector<int>& degrees,
                              const Limits& lim) {
  if (!is_prime(q)) throw invalid_input_error("q must be prime");
  if (m < 1 || static_cast<int>(degrees.size()) != m)
    throw invalid_input_error("need one degree per tuple entry");
  if (n < 1) throw invalid_input_error("n must be >= 1");
  long total_deg = 0;
  for (int d : degrees) {
    if (d < 0) throw invalid_input_error("degrees must be >= 0");
    total_deg += d;
  }
  Int total = 1;
  for (long i = 0; i < total_deg; ++i) total *= q;
  if (total > lim.max_fq_tuples)
    throw resource_limit_error("enumeration budget max_fq_tuples exceeded");

  // odometer over the free coefficients of every tuple entry
  std::vector<FqPoly> tuple(m);
  for (int i = 0; i < m; ++i) {
    tuple[i].q = q;
    tuple[i].c.assign(degrees[i] + 1, 0);
    tuple[i].c[degrees[i]] = 1;
  }
  Int count = 0;
  while (true) {
    if (relatively_n_prime(tuple, n)) ++count;
    int entry = 0, pos = 0;
    while (entry < m) {
      if (pos < degrees[entry]) {
        if (++tuple[entry].c[pos] < q) break;
        tuple[entry].c[pos] = 0;
        ++pos;
      } else {
        ++entry;
        pos = 0;
      }
    }
    if (entry == m) break;
  }
  return {total, count, Rat(count) / Rat(total)};
}

IntDensityResult nprime_density_integers(int m, int n, const Int& bound) {
  if (m < 1 || n < 1) throw invalid_input_error("m and n must be >= 1");
  if (bound < 1) throw invalid_input_error("bound must be >= 1");
  Int root;
  mpz_root(root.get_mpz_t(), bound.get_mpz_t(), n);
  long top = root.get_si();

  // mu via smallest-prime-factor sieve up to bound^(1/n)
  std::vector<int> mu(top + 1, 1);
  std::vector<bool> composite(top + 1, false);
  std::vector<long> primes;
  for (long v = 2; v <= top; ++v) {
    if (!composite[v]) {
      primes.push_back(v);
      mu[v] = -1;
    }
    for (long p : primes) {
      if (v * p > top) break;
      composite[v * p] = true;
      if (v % p == 0) {
        mu[v * p] = 0;
        break;
      }
      mu[v * p] = -mu[v];
    }
  }

  Int count = 0;
  for (long b = 1; b <= top; ++b) {
    if (mu[b] == 0) continue;
    Int bn = 1;
    for (int e = 0; e < n; ++e) bn *= b;
    Int inner;
    mpz_fdiv_q(inner.get_mpz_t(), bound.get_mpz_t(), bn.get_mpz_t());
    Int term = 1;
    for (int e = 0; e < m; ++e) term *= inner;
    count += mu[b] * term;
  }
  Int total = 1;
  for (int e = 0; e < m; ++e) total *= bound;
  return {total, count, Rat(count) / Rat(total)};
}

Int nprime_count_bruteforce(int m, int n, long bound) {
  if (m < 1 || n < 1 || bound < 1) throw invalid_input_error("bad brute-force parameters");
  double size = std::pow(static_cast<double>(bound), m);
  if (size > 2e7) throw resource_limit_error("brute-force budget exceeded");
  std::vector<long> tuple(m, 1);
  Int count = 0;
  while (true) {
    bool ok = true;
    for (long b = 2;; ++b) {
      Int bn = 1;
      for (int e = 0; e < n; ++e) bn *= b;
      if (bn > bound) break;
      long bnl = bn.get_si();
      bool divides_all = true;
      for (long a : tuple)
        if (a % bnl != 0) {
          divides_all = false;
          break;
        }
      if (divides_all) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < m) {
      if (++tuple[pos] <= bound) break;
      tuple[pos] = 1;
      ++pos;
    }
    if (pos == m) break;
  }
  return count;
}

RatInterval zeta_enclosure(int s, long terms) {
  if (s < 2) throw invalid_input_error("zeta enclosure needs s >= 2");
  if (terms < 1) throw invalid_input_error("need at least one term");
  Rat partial(0);
  for (long k = 1; k <= terms; ++k) {
    Int ks = 1;
    for (int e = 0; e < s; ++e) ks *= k;
    partial += Rat(1) / Rat(ks);
  }
  // explicit Rat return: a deduced type would be a gmpxx expression template
  // referencing locals
  auto tail_from = [&](long start) -> Rat {
    // integral of x^(-s) from start: start^(1-s)/(s-1)
    Int pw = 1;
    for (int e = 0; e < s - 1; ++e) pw *= start;
    return Rat(1) / (Rat(pw) * Rat(s - 1));
  };
  return {partial + tail_from(terms + 1), partial + tail_from(terms)};
}

RatInterval zeta_inverse_enclosure(int s, long terms) {
  RatInterval z = zeta_enclosure(s, terms);
  return {Rat(1) / z.hi, Rat(1) / z.lo};
}

Rat zeta_inverse_fq(long q, int s) {
  if (!is_prime(q)) throw invalid_input_error("q must be prime");
  if (s < 2) throw invalid_input_error("s must be >= 2");
  Int pw = 1;
  for (int e = 0; e < s - 1; ++e) pw *= q;
  return Rat(1) - Rat(1) / Rat(pw);
}

}  // namespace zcycles
