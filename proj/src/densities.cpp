#include "zcycles/densities.hpp"

#include <algorithm>
#include <numeric>

namespace zcycles {

namespace {

void check_degrees(const DensityParams& P, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != P.m)
    throw invalid_input_error("degree vector length must equal the color count m");
  for (int di : d)
    if (di < 0) throw invalid_input_error("degrees must be >= 0");
}

void require_even(const DensityParams& P) {
  if (!P.even_dim())
    throw invalid_input_error(
        "odd-dimensional X has no E2 machinery; use the symmetric-product route");
}

int jmax_of(const DensityParams& P, const std::vector<int>& d) {
  int jm = d.empty() ? 0 : *std::min_element(d.begin(), d.end()) / P.n;
  return jm;
}

}  // namespace

int DensityParams::r() const {
  if (X.dim % 2 != 0) throw invalid_input_error("dimension is odd; r undefined");
  return X.dim / 2;
}

int DensityParams::g() const { return 2 * r() * (mn() - 1) - 1; }

int DensityParams::weight_shift() const { return r() * (mn() - 1); }

DensityParams make_density_params(const ManifoldData& X, int m, int n) {
  if (m < 1 || n < 1) throw invalid_input_error("m and n must be >= 1");
  X.validate();
  DensityParams P{X, m, n};
  if (m == 1 && n == 1) P.n = 2;  // (1,1) and (1,2) give the same lattice
  return P;
}

BiGradedDims e2_dims(const DensityParams& P, const std::vector<int>& d) {
  require_even(P);
  check_degrees(P, d);
  const int g = P.g();
  const int r = P.r();
  const int total_d = std::accumulate(d.begin(), d.end(), 0);
  const int support = 2 * r * total_d;
  const int jmax = jmax_of(P, d);

  // kernel factor: Sym^j_gr of H^*(X) shifted to rows q = g; the p-degree of
  // an H^i class stays i, its parity becomes i+g
  GradedDims shifted;
  for (int i = 0; i < static_cast<int>(P.X.betti.size()); ++i)
    if (P.X.b(i) != 0) shifted[i] = P.X.b(i);
  // tracked series in (x = j, t = p); parity from i+g with g odd flips all
  Series2 kernel = one2(jmax, support);
  for (const auto& [i, dim] : shifted) {
    if ((i + g) % 2 == 0)
      kernel = mul(kernel, binomial_factor2(jmax, support, -1, 1, i, -dim));
    else
      kernel = mul(kernel, binomial_factor2(jmax, support, +1, 1, i, dim));
  }
  // per color: tracked symmetric powers of H^*(X)
  std::vector<Series2> colors;
  for (int c = 0; c < P.m; ++c) colors.push_back(sym_power_series(shifted, d[c], support));

  BiGradedDims out;
  for (int j = 0; j <= jmax; ++j) {
    Series1 slice = coefficient_of_x(kernel, j);
    for (int c = 0; c < P.m; ++c)
      slice = mul(slice, coefficient_of_x(colors[c], d[c] - P.n * j));
    int q = j * g;
    for (int p = 0; p <= slice.trunc; ++p) {
      if (slice[p] == 0) continue;
      if (p + q > support) continue;  // support bound from the theorem
      out[{p, q}] += static_cast<long>(slice[p].get_si());
    }
  }
  drop_zeros(out);
  return out;
}

Series1 poincare_Z_finite(const DensityParams& P, const std::vector<int>& d, int t_trunc) {
  BiGradedDims e2 = e2_dims(P, d);
  Series1 out(t_trunc);
  for (const auto& [pq, dim] : e2) {
    int total = pq.first + pq.second;
    if (total <= t_trunc) out[total] += dim;
  }
  return out;
}

Series1 poincare_via_sym(const DensityParams& P, const std::vector<int>& d, int t_trunc) {
  check_degrees(P, d);
  Series1 out = one1(t_trunc);
  for (int c = 0; c < P.m; ++c) out = mul(out, sym_product_poincare(P.X, d[c], t_trunc));
  return out;
}

Series1 limiting_density(const DensityParams& P, int t_trunc) {
  require_even(P);
  const int g = P.g();
  Series1 out = one1(t_trunc);
  for (int i = 0; i < static_cast<int>(P.X.betti.size()); ++i) {
    long bi = P.X.b(i);
    if (bi == 0) continue;
    // (1 - (-t)^{i+g})^{-(-1)^{i+g} b_i}
    int deg = i + g;
    int sign = deg % 2 == 0 ? -1 : +1;  // the sign of -(-t)^deg
    long expo = deg % 2 == 0 ? -bi : bi;
    out = mul(out, binomial_factor1(t_trunc, sign, deg, expo));
  }
  return out;
}

Series1 limiting_poincare(const DensityParams& P, int t_trunc) {
  Series1 out = limiting_density(P, t_trunc);
  Series1 stable = one1(t_trunc);
  for (int i = 1; i < static_cast<int>(P.X.betti.size()); ++i) {
    long bi = P.X.b(i);
    if (bi == 0) continue;
    int sign = i % 2 == 0 ? -1 : +1;
    long expo = i % 2 == 0 ? -bi : bi;
    stable = mul(stable, binomial_factor1(t_trunc, sign, i, expo));
  }
  for (int c = 0; c < P.m; ++c) out = mul(out, stable);
  return out;
}

Series1 density_finite(const DensityParams& P, const std::vector<int>& d, int t_trunc) {
  Series1 num = poincare_Z_finite(P, d, t_trunc);
  Series1 den = one1(t_trunc);
  for (int c = 0; c < P.m; ++c) den = mul(den, sym_product_poincare(P.X, d[c], t_trunc));
  return mul(num, reciprocal(den));
}

long euler_char_z(const DensityParams& P, const std::vector<int>& d) {
  if (!P.even_dim()) {
    // Z is homotopy equivalent to the product of symmetric products
    long chi = 1;
    for (int c = 0; c < P.m; ++c) {
      Series1 gf = binomial_factor1(std::max(1, d[c]), -1, 1, -P.X.euler());
      chi *= static_cast<long>(gf[d[c]].get_si());
    }
    return chi;
  }
  long chi = 0;
  for (const auto& [pq, dim] : e2_dims(P, d))
    chi += ((pq.first + pq.second) % 2 == 0) ? dim : -dim;
  return chi;
}

Series1 euler_gf(const DensityParams& P, int x_trunc) {
  long chi = P.X.euler();
  Series1 out = binomial_factor1(x_trunc, -1, P.mn(), chi);
  out = mul(out, binomial_factor1(x_trunc, -1, 1, -P.m * chi));
  return out;
}

Series1 euler_ratio(const DensityParams& P, int x_trunc) {
  return binomial_factor1(x_trunc, -1, P.mn(), P.X.euler());
}

Series1 euler_gf_from_e2(const DensityParams& P, int x_trunc) {
  Series1 out(x_trunc);
  // sum chi(Z^{d}) x^{|d|} over all degree vectors with |d| <= x_trunc
  std::vector<int> d(P.m, 0);
  while (true) {
    int total = std::accumulate(d.begin(), d.end(), 0);
    if (total <= x_trunc) out[total] += euler_char_z(P, d);
    // odometer over degree vectors with |d| <= x_trunc
    int c = 0;
    while (c < P.m) {
      if (std::accumulate(d.begin(), d.end(), 0) + 1 <= x_trunc) {
        ++d[c];
        break;
      }
      d[c] = 0;
      ++c;
    }
    if (c == P.m) break;
  }
  return out;
}

Series2 hd_Z_finite(const DensityParams& P, const std::vector<int>& d, int tu, int tv) {
  require_even(P);
  check_degrees(P, d);
  if (!P.X.has_hodge) throw invalid_input_error("manifold data has no Hodge numbers");
  const int g = P.g();
  const int s = P.weight_shift();
  const int jmax = jmax_of(P, d);

  Tracked2 kernel = tracked_one(jmax + 1, tu, tv);
  for (const auto& [key, h] : P.X.hodge) {
    if (h == 0) continue;
    auto [p, q, i] = key;
    if ((i + g) % 2 == 0)
      kernel = tracked_mul(kernel, tracked_binomial(jmax + 1, tu, tv, -1, p + s, q + s, -h));
    else
      kernel = tracked_mul(kernel, tracked_binomial(jmax + 1, tu, tv, +1, p + s, q + s, h));
  }
  Series2 out(tu, tv);
  for (int j = 0; j <= jmax; ++j) {
    Series2 slice = kernel.at(j);
    for (int c = 0; c < P.m; ++c)
      slice = mul(slice, sym_product_hd(P.X, d[c] - P.n * j, tu, tv));
    out = add(out, slice);
  }
  return out;
}

Series2 hd_density_finite(const DensityParams& P, const std::vector<int>& d, int tu, int tv) {
  Series2 num = hd_Z_finite(P, d, tu, tv);
  Series2 den = one2(tu, tv);
  for (int c = 0; c < P.m; ++c) den = mul(den, sym_product_hd(P.X, d[c], tu, tv));
  return mul(num, reciprocal(den));
}

Series2 hd_limit(const DensityParams& P, int tu, int tv) {
  require_even(P);
  if (!P.X.has_hodge) throw invalid_input_error("manifold data has no Hodge numbers");
  const int g = P.g();
  const int s = P.weight_shift();
  Series2 out = one2(tu, tv);
  for (const auto& [key, h] : P.X.hodge) {
    if (h == 0) continue;
    auto [p, q, i] = key;
    if ((i + g) % 2 == 0)
      out = mul(out, binomial_factor2(tu, tv, -1, p + s, q + s, -h));
    else
      out = mul(out, binomial_factor2(tu, tv, +1, p + s, q + s, h));
  }
  return out;
}

CoincidenceReport coincidence_report(const ManifoldData& X, int N_product, int t_trunc,
                                     const std::vector<FinitePairSpec>& pairs) {
  if (N_product < 2) throw invalid_input_error("coincidence needs a product m*n >= 2");
  CoincidenceReport rep;
  rep.N_product = N_product;
  for (int m = 1; m <= N_product; ++m) {
    if (N_product % m != 0) continue;
    int n = N_product / m;
    DensityParams P = make_density_params(X, m, n);
    rep.factorizations.push_back({m, n, limiting_density(P, t_trunc)});
  }
  rep.all_equal = true;
  for (std::size_t i = 1; i < rep.factorizations.size(); ++i)
    if (first_difference(rep.factorizations[0].density, rep.factorizations[i].density) >= 0)
      rep.all_equal = false;

  for (const auto& spec : pairs) {
    DensityParams P1 = make_density_params(X, spec.m1, spec.n1);
    DensityParams P2 = make_density_params(X, spec.m2, spec.n2);
    Series1 r1 = density_finite(P1, spec.d1, t_trunc);
    Series1 r2 = density_finite(P2, spec.d2, t_trunc);
    int diff = first_difference(r1, r2);
    rep.finite_pairs.push_back({spec, diff < 0 ? t_trunc : diff - 1});
  }
  return rep;
}

}  // namespace zcycles
