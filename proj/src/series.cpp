#include "zcycles/series.hpp"

#include <algorithm>
#include <sstream>

namespace zcycles {

namespace {

void require_same1(const Series1& a, const Series1& b) {
  if (a.trunc != b.trunc) throw invalid_input_error("series truncation mismatch");
}

void require_same2(const Series2& a, const Series2& b) {
  if (a.tu != b.tu || a.tv != b.tv) throw invalid_input_error("series truncation mismatch");
}

// binomial coefficient C(n, k) for small k
Int binom(long n, long k) {
  Int r(1);
  for (long i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

}  // namespace

Series1 one1(int trunc) {
  Series1 s(trunc);
  s[0] = 1;
  return s;
}

Series1 monomial1(int trunc, int deg, const Int& coeff) {
  Series1 s(trunc);
  if (deg <= trunc) s[deg] = coeff;
  return s;
}

Series1 add(const Series1& a, const Series1& b) {
  require_same1(a, b);
  Series1 r(a.trunc);
  for (int k = 0; k <= a.trunc; ++k) r[k] = a[k] + b[k];
  return r;
}

Series1 sub(const Series1& a, const Series1& b) {
  require_same1(a, b);
  Series1 r(a.trunc);
  for (int k = 0; k <= a.trunc; ++k) r[k] = a[k] - b[k];
  return r;
}

Series1 mul(const Series1& a, const Series1& b) {
  require_same1(a, b);
  Series1 r(a.trunc);
  for (int i = 0; i <= a.trunc; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.trunc; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series1 pow(const Series1& a, long e) {
  if (e < 0) return pow(reciprocal(a), -e);
  Series1 r = one1(a.trunc), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Series1 reciprocal(const Series1& a) {
  if (a[0] != 1 && a[0] != -1)
    throw invalid_input_error("series reciprocal needs constant coefficient +-1");
  Series1 r(a.trunc);
  r[0] = a[0];  // 1/(+-1)
  for (int k = 1; k <= a.trunc; ++k) {
    Int s(0);
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s * a[0];
  }
  return r;
}

Series1 binomial_factor1(int trunc, int sign, int deg, long e) {
  if (deg <= 0) throw invalid_input_error("binomial factor needs positive degree");
  Series1 r(trunc);
  if (e >= 0) {
    for (long j = 0; j * deg <= trunc && j <= e; ++j) {
      Int coeff = binom(e, j);
      if (sign < 0 && j % 2 == 1) coeff = -coeff;
      r[static_cast<int>(j * deg)] = coeff;
    }
  } else {
    long k = -e;
    for (long j = 0; j * deg <= trunc; ++j) {
      Int coeff = binom(k - 1 + j, j);
      if (sign > 0 && j % 2 == 1) coeff = -coeff;
      r[static_cast<int>(j * deg)] = coeff;
    }
  }
  return r;
}

bool equal_through(const Series1& a, const Series1& b, int order) {
  if (order > a.trunc || order > b.trunc)
    throw invalid_input_error("comparison order beyond truncation");
  for (int k = 0; k <= order; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

int first_difference(const Series1& a, const Series1& b) {
  int shared = std::min(a.trunc, b.trunc);
  for (int k = 0; k <= shared; ++k)
    if (a[k] != b[k]) return k;
  return -1;
}

std::string pretty(const Series1& s, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.trunc; ++k) {
    if (s[k] == 0) continue;
    Int a = s[k];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << s.trunc + 1 << ")";
  return os.str();
}

Series2 one2(int tu, int tv) {
  Series2 s(tu, tv);
  s.at(0, 0) = 1;
  return s;
}

Series2 add(const Series2& a, const Series2& b) {
  require_same2(a, b);
  Series2 r(a.tu, a.tv);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Series2 sub(const Series2& a, const Series2& b) {
  require_same2(a, b);
  Series2 r(a.tu, a.tv);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Series2 mul(const Series2& a, const Series2& b) {
  require_same2(a, b);
  Series2 r(a.tu, a.tv);
  for (int ui = 0; ui <= a.tu; ++ui)
    for (int vi = 0; vi <= a.tv; ++vi) {
      if (a.at(ui, vi) == 0) continue;
      for (int uj = 0; ui + uj <= a.tu; ++uj)
        for (int vj = 0; vi + vj <= a.tv; ++vj) {
          if (b.at(uj, vj) == 0) continue;
          r.at(ui + uj, vi + vj) += a.at(ui, vi) * b.at(uj, vj);
        }
    }
  return r;
}

Series2 reciprocal(const Series2& a) {
  if (a.at(0, 0) != 1 && a.at(0, 0) != -1)
    throw invalid_input_error("series reciprocal needs constant coefficient +-1");
  Series2 r(a.tu, a.tv);
  Int c0 = a.at(0, 0);
  // solve a*r = 1 coefficient by coefficient in graded-lex order
  for (int u = 0; u <= a.tu; ++u)
    for (int v = 0; v <= a.tv; ++v) {
      Int s = (u == 0 && v == 0) ? Int(1) : Int(0);
      for (int i = 0; i <= u; ++i)
        for (int j = 0; j <= v; ++j) {
          if (i == 0 && j == 0) continue;
          if (a.at(i, j) == 0) continue;
          s -= a.at(i, j) * r.at(u - i, v - j);
        }
      r.at(u, v) = s * c0;
    }
  return r;
}

Series2 binomial_factor2(int tu, int tv, int sign, int du, int dv, long e) {
  if (du <= 0 && dv <= 0) throw invalid_input_error("binomial factor needs a positive degree");
  Series2 r(tu, tv);
  auto put = [&](long j, Int coeff) {
    long u = j * du, v = j * dv;
    if (u <= tu && v <= tv) r.at(static_cast<int>(u), static_cast<int>(v)) = coeff;
  };
  long jmax_u = du > 0 ? tu / du : std::max(tu, tv);
  long jmax_v = dv > 0 ? tv / dv : std::max(tu, tv);
  long jmax = std::min(jmax_u, jmax_v);
  if (e >= 0) {
    for (long j = 0; j <= std::min(jmax, e); ++j) {
      Int coeff = binom(e, j);
      if (sign < 0 && j % 2 == 1) coeff = -coeff;
      put(j, coeff);
    }
  } else {
    long k = -e;
    for (long j = 0; j <= jmax; ++j) {
      Int coeff = binom(k - 1 + j, j);
      if (sign > 0 && j % 2 == 1) coeff = -coeff;
      put(j, coeff);
    }
  }
  return r;
}

bool equal_through_total(const Series2& a, const Series2& b, int total_degree) {
  for (int u = 0; u <= std::min(a.tu, b.tu); ++u)
    for (int v = 0; v <= std::min(a.tv, b.tv); ++v)
      if (u + v <= total_degree && a.at(u, v) != b.at(u, v)) return false;
  return true;
}

std::string pretty(const Series2& s, const std::string& u, const std::string& v) {
  std::ostringstream os;
  bool first = true;
  for (int total = 0; total <= s.tu + s.tv; ++total)
    for (int ui = 0; ui <= std::min(total, s.tu); ++ui) {
      int vi = total - ui;
      if (vi > s.tv || s.at(ui, vi) == 0) continue;
      Int a = s.at(ui, vi);
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      Int mag = abs(a);
      if (mag != 1 || (ui == 0 && vi == 0)) os << mag.get_str();
      if (ui > 0) {
        os << u;
        if (ui > 1) os << "^" << ui;
      }
      if (vi > 0) {
        os << v;
        if (vi > 1) os << "^" << vi;
      }
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

Tracked2 tracked_one(int klen, int tu, int tv) {
  Tracked2 t(klen, Series2(tu, tv));
  t[0] = one2(tu, tv);
  return t;
}

Tracked2 tracked_mul(const Tracked2& a, const Tracked2& b) {
  Tracked2 r(a.size(), Series2(a[0].tu, a[0].tv));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j)
      r[i + j] = add(r[i + j], mul(a[i], b[j]));
  return r;
}

Tracked2 tracked_binomial(int klen, int tu, int tv, int sign, int du, int dv, long e) {
  Tracked2 r(klen, Series2(tu, tv));
  for (long j = 0; j < klen; ++j) {
    Int coeff;
    if (e >= 0) {
      if (j > e) break;
      coeff = binom(e, j);
      if (sign < 0 && j % 2 == 1) coeff = -coeff;
    } else {
      coeff = binom(-e - 1 + j, j);
      if (sign > 0 && j % 2 == 1) coeff = -coeff;
    }
    long uu = j * du, vv = j * dv;
    if (uu <= tu && vv <= tv) r[j].at(static_cast<int>(uu), static_cast<int>(vv)) = coeff;
  }
  return r;
}

long ManifoldData::b(int i) const {
  if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
  return betti[i];
}

long ManifoldData::euler() const {
  long chi = 0;
  for (int i = 0; i < static_cast<int>(betti.size()); ++i)
    chi += (i % 2 == 0) ? betti[i] : -betti[i];
  return chi;
}

void ManifoldData::validate() const {
  if (dim < 0) throw invalid_input_error("manifold dimension must be >= 0");
  if (betti.empty() || betti[0] != 1)
    throw invalid_input_error("manifold data needs b_0 = 1 (connected)");
  if (static_cast<int>(betti.size()) > dim + 1)
    throw invalid_input_error("betti numbers above the dimension");
  for (long bi : betti)
    if (bi < 0) throw invalid_input_error("betti numbers must be >= 0");
  if (has_hodge) {
    std::map<int, long> row;
    for (const auto& [key, h] : hodge) {
      auto [p, q, i] = key;
      if (p < 0 || q < 0 || i < 0 || h < 0)
        throw invalid_input_error("hodge entries must be nonnegative");
      row[i] += h;
    }
    for (int i = 0; i <= dim; ++i)
      if (row.count(i) ? row[i] != b(i) : b(i) != 0)
        throw invalid_input_error("hodge numbers of H^" + std::to_string(i) +
                                  " do not sum to the Betti number");
  }
}

ManifoldData manifold_affine_line() {
  ManifoldData X;
  X.dim = 2;
  X.betti = {1};
  X.hodge[{0, 0, 0}] = 1;
  X.has_hodge = true;
  return X;
}

ManifoldData manifold_punctured_line() {
  ManifoldData X;
  X.dim = 2;
  X.betti = {1, 1};
  X.hodge[{0, 0, 0}] = 1;
  X.hodge[{1, 1, 1}] = 1;
  X.has_hodge = true;
  return X;
}

ManifoldData manifold_sphere2() {
  ManifoldData X;
  X.dim = 2;
  X.betti = {1, 0, 1};
  X.hodge[{0, 0, 0}] = 1;
  X.hodge[{1, 1, 2}] = 1;
  X.has_hodge = true;
  return X;
}

ManifoldData manifold_torus2() {
  ManifoldData X;
  X.dim = 2;
  X.betti = {1, 2, 1};
  X.hodge[{0, 0, 0}] = 1;
  X.hodge[{1, 0, 1}] = 1;
  X.hodge[{0, 1, 1}] = 1;
  X.hodge[{1, 1, 2}] = 1;
  X.has_hodge = true;
  return X;
}

ManifoldData manifold_euclidean(int N) {
  ManifoldData X;
  X.dim = N;
  X.betti = {1};
  X.hodge[{0, 0, 0}] = 1;
  X.has_hodge = true;
  return X;
}

Series2 sym_power_series(const GradedDims& V, int x_trunc, int t_trunc) {
  Series2 acc = one2(x_trunc, t_trunc);
  for (const auto& [deg, dim] : V) {
    if (dim == 0) continue;
    if (deg < 0) throw invalid_input_error("symmetric powers need degrees >= 0");
    if (dim < 0) throw invalid_input_error("negative dimension in graded input");
    // (x,t) monomial x*t^deg; degree 0 odd cannot occur
    if (deg % 2 == 0)
      acc = mul(acc, binomial_factor2(x_trunc, t_trunc, -1, 1, deg, -dim));
    else
      acc = mul(acc, binomial_factor2(x_trunc, t_trunc, +1, 1, deg, dim));
  }
  return acc;
}

Series2 sym_power_series(const BiGradedDims& V, int x_trunc, int t_trunc) {
  GradedDims total;
  for (const auto& [pq, dim] : V) total[pq.first + pq.second] += dim;
  return sym_power_series(total, x_trunc, t_trunc);
}

Series1 coefficient_of_x(const Series2& s, int k) {
  if (k < 0 || k > s.tu) throw invalid_input_error("tracked coefficient beyond truncation");
  Series1 r(s.tv);
  for (int v = 0; v <= s.tv; ++v) r[v] = s.at(k, v);
  return r;
}

Series1 sym_product_poincare(const ManifoldData& X, int d, int t_trunc) {
  X.validate();
  if (d < -1) throw invalid_input_error("d must be >= 0, or -1 for the stable series");
  GradedDims V;
  for (int i = 0; i < static_cast<int>(X.betti.size()); ++i)
    if (X.betti[i] != 0) V[i] = X.betti[i];
  // the t^j coefficient of P_{Sym^k} is constant for k > j, so the stable
  // series can be read at any row beyond the t truncation
  int row = (d == -1) ? t_trunc + 1 : d;
  Series2 tracked = sym_power_series(V, row, t_trunc);
  return coefficient_of_x(tracked, row);
}

Series2 sym_product_hd(const ManifoldData& X, int d, int tu, int tv) {
  X.validate();
  if (!X.has_hodge) throw invalid_input_error("manifold data has no Hodge numbers");
  if (d < -1) throw invalid_input_error("d must be >= 0, or -1 for the stable series");
  int row = (d == -1) ? tu + tv + 1 : d;
  Tracked2 acc = tracked_one(row + 1, tu, tv);
  for (const auto& [key, h] : X.hodge) {
    if (h == 0) continue;
    auto [p, q, i] = key;
    if (i % 2 == 0)
      acc = tracked_mul(acc, tracked_binomial(row + 1, tu, tv, -1, p, q, -h));
    else
      acc = tracked_mul(acc, tracked_binomial(row + 1, tu, tv, +1, p, q, h));
  }
  return acc.at(row);
}

}  // namespace zcycles
