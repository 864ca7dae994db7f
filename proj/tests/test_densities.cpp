#include <doctest.h>

#include "zcycles/densities.hpp"

using namespace zcycles;

namespace {

DensityParams params(const ManifoldData& X, int m, int n) {
  return make_density_params(X, m, n);
}

Series1 closed_form_cx_density(int trunc) { return binomial_factor1(trunc, -1, 1, -1); }

}  // namespace

TEST_SUITE("densities") {

TEST_CASE("parameter derivation") {
  DensityParams P = params(manifold_punctured_line(), 1, 2);
  CHECK(P.r() == 1);
  CHECK(P.g() == 1);
  CHECK(P.weight_shift() == 1);
  DensityParams Q = params(manifold_sphere2(), 2, 2);
  CHECK(Q.mn() == 4);
  CHECK(Q.g() == 5);
  CHECK(params(manifold_punctured_line(), 1, 1).n == 2);  // (1,1) normalizes
  CHECK_THROWS_AS(params(manifold_torus2(), 0, 2), invalid_input_error);
}

TEST_CASE("E2 page of Z^2_2(C^x)") {
  BiGradedDims e2 = e2_dims(params(manifold_punctured_line(), 1, 2), {2});
  BiGradedDims want{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  CHECK(e2 == want);
}

TEST_CASE("E2 support bound p + q <= 2r|d|") {
  for (auto [X, m, n, d] : std::vector<std::tuple<ManifoldData, int, int, std::vector<int>>>{
           {manifold_sphere2(), 1, 2, {4}},
           {manifold_torus2(), 1, 2, {3}},
           {manifold_torus2(), 2, 1, {2, 2}}}) {
    DensityParams P = params(X, m, n);
    int total = 0;
    for (int di : d) total += di;
    for (const auto& [pq, dim] : e2_dims(P, d)) {
      CHECK(dim > 0);
      CHECK(pq.first + pq.second <= 2 * P.r() * total);
      CHECK(pq.second % P.g() == 0);
    }
  }
}

TEST_CASE("Poincare polynomials of Z^d_2(C^x)") {
  DensityParams P = params(manifold_punctured_line(), 1, 2);
  Series1 p2 = poincare_Z_finite(P, {2}, 4);
  CHECK(p2[0] == 1);
  CHECK(p2[1] == 2);
  CHECK(p2[2] == 1);
  CHECK(p2[3] == 0);
  Series1 p8 = poincare_Z_finite(P, {8}, 10);
  CHECK(p8[0] == 1);
  for (int k = 1; k <= 7; ++k) CHECK(p8[k] == 2);
  CHECK(p8[8] == 1);
  CHECK(p8[9] == 0);
}

TEST_CASE("finite densities divide out the symmetric products") {
  DensityParams P = params(manifold_punctured_line(), 1, 2);
  Series1 d8 = density_finite(P, {8}, 10);
  for (int k = 0; k <= 7; ++k) CHECK(d8[k] == 1);
  CHECK(d8[8] == 0);

  DensityParams P2 = params(manifold_punctured_line(), 2, 1);
  Series1 p55 = poincare_Z_finite(P2, {5, 5}, 6);
  CHECK(p55[0] == 1);
  CHECK(p55[1] == 3);
  for (int k = 2; k <= 6; ++k) CHECK(p55[k] == 4);
  // the ratio to (1+t)^2 is already the limiting 1/(1-t) this far out
  Series1 d55 = density_finite(P2, {5, 5}, 6);
  for (int k = 0; k <= 6; ++k) CHECK(d55[k] == 1);
}

TEST_CASE("limiting series for C^x") {
  int T = 12;
  DensityParams P12 = params(manifold_punctured_line(), 1, 2);
  DensityParams P21 = params(manifold_punctured_line(), 2, 1);
  CHECK(limiting_density(P12, T).c == closed_form_cx_density(T).c);
  CHECK(limiting_density(P21, T).c == closed_form_cx_density(T).c);
  // (1+t)/(1-t) and (1+t)^2/(1-t)
  Series1 want12 = mul(binomial_factor1(T, +1, 1, 1), closed_form_cx_density(T));
  Series1 want21 = mul(binomial_factor1(T, +1, 1, 2), closed_form_cx_density(T));
  CHECK(limiting_poincare(P12, T).c == want12.c);
  CHECK(limiting_poincare(P21, T).c == want21.c);
  CHECK(want21[2] == 4);  // 1 + 3t + 4t^2 + 4t^3 + ...
  CHECK(want21[5] == 4);
}

TEST_CASE("limiting density for m*n = 4 is (1+t^5)/(1-t^6)") {
  int T = 12;
  Series1 want = mul(binomial_factor1(T, +1, 5, 1), binomial_factor1(T, -1, 6, -1));
  for (int m : {1, 2, 4}) {
    DensityParams P = params(manifold_punctured_line(), m, 4 / m);
    CHECK(limiting_density(P, T).c == want.c);
  }
}

TEST_CASE("coincidence across factorizations of m*n") {
  CoincidenceReport rep = coincidence_report(
      manifold_punctured_line(), 2, 12, {{1, 2, {10}, 2, 1, {10, 10}}});
  CHECK(rep.factorizations.size() == 2);
  CHECK(rep.all_equal);
  REQUIRE(rep.finite_pairs.size() == 1);
  CHECK(rep.finite_pairs[0].agree_through == 9);

  CoincidenceReport rep6 = coincidence_report(manifold_sphere2(), 6, 10);
  CHECK(rep6.factorizations.size() == 4);  // 1*6, 2*3, 3*2, 6*1
  CHECK(rep6.all_equal);
  CHECK_THROWS_AS(coincidence_report(manifold_sphere2(), 1, 4), invalid_input_error);
}

TEST_CASE("finite densities approach the limit from below") {
  int T = 14;
  DensityParams P12 = params(manifold_punctured_line(), 1, 2);
  Series1 lim12 = limiting_density(P12, T);
  for (int d = 4; d <= 8; ++d)
    CHECK(first_difference(density_finite(P12, {d}, T), lim12) == d);
  DensityParams P21 = params(manifold_punctured_line(), 2, 1);
  Series1 lim21 = limiting_density(P21, T);
  for (int d = 4; d <= 6; ++d)
    CHECK(first_difference(density_finite(P21, {d, d}, T), lim21) == 2 * d);
}

TEST_CASE("Euler characteristic generating functions") {
  // S^2, (m,n) = (2,1): (1+x)^2/(1-x)^2 = 1 + 4x + 8x^2 + 12x^3 + ...
  DensityParams P = params(manifold_sphere2(), 2, 1);
  Series1 gf = euler_gf(P, 6);
  CHECK(gf[0] == 1);
  for (int k = 1; k <= 6; ++k) CHECK(gf[k] == 4 * k);
  Series1 ratio = euler_ratio(P, 6);
  CHECK(ratio.c == binomial_factor1(6, -1, 2, 2).c);
  CHECK(euler_gf_from_e2(P, 5).c == euler_gf(P, 5).c);

  DensityParams PT = params(manifold_torus2(), 1, 2);
  Series1 gft = euler_gf(PT, 6);
  CHECK(gft[0] == 1);
  for (int k = 1; k <= 6; ++k) CHECK(gft[k] == 0);
  CHECK(euler_gf_from_e2(PT, 6).c == gft.c);

  DensityParams PC = params(manifold_affine_line(), 1, 2);
  CHECK(euler_char_z(PC, {1}) == 1);
  CHECK(euler_char_z(PC, {2}) == 0);
  CHECK(euler_gf_from_e2(PC, 8).c == euler_gf(PC, 8).c);
}

TEST_CASE("Hodge-Deligne limits") {
  // C^x, m*n = 2: 1/(1-uv)
  Series2 cx = hd_limit(params(manifold_punctured_line(), 1, 2), 5, 5);
  for (int u = 0; u <= 5; ++u)
    for (int v = 0; v <= 5; ++v) CHECK(cx.at(u, v) == (u == v ? 1 : 0));
  // C: 1 + (uv)^{mn-1}
  Series2 c2 = hd_limit(params(manifold_affine_line(), 1, 2), 4, 4);
  CHECK(c2.c == binomial_factor2(4, 4, +1, 1, 1, 1).c);
  Series2 c3 = hd_limit(params(manifold_affine_line(), 1, 3), 4, 4);
  CHECK(c3.c == binomial_factor2(4, 4, +1, 2, 2, 1).c);
  // T^2, m*n = 2: (1+uv)(1+u^2v^2) / ((1-u^2v)(1-uv^2))
  Series2 t2 = hd_limit(params(manifold_torus2(), 1, 2), 4, 4);
  Series2 want = mul(binomial_factor2(4, 4, +1, 1, 1, 1),
                     binomial_factor2(4, 4, +1, 2, 2, 1));
  want = mul(want, binomial_factor2(4, 4, -1, 2, 1, -1));
  want = mul(want, binomial_factor2(4, 4, -1, 1, 2, -1));
  CHECK(t2.c == want.c);
}

TEST_CASE("finite Hodge-Deligne data of C^x stays on the diagonal") {
  DensityParams P = params(manifold_punctured_line(), 1, 2);
  Series2 hd = hd_Z_finite(P, {4}, 8, 8);
  Int total = 0;
  for (int u = 0; u <= 8; ++u)
    for (int v = 0; v <= 8; ++v) {
      if (u != v) CHECK(hd.at(u, v) == 0);
      total += hd.at(u, v);
    }
  // specializing u = v = 1 recovers the total Betti count
  Series1 poin = poincare_Z_finite(P, {4}, 10);
  Int betti_total = 0;
  for (const Int& c : poin.c) betti_total += c;
  CHECK(total == betti_total);
  Series2 dens = hd_density_finite(P, {4}, 6, 6);
  CHECK(dens.at(0, 0) == 1);
}

TEST_CASE("the sphere is CP^1 and has a degenerate Hodge limit") {
  Series2 s = hd_limit(params(manifold_sphere2(), 1, 2), 4, 4);
  Series2 want = mul(binomial_factor2(4, 4, +1, 1, 1, 1),
                     binomial_factor2(4, 4, +1, 2, 2, 1));
  CHECK(s.c == want.c);  // (1+uv)(1+u^2v^2)
}

TEST_CASE("missing Hodge data is rejected") {
  ManifoldData bare;
  bare.dim = 2;
  bare.betti = {1, 0, 1};
  DensityParams P = params(bare, 1, 2);
  CHECK_THROWS_AS(hd_limit(P, 3, 3), invalid_input_error);
  CHECK_THROWS_AS(hd_Z_finite(P, {2}, 3, 3), invalid_input_error);
}

TEST_CASE("odd-dimensional manifolds use the symmetric product route") {
  ManifoldData s1;
  s1.dim = 1;
  s1.betti = {1, 1};
  DensityParams P = params(s1, 1, 2);
  CHECK_THROWS_AS(e2_dims(P, {2}), invalid_input_error);
  CHECK_THROWS_AS(limiting_density(P, 4), invalid_input_error);
  // Sym^2 S^1 is a Moebius band, so homotopy equivalent to S^1
  Series1 p = poincare_via_sym(P, {2}, 4);
  CHECK(p[0] == 1);
  CHECK(p[1] == 1);
  CHECK(p[2] == 0);
  CHECK(euler_char_z(P, {2}) == 0);
  CHECK(euler_char_z(P, {0}) == 1);
}

TEST_CASE("degree vector validation") {
  DensityParams P = params(manifold_punctured_line(), 2, 1);
  CHECK_THROWS_AS(e2_dims(P, {1}), invalid_input_error);
  CHECK_THROWS_AS(e2_dims(P, {1, -1}), invalid_input_error);
}

}  // TEST_SUITE
