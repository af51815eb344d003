// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "etahecke/fourier_series.hpp"

using namespace etahecke;

TEST_CASE("eta series: pentagonal support and signs") {
  // eta(tau) in powers of q^{1/24}: exponents (6m+1)^2, sign (-1)^m.
  FourierSeries eta = eta_series(1, 200);
  CHECK(eta.nu() == 24);
  CHECK(eta.coeff(1) == 1);     // m = 0
  CHECK(eta.coeff(25) == -1);   // m = -1: 6(-1)+1 = -5
  CHECK(eta.coeff(49) == -1);   // m = 1
  CHECK(eta.coeff(121) == 1);   // m = -2
  CHECK(eta.coeff(169) == 1);   // m = 2
  CHECK(eta.coeff(2) == 0);
  CHECK(eta.order() == 1);
  // eta(24 tau) has nu = 1 and the same exponents.
  FourierSeries eta24 = eta_series(24, 200);
  CHECK(eta24.nu() == 1);
  CHECK(eta24.coeff(1) == 1);
  CHECK(eta24.coeff(25) == -1);
}

TEST_CASE("Eisenstein series q-expansions") {
  FourierSeries e4 = eisenstein(4, 10);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  CHECK(e4.coeff(3) == 6720);
  FourierSeries e6 = eisenstein(6, 10);
  CHECK(e6.coeff(0) == 1);
  CHECK(e6.coeff(1) == -504);
  CHECK(e6.coeff(2) == -16632);
  CHECK(e6.coeff(3) == -122976);
  FourierSeries e12 = eisenstein(12, 5);
  CHECK(e12.coeff(1) == Rat(65520, 691));
  CHECK(eisenstein(0, 5).coeff(0) == 1);
  CHECK(eisenstein(0, 5).coeff(1) == 0);
  CHECK_THROWS_AS(eisenstein(2, 5), std::invalid_argument);
}

TEST_CASE("series arithmetic: product, power, window bookkeeping") {
  // Delta = eta^24: tau(n) for small n.
  FourierSeries delta = eta_series(1, 24 * 12).pow(24).rescaled(1);
  CHECK(delta.coeff(1) == 1);
  CHECK(delta.coeff(2) == -24);
  CHECK(delta.coeff(3) == 252);
  CHECK(delta.coeff(4) == -1472);
  CHECK(delta.coeff(5) == 4830);
  CHECK(delta.coeff(6) == -6048);
  CHECK(delta.coeff(7) == -16744);
  CHECK(delta.coeff(10) == -115920);
  // E4^3 - E6^2 = 1728 Delta.
  FourierSeries e4 = eisenstein(4, 12), e6 = eisenstein(6, 12);
  FourierSeries diff = e4.pow(3);
  diff -= e6.pow(2);
  for (int64_t n = 0; n <= 10; ++n) CHECK(diff.coeff(n) == Rat(1728) * delta.coeff(n));
  // Reading beyond the window throws.
  CHECK_THROWS_AS(delta.coeff(10'000), insufficient_precision);
  CHECK(delta.coeff(-3) == 0);
}

TEST_CASE("rescaled re-expresses exponent denominators") {
  FourierSeries eta = eta_series(1, 100);
  FourierSeries same = eta.rescaled(48);  // finer denominator always legal
  CHECK(same.nu() == 48);
  CHECK(same.coeff(2) == 1);  // exponent 1/24 = 2/48
  CHECK_THROWS_AS(eta.rescaled(1), std::invalid_argument);  // 1/24 not integral
  FourierSeries cube = eta.pow(24);
  CHECK(cube.rescaled(1).coeff(1) == 1);  // Delta: all exponents multiples of 24
}

TEST_CASE("serialize round-trip") {
  FourierSeries f = eisenstein(4, 7);
  FourierSeries g = FourierSeries::deserialize(f.serialize());
  CHECK(g.nu() == f.nu());
  CHECK(g.nmax() == f.nmax());
  for (int64_t n = 0; n <= 7; ++n) CHECK(g.coeff(n) == f.coeff(n));
}

TEST_CASE("M_s(1) monomial basis and dimensions") {
  CHECK(dim_ms1(0) == 1);
  CHECK(dim_ms1(2) == 0);
  CHECK(dim_ms1(4) == 1);
  CHECK(dim_ms1(6) == 1);
  CHECK(dim_ms1(8) == 1);
  CHECK(dim_ms1(10) == 1);
  CHECK(dim_ms1(12) == 2);
  CHECK(dim_ms1(14) == 1);
  CHECK(dim_ms1(24) == 3);
  for (int s : {0, 4, 6, 8, 10, 12, 14, 16, 24})
    CHECK(static_cast<int>(ms1_basis(s, 10).size()) == dim_ms1(s));
  CHECK(ms1_basis(2, 10).empty());
}

TEST_CASE("partition numbers via the pentagonal recurrence") {
  auto p = partition_numbers(200);
  CHECK(p[0] == 1);
  CHECK(p[1] == 1);
  CHECK(p[5] == 7);
  CHECK(p[10] == 42);
  CHECK(p[20] == 627);
  CHECK(p[50] == 204226);
  CHECK(p[100] == Int("190569292"));
  CHECK(p[200] == Int("3972999029388"));
}
