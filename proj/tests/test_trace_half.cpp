// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "etahecke/hecke.hpp"
#include "etahecke/trace_half.hpp"
#include "etahecke/trace_integral.hpp"

using namespace etahecke;

TEST_CASE("P_k Lucas values") {
  // P_k(e, n, 0) = (-en)^{k-1}.
  for (int64_t k : {1, 2, 3, 5, 8})
    for (int64_t e : {1, 2, 3, 6})
      for (int64_t n : {1, 5, 7, 25}) {
        Int expect(1);
        for (int64_t i = 1; i < k; ++i) expect *= -e * n;
        CHECK(pk(k, e, n, 0) == expect);
      }
  // Symmetry in u -> -u at even index 2k-2.
  for (int64_t k : {1, 2, 3, 4, 7})
    for (int64_t u = 0; u <= 6; ++u) CHECK(pk(k, 1, 11, u) == pk(k, 1, 11, -u));
  // Hand value: P_2(1, n, u) = u^2 - n.
  CHECK(pk(2, 1, 5, 3) == 4);
  CHECK(pk(2, 2, 3, 1) == -2);  // (eu)^2 - en = 4 - 6
  CHECK_THROWS_AS(pk(0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("scalar and parabolic contributions") {
  CHECK(scalar_total(5) == Rat(3, 8));  // (2k - 1)/24 at k = 5
  // Parabolic identity at n = 1: parabolic_total(1, r) = -(r - 12)/24.
  for (int64_t r : {1, 5, 7, 11, 13, 17, 19, 23})
    CHECK(parabolic_total(1, r) == Rat(static_cast<long>(12 - r), 24));
}

TEST_CASE("assembled closed formula: dimension at n = 1 and integrality") {
  for (int64_t r : {1, 5, 7, 11, 13, 17, 19, 23})
    for (int64_t s : {0, 4, 6, 8, 10, 12, 14, 16, 24}) {
      if ((r - 1) / 2 + s < 1) continue;
      CHECK(assembled_tr_T_nsq(1, r, s) == dim_ms1(static_cast<int>(s)));
      for (int64_t n : {5, 7, 11, 13, 25, 35, 49}) {
        Rat v = assembled_tr_T_nsq(n, r, s);
        INFO("r=" << r << " s=" << s << " n=" << n);
        CHECK(v.get_den() == 1);
      }
    }
  CHECK_THROWS_AS(assembled_tr_T_nsq(1, 1, 0), std::invalid_argument);   // k = 0
  CHECK_THROWS_AS(assembled_tr_T_nsq(10, 11, 0), std::invalid_argument); // n not coprime to 6
}

TEST_CASE("assembled formula equals the q-expansion oracle on a sample") {
  for (auto [r, s] : std::vector<std::pair<int64_t, int64_t>>{{11, 0}, {1, 4}, {23, 0}, {7, 6}})
    for (int64_t n : {5, 7, 11, 25}) {
      INFO("r=" << r << " s=" << s << " n=" << n);
      CHECK(assembled_tr_T_nsq(n, r, s) == oracle_trace_T_nsq({EtaFamily::Eta24, r, s}, n));
    }
}

TEST_CASE("decomposition: scalar + parabolic + elliptic parts") {
  for (auto [r, s] : std::vector<std::pair<int64_t, int64_t>>{{11, 0}, {5, 6}, {19, 4}})
    for (int64_t n : {1, 5, 7, 13, 25}) {
      AssembledParts parts = assembled_tr_T_nsq_parts(n, r, s);
      CHECK(parts.total() == parts.parabolic + parts.elliptic + parts.scalar);
      CHECK((parts.scalar != 0) == is_square(n));
      if (n == 1) CHECK(parts.total() == dim_ms1(static_cast<int>(s)));
    }
}

TEST_CASE("elliptic family sums: alternative form of A and B") {
  for (int64_t n : {1, 5, 7, 11, 25, 35, 49, 77, 121, 143})
    for (auto [r, s] : std::vector<std::pair<int64_t, int64_t>>{{5, 0}, {11, 0}, {1, 4}, {13, 2}})
      for (int ell = 0; ell <= 4; ++ell)
        for (bool starred : {false, true}) {
          INFO("n=" << n << " r=" << r << " s=" << s << " ell=" << ell << " starred=" << starred);
          for (int m = 0; m <= 4; ++m) {
            EllipticSelector a{EllipticFamily::A, ell, m, starred};
            CHECK(elliptic_sum(a, n, r, s, false) == elliptic_sum(a, n, r, s, true));
          }
          EllipticSelector b{EllipticFamily::B, ell, std::nullopt, starred};
          CHECK(elliptic_sum(b, n, r, s, false) == elliptic_sum(b, n, r, s, true));
        }
}

TEST_CASE("elliptic selector validation") {
  CHECK_THROWS_AS(elliptic_sum({EllipticFamily::A, 0, std::nullopt, false}, 5, 11, 0),
                  std::invalid_argument);  // A needs m
  CHECK_THROWS_AS(elliptic_sum({EllipticFamily::B, 0, 1, false}, 5, 11, 0),
                  std::invalid_argument);  // B must not carry m
  CHECK_THROWS_AS(elliptic_sum({EllipticFamily::C, 0, 0, false}, 5, 11, 0, true),
                  std::invalid_argument);  // alternative only for A, B
  CHECK_THROWS_AS(elliptic_sum({EllipticFamily::A, 0, 0, false}, 6, 11, 0),
                  std::invalid_argument);  // n coprime to 6
}

TEST_CASE("assembled matches (12|n) tr_new6 with the correspondence signs") {
  for (int64_t r : {1, 5, 7, 11, 13, 17, 19, 23})
    for (int64_t s : {0, 4}) {
      if ((r - 1) / 2 + s < 1) continue;
      for (int64_t n : {5, 7, 25, 35, 49, 55}) {
        INFO("r=" << r << " s=" << s << " n=" << n);
        CHECK(assembled_tr_T_nsq(n, r, s) ==
              Rat(kronecker(12, n)) *
                  tr_new6(r + 2 * s - 1, -kronecker(8, r), -kronecker(12, r), n));
      }
    }
}
