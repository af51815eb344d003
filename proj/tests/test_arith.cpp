// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "etahecke/arith.hpp"
#include "etahecke/rational.hpp"

using namespace etahecke;

TEST_CASE("mod_norm normalizes into [0, m)") {
  CHECK(mod_norm(7, 5) == 2);
  CHECK(mod_norm(-1, 24) == 23);
  CHECK(mod_norm(-24, 24) == 0);
  CHECK(mod_norm(0, 3) == 0);
}

TEST_CASE("kronecker agrees with Legendre on odd primes") {
  for (int64_t p : {3, 5, 7, 11, 13, 23, 97}) {
    for (int64_t a = -2 * p; a <= 2 * p; ++a) {
      int legendre = 0;
      if (mod_norm(a, p) != 0) {
        legendre = -1;
        for (int64_t x = 1; x < p; ++x)
          if (mod_norm(x * x - a, p) == 0) {
            legendre = 1;
            break;
          }
      }
      CHECK(kronecker(a, p) == legendre);
    }
  }
}

TEST_CASE("kronecker special values and cases") {
  CHECK(kronecker(12, 1) == 1);
  CHECK(kronecker(-4, 7) == -1);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(12, 11) == 1);
  CHECK(kronecker(2, 7) == 1);   // 7 ≡ 7 (mod 8)
  CHECK(kronecker(2, 3) == -1);  // 3 ≡ 3 (mod 8)
  CHECK(kronecker(6, 4) == 0);   // both even
  CHECK(kronecker(5, 0) == 0);
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, -1) == -1);
  // (a|2) depends on a mod 8.
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(3, 2) == -1);
  // Completely multiplicative in the top argument.
  for (int64_t n : {5, 9, 15, 21})
    for (int64_t a = 1; a <= 20; ++a)
      for (int64_t b = 1; b <= 20; ++b)
        CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
}

TEST_CASE("kronecker periodicity of (12|.) and (-4|.)") {
  for (int64_t n = 1; n <= 200; n += 2) {
    if (n % 3 != 0) CHECK(kronecker(12, n) == kronecker(12, n % 12));
    CHECK(kronecker(-4, n) == (n % 4 == 1 ? 1 : -1));
  }
}

TEST_CASE("valuation, isqrt, is_square") {
  CHECK(valuation(48, 2) == 4);
  CHECK(valuation(-18, 3) == 2);
  CHECK(valuation(7, 2) == 0);
  CHECK_THROWS_AS(valuation(0, 2), std::invalid_argument);
  for (int64_t n = 0; n <= 10000; ++n) {
    int64_t s = isqrt(n);
    CHECK(s * s <= n);
    CHECK((s + 1) * (s + 1) > n);
  }
  CHECK(is_square(0));
  CHECK(is_square(144));
  CHECK_FALSE(is_square(145));
  CHECK_FALSE(is_square(-4));
}

TEST_CASE("factorize, divisors, phi, omega, primes") {
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<int64_t, int>{2, 3});
  CHECK(f[1] == std::pair<int64_t, int>{3, 2});
  CHECK(f[2] == std::pair<int64_t, int>{5, 1});
  CHECK(factorize(1).empty());

  auto d = divisors(12);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<int64_t>{1});

  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(24) == 8);
  CHECK(euler_phi(97) == 96);
  CHECK(omega(1) == 0);
  CHECK(omega(6) == 2);
  CHECK(omega(8) == 1);

  CHECK(primes_up_to(13) == std::vector<int64_t>{2, 3, 5, 7, 11, 13});
  CHECK(primes_up_to(1).empty());
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("rational helpers") {
  CHECK(rat_str(Rat(3)) == "3");
  CHECK(rat_str(Rat(-1, 3)) == "-1/3");
  CHECK(int_pow(2, 10) == 1024);
  CHECK(rat_pow(Rat(1, 2), 3) == Rat(1, 8));
  CHECK(rat_parse("22/7") == Rat(22, 7));
  CHECK(rat_parse("-5") == Rat(-5));
}
