// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "etahecke/class_numbers.hpp"

using namespace etahecke;

TEST_CASE("discriminant split into fundamental part and conductor") {
  auto d = to_discriminant(-12);
  CHECK(d.D0 == -3);
  CHECK(d.f == 2);
  d = to_discriminant(-4);
  CHECK(d.D0 == -4);
  CHECK(d.f == 1);
  d = to_discriminant(-300);  // -300 = 10^2 * (-3)
  CHECK(d.D0 == -3);
  CHECK(d.f == 10);
  d = to_discriminant(-20);
  CHECK(d.D0 == -20);
  CHECK(d.f == 1);
  CHECK_THROWS_AS(to_discriminant(-5), std::invalid_argument);  // -5 ≡ 3 mod 4
  CHECK_THROWS_AS(to_discriminant(4), std::invalid_argument);
  // D = f^2 D0 holds on a range.
  for (int64_t D = -1; D >= -500; --D) {
    if (mod_norm(D, 4) > 1) continue;
    auto dd = to_discriminant(D);
    CHECK(dd.f * dd.f * dd.D0 == D);
    CHECK((mod_norm(dd.D0, 4) == 1 || mod_norm(dd.D0, 4) == 0));
  }
}

TEST_CASE("class numbers H(D): weighted values and table entries") {
  CHECK(hurwitz_H(-3) == Rat(1, 3));
  CHECK(hurwitz_H(-4) == Rat(1, 2));
  CHECK(hurwitz_H(-7) == 1);
  CHECK(hurwitz_H(-8) == 1);
  CHECK(hurwitz_H(-11) == 1);
  CHECK(hurwitz_H(-12) == 1);
  CHECK(hurwitz_H(-15) == 2);
  CHECK(hurwitz_H(-19) == 1);
  CHECK(hurwitz_H(-20) == 2);
  CHECK(hurwitz_H(-23) == 3);
  CHECK(hurwitz_H(-24) == 2);
  CHECK(hurwitz_H(-47) == 5);
  CHECK(hurwitz_H(-71) == 7);
  CHECK(hurwitz_H(-163) == 1);
  // Non-discriminants.
  CHECK(hurwitz_H(-5) == 0);
  CHECK(hurwitz_H(-6) == 0);
  CHECK_THROWS_AS(hurwitz_H(4), std::invalid_argument);
}

TEST_CASE("conductor relation H(m^2 D0) = H(D0) m prod (1 - (D0|p)/p)") {
  for (int64_t D0 : {-3, -4, -7, -8, -11, -15, -19, -20})
    for (int64_t m = 1; m <= 12; ++m) {
      Rat rhs = hurwitz_H(D0) * m;
      for (auto [p, e] : factorize(m)) rhs *= Rat(p - kronecker(D0, p), p);
      rhs.canonicalize();
      CHECK(hurwitz_H(m * m * D0) == rhs);
    }
}

TEST_CASE("class-sum identity sum_{f|u} (D|f) H(u^2 D / f^2) = u H(D)") {
  for (int64_t D : {-3, -4, -7, -8, -11, -15, -19, -20})
    for (int64_t u = 1; u <= 30; ++u) {
      Rat lhs(0);
      for (int64_t f : divisors(u))
        lhs += Rat(kronecker(D, f)) * hurwitz_H((u / f) * (u / f) * D);
      lhs.canonicalize();
      CHECK(lhs == Rat(u) * hurwitz_H(D));
    }
}

TEST_CASE("Hurwitz sum over conductor divisors") {
  // H_total(-d): classical values H(3) = 1/3, H(4) = 1/2, H(23) = 3,
  // H(12) = 4/3 (= H(-12) + H(-3)), H(16) = 3/2, H(20) = 2, H(27) = 4/3.
  CHECK(hurwitz_H_total(-3) == Rat(1, 3));
  CHECK(hurwitz_H_total(-12) == Rat(4, 3));
  CHECK(hurwitz_H_total(-16) == Rat(3, 2));
  CHECK(hurwitz_H_total(-20) == 2);
  CHECK(hurwitz_H_total(-27) == Rat(4, 3));
}

TEST_CASE("table serialization round-trips and cache corruption falls back") {
  hurwitz_H(-23);  // ensure a nontrivial entry exists
  const std::string payload = class_number_table_serialize();
  CHECK(payload.find("-23 3") != std::string::npos);
  class_number_table_load(payload);  // idempotent
  CHECK(hurwitz_H(-23) == 3);

  const std::string dir = (std::filesystem::temp_directory_path() / "etahecke-test-cache").string();
  std::filesystem::remove_all(dir);
  FileCache cache(dir);
  cache.put("k", "hello\n");
  REQUIRE(cache.get("k").has_value());
  CHECK(*cache.get("k") == "hello\n");
  // Corrupt the stored file: the hash check must reject it.
  {
    std::ofstream f(dir + "/k.txt", std::ios::trunc);
    f << "etahecke-cache-v1 12345\nhello\n";
  }
  CHECK_FALSE(cache.get("k").has_value());
  CHECK_FALSE(cache.get("missing").has_value());
  FileCache inert;
  CHECK_FALSE(inert.enabled());
  CHECK_FALSE(inert.get("k").has_value());
  std::filesystem::remove_all(dir);
}
