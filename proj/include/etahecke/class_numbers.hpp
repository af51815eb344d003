// SPDX-License-Identifier: Apache-2.0
//
// Class numbers of imaginary quadratic orders.  H(D) denotes the class
// number of the order of discriminant D < 0 -- the number of reduced
// primitive binary quadratic forms of discriminant D -- with the usual
// unit weights H(-3) = 1/3 and H(-4) = 1/2, and H(D) = 0 when D is not a
// discriminant (D ≡ 2, 3 mod 4).  Values are memoized; the table can be
// persisted through FileCache.

#ifndef ETAHECKE_CLASS_NUMBERS_HPP
#define ETAHECKE_CLASS_NUMBERS_HPP

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "etahecke/arith.hpp"
#include "etahecke/cache.hpp"
#include "etahecke/rational.hpp"

namespace etahecke {

// D = f^2 * D0 with D0 a fundamental discriminant and f >= 1 (conductor).
struct Discriminant {
  int64_t D;
  int64_t D0;
  int64_t f;
};

// Splits a negative discriminant into fundamental part and conductor.
// Throws std::invalid_argument unless D < 0 and D ≡ 0, 1 (mod 4).
inline Discriminant to_discriminant(int64_t D) {
  if (D >= 0 || mod_norm(D, 4) > 1)
    throw std::invalid_argument("to_discriminant: not a negative discriminant");
  int64_t d = -D;  // work with |D|
  // Squarefree part of |D|.
  int64_t sf = 1, sq = 1;
  for (auto [p, e] : factorize(d)) {
    for (int i = 0; i + 1 < e; i += 2) sq *= p;
    if (e % 2) sf *= p;
  }
  // D = -sf * sq^2.  Fundamental part is -sf if -sf ≡ 1 (mod 4), else -4*sf.
  int64_t D0 = (mod_norm(-sf, 4) == 1) ? -sf : -4 * sf;
  int64_t f = isqrt(D / D0);
  return Discriminant{D, D0, f};
}

namespace detail {

// Count of reduced primitive forms (a, b, c), b^2 - 4ac = D < 0, with the
// weight conventions at D = -3 and D = -4 folded in by the caller.
inline int64_t reduced_form_count(int64_t D) {
  int64_t count = 0;
  // Reduced: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
  for (int64_t b = mod_norm(D, 2); b * b <= -D / 3; b += 2) {
    int64_t n4 = b * b - D;  // = 4ac
    for (int64_t a = std::max<int64_t>(b, 1); a * a <= n4 / 4; ++a) {
      if (n4 % (4 * a) != 0) continue;
      int64_t c = n4 / (4 * a);
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      count += 1;
      // (a, -b, c) is a distinct class unless b = 0, |b| = a or a = c.
      if (b != 0 && b != a && a != c) count += 1;
    }
  }
  return count;
}

struct ClassNumberTable {
  std::mutex mu;
  std::map<int64_t, Rat> memo;

  static ClassNumberTable& instance() {
    static ClassNumberTable t;
    return t;
  }
};

}  // namespace detail

// Class number H(D) for D < 0 (0 when D ≡ 2, 3 mod 4).
inline Rat hurwitz_H(int64_t D) {
  if (D >= 0) throw std::invalid_argument("hurwitz_H: D must be negative");
  if (mod_norm(D, 4) > 1) return Rat(0);
  if (D == -3) return Rat(1, 3);
  if (D == -4) return Rat(1, 2);
  auto& table = detail::ClassNumberTable::instance();
  {
    std::lock_guard<std::mutex> lock(table.mu);
    auto it = table.memo.find(D);
    if (it != table.memo.end()) return it->second;
  }
  Rat h(detail::reduced_form_count(D));
  std::lock_guard<std::mutex> lock(table.mu);
  table.memo.emplace(D, h);
  return h;
}

// Sum over conductor divisors: H_total(D) = sum_{g^2 | D/D0} H(D/g^2).
// (This is the classical Hurwitz class number of |D|.)
inline Rat hurwitz_H_total(int64_t D) {
  auto d = to_discriminant(D);
  Rat sum(0);
  for (int64_t g : divisors(d.f))
    sum += hurwitz_H(D / (g * g));
  return sum;
}

// Persistence hooks for the memo table ------------------------------------

inline std::string class_number_table_serialize() {
  auto& table = detail::ClassNumberTable::instance();
  std::lock_guard<std::mutex> lock(table.mu);
  std::ostringstream out;
  for (const auto& [D, h] : table.memo) out << D << ' ' << rat_str(h) << '\n';
  return out.str();
}

inline void class_number_table_load(const std::string& payload) {
  auto& table = detail::ClassNumberTable::instance();
  std::istringstream in(payload);
  int64_t D;
  std::string h;
  std::lock_guard<std::mutex> lock(table.mu);
  while (in >> D >> h) table.memo[D] = rat_parse(h);
}

inline void class_number_cache_load(const FileCache& cache) {
  if (auto payload = cache.get("class-numbers")) class_number_table_load(*payload);
}

inline void class_number_cache_store(const FileCache& cache) {
  if (cache.enabled()) cache.put("class-numbers", class_number_table_serialize());
}

}  // namespace etahecke

#endif  // ETAHECKE_CLASS_NUMBERS_HPP
