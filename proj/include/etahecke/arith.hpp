// SPDX-License-Identifier: Apache-2.0
//
// Elementary integer arithmetic used throughout the library: Kronecker
// symbols, 2-adic valuations, trial-division factorization, divisor
// enumeration, Euler phi, integer square roots and primality for the
// small integers that appear in trace formulas.

#ifndef ETAHECKE_ARITH_HPP
#define ETAHECKE_ARITH_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace etahecke {

using std::int64_t;

// a mod m normalized into [0, m) for m > 0.
inline int64_t mod_norm(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Kronecker symbol (a|n), defined for all integers (a, n).
inline int kronecker(int64_t a, int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a % 2 == 0) && (n % 2 == 0)) return 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;  // (a|-1) = -1 for a < 0
  }
  // Pull the even part out of n: (a|2) depends on a mod 8.
  while (n % 2 == 0) {
    n /= 2;
    int64_t am = mod_norm(a, 8);
    if (am == 3 || am == 5) sign = -sign;
  }
  a = mod_norm(a, n);
  // Now n is odd and positive; standard quadratic-reciprocity loop.
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

// Exact p-adic valuation of n != 0.
inline int valuation(int64_t n, int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Largest s with s*s <= n (n >= 0).
inline int64_t isqrt(int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  if (n == 0) return 0;
  auto s = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

inline bool is_square(int64_t n) {
  if (n < 0) return false;
  int64_t s = isqrt(n);
  return s * s == n;
}

// Prime factorization of n > 0 by trial division, as (p, e) pairs.
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// All positive divisors of n > 0 (unsorted order of generation).
inline std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = out.size();
    int64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
    }
  }
  return out;
}

inline int64_t euler_phi(int64_t n) {
  int64_t phi = n;
  for (auto [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

// Number of distinct prime divisors.
inline int omega(int64_t n) { return static_cast<int>(factorize(n).size()); }

inline std::vector<int64_t> primes_up_to(int64_t n) {
  std::vector<int64_t> out;
  std::vector<bool> sieve(static_cast<size_t>(std::max<int64_t>(n + 1, 2)), true);
  for (int64_t i = 2; i <= n; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (int64_t j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

}  // namespace etahecke

#endif  // ETAHECKE_ARITH_HPP
