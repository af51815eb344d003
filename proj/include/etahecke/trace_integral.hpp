// SPDX-License-Identifier: Apache-2.0
//
// Eichler-Selberg-type trace formulas for level N | 6: tr T_n W_e on
// S_{2k}(Gamma_0(N)), the newform-trace assemblies for levels 6 and 2
// with prescribed Atkin-Lehner signs, and the equivalent direct four-sum
// closed form for the level-6 newform trace.

#ifndef ETAHECKE_TRACE_INTEGRAL_HPP
#define ETAHECKE_TRACE_INTEGRAL_HPP

#include "etahecke/arith.hpp"
#include "etahecke/class_numbers.hpp"
#include "etahecke/rational.hpp"
#include "etahecke/trace_half.hpp"

namespace etahecke {

// Local factor alpha(D, p) for D = g^2 D0 a negative discriminant:
// 2 when p divides the conductor g, else 1 + (D0|p).
inline Rat alpha(int64_t D, int64_t p) {
  const Discriminant d = to_discriminant(D);
  if (d.f % p == 0) return Rat(2);
  return Rat(1 + kronecker(d.D0, p));
}

// tr(T_n W_e | S_{2k}(Gamma_0(N))) for squarefree N, e | N, gcd(n, N) = 1,
// even weight 2k >= 4:
//   -(1/(2 e^{k-1})) sum_{u, Delta = e^2 u^2 - 4 e n < 0}
//       sum_{g | f(Delta), gcd(g, e) = 1}
//         prod_{p | N/e} alpha(g^2 D0, p) * H(g^2 D0) * P_k(e, n, u)
//   - 2^{omega(N)-1} [e = 1] sum_{a | n} min(a, n/a)^{2k-1}
//   + ((2k-1)/12) [e = 1 and n square] n^{k-1} prod_{p | N} (p + 1).
//
// The formula is a theorem for 2k >= 4.  Weight 2 is also accepted and
// evaluates the same expression verbatim; there the value is not the cusp
// trace (which would need an Eisenstein correction) but it is exactly the
// quantity the weight-3/2 correspondence needs, where unary theta series
// map to weight-2 Eisenstein series.
inline Rat tr_TnWe(int64_t N, int64_t e, int64_t weight2k, int64_t n) {
  if (N < 1 || n < 1 || e < 1 || N % e != 0 || std::gcd(n, N) != 1)
    throw std::invalid_argument("tr_TnWe: need e | N squarefree and gcd(n, N) = 1");
  for (auto [p, ex] : factorize(N))
    if (ex > 1) throw std::invalid_argument("tr_TnWe: N must be squarefree");
  if (weight2k < 2 || weight2k % 2 != 0)
    throw std::invalid_argument("tr_TnWe: weight must be even and >= 2");
  const int64_t k = weight2k / 2;
  const auto cofactor_primes = factorize(N / e);

  Rat elliptic(0);
  const int64_t ubound = isqrt(4 * n / e);
  for (int64_t u = -ubound; u <= ubound; ++u) {
    const int64_t delta = e * e * u * u - 4 * e * n;
    if (delta >= 0) continue;
    const Discriminant d = to_discriminant(delta);
    for (int64_t g : divisors(d.f)) {
      if (std::gcd(g, e) != 1) continue;
      Rat term = hurwitz_H(g * g * d.D0);
      for (auto [p, ex] : cofactor_primes) term *= alpha(g * g * d.D0, p);
      if (term == 0) continue;
      elliptic += term * Rat(pk(k, e, n, u));
    }
  }
  Rat total = -elliptic / (2 * rat_pow(Rat(static_cast<long>(e)), static_cast<unsigned long>(k - 1)));

  if (e == 1) {
    Int divsum(0);
    for (int64_t a : divisors(n))
      divsum += int_pow(std::min(a, n / a), static_cast<unsigned long>(2 * k - 1));
    total -= rat_pow(Rat(2), static_cast<unsigned long>(omega(N))) / 2 * Rat(divsum);
    if (is_square(n)) {
      Rat prodp(1);
      for (auto [p, ex] : factorize(N)) prodp *= Rat(static_cast<long>(p + 1));
      total += Rat(static_cast<long>(2 * k - 1), 12) *
               Rat(int_pow(n, static_cast<unsigned long>(k - 1))) * prodp;
    }
  }
  total.canonicalize();
  return total;
}

// tr(T_n | S_{2k}^new(6, eps2, eps3)), assembled from the full-space
// traces via newform/oldform inclusion-exclusion over levels 1, 2, 3, 6:
//   (1/4) [tr(6) + eps2 trW2(6) + eps3 trW3(6) + eps2 eps3 trW6(6)]
//   - (1/2) [tr(3) + eps3 trW3(3)] - (1/2) [tr(2) + eps2 trW2(2)] + tr(1).
inline Rat tr_new6(int64_t weight2k, int eps2, int eps3, int64_t n) {
  if ((eps2 != 1 && eps2 != -1) || (eps3 != 1 && eps3 != -1))
    throw std::invalid_argument("tr_new6: Atkin-Lehner signs must be +-1");
  Rat out = (tr_TnWe(6, 1, weight2k, n) + eps2 * tr_TnWe(6, 2, weight2k, n) +
             eps3 * tr_TnWe(6, 3, weight2k, n) + eps2 * eps3 * tr_TnWe(6, 6, weight2k, n)) /
                4 -
            (tr_TnWe(3, 1, weight2k, n) + eps3 * tr_TnWe(3, 3, weight2k, n)) / 2 -
            (tr_TnWe(2, 1, weight2k, n) + eps2 * tr_TnWe(2, 2, weight2k, n)) / 2 +
            tr_TnWe(1, 1, weight2k, n);
  out.canonicalize();
  return out;
}

// tr(T_n | S_{2k}^new(2, eps2)) by the same inclusion-exclusion at level 2.
inline Rat tr_new2(int64_t weight2k, int eps2, int64_t n) {
  if (eps2 != 1 && eps2 != -1) throw std::invalid_argument("tr_new2: Atkin-Lehner sign must be +-1");
  Rat out = (tr_TnWe(2, 1, weight2k, n) + eps2 * tr_TnWe(2, 2, weight2k, n)) / 2 -
            tr_TnWe(1, 1, weight2k, n);
  out.canonicalize();
  return out;
}

// Direct closed form for the level-6 newform trace (no inclusion-exclusion):
//   -(1/8) S_1 + (eps2/(8 2^{k-1})) S_2 + (eps3/(8 3^{k-1})) S_3
//   - (eps2 eps3/(8 6^{k-1})) S_4 + ((2k-1)/24) [n square] n^{k-1},
// with S_e the four closed family sums shared with the half-integral side.
inline Rat tr_new6_direct(int64_t weight2k, int eps2, int eps3, int64_t n) {
  if (weight2k < 4 || weight2k % 2 != 0)
    throw std::invalid_argument("tr_new6_direct: weight must be even and >= 4");
  if (n < 1 || std::gcd<int64_t>(n, 6) != 1)
    throw std::invalid_argument("tr_new6_direct: n must be positive and coprime to 6");
  const int64_t k = weight2k / 2;
  Rat out = -detail::closed_family_sum(k, 1, n) / 8;
  out += Rat(eps2) * detail::closed_family_sum(k, 2, n) /
         (8 * rat_pow(Rat(2), static_cast<unsigned long>(k - 1)));
  out += Rat(eps3) * detail::closed_family_sum(k, 3, n) /
         (8 * rat_pow(Rat(3), static_cast<unsigned long>(k - 1)));
  out -= Rat(eps2 * eps3) * detail::closed_family_sum(k, 6, n) /
         (8 * rat_pow(Rat(6), static_cast<unsigned long>(k - 1)));
  if (is_square(n))
    out += Rat(static_cast<long>(2 * k - 1), 24) * Rat(int_pow(n, static_cast<unsigned long>(k - 1)));
  out.canonicalize();
  return out;
}

}  // namespace etahecke

#endif  // ETAHECKE_TRACE_INTEGRAL_HPP
