// SPDX-License-Identifier: Apache-2.0
//
// Closed-form side of the half-integral trace computation: the Lucas-type
// polynomial P_k, the elliptic family sums A, B, C, D (with their starred
// partial-sum variants and the alternative 3-adic form), the parabolic and
// scalar contributions, and the fully assembled closed formula for
// tr T_{n^2} on the eta-type spaces of level one.

#ifndef ETAHECKE_TRACE_HALF_HPP
#define ETAHECKE_TRACE_HALF_HPP

#include <optional>

#include "etahecke/arith.hpp"
#include "etahecke/class_numbers.hpp"
#include "etahecke/rational.hpp"

namespace etahecke {

// P_k(e, n, u) = (tau^{2k-1} - taubar^{2k-1}) / (tau - taubar) with
// tau taubar = en, tau + taubar = eu: the degree-(2k-2) Lucas sequence
// s_j = (eu) s_{j-1} - (en) s_{j-2}, s_0 = 1, evaluated at j = 2k-2.
// In particular P_k(e, n, 0) = (-en)^{k-1}.
inline Int pk(int64_t k, int64_t e, int64_t n, int64_t u) {
  if (k < 1) throw std::invalid_argument("pk: need k >= 1");
  const Int t(static_cast<long>(e * u)), m(static_cast<long>(e * n));
  Int prev(1), cur(t);
  if (k == 1) return prev;
  for (int64_t j = 2; j <= 2 * k - 2; ++j) {
    Int next = t * cur - m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

// Which u's participate in a family sum.
enum class USpan { all, zero_only, nonzero_only };

// One of the four e-families of the assembled closed formula:
//   sum_u sum_{g | f(Delta), gcd(g, c_e) = 1}
//     (1 - (D0|2))^{a_e} (1 - (D0|3))^{b_e} H(g^2 D0) P_k(e, n, u)
// over all u with e^2 u^2 < 4 e n, Delta = e^2 u^2 - 4 e n = f^2 D0.
// e = 1: g coprime to 6, both correction factors;
// e = 2: g coprime to 3, the (1 - (D0|3)) factor;
// e = 3: g coprime to 2, the (1 - (D0|2)) factor;
// e = 6: unrestricted g, no correction factor.
inline Rat closed_family_sum(int64_t k, int64_t e, int64_t n, USpan span = USpan::all) {
  const int64_t gcop = (e == 1) ? 6 : (e == 2) ? 3 : (e == 3) ? 2 : 1;
  Rat sum(0);
  const int64_t ubound = isqrt(4 * n / e);
  for (int64_t u = -ubound; u <= ubound; ++u) {
    if (span == USpan::zero_only && u != 0) continue;
    if (span == USpan::nonzero_only && u == 0) continue;
    const int64_t delta = e * e * u * u - 4 * e * n;
    if (delta >= 0) continue;
    const Discriminant d = to_discriminant(delta);
    Rat factor(1);
    if (e == 1 || e == 3) factor *= Rat(1 - kronecker(d.D0, 2));
    if (e == 1 || e == 2) factor *= Rat(1 - kronecker(d.D0, 3));
    if (factor == 0) continue;
    Rat hsum(0);
    for (int64_t g : divisors(d.f))
      if (std::gcd(g, gcop) == 1) hsum += hurwitz_H(g * g * d.D0);
    sum += factor * hsum * Rat(pk(k, e, n, u));
  }
  return sum;
}

}  // namespace detail

// Scalar-term contribution (present only at n = 1): (k - 1/2)/12.
inline Rat scalar_total(int64_t k) {
  Rat out(static_cast<long>(2 * k - 1), 24);
  out.canonicalize();
  return out;
}

// Parabolic contribution divided by sqrt(n):
//   (1/8) (12|n) sum_{e in {1,2,3,6}} (-4e|r) (1 - (-en|3)) (H(-4en) - H(-en)).
inline Rat parabolic_total(int64_t n, int64_t r) {
  Rat sum(0);
  for (int64_t e : {1, 2, 3, 6}) {
    int64_t fac = 1 - kronecker(-e * n, 3);
    if (fac == 0) continue;
    sum += Rat(static_cast<long>(kronecker(-4 * e, r) * fac)) *
           (hurwitz_H(-4 * e * n) - hurwitz_H(-e * n));
  }
  return Rat(kronecker(12, n)) * sum / 8;
}

// ---------------------------------------------------------------------------
// Elliptic family sums in the A/B/C/D bookkeeping.

enum class EllipticFamily { A, B, C, D };

struct EllipticSelector {
  EllipticFamily family;
  int ell = 0;               // exact 2-adic valuation of u
  std::optional<int> m;      // exact 2-adic valuation of g (families A, C only)
  bool starred = false;      // sum over all valuations >= ell
};

namespace detail {

struct FamilyShape {
  int64_t e;            // the P_k / discriminant parameter
  int64_t usq_bound;    // u^2 < usq_bound (strict), from e^2 u^2 < 4 e n
  bool three_split;     // families A, B carry the 3 | u case analysis
  bool g_2adic;         // families A, C restrict the 2-adic valuation of g
};

inline FamilyShape family_shape(EllipticFamily fam, int64_t n) {
  switch (fam) {
    case EllipticFamily::A: return {1, 4 * n, true, true};
    case EllipticFamily::B: return {2, 2 * n, true, false};
    case EllipticFamily::C: return {3, (4 * n) / 3 + 1, false, true};
    case EllipticFamily::D: return {6, (2 * n) / 3 + 1, false, false};
  }
  throw std::logic_error("family_shape: unreachable");
}

// Sum for one exact valuation ell of u.  `alternative` selects the
// equivalent form of the lemma replacing the 3 | u case split by the
// (1 - (D0|3)) factor and the 3-coprime conductor quotient condition.
inline Rat family_sum_fixed_ell(EllipticFamily fam, int ell, std::optional<int> m, int64_t n,
                                int64_t k, bool alternative) {
  const FamilyShape shape = family_shape(fam, n);
  Rat sum(0);
  for (int64_t au = 1; au * au < shape.usq_bound; ++au) {
    if (valuation(au, 2) != ell) continue;
    const int64_t delta = shape.e * shape.e * au * au - 4 * shape.e * n;
    if (delta >= 0) continue;  // guard for the integer-division bounds above
    const Discriminant d = to_discriminant(delta);
    Rat inner(0);
    for (int64_t g : divisors(d.f)) {
      // The side conditions (2-adic valuation, coprimality, the 3 | g
      // bookkeeping) constrain g itself; the summand is H(Delta/g^2),
      // i.e. H((f/g)^2 D0).
      if (shape.g_2adic && valuation(g, 2) != *m) continue;
      if (std::gcd(std::gcd(n, au), g) != 1) continue;
      const int64_t h = d.f / g;
      if (alternative) {
        if (h % 3 == 0) continue;  // 3 must not divide Delta/(D0 g^2)
        inner += hurwitz_H(h * h * d.D0);
      } else if (shape.three_split && au % 3 != 0) {
        // 3 coprime to u: plain sum minus three times the 3 | g subsum.
        Rat hv = hurwitz_H(h * h * d.D0);
        inner += (g % 3 == 0) ? Rat(-2) * hv : hv;
      } else if (shape.three_split) {
        // 3 | u: factor (1 - (Delta|3)).
        inner += Rat(1 - kronecker(delta, 3)) * hurwitz_H(h * h * d.D0);
      } else {
        inner += hurwitz_H(h * h * d.D0);
      }
    }
    if (alternative && shape.three_split) inner *= Rat(1 - kronecker(d.D0, 3));
    // u and -u give equal terms P_k(e, n, u) and P_k(e, n, -u) have equal
    // even-index Lucas values only up to sign; sum both explicitly.
    inner *= Rat(pk(k, shape.e, n, au) + pk(k, shape.e, n, -au));
    sum += inner;
  }
  return sum;
}

}  // namespace detail

// The family sums A_{l,m}(n), B_l(n), C_{l,m}(n), D_l(n)
// (with the eta-space parameters (r, s) supplying k = (r-1)/2 + s and the
// Kronecker weights), their starred versions, and -- via `alternative` --
// the equivalent 3-adic reformulation for families A and B.
inline Rat elliptic_sum(const EllipticSelector& sel, int64_t n, int64_t r, int64_t s,
                        bool alternative = false) {
  if (n < 1 || std::gcd<int64_t>(n, 6) != 1)
    throw std::invalid_argument("elliptic_sum: n must be positive and coprime to 6");
  const bool needs_m = (sel.family == EllipticFamily::A || sel.family == EllipticFamily::C);
  if (needs_m != sel.m.has_value())
    throw std::invalid_argument("elliptic_sum: selector m is required exactly for families A and C");
  if (alternative && sel.family != EllipticFamily::A && sel.family != EllipticFamily::B)
    throw std::invalid_argument("elliptic_sum: alternative form exists only for families A and B");
  const int64_t k = (r - 1) / 2 + s;
  if (k < 1) throw std::invalid_argument("elliptic_sum: need k >= 1");

  Rat body(0);
  if (sel.starred) {
    for (int j = sel.ell; (int64_t{1} << j) * (int64_t{1} << j) <
                          detail::family_shape(sel.family, n).usq_bound; ++j)
      body += detail::family_sum_fixed_ell(sel.family, j, sel.m, n, k, alternative);
  } else {
    body = detail::family_sum_fixed_ell(sel.family, sel.ell, sel.m, n, k, alternative);
  }

  Rat weight(kronecker(12, n));
  switch (sel.family) {
    case EllipticFamily::A:
      if (alternative) weight *= (n % 3 == 1) ? Rat(1) : Rat(1, 2);
      break;
    case EllipticFamily::B:
      weight *= Rat(kronecker(8, r)) / rat_pow(Rat(2), static_cast<unsigned long>(k - 1));
      if (alternative) weight *= (n % 3 == 1) ? Rat(1, 2) : Rat(1);
      break;
    case EllipticFamily::C:
      weight *= Rat(kronecker(12, r)) / rat_pow(Rat(3), static_cast<unsigned long>(k - 1));
      break;
    case EllipticFamily::D:
      weight *= Rat(kronecker(24, r)) / rat_pow(Rat(6), static_cast<unsigned long>(k - 1));
      break;
  }
  Rat out = weight * body;
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Assembled closed formula for tr T_{n^2} on S_{r,s}(1) (eta-24 family):
//   (12|n) * [ -(1/8) S_1 - (8|r)/(8 2^{k-1}) S_2 - (12|r)/(8 3^{k-1}) S_3
//              - (24|r)/(8 6^{k-1}) S_4 + (2k-1)/24 [n square] n^{k-1} ]
// with S_e the closed family sums above and k = (r-1)/2 + s.

struct AssembledParts {
  Rat parabolic;  // the u = 0 slice of the four sums
  Rat elliptic;   // the u != 0 slice
  Rat scalar;     // the square-n delta term
  Rat total() const { return parabolic + elliptic + scalar; }
};

namespace detail {

inline Rat assembled_slice(int64_t n, int64_t r, int64_t k, USpan span) {
  Rat acc(0);
  acc -= closed_family_sum(k, 1, n, span) / 8;
  acc -= Rat(kronecker(8, r)) * closed_family_sum(k, 2, n, span) /
         (8 * rat_pow(Rat(2), static_cast<unsigned long>(k - 1)));
  acc -= Rat(kronecker(12, r)) * closed_family_sum(k, 3, n, span) /
         (8 * rat_pow(Rat(3), static_cast<unsigned long>(k - 1)));
  acc -= Rat(kronecker(24, r)) * closed_family_sum(k, 6, n, span) /
         (8 * rat_pow(Rat(6), static_cast<unsigned long>(k - 1)));
  return Rat(kronecker(12, n)) * acc;
}

}  // namespace detail

inline AssembledParts assembled_tr_T_nsq_parts(int64_t n, int64_t r, int64_t s) {
  if (n < 1 || std::gcd<int64_t>(n, 6) != 1)
    throw std::invalid_argument("assembled_tr_T_nsq: n must be positive and coprime to 6");
  if (r < 1 || r > 23 || std::gcd<int64_t>(r, 6) != 1 || s < 0 || s % 2 != 0)
    throw std::invalid_argument("assembled_tr_T_nsq: bad (r, s)");
  const int64_t k = (r - 1) / 2 + s;
  if (k < 1) throw std::invalid_argument("assembled_tr_T_nsq: need k >= 1");
  AssembledParts parts;
  parts.parabolic = detail::assembled_slice(n, r, k, detail::USpan::zero_only);
  parts.elliptic = detail::assembled_slice(n, r, k, detail::USpan::nonzero_only);
  parts.scalar = is_square(n)
                     ? Rat(kronecker(12, n)) * scalar_total(k) * Rat(int_pow(n, static_cast<unsigned long>(k - 1)))
                     : Rat(0);
  return parts;
}

inline Rat assembled_tr_T_nsq(int64_t n, int64_t r, int64_t s) {
  Rat out = assembled_tr_T_nsq_parts(n, r, s).total();
  out.canonicalize();
  return out;
}

}  // namespace etahecke

#endif  // ETAHECKE_TRACE_HALF_HPP
