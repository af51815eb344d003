// SPDX-License-Identifier: Apache-2.0
//
// Real Dirichlet characters chi = (u|.) * chi_0 (mod M), their generalized
// Bernoulli numbers B_{1,chi}, the closed form for incomplete character
// sums sum_{0 <= u < N/j} chi(u), and the cotangent-type character sum
// with its class-number prediction.

#ifndef ETAHECKE_CHARACTERS_HPP
#define ETAHECKE_CHARACTERS_HPP

#include <complex>
#include <numeric>

#include "etahecke/arith.hpp"
#include "etahecke/class_numbers.hpp"
#include "etahecke/rational.hpp"

namespace etahecke {

// Real character modulo M realized as the Kronecker symbol (u|.) times the
// principal character mod M.  The intrinsic period of (u|.) must divide M
// (true for every u drawn from the fundamental-discriminant kernels
// 1, -3, -4, 5, 8, -8, 12, 24, -24 paired with their usual moduli).
struct DirichletCharacter {
  int64_t modulus = 1;  // M >= 1
  int64_t u = 1;        // Kronecker kernel; u = 1 gives the principal character

  // chi(a); for M = 1 this is identically 1 (including a = 0).
  int operator()(int64_t a) const {
    if (modulus == 1) return 1;
    int64_t r = mod_norm(a, modulus);
    if (std::gcd(r, modulus) != 1) return 0;
    return kronecker(u, r);
  }

  bool principal() const { return u == 1 || is_square(u); }
  bool even() const { return kronecker(u, -1) == 1; }  // chi(-1) = +1
};

// Generalized Bernoulli number B_{1,chi}.  Conventions:
//   * trivial character mod 1: B_1 = -1/2 (the classical first Bernoulli
//     number with the B_n(0) normalization), the working convention that
//     makes the incomplete-sum closed form an identity;
//   * principal character mod M > 1: 0;
//   * otherwise (1/M) * sum_{a=1}^{M} chi(a) a.
inline Rat bernoulli_B1(const DirichletCharacter& chi) {
  if (chi.modulus == 1) return Rat(-1, 2);
  if (chi.principal()) return Rat(0);
  Int sum(0);
  for (int64_t a = 1; a <= chi.modulus; ++a) sum += Int(static_cast<long>(chi(a))) * static_cast<long>(a);
  Rat out(sum, Int(static_cast<long>(chi.modulus)));
  out.canonicalize();
  return out;
}

// B_{0,chi}: phi(M)/M for the principal character mod M, else 0.
inline Rat bernoulli_B0(const DirichletCharacter& chi) {
  if (!chi.principal()) return Rat(0);
  Rat out(static_cast<long>(euler_phi(chi.modulus)), static_cast<long>(chi.modulus));
  out.canonicalize();
  return out;
}

// Closed form for sum_{0 <= t < N/j} chi(t), chi mod M, requiring M | N and
// gcd(j, N) = 1:
//   -B_{1,chi} + (chi(j)/phi(j)) * sum_{psi mod j} conj(psi)(-N) B_{1,chi psi}(N)
// where B_{1,chi psi}(N) = N B_{0,chi psi} + B_{1,chi psi}.  The sum over
// all psi mod j (complex characters included) is evaluated by
// orthogonality: sum_psi conj(psi)(-N) psi(a) = phi(j) [a ≡ -N mod j], so
// it collapses to a rational sum over one residue class, with explicit
// corrections where chi psi is principal.
inline Rat charsum_suz(const DirichletCharacter& chi, int64_t N, int64_t j) {
  const int64_t M = chi.modulus;
  if (N <= 0 || j <= 0 || N % M != 0 || std::gcd(j, N) != 1)
    throw std::invalid_argument("charsum_suz: need M | N and gcd(j, N) = 1");
  const Rat B1 = bernoulli_B1(chi);
  if (j == 1) {
    // Single character psi = chi_0 mod 1, conj(psi)(-N) = 1.
    return -B1 + bernoulli_B0(chi) * Rat(static_cast<long>(N)) + B1;
  }
  const int64_t jM = j * M;  // > 1
  // Collapsed main term: (phi(j)/(jM)) sum_{a <= jM, a ≡ -N (j)} chi(a) a.
  Int acc(0);
  for (int64_t a = mod_norm(-N, j) == 0 ? j : mod_norm(-N, j); a <= jM; a += j)
    acc += Int(static_cast<long>(chi(a))) * static_cast<long>(a);
  Rat X = Rat(Int(static_cast<long>(euler_phi(j))) * acc, Int(static_cast<long>(jM)));
  X.canonicalize();
  if (chi.principal()) {
    // The psi = chi_0 term: its true B_{1} is 0 (modulus jM > 1) while the
    // collapsed sum included phi(jM)/2 for it; and its B_0 term contributes
    // N phi(jM)/(jM).
    Rat phiJM(static_cast<long>(euler_phi(jM)));
    X -= phiJM / 2;
    X += Rat(static_cast<long>(N)) * phiJM / Rat(static_cast<long>(jM));
  }
  Rat out = -B1 + Rat(static_cast<long>(chi(j)), static_cast<long>(euler_phi(j))) * X;
  out.canonicalize();
  return out;
}

// Direct evaluation of the same incomplete sum (brute-force oracle).
inline Rat charsum_direct(const DirichletCharacter& chi, int64_t N, int64_t j) {
  int64_t total = 0;
  for (int64_t t = 0; t * j < N; ++t) total += chi(t);
  return Rat(static_cast<long>(total));
}

// Cotangent-type character sum sum_{a mod n} (a|n) / (1 - e^{2 pi i a/n})
// for odd n > 1, together with its predicted closed form:
//   n ≡ 1 (mod 4): phi(n)/2 if n is a square, else 0;
//   n ≡ 3 (mod 4): i sqrt(n) H(-n).
struct CotCharsum {
  std::complex<double> computed;
  std::complex<double> predicted;
  Rat exact;             // the rational scalar in the prediction
  bool imaginary_axis;   // true when the predicted value is i sqrt(n) * exact
};

inline CotCharsum cot_charsum(int64_t n) {
  if (n <= 1 || n % 2 == 0) throw std::invalid_argument("cot_charsum: need odd n > 1");
  const double pi = 3.14159265358979323846;
  std::complex<double> sum(0.0, 0.0);
  for (int64_t a = 1; a < n; ++a) {
    int chi = kronecker(a, n);
    if (chi == 0) continue;
    double t = 2.0 * pi * static_cast<double>(a) / static_cast<double>(n);
    sum += static_cast<double>(chi) / (1.0 - std::complex<double>(std::cos(t), std::sin(t)));
  }
  CotCharsum out;
  out.computed = sum;
  if (n % 4 == 1) {
    out.imaginary_axis = false;
    out.exact = is_square(n) ? Rat(static_cast<long>(euler_phi(n)), 2) : Rat(0);
    out.exact.canonicalize();
    out.predicted = {out.exact.get_d(), 0.0};
  } else {
    out.imaginary_axis = true;
    out.exact = hurwitz_H(-n);
    out.predicted = {0.0, std::sqrt(static_cast<double>(n)) * out.exact.get_d()};
  }
  return out;
}

}  // namespace etahecke

#endif  // ETAHECKE_CHARACTERS_HPP
