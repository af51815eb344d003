// SPDX-License-Identifier: Apache-2.0
//
// Hecke operators acting on explicit q-expansions: the half-integral
// T_{p^2} on the eta-type spaces, the integral-weight T_p on level 1,
// operator matrices in an echelon basis (with a full-window membership
// check), and the q-expansion-side oracle for tr T_{n^2}.

#ifndef ETAHECKE_HECKE_HPP
#define ETAHECKE_HECKE_HPP

#include <vector>

#include "etahecke/arith.hpp"
#include "etahecke/eta_spaces.hpp"
#include "etahecke/fourier_series.hpp"
#include "etahecke/rational.hpp"

namespace etahecke {

// Small dense rational matrix (spaces here have dimension <= 3).
struct QMatrix {
  int n = 0;
  std::vector<Rat> a;

  explicit QMatrix(int size = 0) : n(size), a(static_cast<size_t>(size) * size) {}

  static QMatrix identity(int size) {
    QMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
  }

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  Rat trace() const {
    Rat t(0);
    for (int i = 0; i < n; ++i) t += at(i, i);
    t.canonicalize();
    return t;
  }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    QMatrix out(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int j = 0; j < x.n; ++j) {
        Rat acc(0);
        for (int l = 0; l < x.n; ++l) acc += x.at(i, l) * y.at(l, j);
        acc.canonicalize();
        out.at(i, j) = acc;
      }
    return out;
  }

  friend QMatrix operator-(QMatrix x, const QMatrix& y) {
    for (size_t i = 0; i < x.a.size(); ++i) {
      x.a[i] -= y.a[i];
      x.a[i].canonicalize();
    }
    return x;
  }

  friend QMatrix operator*(const Rat& t, QMatrix x) {
    for (auto& v : x.a) {
      v *= t;
      v.canonicalize();
    }
    return x;
  }
};

// T_{p^2} on a form of the family `spec` (half-integral weight k + 1/2):
//   b(n) = a(p^2 n) + chi(p) ((-1)^k n | p) p^{k-1} a(n) + p^{2k-1} a(n/p^2)
// with chi the family nebentypus, (12|.) or (-4|.).  The output window is
// the input window divided by p^2.
inline FourierSeries t_psq_half(const FourierSeries& f, const EtaSpaceSpec& spec, int64_t p) {
  spec.validate();
  if (!is_prime(p)) throw std::invalid_argument("t_psq_half: p must be prime");
  if (spec.family == EtaFamily::Eta24 ? (p == 2 || p == 3) : (p == 2))
    throw std::invalid_argument("t_psq_half: p must be coprime to the level");
  const int64_t k = spec.k();
  if (k < 1) throw std::invalid_argument("t_psq_half: weight 1/2 (k = 0) is out of scope");
  if (f.nu() != spec.nu()) throw std::invalid_argument("t_psq_half: series/family mismatch");

  const Int pk1 = int_pow(p, static_cast<unsigned long>(k - 1));
  const Int p2k1 = int_pow(p, static_cast<unsigned long>(2 * k - 1));
  FourierSeries out(f.nu(), f.nmax() / (p * p));
  for (int64_t n = 0; n <= out.nmax(); ++n) {
    Rat b = f.coeff(p * p * n);
    const int64_t sn = (k % 2 == 0) ? n : -n;  // (-1)^k n
    int chi = kronecker(spec.hecke_char_kernel(), p) * kronecker(sn, p);
    if (chi != 0) b += Rat(chi) * Rat(pk1) * f.coeff(n);
    if (n % (p * p) == 0) b += Rat(p2k1) * f.coeff(n / (p * p));
    out.set_coeff(n, b);
  }
  return out;
}

// Integral-weight T_p on level 1, weight w: b(n) = a(pn) + p^{w-1} a(n/p).
inline FourierSeries t_p_integral(const FourierSeries& f, int w, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("t_p_integral: p must be prime");
  const Int pw1 = int_pow(p, static_cast<unsigned long>(w - 1));
  FourierSeries out(f.nu(), f.nmax() / p);
  for (int64_t n = 0; n <= out.nmax(); ++n) {
    Rat b = f.coeff(p * n);
    if (n % p == 0) b += Rat(pw1) * f.coeff(n / p);
    out.set_coeff(n, b);
  }
  return out;
}

// Matrix of a linear operator from the images of the basis elements.
// Coordinates are read off at the pivots; the images are then re-checked
// against the reconstructed combination over their whole precision window,
// so a failure of space-invariance cannot pass silently.
inline QMatrix operator_matrix(const EchelonBasis& basis, const std::vector<FourierSeries>& images) {
  const int d = basis.dim();
  QMatrix m(d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m.at(i, j) = images[static_cast<size_t>(j)].coeff(basis.pivots[static_cast<size_t>(i)]);
    const FourierSeries& img = images[static_cast<size_t>(j)];
    for (int64_t n = 0; n <= img.nmax(); ++n) {
      Rat rec(0);
      for (int i = 0; i < d; ++i) rec += m.at(i, j) * basis.elements[static_cast<size_t>(i)].coeff(n);
      if (rec != img.coeff(n))
        throw std::logic_error("operator_matrix: image leaves the space at index " + std::to_string(n));
    }
  }
  return m;
}

// Matrix of T_{p^2} in an echelon basis.  The basis window must reach
// p^2 * max pivot so that the image window still covers the pivots.
inline QMatrix hecke_matrix_T_psq(const EchelonBasis& basis, int64_t p) {
  if (basis.window() < p * p * basis.spec.max_pivot())
    throw insufficient_precision("hecke_matrix_T_psq: basis window too small for p = " + std::to_string(p));
  std::vector<FourierSeries> images;
  images.reserve(static_cast<size_t>(basis.dim()));
  for (const auto& el : basis.elements) images.push_back(t_psq_half(el, basis.spec, p));
  return operator_matrix(basis, images);
}

// Matrix of T_{n^2} for n = prod p^e coprime to the level: product over
// primes, with prime powers from the Hecke recursion
//   T_{p^{2(e+1)}} = T_{p^2} T_{p^{2e}} - p^{2k-1} T_{p^{2(e-1)}},
// mirroring T_{p^{e+1}} = T_p T_{p^e} - p^{2k-1} T_{p^{e-1}} on the
// integral-weight side of the correspondence.
inline QMatrix hecke_matrix_T_nsq(const EchelonBasis& basis, int64_t n) {
  QMatrix total = QMatrix::identity(basis.dim());
  for (auto [p, e] : factorize(n)) {
    QMatrix mp = hecke_matrix_T_psq(basis, p);
    if (e > 1) {
      const Rat p2k1(int_pow(p, static_cast<unsigned long>(2 * basis.spec.k() - 1)));
      QMatrix prev = QMatrix::identity(basis.dim());
      QMatrix cur = mp;
      for (int i = 2; i <= e; ++i) {
        QMatrix next = mp * cur - p2k1 * prev;
        prev = cur;
        cur = next;
      }
      mp = cur;
    }
    total = total * mp;
  }
  return total;
}

// q-expansion-side trace of T_{n^2} on the given eta-type space; builds a
// basis window just large enough for the largest prime factor of n.
inline Rat oracle_trace_T_nsq(const EtaSpaceSpec& spec, int64_t n, const FileCache* cache = nullptr) {
  spec.validate();
  if (n < 1 || std::gcd<int64_t>(n, spec.family == EtaFamily::Eta24 ? 6 : 2) != 1)
    throw std::invalid_argument("oracle_trace_T_nsq: n must be coprime to the level");
  if (spec.dim() == 0) return Rat(0);
  if (n == 1) return Rat(spec.dim());
  int64_t pmax = 1;
  for (auto [p, e] : factorize(n)) pmax = std::max(pmax, p);
  EchelonBasis basis = eta_space_basis(spec, pmax * pmax * spec.max_pivot(), cache);
  return hecke_matrix_T_nsq(basis, n).trace();
}

// Trace of T_n on S_w(1) read from q-expansions (integral-weight oracle).
inline Rat oracle_trace_level1(int w, int64_t n) {
  const int d = dim_sw1(w);
  if (d == 0) return Rat(0);
  const int64_t window = static_cast<int64_t>(d) * std::max<int64_t>(n, 1);
  std::vector<FourierSeries> rows = level1_cusp_basis(w, window);
  // T_n = prod over prime powers, with T_{p^{e+1}} = T_p T_{p^e} - p^{w-1} T_{p^{e-1}}.
  QMatrix total = QMatrix::identity(d);
  EchelonBasis pivot_frame;  // adapter supplying operator_matrix's pivot layout
  pivot_frame.elements = rows;
  for (int i = 1; i <= d; ++i) pivot_frame.pivots.push_back(i);
  for (auto [p, e] : factorize(n)) {
    std::vector<FourierSeries> images;
    for (const auto& el : rows) images.push_back(t_p_integral(el, w, p));
    QMatrix mp = operator_matrix(pivot_frame, images);
    if (e > 1) {
      const Rat pw1(int_pow(p, static_cast<unsigned long>(w - 1)));
      QMatrix prev = QMatrix::identity(d);
      QMatrix cur = mp;
      for (int i = 2; i <= e; ++i) {
        QMatrix next = mp * cur - pw1 * prev;
        prev = cur;
        cur = next;
      }
      mp = cur;
    }
    total = total * mp;
  }
  if (n == 1) return Rat(d);
  return total.trace();
}

}  // namespace etahecke

#endif  // ETAHECKE_HECKE_HPP
