// SPDX-License-Identifier: Apache-2.0
//
// Dense exact q-expansions.  A FourierSeries holds rational coefficients
// a(0..nmax) of sum_n a(n) q^{n/nu} for a fixed denominator nu; every
// series carries its precision window explicitly and any read past the
// window raises insufficient_precision instead of silently truncating.
// Also: eta products via the pentagonal number theorem, level-1
// Eisenstein series, the monomial basis of M_s(SL2(Z)), and partition
// numbers.

#ifndef ETAHECKE_FOURIER_SERIES_HPP
#define ETAHECKE_FOURIER_SERIES_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "etahecke/arith.hpp"
#include "etahecke/rational.hpp"

namespace etahecke {

// Raised when a computation would need coefficients beyond a series'
// stated precision window.
struct insufficient_precision : std::runtime_error {
  explicit insufficient_precision(const std::string& what) : std::runtime_error(what) {}
};

class FourierSeries {
 public:
  FourierSeries(int64_t nu, int64_t nmax) : nu_(nu), c_(static_cast<size_t>(nmax) + 1) {
    if (nu <= 0 || nmax < 0) throw std::invalid_argument("FourierSeries: bad nu/nmax");
  }

  int64_t nu() const { return nu_; }
  int64_t nmax() const { return static_cast<int64_t>(c_.size()) - 1; }

  // Coefficient of q^{n/nu}; negative n reads as 0, n past the window throws.
  const Rat& coeff(int64_t n) const {
    static const Rat zero(0);
    if (n < 0) return zero;
    if (n > nmax())
      throw insufficient_precision("coefficient " + std::to_string(n) + " beyond window " +
                                   std::to_string(nmax()));
    return c_[static_cast<size_t>(n)];
  }

  void set_coeff(int64_t n, const Rat& v) {
    if (n < 0 || n > nmax()) throw std::out_of_range("set_coeff: index outside window");
    c_[static_cast<size_t>(n)] = v;
    c_[static_cast<size_t>(n)].canonicalize();
  }

  // Index of the first nonzero coefficient, or nmax()+1 for the zero series.
  int64_t order() const {
    for (int64_t n = 0; n <= nmax(); ++n)
      if (c_[static_cast<size_t>(n)] != 0) return n;
    return nmax() + 1;
  }

  bool is_zero() const { return order() > nmax(); }

  FourierSeries truncated(int64_t new_nmax) const {
    FourierSeries out(nu_, std::min(new_nmax, nmax()));
    std::copy(c_.begin(), c_.begin() + static_cast<size_t>(out.nmax()) + 1, out.c_.begin());
    return out;
  }

  // Re-express in powers of q^{1/new_nu}: index n maps to n*new_nu/nu,
  // which must be integral for every nonzero coefficient.
  FourierSeries rescaled(int64_t new_nu) const {
    FourierSeries out(new_nu, nmax() * new_nu / nu_);
    for (int64_t n = 0; n <= nmax(); ++n) {
      const Rat& v = c_[static_cast<size_t>(n)];
      if (v == 0) continue;
      if ((n * new_nu) % nu_ != 0)
        throw std::invalid_argument("rescaled: exponent " + std::to_string(n) + "/" +
                                    std::to_string(nu_) + " not representable");
      out.c_[static_cast<size_t>(n * new_nu / nu_)] = v;
    }
    return out;
  }

  FourierSeries& operator+=(const FourierSeries& o) { return axpy(o, Rat(1)); }
  FourierSeries& operator-=(const FourierSeries& o) { return axpy(o, Rat(-1)); }

  // this += t * o, shrinking the window to the common one.
  FourierSeries& axpy(const FourierSeries& o, const Rat& t) {
    require_same_nu(o);
    if (o.nmax() < nmax()) c_.resize(static_cast<size_t>(o.nmax()) + 1);
    for (int64_t n = 0; n <= nmax(); ++n) {
      c_[static_cast<size_t>(n)] += t * o.c_[static_cast<size_t>(n)];
      c_[static_cast<size_t>(n)].canonicalize();
    }
    return *this;
  }

  FourierSeries& operator*=(const Rat& t) {
    for (auto& v : c_) {
      v *= t;
      v.canonicalize();
    }
    return *this;
  }

  // Exact product.  The result window is min(nmax_a + ord_b, nmax_b + ord_a)
  // (capped by what the factors determine exactly).  Internally the
  // convolution runs over integer numerators with the two common
  // denominators pulled out, skipping zero coefficients, so eta products
  // and arithmetically-supported series multiply at their true density.
  friend FourierSeries operator*(const FourierSeries& a, const FourierSeries& b) {
    a.require_same_nu(b);
    const int64_t window = std::min(a.nmax() + b.order(), b.nmax() + a.order());
    FourierSeries out(a.nu_, std::max<int64_t>(window, 0));
    // Common denominators.
    Int da(1), db(1);
    for (const auto& v : a.c_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& v : b.c_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), v.get_den().get_mpz_t());
    // Nonzero integer terms of each factor.
    auto collect = [](const FourierSeries& f, const Int& d) {
      std::vector<std::pair<int64_t, Int>> terms;
      for (int64_t n = 0; n <= f.nmax(); ++n) {
        const Rat& v = f.c_[static_cast<size_t>(n)];
        if (v == 0) continue;
        terms.emplace_back(n, Int(v.get_num() * (d / v.get_den())));
      }
      return terms;
    };
    const auto ta = collect(a, da);
    const auto tb = collect(b, db);
    std::vector<Int> acc(static_cast<size_t>(out.nmax()) + 1);
    for (const auto& [i, x] : ta) {
      if (i > out.nmax()) break;
      for (const auto& [j, y] : tb) {
        if (i + j > out.nmax()) break;
        mpz_addmul(acc[static_cast<size_t>(i + j)].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
    const Int dd = da * db;
    for (int64_t n = 0; n <= out.nmax(); ++n) {
      Int& num = acc[static_cast<size_t>(n)];
      if (num == 0) continue;
      Rat v(num, dd);
      v.canonicalize();
      out.c_[static_cast<size_t>(n)] = v;
    }
    return out;
  }

  FourierSeries pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    FourierSeries out(nu_, nmax());
    out.set_coeff(0, Rat(1));
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  bool operator==(const FourierSeries& o) const { return nu_ == o.nu_ && c_ == o.c_; }

  // Text round-trip (sparse "index value" lines) used by the file cache.
  std::string serialize() const {
    std::ostringstream out;
    out << nu_ << ' ' << nmax() << '\n';
    for (int64_t n = 0; n <= nmax(); ++n)
      if (c_[static_cast<size_t>(n)] != 0) out << n << ' ' << rat_str(c_[static_cast<size_t>(n)]) << '\n';
    return out.str();
  }

  static FourierSeries deserialize(const std::string& payload) {
    std::istringstream in(payload);
    int64_t nu = 0, nmax = -1;
    if (!(in >> nu >> nmax)) throw std::invalid_argument("FourierSeries::deserialize: bad header");
    FourierSeries out(nu, nmax);
    int64_t n;
    std::string v;
    while (in >> n >> v) out.set_coeff(n, rat_parse(v));
    return out;
  }

 private:
  void require_same_nu(const FourierSeries& o) const {
    if (nu_ != o.nu_) throw std::invalid_argument("FourierSeries: mismatched exponent denominators");
  }

  int64_t nu_;
  std::vector<Rat> c_;
};

// eta(scale * tau) as a series in q^{1/nu} with nu = 24/gcd(24, scale):
// sum_{m in Z} (-1)^m q^{scale (6m+1)^2 / 24}.
inline FourierSeries eta_series(int64_t scale, int64_t nmax) {
  if (scale <= 0) throw std::invalid_argument("eta_series: scale must be positive");
  const int64_t g = std::gcd<int64_t>(24, scale);
  FourierSeries out(24 / g, nmax);
  for (int64_t m = 0;; ++m) {
    bool any = false;
    for (int64_t mm : {m, -m - 1}) {
      int64_t six = 6 * mm + 1;
      int64_t n = (scale / g) * six * six;
      if (n <= nmax) {
        any = true;
        out.set_coeff(n, Rat(mm % 2 == 0 ? 1 : -1));
      }
    }
    if (!any) break;
  }
  return out;
}

namespace detail {

// Classical Bernoulli numbers B_0..B_s (B_1 = -1/2 convention).
inline std::vector<Rat> bernoulli_numbers(int s) {
  std::vector<Rat> B(static_cast<size_t>(s) + 1);
  B[0] = 1;
  for (int m = 1; m <= s; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0.
    Rat acc(0);
    Int c(1);  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rat(c) * B[static_cast<size_t>(j)];
      c = c * (m + 1 - j) / (j + 1);
    }
    B[static_cast<size_t>(m)] = -acc / Rat(c);
    B[static_cast<size_t>(m)].canonicalize();
  }
  return B;
}

}  // namespace detail

// Normalized Eisenstein series E_s = 1 - (2s/B_s) sum sigma_{s-1}(n) q^n on
// SL2(Z), s even >= 4 (E_0 = 1 accepted for convenience); nu = 1.
inline FourierSeries eisenstein(int s, int64_t nmax) {
  if (s < 0 || s % 2 != 0 || s == 2) throw std::invalid_argument("eisenstein: need even s >= 4 or s = 0");
  FourierSeries out(1, nmax);
  out.set_coeff(0, Rat(1));
  if (s == 0) return out;
  const Rat factor = Rat(-2 * s) / detail::bernoulli_numbers(s)[static_cast<size_t>(s)];
  // sigma_{s-1} by sieving over divisors.
  std::vector<Rat> sig(static_cast<size_t>(nmax) + 1);
  for (int64_t d = 1; d <= nmax; ++d) {
    Int dp = int_pow(d, static_cast<unsigned long>(s - 1));
    for (int64_t n = d; n <= nmax; n += d) sig[static_cast<size_t>(n)] += Rat(dp);
  }
  for (int64_t n = 1; n <= nmax; ++n) out.set_coeff(n, factor * sig[static_cast<size_t>(n)]);
  return out;
}

// Monomial basis {E_4^a E_6^b : 4a + 6b = s} of M_s(SL2(Z)), nu = 1.
// Ordered by decreasing power of E_4.
inline std::vector<FourierSeries> ms1_basis(int s, int64_t nmax) {
  if (s < 0 || s % 2 != 0) throw std::invalid_argument("ms1_basis: s must be even and nonnegative");
  std::vector<FourierSeries> out;
  if (s % 2 != 0 || s == 2) return out;
  const FourierSeries e4 = eisenstein(4, nmax);
  const FourierSeries e6 = eisenstein(6, nmax);
  for (int a = s / 4; a >= 0; --a) {
    if ((s - 4 * a) % 6 != 0) continue;
    int b = (s - 4 * a) / 6;
    out.push_back(e4.pow(a) * e6.pow(b));
  }
  return out;
}

// dim M_s(SL2(Z)) for even s >= 0.
inline int dim_ms1(int s) {
  if (s < 0 || s % 2 != 0) return 0;
  if (s % 12 == 2) return s / 12;
  return s / 12 + 1;
}

// p(0), ..., p(N) by Euler's pentagonal-number recurrence.
inline std::vector<Int> partition_numbers(int64_t N) {
  std::vector<Int> p(static_cast<size_t>(N) + 1);
  p[0] = 1;
  for (int64_t n = 1; n <= N; ++n) {
    Int acc(0);
    for (int64_t k = 1;; ++k) {
      int64_t g1 = k * (3 * k - 1) / 2;
      int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      if (k % 2 == 1) {
        acc += p[static_cast<size_t>(n - g1)];
        if (g2 <= n) acc += p[static_cast<size_t>(n - g2)];
      } else {
        acc -= p[static_cast<size_t>(n - g1)];
        if (g2 <= n) acc -= p[static_cast<size_t>(n - g2)];
      }
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

}  // namespace etahecke

#endif  // ETAHECKE_FOURIER_SERIES_HPP
