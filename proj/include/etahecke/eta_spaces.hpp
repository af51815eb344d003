// SPDX-License-Identifier: Apache-2.0
//
// The eta-type cusp spaces and their echelonized q-expansion bases.
//   Eta24 family: S_{r,s} = { eta(tau)^r f(tau) : f in M_s(1) }, r odd,
//     coprime to 6, 0 < r < 24; stored in powers of q^{1/24}, support
//     n ≡ r (mod 24), pivots r + 24 i.
//   Eta8 family: eta power 3r with r odd, 0 < r < 8; stored in powers of
//     q^{1/8}, support n ≡ r (mod 8), pivots r + 8 i.  (The stored index
//     equals the integer q-exponent of the level-64 realization
//     eta(8 tau)^{3r} f(8 tau), which is what the Hecke action references.)
// Also the level-1 integral-weight cusp bases Delta * M_{w-12}(1).

#ifndef ETAHECKE_ETA_SPACES_HPP
#define ETAHECKE_ETA_SPACES_HPP

#include <string>
#include <vector>

#include "etahecke/cache.hpp"
#include "etahecke/fourier_series.hpp"

namespace etahecke {

enum class EtaFamily { Eta24, Eta8 };

struct EtaSpaceSpec {
  EtaFamily family;
  int64_t r;  // Eta24: the eta exponent; Eta8: r with eta exponent 3r
  int64_t s;  // weight of the M_s(1) factor, even >= 0

  void validate() const {
    if (s < 0 || s % 2 != 0) throw std::invalid_argument("EtaSpaceSpec: s must be even and >= 0");
    if (family == EtaFamily::Eta24) {
      if (r < 1 || r > 23 || std::gcd<int64_t>(r, 6) != 1)
        throw std::invalid_argument("EtaSpaceSpec: Eta24 needs 0 < r < 24 coprime to 6");
    } else {
      if (r < 1 || r > 7 || r % 2 == 0)
        throw std::invalid_argument("EtaSpaceSpec: Eta8 needs odd 0 < r < 8");
    }
  }

  int64_t eta_power() const { return family == EtaFamily::Eta24 ? r : 3 * r; }
  // Half-integral weight is k + 1/2.
  int64_t k() const { return (eta_power() - 1) / 2 + s; }
  int64_t nu() const { return family == EtaFamily::Eta24 ? 24 : 8; }
  // Kronecker kernel of the nebentypus: (12|.) resp. (-4|.).
  int64_t char_kernel() const { return family == EtaFamily::Eta24 ? 12 : -4; }
  // Kernel of the character entering Shimura's T_{p^2} coefficient formula.
  // For the level-576 family this is the nebentypus (12|.) itself.  For the
  // level-64 family the nebentypus (-4|.) is stated in the convention that
  // bundles the theta-multiplier factor eps_d^{-1}, and the character left
  // over in the T_{p^2} middle term is (-4|.)^2 = trivial; with (-4|.) kept
  // there, the trace identity fails for every p ≡ 3 (mod 4) not dividing
  // the pivot, and with the trivial character it holds on the whole grid.
  int64_t hecke_char_kernel() const { return family == EtaFamily::Eta24 ? 12 : 1; }
  int dim() const { return dim_ms1(static_cast<int>(s)); }
  int64_t pivot(int i) const { return r + nu() * i; }
  int64_t max_pivot() const { return pivot(dim() - 1); }

  std::string name() const {
    return std::string(family == EtaFamily::Eta24 ? "Eta24" : "Eta8") + "-r" + std::to_string(r) +
           "-s" + std::to_string(s);
  }
};

struct EchelonBasis {
  EtaSpaceSpec spec;
  std::vector<FourierSeries> elements;  // unit leading coefficients at the pivots
  std::vector<int64_t> pivots;          // spec.pivot(0), spec.pivot(1), ...

  int dim() const { return static_cast<int>(elements.size()); }
  int64_t window() const { return elements.empty() ? 0 : elements.front().nmax(); }
};

namespace detail {

// Row-reduce to unit pivots at the expected leading exponents.
inline void echelonize(std::vector<FourierSeries>& rows, const std::vector<int64_t>& pivots) {
  for (size_t i = 0; i < rows.size(); ++i) {
    const int64_t piv = pivots[i];
    size_t lead = i;
    while (lead < rows.size() && rows[lead].coeff(piv) == 0) ++lead;
    if (lead == rows.size())
      throw std::logic_error("echelonize: expected pivot " + std::to_string(piv) + " not attained");
    std::swap(rows[i], rows[lead]);
    rows[i] *= Rat(1) / rows[i].coeff(piv);
    for (size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      Rat c = rows[j].coeff(piv);
      if (c != 0) rows[j].axpy(rows[i], -c);
    }
  }
}

}  // namespace detail

// Echelonized basis with every element exact through index `nmax`
// (in units of q^{1/nu}).  Pass a FileCache to persist/reuse expansions.
inline EchelonBasis eta_space_basis(const EtaSpaceSpec& spec, int64_t nmax,
                                    const FileCache* cache = nullptr) {
  spec.validate();
  if (spec.dim() > 0 && nmax < spec.max_pivot())
    throw std::invalid_argument("eta_space_basis: window smaller than the pivot range");

  const std::string cache_key = "basis-" + spec.name() + "-n" + std::to_string(nmax);
  if (cache) {
    if (auto payload = cache->get(cache_key)) {
      EchelonBasis basis;
      basis.spec = spec;
      std::istringstream in(*payload);
      std::string line, block;
      while (std::getline(in, line)) {
        if (line == "---") {
          basis.elements.push_back(FourierSeries::deserialize(block));
          block.clear();
        } else {
          block += line + "\n";
        }
      }
      if (static_cast<int>(basis.elements.size()) == spec.dim()) {
        for (int i = 0; i < spec.dim(); ++i) basis.pivots.push_back(spec.pivot(i));
        return basis;
      }
    }
  }

  EchelonBasis basis;
  basis.spec = spec;
  // eta(tau)^p in powers of q^{1/24}, then rescaled to the family's nu.
  // (For Eta8 the power 3r has all exponents divisible by 3.)
  const int64_t nmax24 = nmax * 24 / spec.nu();
  FourierSeries etapow = eta_series(1, nmax24).pow(static_cast<int>(spec.eta_power()));
  etapow = etapow.truncated(nmax24).rescaled(spec.nu());
  // Monomial basis of M_s(1), rescaled into the same variable.
  for (const FourierSeries& f : ms1_basis(static_cast<int>(spec.s), nmax / spec.nu() + 1))
    basis.elements.push_back(etapow * f.rescaled(spec.nu()));
  for (int i = 0; i < spec.dim(); ++i) basis.pivots.push_back(spec.pivot(i));
  detail::echelonize(basis.elements, basis.pivots);
  for (auto& el : basis.elements) el = el.truncated(nmax);

  if (cache) {
    std::string payload;
    for (const auto& el : basis.elements) payload += el.serialize() + "---\n";
    cache->put(cache_key, payload);
  }
  return basis;
}

// dim S_w(SL2(Z)) for even w.
inline int dim_sw1(int w) {
  if (w < 12 || w % 2 != 0) return 0;
  return dim_ms1(w - 12);
}

// Echelonized basis of S_w(1) = Delta * M_{w-12}(1), pivots 1..d, nu = 1.
inline std::vector<FourierSeries> level1_cusp_basis(int w, int64_t nmax) {
  std::vector<FourierSeries> rows;
  if (dim_sw1(w) == 0) return rows;
  FourierSeries delta = eta_series(1, 24 * (nmax + 1)).pow(24).truncated(24 * nmax).rescaled(1);
  for (const FourierSeries& f : ms1_basis(w - 12, nmax)) rows.push_back(delta * f);
  std::vector<int64_t> pivots;
  for (int i = 1; i <= dim_sw1(w); ++i) pivots.push_back(i);
  detail::echelonize(rows, pivots);
  return rows;
}

}  // namespace etahecke

#endif  // ETAHECKE_ETA_SPACES_HPP
