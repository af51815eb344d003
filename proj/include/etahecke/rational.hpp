// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic substrate: GMP-backed integers and rationals plus the
// few helpers (powers, parsing/printing as "p/q") the rest of the library
// needs.  All downstream quantities (class numbers, Bernoulli numbers,
// q-expansion coefficients, traces) are etahecke::Rat values.

#ifndef ETAHECKE_RATIONAL_HPP
#define ETAHECKE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace etahecke {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Int int_pow(std::int64_t base, unsigned long e) { return int_pow(Int(static_cast<long>(base)), e); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out(1);
  Rat b = base;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

// Render a rational as "p" or "p/q" (q > 1), the exchange format used by
// the CLI's JSON/CSV output.
inline std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  std::string s = c.get_num().get_str();
  if (c.get_den() != 1) s += "/" + c.get_den().get_str();
  return s;
}

inline Rat rat_parse(const std::string& s) {
  Rat out;
  if (out.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  out.canonicalize();
  return out;
}

}  // namespace etahecke

#endif  // ETAHECKE_RATIONAL_HPP
