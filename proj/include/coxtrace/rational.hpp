#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace coxtrace {

// Arbitrary-precision integers and rationals.  mpq_class keeps the canonical
// form we rely on (positive denominator, reduced fraction) as long as values
// are built through its operators; the named constructors below canonicalize
// explicitly.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool fits_long(const Rational& r) {
  return is_integer(r) && r.get_num().fits_slong_p();
}

inline long to_long(const Rational& r) { return r.get_num().get_si(); }

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace coxtrace
