#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace homfly {

// Exact arbitrary-precision rational. All coefficient and exponent arithmetic
// in this library goes through this type; no floating point anywhere.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// gmpxx has no long long overloads; funnel wide integers through here.
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

// n/d in lowest terms. mpq_class(n, d) alone does not canonicalize, and
// gmp comparison assumes canonical form, so always build fractions here.
inline Rat rat_frac(long long n, long long d) {
  Rat r(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_den() == 1;
}

// Requires an integer value that fits in long.
inline long rat_to_long(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw std::invalid_argument("not an integer: " + rat_to_string(r));
  if (!c.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + rat_to_string(r));
  return c.get_num().get_si();
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0^negative");
    return Rat(0);
  }
  mpz_class num = base.get_num(), den = base.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
    if (num < 0) { num = -num; den = -den; }
  }
  mpz_class rn, rd;
  mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

inline long lcm_long(long a, long b) {
  mpz_class r;
  mpz_class za(a), zb(b);
  mpz_lcm(r.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  if (!r.fits_slong_p()) throw std::overflow_error("lcm overflow");
  return r.get_si();
}

}  // namespace homfly
