#pragma once

// Bound values in 256-bit MPFR arithmetic.

#include <mpfr.h>

#include "geohyper/geohyper.hpp"

namespace oracle {

using geohyper::Rational;

inline double mpfr_power(long n, const Rational& e) {
  mpfr_t base, ex, out;
  mpfr_inits2(256, base, ex, out, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(base, n, MPFR_RNDN);
  mpfr_set_q(ex, e.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_pow(out, base, ex, MPFR_RNDN);
  double d = mpfr_get_d(out, MPFR_RNDN);
  mpfr_clears(base, ex, out, static_cast<mpfr_ptr>(nullptr));
  return d;
}

inline double mpfr_kst(long n, long m, long r, long s) {
  mpfr_t a, b, t;
  mpfr_inits2(256, a, b, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(a, s - 1, MPFR_RNDN);
  mpfr_rootn_ui(a, a, static_cast<unsigned long>(r), MPFR_RNDN);
  mpfr_mul_si(a, a, n, MPFR_RNDN);
  mpfr_set_si(b, m, MPFR_RNDN);
  mpfr_set_si(t, r - 1, MPFR_RNDN);
  mpfr_div_si(t, t, r, MPFR_RNDN);
  mpfr_pow(b, b, t, MPFR_RNDN);
  mpfr_mul(a, a, b, MPFR_RNDN);
  mpfr_set_si(t, (r - 1) * m, MPFR_RNDN);
  mpfr_add(a, a, t, MPFR_RNDN);
  double d = mpfr_get_d(a, MPFR_RNDN);
  mpfr_clears(a, b, t, static_cast<mpfr_ptr>(nullptr));
  return d;
}

}  // namespace oracle
