#pragma once

#include <gmpxx.h>

namespace virpos {

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline mpq_class pow_ui(const mpq_class& base, unsigned long e) {
  mpq_class r(pow_ui(mpq_class(base).get_num(), e),
              pow_ui(mpq_class(base).get_den(), e));
  r.canonicalize();
  return r;
}

inline std::size_t bit_length(const mpz_class& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace virpos
