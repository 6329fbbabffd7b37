#include "virpos/interval.hpp"

#include <algorithm>

namespace virpos {

MpFloat MpFloat::log_z(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  // Load z exactly first; rounding z before the log would leak error the
  // directed rounding of the log cannot account for.
  mpfr_prec_t zbits = std::max<mpfr_prec_t>(
      2, static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2)));
  MpFloat exact(zbits);
  mpfr_set_z(exact.x_, z.get_mpz_t(), MPFR_RNDN);  // exact at zbits
  MpFloat out(prec);
  mpfr_log(out.x_, exact.x_, rnd);
  return out;
}

MpFloat MpInterval::width() const {
  MpFloat w(std::max(lo.precision(), hi.precision()));
  mpfr_sub(w.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
  return w;
}

MpFloat MpInterval::midpoint() const {
  MpFloat m(std::max(lo.precision(), hi.precision()));
  mpfr_add(m.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m;
}

}  // namespace virpos
