#pragma once

#include <gmpxx.h>
#include <mpfr.h>

namespace virpos {

// Minimal RAII wrapper over mpfr_t. Only what certified sign evaluation
// needs: exact construction, logs with directed rounding, comparisons.
class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  MpFloat(const MpFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  MpFloat(MpFloat&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  MpFloat& operator=(const MpFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  MpFloat& operator=(MpFloat&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~MpFloat() { mpfr_clear(x_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  // ln(z) for integer z >= 1, correctly rounded at `prec` in direction rnd.
  static MpFloat log_z(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd);

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(x_, rnd); }
  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }
  int cmp(const MpFloat& o) const { return mpfr_cmp(x_, o.x_); }
  int cmp_q(const mpq_class& q) const { return mpfr_cmp_q(x_, q.get_mpq_t()); }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

 private:
  mpfr_t x_;
};

// Closed interval [lo, hi] certified to contain a real value.
struct MpInterval {
  MpFloat lo, hi;

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

  // +1 / -1 when the whole interval is on one side of zero, 0 otherwise.
  int certified_sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  bool contains_q(const mpq_class& q) const {
    return lo.cmp_q(q) <= 0 && hi.cmp_q(q) >= 0;
  }

  MpFloat width() const;     // hi - lo, rounded up
  MpFloat midpoint() const;  // (lo + hi) / 2, nearest

  double lo_double() const { return lo.to_double(MPFR_RNDD); }
  double hi_double() const { return hi.to_double(MPFR_RNDU); }
};

}  // namespace virpos
