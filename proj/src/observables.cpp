#include "virpos/observables.hpp"

#include "virpos/combinatorics.hpp"
#include "virpos/errors.hpp"
#include "virpos/interval.hpp"

namespace virpos {

HhatValue hhat(const MatchSequence& ms, int i) {
  if (i < 0 || i > ms.max_size()) throw IndexError("hhat: index " + std::to_string(i));
  mpz_class nr = mpz_class(ms.n) * ms.r;
  mpq_class v(ms.m[i] * factorial(i), pow_ui(nr, i));
  v.canonicalize();
  HhatValue h;
  h.i = i;
  h.value = v - 1;
  return h;
}

Alpha0Value alpha0(const MatchSequence& ms, int k, int i,
                   const Alpha0Policy& policy) {
  if (k < 2 || i < 0 || i + k > ms.max_size())
    throw IndexError("alpha0: (k, i) outside the meaningful range");

  Alpha0Value out;
  out.k = k;
  out.i = i;
  for (int l = 0; l <= k; ++l)
    ((l & 1) == (k & 1) ? out.lplus : out.lminus).push_back(l);

  // 1 + hhat_j = a_j / (nr)^j with a_j = j! m_j, all positive.
  mpz_class nr = mpz_class(ms.n) * ms.r;
  std::vector<mpq_class> base(k + 1);
  mpz_class weighted_bits = 0;
  for (int l = 0; l <= k; ++l) {
    int j = i + l;
    if (ms.m[j] <= 0) throw UndefinedLogError("alpha0: m_" + std::to_string(j) + " <= 0");
    base[l] = mpq_class(ms.m[j] * factorial(j), pow_ui(nr, j));
    base[l].canonicalize();
    weighted_bits += binomial(k, l) *
                     static_cast<unsigned long>(bit_length(base[l].get_num()) +
                                                bit_length(base[l].get_den()));
  }

  if (weighted_bits <= policy.rational_bit_budget) {
    mpq_class plus = 1, minus = 1;
    for (int l = 0; l <= k; ++l) {
      mpq_class p = pow_ui(base[l], binomial(k, l).get_ui());
      if ((l & 1) == (k & 1))
        plus *= p;
      else
        minus *= p;
    }
    out.value = plus - minus;
    out.value.canonicalize();
    return out;
  }

  // Certified interval fallback: directed-rounding products of positive
  // rationals, then an outward difference. Binary exponentiation with a
  // single rounding direction is monotone for positive operands.
  out.is_exact = false;
  const int prec = policy.interval_bits;
  auto pow_directed = [&](const mpq_class& b, unsigned long e, mpfr_rnd_t rnd) {
    MpFloat acc(prec), sq(prec);
    mpfr_set_ui(acc.raw(), 1, rnd);
    mpfr_set_q(sq.raw(), b.get_mpq_t(), rnd);
    while (e) {
      if (e & 1) mpfr_mul(acc.raw(), acc.raw(), sq.raw(), rnd);
      e >>= 1;
      if (e) mpfr_mul(sq.raw(), sq.raw(), sq.raw(), rnd);
    }
    return acc;
  };
  MpFloat plus_lo(prec), plus_hi(prec), minus_lo(prec), minus_hi(prec);
  mpfr_set_ui(plus_lo.raw(), 1, MPFR_RNDD);
  mpfr_set_ui(plus_hi.raw(), 1, MPFR_RNDU);
  mpfr_set_ui(minus_lo.raw(), 1, MPFR_RNDD);
  mpfr_set_ui(minus_hi.raw(), 1, MPFR_RNDU);
  for (int l = 0; l <= k; ++l) {
    unsigned long e = binomial(k, l).get_ui();
    bool to_plus = (l & 1) == (k & 1);
    MpFloat& lo = to_plus ? plus_lo : minus_lo;
    MpFloat& hi = to_plus ? plus_hi : minus_hi;
    MpFloat tlo = pow_directed(base[l], e, MPFR_RNDD);
    MpFloat thi = pow_directed(base[l], e, MPFR_RNDU);
    mpfr_mul(lo.raw(), lo.raw(), tlo.raw(), MPFR_RNDD);
    mpfr_mul(hi.raw(), hi.raw(), thi.raw(), MPFR_RNDU);
  }
  MpFloat dlo(prec), dhi(prec);
  mpfr_sub(dlo.raw(), plus_lo.raw(), minus_hi.raw(), MPFR_RNDD);
  mpfr_sub(dhi.raw(), plus_hi.raw(), minus_lo.raw(), MPFR_RNDU);
  out.approx = {mpfr_get_d(dlo.raw(), MPFR_RNDD), mpfr_get_d(dhi.raw(), MPFR_RNDU)};
  return out;
}

mpq_class asymptotic_alpha0(int k, int r, long n) {
  if (k < 2) throw IndexError("asymptotic_alpha0: k >= 2 required");
  if (r < 1 || n < 1) throw IndexError("asymptotic_alpha0: r, n >= 1 required");
  mpz_class rk = pow_ui(mpz_class(r), k - 1);
  mpz_class nk = pow_ui(mpz_class(n), k - 1);
  mpq_class v(factorial(k - 2) * (1 - 2 * rk), nk * rk);
  v.canonicalize();
  return v;
}

BoundEstimate second_moment_bound(const std::vector<mpq_class>& samples) {
  if (samples.size() < 2)
    throw InsufficientSamplesError("second_moment_bound: need at least 2 samples");
  mpq_class sum = 0, sum_sq = 0;
  for (const auto& s : samples) {
    sum += s;
    sum_sq += s * s;
  }
  return second_moment_bound_from_sums(sum, sum_sq, samples.size());
}

BoundEstimate second_moment_bound_from_sums(const mpq_class& sum,
                                            const mpq_class& sum_sq,
                                            std::size_t count) {
  if (count < 2)
    throw InsufficientSamplesError("second_moment_bound: need at least 2 samples");
  BoundEstimate est;
  est.sample_count = count;
  mpq_class n(static_cast<unsigned long>(count));
  est.alpha = sum / n;
  est.beta = sum_sq / n - est.alpha * est.alpha;
  est.alpha.canonicalize();
  est.beta.canonicalize();
  if (est.alpha < 0) {
    est.bound = est.beta / (est.alpha * est.alpha);
    est.bound->canonicalize();
  } else {
    est.alpha_non_negative = true;
  }
  return est;
}

}  // namespace virpos
