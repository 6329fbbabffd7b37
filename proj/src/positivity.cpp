#include "virpos/positivity.hpp"

#include "virpos/combinatorics.hpp"
#include "virpos/errors.hpp"

namespace virpos {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "positive";
    case Sign::Zero: return "zero";
    case Sign::Negative: return "negative";
    case Sign::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// a_j = j! m_j for j = i..i+k. Every log in the difference is of one of
// these.
std::vector<mpz_class> weighted_counts(const MatchSequence& ms, int k, int i) {
  std::vector<mpz_class> a(k + 1);
  for (int l = 0; l <= k; ++l) {
    const mpz_class& m = ms.m[i + l];
    if (m == 0)
      throw UndefinedLogError("m_" + std::to_string(i + l) + " = 0");
    if (m < 0) throw Error("negative matching count");
    a[l] = factorial(i + l) * m;
  }
  return a;
}

void check_range(const MatchSequence& ms, int k, int i, int k_min) {
  if (k < k_min || i < 0 || i + k > ms.max_size())
    throw IndexError("(k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                     ") outside the meaningful range of a sequence with max index " +
                     std::to_string(ms.max_size()));
}

}  // namespace

MpInterval u_value(const MatchSequence& ms, int i, int precision_bits) {
  if (i < 0 || i > ms.max_size()) throw IndexError("u_value: index " + std::to_string(i));
  if (ms.m[i] == 0) throw UndefinedLogError("u_value: m_" + std::to_string(i) + " = 0");
  mpz_class a = factorial(i) * ms.m[i];
  MpInterval out;
  // u = -ln a, so the rounded-up log becomes the lower endpoint.
  MpFloat ln_lo = MpFloat::log_z(a, precision_bits, MPFR_RNDD);
  MpFloat ln_hi = MpFloat::log_z(a, precision_bits, MPFR_RNDU);
  out.lo = MpFloat(precision_bits);
  out.hi = MpFloat(precision_bits);
  mpfr_neg(out.lo.raw(), ln_hi.raw(), MPFR_RNDD);
  mpfr_neg(out.hi.raw(), ln_lo.raw(), MPFR_RNDU);
  return out;
}

SignVerdict delta_sign(const MatchSequence& ms, int k, int i,
                       const SignPolicy& policy) {
  check_range(ms, k, i, 1);
  std::vector<mpz_class> a = weighted_counts(ms, k, i);

  // Exponent-weighted size of the exact products.
  mpz_class total_bits = 0;
  for (int l = 0; l <= k; ++l)
    total_bits += binomial(k, l) * static_cast<unsigned long>(bit_length(a[l]));

  SignVerdict v;
  if (total_bits <= policy.exact_bit_budget) {
    mpz_class plus = 1, minus = 1;  // parity of l equal / opposite to k
    for (int l = 0; l <= k; ++l) {
      mpz_class c = binomial(k, l);
      mpz_class term = pow_ui(a[l], c.get_ui());
      if ((l & 1) == (k & 1))
        plus *= term;
      else
        minus *= term;
    }
    // Delta^k u(i) = ln(minus/plus)
    int cmp = mpz_cmp(plus.get_mpz_t(), minus.get_mpz_t());
    v.method = SignMethod::ExactInteger;
    v.sign = cmp < 0 ? Sign::Positive : cmp > 0 ? Sign::Negative : Sign::Zero;
    if (total_bits <= policy.witness_bit_cap)
      v.products = std::make_pair(std::move(plus), std::move(minus));
    return v;
  }

  // Interval ladder on S = sum_{L-} C ln a - sum_{L+} C ln a.
  for (int prec = policy.interval_start_bits; prec <= policy.interval_max_bits;
       prec *= 2) {
    MpFloat slo(prec), shi(prec), t(prec);
    for (int l = 0; l <= k; ++l) {
      mpz_class c = binomial(k, l);
      // ln a >= 0 and c > 0, so directed multiplication keeps the bound side.
      MpFloat ln_lo = MpFloat::log_z(a[l], prec, MPFR_RNDD);
      MpFloat ln_hi = MpFloat::log_z(a[l], prec, MPFR_RNDU);
      if ((l & 1) != (k & 1)) {
        mpfr_mul_z(t.raw(), ln_lo.raw(), c.get_mpz_t(), MPFR_RNDD);
        mpfr_add(slo.raw(), slo.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul_z(t.raw(), ln_hi.raw(), c.get_mpz_t(), MPFR_RNDU);
        mpfr_add(shi.raw(), shi.raw(), t.raw(), MPFR_RNDU);
      } else {
        mpfr_mul_z(t.raw(), ln_hi.raw(), c.get_mpz_t(), MPFR_RNDU);
        mpfr_sub(slo.raw(), slo.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul_z(t.raw(), ln_lo.raw(), c.get_mpz_t(), MPFR_RNDD);
        mpfr_sub(shi.raw(), shi.raw(), t.raw(), MPFR_RNDU);
      }
    }
    v.method = SignMethod::IntervalBits;
    v.precision_bits = prec;
    v.log_delta = std::make_pair(mpfr_get_d(slo.raw(), MPFR_RNDD),
                                 mpfr_get_d(shi.raw(), MPFR_RNDU));
    if (mpfr_sgn(slo.raw()) > 0) {
      v.sign = Sign::Positive;
      return v;
    }
    if (mpfr_sgn(shi.raw()) < 0) {
      v.sign = Sign::Negative;
      return v;
    }
  }
  v.sign = Sign::Undetermined;
  return v;
}

mpq_class finite_difference_exact(const std::vector<mpq_class>& values, int k,
                                  int i) {
  if (k < 0 || i < 0 || i + k >= static_cast<int>(values.size()))
    throw IndexError("finite_difference_exact: i + k past end of sequence");
  mpq_class acc = 0;
  for (int l = 0; l <= k; ++l) {
    mpq_class term = mpq_class(binomial(k, l)) * values[i + l];
    if (((k - l) & 1) == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

SignVerdict check_m_conjecture(const MatchSequence& ms, int k, int i) {
  check_range(ms, k, i, 2);
  if (i + k > ms.n) throw IndexError("check_m_conjecture: i + k exceeds n");
  mpz_class acc = 0;
  for (int l = 0; l <= k; ++l) {
    int j = i + l;
    mpz_class g = -(ms.m[j] * factorial(j) * factorial(ms.n - j));
    mpz_class term = binomial(k, l) * g;
    if (((k - l) & 1) == 0)
      acc += term;
    else
      acc -= term;
  }
  SignVerdict v;
  v.method = SignMethod::ExactInteger;
  int s = sgn(acc);
  v.sign = s > 0 ? Sign::Positive : s < 0 ? Sign::Negative : Sign::Zero;
  return v;
}

PositivityReport check_virial(const MatchSequence& ms, const SignPolicy& policy) {
  PositivityReport rep;
  rep.n = ms.n;
  rep.r = ms.r;
  const int top = ms.max_size();
  for (int k = 2; k <= top; ++k) {
    for (int i = 0; i + k <= top; ++i) {
      SignVerdict v = delta_sign(ms, k, i, policy);
      if (v.sign == Sign::Negative) rep.violations.emplace_back(k, i);
      if (v.sign == Sign::Undetermined) rep.undetermined.emplace_back(k, i);
      rep.verdicts.emplace(std::make_pair(k, i), std::move(v));
    }
  }
  rep.virial_positive = rep.violations.empty() && rep.undetermined.empty();
  return rep;
}

}  // namespace virpos
