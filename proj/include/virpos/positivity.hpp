#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "virpos/interval.hpp"
#include "virpos/matching.hpp"

namespace virpos {

enum class Sign { Positive, Zero, Negative, Undetermined };

enum class SignMethod { ExactInteger, IntervalBits };

const char* to_string(Sign s);

// Certified sign of a finite difference of u(i) = -ln(i! m_i).
//
// Zero can only come from the exact-integer path; interval arithmetic
// never certifies an exact zero. Undetermined means the interval ladder
// was exhausted and the exact path was over its bit budget.
struct SignVerdict {
  Sign sign = Sign::Undetermined;
  SignMethod method = SignMethod::ExactInteger;
  int precision_bits = 0;  // interval method: precision that decided (or last tried)

  // Exact path: the two product sides (plus-parity side, minus-parity
  // side), kept when small enough to be worth keeping.
  std::optional<std::pair<mpz_class, mpz_class>> products;
  // Interval path: outward double bounds on the log difference.
  std::optional<std::pair<double, double>> log_delta;

  bool satisfies_nonneg() const {
    return sign == Sign::Positive || sign == Sign::Zero;
  }
};

struct SignPolicy {
  // Exact product comparison runs when the exponent-weighted bit size of
  // the operands stays within this.
  std::uint64_t exact_bit_budget = std::uint64_t{1} << 26;
  int interval_start_bits = 128;
  int interval_max_bits = 8192;
  // Products are stored in the verdict only below this size.
  std::uint64_t witness_bit_cap = std::uint64_t{1} << 14;
};

// Certified interval for u(i) = -ln(i! m_i). Width <= 2^(2-p)|mid|
// (absolute 2^-p at mid = 0).
MpInterval u_value(const MatchSequence& ms, int i, int precision_bits);

// Sign of Delta^k u(i) = sum_l (-1)^(k-l) C(k,l) u(i+l).
//
// With a_j = j! m_j this is ln(prod_{L-} a^C / prod_{L+} a^C), where L+
// collects the l of the same parity as k and L- the rest; the verdict is
// decided by exact big-integer comparison of the two products when the
// bit budget allows, else by an interval precision ladder. Never throws
// for an inconclusive result: that is what Undetermined is for.
SignVerdict delta_sign(const MatchSequence& ms, int k, int i,
                       const SignPolicy& policy = {});

// Generic exact finite difference over rationals:
// sum_{l=0}^{k} (-1)^(k-l) C(k,l) values[i+l].
mpq_class finite_difference_exact(const std::vector<mpq_class>& values, int k,
                                  int i);

// Exact integer sign of Delta^k g(i) with g(j) = -m_j j! (n-j)!.
SignVerdict check_m_conjecture(const MatchSequence& ms, int k, int i);

// Verdicts for every meaningful pair: k >= 2, i >= 0, i + k <= max index.
struct PositivityReport {
  int n = 0;
  int r = 0;
  std::map<std::pair<int, int>, SignVerdict> verdicts;  // key (k, i)
  bool virial_positive = false;  // no violation and nothing undetermined
  std::vector<std::pair<int, int>> violations;
  std::vector<std::pair<int, int>> undetermined;
};

PositivityReport check_virial(const MatchSequence& ms,
                              const SignPolicy& policy = {});

}  // namespace virpos
