#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "virpos/matching.hpp"

namespace virpos {

// Normalized matching deviation: m_i = (n r)^i / i! (1 + hhat_i), i.e.
// hhat_i = m_i i! / (n r)^i - 1. Zero at i = 0 and i = 1 for any regular
// graph.
struct HhatValue {
  int i = 0;
  mpq_class value;
};

HhatValue hhat(const MatchSequence& ms, int i);

struct Alpha0Policy {
  // Exponent-weighted bit budget for the exact rational products; past it
  // the value is computed as a certified interval instead and flagged.
  std::uint64_t rational_bit_budget = std::uint64_t{1} << 26;
  int interval_bits = 256;
};

// alpha0 = prod_{l in L+} (1+hhat_{i+l})^C(k,l) - prod_{l in L-} (...)^C(k,l),
// where L+ holds the l in [0,k] whose parity matches k and L- the rest.
// Its sign is the negation of the sign of Delta^k u(i).
struct Alpha0Value {
  int k = 0;
  int i = 0;
  mpq_class value;          // exact when is_exact
  bool is_exact = true;
  std::pair<double, double> approx{0, 0};  // certified outward bounds if flagged
  std::vector<int> lplus, lminus;
};

Alpha0Value alpha0(const MatchSequence& ms, int k, int i,
                   const Alpha0Policy& policy = {});

// Leading asymptotic term ((k-2)!/n^(k-1)) (1/r^(k-1) - 2); strictly
// negative for every k >= 2, r >= 1, n >= 1.
mpq_class asymptotic_alpha0(int k, int r, long n);

// Chebyshev-type data for Prob(e^x > e^y) <= beta/alpha^2: alpha is the
// sample mean, beta the population variance. The bound only exists when
// alpha < 0; alpha >= 0 is flagged, not thrown.
struct BoundEstimate {
  mpq_class alpha;
  mpq_class beta;
  std::optional<mpq_class> bound;
  bool alpha_non_negative = false;
  std::size_t sample_count = 0;
};

BoundEstimate second_moment_bound(const std::vector<mpq_class>& samples);
BoundEstimate second_moment_bound_from_sums(const mpq_class& sum,
                                            const mpq_class& sum_sq,
                                            std::size_t count);

}  // namespace virpos
