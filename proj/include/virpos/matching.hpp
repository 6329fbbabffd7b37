#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "virpos/graph.hpp"

namespace virpos {

// Exact matching sequence of a bipartite graph: m[j] = number of
// j-matchings. Full sequences have m.size() == n+1; for large graphs only
// a prefix m[0..jmax] may be computed (the tail stays absent, never wrong).
struct MatchSequence {
  int n = 0;
  int r = 0;
  std::vector<mpz_class> m;

  int max_size() const { return static_cast<int>(m.size()) - 1; }
  bool full() const { return static_cast<int>(m.size()) == n + 1; }

  bool operator==(const MatchSequence&) const = default;
};

struct MatchOptions {
  // 2^n big integers of DP state; past this the memory bill is real.
  int dp_max_n = 24;
};

// Exact m_0..m_n by column-by-column subset DP over used left vertices.
// O(2^n * n * r) big-integer additions, O(2^n) big integers held.
MatchSequence match_sequence_dp(const BipartiteGraph& g,
                                const MatchOptions& opts = {});

// Independent ground truth: recursively enumerate every matching
// (lowest uncovered left vertex is skipped or matched to each free
// neighbor). n <= 8 enforced.
MatchSequence match_sequence_bruteforce(const BipartiteGraph& g);

// Exact m_0..m_jmax for graphs of any side size, via closed tree-like
// walk counts (power sums of the matching polynomial roots) and Newton's
// identities. Cost is about 2n * r * (r-1)^(jmax-1) walk-tree nodes, so
// small orders stay cheap no matter how large n is.
MatchSequence match_prefix_walks(const BipartiteGraph& g, int jmax);

// Serialization: header "n r", then one decimal integer per line.
void write_match_sequence(std::ostream& os, const MatchSequence& ms);
MatchSequence read_match_sequence(std::istream& is);

}  // namespace virpos
