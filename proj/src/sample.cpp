#include "virpos/sample.hpp"

#include <vector>

#include "virpos/errors.hpp"
#include "virpos/rng.hpp"

namespace virpos {

BipartiteGraph sample_configuration(int n, int r, std::uint64_t seed,
                                    const SampleOptions& opts) {
  if (r < 1 || r > n || n > kMaxSide) throw InvalidDegreeError(n, r);

  // Left stubs in fixed order a,a,...,b,b,...; pairing with a shuffled
  // right stub list is a uniform bijection between stub sets, and every
  // simple graph corresponds to exactly (r!)^(2n) bijections, so the
  // accepted distribution is uniform over simple graphs.
  std::vector<int> right_stubs(static_cast<std::size_t>(n) * r);
  for (int b = 0; b < n; ++b)
    for (int t = 0; t < r; ++t) right_stubs[static_cast<std::size_t>(b) * r + t] = b;

  Rng rng(seed);
  BipartiteGraph g;
  g.n = n;
  g.r = r;
  for (long attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    rng.shuffle(right_stubs);
    g.rows.assign(n, 0);
    bool simple = true;
    for (int a = 0; a < n && simple; ++a) {
      std::uint64_t row = 0;
      for (int t = 0; t < r; ++t) {
        int b = right_stubs[static_cast<std::size_t>(a) * r + t];
        std::uint64_t bit = 1ull << b;
        if (row & bit) {
          simple = false;
          break;
        }
        row |= bit;
      }
      g.rows[a] = row;
    }
    if (simple) return g;
  }
  throw RejectionBudgetError(
      "configuration model exceeded " + std::to_string(opts.max_restarts) +
      " restarts at n=" + std::to_string(n) + " r=" + std::to_string(r) +
      "; r is likely too close to n, use the switch chain instead");
}

void apply_switch(BipartiteGraph& g, int a, int b, int a2, int b2) {
  g.rows[a] ^= (1ull << b) | (1ull << b2);
  g.rows[a2] ^= (1ull << b) | (1ull << b2);
}

BipartiteGraph sample_switch_chain(const BipartiteGraph& g, long steps,
                                   std::uint64_t seed) {
  if (!validate(g)) throw Error("sample_switch_chain: invalid input graph");
  BipartiteGraph h = g;
  auto edges = edge_list(h);
  Rng rng(seed);
  const std::size_t m = edges.size();
  for (long s = 0; s < steps; ++s) {
    std::size_t e1 = static_cast<std::size_t>(rng.below(m));
    std::size_t e2 = static_cast<std::size_t>(rng.below(m));
    auto [a, b] = edges[e1];
    auto [a2, b2] = edges[e2];
    if (a == a2 || b == b2) continue;
    if (h.has_edge(a, b2) || h.has_edge(a2, b)) continue;
    apply_switch(h, a, b, a2, b2);
    edges[e1] = {a, b2};
    edges[e2] = {a2, b};
  }
  return h;
}

}  // namespace virpos
