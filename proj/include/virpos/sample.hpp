#pragma once

#include <cstdint>

#include "virpos/graph.hpp"

namespace virpos {

struct SampleOptions {
  // Full restarts of the stub pairing before giving up. Keeps the sampler
  // exactly uniform over simple graphs where rejection is feasible and
  // fails loudly otherwise.
  long max_restarts = 1'000'000;
};

// Uniform simple r-regular bipartite graph on n+n vertices via the
// configuration model: the left stub list is paired against a shuffled
// right stub list; any outcome with a repeated pair is rejected and the
// whole pairing restarts. Deterministic for fixed (n, r, seed).
//
// Throws InvalidDegreeError unless 1 <= r <= n, RejectionBudgetError when
// restarts exceed opts.max_restarts.
BipartiteGraph sample_configuration(int n, int r, std::uint64_t seed,
                                    const SampleOptions& opts = {});

// One 2x2 switch: remove edges (a,b), (a2,b2), add (a,b2), (a2,b).
// Caller guarantees the move is legal (both new slots empty, a != a2,
// b != b2); degrees are preserved by construction. Applying the same
// call again restores the graph.
void apply_switch(BipartiteGraph& g, int a, int b, int a2, int b2);

// Runs `steps` attempted random switch moves on a copy of g (illegal
// proposals are skipped, which keeps the chain reversible and the stream
// deterministic). steps = 0 returns g unchanged.
BipartiteGraph sample_switch_chain(const BipartiteGraph& g, long steps,
                                   std::uint64_t seed);

}  // namespace virpos
