#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "virpos/graph.hpp"

namespace virpos {

// Fixed-length encoding of the lexicographically maximal biadjacency
// matrix over all row permutations x column permutations x transpose.
// Two graphs have equal codes iff they are isomorphic as bipartite graphs
// with part swap allowed.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;  // [n, r], then ceil(n^2/8) bytes row-major

  auto operator<=>(const CanonicalCode&) const = default;

  std::string to_hex() const;
  static CanonicalCode from_hex(const std::string& hex);
};

// Exhaustive permutation search with ordered-partition refinement and
// prefix pruning; identical rows are collapsed, so highly symmetric
// graphs stay cheap. Capped at n <= 32 (desk-scale enumeration sizes).
CanonicalCode canonical_form(const BipartiteGraph& g);

// The canonical representative itself (rows of the maximal matrix).
BipartiteGraph canonicalize(const BipartiteGraph& g);

}  // namespace virpos
