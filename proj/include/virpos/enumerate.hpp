#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "virpos/canonical.hpp"
#include "virpos/graph.hpp"

namespace virpos {

struct EnumerateOptions {
  bool connected_only = false;
  int max_side = 12;  // canonicalization cost explodes past desk scale
};

// Streams exactly one representative per isomorphism class of r-regular
// bipartite graphs on n+n vertices, in deterministic order.
//
// Orderly backtracking over biadjacency matrices with rows non-increasing
// (as n-bit integers) and Gale-Ryser feasibility pruning on the remaining
// column deficits; candidates surviving the matrix search are deduplicated
// by canonical code.
class RegularEnumerator {
 public:
  RegularEnumerator(int n, int r, EnumerateOptions opts = {});

  // Next unseen class representative, or nullopt when exhausted.
  std::optional<BipartiteGraph> next();

  std::uint64_t emitted() const { return emitted_; }
  bool done() const { return done_; }

  // Complete DFS position + dedup state, for checkpoint/resume.
  struct Snapshot {
    int depth = 0;
    bool done = false;
    std::uint64_t emitted = 0;
    std::vector<int> idx;              // chosen candidate per placed level
    std::vector<int> next_try;         // per level 0..depth
    std::vector<std::string> seen_hex;
  };
  Snapshot snapshot() const;
  void restore(const Snapshot& s);

 private:
  bool fits(std::uint64_t mask) const;
  bool feasible_after(std::uint64_t mask) const;
  void place(int c);
  void pop();
  BipartiteGraph current_graph() const;

  int n_;
  int r_;
  EnumerateOptions opts_;
  std::vector<std::uint64_t> cand_;  // popcount-r masks, descending
  std::vector<int> idx_;
  std::vector<int> next_try_;
  std::vector<int> colsum_;
  int depth_ = 0;
  bool done_ = false;
  std::uint64_t emitted_ = 0;
  std::set<CanonicalCode> seen_;
};

// Convenience wrapper for small cases.
std::vector<BipartiteGraph> enumerate_regular(int n, int r,
                                              EnumerateOptions opts = {});

}  // namespace virpos
