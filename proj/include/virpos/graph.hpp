#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace virpos {

// r-regular bipartite graph on n+n vertices, biadjacency stored as one
// n-bit row mask per left vertex: rows[a] bit b set <=> edge (a, b).
// The bitmask encoding makes multi-edges unrepresentable; n is capped at
// 64 by the row width.
struct BipartiteGraph {
  int n = 0;
  int r = 0;
  std::vector<std::uint64_t> rows;

  bool operator==(const BipartiteGraph&) const = default;

  bool has_edge(int a, int b) const { return (rows[a] >> b) & 1u; }
};

inline constexpr int kMaxSide = 64;

// True iff all invariants hold: 1 <= r <= n <= 64, every row and every
// column has popcount exactly r, no stray bits above column n.
bool validate(const BipartiteGraph& g);

// Column mask of right vertex b: bits over left vertices adjacent to b.
std::uint64_t column_mask(const BipartiteGraph& g, int b);

// K_{n,n}
BipartiteGraph make_complete(int n);

// C_{2n} as a 2-regular bipartite graph: left a ~ right a, right (a+1 mod n).
// Needs n >= 2 (n = 2 gives C_4).
BipartiteGraph make_cycle(int n);

// Circulant r-regular graph: left a ~ right (a+t mod n), t = 0..r-1.
// Canonical start state for the switch chain.
BipartiteGraph make_circulant(int n, int r);

BipartiteGraph permute(const BipartiteGraph& g, const std::vector<int>& row_perm,
                       const std::vector<int>& col_perm);

BipartiteGraph transpose(const BipartiteGraph& g);

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b);

bool is_connected(const BipartiteGraph& g);

std::vector<std::pair<int, int>> edge_list(const BipartiteGraph& g);

// Text format, one graph per record: header line "n r", then n lines with
// the sorted right-neighbor indices of each left vertex. Records may be
// separated by blank lines.
void write_graph(std::ostream& os, const BipartiteGraph& g);
std::string graph_to_string(const BipartiteGraph& g);

// Reads every record until EOF. Parse errors report 1-based line numbers.
std::vector<BipartiteGraph> read_graphs(std::istream& is);

}  // namespace virpos
