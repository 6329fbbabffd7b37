#include "virpos/graph.hpp"

#include <bit>
#include <ostream>
#include <istream>
#include <sstream>

#include "virpos/errors.hpp"

namespace virpos {

bool validate(const BipartiteGraph& g) {
  if (g.n < 1 || g.n > kMaxSide) return false;
  if (g.r < 1 || g.r > g.n) return false;
  if (static_cast<int>(g.rows.size()) != g.n) return false;
  const std::uint64_t width =
      g.n == 64 ? ~0ull : (1ull << g.n) - 1;
  for (int a = 0; a < g.n; ++a) {
    if (g.rows[a] & ~width) return false;
    if (std::popcount(g.rows[a]) != g.r) return false;
  }
  for (int b = 0; b < g.n; ++b) {
    int col = 0;
    for (int a = 0; a < g.n; ++a) col += static_cast<int>((g.rows[a] >> b) & 1u);
    if (col != g.r) return false;
  }
  return true;
}

std::uint64_t column_mask(const BipartiteGraph& g, int b) {
  std::uint64_t m = 0;
  for (int a = 0; a < g.n; ++a)
    if ((g.rows[a] >> b) & 1u) m |= 1ull << a;
  return m;
}

BipartiteGraph make_complete(int n) {
  BipartiteGraph g;
  g.n = n;
  g.r = n;
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  g.rows.assign(n, full);
  return g;
}

BipartiteGraph make_cycle(int n) {
  BipartiteGraph g;
  g.n = n;
  g.r = 2;
  g.rows.resize(n);
  for (int a = 0; a < n; ++a)
    g.rows[a] = (1ull << a) | (1ull << ((a + 1) % n));
  return g;
}

BipartiteGraph make_circulant(int n, int r) {
  if (r < 1 || r > n) throw InvalidDegreeError(n, r);
  BipartiteGraph g;
  g.n = n;
  g.r = r;
  g.rows.resize(n);
  for (int a = 0; a < n; ++a) {
    std::uint64_t m = 0;
    for (int t = 0; t < r; ++t) m |= 1ull << ((a + t) % n);
    g.rows[a] = m;
  }
  return g;
}

BipartiteGraph permute(const BipartiteGraph& g, const std::vector<int>& row_perm,
                       const std::vector<int>& col_perm) {
  // row_perm[a] = new position of left vertex a; likewise for columns.
  BipartiteGraph h;
  h.n = g.n;
  h.r = g.r;
  h.rows.assign(g.n, 0);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.has_edge(a, b)) h.rows[row_perm[a]] |= 1ull << col_perm[b];
  return h;
}

BipartiteGraph transpose(const BipartiteGraph& g) {
  BipartiteGraph h;
  h.n = g.n;
  h.r = g.r;
  h.rows.assign(g.n, 0);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.has_edge(a, b)) h.rows[b] |= 1ull << a;
  return h;
}

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.r != b.r) throw Error("disjoint_union requires equal degrees");
  BipartiteGraph g;
  g.n = a.n + b.n;
  g.r = a.r;
  if (g.n > kMaxSide) throw SizeLimitError("disjoint union exceeds 64 vertices per side");
  g.rows = a.rows;
  for (int i = 0; i < b.n; ++i) g.rows.push_back(b.rows[i] << a.n);
  return g;
}

bool is_connected(const BipartiteGraph& g) {
  // BFS over left (bit a) and right (bit n+a) vertices.
  std::vector<int> stack{0};
  std::vector<char> seen(2 * g.n, 0);
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < g.n) {
      for (int b = 0; b < g.n; ++b)
        if (g.has_edge(v, b) && !seen[g.n + b]) {
          seen[g.n + b] = 1;
          ++reached;
          stack.push_back(g.n + b);
        }
    } else {
      int b = v - g.n;
      for (int a = 0; a < g.n; ++a)
        if (g.has_edge(a, b) && !seen[a]) {
          seen[a] = 1;
          ++reached;
          stack.push_back(a);
        }
    }
  }
  return reached == 2 * g.n;
}

std::vector<std::pair<int, int>> edge_list(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.n) * g.r);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.has_edge(a, b)) edges.emplace_back(a, b);
  return edges;
}

void write_graph(std::ostream& os, const BipartiteGraph& g) {
  os << g.n << ' ' << g.r << '\n';
  for (int a = 0; a < g.n; ++a) {
    bool first = true;
    for (int b = 0; b < g.n; ++b)
      if (g.has_edge(a, b)) {
        if (!first) os << ' ';
        os << b;
        first = false;
      }
    os << '\n';
  }
}

std::string graph_to_string(const BipartiteGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::vector<BipartiteGraph> read_graphs(std::istream& is) {
  std::vector<BipartiteGraph> out;
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    // skip blanks between records
    std::istringstream header(line);
    int n, r;
    if (!(header >> n)) continue;
    if (!(header >> r)) throw ParseError("expected header 'n r'", lineno);
    if (n < 1 || n > kMaxSide) throw ParseError("side size out of range", lineno);
    BipartiteGraph g;
    g.n = n;
    g.r = r;
    g.rows.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      if (!std::getline(is, line))
        throw ParseError("unexpected end of record", lineno);
      ++lineno;
      std::istringstream row(line);
      int b;
      while (row >> b) {
        if (b < 0 || b >= n) throw ParseError("neighbor index out of range", lineno);
        if ((g.rows[a] >> b) & 1u) throw ParseError("duplicate neighbor", lineno);
        g.rows[a] |= 1ull << b;
      }
      if (!row.eof()) {
        row.clear();
        std::string tok;
        row >> tok;
        throw ParseError("expected neighbor index, got '" + tok + "'", lineno);
      }
    }
    if (!validate(g)) throw ParseError("record is not a valid regular graph", lineno);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace virpos
