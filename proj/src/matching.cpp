#include "virpos/matching.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "virpos/errors.hpp"

namespace virpos {

MatchSequence match_sequence_dp(const BipartiteGraph& g, const MatchOptions& opts) {
  if (!validate(g)) throw Error("match_sequence_dp: invalid graph");
  if (g.n > opts.dp_max_n)
    throw SizeLimitError("match_sequence_dp: n=" + std::to_string(g.n) +
                         " exceeds cap " + std::to_string(opts.dp_max_n));

  const int n = g.n;
  std::vector<std::uint64_t> cols(n);
  for (int b = 0; b < n; ++b) cols[b] = column_mask(g, b);

  // state[mask] = matchings that use exactly the left vertices in mask,
  // among right vertices processed so far. Descending mask order makes the
  // per-column update safe in place (sources are strictly smaller masks).
  std::vector<mpz_class> state(std::size_t{1} << n);
  state[0] = 1;
  for (int b = 0; b < n; ++b) {
    const std::uint64_t adj = cols[b];
    for (std::uint64_t mask = (1ull << n) - 1; mask > 0; --mask) {
      for (std::uint64_t m = adj & mask; m; m &= m - 1) {
        state[mask] += state[mask ^ (m & -m)];
      }
    }
  }

  MatchSequence ms;
  ms.n = n;
  ms.r = g.r;
  ms.m.assign(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
    ms.m[std::popcount(mask)] += state[mask];
  return ms;
}

namespace {

void bruteforce_rec(const std::vector<std::uint64_t>& rows, int n, int a,
                    std::uint64_t used_right, int size,
                    std::vector<mpz_class>& tally) {
  if (a == n) {
    tally[size] += 1;
    return;
  }
  // leave left vertex a unmatched
  bruteforce_rec(rows, n, a + 1, used_right, size, tally);
  for (std::uint64_t m = rows[a] & ~used_right; m; m &= m - 1) {
    std::uint64_t bit = m & -m;
    bruteforce_rec(rows, n, a + 1, used_right | bit, size + 1, tally);
  }
}

}  // namespace

MatchSequence match_sequence_bruteforce(const BipartiteGraph& g) {
  if (!validate(g)) throw Error("match_sequence_bruteforce: invalid graph");
  if (g.n > 8)
    throw SizeLimitError("match_sequence_bruteforce: n <= 8 enforced");
  MatchSequence ms;
  ms.n = g.n;
  ms.r = g.r;
  ms.m.assign(g.n + 1, 0);
  bruteforce_rec(g.rows, g.n, 0, 0, 0, ms.m);
  return ms;
}

namespace {

// Closed tree-like walks of even lengths 2..2*tmax rooted at vertex `root`
// of the doubled graph (vertices 0..n-1 left, n..2n-1 right). The walk
// tree's nodes are the simple paths from root of length <= tmax; counting
// closed walks at its root is a sparse power iteration over that tree.
//
// Counts stay below degree^steps, so unsigned __int128 covers every r and
// jmax this project touches (r^(2*jmax) < 2^120 is checked by the caller).
struct WalkTree {
  std::vector<int> vertex;    // graph vertex of each tree node
  std::vector<int> parent;    // -1 for root
  std::vector<int> first_child, next_sibling;

  void build(const std::vector<std::uint64_t>& adj_left,
             const std::vector<std::uint64_t>& adj_right, int n, int root,
             int tmax) {
    vertex.assign(1, root);
    parent.assign(1, -1);
    first_child.assign(1, -1);
    next_sibling.assign(1, -1);
    // path vertices tracked as bitmasks over the 2n vertices
    std::vector<std::uint64_t> path_lo{root < n ? 1ull << root : 0};
    std::vector<std::uint64_t> path_hi{root < n ? 0 : 1ull << (root - n)};
    std::size_t level_begin = 0, level_end = 1;
    for (int depth = 0; depth < tmax; ++depth) {
      for (std::size_t x = level_begin; x < level_end; ++x) {
        int v = vertex[x];
        std::uint64_t nbrs = v < n ? adj_left[v] : adj_right[v - n];
        bool nbr_is_right = v < n;
        for (std::uint64_t m = nbrs; m; m &= m - 1) {
          int w = std::countr_zero(m);
          int wv = nbr_is_right ? w + n : w;
          std::uint64_t wlo = nbr_is_right ? 0 : 1ull << w;
          std::uint64_t whi = nbr_is_right ? 1ull << w : 0;
          if ((path_lo[x] & wlo) || (path_hi[x] & whi)) continue;  // not simple
          int node = static_cast<int>(vertex.size());
          vertex.push_back(wv);
          parent.push_back(static_cast<int>(x));
          first_child.push_back(-1);
          next_sibling.push_back(first_child[x]);
          first_child[x] = node;
          path_lo.push_back(path_lo[x] | wlo);
          path_hi.push_back(path_hi[x] | whi);
        }
      }
      level_begin = level_end;
      level_end = vertex.size();
    }
  }
};

}  // namespace

MatchSequence match_prefix_walks(const BipartiteGraph& g, int jmax) {
  if (!validate(g)) throw Error("match_prefix_walks: invalid graph");
  if (jmax < 0 || jmax > g.n)
    throw IndexError("match_prefix_walks: jmax out of range");
  const int n = g.n;

  // power sums p[t] = closed tree-like walks of length 2t, summed over roots
  std::vector<mpz_class> p(jmax + 1, 0);
  if (jmax >= 1) {
    if (2.0 * jmax * std::bit_width(static_cast<unsigned>(g.r)) > 120)
      throw SizeLimitError("match_prefix_walks: walk counts exceed 128 bits");

    std::vector<std::uint64_t> adj_left = g.rows;  // left a -> right mask
    std::vector<std::uint64_t> adj_right(n);
    for (int b = 0; b < n; ++b) adj_right[b] = column_mask(g, b);

    WalkTree tree;
    std::vector<unsigned __int128> cur, nxt;
    for (int root = 0; root < 2 * n; ++root) {
      tree.build(adj_left, adj_right, n, root, jmax);
      const std::size_t sz = tree.vertex.size();
      cur.assign(sz, 0);
      nxt.assign(sz, 0);
      cur[0] = 1;
      for (int step = 1; step <= 2 * jmax; ++step) {
        for (std::size_t x = 0; x < sz; ++x) {
          unsigned __int128 acc = tree.parent[x] >= 0 ? cur[tree.parent[x]] : 0;
          for (int c = tree.first_child[x]; c >= 0; c = tree.next_sibling[c])
            acc += cur[c];
          nxt[x] = acc;
        }
        cur.swap(nxt);
        if (step % 2 == 0) {
          unsigned __int128 w = cur[0];
          mpz_class chunk;
          mpz_import(chunk.get_mpz_t(), 2, -1, 8, 0, 0, &w);
          p[step / 2] += chunk;
        }
      }
    }
  }

  // The matching polynomial's roots come in +- pairs; with y = theta^2 the
  // y-power sums are p[t]/2 and Newton's identities give m_j directly.
  MatchSequence ms;
  ms.n = n;
  ms.r = g.r;
  ms.m.assign(jmax + 1, 0);
  ms.m[0] = 1;
  std::vector<mpz_class> q(jmax + 1);
  for (int t = 1; t <= jmax; ++t) {
    q[t] = p[t] / 2;
  }
  for (int j = 1; j <= jmax; ++j) {
    mpz_class acc = 0;
    for (int s = 1; s <= j; ++s) {
      if (s % 2 == 1)
        acc += ms.m[j - s] * q[s];
      else
        acc -= ms.m[j - s] * q[s];
    }
    mpz_class e;
    mpz_divexact_ui(e.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
    ms.m[j] = e;
  }
  return ms;
}

void write_match_sequence(std::ostream& os, const MatchSequence& ms) {
  os << ms.n << ' ' << ms.r << '\n';
  for (const auto& v : ms.m) os << v.get_str() << '\n';
}

MatchSequence read_match_sequence(std::istream& is) {
  MatchSequence ms;
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream header(line);
    if (!(header >> ms.n)) continue;
    if (!(header >> ms.r)) throw ParseError("expected header 'n r'", lineno);
    for (int j = 0; j <= ms.n; ++j) {
      if (!std::getline(is, line)) break;  // prefix sequences are legal
      ++lineno;
      if (line.empty()) break;
      ms.m.emplace_back(line);
    }
    return ms;
  }
  throw ParseError("empty match sequence stream", lineno);
}

}  // namespace virpos
