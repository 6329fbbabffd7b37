#include "virpos/canonical.hpp"

#include <bit>
#include <cstdio>

#include "virpos/errors.hpp"

namespace virpos {

namespace {

// Search state for one orientation of the matrix. Rows are packed so that
// column slot 0 is the most significant bit: numeric comparison of packed
// rows is lexicographic comparison left to right.
//
// For a fixed row order the optimal column order is the descending sort of
// column vectors (row 0 as most significant key), which is exactly what the
// progressive partition refinement below produces: each placed row splits
// every column group into (adjacent | non-adjacent), adjacent first.
struct Search {
  int n;
  const std::vector<std::uint64_t>* rows;
  std::vector<std::uint64_t> best;  // best packed rows found so far
  int best_len = 0;

  void run() {
    std::vector<std::uint64_t> groups{n == 64 ? ~0ull : (1ull << n) - 1};
    dfs(0, 0, groups);
  }

  void dfs(int depth, std::uint64_t used, const std::vector<std::uint64_t>& groups) {
    if (depth == n) return;
    for (int a = 0; a < n; ++a) {
      if ((used >> a) & 1u) continue;
      // identical rows are interchangeable; keep the first unused twin
      bool twin = false;
      for (int a2 = 0; a2 < a && !twin; ++a2)
        twin = !((used >> a2) & 1u) && (*rows)[a2] == (*rows)[a];
      if (twin) continue;

      std::uint64_t adj = (*rows)[a];
      std::uint64_t packed = 0;
      for (std::uint64_t grp : groups) {
        int sz = std::popcount(grp);
        int c = std::popcount(grp & adj);
        packed = (packed << sz) | (((1ull << c) - 1) << (sz - c));
      }

      if (depth < best_len) {
        if (packed < best[depth]) continue;
        if (packed > best[depth]) {
          best[depth] = packed;
          best_len = depth + 1;
        }
      } else {
        best[depth] = packed;
        best_len = depth + 1;
      }

      std::vector<std::uint64_t> next;
      next.reserve(groups.size() * 2);
      for (std::uint64_t grp : groups) {
        if (std::uint64_t in = grp & adj) next.push_back(in);
        if (std::uint64_t out = grp & ~adj) next.push_back(out);
      }
      dfs(depth + 1, used | (1ull << a), next);
    }
  }
};

std::vector<std::uint64_t> max_packed_matrix(const BipartiteGraph& g) {
  Search s;
  s.n = g.n;
  s.best.assign(g.n, 0);

  s.rows = &g.rows;
  s.run();

  BipartiteGraph t = transpose(g);
  s.rows = &t.rows;
  s.run();

  return s.best;
}

}  // namespace

CanonicalCode canonical_form(const BipartiteGraph& g) {
  if (!validate(g)) throw Error("canonical_form: invalid graph");
  if (g.n > 32) throw SizeLimitError("canonical_form capped at n <= 32");

  auto packed = max_packed_matrix(g);

  CanonicalCode code;
  code.bytes.assign(2 + (static_cast<std::size_t>(g.n) * g.n + 7) / 8, 0);
  code.bytes[0] = static_cast<std::uint8_t>(g.n);
  code.bytes[1] = static_cast<std::uint8_t>(g.r);
  std::size_t bit = 0;
  for (int d = 0; d < g.n; ++d)
    for (int p = 0; p < g.n; ++p, ++bit)
      if ((packed[d] >> (g.n - 1 - p)) & 1u)
        code.bytes[2 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
  return code;
}

BipartiteGraph canonicalize(const BipartiteGraph& g) {
  if (!validate(g)) throw Error("canonicalize: invalid graph");
  if (g.n > 32) throw SizeLimitError("canonicalize capped at n <= 32");

  auto packed = max_packed_matrix(g);

  BipartiteGraph h;
  h.n = g.n;
  h.r = g.r;
  h.rows.assign(g.n, 0);
  for (int d = 0; d < g.n; ++d)
    for (int p = 0; p < g.n; ++p)
      if ((packed[d] >> (g.n - 1 - p)) & 1u) h.rows[d] |= 1ull << p;
  return h;
}

std::string CanonicalCode::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error("hex code has odd length");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error("bad hex digit");
  };
  CanonicalCode code;
  code.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    code.bytes.push_back(static_cast<std::uint8_t>((nib(hex[i]) << 4) | nib(hex[i + 1])));
  return code;
}

}  // namespace virpos
