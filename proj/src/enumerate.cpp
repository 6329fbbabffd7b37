#include "virpos/enumerate.hpp"

#include <algorithm>
#include <bit>

#include "virpos/errors.hpp"

namespace virpos {

RegularEnumerator::RegularEnumerator(int n, int r, EnumerateOptions opts)
    : n_(n), r_(r), opts_(opts) {
  if (r < 1 || r > n) throw InvalidDegreeError(n, r);
  if (n > opts.max_side)
    throw SizeLimitError("enumeration capped at n <= " +
                         std::to_string(opts.max_side));
  for (std::uint64_t m = 0; m < (1ull << n); ++m)
    if (std::popcount(m) == r) cand_.push_back(m);
  std::sort(cand_.rbegin(), cand_.rend());
  idx_.assign(n, 0);
  next_try_.assign(n + 1, 0);
  colsum_.assign(n, 0);
}

bool RegularEnumerator::fits(std::uint64_t mask) const {
  for (std::uint64_t m = mask; m; m &= m - 1)
    if (colsum_[std::countr_zero(m)] >= r_) return false;
  return true;
}

// Gale-Ryser feasibility of completing the column deficits with the
// remaining all-degree-r rows: with deficits sorted descending, every
// prefix sum must stay within rows_left * min(t, r).
bool RegularEnumerator::feasible_after(std::uint64_t mask) const {
  int rows_left = n_ - depth_ - 1;
  int cnt[kMaxSide + 1] = {0};
  for (int b = 0; b < n_; ++b) {
    int d = r_ - colsum_[b] - static_cast<int>((mask >> b) & 1u);
    if (d < 0) return false;
    ++cnt[d];
  }
  long prefix = 0;
  int t = 0;
  for (int d = r_; d >= 1; --d) {
    for (int rep = 0; rep < cnt[d]; ++rep) {
      ++t;
      prefix += d;
      if (prefix > static_cast<long>(rows_left) * std::min(t, r_)) return false;
    }
  }
  return true;
}

void RegularEnumerator::place(int c) {
  std::uint64_t mask = cand_[c];
  for (std::uint64_t m = mask; m; m &= m - 1) ++colsum_[std::countr_zero(m)];
  idx_[depth_] = c;
  ++depth_;
  next_try_[depth_] = c;  // rows non-increasing, equal masks allowed
}

void RegularEnumerator::pop() {
  --depth_;
  std::uint64_t mask = cand_[idx_[depth_]];
  for (std::uint64_t m = mask; m; m &= m - 1) --colsum_[std::countr_zero(m)];
  next_try_[depth_] = idx_[depth_] + 1;
}

BipartiteGraph RegularEnumerator::current_graph() const {
  BipartiteGraph g;
  g.n = n_;
  g.r = r_;
  g.rows.resize(n_);
  for (int d = 0; d < n_; ++d) g.rows[d] = cand_[idx_[d]];
  return g;
}

std::optional<BipartiteGraph> RegularEnumerator::next() {
  while (!done_) {
    if (depth_ == n_) {
      BipartiteGraph g = current_graph();
      pop();
      if (opts_.connected_only && !is_connected(g)) continue;
      if (seen_.insert(canonical_form(g)).second) {
        ++emitted_;
        return g;
      }
      continue;
    }
    int c = next_try_[depth_];
    bool placed = false;
    for (; c < static_cast<int>(cand_.size()); ++c) {
      if (fits(cand_[c]) && feasible_after(cand_[c])) {
        place(c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (depth_ == 0)
        done_ = true;
      else
        pop();
    }
  }
  return std::nullopt;
}

RegularEnumerator::Snapshot RegularEnumerator::snapshot() const {
  Snapshot s;
  s.depth = depth_;
  s.done = done_;
  s.emitted = emitted_;
  s.idx.assign(idx_.begin(), idx_.begin() + depth_);
  s.next_try.assign(next_try_.begin(), next_try_.begin() + depth_ + 1);
  s.seen_hex.reserve(seen_.size());
  for (const auto& code : seen_) s.seen_hex.push_back(code.to_hex());
  return s;
}

void RegularEnumerator::restore(const Snapshot& s) {
  depth_ = 0;
  done_ = s.done;
  emitted_ = s.emitted;
  colsum_.assign(n_, 0);
  for (int d = 0; d < s.depth; ++d) place(s.idx[d]);
  for (int d = 0; d <= s.depth; ++d) next_try_[d] = s.next_try[d];
  seen_.clear();
  for (const auto& hex : s.seen_hex) seen_.insert(CanonicalCode::from_hex(hex));
}

std::vector<BipartiteGraph> enumerate_regular(int n, int r, EnumerateOptions opts) {
  RegularEnumerator e(n, r, opts);
  std::vector<BipartiteGraph> out;
  while (auto g = e.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace virpos
