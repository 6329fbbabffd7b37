#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "virpos/canonical.hpp"
#include "virpos/enumerate.hpp"
#include "virpos/errors.hpp"
#include "virpos/graph.hpp"
#include "virpos/rng.hpp"
#include "virpos/sample.hpp"

using namespace virpos;

namespace {

// Brute-force oracle: count isomorphism classes by generating every 0/1
// matrix with the required row/column sums and deduplicating under all
// n! x n! x 2 relabelings. Only sane for n <= 4.
int oracle_class_count(int n, int r) {
  std::vector<std::uint64_t> row_masks;
  for (std::uint64_t m = 0; m < (1ull << n); ++m)
    if (__builtin_popcountll(m) == r) row_masks.push_back(m);

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto min_label = [&](const BipartiteGraph& g) {
    std::string best;
    for (int t = 0; t < 2; ++t) {
      BipartiteGraph h = t ? transpose(g) : g;
      for (const auto& rp : perms)
        for (const auto& cp : perms) {
          BipartiteGraph p = permute(h, rp, cp);
          std::string s;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) s.push_back(p.has_edge(a, b) ? '1' : '0');
          if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
  };

  std::set<std::string> classes;
  std::vector<int> pick(n, 0);
  for (;;) {
    BipartiteGraph g;
    g.n = n;
    g.r = r;
    g.rows.resize(n);
    for (int a = 0; a < n; ++a) g.rows[a] = row_masks[pick[a]];
    if (validate(g)) classes.insert(min_label(g));
    int a = n - 1;
    while (a >= 0 && ++pick[a] == static_cast<int>(row_masks.size())) pick[a--] = 0;
    if (a < 0) break;
  }
  return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("validate accepts regular graphs and rejects degree lies") {
  CHECK(validate(make_complete(3)));
  CHECK(validate(make_cycle(4)));
  BipartiteGraph bad = make_complete(3);
  bad.r = 2;  // rows still have popcount 3
  CHECK_FALSE(validate(bad));
  BipartiteGraph lop = make_cycle(4);
  lop.rows[0] = (1ull << 0) | (1ull << 2);  // column sums now off
  CHECK_FALSE(validate(lop));
}

TEST_CASE("configuration sampler: K33 is forced at n=r=3") {
  for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
    BipartiteGraph g = sample_configuration(3, 3, seed);
    CHECK(g == make_complete(3));
  }
}

TEST_CASE("configuration sampler: invalid degrees throw") {
  CHECK_THROWS_AS(sample_configuration(5, 0, 1), InvalidDegreeError);
  CHECK_THROWS_AS(sample_configuration(4, 5, 1), InvalidDegreeError);
}

TEST_CASE("configuration sampler: outputs validate over many seeds") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    int r = 1 + static_cast<int>(seed % n);
    BipartiteGraph g = sample_configuration(n, r, seed);
    CHECK(validate(g));
    CHECK(edge_list(g).size() == static_cast<std::size_t>(n) * r);
  }
}

TEST_CASE("configuration sampler is deterministic") {
  for (std::uint64_t seed : {3ull, 99ull}) {
    CHECK(sample_configuration(6, 3, seed) == sample_configuration(6, 3, seed));
  }
}

TEST_CASE("switch chain: complete graph has no legal move") {
  BipartiteGraph k33 = make_complete(3);
  CHECK(sample_switch_chain(k33, 1000, 5) == k33);
}

TEST_CASE("switch chain: zero steps is the identity") {
  BipartiteGraph g = sample_configuration(5, 2, 11);
  CHECK(sample_switch_chain(g, 0, 9) == g);
}

TEST_CASE("switch chain preserves regularity and is reversible") {
  BipartiteGraph g = sample_configuration(6, 3, 2);
  BipartiteGraph h = sample_switch_chain(g, 5000, 13);
  CHECK(validate(h));

  // one legal switch, applied twice, restores the graph
  BipartiteGraph before = h;
  bool found = false;
  for (auto [a, b] : edge_list(h)) {
    for (auto [a2, b2] : edge_list(h)) {
      if (a == a2 || b == b2) continue;
      if (h.has_edge(a, b2) || h.has_edge(a2, b)) continue;
      apply_switch(h, a, b, a2, b2);
      CHECK(validate(h));
      CHECK(h != before);
      apply_switch(h, a, b, a2, b2);
      CHECK(h == before);
      found = true;
      break;
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("switch chain on C8 visits both 2-regular classes on 4+4") {
  // state space up to isomorphism is {C8, C4+C4}
  BipartiteGraph c8 = make_cycle(4);
  CanonicalCode code_c8 = canonical_form(c8);
  std::set<CanonicalCode> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    seen.insert(canonical_form(sample_switch_chain(c8, 10000, seed)));
  CHECK(seen.size() == 2);
  CHECK(seen.count(code_c8) == 1);
}

TEST_CASE("canonical form is invariant under relabeling") {
  BipartiteGraph c6 = make_cycle(3);
  CanonicalCode base = canonical_form(c6);
  Rng rng(4242);
  std::vector<int> rp(3), cp(3);
  for (int t = 0; t < 100; ++t) {
    for (int j = 0; j < 3; ++j) rp[j] = cp[j] = j;
    rng.shuffle(rp);
    rng.shuffle(cp);
    BipartiteGraph g = permute(c6, rp, cp);
    CHECK(canonical_form(g) == base);
    CHECK(canonical_form(transpose(g)) == base);
  }
}

TEST_CASE("canonical form is idempotent") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    BipartiteGraph g = sample_configuration(5, 3, seed);
    BipartiteGraph c = canonicalize(g);
    CHECK(canonical_form(c) == canonical_form(g));
    CHECK(canonicalize(c) == c);
  }
}

TEST_CASE("canonical codes split 500 relabelings of {C8, C4+C4} into 2 classes") {
  BipartiteGraph c8 = make_cycle(4);
  BipartiteGraph c4c4 = disjoint_union(make_cycle(2), make_cycle(2));
  REQUIRE(validate(c4c4));
  Rng rng(7);
  std::set<CanonicalCode> codes;
  std::vector<int> rp(4), cp(4);
  for (int t = 0; t < 500; ++t) {
    const BipartiteGraph& base = (t % 2 == 0) ? c8 : c4c4;
    for (int j = 0; j < 4; ++j) rp[j] = cp[j] = j;
    rng.shuffle(rp);
    rng.shuffle(cp);
    codes.insert(canonical_form(permute(base, rp, cp)));
  }
  CHECK(codes.size() == 2);
}

TEST_CASE("canonical code hex round-trips") {
  CanonicalCode code = canonical_form(make_cycle(5));
  CHECK(CanonicalCode::from_hex(code.to_hex()) == code);
}

TEST_CASE("enumeration matches known small counts") {
  CHECK(enumerate_regular(3, 2).size() == 1);  // the 6-cycle
  CHECK(enumerate_regular(4, 2).size() == 2);  // C8 and C4+C4
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_regular(n, n).size() == 1);  // K_{n,n}
}

TEST_CASE("enumeration agrees with the brute-force oracle for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(static_cast<int>(enumerate_regular(n, r).size()) ==
            oracle_class_count(n, r));
    }
}

TEST_CASE("enumeration emits valid, pairwise non-isomorphic graphs") {
  auto graphs = enumerate_regular(5, 2);
  std::set<CanonicalCode> codes;
  for (const auto& g : graphs) {
    CHECK(validate(g));
    codes.insert(canonical_form(g));
  }
  CHECK(codes.size() == graphs.size());
  // 2-regular classes on 5+5 = partitions of 5 into cycle half-lengths >= 2
  CHECK(graphs.size() == 2);  // {5}, {3,2}
}

TEST_CASE("connected_only filters the disconnected classes") {
  EnumerateOptions opts;
  opts.connected_only = true;
  CHECK(enumerate_regular(4, 2, opts).size() == 1);  // C8 only
  CHECK(enumerate_regular(4, 2).size() == 2);
}

TEST_CASE("enumeration snapshot/restore resumes mid-stream") {
  RegularEnumerator full(6, 2);
  std::vector<BipartiteGraph> all;
  while (auto g = full.next()) all.push_back(*g);
  REQUIRE(all.size() >= 3);

  RegularEnumerator part(6, 2);
  part.next();
  part.next();
  auto snap = part.snapshot();

  RegularEnumerator resumed(6, 2);
  resumed.restore(snap);
  std::vector<BipartiteGraph> tail;
  while (auto g = resumed.next()) tail.push_back(*g);
  REQUIRE(tail.size() == all.size() - 2);
  for (std::size_t t = 0; t < tail.size(); ++t) CHECK(tail[t] == all[t + 2]);
}

TEST_CASE("graph text format round-trips") {
  std::ostringstream os;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    write_graph(os, sample_configuration(4 + seed % 4, 2 + seed % 2, seed));
    os << '\n';
  }
  std::istringstream is(os.str());
  auto back = read_graphs(is);
  REQUIRE(back.size() == 20);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(back[seed] == sample_configuration(4 + seed % 4, 2 + seed % 2, seed));
}

TEST_CASE("graph parser reports line numbers") {
  std::istringstream is("3 2\n0 1\n1 2\nbogus\n");
  try {
    read_graphs(is);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}
