#include <doctest.h>

#include <sstream>

#include "virpos/combinatorics.hpp"
#include "virpos/errors.hpp"
#include "virpos/matching.hpp"
#include "virpos/rng.hpp"
#include "virpos/sample.hpp"

using namespace virpos;

namespace {

std::vector<mpz_class> complete_counts(int n) {
  // m_i(K_{n,n}) = C(n,i)^2 i!
  std::vector<mpz_class> m(n + 1);
  for (int i = 0; i <= n; ++i) m[i] = binomial(n, i) * binomial(n, i) * factorial(i);
  return m;
}

std::vector<mpz_class> cycle_counts(int half) {
  // m_j(C_N) = (N/(N-j)) C(N-j, j), N = 2*half
  int N = 2 * half;
  std::vector<mpz_class> m(half + 1);
  for (int j = 0; j <= half; ++j)
    m[j] = mpz_class(N) * binomial(N - j, j) / (N - j);
  return m;
}

std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) c[x + y] += a[x] * b[y];
  return c;
}

BipartiteGraph random_regular(Rng& rng) {
  int n = 2 + static_cast<int>(rng.below(5));  // n in 2..6
  int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return sample_configuration(n, r, rng.next());
}

}  // namespace

TEST_CASE("known sequences: K22, C6, K33") {
  CHECK(match_sequence_dp(make_complete(2)).m ==
        std::vector<mpz_class>{1, 4, 2});
  CHECK(match_sequence_dp(make_cycle(3)).m ==
        std::vector<mpz_class>{1, 6, 9, 2});
  CHECK(match_sequence_dp(make_complete(3)).m ==
        std::vector<mpz_class>{1, 9, 18, 6});
}

TEST_CASE("single edge graph") {
  BipartiteGraph k11 = make_complete(1);
  CHECK(match_sequence_bruteforce(k11).m == std::vector<mpz_class>{1, 1});
  CHECK(match_sequence_dp(k11).m == std::vector<mpz_class>{1, 1});
}

TEST_CASE("K_{n,n} closed form up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(match_sequence_dp(make_complete(n)).m == complete_counts(n));
  }
}

TEST_CASE("cycle closed form up to C_12") {
  for (int half = 2; half <= 6; ++half) {
    CAPTURE(half);
    CHECK(match_sequence_dp(make_cycle(half)).m == cycle_counts(half));
  }
}

TEST_CASE("DP agrees with brute force on 200 random graphs, n <= 6") {
  Rng rng(20250810);
  for (int t = 0; t < 200; ++t) {
    BipartiteGraph g = random_regular(rng);
    CAPTURE(g.n);
    CAPTURE(g.r);
    CHECK(match_sequence_dp(g) == match_sequence_bruteforce(g));
  }
}

TEST_CASE("matching sequence is isomorphism-invariant") {
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    BipartiteGraph g = sample_configuration(6, 3, rng.next());
    std::vector<int> rp(6), cp(6);
    for (int j = 0; j < 6; ++j) rp[j] = cp[j] = j;
    rng.shuffle(rp);
    rng.shuffle(cp);
    CHECK(match_sequence_dp(g).m == match_sequence_dp(permute(g, rp, cp)).m);
    CHECK(match_sequence_dp(g).m == match_sequence_dp(transpose(g)).m);
  }
}

TEST_CASE("m0 = 1, m1 = nr, m_n >= 1, log-concavity") {
  Rng rng(4711);
  for (int t = 0; t < 100; ++t) {
    BipartiteGraph g = random_regular(rng);
    MatchSequence ms = match_sequence_dp(g);
    CHECK(ms.m[0] == 1);
    CHECK(ms.m[1] == mpz_class(g.n) * g.r);
    CHECK(ms.m[g.n] >= 1);
    for (int i = 1; i < g.n; ++i) {
      CAPTURE(i);
      CHECK(ms.m[i] * ms.m[i] >= ms.m[i - 1] * ms.m[i + 1]);
    }
  }
}

TEST_CASE("disjoint union convolves the sequences") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    BipartiteGraph a = sample_configuration(3, 2, rng.next());
    BipartiteGraph b = sample_configuration(4, 2, rng.next());
    BipartiteGraph u = disjoint_union(a, b);
    CHECK(match_sequence_dp(u).m ==
          convolve(match_sequence_dp(a).m, match_sequence_dp(b).m));
  }
}

TEST_CASE("size caps throw") {
  MatchOptions tiny;
  tiny.dp_max_n = 4;
  CHECK_THROWS_AS(match_sequence_dp(make_complete(5), tiny), SizeLimitError);
  BipartiteGraph big = make_complete(9);
  CHECK_THROWS_AS(match_sequence_bruteforce(big), SizeLimitError);
}

TEST_CASE("walk-based prefix equals the DP on random graphs") {
  Rng rng(555);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + static_cast<int>(rng.below(8));  // 3..10
    int r = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(n, 5)));
    BipartiteGraph g = sample_configuration(n, r, rng.next());
    MatchSequence full = match_sequence_dp(g);
    int jmax = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    MatchSequence prefix = match_prefix_walks(g, jmax);
    CAPTURE(n);
    CAPTURE(r);
    CAPTURE(jmax);
    REQUIRE(prefix.max_size() == jmax);
    for (int j = 0; j <= jmax; ++j) CHECK(prefix.m[j] == full.m[j]);
  }
}

TEST_CASE("walk-based prefix handles sizes far past the DP cap") {
  BipartiteGraph g = sample_configuration(40, 3, 7);
  MatchSequence ms = match_prefix_walks(g, 4);
  CHECK(ms.m[0] == 1);
  CHECK(ms.m[1] == 120);
  // 2-matchings of any r-regular bipartite graph: C(nr,2) - n r (r-1)
  CHECK(ms.m[2] == binomial(120, 2) - 40 * 3 * 2);
  CHECK(ms.m[3] > 0);
  CHECK(ms.m[4] > 0);
  CHECK_FALSE(ms.full());
}

TEST_CASE("match sequence serialization round-trips") {
  MatchSequence ms = match_sequence_dp(make_complete(6));
  std::ostringstream os;
  write_match_sequence(os, ms);
  std::istringstream is(os.str());
  CHECK(read_match_sequence(is) == ms);
}
