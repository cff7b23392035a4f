#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramsey/factorize.hpp"
#include "support/checkers.hpp"
#include "support/generators.hpp"

using namespace ramsey;
using namespace ramsey::testsupport;

namespace {

// K_{parts * size} minus `parts` disjoint cliques of the given size: the
// complete multipartite host the lower-bound constructions factor.
SimpleGraph complete_multipartite(int parts, int size) {
  SimpleGraph g;
  g.order = parts * size;
  for (int u = 0; u < g.order; ++u)
    for (int v = u + 1; v < g.order; ++v)
      if (u / size != v / size) g.edges.emplace_back(u, v);
  return g;
}

}  // namespace

TEST_CASE("proper edge coloring of K_3") {
  auto c = proper_edge_coloring_complete(3);
  CHECK(c.colors == 3);
  CHECK(is_proper_edge_coloring(c));
  std::set<int> missing(c.missing.begin(), c.missing.end());
  CHECK(missing.size() == 3);
}

TEST_CASE("proper edge coloring of K_5 via brute properness check") {
  auto c = proper_edge_coloring_complete(5);
  CHECK(c.colors == 5);
  CHECK(is_proper_edge_coloring(c));
  // Each color class of odd K_q is a near-perfect matching and every vertex
  // misses exactly its stated color.
  for (int v = 0; v < 5; ++v) {
    std::set<int> present;
    for (int u = 0; u < 5; ++u)
      if (u != v) present.insert(c.color(u, v));
    CHECK(present.size() == 4);
    CHECK(!present.count(c.missing[v]));
  }
  std::set<int> missing(c.missing.begin(), c.missing.end());
  CHECK(missing.size() == 5);
}

TEST_CASE("proper edge coloring of K_4 uses 3 colors") {
  auto c = proper_edge_coloring_complete(4);
  CHECK(c.colors == 3);
  CHECK(is_proper_edge_coloring(c));
  CHECK(c.missing.empty());
}

TEST_CASE("one-factorizations of small even orders") {
  for (int q : {2, 4, 10}) {
    auto f = one_factorization_even(q);
    CHECK(static_cast<int>(f.factors.size()) == q - 1);
    CHECK(is_valid_factorization(f));
  }
  CHECK(one_factorization_even(2).factors[0] == EdgeSet{{0, 1}});
}

TEST_CASE("two-factorization of C_5 returns the cycle itself") {
  auto f = two_factorization(SimpleGraph::cycle(5));
  REQUIRE(f.factors.size() == 1);
  CHECK(is_valid_factorization(f));
  CHECK(factors_are_cycle_covers(f));
}

TEST_CASE("two-factorization of K_5 gives two 2-factors") {
  auto f = two_factorization(SimpleGraph::complete(5));
  REQUIRE(f.factors.size() == 2);
  CHECK(is_valid_factorization(f));
  CHECK(factors_are_cycle_covers(f));
}

TEST_CASE("two-factorization of K_15 minus three K_5 gives five 2-factors") {
  auto host = complete_multipartite(3, 5);
  REQUIRE(host.regular_degree() == 10);
  auto f = two_factorization(host);
  REQUIRE(f.factors.size() == 5);
  CHECK(is_valid_factorization(f));
  CHECK(factors_are_cycle_covers(f));
}

TEST_CASE("two-factorization rejects odd-regular hosts") {
  CHECK_THROWS_AS((void)two_factorization(SimpleGraph::complete(4)), Error);
}

TEST_CASE("two-factorization of random even-regular graphs") {
  Rng rng(0x2f);
  for (int trial = 0; trial < 50; ++trial) {
    int r = 1 + rng.below(4);
    int order = 2 * r + 1 + rng.below(16 - 2 * r);
    auto h = random_even_regular(order, r, rng);
    REQUIRE(h.regular_degree() == 2 * r);
    auto f = two_factorization(h);
    CHECK(static_cast<int>(f.factors.size()) == r);
    CHECK(is_valid_factorization(f));
    CHECK(factors_are_cycle_covers(f));
  }
}

TEST_CASE("perfect matching extraction from K_4 and K_{3,3}") {
  auto full = extract_perfect_matchings(SimpleGraph::complete(4), 3, 1);
  CHECK(full.matchings.size() == 3);
  CHECK(full.remainder.edges.empty());

  SimpleGraph k33;
  k33.order = 6;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.edges.emplace_back(u, v);
  auto lat = extract_perfect_matchings(k33, 3, 7);
  CHECK(lat.matchings.size() == 3);
  for (auto& m : lat.matchings) CHECK(is_valid_matching(k33, m));
  CHECK(lat.remainder.edges.empty());
}

TEST_CASE("matching extraction reports failure with the found count") {
  // A path on 4 vertices has exactly one perfect matching.
  SimpleGraph path;
  path.order = 4;
  path.edges = {{0, 1}, {1, 2}, {2, 3}};
  try {
    extract_perfect_matchings(path, 2, 3, 5);
    FAIL("expected ExtractionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExtractionFailed);
    CHECK(std::string(e.what()).find("1 of 2") != std::string::npos);
  }
}

TEST_CASE("blossom matching agrees with augmenting brute force on small graphs") {
  Rng rng(0xb10);
  for (int trial = 0; trial < 300; ++trial) {
    SimpleGraph g;
    g.order = 4 + rng.below(6);
    for (int u = 0; u < g.order; ++u)
      for (int v = u + 1; v < g.order; ++v)
        if (rng.below(100) < 40) g.edges.emplace_back(u, v);

    auto mate = maximum_matching_general(g);
    int size = 0;
    for (int v = 0; v < g.order; ++v)
      if (mate[v] > v) ++size;

    // Independent oracle: exhaustive matching search over the edge list.
    int best = 0;
    std::function<void(std::size_t, unsigned, int)> rec = [&](std::size_t idx, unsigned used,
                                                              int got) {
      best = std::max(best, got);
      if (idx == g.edges.size()) return;
      rec(idx + 1, used, got);
      auto [u, v] = g.edges[idx];
      if (!(used & (1u << u)) && !(used & (1u << v)))
        rec(idx + 1, used | (1u << u) | (1u << v), got + 1);
    };
    rec(0, 0, 0);
    CHECK(size == best);
  }
}

TEST_CASE("decompose K_15 minus three K_5 into five 2-factors") {
  auto f = decompose_into_n_factors(complete_multipartite(3, 5), 2, 5, 11);
  CHECK(f.factors.size() == 5);
  CHECK(is_valid_factorization(f));
}

TEST_CASE("decompose K_18 minus three K_6 into three 4-factors") {
  auto host = complete_multipartite(3, 6);
  REQUIRE(host.regular_degree() == 12);
  auto f = decompose_into_n_factors(host, 4, 3, 11);
  CHECK(f.factors.size() == 3);
  CHECK(is_valid_factorization(f));
}

TEST_CASE("decompose C_6 as a single 2-factor") {
  auto f = decompose_into_n_factors(SimpleGraph::cycle(6), 2, 1, 0);
  CHECK(f.factors.size() == 1);
  CHECK(is_valid_factorization(f));
}

TEST_CASE("decompose odd-arity hosts via 1-factor plus 2-factors") {
  // K_6 is 5-regular: n=5, count=1 exercises the odd branch end to end.
  auto f = decompose_into_n_factors(SimpleGraph::complete(6), 5, 1, 3);
  CHECK(f.factors.size() == 1);
  CHECK(is_valid_factorization(f));

  // K_4 into three 1-factors.
  auto g = decompose_into_n_factors(SimpleGraph::complete(4), 1, 3, 3);
  CHECK(g.factors.size() == 3);
  CHECK(is_valid_factorization(g));
}

TEST_CASE("decompose rejects arity mismatches") {
  CHECK_THROWS_AS((void)decompose_into_n_factors(SimpleGraph::complete(5), 3, 2, 0), Error);
}

TEST_CASE("Konig certificate on a path and K_{3,3}") {
  SimpleGraph path;
  path.order = 3;
  path.edges = {{0, 1}, {1, 2}};
  auto cert = max_matching_min_cover(path);
  CHECK(cert.matching.size() == 1);
  CHECK(cert.cover.size() == 1);
  CHECK(is_valid_matching(path, cert.matching));
  CHECK(is_valid_cover(path, cert.cover));

  SimpleGraph k33;
  k33.order = 6;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.edges.emplace_back(u, v);
  auto cert33 = max_matching_min_cover(k33);
  CHECK(cert33.matching.size() == 3);
  CHECK(cert33.cover.size() == 3);
}

TEST_CASE("Konig rejects odd cycles") {
  CHECK_THROWS_AS((void)max_matching_min_cover(SimpleGraph::cycle(5)), Error);
}

TEST_CASE("Konig certificates on random bipartite graphs") {
  Rng rng(0x515);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_bipartite(1 + rng.below(12), 1 + rng.below(12), 10 + rng.below(70), rng);
    auto cert = max_matching_min_cover(g);
    CHECK(cert.matching.size() == cert.cover.size());
    CHECK(is_valid_matching(g, cert.matching));
    CHECK(is_valid_cover(g, cert.cover));
  }
}
