#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/detect.hpp"
#include "support/generators.hpp"

using namespace ramsey;
using testsupport::Rng;

namespace {

ColoredCompleteGraph proper_k4() {
  // Three perfect matchings of K_4.
  return ColoredCompleteGraph::build(4, 3,
                                     {{{0, 1, 1}},
                                      {{2, 3, 1}},
                                      {{0, 2, 2}},
                                      {{1, 3, 2}},
                                      {{0, 3, 3}},
                                      {{1, 2, 3}}});
}

// The two-block coloring of K_{n+2m}: A of size n+m and B of size m, color 1
// inside the blocks, color 2 across.
ColoredCompleteGraph two_block_coloring(int n, int m) {
  int order = n + 2 * m;
  std::vector<std::array<int, 3>> edges;
  auto block = [&](int v) { return v < n + m ? 0 : 1; };
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      edges.push_back({u, v, block(u) == block(v) ? 1 : 2});
  return ColoredCompleteGraph::build(order, 2, edges);
}

}  // namespace

TEST_CASE("find_mono_star on monochromatic K_4") {
  auto g = testsupport::monochromatic_complete(4);
  auto e = find_mono_star(g, 3);
  REQUIRE(e.has_value());
  CHECK(validate_embedding(g, *e).ok);
  CHECK(e->vertices[0] == 0);  // lexicographically least witness
}

TEST_CASE("every 2-coloring of K_3 contains a monochromatic K_{1,2}") {
  // Exhaustive: 2^3 colorings.
  for (int mask = 0; mask < 8; ++mask) {
    auto g = ColoredCompleteGraph::build(3, 2,
                                         {{{0, 1, 1 + (mask & 1)}},
                                          {{0, 2, 1 + ((mask >> 1) & 1)}},
                                          {{1, 2, 1 + ((mask >> 2) & 1)}}});
    auto e = find_mono_star(g, 2);
    REQUIRE(e.has_value());
    CHECK(validate_embedding(g, *e).ok);
  }
}

TEST_CASE("properly edge-colored K_4 has no monochromatic K_{1,2}") {
  CHECK_FALSE(find_mono_star(proper_k4(), 2).has_value());
}

TEST_CASE("find_mono_double_star on monochromatic hosts") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
    auto g = testsupport::monochromatic_complete(n + m + 2);
    auto e = find_mono_double_star(g, n, m);
    REQUIRE(e.has_value());
    CHECK(validate_embedding(g, *e).ok);
  }
}

TEST_CASE("find_mono_subdivided_star on monochromatic hosts") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 3}}) {
    auto g = testsupport::monochromatic_complete(n + m + 1);
    auto e = find_mono_subdivided_star(g, n, m);
    REQUIRE(e.has_value());
    CHECK(validate_embedding(g, *e).ok);
  }
}

TEST_CASE("two-block K_7 coloring is S_3^2-free") {
  auto g = two_block_coloring(3, 2);
  CHECK_FALSE(find_mono_subdivided_star(g, 3, 2).has_value());
  CHECK_FALSE(brute_force_find(g, Pattern::subdivided_star(3, 2)).has_value());
}

TEST_CASE("brute force on tiny hosts") {
  auto mono = testsupport::monochromatic_complete(5);
  CHECK(brute_force_find(mono, Pattern::double_star(2, 1)).has_value());
  CHECK_FALSE(brute_force_find(proper_k4(), Pattern::star(2)).has_value());
  CHECK_THROWS_AS((void)brute_force_find(testsupport::monochromatic_complete(13),
                                         Pattern::star(2)),
                  Error);
}

TEST_CASE("detectors agree with brute force on random double stars") {
  Rng rng(0xd5);
  const std::vector<std::pair<int, int>> params{{1, 1}, {2, 1}, {2, 2}, {3, 1}};
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = testsupport::random_colored_complete(8, 1 + rng.below(3), rng);
    auto [n, m] = params[trial % params.size()];
    auto fast = find_mono_double_star(g, n, m);
    auto slow = brute_force_find(g, Pattern::double_star(n, m));
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(validate_embedding(g, *fast).ok);
      CHECK(validate_embedding(g, *slow).ok);
    }
  }
}

TEST_CASE("detectors agree with brute force on random subdivided stars") {
  Rng rng(0x5d);
  const std::vector<std::pair<int, int>> params{{2, 1}, {3, 1}, {3, 2}};
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = testsupport::random_colored_complete(8, 1 + rng.below(3), rng);
    auto [n, m] = params[trial % params.size()];
    auto fast = find_mono_subdivided_star(g, n, m);
    auto slow = brute_force_find(g, Pattern::subdivided_star(n, m));
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(validate_embedding(g, *fast).ok);
      CHECK(validate_embedding(g, *slow).ok);
    }
  }
}

TEST_CASE("star detector agrees with brute force") {
  Rng rng(0x57a);
  for (int trial = 0; trial < 400; ++trial) {
    int order = 3 + rng.below(6);
    auto g = testsupport::random_colored_complete(order, 1 + rng.below(3), rng);
    int n = 1 + rng.below(4);
    if (n + 1 > order) continue;
    auto fast = find_mono_star(g, n);
    auto slow = brute_force_find(g, Pattern::star(n));
    CHECK(fast.has_value() == slow.has_value());
  }
}

TEST_CASE("double-star detection is monotone in (n, m)") {
  Rng rng(0x300);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testsupport::random_colored_complete(7 + rng.below(2), 1 + rng.below(3), rng);
    if (!find_mono_double_star(g, 3, 2).has_value()) continue;
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= std::min(n, 2); ++m)
        CHECK(find_mono_double_star(g, n, m).has_value());
  }
}
