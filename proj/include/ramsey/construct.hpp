#pragma once

#include <cstdint>
#include <string>

#include "ramsey/core.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Named vertex blocks of a witness coloring: A (size m+1), optional B
// (size m), and the V_i blocks.
struct PartitionScheme {
  std::vector<int> block_a;
  std::vector<int> block_b;
  std::vector<std::vector<int>> blocks_v;
};

// A lower-bound witness: an explicit pattern-free k-coloring of K_N packaged
// with the construction that produced it. Builders re-verify with the exact
// detector (and the brute-force oracle at small orders) before returning;
// an unverifiable construction raises InternalError.
struct WitnessCertificate {
  Pattern pattern{PatternKind::Star, 1, 0};
  int colors = 0;
  ColoredCompleteGraph graph{1, 1, {}};
  std::string construction_id;
  PartitionScheme scheme;
  bool verified = false;
  int claimed_bound = 0;  // graph order + 1
  std::uint64_t seed = 0;
};

// S(n,m)-free k-coloring of K_{kn+m+1} for odd k: blocks A and V_1..V_k glued
// along a proper edge coloring of K_k relabeled so color i is the one missing
// at v_i. k = 1 colors everything with color 1.
WitnessCertificate witness_double_star_odd_k(int n, int m, int k);

// S(n,m)-free k-coloring of K_{(k-1)n+2m+1} for even k: the odd-(k-1) witness
// plus a block B wired to everything in color k.
WitnessCertificate witness_double_star_even_k(int n, int m, int k);

// S(n,m)-free k-coloring of K_{kn+m+1} when (n+m+1) | (k-1) and n is even or
// m is odd: parts of size n+m+1, the complete multipartite remainder split
// into k-1 n-factors.
WitnessCertificate witness_double_star_divisible(int n, int m, int k, std::uint64_t seed = 0);

// Same order, parts of size n+m+1 with (n+m+1)/2 | (k-1), n even, m odd.
WitnessCertificate witness_double_star_half_divisible(int n, int m, int k, std::uint64_t seed = 0);

// K_{1,n}-free k-coloring of K_order built by bundling the chi'(K_order)
// matching classes into k groups of at most n-1 (or (n-1)-regular classes at
// order = k(n-1)+1 when the parity allows).
WitnessCertificate witness_star(int n, int k, int order);

// S_n^m-free k-coloring of K_{k(n-1)+m+1} for odd k: the odd-k double-star
// layout with |V_i| = n-1.
WitnessCertificate witness_substar(int n, int m, int k);

// S_n^m-free 2-coloring of K_{n+2m}: blocks A (n+m) and B (m), color 1 inside
// the blocks and color 2 across. Requires n > m; at m = n the cross coloring
// contains a copy.
WitnessCertificate witness_substar_2color(int n, int m);

// An L-respecting coloring of K_{p+2} with no monochromatic P_4 for an odd
// prime p and lists of size exactly p: Irving-bound search when L is
// constant, otherwise a rainbow star at a vertex seeing >= p+1 list colors
// plus a proper list edge coloring of the remaining K_{p+1}.
struct ListP4Witness {
  int order = 0;
  std::vector<int> color_of_pair;       // original list colors
  ColoredCompleteGraph normalized{1, 1, {}};  // colors remapped to 1..K
  bool verified = false;
};
ListP4Witness witness_list_p4(int p, const ListAssignment& lists,
                              std::uint64_t search_budget = 0);

}  // namespace ramsey
