#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramsey/core.hpp"

namespace ramsey {

// Hosts are explicit edge sets: constructions pass complete multipartite
// graphs down explicitly rather than as complete-graph deltas.
struct SimpleGraph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no duplicates

  static SimpleGraph complete(int q);
  static SimpleGraph cycle(int q);

  std::vector<int> degrees() const;
  // Degree if regular, -1 otherwise.
  int regular_degree() const;
  std::vector<std::vector<int>> adjacency() const;
};

using EdgeSet = std::vector<std::pair<int, int>>;

// A partition of a host's edge set into spanning factors with prescribed
// degrees (1-factors, 2-factors, n-factors).
struct Factorization {
  SimpleGraph host;
  std::vector<EdgeSet> factors;
  std::vector<int> degrees;  // target degree of factor i
};

// Matching plus vertex cover of equal cardinality (Konig certificate).
struct BipartiteCertificate {
  EdgeSet matching;
  std::vector<int> cover;
  std::vector<int> left, right;  // the bipartition that was used
};

// Proper edge coloring of K_q with chi'(K_q) colors. For odd q every vertex
// misses exactly one color and the missing colors are pairwise distinct;
// missing is empty for even q.
struct ProperEdgeColoring {
  int order = 0;
  int colors = 0;
  std::vector<int> color_of_pair;  // triangular, 1-based colors
  std::vector<int> missing;        // per vertex, odd q only

  int color(int u, int v) const { return color_of_pair[ColoredCompleteGraph::pair_index(u, v)]; }
};

// Circle construction for odd q (q colors), round-robin with a fixed hub for
// even q (q-1 colors).
ProperEdgeColoring proper_edge_coloring_complete(int q);

// q-1 edge-disjoint perfect matchings of K_q, q even.
Factorization one_factorization_even(int q);

// Petersen: split a 2r-regular graph into r edge-disjoint 2-factors. Each
// component's Euler circuit is oriented, the r-regular out/in bipartite graph
// is split into r perfect matchings (Euler halving when r is even, one
// augmenting-path peel when odd), and matchings map back to 2-factors.
Factorization two_factorization(const SimpleGraph& h);

// Greedy peeling of `count` pairwise-disjoint perfect matchings, retrying
// under fresh random vertex relabelings when a peel dead-ends. Throws
// ExtractionFailed (reporting how many matchings were found) once the budget
// is spent.
struct MatchingExtraction {
  std::vector<EdgeSet> matchings;
  SimpleGraph remainder;
};
MatchingExtraction extract_perfect_matchings(const SimpleGraph& h, int count, std::uint64_t seed,
                                             int retry_budget = 50);

// Partition an n*count-regular host into count edge-disjoint n-factors:
// repeated 2-factors for even n; a 1-factor plus (n-1)/2 2-factors per color
// for odd n.
Factorization decompose_into_n_factors(const SimpleGraph& h, int n, int count, std::uint64_t seed);

// Maximum matching and minimum vertex cover with |M| = |C|; the cover comes
// from the alternating-reachability set of the final matching.
BipartiteCertificate max_matching_min_cover(const SimpleGraph& host);

// Maximum matching in a general graph (blossom contraction). Returns mate
// array (partner or -1).
std::vector<int> maximum_matching_general(const SimpleGraph& g);

}  // namespace ramsey
