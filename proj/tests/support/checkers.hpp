#pragma once

#include <algorithm>
#include <set>

#include "ramsey/core.hpp"
#include "ramsey/factorize.hpp"

// Independent validity checkers used by unit and acceptance tests. These
// recompute everything from scratch so they share no bookkeeping with the
// producers they check.
namespace ramsey::testsupport {

inline bool is_valid_matching(const SimpleGraph& g, const EdgeSet& matching) {
  std::set<std::pair<int, int>> host(g.edges.begin(), g.edges.end());
  std::set<int> touched;
  for (auto [u, v] : matching) {
    auto e = std::minmax(u, v);
    if (!host.count({e.first, e.second})) return false;
    if (!touched.insert(u).second) return false;
    if (!touched.insert(v).second) return false;
  }
  return true;
}

inline bool is_valid_cover(const SimpleGraph& g, const std::vector<int>& cover) {
  std::set<int> in_cover(cover.begin(), cover.end());
  for (auto [u, v] : g.edges)
    if (!in_cover.count(u) && !in_cover.count(v)) return false;
  return true;
}

// Disjointness, exact union, and exact per-factor spanning degrees.
inline bool is_valid_factorization(const Factorization& f) {
  std::multiset<std::pair<int, int>> seen;
  if (f.factors.size() != f.degrees.size()) return false;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    std::vector<int> deg(f.host.order, 0);
    for (auto [u, v] : f.factors[i]) {
      auto e = std::minmax(u, v);
      seen.insert({e.first, e.second});
      ++deg[u];
      ++deg[v];
    }
    for (int v = 0; v < f.host.order; ++v)
      if (deg[v] != f.degrees[i]) return false;
  }
  std::multiset<std::pair<int, int>> host(f.host.edges.begin(), f.host.edges.end());
  return seen == host;
}

// Every factor a disjoint union of cycles covering all vertices = spanning
// 2-regular; degree check above covers it, this re-checks connectivity shape.
inline bool factors_are_cycle_covers(const Factorization& f) {
  for (const auto& factor : f.factors) {
    std::vector<std::vector<int>> adj(f.host.order);
    for (auto [u, v] : factor) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (int v = 0; v < f.host.order; ++v)
      if (adj[v].size() != 2) return false;
  }
  return true;
}

inline bool is_proper_edge_coloring(const ProperEdgeColoring& c) {
  for (int v = 0; v < c.order; ++v) {
    std::set<int> at_v;
    for (int u = 0; u < c.order; ++u) {
      if (u == v) continue;
      if (!at_v.insert(c.color(u, v)).second) return false;
    }
  }
  return true;
}

}  // namespace ramsey::testsupport
