#include "ramsey/detect.hpp"

#include <algorithm>
#include <cassert>

namespace ramsey {

namespace {

// Kuhn's augmenting-path matching on a small bipartite graph given as an
// adjacency list from left vertices to right vertices. Returns match_l
// (left -> right or -1). Deterministic for a fixed adjacency order.
struct BipartiteMatcher {
  const std::vector<std::vector<int>>& adj;
  int n_right;
  std::vector<int> match_l, match_r;
  std::vector<char> seen;

  BipartiteMatcher(const std::vector<std::vector<int>>& adj_, int n_right_)
      : adj(adj_), n_right(n_right_), match_l(adj.size(), -1), match_r(n_right_, -1) {}

  bool augment(int u) {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_r[v] < 0 || augment(match_r[v])) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    return false;
  }

  int run() {
    int size = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      seen.assign(n_right, 0);
      if (augment(static_cast<int>(u))) ++size;
    }
    return size;
  }
};

}  // namespace

std::optional<Embedding> find_mono_star(const ColoredCompleteGraph& g, int n) {
  if (n < 1) fail(ErrorCode::InvalidArity, "Star(n) needs n >= 1");
  for (int v = 0; v < g.order(); ++v) {
    for (int c = 1; c <= g.colors(); ++c) {
      if (g.color_degree(v, c) < n) continue;
      Embedding e;
      e.color = c;
      e.pattern = Pattern::star(n);
      e.vertices.push_back(v);
      for (int u = 0; u < g.order() && static_cast<int>(e.vertices.size()) < n + 1; ++u)
        if (u != v && g.color(u, v) == c) e.vertices.push_back(u);
      return e;
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_mono_double_star(const ColoredCompleteGraph& g, int n, int m) {
  if (m < 1 || n < m) fail(ErrorCode::InvalidArity, "DoubleStar(n,m) needs n >= m >= 1");
  const int N = g.order();
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      if (v == u) continue;
      const int c = g.color(u, v);
      const int a = g.color_degree(u, c) - 1;
      const int b = g.color_degree(v, c) - 1;
      if (a < n || b < m) continue;
      const auto common = g.common_color_neighbors(u, v, c);
      const int t = static_cast<int>(common.size());
      if (a + b - t < n + m) continue;

      // Fill u's side from its private c-neighbors first, then common ones;
      // v's side takes its privates and whatever common vertices remain.
      std::vector<int> u_leaves, v_leaves;
      std::vector<char> in_common(N, 0);
      for (int w : common) in_common[w] = 1;
      for (int w = 0; w < N && static_cast<int>(u_leaves.size()) < n; ++w)
        if (w != u && w != v && !in_common[w] && g.color(u, w) == c) u_leaves.push_back(w);
      for (int w = 0; w < N && static_cast<int>(v_leaves.size()) < m; ++w)
        if (w != u && w != v && !in_common[w] && g.color(v, w) == c) v_leaves.push_back(w);
      std::size_t ci = 0;
      while (u_leaves.size() < static_cast<std::size_t>(n)) u_leaves.push_back(common[ci++]);
      while (v_leaves.size() < static_cast<std::size_t>(m)) v_leaves.push_back(common[ci++]);

      Embedding e;
      e.color = c;
      e.pattern = Pattern::double_star(n, m);
      e.vertices.push_back(u);
      e.vertices.push_back(v);
      e.vertices.insert(e.vertices.end(), u_leaves.begin(), u_leaves.end());
      e.vertices.insert(e.vertices.end(), v_leaves.begin(), v_leaves.end());
      return e;
    }
  }
  return std::nullopt;
}

namespace {

// One (center, color) feasibility test for SubdividedStar(n,m): choose the
// n-element leaf set Y among the d c-neighbors of x (equivalently the d-n
// freed ones) and match m leaves to distinct subdivision vertices outside
// Y u {x} along c-edges.
std::optional<Embedding> subdivided_star_at(const ColoredCompleteGraph& g, int x, int c, int n,
                                            int m) {
  const int N = g.order();
  const std::vector<int> nc = g.color_neighbors(x, c);
  const int d = static_cast<int>(nc.size());
  if (d < n) return std::nullopt;

  std::vector<char> is_nc(N, 0);
  for (int w : nc) is_nc[w] = 1;

  // Relaxed upper bound: matching from all of N_c(x) to everything else.
  {
    std::vector<std::vector<int>> adj(nc.size());
    for (int i = 0; i < d; ++i)
      for (int w = 0; w < N; ++w)
        if (w != x && w != nc[i] && g.color(nc[i], w) == c) adj[i].push_back(w);
    BipartiteMatcher relaxed(adj, N);
    if (relaxed.run() < m) return std::nullopt;
  }

  // Enumerate freed subsets (the d-n neighbors excluded from Y) in
  // combination order.
  const int freed = d - n;
  std::vector<int> comb(freed);
  for (int i = 0; i < freed; ++i) comb[i] = i;
  while (true) {
    std::vector<char> is_freed(d, 0);
    for (int idx : comb) is_freed[idx] = 1;
    std::vector<int> leaves;
    for (int i = 0; i < d; ++i)
      if (!is_freed[i]) leaves.push_back(nc[i]);

    std::vector<char> in_y(N, 0);
    for (int y : leaves) in_y[y] = 1;
    std::vector<std::vector<int>> adj(leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (int w = 0; w < N; ++w)
        if (w != x && !in_y[w] && g.color(leaves[i], w) == c) adj[i].push_back(w);
    BipartiteMatcher matcher(adj, N);
    if (matcher.run() >= m) {
      std::vector<std::pair<int, int>> pairs;  // (leaf, partner)
      for (std::size_t i = 0; i < leaves.size(); ++i)
        if (matcher.match_l[i] >= 0) pairs.emplace_back(leaves[i], matcher.match_l[i]);
      pairs.resize(m);
      std::vector<char> used_as_pair(N, 0);
      for (auto& [y, z] : pairs) used_as_pair[y] = 1;

      Embedding e;
      e.color = c;
      e.pattern = Pattern::subdivided_star(n, m);
      e.vertices.push_back(x);
      for (auto& [y, z] : pairs) e.vertices.push_back(y);
      for (int y : leaves)
        if (!used_as_pair[y]) e.vertices.push_back(y);
      for (auto& [y, z] : pairs) e.vertices.push_back(z);
      return e;
    }

    // next combination
    int i = freed - 1;
    while (i >= 0 && comb[i] == d - freed + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < freed; ++j) comb[j] = comb[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_mono_subdivided_star(const ColoredCompleteGraph& g, int n, int m) {
  if (n < 2 || m < 1 || n < m)
    fail(ErrorCode::InvalidArity, "SubdividedStar(n,m) needs n >= 2 and n >= m >= 1");
  for (int x = 0; x < g.order(); ++x)
    for (int c = 1; c <= g.colors(); ++c)
      if (auto e = subdivided_star_at(g, x, c, n, m)) return e;
  return std::nullopt;
}

std::optional<Embedding> find_mono_pattern(const ColoredCompleteGraph& g, const Pattern& p) {
  switch (p.kind) {
    case PatternKind::Star: return find_mono_star(g, p.n);
    case PatternKind::DoubleStar: return find_mono_double_star(g, p.n, p.m);
    case PatternKind::SubdividedStar: return find_mono_subdivided_star(g, p.n, p.m);
  }
  return std::nullopt;
}

namespace {

struct BruteForceSearch {
  const ColoredCompleteGraph& g;
  const Pattern& pattern;
  int color;
  int count;
  std::vector<std::vector<int>> earlier_neighbors;  // pattern edges to assigned positions
  std::vector<int> order_group;                     // positions forced increasing share a group
  std::vector<int> assignment;
  std::vector<char> used;

  BruteForceSearch(const ColoredCompleteGraph& g_, const Pattern& p)
      : g(g_), pattern(p), color(0), count(p.vertex_count()) {
    earlier_neighbors.resize(count);
    for (auto& [a, b] : p.edges()) {
      int lo = std::min(a, b), hi = std::max(a, b);
      earlier_neighbors[hi].push_back(lo);
    }
    // Interchangeable positions: plain leaves with each other, and paired
    // leaves (those carrying a subdivision vertex) with each other.
    order_group.assign(count, -1);
    switch (p.kind) {
      case PatternKind::Star:
        for (int i = 1; i <= p.n; ++i) order_group[i] = 0;
        break;
      case PatternKind::DoubleStar:
        for (int i = 2; i < 2 + p.n; ++i) order_group[i] = 0;
        for (int i = 2 + p.n; i < 2 + p.n + p.m; ++i) order_group[i] = 1;
        break;
      case PatternKind::SubdividedStar:
        for (int i = 1; i <= p.m; ++i) order_group[i] = 0;
        for (int i = 1 + p.m; i <= p.n; ++i) order_group[i] = 1;
        break;
    }
    assignment.assign(count, -1);
    used.assign(g.order(), 0);
  }

  bool place(int pos) {
    if (pos == count) return true;
    int start = 0;
    if (order_group[pos] >= 0 && pos > 0 && order_group[pos - 1] == order_group[pos])
      start = assignment[pos - 1] + 1;
    for (int v = start; v < g.order(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int prev : earlier_neighbors[pos])
        if (g.color(assignment[prev], v) != color) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assignment[pos] = v;
      used[v] = 1;
      if (place(pos + 1)) return true;
      used[v] = 0;
      assignment[pos] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> brute_force_find(const ColoredCompleteGraph& g, const Pattern& p,
                                          int order_cutoff) {
  if (g.order() > order_cutoff)
    fail(ErrorCode::InstanceTooLarge, "order " + std::to_string(g.order()) +
                                          " exceeds brute-force cutoff " +
                                          std::to_string(order_cutoff));
  if (p.vertex_count() > g.order()) return std::nullopt;
  for (int c = 1; c <= g.colors(); ++c) {
    BruteForceSearch search(g, p);
    search.color = c;
    if (search.place(0)) {
      Embedding e;
      e.color = c;
      e.pattern = p;
      e.vertices = search.assignment;
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
