#include "ramsey/factorize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

namespace ramsey {

SimpleGraph SimpleGraph::complete(int q) {
  SimpleGraph g;
  g.order = q;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) g.edges.emplace_back(u, v);
  return g;
}

SimpleGraph SimpleGraph::cycle(int q) {
  SimpleGraph g;
  g.order = q;
  for (int i = 0; i < q; ++i) {
    int u = i, v = (i + 1) % q;
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return g;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(order, 0);
  for (auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

int SimpleGraph::regular_degree() const {
  auto deg = degrees();
  if (deg.empty()) return -1;
  for (int d : deg)
    if (d != deg[0]) return -1;
  return deg[0];
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(order);
  for (auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

ProperEdgeColoring proper_edge_coloring_complete(int q) {
  if (q < 2) fail(ErrorCode::InvalidArity, "proper edge coloring needs q >= 2");
  ProperEdgeColoring out;
  out.order = q;
  out.color_of_pair.assign(static_cast<std::size_t>(q) * (q - 1) / 2, 0);
  if (q % 2 == 1) {
    // Circle construction: color(uv) = u+v mod q. Color 2v mod q is the one
    // absent at v; relabeling happens in the consumers that need missing(v)=v.
    out.colors = q;
    out.missing.resize(q);
    for (int u = 0; u < q; ++u)
      for (int v = u + 1; v < q; ++v)
        out.color_of_pair[ColoredCompleteGraph::pair_index(u, v)] = (u + v) % q + 1;
    for (int v = 0; v < q; ++v) out.missing[v] = (2 * v) % q + 1;
  } else {
    // Round-robin with hub q-1: round r pairs the hub with r and i with
    // 2r-i mod (q-1) otherwise.
    out.colors = q - 1;
    const int w = q - 1;
    for (int r = 0; r < w; ++r) {
      out.color_of_pair[ColoredCompleteGraph::pair_index(r, w)] = r + 1;
      for (int i = 0; i < w; ++i) {
        int j = ((2 * r - i) % w + w) % w;
        if (i < j) out.color_of_pair[ColoredCompleteGraph::pair_index(i, j)] = r + 1;
      }
    }
  }
  return out;
}

Factorization one_factorization_even(int q) {
  if (q < 2 || q % 2 != 0) fail(ErrorCode::InvalidArity, "1-factorization needs even q >= 2");
  auto coloring = proper_edge_coloring_complete(q);
  Factorization f;
  f.host = SimpleGraph::complete(q);
  f.factors.resize(q - 1);
  f.degrees.assign(q - 1, 1);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) f.factors[coloring.color(u, v) - 1].emplace_back(u, v);
  return f;
}

namespace {

// Hierholzer Euler circuit on the subgraph given by edge indices; assumes all
// degrees even. Returns arcs (u,v) oriented along the traversal.
std::vector<std::pair<int, int>> orient_by_euler_circuits(int order, const EdgeSet& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(order);  // (neighbor, edge id)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].first].emplace_back(edges[i].second, static_cast<int>(i));
    adj[edges[i].second].emplace_back(edges[i].first, static_cast<int>(i));
  }
  std::vector<std::size_t> next(order, 0);
  std::vector<char> used(edges.size(), 0);
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(edges.size());
  for (int s = 0; s < order; ++s) {
    if (adj[s].empty()) continue;
    // Iterative Hierholzer from s; covers the whole component containing s.
    std::vector<int> stack{s};
    std::vector<int> circuit;
    while (!stack.empty()) {
      int v = stack.back();
      while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
      if (next[v] == adj[v].size()) {
        circuit.push_back(v);
        stack.pop_back();
      } else {
        auto [w, id] = adj[v][next[v]];
        used[id] = 1;
        stack.push_back(w);
      }
    }
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
      arcs.emplace_back(circuit[i + 1], circuit[i]);  // circuit is in reverse order
  }
  return arcs;
}

// Split an r-regular bipartite graph (left/right both 0..order-1, arcs
// left->right) into r perfect matchings.
void split_regular_bipartite(int order, const std::vector<std::pair<int, int>>& arcs, int r,
                             std::vector<std::vector<std::pair<int, int>>>& out) {
  if (r == 0 || arcs.empty()) return;
  if (r == 1) {
    out.push_back(arcs);
    return;
  }
  if (r % 2 == 0) {
    // Euler halving: 2-color the edges alternately along each Euler circuit
    // of the bipartite graph. Circuits have even length, so every vertex
    // keeps exactly half its edges in each part.
    std::vector<std::vector<std::pair<int, int>>> adj(2 * order);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      adj[arcs[i].first].emplace_back(order + arcs[i].second, static_cast<int>(i));
      adj[order + arcs[i].second].emplace_back(arcs[i].first, static_cast<int>(i));
    }
    std::vector<std::size_t> next(2 * order, 0);
    std::vector<char> used(arcs.size(), 0);
    std::vector<std::pair<int, int>> half_a, half_b;
    for (int s = 0; s < 2 * order; ++s) {
      if (adj[s].empty()) continue;
      // Hierholzer; the spliced circuit is read off the pop order.
      std::vector<std::pair<int, int>> stack{{s, -1}};  // (vertex, edge used to enter)
      std::vector<int> circuit_edges;
      while (!stack.empty()) {
        auto [v, enter_id] = stack.back();
        while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
        if (next[v] == adj[v].size()) {
          stack.pop_back();
          if (enter_id >= 0) circuit_edges.push_back(enter_id);
        } else {
          auto [w, id] = adj[v][next[v]];
          used[id] = 1;
          stack.emplace_back(w, id);
        }
      }
      for (std::size_t i = 0; i < circuit_edges.size(); ++i)
        (i % 2 == 0 ? half_a : half_b).push_back(arcs[circuit_edges[i]]);
    }
    split_regular_bipartite(order, half_a, r / 2, out);
    split_regular_bipartite(order, half_b, r / 2, out);
  } else {
    // Peel one perfect matching, then halve the even remainder.
    std::vector<std::vector<int>> adj(order);
    for (std::size_t i = 0; i < arcs.size(); ++i) adj[arcs[i].first].push_back(static_cast<int>(i));
    std::vector<int> match_l(order, -1), match_r(order, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int u) -> bool {
      for (int id : adj[u]) {
        int v = arcs[id].second;
        if (seen[v]) continue;
        seen[v] = 1;
        if (match_r[v] < 0 || augment(match_r[v])) {
          match_l[u] = id;
          match_r[v] = u;
          return true;
        }
      }
      return false;
    };
    for (int u = 0; u < order; ++u) {
      if (adj[u].empty()) continue;  // vertex absent from this component set
      seen.assign(order, 0);
      if (match_l[u] < 0 && !augment(u))
        fail(ErrorCode::InternalError, "regular bipartite graph without perfect matching");
    }
    std::vector<std::pair<int, int>> matching, rest;
    std::vector<char> picked(arcs.size(), 0);
    for (int u = 0; u < order; ++u)
      if (match_l[u] >= 0) picked[match_l[u]] = 1;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      (picked[i] ? matching : rest).push_back(arcs[i]);
    out.push_back(matching);
    split_regular_bipartite(order, rest, r - 1, out);
  }
}

}  // namespace

Factorization two_factorization(const SimpleGraph& h) {
  const int deg = h.regular_degree();
  if (deg < 0 || deg % 2 != 0 || deg == 0)
    fail(ErrorCode::NotEvenRegular, "host must be 2r-regular with r >= 1");
  const int r = deg / 2;

  auto arcs = orient_by_euler_circuits(h.order, h.edges);
  std::vector<std::vector<std::pair<int, int>>> matchings;
  split_regular_bipartite(h.order, arcs, r, matchings);
  if (static_cast<int>(matchings.size()) != r)
    fail(ErrorCode::InternalError, "bipartite split produced wrong factor count");

  Factorization f;
  f.host = h;
  f.degrees.assign(r, 2);
  for (auto& m : matchings) {
    EdgeSet factor;
    factor.reserve(m.size());
    for (auto& [u, v] : m) factor.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(factor.begin(), factor.end());
    f.factors.push_back(std::move(factor));
  }
  return f;
}

std::vector<int> maximum_matching_general(const SimpleGraph& g) {
  // Blossom contraction, O(V^3).
  const int n = g.order;
  auto adj = g.adjacency();
  std::vector<int> mate(n, -1), parent(n), base(n), q;
  std::vector<char> in_queue(n), in_blossom(n);

  auto lowest_common_ancestor = [&](int u, int v) {
    std::vector<char> visited(n, 0);
    for (;;) {
      u = base[u];
      visited[u] = 1;
      if (mate[u] < 0) break;
      u = parent[mate[u]];
    }
    for (;;) {
      v = base[v];
      if (visited[v]) return v;
      v = parent[mate[v]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  auto find_augmenting_path = [&](int root) -> int {
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(in_queue.begin(), in_queue.end(), 0);
    std::iota(base.begin(), base.end(), 0);
    q.clear();
    q.push_back(root);
    in_queue[root] = 1;
    for (std::size_t head = 0; head < q.size(); ++head) {
      int u = q[head];
      for (int v : adj[u]) {
        if (base[u] == base[v] || mate[u] == v) continue;
        if (v == root || (mate[v] >= 0 && parent[mate[v]] >= 0)) {
          // Odd cycle: contract the blossom.
          int b = lowest_common_ancestor(u, v);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(u, b, v);
          mark_path(v, b, u);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = b;
              if (!in_queue[i]) {
                in_queue[i] = 1;
                q.push_back(i);
              }
            }
        } else if (parent[v] < 0) {
          parent[v] = u;
          if (mate[v] < 0) return v;
          in_queue[mate[v]] = 1;
          q.push_back(mate[v]);
        }
      }
    }
    return -1;
  };

  for (int u = 0; u < n; ++u) {
    if (mate[u] >= 0) continue;
    int v = find_augmenting_path(u);
    while (v >= 0) {
      int pv = parent[v], ppv = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = ppv;
    }
  }
  return mate;
}

MatchingExtraction extract_perfect_matchings(const SimpleGraph& h, int count, std::uint64_t seed,
                                             int retry_budget) {
  if (count < 1) fail(ErrorCode::InvalidArity, "matching count must be >= 1");
  if (h.order % 2 != 0) fail(ErrorCode::InvalidArity, "perfect matchings need even order");

  std::mt19937_64 rng(seed);
  int best_found = 0;
  for (int attempt = 0; attempt <= retry_budget; ++attempt) {
    // Random relabeling perturbs which perfect matching the peel finds.
    std::vector<int> perm(h.order);
    std::iota(perm.begin(), perm.end(), 0);
    if (attempt > 0) std::shuffle(perm.begin(), perm.end(), rng);

    SimpleGraph current;
    current.order = h.order;
    for (auto& [u, v] : h.edges)
      current.edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(current.edges.begin(), current.edges.end());

    std::vector<EdgeSet> found;
    bool ok = true;
    for (int i = 0; i < count; ++i) {
      auto mate = maximum_matching_general(current);
      EdgeSet matching;
      for (int u = 0; u < current.order; ++u)
        if (mate[u] > u) matching.emplace_back(u, mate[u]);
      if (static_cast<int>(matching.size()) * 2 != h.order) {
        ok = false;
        best_found = std::max(best_found, i);
        break;
      }
      std::vector<char> drop(current.edges.size(), 0);
      EdgeSet rest;
      for (auto& e : current.edges)
        if (!std::binary_search(matching.begin(), matching.end(), e)) rest.push_back(e);
      current.edges = std::move(rest);
      found.push_back(std::move(matching));
    }
    if (!ok) continue;

    // Map labels back to the caller's graph.
    std::vector<int> inv(h.order);
    for (int i = 0; i < h.order; ++i) inv[perm[i]] = i;
    MatchingExtraction result;
    for (auto& m : found) {
      EdgeSet mapped;
      for (auto& [u, v] : m)
        mapped.emplace_back(std::min(inv[u], inv[v]), std::max(inv[u], inv[v]));
      std::sort(mapped.begin(), mapped.end());
      result.matchings.push_back(std::move(mapped));
    }
    result.remainder.order = h.order;
    for (auto& [u, v] : current.edges)
      result.remainder.edges.emplace_back(std::min(inv[u], inv[v]), std::max(inv[u], inv[v]));
    std::sort(result.remainder.edges.begin(), result.remainder.edges.end());
    return result;
  }
  fail(ErrorCode::ExtractionFailed,
       "found only " + std::to_string(best_found) + " of " + std::to_string(count) +
           " disjoint perfect matchings within the retry budget");
}

Factorization decompose_into_n_factors(const SimpleGraph& h, int n, int count,
                                       std::uint64_t seed) {
  if (n < 1 || count < 1) fail(ErrorCode::InvalidArity, "factor arity and count must be >= 1");
  const int deg = h.regular_degree();
  if (deg != n * count)
    fail(ErrorCode::ArityMismatch, "host degree " + std::to_string(deg) + " != n*count = " +
                                       std::to_string(n * count));

  Factorization out;
  out.host = h;
  out.degrees.assign(count, n);
  out.factors.assign(count, {});

  if (n % 2 == 0) {
    auto twos = two_factorization(h);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < n / 2; ++j) {
        auto& part = twos.factors[i * (n / 2) + j];
        out.factors[i].insert(out.factors[i].end(), part.begin(), part.end());
      }
  } else {
    if (h.order % 2 != 0)
      fail(ErrorCode::InvalidArity, "odd factor arity needs a host of even order");
    auto extraction = extract_perfect_matchings(h, count, seed);
    if (n > 1) {
      auto twos = two_factorization(extraction.remainder);
      for (int i = 0; i < count; ++i) {
        out.factors[i] = extraction.matchings[i];
        for (int j = 0; j < (n - 1) / 2; ++j) {
          auto& part = twos.factors[i * ((n - 1) / 2) + j];
          out.factors[i].insert(out.factors[i].end(), part.begin(), part.end());
        }
      }
    } else {
      for (int i = 0; i < count; ++i) out.factors[i] = extraction.matchings[i];
    }
  }
  for (auto& f : out.factors) std::sort(f.begin(), f.end());
  return out;
}

BipartiteCertificate max_matching_min_cover(const SimpleGraph& host) {
  const int n = host.order;
  auto adj = host.adjacency();

  // BFS 2-coloring; isolated vertices land on the left side.
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v : adj[u]) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          bfs.push(v);
        } else if (side[v] == side[u]) {
          fail(ErrorCode::NotBipartite, "odd cycle through vertex " + std::to_string(v));
        }
      }
    }
  }

  std::vector<int> match(n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match[v] < 0 || augment(match[v])) {
        match[u] = v;
        match[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u)
    if (side[u] == 0 && match[u] < 0) {
      seen.assign(n, 0);
      augment(u);
    }

  // Konig: alternate from unmatched left vertices; cover is (L \ Z) u (R n Z).
  std::vector<char> reach(n, 0);
  std::queue<int> bfs;
  for (int u = 0; u < n; ++u)
    if (side[u] == 0 && match[u] < 0) {
      reach[u] = 1;
      bfs.push(u);
    }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    if (side[u] == 0) {
      for (int v : adj[u])
        if (match[u] != v && !reach[v]) {
          reach[v] = 1;
          bfs.push(v);
        }
    } else if (match[u] >= 0 && !reach[match[u]]) {
      reach[match[u]] = 1;
      bfs.push(match[u]);
    }
  }

  BipartiteCertificate cert;
  for (int u = 0; u < n; ++u) {
    (side[u] == 0 ? cert.left : cert.right).push_back(u);
    if (side[u] == 0 && match[u] >= 0) cert.matching.emplace_back(u, match[u]);
    if ((side[u] == 0 && !reach[u]) || (side[u] == 1 && reach[u])) cert.cover.push_back(u);
  }
  return cert;
}

}  // namespace ramsey
