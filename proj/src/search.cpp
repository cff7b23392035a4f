#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "ramsey/detect.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

ListAssignment ListAssignment::constant(int order, std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  ListAssignment out;
  out.order = order;
  out.lists.assign(out.edge_count(), colors);
  return out;
}

int ListAssignment::list_size() const {
  if (lists.size() != edge_count())
    fail(ErrorCode::ListSizeMismatch, "assignment covers " + std::to_string(lists.size()) +
                                          " edges, host has " + std::to_string(edge_count()));
  if (lists.empty()) return 0;
  const std::size_t k = lists[0].size();
  for (const auto& l : lists)
    if (l.size() != k)
      fail(ErrorCode::ListSizeMismatch, "lists are not of uniform size");
  return static_cast<int>(k);
}

bool ListAssignment::is_constant() const {
  for (const auto& l : lists)
    if (l != lists[0]) return false;
  return true;
}

namespace {

std::vector<std::pair<int, int>> lexicographic_edges(int order) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  return edges;
}

// One DFS branch of the coloring search. Colors here are normalized to
// 1..num_colors; `allowed` lists the usable (normalized) colors per edge in
// ascending order.
struct Engine {
  int order;
  int num_colors;
  Pattern pattern;
  const std::vector<std::vector<int>>* allowed;
  bool symmetry;

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::uint64_t>> adj;  // [color][vertex]
  std::vector<std::vector<int>> deg;            // [color][vertex]
  std::vector<int> assignment;                  // per edge, 0 = unassigned

  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;  // 0 = unlimited
  bool budget_hit = false;
  bool aborted = false;
  const std::atomic<std::int64_t>* abort_signal = nullptr;
  std::int64_t my_index = -1;

  Engine(int order_, int num_colors_, const Pattern& pattern_,
         const std::vector<std::vector<int>>* allowed_, bool symmetry_)
      : order(order_),
        num_colors(num_colors_),
        pattern(pattern_),
        allowed(allowed_),
        symmetry(symmetry_),
        edges(lexicographic_edges(order_)),
        adj(num_colors_ + 1, std::vector<std::uint64_t>(order_, 0)),
        deg(num_colors_ + 1, std::vector<int>(order_, 0)),
        assignment(edges.size(), 0) {}

  void place(std::size_t idx, int c) {
    auto [u, v] = edges[idx];
    assignment[idx] = c;
    adj[c][u] |= std::uint64_t{1} << v;
    adj[c][v] |= std::uint64_t{1} << u;
    ++deg[c][u];
    ++deg[c][v];
  }

  void unplace(std::size_t idx) {
    auto [u, v] = edges[idx];
    int c = assignment[idx];
    assignment[idx] = 0;
    adj[c][u] &= ~(std::uint64_t{1} << v);
    adj[c][v] &= ~(std::uint64_t{1} << u);
    --deg[c][u];
    --deg[c][v];
  }

  bool star_through(int c, int u, int v) const {
    return deg[c][u] >= pattern.n || deg[c][v] >= pattern.n;
  }

  bool double_star_centered(int c, int x, int y) const {
    const int n = pattern.n, m = pattern.m;
    const int a = deg[c][x] - 1;
    const int b = deg[c][y] - 1;
    if (a < m || b < m) return false;
    const int t = std::popcount(adj[c][x] & adj[c][y]);
    if (a + b - t < n + m) return false;
    return (a >= n && b >= m) || (a >= m && b >= n);
  }

  bool double_star_through(int c, int u, int v) const {
    for (int side = 0; side < 2; ++side) {
      int x = side == 0 ? u : v;
      std::uint64_t nb = adj[c][x];
      while (nb) {
        int y = std::countr_zero(nb);
        nb &= nb - 1;
        if (double_star_centered(c, x, y)) return true;
      }
    }
    return false;
  }

  // Exact feasibility of SubdividedStar(n,m) centered at x in class c of the
  // partial coloring: reserve n of the c-neighbors as leaves, match m of them
  // to distinct outside vertices along c-edges.
  bool substar_at(int c, int x) const {
    const int n = pattern.n, m = pattern.m;
    if (deg[c][x] < n) return false;
    std::vector<int> nc;
    {
      std::uint64_t nb = adj[c][x];
      while (nb) {
        nc.push_back(std::countr_zero(nb));
        nb &= nb - 1;
      }
    }
    const int d = static_cast<int>(nc.size());
    const std::uint64_t self = std::uint64_t{1} << x;

    auto matching_size = [&](const std::vector<int>& left, std::uint64_t banned) {
      std::vector<int> match_of(order, -1);
      int size = 0;
      std::vector<char> seen(order, 0);
      std::function<bool(int)> augment = [&](int y) -> bool {
        std::uint64_t cand = adj[c][y] & ~banned;
        while (cand) {
          int z = std::countr_zero(cand);
          cand &= cand - 1;
          if (seen[z]) continue;
          seen[z] = 1;
          if (match_of[z] < 0 || augment(match_of[z])) {
            match_of[z] = y;
            return true;
          }
        }
        return false;
      };
      for (int y : left) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(y)) {
          ++size;
          if (size >= m) break;
        }
      }
      return size;
    };

    // Relaxed bound first: all d neighbors as leaves, z anywhere but x.
    if (matching_size(nc, self) < m) return false;
    if (d == n) return true;  // the relaxed run used exactly the leaf set Y

    const int freed = d - n;
    std::vector<int> comb(freed);
    for (int i = 0; i < freed; ++i) comb[i] = i;
    for (;;) {
      std::uint64_t ymask = 0;
      std::vector<int> leaves;
      {
        std::vector<char> is_freed(d, 0);
        for (int i : comb) is_freed[i] = 1;
        for (int i = 0; i < d; ++i)
          if (!is_freed[i]) {
            leaves.push_back(nc[i]);
            ymask |= std::uint64_t{1} << nc[i];
          }
      }
      if (matching_size(leaves, ymask | self) >= m) return true;
      int i = freed - 1;
      while (i >= 0 && comb[i] == d - freed + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < freed; ++j) comb[j] = comb[j - 1] + 1;
    }
    return false;
  }

  bool substar_through(int c, int u, int v) const {
    std::uint64_t centers =
        (std::uint64_t{1} << u) | (std::uint64_t{1} << v) | adj[c][u] | adj[c][v];
    while (centers) {
      int x = std::countr_zero(centers);
      centers &= centers - 1;
      if (substar_at(c, x)) return true;
    }
    return false;
  }

  // Would coloring edge idx with c complete a monochromatic pattern copy?
  // Only copies through the new edge need checking: earlier nodes kept the
  // partial coloring pattern-free.
  bool creates_pattern(std::size_t idx, int c) const {
    auto [u, v] = edges[idx];
    switch (pattern.kind) {
      case PatternKind::Star: return star_through(c, u, v);
      case PatternKind::DoubleStar: return double_star_through(c, u, v);
      case PatternKind::SubdividedStar: return substar_through(c, u, v);
    }
    return false;
  }

  bool check_abort() {
    if (abort_signal && (nodes & 0x1fff) == 0 &&
        abort_signal->load(std::memory_order_relaxed) < my_index) {
      aborted = true;
      return true;
    }
    return false;
  }

  // Depth-first over edges idx.. ; returns true once a complete pattern-free
  // assignment is reached.
  bool dfs(std::size_t idx, int max_used) {
    if (idx == edges.size()) return true;
    for (int c : (*allowed)[idx]) {
      if (symmetry && c > max_used + 1) break;  // canonical color order
      if (budget && nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      if (check_abort()) return false;
      place(idx, c);
      if (!creates_pattern(idx, c) && dfs(idx + 1, std::max(max_used, c))) return true;
      unplace(idx);
      if (budget_hit || aborted) return false;
    }
    return false;
  }

  // Replay an externally generated prefix (already known pattern-free).
  void load_prefix(const std::vector<int>& prefix, int& max_used) {
    max_used = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      place(i, prefix[i]);
      max_used = std::max(max_used, prefix[i]);
    }
  }

  ColoredCompleteGraph to_graph() const {
    std::vector<int> tau(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      tau[ColoredCompleteGraph::pair_index(edges[i].first, edges[i].second)] = assignment[i];
    return ColoredCompleteGraph(order, num_colors, std::move(tau));
  }
};

// All pattern-free prefix assignments of the first `depth` edges, in
// lexicographic order.
void generate_prefixes(Engine& e, std::size_t depth, std::size_t idx, int max_used,
                       std::vector<std::vector<int>>& out) {
  if (idx == depth) {
    out.emplace_back(e.assignment.begin(), e.assignment.begin() + depth);
    return;
  }
  for (int c : (*e.allowed)[idx]) {
    if (e.symmetry && c > max_used + 1) break;
    e.place(idx, c);
    if (!e.creates_pattern(idx, c)) generate_prefixes(e, depth, idx + 1, std::max(max_used, c), out);
    e.unplace(idx);
  }
}

struct EngineResult {
  int verdict = 0;  // 0 exhausted, 1 free, 2 budget, 3 aborted
  std::optional<ColoredCompleteGraph> coloring;
  std::uint64_t nodes = 0;
};

// Shared driver behind exists_free_coloring and list_ramsey_check.
EngineResult run_search(int order, int num_colors, const Pattern& pattern,
                        const std::vector<std::vector<int>>& allowed, bool symmetry,
                        std::uint64_t budget, int workers, int prefix_edges) {
  const std::size_t total_edges = static_cast<std::size_t>(order) * (order - 1) / 2;
  if (order > 62) fail(ErrorCode::InstanceTooLarge, "search supports order <= 62");

  EngineResult result;
  if (workers <= 1 || total_edges <= static_cast<std::size_t>(prefix_edges) + 1) {
    Engine e(order, num_colors, pattern, &allowed, symmetry);
    e.budget = budget;
    bool free_found = e.dfs(0, 0);
    result.nodes = e.nodes;
    if (free_found) {
      result.verdict = 1;
      result.coloring = e.to_graph();
    } else {
      result.verdict = e.budget_hit ? 2 : 0;
    }
    return result;
  }

  std::vector<std::vector<int>> prefixes;
  {
    Engine gen(order, num_colors, pattern, &allowed, symmetry);
    generate_prefixes(gen, static_cast<std::size_t>(prefix_edges), 0, 0, prefixes);
  }
  const std::int64_t count = static_cast<std::int64_t>(prefixes.size());
  std::vector<EngineResult> slots(prefixes.size());
  std::atomic<std::int64_t> first_free{count};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    if (first_free.load(std::memory_order_relaxed) < i) {
      slots[i].verdict = 3;
      continue;
    }
    Engine e(order, num_colors, pattern, &allowed, symmetry);
    e.budget = budget;
    e.abort_signal = &first_free;
    e.my_index = i;
    int max_used = 0;
    e.load_prefix(prefixes[i], max_used);
    bool free_found = e.dfs(static_cast<std::size_t>(prefix_edges), max_used);
    slots[i].nodes = e.nodes;
    if (free_found) {
      slots[i].verdict = 1;
      slots[i].coloring = e.to_graph();
      std::int64_t cur = first_free.load();
      while (i < cur && !first_free.compare_exchange_weak(cur, i)) {
      }
    } else {
      slots[i].verdict = e.aborted ? 3 : (e.budget_hit ? 2 : 0);
    }
  }

  // Deterministic reduction: the lowest free prefix wins; otherwise any
  // budget cut poisons a Forced claim.
  bool any_budget = false;
  for (std::int64_t i = 0; i < count; ++i) {
    result.nodes += slots[i].nodes;
    if (slots[i].verdict == 1) {
      result.verdict = 1;
      result.coloring = std::move(slots[i].coloring);
      break;
    }
    if (slots[i].verdict == 2) any_budget = true;
    if (slots[i].verdict == 3)
      fail(ErrorCode::InternalError, "worker aborted without a lower free prefix");
  }
  if (result.verdict != 1) result.verdict = any_budget ? 2 : 0;
  return result;
}

}  // namespace

SearchOutcome exists_free_coloring(int order, int colors, const Pattern& pattern,
                                   const SearchOptions& opts) {
  if (order < 1 || colors < 1) fail(ErrorCode::InvalidArity, "order and colors must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<int> palette(colors);
  for (int c = 0; c < colors; ++c) palette[c] = c + 1;
  std::vector<std::vector<int>> allowed(static_cast<std::size_t>(order) * (order - 1) / 2,
                                        palette);

  auto raw = run_search(order, colors, pattern, allowed, opts.color_symmetry, opts.node_budget,
                        opts.workers, opts.prefix_edges);

  SearchOutcome out;
  out.nodes_explored = raw.nodes;
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (raw.verdict == 1) {
    out.verdict = SearchVerdict::Free;
    if (find_mono_pattern(*raw.coloring, pattern))
      fail(ErrorCode::InternalError, "free verdict contradicted by the detector");
    out.coloring = std::move(raw.coloring);
  } else {
    out.verdict = raw.verdict == 2 ? SearchVerdict::BudgetExhausted : SearchVerdict::Forced;
  }
  return out;
}

RamseyExactOutcome ramsey_exact(const Pattern& pattern, int colors, int order_cap,
                                const SearchOptions& opts) {
  RamseyExactOutcome out;
  const int start_order = pattern.vertex_count();
  if (order_cap < start_order) {
    out.lower_bound = 2;
    return out;
  }

  // Below the pattern's own order every coloring is trivially free.
  if (start_order >= 2) {
    std::vector<int> tau(static_cast<std::size_t>(start_order - 1) * (start_order - 2) / 2, 1);
    out.witness = ColoredCompleteGraph(start_order - 1, colors, std::move(tau));
  }

  for (int order = start_order; order <= order_cap; ++order) {
    auto step = exists_free_coloring(order, colors, pattern, opts);
    out.nodes_explored += step.nodes_explored;
    if (step.verdict == SearchVerdict::BudgetExhausted) {
      out.budget_exhausted = true;
      out.lower_bound = order;  // order-1 was free; nothing is known at `order`
      return out;
    }
    if (step.verdict == SearchVerdict::Forced) {
      out.exact = order;
      out.lower_bound = order;
      return out;
    }
    out.witness = std::move(step.coloring);
    out.lower_bound = order + 1;
  }
  return out;
}

ListColoringOutcome list_edge_coloring(int order, const ListAssignment& lists,
                                       std::uint64_t node_budget) {
  if (lists.order != order) fail(ErrorCode::ListSizeMismatch, "assignment order mismatch");
  lists.list_size();  // validates uniformity

  // Normalize the color universe to 1..K.
  std::set<int> universe;
  for (const auto& l : lists.lists) universe.insert(l.begin(), l.end());
  std::vector<int> id_to_color(universe.begin(), universe.end());
  std::map<int, int> color_to_id;
  for (std::size_t i = 0; i < id_to_color.size(); ++i)
    color_to_id[id_to_color[i]] = static_cast<int>(i) + 1;
  const int K = static_cast<int>(id_to_color.size());

  auto edges = lexicographic_edges(order);
  std::vector<std::vector<int>> allowed(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto idx = ColoredCompleteGraph::pair_index(edges[i].first, edges[i].second);
    for (int c : lists.lists[idx]) allowed[i].push_back(color_to_id[c]);
    std::sort(allowed[i].begin(), allowed[i].end());
  }

  std::vector<std::vector<char>> used(order, std::vector<char>(K + 1, 0));
  std::vector<int> chosen(edges.size(), 0);
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  auto legal_count = [&](std::size_t i) {
    auto [u, v] = edges[i];
    int count = 0;
    for (int c : allowed[i])
      if (!used[u][c] && !used[v][c]) ++count;
    return count;
  };

  // Most-constrained edge first; ties fall to the lexicographically first.
  std::function<bool(int)> solve = [&](int remaining) -> bool {
    if (remaining == 0) return true;
    std::size_t pick = edges.size();
    int best = K + 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (chosen[i]) continue;
      int count = legal_count(i);
      if (count < best) {
        best = count;
        pick = i;
        if (count == 0) break;
      }
    }
    if (best == 0) return false;
    auto [u, v] = edges[pick];
    for (int c : allowed[pick]) {
      if (used[u][c] || used[v][c]) continue;
      if (node_budget && nodes >= node_budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      chosen[pick] = c;
      used[u][c] = used[v][c] = 1;
      if (solve(remaining - 1)) return true;
      chosen[pick] = 0;
      used[u][c] = used[v][c] = 0;
      if (budget_hit) return false;
    }
    return false;
  };

  ListColoringOutcome out;
  out.solved = solve(static_cast<int>(edges.size()));
  out.budget_exhausted = budget_hit;
  out.nodes_explored = nodes;
  if (out.solved) {
    out.color_of_pair.assign(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto idx = ColoredCompleteGraph::pair_index(edges[i].first, edges[i].second);
      out.color_of_pair[idx] = id_to_color[chosen[i] - 1];
    }
  }
  return out;
}

ListRamseyOutcome list_ramsey_check(int order, const ListAssignment& lists,
                                    const Pattern& pattern, std::uint64_t node_budget,
                                    int workers) {
  if (lists.order != order) fail(ErrorCode::ListSizeMismatch, "assignment order mismatch");
  lists.list_size();

  std::set<int> universe;
  for (const auto& l : lists.lists) universe.insert(l.begin(), l.end());
  std::vector<int> id_to_color(universe.begin(), universe.end());
  std::map<int, int> color_to_id;
  for (std::size_t i = 0; i < id_to_color.size(); ++i)
    color_to_id[id_to_color[i]] = static_cast<int>(i) + 1;
  const int K = static_cast<int>(id_to_color.size());

  auto edges = lexicographic_edges(order);
  std::vector<std::vector<int>> allowed(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto idx = ColoredCompleteGraph::pair_index(edges[i].first, edges[i].second);
    for (int c : lists.lists[idx]) allowed[i].push_back(color_to_id[c]);
    std::sort(allowed[i].begin(), allowed[i].end());
  }

  // Color-relabeling symmetry is only valid when every edge draws from the
  // same list.
  const bool symmetry = lists.is_constant();

  auto raw = run_search(order, K, pattern, allowed, symmetry, node_budget, workers, 3);

  ListRamseyOutcome out;
  out.nodes_explored = raw.nodes;
  if (raw.verdict == 1) {
    out.verdict = ListRamseyVerdict::FreeColoringFound;
    if (find_mono_pattern(*raw.coloring, pattern))
      fail(ErrorCode::InternalError, "free verdict contradicted by the detector");
    out.raw_color_of_pair.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto idx = ColoredCompleteGraph::pair_index(edges[i].first, edges[i].second);
      out.raw_color_of_pair[idx] = id_to_color[raw.coloring->color(edges[i].first, edges[i].second) - 1];
    }
    out.coloring = std::move(raw.coloring);
  } else {
    out.verdict = raw.verdict == 2 ? ListRamseyVerdict::BudgetExhausted
                                   : ListRamseyVerdict::ForcedForL;
  }
  return out;
}

}  // namespace ramsey
