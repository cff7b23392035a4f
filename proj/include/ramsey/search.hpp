#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/core.hpp"

namespace ramsey {

// Per-edge color lists of uniform size over an arbitrary color universe.
// Edges are addressed by pair index (lexicographic (u,v), u < v).
struct ListAssignment {
  int order = 0;
  std::vector<std::vector<int>> lists;  // sorted distinct colors per edge

  static ListAssignment constant(int order, std::vector<int> colors);

  std::size_t edge_count() const { return static_cast<std::size_t>(order) * (order - 1) / 2; }
  int list_size() const;  // throws ListSizeMismatch unless uniform
  bool is_constant() const;
};

enum class SearchVerdict { Free, Forced, BudgetExhausted };

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::Forced;
  std::optional<ColoredCompleteGraph> coloring;  // detector-verified when Free
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited; per worker when workers > 1
  bool color_symmetry = true;     // canonical color-prefix breaking
  int workers = 1;                // > 1 distributes the top-level branch set (OpenMP)
  int prefix_edges = 3;           // branch prefix depth handed to workers
};

// Decides whether some k-coloring of E(K_order) avoids a monochromatic copy
// of the pattern. DFS over edges in lexicographic pair order, pruning the
// moment the partial coloring contains the pattern in the touched color
// class. Deterministic for fixed options, including under workers > 1.
SearchOutcome exists_free_coloring(int order, int colors, const Pattern& pattern,
                                   const SearchOptions& opts = {});

struct RamseyExactOutcome {
  std::optional<int> exact;  // least N at which every coloring is forced
  int lower_bound = 0;       // last free order + 1
  std::optional<ColoredCompleteGraph> witness;  // free coloring at exact-1 (or at the cap)
  bool budget_exhausted = false;
  std::uint64_t nodes_explored = 0;
};

// Scans N upward to order_cap; the first Forced N is the Ramsey number.
RamseyExactOutcome ramsey_exact(const Pattern& pattern, int colors, int order_cap,
                                const SearchOptions& opts = {});

struct ListColoringOutcome {
  bool solved = false;
  bool budget_exhausted = false;
  std::vector<int> color_of_pair;  // original list colors, when solved
  std::uint64_t nodes_explored = 0;
};

// Proper edge coloring of K_order picking each edge's color from its list;
// backtracking over the most-constrained edge first. Unsolvable only after
// exhaustive refutation.
ListColoringOutcome list_edge_coloring(int order, const ListAssignment& lists,
                                       std::uint64_t node_budget = 0);

enum class ListRamseyVerdict { ForcedForL, FreeColoringFound, BudgetExhausted };

struct ListRamseyOutcome {
  ListRamseyVerdict verdict = ListRamseyVerdict::ForcedForL;
  std::optional<ColoredCompleteGraph> coloring;  // normalized colors, when free
  std::vector<int> raw_color_of_pair;            // original list colors, when free
  std::uint64_t nodes_explored = 0;
};

// Exhaustively decides whether L forces a monochromatic copy of the pattern.
// Color-symmetry breaking is applied only when the assignment is constant.
ListRamseyOutcome list_ramsey_check(int order, const ListAssignment& lists,
                                    const Pattern& pattern, std::uint64_t node_budget,
                                    int workers = 1);

}  // namespace ramsey
