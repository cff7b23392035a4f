#pragma once

#include <optional>

#include "ramsey/core.hpp"

namespace ramsey {

// Exact monochromatic-pattern detectors. Each returns the first witness under
// a fixed deterministic scan order (vertex index, then color index), or
// nullopt when no copy exists. Every returned embedding passes
// validate_embedding.

// Star(n): some (v, c) with color_degree(v, c) >= n; lexicographically least
// (v, c) wins, leaves are the n lowest c-neighbors.
std::optional<Embedding> find_mono_star(const ColoredCompleteGraph& g, int n);

// DoubleStar(n,m): centers (u, v) with c = tau(uv). With a = |N_c(u)\{v}|,
// b = |N_c(v)\{u}| and t their common c-neighbors, a copy exists iff
// a >= n, b >= m and a + b - t >= n + m.
std::optional<Embedding> find_mono_double_star(const ColoredCompleteGraph& g, int n, int m);

// SubdividedStar(n,m): center x with n c-leaves Y and an injective c-matching
// of m leaves to vertices outside Y u {x}. Decided exactly by enumerating
// which c-neighbors of x are reserved as leaves and running bipartite
// augmenting-path matching for the subdivision vertices.
std::optional<Embedding> find_mono_subdivided_star(const ColoredCompleteGraph& g, int n, int m);

// Dispatch by pattern kind.
std::optional<Embedding> find_mono_pattern(const ColoredCompleteGraph& g, const Pattern& p);

// Ground-truth oracle: exhaustive backtracking over injective vertex maps per
// color (interchangeable pattern positions enumerated in increasing image
// order). Intended for small N; throws InstanceTooLarge above the cutoff.
std::optional<Embedding> brute_force_find(const ColoredCompleteGraph& g, const Pattern& p,
                                          int order_cutoff = 12);

}  // namespace ramsey
