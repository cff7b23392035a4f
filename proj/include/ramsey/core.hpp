#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

// Error codes shared across all modules. Thrown wrapped in Error.
enum class ErrorCode {
  MissingEdge,
  DuplicateEdge,
  ColorOutOfRange,
  InvalidArity,
  InstanceTooLarge,
  NotEvenRegular,
  ExtractionFailed,
  ArityMismatch,
  NotBipartite,
  Infeasible,
  NotOddPrime,
  ListSizeMismatch,
  HypothesisViolated,
  InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

// A complete graph on N vertices whose edges each carry one color in [k].
// Colors are 1-based, vertices 0-based. Immutable after construction; the
// color table is a dense triangular array so edge queries are O(1).
class ColoredCompleteGraph {
 public:
  ColoredCompleteGraph(int order, int colors, std::vector<int> triangular_colors);

  // Validating constructor from an explicit edge list. The list must cover
  // every unordered pair exactly once with colors in [k].
  static ColoredCompleteGraph build(int order, int colors,
                                    const std::vector<std::array<int, 3>>& edge_colors);

  int order() const { return order_; }
  int colors() const { return colors_; }

  int color(int u, int v) const { return tau_[pair_index(u, v)]; }

  // Number of u != v with tau(uv) = c.
  int color_degree(int v, int c) const;

  // Vertices w outside {u, v} joined to both by color c.
  std::vector<int> common_color_neighbors(int u, int v, int c) const;

  // Neighbors of v in color c, ascending.
  std::vector<int> color_neighbors(int v, int c) const;

  // All edges as (u, v, c) with u < v, lexicographic.
  std::vector<std::array<int, 3>> edge_list() const;

  static std::size_t pair_index(int u, int v);

 private:
  int order_ = 0;
  int colors_ = 0;
  std::vector<int> tau_;  // indexed by pair_index
};

enum class PatternKind { Star, DoubleStar, SubdividedStar };

// The target graph H: Star(n) = K_{1,n}; DoubleStar(n,m) = two stars with
// adjacent centers; SubdividedStar(n,m) = K_{1,n} with m edges subdivided
// once. P_4 is both DoubleStar(1,1) and SubdividedStar(2,1).
struct Pattern {
  PatternKind kind;
  int n = 0;
  int m = 0;  // unused for Star

  static Pattern star(int n);
  static Pattern double_star(int n, int m);
  static Pattern subdivided_star(int n, int m);

  int vertex_count() const;
  int edge_count() const;
  // Pattern edges over canonical vertex ids (see Embedding ordering).
  std::vector<std::pair<int, int>> edges() const;
  std::string name() const;

  bool operator==(const Pattern& other) const = default;
};

enum class EmbeddingFault { None, NotInjective, WrongColor, OutOfRange };

// A monochromatic copy of a Pattern inside a colored graph. Vertices are
// stored in the canonical order (centers, leaves, subdivision vertices):
//   Star(n):            center, y_1..y_n
//   DoubleStar(n,m):    center_u, center_v, y_1..y_n (at u), w_1..w_m (at v)
//   SubdividedStar(n,m): center, y_1..y_n, z_1..z_m  with edges y_i z_i
struct Embedding {
  int color = 0;
  Pattern pattern{PatternKind::Star, 1, 0};
  std::vector<int> vertices;

  struct Validity {
    bool ok = false;
    EmbeddingFault fault = EmbeddingFault::None;
  };
};

// Universal checker used on every detector and extractor output: injectivity
// plus a naive re-check of every pattern edge against the stated color.
Embedding::Validity validate_embedding(const ColoredCompleteGraph& g, const Embedding& e);

}  // namespace ramsey
