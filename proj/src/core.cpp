#include "ramsey/core.hpp"

#include <algorithm>

namespace ramsey {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotEvenRegular: return "NotEvenRegular";
    case ErrorCode::ExtractionFailed: return "ExtractionFailed";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::ListSizeMismatch: return "ListSizeMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

std::size_t ColoredCompleteGraph::pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}

ColoredCompleteGraph::ColoredCompleteGraph(int order, int colors, std::vector<int> triangular_colors)
    : order_(order), colors_(colors), tau_(std::move(triangular_colors)) {
  if (order_ < 1) fail(ErrorCode::InvalidArity, "order must be >= 1");
  if (colors_ < 1) fail(ErrorCode::InvalidArity, "color count must be >= 1");
  const std::size_t want = static_cast<std::size_t>(order_) * (order_ - 1) / 2;
  if (tau_.size() != want)
    fail(ErrorCode::MissingEdge, "triangular color table has wrong size");
  for (std::size_t i = 0; i < tau_.size(); ++i)
    if (tau_[i] < 1 || tau_[i] > colors_)
      fail(ErrorCode::ColorOutOfRange, "color " + std::to_string(tau_[i]) + " not in [k]");
}

ColoredCompleteGraph ColoredCompleteGraph::build(int order, int colors,
                                                 const std::vector<std::array<int, 3>>& edge_colors) {
  if (order < 1) fail(ErrorCode::InvalidArity, "order must be >= 1");
  if (colors < 1) fail(ErrorCode::InvalidArity, "color count must be >= 1");
  const std::size_t pairs = static_cast<std::size_t>(order) * (order - 1) / 2;
  std::vector<int> tau(pairs, 0);
  for (const auto& [u, v, c] : edge_colors) {
    if (u < 0 || v < 0 || u >= order || v >= order || u == v)
      fail(ErrorCode::MissingEdge,
           "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not a vertex pair");
    if (c < 1 || c > colors)
      fail(ErrorCode::ColorOutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} has color " + std::to_string(c));
    std::size_t idx = pair_index(u, v);
    if (tau[idx] != 0)
      fail(ErrorCode::DuplicateEdge,
           "edge {" + std::to_string(u) + "," + std::to_string(v) + "} listed twice");
    tau[idx] = c;
  }
  for (int v = 1; v < order; ++v)
    for (int u = 0; u < v; ++u)
      if (tau[pair_index(u, v)] == 0)
        fail(ErrorCode::MissingEdge,
             "edge {" + std::to_string(u) + "," + std::to_string(v) + "} missing");
  return ColoredCompleteGraph(order, colors, std::move(tau));
}

int ColoredCompleteGraph::color_degree(int v, int c) const {
  int count = 0;
  for (int u = 0; u < order_; ++u)
    if (u != v && color(u, v) == c) ++count;
  return count;
}

std::vector<int> ColoredCompleteGraph::color_neighbors(int v, int c) const {
  std::vector<int> out;
  for (int u = 0; u < order_; ++u)
    if (u != v && color(u, v) == c) out.push_back(u);
  return out;
}

std::vector<int> ColoredCompleteGraph::common_color_neighbors(int u, int v, int c) const {
  std::vector<int> out;
  for (int w = 0; w < order_; ++w)
    if (w != u && w != v && color(u, w) == c && color(v, w) == c) out.push_back(w);
  return out;
}

std::vector<std::array<int, 3>> ColoredCompleteGraph::edge_list() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(tau_.size());
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v) out.push_back({u, v, color(u, v)});
  return out;
}

Pattern Pattern::star(int n) {
  if (n < 1) fail(ErrorCode::InvalidArity, "Star(n) needs n >= 1");
  return Pattern{PatternKind::Star, n, 0};
}

Pattern Pattern::double_star(int n, int m) {
  if (m < 1 || n < m) fail(ErrorCode::InvalidArity, "DoubleStar(n,m) needs n >= m >= 1");
  return Pattern{PatternKind::DoubleStar, n, m};
}

Pattern Pattern::subdivided_star(int n, int m) {
  if (n < 2 || m < 1 || n < m)
    fail(ErrorCode::InvalidArity, "SubdividedStar(n,m) needs n >= 2 and n >= m >= 1");
  return Pattern{PatternKind::SubdividedStar, n, m};
}

int Pattern::vertex_count() const {
  switch (kind) {
    case PatternKind::Star: return n + 1;
    case PatternKind::DoubleStar: return n + m + 2;
    case PatternKind::SubdividedStar: return n + m + 1;
  }
  return 0;
}

int Pattern::edge_count() const { return vertex_count() - 1; }

std::vector<std::pair<int, int>> Pattern::edges() const {
  std::vector<std::pair<int, int>> out;
  switch (kind) {
    case PatternKind::Star:
      for (int i = 0; i < n; ++i) out.emplace_back(0, 1 + i);
      break;
    case PatternKind::DoubleStar:
      out.emplace_back(0, 1);
      for (int i = 0; i < n; ++i) out.emplace_back(0, 2 + i);
      for (int j = 0; j < m; ++j) out.emplace_back(1, 2 + n + j);
      break;
    case PatternKind::SubdividedStar:
      for (int i = 0; i < n; ++i) out.emplace_back(0, 1 + i);
      for (int j = 0; j < m; ++j) out.emplace_back(1 + j, 1 + n + j);
      break;
  }
  return out;
}

std::string Pattern::name() const {
  switch (kind) {
    case PatternKind::Star: return "K(1," + std::to_string(n) + ")";
    case PatternKind::DoubleStar:
      return "S(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case PatternKind::SubdividedStar:
      return "S_" + std::to_string(n) + "^" + std::to_string(m);
  }
  return "?";
}

Embedding::Validity validate_embedding(const ColoredCompleteGraph& g, const Embedding& e) {
  if (e.color < 1 || e.color > g.colors()) return {false, EmbeddingFault::WrongColor};
  if (static_cast<int>(e.vertices.size()) != e.pattern.vertex_count())
    return {false, EmbeddingFault::OutOfRange};
  for (int v : e.vertices)
    if (v < 0 || v >= g.order()) return {false, EmbeddingFault::OutOfRange};
  std::vector<int> sorted = e.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return {false, EmbeddingFault::NotInjective};
  for (const auto& [a, b] : e.pattern.edges())
    if (g.color(e.vertices[a], e.vertices[b]) != e.color)
      return {false, EmbeddingFault::WrongColor};
  return {true, EmbeddingFault::None};
}

}  // namespace ramsey
