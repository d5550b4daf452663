#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gael/exact_matrix.hpp"

namespace gael {

struct Edge {
  std::string name;
  std::string source;
  std::string range;
};

struct VertexClasses {
  std::vector<std::string> sinks;    // emit no edges
  std::vector<std::string> sources;  // receive no edges
  std::vector<std::string> regular;  // emit at least one edge
};

/// Finite directed multigraph with named vertices/edges and a distinguished
/// subset X of regular vertices. Vertex and edge order is document order and
/// fixes the indexing of every derived matrix and report.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges,
        std::optional<std::vector<std::string>> x);

  /// Canonical JSON document: {"vertices":[...], "edges":[[name,src,rng],...],
  /// "X":[...]}. Unknown fields are rejected; "X" may be omitted.
  static Graph parse_json(std::string_view text);

  /// Plain-text edge list, one "src -> dst [name]" per line; vertices are
  /// inferred in first-appearance order and names default to e1, e2, ...
  static Graph parse_edge_list(std::string_view text);

  /// Deterministic function of the seed; endpoints uniform over vertices.
  static Graph random(int n_vertices, int n_edges, std::uint64_t seed);

  std::string to_json() const;

  /// Content fingerprint (stable across runs).
  std::string id() const;

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// -1 when the name is not declared.
  int vertex_index(std::string_view name) const;

  int edge_source(int e) const { return edge_source_[e]; }
  int edge_range(int e) const { return edge_range_[e]; }

  /// Edge ids emitted by each vertex, in document order.
  const std::vector<std::vector<int>>& out_edges() const noexcept { return out_edges_; }

  /// True when the document carried an explicit "X" (possibly empty). An
  /// omitted X resolves to Reg(E), matching the Leavitt reading.
  bool x_explicit() const noexcept { return x_explicit_; }
  const std::vector<int>& x_indices() const noexcept { return x_indices_; }
  std::vector<std::string> x_names() const;

  VertexClasses classify() const;
  std::vector<int> regular_indices() const;

  ExactMatrix adjacency() const;

 private:
  void validate_and_index(std::optional<std::vector<std::string>> x);

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> edge_source_;
  std::vector<int> edge_range_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<int> x_indices_;
  bool x_explicit_ = false;
};

}  // namespace gael
