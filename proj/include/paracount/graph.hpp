#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "paracount/count.hpp"

namespace paracount {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex source;
  Vertex target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple digraph over vertices 0..n-1. Self-loops are allowed.
/// The position of an edge in edges() is its canonical edge id.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Validates and builds a graph. Throws endpoint-out-of-range or
  /// duplicate-edge.
  static DirectedGraph create(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Successors of v in ascending order.
  std::span<const Vertex> successors(Vertex v) const { return successors_.at(v); }
  /// Edge ids leaving v, aligned with successors(v).
  std::span<const EdgeId> out_edges(Vertex v) const { return out_edges_.at(v); }

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  bool is_acyclic() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> successors_;
  std::vector<std::vector<EdgeId>> out_edges_;
};

/// Colouring l : V -> {1..m}; m is the largest colour used.
class VertexColouring {
 public:
  /// Throws bad-colouring when the size differs from the vertex count or
  /// a colour is zero.
  static VertexColouring create(DirectedGraph graph, std::vector<std::uint32_t> colours);

  const DirectedGraph& graph() const noexcept { return graph_; }
  std::uint32_t colour(Vertex v) const { return colours_.at(v); }
  const std::vector<std::uint32_t>& colours() const noexcept { return colours_; }
  std::uint32_t colour_count() const noexcept { return m_; }

 private:
  DirectedGraph graph_;
  std::vector<std::uint32_t> colours_;
  std::uint32_t m_ = 0;
};

using Walk = std::vector<Vertex>;
using CountMatrix = std::vector<std::vector<BigInt>>;

/// Throws vertex-out-of-range unless v < g.vertex_count().
void require_vertex(const DirectedGraph& g, Vertex v);

std::size_t max_out_degree(const DirectedGraph& g);

/// Entry (u,v) is the number of u-to-v walks with exactly `length` edges.
CountMatrix walk_count_matrix(const DirectedGraph& g, std::uint64_t length);

CountMatrix multiply(const CountMatrix& lhs, const CountMatrix& rhs);

/// All s-to-t walks with exactly `length` edges in lexicographic order.
/// Throws limit-exceeded when more than `limit` walks exist.
std::vector<Walk> enumerate_walks(const DirectedGraph& g, Vertex s, Vertex t,
                                  std::uint64_t length, std::uint64_t limit);

}  // namespace paracount
