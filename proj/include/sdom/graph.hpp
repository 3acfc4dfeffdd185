#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sdom/numeric.hpp"
#include "sdom/vertex_set.hpp"

namespace sdom {

using Edge = std::pair<Vertex, Vertex>;

/// How adjacency is stored.  Automatic keeps packed bitset rows next to the
/// sorted lists while n <= Graph::kBitsetLimit; Lists never builds rows.
/// Results never depend on the choice.
enum class AdjacencyMode { Automatic, Lists };

/// Simple undirected graph on vertices 0..n-1.  Immutable once built.
class Graph {
 public:
  static constexpr std::size_t kBitsetLimit = 4096;

  Graph() = default;
  explicit Graph(std::size_t n, AdjacencyMode mode = AdjacencyMode::Automatic);
  /// Edges are normalized to u < v and deduplicated.  Self-loops and
  /// endpoints >= n throw DomainError.
  Graph(std::size_t n, std::span<const Edge> edges,
        AdjacencyMode mode = AdjacencyMode::Automatic);
  Graph(std::size_t n, std::initializer_list<Edge> edges,
        AdjacencyMode mode = AdjacencyMode::Automatic)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), mode) {}

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  /// 2m/n; zero for the empty graph.
  Rational average_degree() const;
  bool is_regular() const noexcept { return n() == 0 || min_degree() == max_degree(); }

  bool has_edge(Vertex u, Vertex v) const;
  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  VertexSet open_neighborhood(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;
  /// N[s]: every vertex in s or adjacent to a vertex of s.
  VertexSet closed_neighborhood(const VertexSet& s) const;

  bool uses_bitset_rows() const noexcept { return !rows_.empty(); }

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected() const;

  /// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the
  /// order given.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void build_rows(AdjacencyMode mode);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> rows_;
  std::size_t m_ = 0;
};

Graph build_empty(std::size_t n);
/// Cycle 0-1-...-(n-1)-0; n >= 3.
Graph build_cycle(std::size_t n);
/// Path 0-1-...-(n-1); n >= 1.
Graph build_path(std::size_t n);
/// Star K_{1,n-1} with the given center; n >= 1.
Graph build_star(std::size_t n, Vertex center);
Graph build_complete(std::size_t n);
/// Copy j of `block` occupies vertices [j*|block|, (j+1)*|block|).
Graph build_disjoint_copies(const Graph& block, std::size_t copies);
/// Edge union of two graphs on the same vertex count.
Graph graph_union(const Graph& a, const Graph& b);

}  // namespace sdom
