#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdom/graph.hpp"
#include "sdom/numeric.hpp"
#include "sdom/vertex_set.hpp"

namespace sdom {

/// Set system on vertices 0..n-1.  Duplicate edges are kept and counted.
class Hypergraph {
 public:
  /// Throws DomainError on an empty edge or an edge over a different universe.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_.at(i); }

  std::size_t rank() const noexcept { return rank_; }
  std::optional<std::size_t> uniform_size() const noexcept { return uniform_; }

  /// Number of edges containing v.
  std::size_t degree(Vertex v) const;
  std::size_t min_degree() const;
  /// Sum of edge sizes over n, which is r*m/n for an r-uniform hypergraph.
  Rational average_degree() const;

 private:
  std::size_t n_;
  std::vector<VertexSet> edges_;
  std::size_t rank_ = 0;
  std::optional<std::size_t> uniform_;
};

bool is_transversal(const Hypergraph& h, const VertexSet& t);

/// Edge v is N_G[v]; transversals are exactly the dominating sets of g.
Hypergraph neighborhood_hypergraph(const Graph& g);

/// Keeps the r lowest-index vertices of every edge.  Any transversal of the
/// result is a transversal of h.  Throws DomainError if an edge is smaller
/// than r or r == 0.
Hypergraph shrink_to_uniform(const Hypergraph& h, std::size_t r);

/// Edge lists concatenated.
Hypergraph hypergraph_union(const std::vector<Hypergraph>& parts);

/// 1 - (1/d)^(1/(r-1)), the sampling probability minimizing n*p + m*(1-p)^r.
Real optimal_p(std::size_t r, const Rational& d);

struct TransversalBound {
  Value main;        ///< (1 - ((r-1)/r) * (1/d)^(1/(r-1))) * n
  Real relaxation;   ///< n * (ln d + 1) / r
  bool exact;        ///< main is rational (d is a perfect (r-1)-th power)
  std::int64_t limit() const { return main.floor(); }
};

/// Upper bound on tau(H) for an r-uniform hypergraph with n vertices and m
/// edges.  Requires r >= 2 and d = r*m/n >= 1.
TransversalBound transversal_bound(std::size_t r, std::size_t n, std::size_t m);

/// n*p + m*(1-p)^r.
Real expected_transversal_size(std::size_t n, std::size_t m, std::size_t r, const Real& p);

/// Output of the sampling and derandomized transversal builders.
struct TransversalRun {
  VertexSet set;             ///< sampled part plus repairs
  VertexSet sampled;         ///< X
  std::vector<Vertex> repairs;
  std::size_t uncovered_after_sampling = 0;  ///< |Y|
};

/// Samples each vertex with probability p, then adds the lowest-index vertex
/// of every edge the sample missed.  Requires a uniform hypergraph.
TransversalRun randomized_transversal(const Hypergraph& h, double p, std::uint64_t seed);

/// Method of conditional expectations on n*p + m*(1-p)^r with p = p*,
/// deciding vertices in ascending order.  The size never exceeds
/// floor(n*p* + m*(1-p*)^r).
TransversalRun derandomized_transversal_run(const Hypergraph& h);
VertexSet derandomized_transversal(const Hypergraph& h);

}  // namespace sdom
