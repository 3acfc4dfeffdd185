#pragma once

#include <cstddef>
#include <optional>

#include "sdom/factoring.hpp"
#include "sdom/hypergraph.hpp"
#include "sdom/result.hpp"

namespace sdom {

/// Vertex caps for the exact solvers.  Above a cap the solvers throw
/// CapExceededError instead of starting an exponential search.
struct ExactConfig {
  /// Domination, simultaneous domination, hypergraph transversals and
  /// ordinary vertex covers (t = 0).
  std::size_t sd_cap = 32;
  /// t-vertex covers and k-independent sets with t, k >= 1.
  std::size_t cover_cap = 24;
};

struct ExactSet {
  std::size_t value = 0;
  VertexSet witness;
};

/// gamma(g) with a minimum dominating set.  Isolated vertices are in every
/// dominating set.
ExactSet domination_number(const Graph& g, const ExactConfig& config = {});

/// gamma_sd of the factoring with a witness.  A vertex isolated in some
/// factor is forced into the set.
SDResult sd_number_exact(const Factoring& f, const ExactConfig& config = {});

/// Smallest S with Delta(G - S) <= t.
ExactSet t_vertex_cover_number(const Graph& g, std::size_t t, const ExactConfig& config = {});
/// Largest S with Delta(G[S]) <= k; the complement of a minimum k-vertex cover.
ExactSet k_independence_number(const Graph& g, std::size_t k, const ExactConfig& config = {});

/// Repeatedly removes a vertex of maximum remaining degree (lowest index on
/// ties) until Delta(G - S) <= t.
VertexSet greedy_t_vertex_cover(const Graph& g, std::size_t t);

/// tau(H) with a minimum transversal.  Throws InfeasibleError on an empty edge.
ExactSet transversal_number_exact(const Hypergraph& h, const ExactConfig& config = {});

/// A dominating set of size gamma(g) that contains v, if one exists.
std::optional<VertexSet> min_dominating_set_containing(const Graph& g, Vertex v,
                                                       const ExactConfig& config = {});

/// Lowest vertex that lies in no minimum dominating set, if any.
std::optional<Vertex> one_extendable_violation(const Graph& g, const ExactConfig& config = {});
bool is_one_extendable_dominated(const Graph& g, const ExactConfig& config = {});

}  // namespace sdom
