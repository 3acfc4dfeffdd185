#pragma once

#include "sdom/exact.hpp"
#include "sdom/factoring.hpp"
#include "sdom/result.hpp"

namespace sdom {

// Every construction verifies that its output dominates each factor and,
// where the bound is proven for the path taken, that the size respects it.
// A failed check throws std::logic_error.

/// Repeatedly adds the vertex dominating the most still-undominated
/// (vertex, factor) pairs, lowest index on ties.  Vertices isolated in a
/// factor are added first.
SDResult greedy_sd(const Factoring& f);

/// A (delta-1)-vertex cover of the combined graph.  Exact within the cap,
/// where ceil(dbar) n / (ceil(dbar) + delta) is guaranteed; greedy peeling
/// above it, with the bound only checked.  Throws DomainError when delta = 0.
SDResult sd_via_cover(const Factoring& f, const ExactConfig& config = {});

/// Derandomized transversal of the union of the neighbourhood hypergraphs,
/// each shrunk to (delta+1)-uniform.  Size <= floor(f(k, delta) n).
SDResult sd_via_hypergraph(const Factoring& f);

/// Every factor n/r copies of K_r, r >= 2.  Derandomized transversal of the
/// clique hypergraph; size <= floor(g(k, r) n).
SDResult sd_kr_transversal(const Factoring& f);

/// k = 2, both factors copies of `block`, which must have a minimum
/// dominating set through every vertex.  Matches copies that share a
/// vertex; size <= (2 gamma(block) - 1) n / |block|.
SDResult sd_pair_matching(const Factoring& f, const Graph& block, const ExactConfig& config = {});

/// K_r copies, k >= 2: a matched pair for F_1, F_2, then one vertex from
/// every undominated clique of each later factor.  Size <= (1 - ((r-1)/r)^(k-1)) n.
SDResult sd_kr_inductive(const Factoring& f);

/// K_r copies, k >= 2: union of matched pairs (F_1 F_2), (F_3 F_4), ...; for
/// odd k the first three factors use sd_kr_inductive.
SDResult sd_kr_pairing(const Factoring& f);

/// Every factor a perfect matching, k >= 2.  Complement of the largest
/// color class of a proper coloring of the combined graph, with k colors
/// when k is even.  Size <= (k-1)n/k for even k and kn/(k+1) for odd k.
SDResult sd_one_factors(const Factoring& f, const ExactConfig& config = {});

/// k = 2, both factors spanning cycles (or spanning paths when n is even).
/// Size <= n/2 for even n and (n+1)/2 for odd n.
SDResult sd_cycle_pair(const Factoring& f);

/// k >= 2 spanning cycles, n divisible by 6.  Size <= (1 - (2/3)^(k-2) / 2) n.
SDResult sd_cycles_inductive(const Factoring& f);

/// k = 3, every factor n/4 copies of C_4.  Size <= 3n/4.
SDResult sd_c4_three(const Factoring& f);

/// k >= 2, every factor n/5 copies of C_5.
/// Size <= ceil((3/5 + (2/5)(1 - (3/5)^(k-2))) n).
SDResult sd_c5_inductive(const Factoring& f, const ExactConfig& config = {});

}  // namespace sdom
