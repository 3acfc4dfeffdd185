#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdom/exact.hpp"
#include "sdom/factoring.hpp"
#include "sdom/hypergraph.hpp"

namespace sdom {

/// k spanning stars centred at 0..k-1; gamma_sd = k.  Needs n > k >= 2.
Factoring gen_star_factoring(std::size_t k, std::size_t n);

/// Two spanning trees on n = 3t vertices with gamma_sd = 2n/3 and
/// gamma(F_1) = gamma(F_2) = t.  Vertex triples (u_i, v_i, z_i) are
/// (3i, 3i+1, 3i+2); F_1 is the path on the u_i with v_i, z_i hung from
/// u_i, and F_2 is the path on the z_i with u_i, v_i hung from z_i.
Factoring gen_tree_pair(std::size_t t);

/// k perfect matchings, k odd, whose union is `copies` disjoint K_{k+1}:
/// the round-robin 1-factorization of each block.  gamma_sd = kn/(k+1).
Factoring gen_one_factorization(std::size_t k, std::size_t copies);

/// Even k: the round-robin factorization for k - 1 plus a repeat of its
/// last matching.
Factoring gen_one_factorization_even(std::size_t k, std::size_t copies);

/// Two edge-disjoint C_5 unions whose union is `copies` disjoint K_5:
/// cycles (0,1,2,3,4) and (0,2,4,1,3) in every block.  gamma_sd = 3n/5.
Factoring gen_k5_two_c5(std::size_t copies);

namespace model {
/// G(n, p) per factor, redrawn until the minimum degree is reached.
struct Gnp {
  double p = 0.5;
  std::size_t min_degree = 1;
};
/// Random d-regular factor from the pairing model.
struct Regular {
  std::size_t d = 3;
};
/// n/r disjoint copies of K_r on a random vertex partition.
struct CliqueUnion {
  std::size_t r = 3;
};
/// n/r disjoint r-cycles on a random vertex partition.
struct CycleUnion {
  std::size_t r = 5;
};
/// Random spanning cycle.
struct Hamiltonian {};
/// Random perfect matching.
struct Matching {};
}  // namespace model

using RandomModel = std::variant<model::Gnp, model::Regular, model::CliqueUnion,
                                 model::CycleUnion, model::Hamiltonian, model::Matching>;

/// Parses "gnp:p=0.3,mindeg=1", "regular:d=3", "clique:r=3", "cycles:r=5",
/// "hamiltonian" or "matching".  Throws DomainError.
RandomModel parse_model(const std::string& text);
std::string model_name(const RandomModel& m);

/// Rejection sampling gives up after this many draws per factor.
inline constexpr std::size_t kMaxRejections = 10000;

/// k independent factors from the model; equal arguments give equal
/// factorings.  Throws DomainError on inconsistent parameters and
/// InfeasibleError when rejection sampling gives up.
Factoring gen_random_factoring(std::size_t n, std::size_t k, const RandomModel& m,
                               std::uint64_t seed);

/// n = 2 half vertices: X = 0..half-1 independent, x_i matched to
/// y_i = half + i, G[Y] a random spanning tree plus each further Y-pair
/// with probability extra_p.  gamma = n/2.
Graph gen_family_G(std::size_t half, std::uint64_t seed, double extra_p = 0.0);

/// m distinct random r-subsets of 0..n-1.
Hypergraph gen_random_uniform_hypergraph(std::size_t n, std::size_t r, std::size_t m,
                                         std::uint64_t seed);

struct ProbeTrial {
  std::string model;
  std::size_t gamma_sd = 0;
};

struct ProbeReport {
  std::size_t n = 0;
  std::vector<ProbeTrial> trials;
  std::optional<Rational> max_ratio;
  std::optional<Factoring> best;
  /// Instances with gamma_sd > 3n/5.
  std::vector<Factoring> candidates;
};

/// Random two-factor instances with minimum degree >= 2 (Hamiltonian
/// cycles, 2-regular factors, sparse G(n,p)), solved exactly.  Records the
/// largest gamma_sd / n seen and every instance above 3/5.
ProbeReport probe_conjecture(std::size_t n, std::size_t trials, std::uint64_t seed,
                             const ExactConfig& config = {});

}  // namespace sdom
