#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdom/factoring.hpp"
#include "sdom/numeric.hpp"
#include "sdom/result.hpp"

namespace sdom {

/// Identifiers of the bounds this library evaluates.  They label
/// ClaimedBound::source and BoundReport entries.
namespace bound_id {
inline constexpr const char* kSandwich = "sandwich";
inline constexpr const char* kKnownK = "known_k";
inline constexpr const char* kNMinusDelta = "n_minus_delta";
inline constexpr const char* kCoverAverageDegree = "cover_average_degree";
inline constexpr const char* kCoverExact = "cover_exact";
inline constexpr const char* kRegular = "regular";
inline constexpr const char* kDankelmannLaskar = "dankelmann_laskar";
inline constexpr const char* kCaroYuster = "caro_yuster_leading";
inline constexpr const char* kMinDegreeHypergraph = "min_degree_hypergraph";
inline constexpr const char* kCliqueTransversal = "clique_transversal";
inline constexpr const char* kPairMatching = "pair_matching";
inline constexpr const char* kCliqueInductive = "clique_inductive";
inline constexpr const char* kCliquePairing = "clique_pairing";
inline constexpr const char* kOneFactors = "one_factors";
inline constexpr const char* kCyclePair = "cycle_pair";
inline constexpr const char* kCyclesInductive = "cycles_inductive";
inline constexpr const char* kC4Pair = "c4_pair";
inline constexpr const char* kC4Three = "c4_three";
inline constexpr const char* kC5Inductive = "c5_inductive";
}  // namespace bound_id

/// Evaluation of one bound: applicability, coefficient c and absolute c*n.
struct BoundValue {
  bool applicable = true;
  std::string violated;  ///< failed precondition when not applicable
  Value coefficient;
  Value absolute;
  Rounding rounding = Rounding::Floor;
  bool asymptotic_only = false;

  std::int64_t limit() const {
    return rounding == Rounding::Floor ? absolute.floor() : absolute.ceil();
  }
};

struct Sandwich {
  std::size_t lower;  ///< max gamma(F_i)
  std::size_t upper;  ///< sum gamma(F_i)
};

/// Throws DomainError on an empty list or a zero entry.
Sandwich bound_sandwich(std::span<const std::size_t> gammas);

/// Coefficient 2/3 for k = 2 and (2k-3)/(2k-2) for k >= 3, times n.
Rational bound_table_known(std::size_t k, std::size_t n);
/// k n / (k + 1) for k regular factors of equal degree.
Rational bound_regular(std::size_t k, std::size_t n);
/// ceil(dbar) n / (ceil(dbar) + delta), dbar the combined graph's average degree.
Rational bound_cover_average_degree(const Rational& dbar, std::size_t delta, std::size_t n);
std::size_t bound_n_minus_delta(std::size_t n, std::size_t delta);

/// (ln(delta+1) + ln k + 1) / (delta + 1) * n; applicable for delta >= 2 and
/// k <= e^(delta+1) / (delta+1).
BoundValue bound_dl(std::size_t delta, std::size_t k, std::size_t n);

/// 1 - (delta/(delta+1)) * (1/(k(delta+1)))^(1/delta).
Real coeff_f(std::size_t k, std::size_t delta);
/// 1 - ((r-1)/r) * (1/k)^(1/(r-1)).
Real coeff_g(std::size_t k, std::size_t r);
BoundValue bound_min_degree_hypergraph(std::size_t k, std::size_t delta, std::size_t n);
BoundValue bound_clique_transversal(std::size_t k, std::size_t r, std::size_t n);

BoundValue bound_pair_matching(std::size_t block_gamma, std::size_t block_order, std::size_t n);
BoundValue bound_kr_inductive(std::size_t k, std::size_t r, std::size_t n);
BoundValue bound_kr_pairing(std::size_t k, std::size_t r, std::size_t n);
BoundValue bound_one_factors(std::size_t k, std::size_t n);
BoundValue bound_cycle_pair(std::size_t n);
BoundValue bound_cycles(std::size_t k, std::size_t n);
BoundValue bound_c4(std::size_t k, std::size_t n);
BoundValue bound_c5(std::size_t k, std::size_t n);

/// Sum over v of 1/(1 + d(v)); a lower bound on alpha(g).
Rational bound_caro_wei(const Graph& g);
/// (t+1) n / (ceil(dbar) + t + 1); a lower bound on alpha_t(g).
Rational bound_caro_hansberg(const Graph& g, std::size_t t);
/// n ln(delta) / delta; only the leading term of an asymptotic bound, so
/// asymptotic_only is always set.  Throws DomainError for delta <= 1.
BoundValue bound_caro_yuster_leading(std::size_t delta, std::size_t n);

/// ClaimedBound built from an applicable BoundValue.
ClaimedBound claim(const char* source, const BoundValue& b, bool proven = true);

// ---------------------------------------------------------------------------
// Reports and tables

/// Structural facts a bound may depend on.
struct InstanceDescriptor {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> delta;   ///< min degree over all factors
  bool regular = false;               ///< every factor delta-regular
  std::optional<std::size_t> clique_order;  ///< every factor (n/r) K_r
  bool one_factors = false;
  bool hamiltonian_cycles = false;
  bool c4_union = false;
  bool c5_union = false;
  std::optional<Rational> combined_average_degree;
  std::optional<std::vector<std::size_t>> factor_gammas;
  std::string tag() const;
};

/// Reads every structural fact off an instance.  With compute_gammas the
/// per-factor domination numbers are solved exactly (within the cap).
InstanceDescriptor describe(const Factoring& f, bool compute_gammas = false);

struct BoundEntry {
  std::string id;
  BoundValue value;
};

struct BoundReport {
  InstanceDescriptor descriptor;
  std::vector<BoundEntry> entries;
  const BoundEntry* find(const std::string& id) const;
};

/// One entry for every bound id (sandwich only when gammas are known).
BoundReport build_bound_report(const InstanceDescriptor& d);

struct TableCell {
  std::size_t row;  ///< delta or r; 0 for the single-row tables
  std::size_t k;
  Value value;
};

/// Known general bounds for k = 2..7.
std::vector<TableCell> table1();
/// k/(k+1) for k = 2..7.
std::vector<TableCell> table2();
/// f(k, delta) for delta = 1..5, k = 2..5.
std::vector<TableCell> table3();
/// g(k, r) for r = 2..5, k = 2..5.
std::vector<TableCell> table4();

/// Cell text as printed: fraction for tables 1-2, half-up 4 decimals for 3-4.
std::string table_cell_text(int table, const TableCell& cell);
/// All four tables as TSV with a header row.
std::string tables_tsv();

}  // namespace sdom
