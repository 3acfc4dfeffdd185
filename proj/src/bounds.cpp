#include "sdom/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "sdom/blocks.hpp"
#include "sdom/errors.hpp"
#include "sdom/exact.hpp"

namespace sdom {

namespace mp = boost::multiprecision;

namespace {

BoundValue exact_bound(const Rational& coefficient, std::size_t n,
                       Rounding rounding = Rounding::Floor) {
  BoundValue b;
  b.coefficient = Value(coefficient);
  b.absolute = Value(coefficient * Rational(n));
  b.rounding = rounding;
  return b;
}

BoundValue real_bound(const Real& coefficient, std::size_t n) {
  BoundValue b;
  b.coefficient = Value::irrational(coefficient);
  b.absolute = Value::irrational(coefficient * Real(n));
  return b;
}

BoundValue inapplicable(std::string why) {
  BoundValue b;
  b.applicable = false;
  b.violated = std::move(why);
  return b;
}

Rational q(std::size_t num, std::size_t den) { return Rational(Integer(num), Integer(den)); }

std::string divisibility(std::size_t n, std::size_t mod) {
  return "n = " + std::to_string(n) + " is not divisible by " + std::to_string(mod);
}

}  // namespace

Sandwich bound_sandwich(std::span<const std::size_t> gammas) {
  if (gammas.empty()) throw DomainError("sandwich bound needs at least one factor");
  Sandwich s{0, 0};
  for (std::size_t g : gammas) {
    if (g == 0) throw DomainError("domination numbers are at least 1");
    s.lower = std::max(s.lower, g);
    s.upper += g;
  }
  return s;
}

Rational bound_table_known(std::size_t k, std::size_t n) {
  if (k < 2) throw DomainError("known general bound needs k >= 2");
  if (k == 2) return q(2, 3) * Rational(n);
  return q(2 * k - 3, 2 * k - 2) * Rational(n);
}

Rational bound_regular(std::size_t k, std::size_t n) {
  if (k < 1) throw DomainError("k must be >= 1");
  return q(k, k + 1) * Rational(n);
}

Rational bound_cover_average_degree(const Rational& dbar, std::size_t delta, std::size_t n) {
  if (delta < 1) throw DomainError("delta must be >= 1");
  const Rational up(ceil_to_int(dbar));
  return up / (up + Rational(delta)) * Rational(n);
}

std::size_t bound_n_minus_delta(std::size_t n, std::size_t delta) {
  if (delta > n) throw DomainError("delta exceeds n");
  return n - delta;
}

BoundValue bound_dl(std::size_t delta, std::size_t k, std::size_t n) {
  if (delta < 2) return inapplicable("needs delta >= 2");
  const Real limit = mp::exp(Real(delta + 1)) / Real(delta + 1);
  if (Real(k) > limit)
    return inapplicable("needs k <= e^(delta+1)/(delta+1) = " + format_fixed(limit, 4));
  const Real c = (mp::log(Real(delta + 1)) + mp::log(Real(k)) + Real(1)) / Real(delta + 1);
  return real_bound(c, n);
}

Real coeff_f(std::size_t k, std::size_t delta) {
  if (k < 1 || delta < 1) throw DomainError("coeff_f needs k >= 1 and delta >= 1");
  const Real d(delta);
  return Real(1) - (d / (d + 1)) * mp::pow(Real(1) / (Real(k) * (d + 1)), Real(1) / d);
}

Real coeff_g(std::size_t k, std::size_t r) {
  if (k < 1 || r < 2) throw DomainError("coeff_g needs k >= 1 and r >= 2");
  const Real rr(r);
  return Real(1) - ((rr - 1) / rr) * mp::pow(Real(1) / Real(k), Real(1) / (rr - 1));
}

namespace {

// Exact whenever the root is rational, e.g. f(k, 1) and g(k, 2).
BoundValue root_bound(std::size_t shrink_num, std::size_t shrink_den, const Rational& inverse_degree,
                      unsigned root, const Real& approx, std::size_t n) {
  if (auto r = exact_root(inverse_degree, root))
    return exact_bound(Rational(1) - q(shrink_num, shrink_den) * *r, n);
  return real_bound(approx, n);
}

}  // namespace

BoundValue bound_min_degree_hypergraph(std::size_t k, std::size_t delta, std::size_t n) {
  if (delta < 1) return inapplicable("needs delta >= 1");
  if (k < 1) return inapplicable("needs k >= 1");
  return root_bound(delta, delta + 1, q(1, k * (delta + 1)), static_cast<unsigned>(delta),
                    coeff_f(k, delta), n);
}

BoundValue bound_clique_transversal(std::size_t k, std::size_t r, std::size_t n) {
  if (r < 2) return inapplicable("needs r >= 2");
  if (k < 1) return inapplicable("needs k >= 1");
  if (n % r != 0) return inapplicable(divisibility(n, r));
  return root_bound(r - 1, r, q(1, k), static_cast<unsigned>(r - 1), coeff_g(k, r), n);
}

BoundValue bound_pair_matching(std::size_t block_gamma, std::size_t block_order, std::size_t n) {
  if (block_order == 0 || n % block_order != 0) return inapplicable(divisibility(n, block_order));
  if (block_gamma == 0) return inapplicable("block domination number must be >= 1");
  return exact_bound(q(2 * block_gamma - 1, block_order), n);
}

BoundValue bound_kr_inductive(std::size_t k, std::size_t r, std::size_t n) {
  if (k < 2) return inapplicable("needs k >= 2");
  if (r < 1) return inapplicable("needs r >= 1");
  if (n % r != 0) return inapplicable(divisibility(n, r));
  return exact_bound(Rational(1) - pow(q(r - 1, r), static_cast<unsigned>(k - 1)), n);
}

BoundValue bound_kr_pairing(std::size_t k, std::size_t r, std::size_t n) {
  if (k < 2) return inapplicable("needs k >= 2");
  if (r < 1) return inapplicable("needs r >= 1");
  if (n % r != 0) return inapplicable(divisibility(n, r));
  if (k % 2 == 0) return exact_bound(q(k, 2 * r), n);
  return exact_bound(q(r * (k + 1) - 2, 2 * r * r), n);
}

BoundValue bound_one_factors(std::size_t k, std::size_t n) {
  if (k < 2) return inapplicable("needs k >= 2");
  if (n % 2 != 0) return inapplicable("needs n even");
  if (k % 2 == 0) return exact_bound(q(k - 1, k), n);
  return exact_bound(q(k, k + 1), n);
}

BoundValue bound_cycle_pair(std::size_t n) {
  if (n < 3) return inapplicable("needs n >= 3");
  if (n % 2 == 0) return exact_bound(q(1, 2), n);
  return exact_bound(q(n + 1, 2 * n), n);
}

BoundValue bound_cycles(std::size_t k, std::size_t n) {
  if (k < 2) return inapplicable("needs k >= 2");
  if (n % 6 != 0) return inapplicable(divisibility(n, 6));
  return exact_bound(Rational(1) - q(1, 2) * pow(q(2, 3), static_cast<unsigned>(k - 2)), n);
}

BoundValue bound_c4(std::size_t k, std::size_t n) {
  if (n % 4 != 0) return inapplicable(divisibility(n, 4));
  if (k == 2) return exact_bound(q(1, 2), n);
  if (k == 3) return exact_bound(q(3, 4), n);
  return inapplicable("needs k = 2 or k = 3");
}

BoundValue bound_c5(std::size_t k, std::size_t n) {
  if (k < 2) return inapplicable("needs k >= 2");
  if (n % 5 != 0) return inapplicable(divisibility(n, 5));
  const Rational c =
      q(3, 5) + q(2, 5) * (Rational(1) - pow(q(3, 5), static_cast<unsigned>(k - 2)));
  return exact_bound(c, n, Rounding::Ceil);
}

Rational bound_caro_wei(const Graph& g) {
  Rational sum(0);
  for (Vertex v = 0; v < g.n(); ++v) sum += q(1, 1 + g.degree(v));
  return sum;
}

Rational bound_caro_hansberg(const Graph& g, std::size_t t) {
  const Rational up(ceil_to_int(g.average_degree()));
  return Rational(t + 1) / (up + Rational(t + 1)) * Rational(g.n());
}

BoundValue bound_caro_yuster_leading(std::size_t delta, std::size_t n) {
  if (delta <= 1) throw DomainError("leading term needs delta > 1");
  BoundValue b = real_bound(mp::log(Real(delta)) / Real(delta), n);
  b.asymptotic_only = true;
  return b;
}

ClaimedBound claim(const char* source, const BoundValue& b, bool proven) {
  if (!b.applicable) throw DomainError(std::string("bound ") + source + " not applicable: " + b.violated);
  return ClaimedBound{source, b.absolute, b.rounding, proven};
}

// ---------------------------------------------------------------------------

std::string InstanceDescriptor::tag() const {
  std::vector<std::string> parts;
  if (regular) parts.emplace_back("regular");
  if (clique_order) parts.push_back("clique" + std::to_string(*clique_order));
  if (one_factors) parts.emplace_back("one_factors");
  if (hamiltonian_cycles) parts.emplace_back("cycles");
  if (c4_union) parts.emplace_back("c4");
  if (c5_union) parts.emplace_back("c5");
  if (parts.empty()) return "general";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
  return out;
}

InstanceDescriptor describe(const Factoring& f, bool compute_gammas) {
  InstanceDescriptor d;
  d.n = f.n();
  d.k = f.k();
  d.delta = f.delta();
  d.regular = std::all_of(f.factors().begin(), f.factors().end(), [&](const Graph& g) {
    return g.is_regular() && g.min_degree() == f.delta();
  });
  if (auto r = common_clique_order(f)) d.clique_order = r;
  d.one_factors = d.clique_order == std::size_t{2};
  d.hamiltonian_cycles = std::all_of(f.factors().begin(), f.factors().end(),
                                     [](const Graph& g) { return is_spanning_cycle(g); });
  d.c4_union = f.n() % 4 == 0 && std::all_of(f.factors().begin(), f.factors().end(), [](const Graph& g) {
                 return detect_blocks(g, build_cycle(4)).has_value();
               });
  d.c5_union = f.n() % 5 == 0 && std::all_of(f.factors().begin(), f.factors().end(), [](const Graph& g) {
                 return detect_blocks(g, build_cycle(5)).has_value();
               });
  d.combined_average_degree = f.combined().average_degree();
  if (compute_gammas) {
    std::vector<std::size_t> gammas;
    for (const auto& g : f.factors()) gammas.push_back(domination_number(g).value);
    d.factor_gammas = std::move(gammas);
  }
  return d;
}

const BoundEntry* BoundReport::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

BoundReport build_bound_report(const InstanceDescriptor& d) {
  BoundReport report{d, {}};
  auto add = [&](const char* id, BoundValue v) { report.entries.push_back({id, std::move(v)}); };
  const std::size_t n = d.n;
  const std::size_t k = d.k;
  const bool has_delta = d.delta.has_value() && *d.delta >= 1;
  const std::string no_delta = "needs minimum degree delta >= 1";

  if (d.factor_gammas) {
    const Sandwich s = bound_sandwich(*d.factor_gammas);
    add(bound_id::kSandwich, exact_bound(q(s.upper, std::max<std::size_t>(n, 1)), n));
  } else {
    add(bound_id::kSandwich, inapplicable("needs the per-factor domination numbers"));
  }

  if (k < 2)
    add(bound_id::kKnownK, inapplicable("needs k >= 2"));
  else if (!has_delta)
    add(bound_id::kKnownK, inapplicable(no_delta));
  else
    add(bound_id::kKnownK, exact_bound(bound_table_known(k, 1), n));

  if (d.delta && *d.delta <= n)
    add(bound_id::kNMinusDelta, exact_bound(q(bound_n_minus_delta(n, *d.delta), std::max<std::size_t>(n, 1)), n));
  else
    add(bound_id::kNMinusDelta, inapplicable("needs the minimum degree delta"));

  if (!has_delta)
    add(bound_id::kCoverAverageDegree, inapplicable(no_delta));
  else if (!d.combined_average_degree)
    add(bound_id::kCoverAverageDegree, inapplicable("needs the combined graph's average degree"));
  else
    add(bound_id::kCoverAverageDegree,
        exact_bound(bound_cover_average_degree(*d.combined_average_degree, *d.delta, 1), n));

  if (!has_delta)
    add(bound_id::kRegular, inapplicable(no_delta));
  else if (!d.regular)
    add(bound_id::kRegular, inapplicable("needs every factor delta-regular"));
  else
    add(bound_id::kRegular, exact_bound(bound_regular(k, 1), n));

  add(bound_id::kDankelmannLaskar, d.delta ? bound_dl(*d.delta, k, n) : inapplicable(no_delta));

  if (!d.delta || *d.delta <= 1) {
    add(bound_id::kCaroYuster, inapplicable("needs delta > 1"));
  } else {
    BoundValue cy = bound_caro_yuster_leading(*d.delta, n);
    if (!(mp::log(mp::log(Real(*d.delta))) > Real(k))) {
      cy.applicable = false;
      cy.violated = "needs ln ln delta > k";
    }
    add(bound_id::kCaroYuster, cy);
  }

  if (k < 2)
    add(bound_id::kMinDegreeHypergraph, inapplicable("needs k >= 2"));
  else
    add(bound_id::kMinDegreeHypergraph,
        has_delta ? bound_min_degree_hypergraph(k, *d.delta, n) : inapplicable(no_delta));

  const std::string no_clique = "needs every factor a disjoint union of copies of K_r";
  if (!d.clique_order) {
    add(bound_id::kCliqueTransversal, inapplicable(no_clique));
    add(bound_id::kCliqueInductive, inapplicable(no_clique));
    add(bound_id::kCliquePairing, inapplicable(no_clique));
  } else {
    add(bound_id::kCliqueTransversal,
        k < 2 ? inapplicable("needs k >= 2") : bound_clique_transversal(k, *d.clique_order, n));
    add(bound_id::kCliqueInductive, bound_kr_inductive(k, *d.clique_order, n));
    add(bound_id::kCliquePairing, bound_kr_pairing(k, *d.clique_order, n));
  }

  add(bound_id::kOneFactors,
      d.one_factors ? bound_one_factors(k, n) : inapplicable("needs every factor a perfect matching"));

  const std::string no_cycles = "needs every factor a Hamiltonian cycle";
  if (!d.hamiltonian_cycles)
    add(bound_id::kCyclePair, inapplicable(no_cycles));
  else
    add(bound_id::kCyclePair, k == 2 ? bound_cycle_pair(n) : inapplicable("needs k = 2"));
  add(bound_id::kCyclesInductive, d.hamiltonian_cycles ? bound_cycles(k, n) : inapplicable(no_cycles));

  const std::string no_c4 = "needs every factor a disjoint union of 4-cycles";
  if (!d.c4_union) {
    add(bound_id::kC4Pair, inapplicable(no_c4));
    add(bound_id::kC4Three, inapplicable(no_c4));
  } else {
    add(bound_id::kC4Pair, k == 2 ? bound_c4(2, n) : inapplicable("needs k = 2"));
    add(bound_id::kC4Three, k == 3 ? bound_c4(3, n) : inapplicable("needs k = 3"));
  }
  add(bound_id::kC5Inductive,
      d.c5_union ? bound_c5(k, n) : inapplicable("needs every factor a disjoint union of 5-cycles"));
  return report;
}

std::vector<TableCell> table1() {
  std::vector<TableCell> out;
  for (std::size_t k = 2; k <= 7; ++k) out.push_back({0, k, Value(bound_table_known(k, 1))});
  return out;
}

std::vector<TableCell> table2() {
  std::vector<TableCell> out;
  for (std::size_t k = 2; k <= 7; ++k) out.push_back({0, k, Value(bound_regular(k, 1))});
  return out;
}

std::vector<TableCell> table3() {
  std::vector<TableCell> out;
  for (std::size_t delta = 1; delta <= 5; ++delta)
    for (std::size_t k = 2; k <= 5; ++k)
      out.push_back({delta, k, bound_min_degree_hypergraph(k, delta, 1).coefficient});
  return out;
}

std::vector<TableCell> table4() {
  std::vector<TableCell> out;
  for (std::size_t r = 2; r <= 5; ++r)
    for (std::size_t k = 2; k <= 5; ++k)
      out.push_back({r, k, bound_clique_transversal(k, r, r).coefficient});
  return out;
}

std::string table_cell_text(int table, const TableCell& cell) {
  if (table == 1 || table == 2) return cell.value.str();
  return format_fixed(cell.value.real(), 4);
}

std::string tables_tsv() {
  std::ostringstream os;
  os << "table\tparameter\tparameter_value\tk\tvalue\n";
  auto emit = [&](int table, const char* parameter, const std::vector<TableCell>& cells) {
    for (const auto& c : cells)
      os << table << '\t' << parameter << '\t' << (c.row == 0 ? std::string("-") : std::to_string(c.row))
         << '\t' << c.k << '\t' << table_cell_text(table, c) << '\n';
  };
  emit(1, "-", table1());
  emit(2, "-", table2());
  emit(3, "delta", table3());
  emit(4, "r", table4());
  return os.str();
}

}  // namespace sdom
