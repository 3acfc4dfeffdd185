#include <doctest.h>

#include <cmath>

#include "sdom/bounds.hpp"
#include "sdom/errors.hpp"
#include "sdom/extremal.hpp"

using namespace sdom;

namespace {

double f_double(std::size_t k, std::size_t delta) {
  const double d = static_cast<double>(delta);
  return 1.0 - d / (d + 1) * std::pow(1.0 / (static_cast<double>(k) * (d + 1)), 1.0 / d);
}

double g_double(std::size_t k, std::size_t r) {
  const double rr = static_cast<double>(r);
  return 1.0 - (rr - 1) / rr * std::pow(1.0 / static_cast<double>(k), 1.0 / (rr - 1));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("sandwich") {
  const std::vector<std::size_t> two{2, 2};
  CHECK(bound_sandwich(two).lower == 2);
  CHECK(bound_sandwich(two).upper == 4);
  const std::vector<std::size_t> stars(4, 1);
  CHECK(bound_sandwich(stars).upper == 4);
  CHECK_THROWS_AS(bound_sandwich(std::vector<std::size_t>{}), DomainError);
  CHECK_THROWS_AS(bound_sandwich(std::vector<std::size_t>{1, 0}), DomainError);
}

TEST_CASE("closed-form rational bounds") {
  CHECK(bound_table_known(2, 9) == 6);
  CHECK(bound_table_known(4, 6) == 5);
  CHECK(bound_table_known(7, 12) == 11);
  CHECK(bound_regular(3, 8) == 6);
  CHECK(bound_cover_average_degree(make_rational(16, 5), 2, 6) == 4);
  CHECK(bound_n_minus_delta(10, 3) == 7);
}

TEST_CASE("dankelmann laskar bound") {
  const BoundValue b = bound_dl(2, 2, 3);
  REQUIRE(b.applicable);
  CHECK(std::abs(b.absolute.to_double() - (std::log(3.0) + std::log(2.0) + 1)) < 1e-12);
  const BoundValue too_many = bound_dl(2, 7, 3);
  CHECK_FALSE(too_many.applicable);
  CHECK_FALSE(too_many.violated.empty());
  CHECK(bound_dl(2, 6, 3).applicable);
  CHECK(bound_dl(9, 2, 10).coefficient.to_double() < 1.0);
  CHECK_FALSE(bound_dl(1, 2, 10).applicable);
}

TEST_CASE("min degree hypergraph and clique coefficients") {
  CHECK(std::abs(static_cast<double>(coeff_f(3, 2)) - 0.77777) < 1e-4);
  CHECK(std::abs(static_cast<double>(coeff_f(2, 1)) - 0.875) < 1e-12);
  CHECK(std::abs(static_cast<double>(coeff_g(2, 2)) - 0.75) < 1e-12);
  CHECK(std::abs(static_cast<double>(coeff_g(5, 5)) - 0.4650) < 1e-4);
  CHECK(std::abs(static_cast<double>(coeff_g(2, 3)) - 0.5286) < 1e-4);
  for (std::size_t k = 2; k <= 8; ++k)
    for (std::size_t x = 1; x <= 8; ++x) {
      CHECK(std::abs(static_cast<double>(coeff_f(k, x)) - f_double(k, x)) < 1e-12);
      if (x >= 2) CHECK(std::abs(static_cast<double>(coeff_g(k, x)) - g_double(k, x)) < 1e-12);
    }
  const BoundValue exact = bound_clique_transversal(4, 3, 12);
  CHECK(exact.absolute.is_exact());
  CHECK(exact.absolute.rational() == 8);
  CHECK(bound_min_degree_hypergraph(2, 1, 8).limit() == 7);
}

TEST_CASE("coefficients are monotone over the table grid") {
  for (std::size_t x = 1; x <= 5; ++x)
    for (std::size_t k = 2; k < 5; ++k) {
      CHECK(coeff_f(k, x) < coeff_f(k + 1, x));
      if (x >= 2) CHECK(coeff_g(k, x) < coeff_g(k + 1, x));
    }
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t x = 1; x < 5; ++x) {
      CHECK(coeff_f(k, x + 1) < coeff_f(k, x));
      if (x >= 2) CHECK(coeff_g(k, x + 1) < coeff_g(k, x));
    }
}

TEST_CASE("structured bounds") {
  CHECK(bound_kr_inductive(3, 3, 9).absolute.rational() == 5);
  CHECK(bound_kr_inductive(2, 4, 12).absolute.rational() == 3);
  CHECK(bound_kr_pairing(4, 3, 6).absolute.rational() == 4);
  CHECK(bound_kr_pairing(5, 3, 9).absolute.rational() == 8);
  CHECK(bound_kr_pairing(3, 3, 9).absolute.rational() == 5);
  CHECK(bound_one_factors(4, 12).absolute.rational() == 9);
  CHECK(bound_one_factors(3, 8).absolute.rational() == 6);
  CHECK(bound_cycle_pair(6).limit() == 3);
  CHECK(bound_cycle_pair(7).limit() == 4);
  CHECK(bound_cycles(2, 6).absolute.rational() == 3);
  CHECK(bound_cycles(3, 6).absolute.rational() == 4);
  CHECK(bound_c4(2, 8).limit() == 4);
  CHECK(bound_c4(3, 8).limit() == 6);
  const BoundValue c5 = bound_c5(3, 25);
  CHECK(c5.coefficient.rational() == make_rational(19, 25));
  CHECK(c5.rounding == Rounding::Ceil);
  CHECK(c5.limit() == 19);
  CHECK(bound_c5(2, 10).limit() == 6);
  CHECK(bound_pair_matching(2, 5, 10).absolute.rational() == 6);
  CHECK(bound_pair_matching(1, 3, 12).absolute.rational() == 4);
  CHECK_FALSE(bound_cycles(3, 8).applicable);
  CHECK_FALSE(bound_c4(4, 8).applicable);
  CHECK_FALSE(bound_kr_inductive(3, 3, 10).applicable);
}

TEST_CASE("inductive bound beats the transversal coefficient for three factors") {
  for (std::size_t r = 3; r <= 10; ++r)
    CHECK(bound_kr_inductive(3, r, r).coefficient.real() < coeff_g(3, r));
  for (std::size_t r = 3; r <= 50; ++r) {
    const Rational q = pow(make_rational(static_cast<std::int64_t>(r - 1), static_cast<std::int64_t>(r)),
                           static_cast<unsigned>(r - 1));
    CHECK(make_rational(1, 3) < q);
  }
}

TEST_CASE("independence lower bounds") {
  CHECK(bound_caro_wei(build_complete(6)) == 1);
  CHECK(bound_caro_wei(build_cycle(9)) == 3);
  CHECK(bound_caro_hansberg(build_cycle(6), 0) == 2);
  CHECK(bound_caro_hansberg(build_cycle(6), 1) == 3);
}

TEST_CASE("asymptotic leading term") {
  const BoundValue b = bound_caro_yuster_leading(10, 100);
  CHECK(b.asymptotic_only);
  CHECK(std::abs(b.absolute.to_double() - 23.02585) < 1e-4);
  CHECK_THROWS_AS(bound_caro_yuster_leading(1, 10), DomainError);
}

TEST_CASE("claims") {
  const ClaimedBound c = claim(bound_id::kC5Inductive, bound_c5(2, 10));
  CHECK(c.source == "c5_inductive");
  CHECK(c.limit() == 6);
  CHECK(c.admits(6));
  CHECK_FALSE(c.admits(7));
}

TEST_CASE("bound reports") {
  const Factoring f = gen_star_factoring(3, 8);
  const BoundReport r = build_bound_report(describe(f, true));
  const BoundEntry* sandwich = r.find(bound_id::kSandwich);
  REQUIRE(sandwich);
  CHECK(sandwich->value.absolute.rational() == 3);
  for (const auto& e : r.entries) {
    if (!e.value.applicable) {
      CHECK_FALSE(e.value.violated.empty());
      continue;
    }
    // The Dankelmann-Laskar coefficient can exceed 1 inside its range.
    if (e.id == bound_id::kDankelmannLaskar || e.id == bound_id::kSandwich) continue;
    CHECK(e.value.coefficient.real() > 0);
    CHECK(e.value.coefficient.real() <= 1);
  }
}

TEST_CASE("bound report coefficients over random descriptors") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Factoring f = gen_random_factoring(12, 2 + seed % 3, model::Regular{2 + seed % 3}, seed);
    const BoundReport r = build_bound_report(describe(f));
    for (const auto& e : r.entries) {
      if (!e.value.applicable) {
        CHECK_FALSE(e.value.violated.empty());
        continue;
      }
      if (e.id == bound_id::kDankelmannLaskar) continue;
      CHECK(e.value.coefficient.real() > 0);
      CHECK(e.value.coefficient.real() <= 1);
    }
  }
}

TEST_CASE("regular two-factor report lists both two thirds bounds") {
  InstanceDescriptor d;
  d.n = 9;
  d.k = 2;
  d.delta = 2;
  d.regular = true;
  const BoundReport r = build_bound_report(d);
  CHECK(r.find(bound_id::kKnownK)->value.absolute.rational() == 6);
  CHECK(r.find(bound_id::kRegular)->value.absolute.rational() == 6);
}

TEST_CASE("tables one and two") {
  const auto t1 = table1();
  const std::vector<std::string> expected1{"2/3", "3/4", "5/6", "7/8", "9/10", "11/12"};
  REQUIRE(t1.size() == expected1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) CHECK(table_cell_text(1, t1[i]) == expected1[i]);
  const auto t2 = table2();
  const std::vector<std::string> expected2{"2/3", "3/4", "4/5", "5/6", "6/7", "7/8"};
  REQUIRE(t2.size() == expected2.size());
  for (std::size_t i = 0; i < t2.size(); ++i) CHECK(table_cell_text(2, t2[i]) == expected2[i]);
}

TEST_CASE("tables three and four are four-decimal renderings") {
  const auto t3 = table3();
  CHECK(t3.size() == 20);
  for (const auto& c : t3) {
    CHECK(table_cell_text(3, c).size() == 6);
    CHECK(std::abs(c.value.to_double() - f_double(c.k, c.row)) < 1e-12);
  }
  const auto t4 = table4();
  CHECK(t4.size() == 16);
  for (const auto& c : t4) CHECK(std::abs(c.value.to_double() - g_double(c.k, c.row)) < 1e-12);
  const std::string tsv = tables_tsv();
  CHECK(tsv.rfind("table\tparameter\tparameter_value\tk\tvalue\n", 0) == 0);
}

}
