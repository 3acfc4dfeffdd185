#include <doctest.h>

#include "../oracles.hpp"
#include "sdom/blocks.hpp"
#include "sdom/bounds.hpp"
#include "sdom/coloring.hpp"
#include "sdom/constructive.hpp"
#include "sdom/errors.hpp"
#include "sdom/extremal.hpp"
#include "sdom/matching.hpp"
#include "sdom/random.hpp"

using namespace sdom;

namespace {

// Valid, within its own claimed bound, and no smaller than the optimum.
void check_construction(const Factoring& f, const SDResult& r) {
  CHECK(oracle::is_sd(f, r.set));
  CHECK(r.valid());
  CHECK(r.size == r.set.size());
  REQUIRE(r.bound.has_value());
  CHECK(r.bound->admits(r.size));
  if (f.n() <= 20) CHECK(r.size >= oracle::sd_number(f));
}

Factoring identical(const Graph& g, std::size_t k) {
  return Factoring(g.n(), std::vector<Graph>(k, g));
}

}  // namespace

TEST_SUITE("blocks") {

TEST_CASE("isomorphism search") {
  const Graph c5 = build_cycle(5);
  const Graph pentagram(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  const auto phi = find_isomorphism(c5, pentagram);
  REQUIRE(phi);
  for (const auto& [u, v] : c5.edges()) CHECK(pentagram.has_edge((*phi)[u], (*phi)[v]));
  CHECK_FALSE(find_isomorphism(build_path(4), build_star(4, 0)));
  CHECK_FALSE(find_isomorphism(build_cycle(6), build_disjoint_copies(build_complete(3), 2)));
}

TEST_CASE("block detection") {
  const Factoring f = gen_random_factoring(12, 1, model::CliqueUnion{3}, 4);
  const auto view = detect_blocks(f.factor(0), build_complete(3));
  REQUIRE(view);
  CHECK(view->verified);
  CHECK(view->copies() == 4);
  CHECK(view->order() == 3);
  for (std::size_t i = 0; i < view->copies(); ++i)
    for (Vertex v : view->blocks[i]) CHECK(view->block_of[v] == i);
  CHECK_FALSE(detect_blocks(build_cycle(12), build_complete(3)));
  CHECK_THROWS_AS(require_blocks(build_cycle(12), build_complete(3), "K_3 union"), StructureError);
  CHECK(common_clique_order(f) == std::size_t{3});
  CHECK_FALSE(common_clique_order(Factoring(6, {build_cycle(6)})));
}

TEST_CASE("spanning cycles and paths") {
  const Graph c(5, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}});
  CHECK(is_spanning_cycle(c));
  CHECK(traversal_order(c) == std::vector<Vertex>{0, 2, 4, 1, 3});
  const Graph p(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(is_spanning_path(p));
  CHECK_FALSE(is_spanning_cycle(p));
  CHECK(traversal_order(p) == std::vector<Vertex>{1, 3, 0, 2});
  CHECK_THROWS_AS(traversal_order(build_star(4, 0)), StructureError);
}

}

TEST_SUITE("matching") {

TEST_CASE("hopcroft karp finds maximum matchings") {
  const BipartiteMatching m = maximum_bipartite_matching(3, 3, {{0, 1}, {0}, {1, 2}});
  CHECK(m.size == 3);
  CHECK(m.left[1] == 0);
  for (std::size_t l = 0; l < 3; ++l) CHECK(m.right[m.left[l]] == l);
  const BipartiteMatching partial = maximum_bipartite_matching(3, 2, {{0}, {0}, {1}});
  CHECK(partial.size == 2);
}

TEST_CASE("matching size equals brute force") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    std::vector<std::vector<std::size_t>> adj(6);
    for (auto& row : adj)
      for (std::size_t r = 0; r < 6; ++r)
        if (rng.bernoulli(0.3)) row.push_back(r);
    std::size_t best = 0;
    std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
    do {
      std::size_t c = 0;
      for (std::size_t l = 0; l < 6; ++l)
        c += std::find(adj[l].begin(), adj[l].end(), perm[l]) != adj[l].end() ? 1 : 0;
      best = std::max(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(maximum_bipartite_matching(6, 6, adj).size == best);
  }
}

}

TEST_SUITE("coloring") {

TEST_CASE("greedy coloring is proper") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Factoring f = gen_random_factoring(14, 1, model::Gnp{0.3, 0}, seed);
    const Coloring c = greedy_coloring(f.factor(0));
    CHECK(is_proper_coloring(f.factor(0), c.color));
    CHECK(c.count <= f.factor(0).max_degree() + 1);
  }
}

TEST_CASE("brooks coloring uses max degree colors") {
  CHECK_FALSE(brooks_coloring(build_complete(5)));
  CHECK_FALSE(brooks_coloring(build_cycle(7)));
  const auto even = brooks_coloring(build_cycle(8));
  REQUIRE(even);
  CHECK(even->count <= 2);
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto p = brooks_coloring(petersen);
  REQUIRE(p);
  CHECK(is_proper_coloring(petersen, p->color));
  CHECK(p->count <= 3);
  CHECK_THROWS_AS(brooks_coloring(build_empty(3)), DomainError);
}

TEST_CASE("brooks coloring on random connected graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Factoring f = gen_random_factoring(12, 1, model::Regular{3 + seed % 3}, seed);
    for (const auto& comp : f.factor(0).components()) {
      const Graph g = f.factor(0).induced(comp);
      const auto c = brooks_coloring(g);
      if (g.m() * 2 == g.n() * (g.n() - 1)) {
        CHECK_FALSE(c);
        continue;
      }
      REQUIRE(c);
      CHECK(is_proper_coloring(g, c->color));
      CHECK(c->count <= g.max_degree());
    }
  }
}

}

TEST_SUITE("constructive") {

TEST_CASE("greedy picks star centers") {
  for (std::size_t k = 2; k <= 5; ++k) {
    const Factoring f = gen_star_factoring(k, 9);
    const SDResult r = greedy_sd(f);
    CHECK(r.valid());
    CHECK(r.size == k);
  }
}

TEST_CASE("greedy on identical factors and random instances") {
  const Graph c6 = build_cycle(6);
  CHECK(greedy_sd(identical(c6, 3)).size == 2);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Factoring f = gen_random_factoring(10, 3, model::Gnp{0.3, 0}, seed);
    const SDResult r = greedy_sd(f);
    CHECK(oracle::is_sd(f, r.set));
    CHECK(r.size >= oracle::sd_number(f));
  }
}

TEST_CASE("cover construction") {
  const SDResult r = sd_via_cover(identical(build_cycle(6), 2));
  check_construction(identical(build_cycle(6), 2), r);
  CHECK(r.size == 2);
  CHECK(r.note == "exact");
  CHECK(sd_via_cover(Factoring(4, {build_complete(4)})).size == 1);
  CHECK_THROWS_AS(sd_via_cover(Factoring(3, {Graph(3, {{0, 1}})})), DomainError);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::size_t k = 2 + seed % 2;
    const Factoring f = gen_random_factoring(12, k, model::Regular{3}, seed);
    const SDResult c = sd_via_cover(f);
    check_construction(f, c);
    CHECK(Rational(c.size) <= bound_regular(k, 12));
  }
  ExactConfig tiny;
  tiny.sd_cap = 4;
  tiny.cover_cap = 4;
  const Factoring f = gen_random_factoring(12, 2, model::Regular{3}, 3);
  const SDResult greedy = sd_via_cover(f, tiny);
  CHECK(greedy.note == "greedy");
  CHECK(greedy.valid());
  CHECK_FALSE(greedy.bound->proven);
}

TEST_CASE("hypergraph construction") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Factoring f = gen_random_factoring(12, 2, model::Regular{3}, seed);
    const SDResult r = sd_via_hypergraph(f);
    check_construction(f, r);
    const double coeff = static_cast<double>(coeff_f(2, 3));
    CHECK(static_cast<double>(r.size) <= coeff * 12 + 1e-9);
  }
  const Factoring matchings = gen_random_factoring(10, 2, model::Matching{}, 1);
  CHECK(sd_via_hypergraph(matchings).bound->limit() == 8);
}

TEST_CASE("clique transversal construction") {
  for (std::size_t r : {2, 3, 4})
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const Factoring f = gen_random_factoring(12, 2, model::CliqueUnion{r}, seed);
      const SDResult res = sd_kr_transversal(f);
      check_construction(f, res);
      CHECK(res.size >= 12 / r);
    }
  CHECK(sd_kr_transversal(gen_random_factoring(12, 2, model::CliqueUnion{3}, 1)).bound->limit() == 6);
  CHECK_THROWS_AS(sd_kr_transversal(Factoring(6, {build_cycle(6)})), StructureError);
}

TEST_CASE("pair matching construction") {
  const Factoring two_matchings(4, {Graph(4, {{0, 1}, {2, 3}}), Graph(4, {{0, 2}, {1, 3}})});
  const SDResult m = sd_pair_matching(two_matchings, build_complete(2));
  check_construction(two_matchings, m);
  CHECK(m.size == 2);

  for (std::size_t r : {2, 3, 4})
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const Factoring f = gen_random_factoring(12, 2, model::CliqueUnion{r}, seed);
      const SDResult res = sd_pair_matching(f, build_complete(r));
      check_construction(f, res);
      CHECK(res.size == 12 / r);
      CHECK(oracle::sd_number(f) == 12 / r);
    }

  for (std::size_t copies : {1, 2, 3}) {
    const Factoring f = gen_k5_two_c5(copies);
    const SDResult res = sd_pair_matching(f, build_cycle(5));
    check_construction(f, res);
    CHECK(res.size <= 3 * copies);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Factoring f = gen_random_factoring(10, 2, model::CycleUnion{5}, seed);
    check_construction(f, sd_pair_matching(f, build_cycle(5)));
  }

  const Factoring paths(6, {build_disjoint_copies(build_path(3), 2),
                            build_disjoint_copies(build_path(3), 2)});
  CHECK_THROWS_AS(sd_pair_matching(paths, build_path(3)), StructureError);
}

TEST_CASE("clique inductive and pairing constructions") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Factoring f = gen_random_factoring(9, 3, model::CliqueUnion{3}, seed);
    const SDResult ind = sd_kr_inductive(f);
    check_construction(f, ind);
    CHECK(Rational(ind.size) <= make_rational(5, 9) * 9);
    check_construction(f, sd_kr_pairing(f));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Factoring f = gen_random_factoring(12, 4, model::CliqueUnion{3}, seed);
    const SDResult pair = sd_kr_pairing(f);
    check_construction(f, pair);
    CHECK(pair.size <= 8);
    check_construction(f, sd_kr_inductive(f));
  }
  const Factoring two = gen_random_factoring(12, 2, model::CliqueUnion{4}, 2);
  CHECK(sd_kr_inductive(two).size == 3);
  CHECK(sd_kr_pairing(two).size == 3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Factoring five = gen_random_factoring(12, 5, model::CliqueUnion{3}, seed);
    check_construction(five, sd_kr_pairing(five));
    check_construction(five, sd_kr_inductive(five));
  }
}

TEST_CASE("one factor construction") {
  const Factoring blocks = gen_one_factorization(3, 2);
  const SDResult r = sd_one_factors(blocks);
  check_construction(blocks, r);
  CHECK(r.size == 6);
  const Graph m(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(sd_one_factors(identical(m, 2)).size <= 3);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Factoring f = gen_random_factoring(12, 4, model::Matching{}, seed);
    const SDResult res = sd_one_factors(f);
    check_construction(f, res);
    CHECK(res.size <= 9);
    const Factoring odd = gen_random_factoring(10, 3, model::Matching{}, seed);
    check_construction(odd, sd_one_factors(odd));
  }
  CHECK_THROWS_AS(sd_one_factors(Factoring(6, {build_cycle(6), build_cycle(6)})), StructureError);
}

TEST_CASE("cycle pair construction") {
  CHECK(sd_cycle_pair(identical(build_cycle(6), 2)).size <= 3);
  CHECK(sd_cycle_pair(identical(build_cycle(7), 2)).size <= 4);
  const SDResult c4 = sd_cycle_pair(identical(build_cycle(4), 2));
  CHECK(c4.size == 2);
  CHECK(oracle::sd_number(identical(build_cycle(4), 2)) == 2);
  for (std::size_t n = 3; n <= 12; ++n)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Factoring f = gen_random_factoring(n, 2, model::Hamiltonian{}, seed);
      const SDResult r = sd_cycle_pair(f);
      check_construction(f, r);
      CHECK(r.size <= (n + 1) / 2);
    }
  const Factoring paths(6, {build_path(6), build_cycle(6)});
  CHECK(sd_cycle_pair(paths).size <= 3);
  CHECK_THROWS_AS(sd_cycle_pair(Factoring(5, {build_path(5), build_cycle(5)})), StructureError);
}

TEST_CASE("cycles inductive construction") {
  CHECK(sd_cycles_inductive(identical(build_cycle(6), 2)).size <= 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Factoring f = gen_random_factoring(6, 3, model::Hamiltonian{}, seed);
    const SDResult r = sd_cycles_inductive(f);
    check_construction(f, r);
    CHECK(r.size <= 4);
    const Factoring g = gen_random_factoring(12, 4, model::Hamiltonian{}, seed);
    check_construction(g, sd_cycles_inductive(g));
  }
  CHECK_THROWS_AS(sd_cycles_inductive(identical(build_cycle(8), 2)), DomainError);
}

TEST_CASE("three C4 unions") {
  const Graph c4s = build_disjoint_copies(build_cycle(4), 2);
  CHECK(sd_c4_three(identical(c4s, 3)).size == 4);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Factoring f = gen_random_factoring(8, 3, model::CycleUnion{4}, seed);
    const SDResult r = sd_c4_three(f);
    check_construction(f, r);
    CHECK(r.size <= 6);
  }
}

TEST_CASE("C5 unions") {
  for (std::size_t copies : {1, 2}) {
    const Factoring f = gen_k5_two_c5(copies);
    const SDResult r = sd_c5_inductive(f);
    check_construction(f, r);
    CHECK(r.size == 3 * copies);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Factoring pair = gen_random_factoring(10, 2, model::CycleUnion{5}, seed);
    const SDResult r = sd_c5_inductive(pair);
    check_construction(pair, r);
    CHECK(r.size <= 6);
    const Factoring three = gen_random_factoring(10, 3, model::CycleUnion{5}, seed);
    const SDResult t = sd_c5_inductive(three);
    check_construction(three, t);
    CHECK(Rational(t.size) <= make_rational(19, 25) * 10 + 1);
  }
}

}
