#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "sdom/errors.hpp"
#include "sdom/extremal.hpp"
#include "sdom/factoring.hpp"
#include "sdom/graph.hpp"
#include "sdom/numeric.hpp"
#include "sdom/random.hpp"
#include "sdom/result.hpp"
#include "sdom/vertex_set.hpp"

using namespace sdom;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.n(); ++v) out.push_back(g.degree(v));
  return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("vertex set operations") {
  VertexSet a(130, {0, 5, 64, 129});
  VertexSet b(130, {5, 6, 129});
  CHECK(a.size() == 4);
  CHECK(a.contains(64));
  CHECK_FALSE(a.contains(63));
  CHECK((a & b).to_vector() == std::vector<Vertex>{5, 129});
  CHECK((a | b).size() == 5);
  CHECK((a - b).to_vector() == std::vector<Vertex>{0, 64});
  CHECK(a.intersection_size(b) == 2);
  CHECK(a.intersects(b));
  CHECK(VertexSet(130, {5}).is_subset_of(a));
  CHECK(a.complement().size() == 126);
  CHECK(VertexSet::full(130).size() == 130);
  CHECK(VertexSet(130).first() == 130);
  CHECK(b.first() == 5);
  a.erase(64);
  CHECK_FALSE(a.contains(64));
  CHECK_THROWS_AS(a.insert(130), std::out_of_range);
}

TEST_CASE("builders") {
  const Graph c4 = build_cycle(4);
  CHECK(degrees(c4) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(c4.m() == 4);
  CHECK(degrees(build_star(5, 0)) == std::vector<std::size_t>{4, 1, 1, 1, 1});
  const Graph two_k3 = build_disjoint_copies(build_complete(3), 2);
  CHECK(two_k3.n() == 6);
  CHECK(two_k3.m() == 6);
  CHECK(two_k3.components().size() == 2);
  CHECK(build_path(4).m() == 3);
  CHECK(build_empty(3).m() == 0);
}

TEST_CASE("disjoint clique copies are regular with r-vertex components") {
  for (std::size_t r = 1; r <= 5; ++r)
    for (std::size_t copies = 1; copies <= 4; ++copies) {
      const Graph g = build_disjoint_copies(build_complete(r), copies);
      CHECK(g.is_regular());
      CHECK(g.min_degree() == r - 1);
      const auto comps = g.components();
      CHECK(comps.size() == copies);
      for (const auto& c : comps) CHECK(c.size() == r);
    }
}

TEST_CASE("edges are normalized and invalid edges rejected") {
  const Graph g(3, {{2, 1}, {1, 2}, {0, 2}});
  CHECK(g.m() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
}

TEST_CASE("bitset and list adjacency agree") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(15, 0.3, seed);
    const Graph h(g.n(), g.edges(), AdjacencyMode::Lists);
    CHECK(g.uses_bitset_rows());
    CHECK_FALSE(h.uses_bitset_rows());
    CHECK(g == h);
    VertexSet s(g.n(), {1, 4, 9});
    CHECK(g.closed_neighborhood(s) == h.closed_neighborhood(s));
    for (Vertex v = 0; v < g.n(); ++v) {
      CHECK(g.closed_neighborhood(v) == h.closed_neighborhood(v));
      for (Vertex u = 0; u < g.n(); ++u) CHECK(g.has_edge(u, v) == h.has_edge(u, v));
    }
    CHECK(g.components() == h.components());
    CHECK(is_dominating_set(g, s) == is_dominating_set(h, s));
  }
}

TEST_CASE("combined graph") {
  const Graph c6 = build_cycle(6);
  CHECK(Factoring(6, {c6, c6}).combined() == c6);

  const Factoring f(4, {Graph(4, {{0, 1}, {2, 3}}), Graph(4, {{0, 2}, {1, 3}})});
  CHECK(f.combined() == Graph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));

  const Factoring stars = gen_star_factoring(3, 8);
  CHECK(stars.combined().max_degree() == 7);
}

TEST_CASE("combined graph degree and edge count relations") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Factoring f = gen_random_factoring(10, 3, model::Gnp{0.3, 0}, seed);
    const Graph& g = f.combined();
    std::size_t max_delta = 0, total_m = 0;
    Rational total_avg = 0;
    for (const auto& h : f.factors()) {
      max_delta = std::max(max_delta, h.min_degree());
      total_m += h.m();
      total_avg += h.average_degree();
    }
    CHECK(g.min_degree() >= max_delta);
    CHECK(g.m() <= total_m);
    CHECK(g.average_degree() <= total_avg);
  }
}

TEST_CASE("factoring rejects bad construction") {
  CHECK_THROWS_AS(Factoring(3, {}), DomainError);
  CHECK_THROWS_AS(Factoring(3, {build_cycle(4)}), DomainError);
}

TEST_CASE("parse minimal file") {
  const Factoring f = parse_factoring("sdfactoring 1\nn 2\nk 1\nfactor 1 m 1\n0 1\n");
  CHECK(f.n() == 2);
  CHECK(f.k() == 1);
  CHECK(f.factor(0) == build_complete(2));
}

TEST_CASE("parse errors carry a kind and line") {
  auto kind_of = [](const char* text) {
    try {
      parse_factoring(text);
    } catch (const ParseError& e) {
      return std::optional<std::pair<ParseErrorKind, std::size_t>>({e.kind(), e.line()});
    }
    return std::optional<std::pair<ParseErrorKind, std::size_t>>();
  };
  auto loop = kind_of("sdfactoring 1\nn 2\nk 1\nfactor 1 m 1\n0 0\n");
  REQUIRE(loop);
  CHECK(loop->first == ParseErrorKind::SelfLoop);
  CHECK(loop->second == 5);
  CHECK(kind_of("sdfactoring 2\nn 2\nk 1\n")->first == ParseErrorKind::MalformedHeader);
  CHECK(kind_of("sdfactoring 1\nn 2\nk 1\nfactor 1 m 1\n0 2\n")->first ==
        ParseErrorKind::VertexOutOfRange);
  CHECK(kind_of("sdfactoring 1\nn 3\nk 1\nfactor 1 m 2\n0 1\n1 0\n")->first ==
        ParseErrorKind::DuplicateEdge);
  CHECK(kind_of("sdfactoring 1\nn 2\nk 2\nfactor 1 m 1\n0 1\n")->first ==
        ParseErrorKind::FactorCountMismatch);
  CHECK(kind_of("sdfactoring 1\nn 3\nk 1\nfactor 1 m 2\n0 1\n")->first ==
        ParseErrorKind::EdgeCountMismatch);
  CHECK(kind_of("sdfactoring 1\nn 3\nk 1\nfactor 1 m 1\n0 x\n")->first ==
        ParseErrorKind::MalformedEdge);
}

TEST_CASE("same edge may appear in different factors") {
  const Factoring f =
      parse_factoring("sdfactoring 1\nn 2\nk 2\nfactor 1 m 1\n0 1\nfactor 2 m 1\n1 0\n");
  CHECK(f.factor(0) == f.factor(1));
}

TEST_CASE("comments and unnormalized edges round-trip to normal form") {
  const char* text =
      "# header comment\nsdfactoring 1\nn 4\nk 2\nfactor 1 m 2\n3 2 # edge\n1 0\n"
      "factor 2 m 1\n\n2 0\n";
  const Factoring f = parse_factoring(text);
  const std::string normal = serialize_factoring(f);
  CHECK(normal == "sdfactoring 1\nn 4\nk 2\nfactor 1 m 2\n0 1\n2 3\nfactor 2 m 1\n0 2\n");
  CHECK(serialize_factoring(parse_factoring(normal)) == normal);
}

TEST_CASE("round-trip on random factorings") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Factoring f = gen_random_factoring(9, 2, model::Gnp{0.4, 0}, seed);
    const Factoring g = parse_factoring(serialize_factoring(f));
    CHECK(f == g);
    CHECK(factoring_hash(f) == factoring_hash(g));
  }
}

TEST_CASE("file io") {
  const auto path = std::filesystem::temp_directory_path() / "sdom_core_roundtrip.sdf";
  const Factoring f = gen_k5_two_c5(2);
  write_factoring_file(f, path.string());
  CHECK(read_factoring_file(path.string()) == f);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_factoring_file("/nonexistent/file.sdf"), Error);
}

TEST_CASE("hash is 16 hex digits") {
  const std::string h = factoring_hash(gen_star_factoring(2, 4));
  CHECK(h.size() == 16);
  CHECK(std::all_of(h.begin(), h.end(), [](char c) { return std::isxdigit(c) != 0; }));
}

TEST_CASE("domination predicates") {
  CHECK(is_dominating_set(build_cycle(4), VertexSet(4, {0, 1})));
  CHECK_FALSE(is_dominating_set(build_cycle(5), VertexSet(5, {0})));
  for (Vertex v = 0; v < 5; ++v) CHECK(is_dominating_set(build_complete(5), VertexSet(5, {v})));
  const Factoring f(4, {Graph(4, {{0, 1}, {2, 3}}), Graph(4, {{0, 2}, {1, 3}})});
  CHECK(is_sd_set(f, VertexSet(4, {0, 3})));
  CHECK_FALSE(is_sd_set(f, VertexSet(4, {0, 1})));
  const SDResult r = make_result(f, VertexSet(4, {0, 1}), "test");
  CHECK(r.size == 2);
  CHECK(r.per_factor_ok == std::vector<bool>{false, true});
  CHECK_FALSE(r.valid());
}

TEST_CASE("numeric helpers") {
  CHECK(exact_root(make_rational(4, 9), 2) == make_rational(2, 3));
  CHECK_FALSE(exact_root(make_rational(2), 2).has_value());
  CHECK(floor_to_int(make_rational(-1, 2)) == -1);
  CHECK(ceil_to_int(make_rational(7, 3)) == 3);
  CHECK(round_half_up_units(Real("0.77775"), 4) == 7778);
  CHECK(format_fixed(Real("0.5"), 4) == "0.5000");
  CHECK(Value(make_rational(5, 9)).str() == "5/9");
  const Value x = Value::irrational(Real("2.5"));
  CHECK_FALSE(x.is_exact());
  CHECK(x.floor() == 2);
  CHECK(x.ceil() == 3);
  CHECK_THROWS_AS(x.rational(), DomainError);
  CHECK(Value(make_rational(1, 2)).less_than(Value(make_rational(2, 3))));
}

TEST_CASE("rng is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(17) == b.below(17));
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

}
