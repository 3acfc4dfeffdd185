#include "sdom/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sdom/errors.hpp"
#include "sdom/random.hpp"

namespace sdom {

namespace mp = boost::multiprecision;

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].universe() != n_)
      throw DomainError("hyperedge " + std::to_string(i) + " is over a universe of size " +
                        std::to_string(edges_[i].universe()) + ", expected " + std::to_string(n_));
    const std::size_t size = edges_[i].size();
    if (size == 0) throw DomainError("hyperedge " + std::to_string(i) + " is empty");
    rank_ = std::max(rank_, size);
    if (i == 0) {
      uniform_ = size;
    } else if (uniform_ && *uniform_ != size) {
      uniform_.reset();
    }
  }
}

std::size_t Hypergraph::degree(Vertex v) const {
  if (v >= n_) throw DomainError("vertex out of range");
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const VertexSet& e) { return e.contains(v); }));
}

std::size_t Hypergraph::min_degree() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[v];
  return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

Rational Hypergraph::average_degree() const {
  if (n_ == 0) return Rational(0);
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.size();
  return Rational(Integer(total), Integer(n_));
}

bool is_transversal(const Hypergraph& h, const VertexSet& t) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const VertexSet& e) { return e.intersects(t); });
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  std::vector<VertexSet> edges;
  edges.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) edges.push_back(g.closed_neighborhood(v));
  return Hypergraph(g.n(), std::move(edges));
}

Hypergraph shrink_to_uniform(const Hypergraph& h, std::size_t r) {
  if (r == 0) throw DomainError("cannot shrink edges to size 0");
  std::vector<VertexSet> edges;
  edges.reserve(h.m());
  for (std::size_t i = 0; i < h.m(); ++i) {
    const auto& e = h.edge(i);
    if (e.size() < r)
      throw DomainError("hyperedge " + std::to_string(i) + " has size " + std::to_string(e.size()) +
                        " < " + std::to_string(r));
    VertexSet kept(h.n());
    std::size_t taken = 0;
    for (Vertex v : e) {
      if (taken == r) break;
      kept.insert(v);
      ++taken;
    }
    edges.push_back(std::move(kept));
  }
  return Hypergraph(h.n(), std::move(edges));
}

Hypergraph hypergraph_union(const std::vector<Hypergraph>& parts) {
  if (parts.empty()) throw DomainError("hypergraph_union of nothing");
  std::vector<VertexSet> edges;
  for (const auto& h : parts) {
    if (h.n() != parts.front().n()) throw DomainError("hypergraph_union: vertex counts differ");
    edges.insert(edges.end(), h.edges().begin(), h.edges().end());
  }
  return Hypergraph(parts.front().n(), std::move(edges));
}

namespace {

void require_bound_domain(std::size_t r, const Rational& d) {
  if (r < 2) throw DomainError("uniformity r must be >= 2, got " + std::to_string(r));
  if (d < 1) throw DomainError("average degree d = " + to_string(d) + " < 1");
}

}  // namespace

Real optimal_p(std::size_t r, const Rational& d) {
  require_bound_domain(r, d);
  return Real(1) - mp::pow(Real(1) / to_real(d), Real(1) / Real(r - 1));
}

TransversalBound transversal_bound(std::size_t r, std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("hypergraph with no vertices");
  const Rational d(Integer(r * m), Integer(n));
  require_bound_domain(r, d);
  const Rational shrink(Integer(r - 1), Integer(r));
  TransversalBound out{Value(), Real(0), false};
  if (auto root = exact_root(Rational(1) / d, static_cast<unsigned>(r - 1))) {
    out.main = Value((Rational(1) - shrink * *root) * Rational(n));
    out.exact = true;
  } else {
    const Real root_real = mp::pow(Real(1) / to_real(d), Real(1) / Real(r - 1));
    out.main = Value::irrational((Real(1) - to_real(shrink) * root_real) * Real(n));
  }
  out.relaxation = Real(n) * (mp::log(to_real(d)) + Real(1)) / Real(r);
  if (out.main.real() > out.relaxation * (Real(1) + Real(1e-40)))
    throw std::logic_error("transversal bound exceeds its logarithmic relaxation");
  return out;
}

Real expected_transversal_size(std::size_t n, std::size_t m, std::size_t r, const Real& p) {
  return Real(n) * p + Real(m) * mp::pow(Real(1) - p, Real(r));
}

namespace {

void repair(const Hypergraph& h, TransversalRun& run) {
  run.set = run.sampled;
  std::vector<std::size_t> missed;
  for (std::size_t i = 0; i < h.m(); ++i)
    if (!h.edge(i).intersects(run.sampled)) missed.push_back(i);
  run.uncovered_after_sampling = missed.size();
  for (std::size_t i : missed) {
    if (h.edge(i).intersects(run.set)) continue;
    const Vertex v = h.edge(i).first();
    run.set.insert(v);
    run.repairs.push_back(v);
  }
}

}  // namespace

TransversalRun randomized_transversal(const Hypergraph& h, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sampling probability outside [0, 1]");
  if (h.m() > 0 && !h.uniform_size()) throw DomainError("randomized_transversal needs a uniform hypergraph");
  Rng rng(seed);
  TransversalRun run;
  run.sampled = VertexSet(h.n());
  for (Vertex v = 0; v < h.n(); ++v)
    if (rng.bernoulli(p)) run.sampled.insert(v);
  repair(h, run);
  return run;
}

TransversalRun derandomized_transversal_run(const Hypergraph& h) {
  const auto r = h.uniform_size();
  if (!r) throw DomainError("derandomized_transversal needs a uniform hypergraph");
  const Real p = optimal_p(*r, h.average_degree());
  const Real q = Real(1) - p;
  std::vector<Real> q_pow(*r + 1, Real(1));
  for (std::size_t j = 1; j <= *r; ++j) q_pow[j] = q_pow[j - 1] * q;

  std::vector<std::vector<std::size_t>> incident(h.n());
  for (std::size_t i = 0; i < h.m(); ++i)
    for (Vertex v : h.edge(i)) incident[v].push_back(i);
  std::vector<std::size_t> undecided(h.m(), *r);
  std::vector<bool> hit(h.m(), false);

  TransversalRun run;
  run.sampled = VertexSet(h.n());
  for (Vertex v = 0; v < h.n(); ++v) {
    // Change of the pessimistic estimator when v is fixed in or out.
    Real delta_in = Real(1) - p;
    Real delta_out = -p;
    for (std::size_t i : incident[v]) {
      if (hit[i]) continue;
      delta_in -= q_pow[undecided[i]];
      delta_out += q_pow[undecided[i] - 1] - q_pow[undecided[i]];
    }
    const bool take = delta_in < delta_out;
    if (take) run.sampled.insert(v);
    for (std::size_t i : incident[v]) {
      --undecided[i];
      if (take) hit[i] = true;
    }
  }
  repair(h, run);

  const auto bound = transversal_bound(*r, h.n(), h.m());
  if (static_cast<std::int64_t>(run.set.size()) > bound.limit())
    throw std::logic_error("derandomized transversal exceeded floor(n p* + m (1-p*)^r)");
  return run;
}

VertexSet derandomized_transversal(const Hypergraph& h) { return derandomized_transversal_run(h).set; }

}  // namespace sdom
