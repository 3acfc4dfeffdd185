#include "sdom/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hitting_set.hpp"
#include "sdom/constructive.hpp"
#include "sdom/errors.hpp"

namespace sdom {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceededError(n, cap);
}

std::vector<std::vector<Vertex>> closed_neighborhood_edges(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> e(nb.begin(), nb.end());
    e.push_back(v);
    edges.push_back(std::move(e));
  }
  return edges;
}

ExactSet solve_edges(std::size_t n, const std::vector<std::vector<Vertex>>& edges,
                     std::size_t lower_bound = 0) {
  detail::HittingSetSearch search(n, edges);
  VertexSet best = search.solve(search.greedy(), lower_bound);
  return {best.size(), std::move(best)};
}

// Minimum t-vertex cover by branching on a vertex whose remaining degree
// exceeds t: it or one of its remaining neighbours must be removed.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::size_t t)
      : g_(g), t_(t), degree_(g.n()), removed_(g.n(), false), forbidden_(g.n(), false),
        stamp_(g.n(), 0) {
    for (Vertex v = 0; v < g.n(); ++v) degree_[v] = g.degree(v);
  }

  VertexSet solve() {
    best_ = greedy_t_vertex_cover(g_, t_);
    search();
    return best_;
  }

 private:
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

  void remove(Vertex v) {
    removed_[v] = true;
    chosen_.push_back(v);
    for (Vertex u : g_.neighbors(v))
      if (!removed_[u]) --degree_[u];
  }

  void restore(Vertex v) {
    removed_[v] = false;
    chosen_.pop_back();
    for (Vertex u : g_.neighbors(v))
      if (!removed_[u]) ++degree_[u];
  }

  std::size_t packing_bound() {
    ++stamp_counter_;
    std::size_t count = 0;
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < g_.n(); ++w) {
      if (removed_[w] || degree_[w] <= t_) continue;
      candidates.clear();
      if (!forbidden_[w]) candidates.push_back(w);
      std::size_t open_neighbors = 0;
      for (Vertex u : g_.neighbors(w))
        if (!removed_[u] && !forbidden_[u]) {
          candidates.push_back(u);
          ++open_neighbors;
        }
      if (forbidden_[w] && open_neighbors < degree_[w] - t_) return kInfinite;
      if (std::any_of(candidates.begin(), candidates.end(),
                      [&](Vertex u) { return stamp_[u] == stamp_counter_; }))
        continue;
      ++count;
      for (Vertex u : candidates) stamp_[u] = stamp_counter_;
    }
    return count;
  }

  void search() {
    Vertex violator = g_.n();
    for (Vertex v = 0; v < g_.n(); ++v)
      if (!removed_[v] && degree_[v] > t_) {
        violator = v;
        break;
      }
    if (violator == g_.n()) {
      if (chosen_.size() < best_.size()) best_ = VertexSet::from_range(g_.n(), chosen_);
      return;
    }
    const std::size_t bound = packing_bound();
    if (bound == kInfinite || chosen_.size() + bound >= best_.size()) return;

    std::vector<Vertex> branch;
    if (!forbidden_[violator]) branch.push_back(violator);
    for (Vertex u : g_.neighbors(violator))
      if (!removed_[u] && !forbidden_[u]) branch.push_back(u);

    std::vector<Vertex> excluded;
    for (Vertex c : branch) {
      remove(c);
      search();
      restore(c);
      forbidden_[c] = true;
      excluded.push_back(c);
    }
    for (Vertex c : excluded) forbidden_[c] = false;
  }

  const Graph& g_;
  std::size_t t_;
  std::vector<std::size_t> degree_;
  std::vector<bool> removed_;
  std::vector<bool> forbidden_;
  std::vector<Vertex> chosen_;
  std::vector<std::size_t> stamp_;
  std::size_t stamp_counter_ = 0;
  VertexSet best_;
};

}  // namespace

ExactSet domination_number(const Graph& g, const ExactConfig& config) {
  check_cap(g.n(), config.sd_cap);
  ExactSet out = solve_edges(g.n(), closed_neighborhood_edges(g));
  if (!is_dominating_set(g, out.witness)) throw std::logic_error("domination witness does not dominate");
  return out;
}

SDResult sd_number_exact(const Factoring& f, const ExactConfig& config) {
  check_cap(f.n(), config.sd_cap);
  // Branching order: vertex first, then factor.
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(f.n() * f.k());
  for (Vertex v = 0; v < f.n(); ++v)
    for (const auto& g : f.factors()) {
      auto nb = g.neighbors(v);
      std::vector<Vertex> e(nb.begin(), nb.end());
      e.push_back(v);
      edges.push_back(std::move(e));
    }

  std::size_t lower = 0;
  std::size_t upper = 0;
  if (f.k() >= 2) {
    for (const auto& g : f.factors()) {
      const std::size_t gamma = domination_number(g, config).value;
      lower = std::max(lower, gamma);
      upper += gamma;
    }
  }

  detail::HittingSetSearch search(f.n(), edges);
  VertexSet best = search.solve(greedy_sd(f).set, lower);
  SDResult result = make_result(f, std::move(best), "exact");
  if (!result.valid()) throw std::logic_error("exact SD witness fails to dominate a factor");
  if (f.k() >= 2 && (result.size < lower || result.size > upper))
    throw std::logic_error("exact SD value violates max gamma <= gamma_sd <= sum gamma");
  return result;
}

VertexSet greedy_t_vertex_cover(const Graph& g, std::size_t t) {
  std::vector<std::size_t> degree(g.n());
  std::vector<bool> removed(g.n(), false);
  for (Vertex v = 0; v < g.n(); ++v) degree[v] = g.degree(v);
  VertexSet out(g.n());
  while (true) {
    Vertex pick = g.n();
    for (Vertex v = 0; v < g.n(); ++v)
      if (!removed[v] && degree[v] > t && (pick == g.n() || degree[v] > degree[pick])) pick = v;
    if (pick == g.n()) break;
    removed[pick] = true;
    out.insert(pick);
    for (Vertex u : g.neighbors(pick))
      if (!removed[u]) --degree[u];
  }
  return out;
}

ExactSet t_vertex_cover_number(const Graph& g, std::size_t t, const ExactConfig& config) {
  check_cap(g.n(), t == 0 ? config.sd_cap : config.cover_cap);
  CoverSearch search(g, t);
  VertexSet best = search.solve();
  return {best.size(), std::move(best)};
}

ExactSet k_independence_number(const Graph& g, std::size_t k, const ExactConfig& config) {
  ExactSet cover = t_vertex_cover_number(g, k, config);
  VertexSet independent = cover.witness.complement();
  return {independent.size(), std::move(independent)};
}

ExactSet transversal_number_exact(const Hypergraph& h, const ExactConfig& config) {
  check_cap(h.n(), config.sd_cap);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(h.m());
  for (const auto& e : h.edges()) edges.push_back(e.to_vector());
  ExactSet out = solve_edges(h.n(), edges);
  if (!is_transversal(h, out.witness)) throw std::logic_error("transversal witness misses an edge");
  return out;
}

std::optional<VertexSet> min_dominating_set_containing(const Graph& g, Vertex v,
                                                       const ExactConfig& config) {
  if (v >= g.n()) throw DomainError("vertex out of range");
  const std::size_t gamma = domination_number(g, config).value;
  auto edges = closed_neighborhood_edges(g);
  edges.insert(edges.begin(), std::vector<Vertex>{v});
  ExactSet forced = solve_edges(g.n(), edges, gamma);
  if (forced.value != gamma) return std::nullopt;
  return forced.witness;
}

std::optional<Vertex> one_extendable_violation(const Graph& g, const ExactConfig& config) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (!min_dominating_set_containing(g, v, config)) return v;
  return std::nullopt;
}

bool is_one_extendable_dominated(const Graph& g, const ExactConfig& config) {
  return !one_extendable_violation(g, config).has_value();
}

}  // namespace sdom
