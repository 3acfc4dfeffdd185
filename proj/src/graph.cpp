#include "sdom/graph.hpp"

#include <algorithm>
#include <string>

#include "sdom/errors.hpp"

namespace sdom {

Graph::Graph(std::size_t n, AdjacencyMode mode) : adjacency_(n) { build_rows(mode); }

Graph::Graph(std::size_t n, std::span<const Edge> edges, AdjacencyMode mode) : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    m_ += list.size();
  }
  m_ /= 2;
  build_rows(mode);
}

void Graph::build_rows(AdjacencyMode mode) {
  rows_.clear();
  if (mode == AdjacencyMode::Lists || n() > kBitsetLimit) return;
  rows_.reserve(n());
  for (const auto& list : adjacency_) rows_.push_back(VertexSet::from_range(n(), list));
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_[0].size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

Rational Graph::average_degree() const {
  if (n() == 0) return Rational(0);
  return Rational(Integer(2 * m_), Integer(n()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n() || v >= n()) return false;
  if (!rows_.empty()) return rows_[u].contains(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::open_neighborhood(Vertex v) const {
  if (!rows_.empty()) return rows_.at(v);
  return VertexSet::from_range(n(), adjacency_.at(v));
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = open_neighborhood(v);
  s.insert(v);
  return s;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  for (Vertex v : s) {
    if (!rows_.empty()) {
      out |= rows_[v];
    } else {
      for (Vertex u : adjacency_[v]) out.insert(u);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n(), false);
  for (Vertex s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex u : adjacency_[comp[head]])
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n() <= 1 || components().size() == 1; }

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::size_t> label(n(), n());
  for (std::size_t i = 0; i < vertices.size(); ++i) label.at(vertices[i]) = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex u : adjacency_[vertices[i]])
      if (label[u] != n() && i < label[u]) edges.emplace_back(i, label[u]);
  return Graph(vertices.size(), edges);
}

Graph build_empty(std::size_t n) { return Graph(n); }

Graph build_cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph build_path(std::size_t n) {
  if (n < 1) throw DomainError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph build_star(std::size_t n, Vertex center) {
  if (n < 1) throw DomainError("star needs at least 1 vertex");
  if (center >= n)
    throw DomainError("star center " + std::to_string(center) + " out of range for n = " +
                      std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (v != center) edges.emplace_back(center, v);
  return Graph(n, edges);
}

Graph build_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph build_disjoint_copies(const Graph& block, std::size_t copies) {
  const std::size_t r = block.n();
  std::vector<Edge> edges;
  const auto base = block.edges();
  for (std::size_t j = 0; j < copies; ++j)
    for (auto [u, v] : base) edges.emplace_back(j * r + u, j * r + v);
  return Graph(r * copies, edges);
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw DomainError("graph_union: vertex counts differ");
  auto edges = a.edges();
  auto more = b.edges();
  edges.insert(edges.end(), more.begin(), more.end());
  return Graph(a.n(), edges);
}

}  // namespace sdom
