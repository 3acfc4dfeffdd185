#pragma once

// Brute-force reference implementations.  They share no code with the
// library beyond reading edge lists: adjacency is rebuilt here as bitmasks
// and every quantity comes from plain subset enumeration.

#include <bit>
#include <cstdint>
#include <vector>

#include "sdom/factoring.hpp"
#include "sdom/hypergraph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> closed_masks(const sdom::Graph& g) {
  std::vector<Mask> rows(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) rows[v] = Mask{1} << v;
  for (const auto& [u, v] : g.edges()) {
    rows[u] |= Mask{1} << v;
    rows[v] |= Mask{1} << u;
  }
  return rows;
}

inline bool dominates(const std::vector<Mask>& closed, Mask s) {
  for (Mask row : closed)
    if ((row & s) == 0) return false;
  return true;
}

inline Mask full(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline sdom::VertexSet to_set(std::size_t n, Mask s) {
  sdom::VertexSet out(n);
  for (std::size_t v = 0; v < n; ++v)
    if (s >> v & 1U) out.insert(v);
  return out;
}

/// Smallest popcount among masks accepted by `ok`, scanning all 2^n.
template <typename Pred>
std::size_t min_subset(std::size_t n, Pred ok) {
  std::size_t best = n + 1;
  for (Mask s = 0; s <= full(n); ++s) {
    const auto c = static_cast<std::size_t>(std::popcount(s));
    if (c < best && ok(s)) best = c;
    if (s == full(n)) break;
  }
  return best;
}

inline std::size_t domination_number(const sdom::Graph& g) {
  const auto closed = closed_masks(g);
  return min_subset(g.n(), [&](Mask s) { return dominates(closed, s); });
}

inline std::size_t sd_number(const sdom::Factoring& f) {
  std::vector<std::vector<Mask>> closed;
  for (const auto& g : f.factors()) closed.push_back(closed_masks(g));
  return min_subset(f.n(), [&](Mask s) {
    for (const auto& c : closed)
      if (!dominates(c, s)) return false;
    return true;
  });
}

inline bool is_sd(const sdom::Factoring& f, const sdom::VertexSet& set) {
  Mask s = 0;
  for (auto v : set) s |= Mask{1} << v;
  for (const auto& g : f.factors())
    if (!dominates(closed_masks(g), s)) return false;
  return true;
}

/// max degree of g - s, from scratch.
inline std::size_t max_degree_after_removal(const sdom::Graph& g, Mask s) {
  std::vector<std::size_t> deg(g.n(), 0);
  for (const auto& [u, v] : g.edges())
    if (!(s >> u & 1U) && !(s >> v & 1U)) ++deg[u], ++deg[v];
  std::size_t d = 0;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!(s >> v & 1U)) d = std::max(d, deg[v]);
  return d;
}

inline std::size_t t_vertex_cover_number(const sdom::Graph& g, std::size_t t) {
  return min_subset(g.n(), [&](Mask s) { return max_degree_after_removal(g, s) <= t; });
}

/// Largest S with Delta(G[S]) <= t, by scanning all subsets directly.
inline std::size_t t_independence_number(const sdom::Graph& g, std::size_t t) {
  std::size_t best = 0;
  for (Mask s = 0;; ++s) {
    const auto c = static_cast<std::size_t>(std::popcount(s));
    if (c > best && max_degree_after_removal(g, full(g.n()) & ~s) <= t) best = c;
    if (s == full(g.n())) break;
  }
  return best;
}

inline std::size_t transversal_number(const sdom::Hypergraph& h) {
  std::vector<Mask> edges;
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (auto v : e) m |= Mask{1} << v;
    edges.push_back(m);
  }
  return min_subset(h.n(), [&](Mask s) {
    for (Mask e : edges)
      if ((e & s) == 0) return false;
    return true;
  });
}

inline bool is_transversal(const sdom::Hypergraph& h, const sdom::VertexSet& t) {
  for (const auto& e : h.edges()) {
    bool hit = false;
    for (auto v : e) hit = hit || t.contains(v);
    if (!hit) return false;
  }
  return true;
}

}  // namespace oracle
