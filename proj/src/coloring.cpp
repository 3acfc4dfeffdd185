#include "sdom/coloring.hpp"

#include <algorithm>
#include <limits>

#include "sdom/errors.hpp"

namespace sdom {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t first_free(const Graph& g, Vertex v, const std::vector<std::size_t>& color) {
  std::vector<bool> taken(g.degree(v) + 1, false);
  for (Vertex u : g.neighbors(v))
    if (color[u] != kNone && color[u] < taken.size()) taken[color[u]] = true;
  std::size_t c = 0;
  while (taken[c]) ++c;
  return c;
}

std::size_t count_colors(const std::vector<std::size_t>& color) {
  std::size_t count = 0;
  for (std::size_t c : color) count = std::max(count, c + 1);
  return count;
}

// Colors every uncolored vertex first-fit in reverse BFS order from `root`,
// so each vertex except the root still has an uncolored neighbour (its BFS
// parent) when it is colored.
std::optional<std::vector<std::size_t>> color_toward_root(const Graph& g, Vertex root,
                                                          std::size_t palette,
                                                          std::vector<std::size_t> color) {
  std::vector<Vertex> order{root};
  std::vector<bool> seen(g.n(), false);
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex u : g.neighbors(order[head]))
      if (!seen[u] && color[u] == kNone) {
        seen[u] = true;
        order.push_back(u);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t c = first_free(g, *it, color);
    if (c >= palette) return std::nullopt;
    color[*it] = c;
  }
  if (std::find(color.begin(), color.end(), kNone) != color.end()) return std::nullopt;
  return color;
}

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  Vertex start = 0;
  while (start < g.n() && removed[start]) ++start;
  if (start == g.n()) return true;
  std::vector<bool> seen(removed);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == static_cast<std::size_t>(std::count(removed.begin(), removed.end(), false));
}

std::optional<Coloring> two_color(const Graph& g) {
  std::vector<std::size_t> color(g.n(), kNone);
  color[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (color[u] == kNone) {
        color[u] = 1 - color[v];
        stack.push_back(u);
      } else if (color[u] == color[v]) {
        return std::nullopt;
      }
    }
  }
  return Coloring{color, count_colors(color)};
}

std::optional<Coloring> split_at_cut_vertex(const Graph& g, Vertex cut, std::size_t palette) {
  std::vector<bool> removed(g.n(), false);
  removed[cut] = true;
  // The component of G - cut holding the smallest vertex goes to one side.
  std::vector<bool> side(g.n(), false);
  Vertex start = cut == 0 ? 1 : 0;
  std::vector<Vertex> stack{start};
  side[start] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (u != cut && !side[u]) {
        side[u] = true;
        stack.push_back(u);
      }
  }
  std::vector<Vertex> first{cut};
  std::vector<Vertex> second{cut};
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == cut) continue;
    (side[v] ? first : second).push_back(v);
  }
  std::vector<std::size_t> color(g.n(), kNone);
  std::size_t cut_color = kNone;
  for (const auto* part : {&first, &second}) {
    const Graph h = g.induced(*part);
    auto local = color_toward_root(h, 0, palette, std::vector<std::size_t>(h.n(), kNone));
    if (!local) return std::nullopt;
    if (cut_color == kNone) cut_color = (*local)[0];
    // Swap two color names so the cut vertex agrees across both sides.
    const std::size_t mine = (*local)[0];
    for (std::size_t i = 0; i < part->size(); ++i) {
      std::size_t c = (*local)[i];
      if (c == mine) c = cut_color;
      else if (c == cut_color) c = mine;
      color[(*part)[i]] = c;
    }
  }
  return Coloring{color, count_colors(color)};
}

}  // namespace

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& color) {
  if (color.size() != g.n()) return false;
  for (const auto& [u, v] : g.edges())
    if (color[u] == color[v]) return false;
  return true;
}

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  std::vector<Vertex> ascending;
  if (order.empty()) {
    ascending.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) ascending[v] = v;
    order = ascending;
  }
  std::vector<std::size_t> color(g.n(), kNone);
  for (Vertex v : order) color[v] = first_free(g, v, color);
  return Coloring{color, count_colors(color)};
}

std::optional<Coloring> brooks_coloring(const Graph& g) {
  if (g.n() == 0) return Coloring{};
  if (!g.is_connected()) throw DomainError("brooks_coloring needs a connected graph");
  const std::size_t delta = g.max_degree();
  if (g.m() * 2 == g.n() * (g.n() - 1)) return std::nullopt;
  if (delta <= 2) return two_color(g);

  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) < delta) {
      auto color = color_toward_root(g, v, delta, std::vector<std::size_t>(g.n(), kNone));
      if (!color) return std::nullopt;
      return Coloring{*color, count_colors(*color)};
    }

  std::vector<bool> removed(g.n(), false);
  for (Vertex c = 0; c < g.n(); ++c) {
    removed[c] = true;
    const bool cut = !connected_without(g, removed);
    removed[c] = false;
    if (cut) return split_at_cut_vertex(g, c, delta);
  }

  // 2-connected and regular: two non-adjacent neighbours x, y of v share a
  // color and v is colored last.
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex x = nb[i];
        const Vertex y = nb[j];
        if (g.has_edge(x, y)) continue;
        removed[x] = removed[y] = true;
        const bool ok = connected_without(g, removed);
        removed[x] = removed[y] = false;
        if (!ok) continue;
        std::vector<std::size_t> color(g.n(), kNone);
        color[x] = color[y] = 0;
        auto done = color_toward_root(g, v, delta, std::move(color));
        if (!done) return std::nullopt;
        return Coloring{*done, count_colors(*done)};
      }
  }
  return std::nullopt;
}

}  // namespace sdom
