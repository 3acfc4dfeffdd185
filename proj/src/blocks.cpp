#include "sdom/blocks.hpp"

#include <algorithm>
#include <string>

#include "sdom/errors.hpp"

namespace sdom {

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), map_(a.n(), a.n()), used_(b.n(), false) {
    // Map a's vertices in BFS order so each new vertex has a mapped neighbour.
    std::vector<bool> seen(a.n(), false);
    for (Vertex s = 0; s < a.n(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        Vertex v = order_[head++];
        for (Vertex u : a.neighbors(v))
          if (!seen[u]) {
            seen[u] = true;
            order_.push_back(u);
          }
      }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(Vertex v, Vertex image) const {
    if (a_.degree(v) != b_.degree(image)) return false;
    for (std::size_t i = 0; i < placed_; ++i) {
      Vertex u = order_[i];
      if (a_.has_edge(u, v) != b_.has_edge(map_[u], image)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex image = 0; image < b_.n(); ++image) {
      if (used_[image] || !consistent(v, image)) continue;
      map_[v] = image;
      used_[image] = true;
      placed_ = depth + 1;
      if (extend(depth + 1)) return true;
      used_[image] = false;
      placed_ = depth;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::size_t placed_ = 0;
};

bool is_complete(const Graph& g) { return g.m() * 2 == g.n() * (g.n() - (g.n() > 0 ? 1 : 0)); }

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  if (is_complete(a)) {
    std::vector<Vertex> identity(a.n());
    for (Vertex v = 0; v < a.n(); ++v) identity[v] = v;
    return identity;
  }
  return IsomorphismSearch(a, b).run();
}

std::optional<CliquePartitionView> detect_blocks(const Graph& factor, const Graph& block) {
  if (block.n() == 0 || factor.n() % block.n() != 0 || !block.is_connected()) return std::nullopt;
  CliquePartitionView view;
  view.block = block;
  view.block_of.assign(factor.n(), 0);
  for (const auto& component : factor.components()) {
    if (component.size() != block.n()) return std::nullopt;
    auto phi = find_isomorphism(block, factor.induced(component));
    if (!phi) return std::nullopt;
    std::vector<Vertex> copy(block.n());
    for (Vertex j = 0; j < block.n(); ++j) copy[j] = component[(*phi)[j]];
    for (Vertex v : copy) view.block_of[v] = view.blocks.size();
    view.blocks.push_back(std::move(copy));
  }
  view.verified = true;
  return view;
}

CliquePartitionView require_blocks(const Graph& factor, const Graph& block, const char* what) {
  auto view = detect_blocks(factor, block);
  if (!view) throw StructureError(std::string("factor is not a disjoint union of ") + what);
  return std::move(*view);
}

std::optional<std::size_t> common_clique_order(const Factoring& f) {
  if (f.n() == 0) return std::nullopt;
  const std::size_t r = f.factor(0).components().front().size();
  if (f.n() % r != 0) return std::nullopt;
  for (const auto& g : f.factors()) {
    if (g.m() * 2 != f.n() * (r - 1)) return std::nullopt;
    for (const auto& c : g.components())
      if (c.size() != r) return std::nullopt;
  }
  return r;
}

bool is_spanning_cycle(const Graph& g) {
  if (g.n() < 3 || g.m() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return g.is_connected();
}

bool is_spanning_path(const Graph& g) {
  if (g.n() == 0 || g.m() + 1 != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 2) return false;
  return g.is_connected();
}

std::vector<Vertex> traversal_order(const Graph& g) {
  Vertex start = 0;
  if (is_spanning_path(g)) {
    while (g.n() > 1 && g.degree(start) != 1) ++start;
  } else if (!is_spanning_cycle(g)) {
    throw StructureError("factor is neither a spanning cycle nor a spanning path");
  }
  std::vector<Vertex> order{start};
  Vertex previous = g.n();
  Vertex current = start;
  while (order.size() < g.n()) {
    Vertex next = g.n();
    for (Vertex u : g.neighbors(current))
      if (u != previous) {
        next = u;
        break;
      }
    previous = current;
    current = next;
    order.push_back(current);
  }
  return order;
}

}  // namespace sdom
