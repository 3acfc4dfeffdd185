#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdom/graph.hpp"

namespace sdom {

struct Coloring {
  std::vector<std::size_t> color;  ///< 0-based color of every vertex
  std::size_t count = 0;           ///< number of colors used
};

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& color);

/// First-fit coloring in the given vertex order (ascending when empty).
Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order = {});

/// A proper coloring of a connected graph with Delta colors, built as in
/// the constructive proof of Brooks' theorem.  nullopt for complete graphs
/// and odd cycles, which need Delta + 1.  Throws DomainError when g is
/// disconnected.
std::optional<Coloring> brooks_coloring(const Graph& g);

}  // namespace sdom
