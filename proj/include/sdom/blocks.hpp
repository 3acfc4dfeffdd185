#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdom/factoring.hpp"
#include "sdom/graph.hpp"

namespace sdom {

/// A factor that is a vertex-disjoint union of copies of one block graph.
/// blocks[i][j] is the factor vertex that block vertex j maps to in copy i,
/// so every copy comes with an explicit, checked isomorphism.
struct CliquePartitionView {
  Graph block;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> block_of;  ///< copy index of every vertex
  bool verified = false;

  std::size_t order() const noexcept { return block.n(); }
  std::size_t copies() const noexcept { return blocks.size(); }
};

/// Vertex map phi with (u,v) in a iff (phi(u),phi(v)) in b, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

/// nullopt unless every component of `factor` is isomorphic to `block`.
std::optional<CliquePartitionView> detect_blocks(const Graph& factor, const Graph& block);

/// As detect_blocks but throws StructureError naming `what`.
CliquePartitionView require_blocks(const Graph& factor, const Graph& block, const char* what);

/// r when every factor is a disjoint union of copies of K_r for one r.
std::optional<std::size_t> common_clique_order(const Factoring& f);

bool is_spanning_cycle(const Graph& g);
bool is_spanning_path(const Graph& g);

/// Vertices of a spanning cycle or path in traversal order.  A cycle starts
/// at 0 and continues to its smaller neighbour; a path starts at its
/// smaller end.  Throws StructureError otherwise.
std::vector<Vertex> traversal_order(const Graph& g);

}  // namespace sdom
