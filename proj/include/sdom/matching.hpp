#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace sdom {

struct BipartiteMatching {
  static constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> left;   ///< partner of each left vertex
  std::vector<std::size_t> right;  ///< partner of each right vertex
  std::size_t size = 0;
};

/// Maximum matching by shortest augmenting paths found in phases.
/// adjacency[l] lists the right neighbours of left vertex l; lists are
/// scanned in the given order, so equal inputs give equal matchings.
BipartiteMatching maximum_bipartite_matching(std::size_t left_count, std::size_t right_count,
                                             const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace sdom
