#pragma once

// Branch-and-bound minimum hitting set shared by the exact solvers.

#include <cstddef>
#include <vector>

#include "sdom/vertex_set.hpp"

namespace sdom::detail {

class HittingSetSearch {
 public:
  /// Edge order is the branching order: the first edge not yet hit is
  /// branched on, candidates in ascending vertex order.  Throws
  /// InfeasibleError on an empty edge.
  HittingSetSearch(std::size_t n, const std::vector<std::vector<Vertex>>& edges);

  /// `incumbent` must hit every edge.  Search stops as soon as a set of
  /// size `lower_bound` is found.
  VertexSet solve(const VertexSet& incumbent, std::size_t lower_bound = 0);

  /// Greedy: repeatedly the vertex hitting the most unhit edges, lowest
  /// index on ties.
  VertexSet greedy() const;

 private:
  void search();
  std::size_t packing_bound();
  void choose(Vertex v);
  void unchoose(Vertex v);
  void forbid(Vertex v);
  void unforbid(Vertex v);

  std::size_t n_;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<std::size_t>> incident_;

  std::vector<std::size_t> hits_;
  std::vector<std::size_t> available_;
  std::vector<bool> forbidden_;
  std::vector<Vertex> chosen_;
  std::vector<std::size_t> stamp_;
  std::size_t stamp_counter_ = 0;

  VertexSet best_;
  std::size_t lower_bound_ = 0;
  bool done_ = false;
};

}  // namespace sdom::detail
