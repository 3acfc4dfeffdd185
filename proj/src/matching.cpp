#include "sdom/matching.hpp"

#include <algorithm>
#include <queue>

#include "sdom/errors.hpp"

namespace sdom {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), dist_(left), next_edge_(left) {
    m_.left.assign(left, BipartiteMatching::kUnmatched);
    m_.right.assign(right, BipartiteMatching::kUnmatched);
  }

  BipartiteMatching run() {
    while (layer()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::size_t l = 0; l < m_.left.size(); ++l)
        if (m_.left[l] == BipartiteMatching::kUnmatched && augment(l)) ++m_.size;
    }
    return m_;
  }

 private:
  bool layer() {
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < m_.left.size(); ++l) {
      dist_[l] = m_.left[l] == BipartiteMatching::kUnmatched ? 0 : kInf;
      if (dist_[l] == 0) queue.push(l);
    }
    bool found = false;
    while (!queue.empty()) {
      std::size_t l = queue.front();
      queue.pop();
      for (std::size_t r : adj_[l]) {
        std::size_t partner = m_.right[r];
        if (partner == BipartiteMatching::kUnmatched) {
          found = true;
        } else if (dist_[partner] == kInf) {
          dist_[partner] = dist_[l] + 1;
          queue.push(partner);
        }
      }
    }
    return found;
  }

  bool augment(std::size_t l) {
    for (std::size_t& i = next_edge_[l]; i < adj_[l].size(); ++i) {
      std::size_t r = adj_[l][i];
      std::size_t partner = m_.right[r];
      if (partner == BipartiteMatching::kUnmatched ||
          (dist_[partner] == dist_[l] + 1 && augment(partner))) {
        m_.left[l] = r;
        m_.right[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_edge_;
  BipartiteMatching m_;
};

}  // namespace

BipartiteMatching maximum_bipartite_matching(std::size_t left_count, std::size_t right_count,
                                             const std::vector<std::vector<std::size_t>>& adjacency) {
  if (adjacency.size() != left_count) throw DomainError("adjacency size differs from left_count");
  for (const auto& row : adjacency)
    for (std::size_t r : row)
      if (r >= right_count) throw DomainError("right vertex out of range");
  return HopcroftKarp(left_count, right_count, adjacency).run();
}

}  // namespace sdom
