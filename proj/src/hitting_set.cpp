#include "hitting_set.hpp"

#include <algorithm>
#include <limits>

#include "sdom/errors.hpp"

namespace sdom::detail {

namespace {
constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
}

HittingSetSearch::HittingSetSearch(std::size_t n, const std::vector<std::vector<Vertex>>& edges)
    : n_(n), incident_(n), forbidden_(n, false), stamp_(n, 0) {
  // Drop repeated edges and edges that contain another edge; the first
  // occurrence keeps its position in the branching order.
  std::vector<VertexSet> masks;
  std::vector<std::vector<Vertex>> sorted;
  for (auto e : edges) {
    if (e.empty()) throw InfeasibleError("hyperedge with no vertices cannot be hit");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    masks.push_back(VertexSet::from_range(n, e));
    sorted.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < sorted.size() && !redundant; ++j) {
      if (i == j || !masks[j].is_subset_of(masks[i])) continue;
      // Equal edges: keep the earlier one.
      redundant = masks[j] != masks[i] || j < i;
    }
    if (!redundant) edges_.push_back(sorted[i]);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (Vertex v : edges_[i]) incident_[v].push_back(i);
  hits_.assign(edges_.size(), 0);
  available_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) available_[i] = edges_[i].size();
}

VertexSet HittingSetSearch::greedy() const {
  VertexSet out(n_);
  std::vector<bool> hit(edges_.size(), false);
  std::size_t remaining = edges_.size();
  while (remaining > 0) {
    Vertex best = n_;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n_; ++v) {
      std::size_t gain = 0;
      for (std::size_t e : incident_[v]) gain += hit[e] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    out.insert(best);
    for (std::size_t e : incident_[best])
      if (!hit[e]) {
        hit[e] = true;
        --remaining;
      }
  }
  return out;
}

VertexSet HittingSetSearch::solve(const VertexSet& incumbent, std::size_t lower_bound) {
  best_ = incumbent;
  lower_bound_ = lower_bound;
  done_ = best_.size() <= lower_bound_;
  if (!done_) search();
  return best_;
}

void HittingSetSearch::choose(Vertex v) {
  chosen_.push_back(v);
  for (std::size_t e : incident_[v]) ++hits_[e];
}

void HittingSetSearch::unchoose(Vertex v) {
  chosen_.pop_back();
  for (std::size_t e : incident_[v]) --hits_[e];
}

void HittingSetSearch::forbid(Vertex v) {
  forbidden_[v] = true;
  for (std::size_t e : incident_[v]) --available_[e];
}

void HittingSetSearch::unforbid(Vertex v) {
  forbidden_[v] = false;
  for (std::size_t e : incident_[v]) ++available_[e];
}

// Unhit edges whose available vertices are pairwise disjoint each need a
// distinct vertex.
std::size_t HittingSetSearch::packing_bound() {
  ++stamp_counter_;
  std::size_t count = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (hits_[e] != 0) continue;
    if (available_[e] == 0) return kInfinite;
    bool clash = false;
    for (Vertex v : edges_[e])
      if (!forbidden_[v] && stamp_[v] == stamp_counter_) {
        clash = true;
        break;
      }
    if (clash) continue;
    ++count;
    for (Vertex v : edges_[e])
      if (!forbidden_[v]) stamp_[v] = stamp_counter_;
  }
  return count;
}

void HittingSetSearch::search() {
  std::size_t branch_edge = edges_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (hits_[e] == 0) {
      branch_edge = e;
      break;
    }
  if (branch_edge == edges_.size()) {
    if (chosen_.size() < best_.size()) {
      best_ = VertexSet::from_range(n_, chosen_);
      done_ = best_.size() <= lower_bound_;
    }
    return;
  }
  const std::size_t bound = packing_bound();
  if (bound == kInfinite || chosen_.size() + bound >= best_.size()) return;

  std::vector<Vertex> excluded;
  for (Vertex c : edges_[branch_edge]) {
    if (forbidden_[c]) continue;
    choose(c);
    search();
    unchoose(c);
    if (done_) break;
    forbid(c);
    excluded.push_back(c);
    if (available_[branch_edge] == 0) break;
  }
  for (auto it = excluded.rbegin(); it != excluded.rend(); ++it) unforbid(*it);
}

}  // namespace sdom::detail
