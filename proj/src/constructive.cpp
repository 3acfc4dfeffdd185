#include "sdom/constructive.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sdom/blocks.hpp"
#include "sdom/bounds.hpp"
#include "sdom/coloring.hpp"
#include "sdom/errors.hpp"
#include "sdom/hypergraph.hpp"
#include "sdom/matching.hpp"

namespace sdom {

namespace {

SDResult finish(const Factoring& f, VertexSet set, const char* method,
                std::optional<ClaimedBound> bound, std::string note = {}) {
  SDResult result = make_result(f, std::move(set), method, std::move(bound), std::move(note));
  if (!result.valid())
    throw std::logic_error(std::string(method) + ": output does not dominate every factor");
  if (result.bound && result.bound->proven && !result.bound_respected())
    throw std::logic_error(std::string(method) + ": size " + std::to_string(result.size) +
                           " exceeds the " + result.bound->source + " bound " +
                           std::to_string(result.bound->limit()));
  return result;
}

void require_k(const Factoring& f, std::size_t k, const char* method) {
  if (f.k() != k)
    throw DomainError(std::string(method) + " needs exactly " + std::to_string(k) + " factors");
}

void require_k_at_least(const Factoring& f, std::size_t k, const char* method) {
  if (f.k() < k)
    throw DomainError(std::string(method) + " needs at least " + std::to_string(k) + " factors");
}

std::size_t require_clique_order(const Factoring& f) {
  auto r = common_clique_order(f);
  if (!r) throw StructureError("factors are not disjoint unions of copies of one K_r");
  return *r;
}

std::vector<CliquePartitionView> views_of(const Factoring& f, const Graph& block, const char* what) {
  std::vector<CliquePartitionView> views;
  for (const auto& g : f.factors()) views.push_back(require_blocks(g, block, what));
  return views;
}

// Minimum dominating set of the block through each block vertex.
std::vector<std::vector<Vertex>> block_extensions(const Graph& block, const ExactConfig& config) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex j = 0; j < block.n(); ++j) {
    auto set = min_dominating_set_containing(block, j, config);
    if (!set)
      throw StructureError("block graph has no minimum dominating set containing vertex " +
                           std::to_string(j));
    out.push_back(set->to_vector());
  }
  return out;
}

std::vector<std::vector<Vertex>> singleton_extensions(std::size_t r) {
  std::vector<std::vector<Vertex>> out(r);
  for (Vertex j = 0; j < r; ++j) out[j] = {j};
  return out;
}

std::size_t block_label(const CliquePartitionView& view, std::size_t copy, Vertex v) {
  const auto& vertices = view.blocks[copy];
  return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
}

// Perfect matching between the copies of two factors, joined when they
// share a vertex; each matched pair contributes its lowest common vertex
// extended to a minimum dominating set of both copies.
void add_pair_matching(VertexSet& out, const CliquePartitionView& a, const CliquePartitionView& b,
                       const std::vector<std::vector<Vertex>>& extensions) {
  std::vector<std::vector<std::size_t>> adjacency(a.copies());
  for (std::size_t i = 0; i < a.copies(); ++i) {
    for (Vertex v : a.blocks[i]) adjacency[i].push_back(b.block_of[v]);
    std::sort(adjacency[i].begin(), adjacency[i].end());
    adjacency[i].erase(std::unique(adjacency[i].begin(), adjacency[i].end()), adjacency[i].end());
  }
  const BipartiteMatching matching = maximum_bipartite_matching(a.copies(), b.copies(), adjacency);
  if (matching.size != a.copies())
    throw std::logic_error("copies of two equal-order block factorings have no perfect matching");
  for (std::size_t i = 0; i < a.copies(); ++i) {
    const std::size_t partner = matching.left[i];
    Vertex common = out.universe();
    for (Vertex v : a.blocks[i])
      if (b.block_of[v] == partner) common = std::min(common, v);
    for (Vertex j : extensions[block_label(a, i, common)]) out.insert(a.blocks[i][j]);
    for (Vertex j : extensions[block_label(b, partner, common)]) out.insert(b.blocks[partner][j]);
  }
}

bool copy_dominated(const Graph& factor, const std::vector<Vertex>& copy, const VertexSet& set) {
  for (Vertex v : copy) {
    if (set.contains(v)) continue;
    bool hit = false;
    for (Vertex u : factor.neighbors(v))
      if (set.contains(u)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Perfect matching that alternates along a traversal order of even length.
Graph alternating_matching(std::size_t n, const std::vector<Vertex>& order) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < order.size(); i += 2) edges.emplace_back(order[i], order[i + 1]);
  return Graph(n, edges);
}

VertexSet matched_pair_set(std::size_t n, const Graph& m1, const Graph& m2) {
  const Graph k2 = build_complete(2);
  VertexSet out(n);
  add_pair_matching(out, require_blocks(m1, k2, "K_2"), require_blocks(m2, k2, "K_2"),
                    singleton_extensions(2));
  return out;
}

VertexSet kr_pair_set(const CliquePartitionView& a, const CliquePartitionView& b, std::size_t n) {
  VertexSet out(n);
  add_pair_matching(out, a, b, singleton_extensions(a.order()));
  return out;
}

void add_undominated_cliques(VertexSet& set, const CliquePartitionView& view) {
  for (const auto& copy : view.blocks) {
    if (std::none_of(copy.begin(), copy.end(), [&](Vertex v) { return set.contains(v); }))
      set.insert(*std::min_element(copy.begin(), copy.end()));
  }
}

VertexSet kr_inductive_set(const std::vector<CliquePartitionView>& views, std::size_t count,
                           std::size_t n) {
  VertexSet set = kr_pair_set(views[0], views[1], n);
  for (std::size_t i = 2; i < count; ++i) add_undominated_cliques(set, views[i]);
  return set;
}

}  // namespace

SDResult greedy_sd(const Factoring& f) {
  const std::size_t n = f.n();
  std::vector<VertexSet> undominated(f.k(), VertexSet::full(n));
  VertexSet set(n);
  auto take = [&](Vertex v) {
    set.insert(v);
    for (std::size_t i = 0; i < f.k(); ++i) undominated[i] -= f.factor(i).closed_neighborhood(v);
  };
  for (Vertex v = 0; v < n; ++v)
    for (const auto& g : f.factors())
      if (g.degree(v) == 0 && !set.contains(v)) take(v);

  std::vector<VertexSet> closed(n * f.k());
  for (std::size_t i = 0; i < f.k(); ++i)
    for (Vertex v = 0; v < n; ++v) closed[i * n + v] = f.factor(i).closed_neighborhood(v);
  while (true) {
    Vertex best = n;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < f.k(); ++i) gain += closed[i * n + v].intersection_size(undominated[i]);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best == n) break;
    take(best);
  }
  return finish(f, std::move(set), "greedy", std::nullopt);
}

SDResult sd_via_cover(const Factoring& f, const ExactConfig& config) {
  const std::size_t delta = f.delta();
  if (delta == 0)
    throw DomainError(
        "cover construction needs minimum degree >= 1; isolated vertices belong to every "
        "SD-set, use the exact solver");
  const Graph& g = f.combined();
  const std::size_t t = delta - 1;
  const std::size_t cap = t == 0 ? config.sd_cap : config.cover_cap;
  const BoundValue bound =
      BoundValue{true, {}, Value(bound_cover_average_degree(g.average_degree(), delta, 1)),
                 Value(bound_cover_average_degree(g.average_degree(), delta, f.n()))};
  if (f.n() <= cap) {
    VertexSet cover = t_vertex_cover_number(g, t, config).witness;
    return finish(f, std::move(cover), "cover", claim(bound_id::kCoverAverageDegree, bound),
                  "exact");
  }
  return finish(f, greedy_t_vertex_cover(g, t), "cover",
                claim(bound_id::kCoverAverageDegree, bound, false), "greedy");
}

SDResult sd_via_hypergraph(const Factoring& f) {
  const std::size_t delta = f.delta();
  if (delta == 0) throw DomainError("hypergraph construction needs minimum degree >= 1");
  std::vector<Hypergraph> parts;
  for (const auto& g : f.factors())
    parts.push_back(shrink_to_uniform(neighborhood_hypergraph(g), delta + 1));
  VertexSet set = derandomized_transversal(hypergraph_union(parts));
  return finish(f, std::move(set), "hypergraph",
                claim(bound_id::kMinDegreeHypergraph,
                      bound_min_degree_hypergraph(f.k(), delta, f.n())));
}

SDResult sd_kr_transversal(const Factoring& f) {
  const std::size_t r = require_clique_order(f);
  if (r < 2) throw DomainError("clique transversal needs r >= 2");
  const auto views = views_of(f, build_complete(r), "copies of K_r");
  std::vector<VertexSet> edges;
  for (const auto& view : views)
    for (const auto& copy : view.blocks) edges.push_back(VertexSet::from_range(f.n(), copy));
  VertexSet set = derandomized_transversal(Hypergraph(f.n(), std::move(edges)));
  return finish(f, std::move(set), "kr_transversal",
                claim(bound_id::kCliqueTransversal, bound_clique_transversal(f.k(), r, f.n())));
}

SDResult sd_pair_matching(const Factoring& f, const Graph& block, const ExactConfig& config) {
  require_k(f, 2, "pair matching");
  const auto a = require_blocks(f.factor(0), block, "copies of the block graph");
  const auto b = require_blocks(f.factor(1), block, "copies of the block graph");
  if (auto bad = one_extendable_violation(block, config))
    throw StructureError("block graph vertex " + std::to_string(*bad) +
                         " lies in no minimum dominating set");
  const std::size_t gamma = domination_number(block, config).value;
  VertexSet set(f.n());
  add_pair_matching(set, a, b, block_extensions(block, config));
  return finish(f, std::move(set), "pair_matching",
                claim(bound_id::kPairMatching, bound_pair_matching(gamma, block.n(), f.n())));
}

SDResult sd_kr_inductive(const Factoring& f) {
  require_k_at_least(f, 2, "clique induction");
  const std::size_t r = require_clique_order(f);
  const auto views = views_of(f, build_complete(r), "copies of K_r");
  return finish(f, kr_inductive_set(views, f.k(), f.n()), "kr_inductive",
                claim(bound_id::kCliqueInductive, bound_kr_inductive(f.k(), r, f.n())));
}

SDResult sd_kr_pairing(const Factoring& f) {
  require_k_at_least(f, 2, "clique pairing");
  const std::size_t r = require_clique_order(f);
  const auto views = views_of(f, build_complete(r), "copies of K_r");
  std::size_t next = 0;
  VertexSet set(f.n());
  if (f.k() % 2 == 1) {
    set = kr_inductive_set(views, 3, f.n());
    next = 3;
  }
  for (; next + 1 < f.k(); next += 2) set |= kr_pair_set(views[next], views[next + 1], f.n());
  return finish(f, std::move(set), "kr_pairing",
                claim(bound_id::kCliquePairing, bound_kr_pairing(f.k(), r, f.n())));
}

SDResult sd_one_factors(const Factoring& f, const ExactConfig& config) {
  require_k_at_least(f, 2, "one-factor construction");
  if (f.n() % 2 != 0) throw DomainError("one-factor construction needs n even");
  for (const auto& g : f.factors())
    if (g.n() > 0 && (g.min_degree() != 1 || g.max_degree() != 1))
      throw StructureError("factor is not a perfect matching");
  const BoundValue bound = bound_one_factors(f.k(), f.n());
  const Graph& g = f.combined();
  const std::size_t target = f.k() % 2 == 0 ? f.k() : f.k() + 1;

  auto complement_of_largest_class = [&](const std::vector<std::size_t>& color, std::size_t count) {
    std::vector<std::size_t> size(count, 0);
    for (std::size_t c : color) ++size[c];
    const std::size_t best =
        static_cast<std::size_t>(std::max_element(size.begin(), size.end()) - size.begin());
    VertexSet set(f.n());
    for (Vertex v = 0; v < f.n(); ++v)
      if (color[v] != best) set.insert(v);
    return set;
  };

  Coloring coloring = greedy_coloring(g);
  if (coloring.count <= target)
    return finish(f, complement_of_largest_class(coloring.color, coloring.count), "one_factors",
                  claim(bound_id::kOneFactors, bound), "greedy-coloring");

  std::vector<std::size_t> color(f.n(), 0);
  bool brooks_ok = true;
  for (const auto& component : g.components()) {
    const Graph h = g.induced(component);
    Coloring local = greedy_coloring(h);
    if (local.count > target) {
      auto brooks = brooks_coloring(h);
      if (!brooks || brooks->count > target) {
        brooks_ok = false;
        break;
      }
      local = *brooks;
    }
    for (std::size_t i = 0; i < component.size(); ++i) color[component[i]] = local.color[i];
  }
  if (brooks_ok && is_proper_coloring(g, color))
    return finish(f, complement_of_largest_class(color, target), "one_factors",
                  claim(bound_id::kOneFactors, bound), "brooks-coloring");

  if (f.n() <= config.sd_cap) {
    VertexSet independent = k_independence_number(g, 0, config).witness;
    return finish(f, independent.complement(), "one_factors", claim(bound_id::kOneFactors, bound),
                  "exact-independent-set");
  }
  return finish(f, complement_of_largest_class(coloring.color, coloring.count), "one_factors",
                claim(bound_id::kOneFactors, bound, false), "greedy-coloring-unproven");
}

SDResult sd_cycle_pair(const Factoring& f) {
  require_k(f, 2, "cycle pair");
  const std::size_t n = f.n();
  const BoundValue bound = bound_cycle_pair(n);
  if (!bound.applicable) throw DomainError("cycle pair " + bound.violated);
  if (n % 2 == 0) {
    for (const auto& g : f.factors())
      if (!is_spanning_cycle(g) && !is_spanning_path(g))
        throw StructureError("factor is neither a spanning cycle nor a spanning path");
    VertexSet set = matched_pair_set(n, alternating_matching(n, traversal_order(f.factor(0))),
                                     alternating_matching(n, traversal_order(f.factor(1))));
    return finish(f, std::move(set), "cycle_pair", claim(bound_id::kCyclePair, bound));
  }
  // Odd n: drop the last vertex from both cycles and match the two paths.
  const Vertex last = n - 1;
  std::vector<Graph> matchings;
  for (const auto& g : f.factors()) {
    if (!is_spanning_cycle(g)) throw StructureError("factor is not a spanning cycle");
    std::vector<Vertex> order = traversal_order(g);
    std::rotate(order.begin(), std::find(order.begin(), order.end(), last) + 1, order.end());
    order.pop_back();
    matchings.push_back(alternating_matching(n, order));
  }
  // The deleted vertex stays unmatched; it is added directly.
  std::vector<Vertex> kept(n - 1);
  for (Vertex v = 0; v + 1 < n; ++v) kept[v] = v;
  VertexSet inner = matched_pair_set(n - 1, matchings[0].induced(kept), matchings[1].induced(kept));
  VertexSet set(n);
  for (Vertex v : inner) set.insert(v);
  set.insert(last);
  return finish(f, std::move(set), "cycle_pair", claim(bound_id::kCyclePair, bound));
}

SDResult sd_cycles_inductive(const Factoring& f) {
  require_k_at_least(f, 2, "cycle induction");
  const std::size_t n = f.n();
  if (n % 6 != 0) throw DomainError("cycle induction needs n divisible by 6");
  for (const auto& g : f.factors())
    if (!is_spanning_cycle(g)) throw StructureError("factor is not a spanning cycle");
  VertexSet set = sd_cycle_pair(f.subset(std::vector<std::size_t>{0, 1})).set;
  for (std::size_t i = 2; i < f.k(); ++i) {
    const std::vector<Vertex> order = traversal_order(f.factor(i));
    std::vector<VertexSet> classes(3, VertexSet(n));
    for (std::size_t j = 0; j < n; ++j) classes[j % 3].insert(order[j]);
    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c)
      if (classes[c].intersection_size(set) > classes[best].intersection_size(set)) best = c;
    set |= classes[best];
  }
  return finish(f, std::move(set), "cycles_inductive",
                claim(bound_id::kCyclesInductive, bound_cycles(f.k(), n)));
}

SDResult sd_c4_three(const Factoring& f) {
  require_k(f, 3, "C_4 construction");
  const std::size_t n = f.n();
  if (n % 4 != 0) throw DomainError("C_4 construction needs n divisible by 4");
  const auto views = views_of(f, build_cycle(4), "4-cycles");
  // Each C_4 copy b0-b1-b2-b3 contains the matching b0b1, b2b3.
  auto matching_of = [&](const CliquePartitionView& view) {
    std::vector<Vertex> order;
    for (const auto& copy : view.blocks) order.insert(order.end(), copy.begin(), copy.end());
    return alternating_matching(n, order);
  };
  VertexSet set = matched_pair_set(n, matching_of(views[0]), matching_of(views[1]));
  const VertexSet base = set;
  const Graph& third = f.factor(2);
  for (const auto& copy : views[2].blocks) {
    std::vector<std::size_t> covered;
    for (std::size_t j = 0; j < 4; ++j)
      if (base.contains(copy[j])) covered.push_back(j);
    if (covered.size() == 1) {
      set.insert(copy[(covered[0] + 2) % 4]);
    } else if (covered.empty()) {
      const std::size_t low =
          static_cast<std::size_t>(std::min_element(copy.begin(), copy.end()) - copy.begin());
      const Vertex first = copy[low];
      set.insert(first);
      set.insert(std::min(copy[(low + 1) % 4], copy[(low + 3) % 4]));
    }
    if (!copy_dominated(third, copy, set)) throw std::logic_error("C_4 copy left undominated");
  }
  return finish(f, std::move(set), "c4_three", claim(bound_id::kC4Three, bound_c4(3, n)));
}

SDResult sd_c5_inductive(const Factoring& f, const ExactConfig& config) {
  require_k_at_least(f, 2, "C_5 induction");
  const std::size_t n = f.n();
  if (n % 5 != 0) throw DomainError("C_5 induction needs n divisible by 5");
  const Graph c5 = build_cycle(5);
  const auto views = views_of(f, c5, "5-cycles");
  VertexSet set(n);
  add_pair_matching(set, views[0], views[1], block_extensions(c5, config));
  std::string note;
  for (std::size_t i = 2; i < f.k(); ++i) {
    // Pad to the previous target, rounded up.
    const std::size_t target = static_cast<std::size_t>(bound_c5(i, n).limit());
    for (Vertex v = 0; v < n && set.size() < target; ++v)
      if (!set.contains(v)) {
        set.insert(v);
        note = "padded";
      }
    const Graph& g = f.factor(i);
    for (const auto& copy : views[i].blocks) {
      if (copy_dominated(g, copy, set)) continue;
      std::vector<std::size_t> covered;
      for (std::size_t j = 0; j < 5; ++j)
        if (set.contains(copy[j])) covered.push_back(j);
      // Base point: the lowest covered vertex, or the lowest vertex of the copy.
      std::size_t anchor = 0;
      for (std::size_t j = 1; j < 5; ++j)
        if (copy[j] < copy[anchor]) anchor = j;
      if (!covered.empty()) {
        anchor = covered[0];
        for (std::size_t j : covered)
          if (copy[j] < copy[anchor]) anchor = j;
      }
      set.insert(copy[anchor]);
      // The two vertices at distance 2 are the ones not adjacent to the anchor.
      const Vertex left = copy[(anchor + 2) % 5];
      const Vertex right = copy[(anchor + 3) % 5];
      set.insert(std::min(left, right));
      if (!copy_dominated(g, copy, set)) throw std::logic_error("C_5 copy left undominated");
    }
  }
  return finish(f, std::move(set), "c5_inductive",
                claim(bound_id::kC5Inductive, bound_c5(f.k(), n)), note);
}

}  // namespace sdom
