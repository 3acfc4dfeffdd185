#include "sdom/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <sstream>

#include "sdom/errors.hpp"
#include "sdom/random.hpp"

namespace sdom {

namespace {

std::vector<Edge> round_robin_round(std::size_t order, std::size_t round, std::size_t offset) {
  // Circle method: order - 1 points on a circle plus a fixed centre.
  const std::size_t points = order - 1;
  std::vector<Edge> edges{{offset + round, offset + points}};
  for (std::size_t i = 1; i < order / 2; ++i)
    edges.emplace_back(offset + (round + i) % points, offset + (round + points - i) % points);
  return edges;
}

std::vector<Vertex> shuffled_vertices(std::size_t n, Rng& rng) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  return order;
}

Graph random_gnp(std::size_t n, const model::Gnp& m, Rng& rng) {
  for (std::size_t attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(m.p)) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (n == 0 || g.min_degree() >= m.min_degree) return g;
  }
  throw InfeasibleError("G(n,p) never reached the minimum degree after " +
                        std::to_string(kMaxRejections) + " draws");
}

Graph random_regular(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) points.push_back(v);
  for (std::size_t attempt = 0; attempt < kMaxRejections; ++attempt) {
    rng.shuffle(points);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      simple = u != v && edges.emplace(u, v).second;
    }
    if (simple) return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
  throw InfeasibleError("pairing model produced no simple " + std::to_string(d) +
                        "-regular graph after " + std::to_string(kMaxRejections) + " draws");
}

Graph random_blocks(std::size_t n, std::size_t r, bool cycles, Rng& rng) {
  const auto order = shuffled_vertices(n, rng);
  std::vector<Edge> edges;
  for (std::size_t start = 0; start < n; start += r) {
    if (cycles) {
      for (std::size_t i = 0; i < r; ++i)
        edges.emplace_back(order[start + i], order[start + (i + 1) % r]);
    } else {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) edges.emplace_back(order[start + i], order[start + j]);
    }
  }
  return Graph(n, edges);
}

struct FactorDrawer {
  std::size_t n;
  Rng& rng;

  Graph operator()(const model::Gnp& m) const {
    if (!(m.p >= 0.0 && m.p <= 1.0)) throw DomainError("gnp needs 0 <= p <= 1");
    if (n > 0 && m.min_degree >= n) throw DomainError("gnp min degree must be below n");
    return random_gnp(n, m, rng);
  }
  Graph operator()(const model::Regular& m) const {
    if (m.d >= n || (n * m.d) % 2 != 0)
      throw DomainError("regular model needs d < n and n*d even");
    return random_regular(n, m.d, rng);
  }
  Graph operator()(const model::CliqueUnion& m) const {
    if (m.r == 0 || n % m.r != 0) throw DomainError("clique model needs r dividing n");
    return random_blocks(n, m.r, false, rng);
  }
  Graph operator()(const model::CycleUnion& m) const {
    if (m.r < 3 || n % m.r != 0) throw DomainError("cycle model needs r >= 3 dividing n");
    return random_blocks(n, m.r, true, rng);
  }
  Graph operator()(const model::Hamiltonian&) const {
    if (n < 3) throw DomainError("hamiltonian model needs n >= 3");
    return random_blocks(n, n, true, rng);
  }
  Graph operator()(const model::Matching&) const {
    if (n % 2 != 0) throw DomainError("matching model needs n even");
    return random_blocks(n, 2, false, rng);
  }
};

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("model parameter without '=': " + item);
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

template <typename T>
T take(std::map<std::string, std::string>& params, const std::string& key, T fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const std::string text = it->second;
  params.erase(it);
  try {
    std::size_t used = 0;
    T value;
    if constexpr (std::is_same_v<T, double>)
      value = std::stod(text, &used);
    else
      value = static_cast<T>(std::stoull(text, &used));
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw DomainError("bad value for model parameter " + key + ": " + text);
  }
}

}  // namespace

Factoring gen_star_factoring(std::size_t k, std::size_t n) {
  if (k < 2 || n <= k) throw DomainError("star factoring needs n > k >= 2");
  std::vector<Graph> factors;
  for (Vertex c = 0; c < k; ++c) factors.push_back(build_star(n, c));
  return Factoring(n, std::move(factors));
}

Factoring gen_tree_pair(std::size_t t) {
  if (t < 1) throw DomainError("tree pair needs t >= 1");
  const std::size_t n = 3 * t;
  auto u = [](std::size_t i) { return 3 * i; };
  auto v = [](std::size_t i) { return 3 * i + 1; };
  auto z = [](std::size_t i) { return 3 * i + 2; };
  std::vector<Edge> first, second;
  for (std::size_t i = 0; i < t; ++i) {
    if (i + 1 < t) {
      first.emplace_back(u(i), u(i + 1));
      second.emplace_back(z(i), z(i + 1));
    }
    first.emplace_back(u(i), v(i));
    first.emplace_back(u(i), z(i));
    second.emplace_back(z(i), u(i));
    second.emplace_back(z(i), v(i));
  }
  return Factoring(n, {Graph(n, first), Graph(n, second)});
}

Factoring gen_one_factorization(std::size_t k, std::size_t copies) {
  if (k % 2 == 0) throw DomainError("one-factorization of K_{k+1} needs k odd");
  if (copies < 1) throw DomainError("copies must be >= 1");
  const std::size_t order = k + 1;
  const std::size_t n = order * copies;
  std::vector<Graph> factors;
  for (std::size_t round = 0; round < k; ++round) {
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < copies; ++c) {
      auto part = round_robin_round(order, round, c * order);
      edges.insert(edges.end(), part.begin(), part.end());
    }
    factors.emplace_back(n, edges);
  }
  return Factoring(n, std::move(factors));
}

Factoring gen_one_factorization_even(std::size_t k, std::size_t copies) {
  if (k < 2 || k % 2 != 0) throw DomainError("even variant needs k even and >= 2");
  const Factoring base = gen_one_factorization(k - 1, copies);
  std::vector<Graph> factors = base.factors();
  factors.push_back(factors.back());
  return Factoring(base.n(), std::move(factors));
}

Factoring gen_k5_two_c5(std::size_t copies) {
  if (copies < 1) throw DomainError("copies must be >= 1");
  const std::size_t n = 5 * copies;
  std::vector<Edge> first, second;
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t o = 5 * c;
    for (std::size_t i = 0; i < 5; ++i) {
      first.emplace_back(o + i, o + (i + 1) % 5);
      second.emplace_back(o + i, o + (i + 2) % 5);
    }
  }
  return Factoring(n, {Graph(n, first), Graph(n, second)});
}

RandomModel parse_model(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto params = parse_params(colon == std::string::npos ? std::string() : text.substr(colon + 1));
  RandomModel m;
  if (name == "gnp") {
    model::Gnp g;
    g.p = take(params, "p", g.p);
    g.min_degree = take(params, "mindeg", g.min_degree);
    m = g;
  } else if (name == "regular") {
    m = model::Regular{take(params, "d", model::Regular{}.d)};
  } else if (name == "clique") {
    m = model::CliqueUnion{take(params, "r", model::CliqueUnion{}.r)};
  } else if (name == "cycles") {
    m = model::CycleUnion{take(params, "r", model::CycleUnion{}.r)};
  } else if (name == "hamiltonian") {
    m = model::Hamiltonian{};
  } else if (name == "matching") {
    m = model::Matching{};
  } else {
    throw DomainError("unknown random model: " + name);
  }
  if (!params.empty()) throw DomainError("unknown parameter for model " + name + ": " + params.begin()->first);
  return m;
}

std::string model_name(const RandomModel& m) {
  struct Namer {
    std::string operator()(const model::Gnp& g) const {
      std::ostringstream os;
      os << "gnp:p=" << g.p << ",mindeg=" << g.min_degree;
      return os.str();
    }
    std::string operator()(const model::Regular& r) const { return "regular:d=" + std::to_string(r.d); }
    std::string operator()(const model::CliqueUnion& c) const { return "clique:r=" + std::to_string(c.r); }
    std::string operator()(const model::CycleUnion& c) const { return "cycles:r=" + std::to_string(c.r); }
    std::string operator()(const model::Hamiltonian&) const { return "hamiltonian"; }
    std::string operator()(const model::Matching&) const { return "matching"; }
  };
  return std::visit(Namer{}, m);
}

Factoring gen_random_factoring(std::size_t n, std::size_t k, const RandomModel& m,
                               std::uint64_t seed) {
  if (k < 1) throw DomainError("k must be >= 1");
  Rng rng(seed);
  std::vector<Graph> factors;
  for (std::size_t i = 0; i < k; ++i) factors.push_back(std::visit(FactorDrawer{n, rng}, m));
  return Factoring(n, std::move(factors));
}

Graph gen_family_G(std::size_t half, std::uint64_t seed, double extra_p) {
  if (half < 1) throw DomainError("family G needs half >= 1");
  Rng rng(seed);
  const std::size_t n = 2 * half;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < half; ++i) edges.emplace_back(i, half + i);
  std::vector<Vertex> order(half);
  for (std::size_t i = 0; i < half; ++i) order[i] = half + i;
  rng.shuffle(order);
  for (std::size_t i = 1; i < half; ++i) edges.emplace_back(order[rng.below(i)], order[i]);
  if (extra_p > 0.0)
    for (Vertex a = half; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng.bernoulli(extra_p)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Hypergraph gen_random_uniform_hypergraph(std::size_t n, std::size_t r, std::size_t m,
                                         std::uint64_t seed) {
  if (r < 1 || r > n) throw DomainError("uniform hypergraph needs 1 <= r <= n");
  Rng rng(seed);
  std::set<std::vector<Vertex>> seen;
  std::vector<VertexSet> edges;
  std::size_t failures = 0;
  auto pool = shuffled_vertices(n, rng);
  while (edges.size() < m) {
    rng.shuffle(pool);
    std::vector<Vertex> e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
    std::sort(e.begin(), e.end());
    if (!seen.insert(e).second) {
      if (++failures > kMaxRejections) throw InfeasibleError("too few distinct r-subsets for m edges");
      continue;
    }
    edges.push_back(VertexSet::from_range(n, e));
  }
  return Hypergraph(n, std::move(edges));
}

ProbeReport probe_conjecture(std::size_t n, std::size_t trials, std::uint64_t seed,
                             const ExactConfig& config) {
  ProbeReport report;
  report.n = n;
  if (trials == 0) return report;
  if (n < 3) throw DomainError("probe needs n >= 3");
  if (n > config.sd_cap) throw CapExceededError(n, config.sd_cap);
  const RandomModel models[] = {model::Hamiltonian{}, model::Regular{2},
                                model::Gnp{std::min(1.0, 4.0 / static_cast<double>(n)), 2}};
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const RandomModel& m = models[t % 3];
    const Factoring f = gen_random_factoring(n, 2, m, rng.next());
    const std::size_t gamma = sd_number_exact(f, config).size;
    report.trials.push_back({model_name(m), gamma});
    const Rational ratio = Rational(Integer(gamma)) / Rational(Integer(n));
    if (!report.max_ratio || ratio > *report.max_ratio) {
      report.max_ratio = ratio;
      report.best = f;
    }
    if (5 * gamma > 3 * n) report.candidates.push_back(f);
  }
  return report;
}

}  // namespace sdom
