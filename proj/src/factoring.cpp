#include "sdom/factoring.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace sdom {

Factoring::Factoring(std::size_t n, std::vector<Graph> factors)
    : n_(n), factors_(std::move(factors)), cache_(std::make_shared<CombinedCache>()) {
  if (factors_.empty()) throw DomainError("a factoring needs at least one factor");
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].n() != n_)
      throw DomainError("factor " + std::to_string(i + 1) + " has " +
                        std::to_string(factors_[i].n()) + " vertices, expected " +
                        std::to_string(n_));
  for (const auto& g : factors_) min_degrees_.push_back(g.min_degree());
  delta_ = *std::min_element(min_degrees_.begin(), min_degrees_.end());
}

const Graph& Factoring::combined() const {
  std::call_once(cache_->once, [this] {
    std::vector<Edge> edges;
    for (const auto& g : factors_) {
      auto e = g.edges();
      edges.insert(edges.end(), e.begin(), e.end());
    }
    cache_->graph.emplace(n_, edges);
  });
  return *cache_->graph;
}

Factoring Factoring::subset(std::span<const std::size_t> indices) const {
  std::vector<Graph> chosen;
  for (std::size_t i : indices) chosen.push_back(factors_.at(i));
  return Factoring(n_, std::move(chosen));
}

const Graph& combined_graph(const Factoring& f) { return f.combined(); }

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::VertexOutOfRange: return "vertex index out of range";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::FactorCountMismatch: return "factor count mismatch";
    case ParseErrorKind::EdgeCountMismatch: return "edge count mismatch";
    case ParseErrorKind::MalformedEdge: return "malformed edge";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : Error((line == 0 ? std::string("end of input") : "line " + std::to_string(line)) + ": " +
            to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) parsed.tokens.push_back(line.substr(start, pos - start));
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

std::optional<std::uint64_t> to_count(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::uint64_t expect_keyword_count(const Line& line, std::string_view keyword) {
  if (line.tokens.size() != 2 || line.tokens[0] != keyword)
    throw ParseError(ParseErrorKind::MalformedHeader, line.number,
                     "expected '" + std::string(keyword) + " <count>'");
  auto value = to_count(line.tokens[1]);
  if (!value)
    throw ParseError(ParseErrorKind::MalformedHeader, line.number,
                     "'" + std::string(line.tokens[1]) + "' is not a non-negative integer");
  return *value;
}

}  // namespace

Factoring parse_factoring(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t at = 0;
  auto next = [&](ParseErrorKind kind, const char* what) -> const Line& {
    if (at >= lines.size()) throw ParseError(kind, 0, std::string("missing ") + what);
    return lines[at++];
  };

  const Line& magic = next(ParseErrorKind::MalformedHeader, "'sdfactoring 1' header");
  if (magic.tokens.size() != 2 || magic.tokens[0] != "sdfactoring" || magic.tokens[1] != "1")
    throw ParseError(ParseErrorKind::MalformedHeader, magic.number,
                     "expected 'sdfactoring 1'");
  const std::uint64_t n = expect_keyword_count(next(ParseErrorKind::MalformedHeader, "'n' line"), "n");
  const Line& k_line = next(ParseErrorKind::MalformedHeader, "'k' line");
  const std::uint64_t k = expect_keyword_count(k_line, "k");
  if (n == 0) throw ParseError(ParseErrorKind::MalformedHeader, lines[1].number, "n must be >= 1");
  if (k == 0) throw ParseError(ParseErrorKind::MalformedHeader, k_line.number, "k must be >= 1");

  std::vector<Graph> factors;
  for (std::uint64_t index = 1; index <= k; ++index) {
    if (at >= lines.size())
      throw ParseError(ParseErrorKind::FactorCountMismatch, 0,
                       "header declares k = " + std::to_string(k) + " but only " +
                           std::to_string(index - 1) + " factor blocks present");
    const Line& head = lines[at++];
    if (head.tokens.size() != 4 || head.tokens[0] != "factor" || head.tokens[2] != "m")
      throw ParseError(ParseErrorKind::MalformedHeader, head.number,
                       "expected 'factor " + std::to_string(index) + " m <M>'");
    auto declared_index = to_count(head.tokens[1]);
    auto m = to_count(head.tokens[3]);
    if (!declared_index || !m)
      throw ParseError(ParseErrorKind::MalformedHeader, head.number, "non-numeric factor header");
    if (*declared_index != index)
      throw ParseError(ParseErrorKind::MalformedHeader, head.number,
                       "factor index " + std::to_string(*declared_index) + ", expected " +
                           std::to_string(index));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::uint64_t e = 0; e < *m; ++e) {
      if (at >= lines.size())
        throw ParseError(ParseErrorKind::EdgeCountMismatch, 0,
                         "factor " + std::to_string(index) + " declares " + std::to_string(*m) +
                             " edges, found " + std::to_string(e));
      const Line& line = lines[at++];
      if (!line.tokens.empty() && line.tokens[0] == "factor")
        throw ParseError(ParseErrorKind::EdgeCountMismatch, line.number,
                         "factor " + std::to_string(index) + " declares " + std::to_string(*m) +
                             " edges, found " + std::to_string(e));
      if (line.tokens.size() != 2)
        throw ParseError(ParseErrorKind::MalformedEdge, line.number, "expected '<u> <v>'");
      auto u = to_count(line.tokens[0]);
      auto v = to_count(line.tokens[1]);
      if (!u || !v)
        throw ParseError(ParseErrorKind::MalformedEdge, line.number,
                         "edge endpoints must be non-negative integers");
      if (*u >= n || *v >= n)
        throw ParseError(ParseErrorKind::VertexOutOfRange, line.number,
                         "endpoint " + std::to_string(std::max(*u, *v)) + " >= n = " +
                             std::to_string(n));
      if (*u == *v)
        throw ParseError(ParseErrorKind::SelfLoop, line.number,
                         "self-loop at vertex " + std::to_string(*u));
      Edge edge{std::min(*u, *v), std::max(*u, *v)};
      if (!seen.insert(edge).second)
        throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                         "edge " + std::to_string(edge.first) + " " +
                             std::to_string(edge.second) + " repeated in factor " +
                             std::to_string(index));
      edges.push_back(edge);
    }
    factors.emplace_back(n, edges);
  }
  if (at < lines.size())
    throw ParseError(ParseErrorKind::FactorCountMismatch, lines[at].number,
                     "content after the " + std::to_string(k) + " declared factor blocks");
  return Factoring(n, std::move(factors));
}

std::string serialize_factoring(const Factoring& f) {
  std::ostringstream os;
  os << "sdfactoring 1\n" << "n " << f.n() << "\n" << "k " << f.k() << "\n";
  for (std::size_t i = 0; i < f.k(); ++i) {
    const auto edges = f.factor(i).edges();
    os << "factor " << i + 1 << " m " << edges.size() << "\n";
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  }
  return os.str();
}

Factoring read_factoring_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open factoring file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_factoring(buffer.str());
}

void write_factoring_file(const Factoring& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write factoring file '" + path + "'");
  out << serialize_factoring(f);
}

std::string factoring_hash(const Factoring& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_factoring(f)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

}  // namespace sdom
