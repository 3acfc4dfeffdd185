#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdom/errors.hpp"
#include "sdom/graph.hpp"

namespace sdom {

/// k >= 1 graphs sharing the vertex set 0..n-1.  The combined graph (edge
/// union of the factors) is built on first use and shared between copies.
class Factoring {
 public:
  /// Throws DomainError when factors is empty or a factor has the wrong
  /// vertex count.
  Factoring(std::size_t n, std::vector<Graph> factors);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return factors_.size(); }
  const Graph& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Graph>& factors() const noexcept { return factors_; }

  /// (delta(F_1), ..., delta(F_k)).
  const std::vector<std::size_t>& min_degrees() const noexcept { return min_degrees_; }
  /// min_i delta(F_i).
  std::size_t delta() const noexcept { return delta_; }

  const Graph& combined() const;

  /// Factoring made of the factors at the given indices, in that order.
  Factoring subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Factoring& a, const Factoring& b) {
    return a.n_ == b.n_ && a.factors_ == b.factors_;
  }

 private:
  struct CombinedCache {
    std::once_flag once;
    std::optional<Graph> graph;
  };

  std::size_t n_;
  std::vector<Graph> factors_;
  std::vector<std::size_t> min_degrees_;
  std::size_t delta_ = 0;
  std::shared_ptr<CombinedCache> cache_;
};

/// Graph whose edges are exactly the union of the factors' edges.
const Graph& combined_graph(const Factoring& f);

enum class ParseErrorKind {
  MalformedHeader,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  FactorCountMismatch,
  EdgeCountMismatch,
  MalformedEdge,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based physical line number; 0 means end of input.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Reads the line-oriented `sdfactoring 1` text format.
Factoring parse_factoring(std::string_view text);
/// Writes the normalized form: edges with u < v in ascending order.
std::string serialize_factoring(const Factoring& f);

Factoring read_factoring_file(const std::string& path);
void write_factoring_file(const Factoring& f, const std::string& path);

/// 64-bit FNV-1a of the serialized text, as 16 hex digits.
std::string factoring_hash(const Factoring& f);

}  // namespace sdom
