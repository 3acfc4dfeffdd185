#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdom/factoring.hpp"
#include "sdom/numeric.hpp"
#include "sdom/vertex_set.hpp"

namespace sdom {

/// How a real-valued bound turns into an integer size limit.
enum class Rounding { Floor, Ceil };

/// Upper bound a construction claims for the size of its output.
struct ClaimedBound {
  std::string source;  ///< bound identifier, see bounds.hpp
  Value value;         ///< absolute bound (coefficient times n)
  Rounding rounding = Rounding::Floor;
  /// False when the producing path does not carry a proof of the bound
  /// (it is then only checked after the fact).
  bool proven = true;

  std::int64_t limit() const { return rounding == Rounding::Floor ? value.floor() : value.ceil(); }
  bool admits(std::size_t size) const { return static_cast<std::int64_t>(size) <= limit(); }
};

/// A vertex set together with its per-factor domination certificate.
struct SDResult {
  VertexSet set;
  std::size_t size = 0;
  std::string method;
  std::vector<bool> per_factor_ok;
  std::optional<ClaimedBound> bound;
  /// Which internal path produced the set, when a method has several.
  std::string note;

  bool valid() const;
  bool bound_respected() const { return !bound || bound->admits(size); }
};

bool is_dominating_set(const Graph& g, const VertexSet& s);
bool is_sd_set(const Factoring& f, const VertexSet& s);

/// Fills size and per_factor_ok from the factoring.
SDResult make_result(const Factoring& f, VertexSet set, std::string method,
                     std::optional<ClaimedBound> bound = std::nullopt, std::string note = {});

}  // namespace sdom
