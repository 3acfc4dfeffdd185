#include "sdom/result.hpp"

#include <algorithm>

#include "sdom/errors.hpp"

namespace sdom {

bool SDResult::valid() const {
  return !per_factor_ok.empty() &&
         std::all_of(per_factor_ok.begin(), per_factor_ok.end(), [](bool ok) { return ok; });
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw DomainError("vertex set universe does not match graph order");
  return g.closed_neighborhood(s).size() == g.n();
}

bool is_sd_set(const Factoring& f, const VertexSet& s) {
  return std::all_of(f.factors().begin(), f.factors().end(),
                     [&](const Graph& g) { return is_dominating_set(g, s); });
}

SDResult make_result(const Factoring& f, VertexSet set, std::string method,
                     std::optional<ClaimedBound> bound, std::string note) {
  SDResult r;
  r.size = set.size();
  for (const auto& g : f.factors()) r.per_factor_ok.push_back(is_dominating_set(g, set));
  r.set = std::move(set);
  r.method = std::move(method);
  r.bound = std::move(bound);
  r.note = std::move(note);
  return r;
}

}  // namespace sdom
