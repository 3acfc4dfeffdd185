#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdom/bounds.hpp"
#include "sdom/exact.hpp"
#include "sdom/factoring.hpp"

namespace sdom {

inline constexpr const char* kVersion = "0.1.0";

/// Method names accepted by run_methods, in report order.
const std::vector<std::string>& method_names();

/// Expands "all" and validates names.  Throws DomainError on an unknown name.
std::vector<std::string> expand_methods(const std::vector<std::string>& requested);

/// Runs one method.  Structural or cap errors come back as an outcome with
/// applicable = false rather than an exception.
struct MethodOutcome {
  std::string name;
  bool applicable = true;
  std::string error;
  std::size_t size = 0;
  bool valid = false;
  std::optional<std::string> bound_source;
  std::optional<std::int64_t> bound_limit;
  bool bound_proven = false;
  bool bound_respected = true;
  double seconds = 0.0;
  std::string note;
  std::vector<Vertex> set;

  /// Failed: applicable but invalid, over a proven bound, or crashed.
  bool failed = false;
};

struct RunReport {
  std::string instance;
  std::string hash;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> exact;
  std::vector<MethodOutcome> methods;

  /// Any method failed, or the exact value exceeds a method's size.
  bool failed() const;
};

MethodOutcome run_method(const std::string& name, const Factoring& f, const ExactConfig& config);
RunReport run_methods(const Factoring& f, const std::vector<std::string>& methods,
                      const ExactConfig& config, const std::string& instance = {});

/// One flat row per method; TSV and JSON are both rendered from these, so
/// they always carry the same fields and values.
std::vector<std::string> report_columns();
std::vector<std::map<std::string, std::string>> report_rows(const RunReport& r);
std::string to_tsv(const std::vector<RunReport>& reports);
nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const BoundReport& r);
std::string to_tsv(const BoundReport& r);

/// "k=3,n=8" -> {k: 3, n: 8}.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Families: stars (k, n), treepair (t), onefactorization (k, copies),
/// k5c5 (copies), familyG (half, k, extra), random:<model> (n, k).
Factoring generate_family(const std::string& family, const std::map<std::string, std::string>& params,
                          std::uint64_t seed);

struct ExperimentLine {
  std::string family;
  std::map<std::string, std::string> params;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> methods;
};

/// Line format `family params seeds methods`; '#' starts a comment, params
/// may be "-" for none, seeds are "a-b" ranges or comma lists.
std::vector<ExperimentLine> parse_experiment_config(const std::string& text);

struct FamilySummary {
  std::string family;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<Rational> max_exact_ratio;  ///< max gamma_sd / n
  std::optional<Rational> max_best_ratio;   ///< max (smallest method size) / n
};

struct ExperimentResult {
  std::vector<RunReport> reports;
  std::vector<std::string> instance_families;
  std::vector<std::string> instance_files;  ///< serialized factorings
  std::vector<std::string> generation_errors;
  std::vector<FamilySummary> summary;
  bool failed() const;
};

ExperimentResult run_experiment(const std::vector<ExperimentLine>& lines, const ExactConfig& config);
std::string summary_tsv(const ExperimentResult& result);
nlohmann::json summary_json(const ExperimentResult& result);

}  // namespace sdom
