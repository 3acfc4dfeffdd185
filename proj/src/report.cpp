#include "sdom/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sdom/constructive.hpp"
#include "sdom/errors.hpp"
#include "sdom/extremal.hpp"

namespace sdom {

namespace {

using Runner = std::function<SDResult(const Factoring&, const ExactConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> methods = {
      {"exact", [](const Factoring& f, const ExactConfig& c) { return sd_number_exact(f, c); }},
      {"greedy", [](const Factoring& f, const ExactConfig&) { return greedy_sd(f); }},
      {"cover", [](const Factoring& f, const ExactConfig& c) { return sd_via_cover(f, c); }},
      {"hypergraph", [](const Factoring& f, const ExactConfig&) { return sd_via_hypergraph(f); }},
      {"kr_transversal", [](const Factoring& f, const ExactConfig&) { return sd_kr_transversal(f); }},
      {"pair_matching",
       [](const Factoring& f, const ExactConfig& c) {
         if (f.n() == 0) throw DomainError("pair matching needs n >= 1");
         const Graph& first = f.factor(0);
         const Graph block = first.induced(first.components().front());
         return sd_pair_matching(f, block, c);
       }},
      {"kr_inductive", [](const Factoring& f, const ExactConfig&) { return sd_kr_inductive(f); }},
      {"kr_pairing", [](const Factoring& f, const ExactConfig&) { return sd_kr_pairing(f); }},
      {"one_factors", [](const Factoring& f, const ExactConfig& c) { return sd_one_factors(f, c); }},
      {"cycle_pair", [](const Factoring& f, const ExactConfig&) { return sd_cycle_pair(f); }},
      {"cycles_inductive", [](const Factoring& f, const ExactConfig&) { return sd_cycles_inductive(f); }},
      {"c4_three", [](const Factoring& f, const ExactConfig&) { return sd_c4_three(f); }},
      {"c5_inductive", [](const Factoring& f, const ExactConfig& c) { return sd_c5_inductive(f, c); }},
  };
  return methods;
}

std::string join_vertices(const std::vector<Vertex>& set) {
  std::string out;
  for (Vertex v : set) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string fixed6(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

// Typed JSON value for a report cell.
nlohmann::json typed_cell(const std::string& column, const std::string& text) {
  static const std::set<std::string> integers = {"n", "k", "exact", "size", "bound_limit"};
  static const std::set<std::string> booleans = {"applicable", "valid", "bound_proven",
                                                 "bound_respected"};
  if (text.empty() && (integers.count(column) || column == "bound_source")) return nullptr;
  if (integers.count(column)) return std::stoll(text);
  if (booleans.count(column)) return text == "true";
  if (column == "seconds") return std::stod(text);
  return text;
}

const std::vector<std::string> kInstanceColumns = {"instance", "hash", "n", "k", "exact", "status"};

class ParamReader {
 public:
  explicit ParamReader(const std::map<std::string, std::string>& params) : params_(params) {}

  std::size_t size(const std::string& key, std::optional<std::size_t> fallback = std::nullopt) {
    auto it = params_.find(key);
    if (it == params_.end()) {
      if (!fallback) throw DomainError("missing parameter " + key);
      return *fallback;
    }
    used_.insert(key);
    try {
      std::size_t used = 0;
      const auto value = std::stoull(it->second, &used);
      if (used == it->second.size()) return static_cast<std::size_t>(value);
    } catch (const std::logic_error&) {
    }
    throw DomainError("parameter " + key + " is not a non-negative integer: " + it->second);
  }

  double real(const std::string& key, double fallback) {
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    used_.insert(key);
    try {
      std::size_t used = 0;
      const double value = std::stod(it->second, &used);
      if (used == it->second.size()) return value;
    } catch (const std::logic_error&) {
    }
    throw DomainError("parameter " + key + " is not a number: " + it->second);
  }

  void finish() const {
    for (const auto& [key, value] : params_)
      if (!used_.count(key)) throw DomainError("unknown parameter " + key);
  }

 private:
  const std::map<std::string, std::string>& params_;
  std::set<std::string> used_;
};

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(text);
  std::string item;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("bad seed: " + s);
    return v;
  };
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      seeds.push_back(number(item));
      continue;
    }
    const auto lo = number(item.substr(0, dash));
    const auto hi = number(item.substr(dash + 1));
    if (hi < lo) throw DomainError("empty seed range: " + item);
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  return seeds;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, runner] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> expand_methods(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const auto& name : requested) {
    if (name == "all" || name == "all-applicable") {
      for (const auto& m : method_names())
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      continue;
    }
    if (std::find(method_names().begin(), method_names().end(), name) == method_names().end())
      throw DomainError("unknown method: " + name);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

MethodOutcome run_method(const std::string& name, const Factoring& f, const ExactConfig& config) {
  MethodOutcome out;
  out.name = name;
  auto it = std::find_if(registry().begin(), registry().end(),
                         [&](const auto& entry) { return entry.first == name; });
  if (it == registry().end()) throw DomainError("unknown method: " + name);
  const auto start = std::chrono::steady_clock::now();
  try {
    SDResult r = it->second(f, config);
    out.size = r.size;
    out.valid = r.valid() && is_sd_set(f, r.set);
    out.set = r.set.to_vector();
    out.note = r.note;
    if (r.bound) {
      out.bound_source = r.bound->source;
      out.bound_limit = r.bound->limit();
      out.bound_proven = r.bound->proven;
      out.bound_respected = r.bound_respected();
    }
    out.failed = !out.valid || (out.bound_proven && !out.bound_respected);
  } catch (const Error& e) {
    out.applicable = false;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.failed = true;
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

bool RunReport::failed() const {
  for (const auto& m : methods) {
    if (m.failed) return true;
    if (exact && m.applicable && m.valid && m.size < *exact) return true;
  }
  return false;
}

RunReport run_methods(const Factoring& f, const std::vector<std::string>& methods,
                      const ExactConfig& config, const std::string& instance) {
  RunReport r;
  r.instance = instance;
  r.hash = factoring_hash(f);
  r.n = f.n();
  r.k = f.k();
  for (const auto& name : expand_methods(methods)) {
    r.methods.push_back(run_method(name, f, config));
    const auto& m = r.methods.back();
    if (name == "exact" && m.applicable && m.valid) r.exact = m.size;
  }
  return r;
}

std::vector<std::string> report_columns() {
  std::vector<std::string> cols = kInstanceColumns;
  for (const char* c : {"method", "applicable", "valid", "size", "bound_source", "bound_limit",
                        "bound_proven", "bound_respected", "seconds", "note", "error", "set"})
    cols.emplace_back(c);
  return cols;
}

std::vector<std::map<std::string, std::string>> report_rows(const RunReport& r) {
  std::vector<std::map<std::string, std::string>> rows;
  for (const auto& m : r.methods) {
    std::map<std::string, std::string> row;
    row["instance"] = r.instance;
    row["hash"] = r.hash;
    row["n"] = std::to_string(r.n);
    row["k"] = std::to_string(r.k);
    row["exact"] = r.exact ? std::to_string(*r.exact) : "";
    row["status"] = r.failed() ? "FAILED" : "OK";
    row["method"] = m.name;
    row["applicable"] = flag(m.applicable);
    row["valid"] = flag(m.valid);
    row["size"] = m.applicable ? std::to_string(m.size) : "";
    row["bound_source"] = m.bound_source.value_or("");
    row["bound_limit"] = m.bound_limit ? std::to_string(*m.bound_limit) : "";
    row["bound_proven"] = flag(m.bound_proven);
    row["bound_respected"] = flag(m.bound_respected);
    row["seconds"] = fixed6(m.seconds);
    row["note"] = m.note;
    row["error"] = m.error;
    row["set"] = join_vertices(m.set);
    for (auto& [key, value] : row) std::replace_if(value.begin(), value.end(), [](char c) {
        return c == '\t' || c == '\n';
      }, ' ');
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_tsv(const std::vector<RunReport>& reports) {
  const auto cols = report_columns();
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << cols[i];
  os << '\n';
  for (const auto& r : reports)
    for (const auto& row : report_rows(r)) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << row.at(cols[i]);
      os << '\n';
    }
  return os.str();
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["instance"] = r.instance;
  j["hash"] = r.hash;
  j["n"] = r.n;
  j["k"] = r.k;
  j["exact"] = r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr);
  j["status"] = r.failed() ? "FAILED" : "OK";
  j["methods"] = nlohmann::json::array();
  for (const auto& row : report_rows(r)) {
    nlohmann::json m;
    for (const auto& [column, text] : row)
      if (std::find(kInstanceColumns.begin(), kInstanceColumns.end(), column) == kInstanceColumns.end())
        m[column] = typed_cell(column, text);
    j["methods"].push_back(std::move(m));
  }
  return j;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["n"] = r.descriptor.n;
  j["k"] = r.descriptor.k;
  j["delta"] = r.descriptor.delta ? nlohmann::json(*r.descriptor.delta) : nlohmann::json(nullptr);
  j["structure"] = r.descriptor.tag();
  j["entries"] = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json x;
    x["id"] = e.id;
    x["applicable"] = e.value.applicable;
    x["violated"] = e.value.violated;
    if (e.value.applicable) {
      x["coefficient"] = e.value.coefficient.str();
      x["absolute"] = e.value.absolute.str();
      x["limit"] = e.value.limit();
      x["rounding"] = e.value.rounding == Rounding::Floor ? "floor" : "ceil";
      x["asymptotic_only"] = e.value.asymptotic_only;
    }
    j["entries"].push_back(std::move(x));
  }
  return j;
}

std::string to_tsv(const BoundReport& r) {
  std::ostringstream os;
  os << "id\tapplicable\tcoefficient\tabsolute\tlimit\trounding\tasymptotic_only\tviolated\n";
  for (const auto& e : r.entries) {
    os << e.id << '\t' << flag(e.value.applicable) << '\t';
    if (e.value.applicable)
      os << e.value.coefficient.str() << '\t' << e.value.absolute.str() << '\t' << e.value.limit()
         << '\t' << (e.value.rounding == Rounding::Floor ? "floor" : "ceil") << '\t'
         << flag(e.value.asymptotic_only) << '\t';
    else
      os << "\t\t\t\t\t";
    os << e.value.violated << '\n';
  }
  return os.str();
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  if (text == "-") return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("expected key=value, got " + item);
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

Factoring generate_family(const std::string& family, const std::map<std::string, std::string>& params,
                          std::uint64_t seed) {
  ParamReader p(params);
  auto done = [&](Factoring f) {
    p.finish();
    return f;
  };
  if (family == "stars") {
    const auto k = p.size("k");
    return done(gen_star_factoring(k, p.size("n")));
  }
  if (family == "treepair") return done(gen_tree_pair(p.size("t")));
  if (family == "onefactorization") {
    const auto k = p.size("k");
    const auto copies = p.size("copies", 1);
    return done(k % 2 == 1 ? gen_one_factorization(k, copies) : gen_one_factorization_even(k, copies));
  }
  if (family == "k5c5") return done(gen_k5_two_c5(p.size("copies", 1)));
  if (family == "familyG") {
    const auto half = p.size("half");
    const auto k = p.size("k", 2);
    const double extra = p.real("extra", 0.0);
    if (k < 1) throw DomainError("k must be >= 1");
    std::vector<Graph> factors;
    for (std::size_t i = 0; i < k; ++i) factors.push_back(gen_family_G(half, seed + i, extra));
    return done(Factoring(2 * half, std::move(factors)));
  }
  const std::string prefix = "random:";
  if (family.rfind(prefix, 0) == 0) {
    const RandomModel m = parse_model(family.substr(prefix.size()));
    const auto n = p.size("n");
    return done(gen_random_factoring(n, p.size("k"), m, seed));
  }
  throw DomainError("unknown family: " + family);
}

std::vector<ExperimentLine> parse_experiment_config(const std::string& text) {
  std::vector<ExperimentLine> lines;
  std::stringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::stringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 4)
      throw DomainError("config line " + std::to_string(number) +
                        ": expected `family params seeds methods`");
    ExperimentLine line;
    line.family = tokens[0];
    line.params = parse_key_values(tokens[1]);
    line.seeds = parse_seeds(tokens[2]);
    line.methods = expand_methods(split(tokens[3], ','));
    lines.push_back(std::move(line));
  }
  return lines;
}

bool ExperimentResult::failed() const {
  if (!generation_errors.empty()) return true;
  return std::any_of(reports.begin(), reports.end(), [](const RunReport& r) { return r.failed(); });
}

ExperimentResult run_experiment(const std::vector<ExperimentLine>& lines, const ExactConfig& config) {
  ExperimentResult result;
  std::map<std::string, FamilySummary> summaries;
  std::vector<std::string> order;
  for (const auto& line : lines) {
    if (!summaries.count(line.family)) {
      summaries[line.family].family = line.family;
      order.push_back(line.family);
    }
    FamilySummary& s = summaries[line.family];
    std::string params;
    for (const auto& [key, value] : line.params) params += (params.empty() ? "" : ",") + key + "=" + value;
    for (std::uint64_t seed : line.seeds) {
      const std::string label = line.family + " " + (params.empty() ? "-" : params) + " seed=" +
                                std::to_string(seed);
      std::optional<Factoring> f;
      try {
        f = generate_family(line.family, line.params, seed);
      } catch (const Error& e) {
        result.generation_errors.push_back(label + ": " + e.what());
        ++s.failures;
        continue;
      }
      RunReport r = run_methods(*f, line.methods, config, label);
      ++s.instances;
      if (r.failed()) ++s.failures;
      if (r.exact) {
        const Rational ratio = Rational(*r.exact) / Rational(std::max<std::size_t>(r.n, 1));
        if (!s.max_exact_ratio || ratio > *s.max_exact_ratio) s.max_exact_ratio = ratio;
      }
      std::optional<std::size_t> best;
      for (const auto& m : r.methods)
        if (m.applicable && m.valid && (!best || m.size < *best)) best = m.size;
      if (best) {
        const Rational ratio = Rational(*best) / Rational(std::max<std::size_t>(r.n, 1));
        if (!s.max_best_ratio || ratio > *s.max_best_ratio) s.max_best_ratio = ratio;
      }
      result.instance_families.push_back(line.family);
      result.instance_files.push_back(serialize_factoring(*f));
      result.reports.push_back(std::move(r));
    }
  }
  for (const auto& family : order) result.summary.push_back(summaries[family]);
  return result;
}

std::string summary_tsv(const ExperimentResult& result) {
  std::ostringstream os;
  os << "family\tinstances\tfailures\tmax_exact_ratio\tmax_exact_decimal\tmax_best_ratio\n";
  for (const auto& s : result.summary) {
    os << s.family << '\t' << s.instances << '\t' << s.failures << '\t'
       << (s.max_exact_ratio ? to_string(*s.max_exact_ratio) : "") << '\t'
       << (s.max_exact_ratio ? format_fixed(to_real(*s.max_exact_ratio), 4) : "") << '\t'
       << (s.max_best_ratio ? to_string(*s.max_best_ratio) : "") << '\n';
  }
  return os.str();
}

nlohmann::json summary_json(const ExperimentResult& result) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["status"] = result.failed() ? "FAILED" : "OK";
  j["generation_errors"] = result.generation_errors;
  j["families"] = nlohmann::json::array();
  for (const auto& s : result.summary) {
    nlohmann::json x;
    x["family"] = s.family;
    x["instances"] = s.instances;
    x["failures"] = s.failures;
    x["max_exact_ratio"] = s.max_exact_ratio ? nlohmann::json(to_string(*s.max_exact_ratio)) : nlohmann::json(nullptr);
    x["max_best_ratio"] = s.max_best_ratio ? nlohmann::json(to_string(*s.max_best_ratio)) : nlohmann::json(nullptr);
    j["families"].push_back(std::move(x));
  }
  return j;
}

}  // namespace sdom
