// Command-line front end: generate instances, solve and construct SD-sets,
// evaluate bounds, print the bound tables, verify sets and run batches.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sdom/bounds.hpp"
#include "sdom/errors.hpp"
#include "sdom/extremal.hpp"
#include "sdom/report.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sdom::Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw sdom::Error("cannot write " + path.string());
  out << text;
}

std::string safe_name(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

struct Global {
  std::uint64_t seed = 1;
  std::size_t cap = sdom::ExactConfig{}.sd_cap;
  std::size_t cover_cap = sdom::ExactConfig{}.cover_cap;
  std::string format = "tsv";
  bool deterministic = false;

  sdom::ExactConfig exact() const { return {cap, cover_cap}; }
};

int cmd_gen(const Global& g, const std::string& family, const std::string& params,
            const std::string& out) {
  const sdom::Factoring f = sdom::generate_family(family, sdom::parse_key_values(params), g.seed);
  if (out.empty()) {
    std::cout << sdom::serialize_factoring(f);
  } else {
    sdom::write_factoring_file(f, out);
  }
  std::cerr << sdom::factoring_hash(f) << '\n';
  return 0;
}

int cmd_solve(const Global& g, const std::string& path, const std::string& methods) {
  const sdom::Factoring f = sdom::read_factoring_file(path);
  const sdom::RunReport r = sdom::run_methods(f, split_list(methods), g.exact(), path);
  if (g.format == "json")
    std::cout << sdom::to_json(r).dump(2) << '\n';
  else
    std::cout << sdom::to_tsv({r});
  return r.failed() ? kExitFailed : 0;
}

int cmd_bounds(const Global& g, const std::string& path, std::size_t n, std::size_t k,
               std::optional<std::size_t> delta, const std::string& structure, bool gammas) {
  sdom::InstanceDescriptor d;
  if (!path.empty()) {
    d = sdom::describe(sdom::read_factoring_file(path), gammas);
  } else {
    d.n = n;
    d.k = k;
    d.delta = delta;
    for (const auto& s : split_list(structure)) {
      if (s == "regular") d.regular = true;
      else if (s == "one_factors") d.one_factors = true, d.clique_order = 2, d.regular = true;
      else if (s == "cycles") d.hamiltonian_cycles = true;
      else if (s == "c4") d.c4_union = true;
      else if (s == "c5") d.c5_union = true;
      else if (s.rfind("clique", 0) == 0 && s.size() > 6) d.clique_order = std::stoul(s.substr(6));
      else throw sdom::DomainError("unknown structure: " + s);
    }
  }
  const sdom::BoundReport report = sdom::build_bound_report(d);
  if (g.format == "json")
    std::cout << sdom::to_json(report).dump(2) << '\n';
  else
    std::cout << sdom::to_tsv(report);
  return 0;
}

int cmd_verify(const std::string& path, const std::string& vertices) {
  const sdom::Factoring f = sdom::read_factoring_file(path);
  sdom::VertexSet set(f.n());
  for (const auto& v : split_list(vertices)) {
    std::size_t used = 0;
    unsigned long x = 0;
    try {
      x = std::stoul(v, &used);
    } catch (const std::logic_error&) {
    }
    if (used == 0 || used != v.size() || x >= f.n()) throw sdom::DomainError("bad vertex: " + v);
    set.insert(x);
  }
  bool ok = true;
  for (std::size_t i = 0; i < f.k(); ++i) {
    const bool dominates = sdom::is_dominating_set(f.factor(i), set);
    ok = ok && dominates;
    std::cout << "factor " << i << '\t' << (dominates ? "dominated" : "NOT dominated") << '\n';
  }
  std::cout << "size\t" << set.size() << '\n' << (ok ? "SD-set" : "not an SD-set") << '\n';
  return ok ? 0 : kExitFailed;
}

int cmd_experiment(const Global& g, const std::string& config, const std::string& out) {
  const auto lines = sdom::parse_experiment_config(read_text(config));
  const sdom::ExperimentResult result = sdom::run_experiment(lines, g.exact());
  fs::create_directories(out);
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    const std::string stem = std::to_string(i) + "_" + safe_name(result.instance_families[i]);
    write_text(fs::path(out) / (stem + ".sdf"), result.instance_files[i]);
    if (g.format == "json")
      write_text(fs::path(out) / (stem + ".json"), sdom::to_json(r).dump(2) + "\n");
    else
      write_text(fs::path(out) / (stem + ".tsv"), sdom::to_tsv({r}));
  }
  write_text(fs::path(out) / "summary.tsv", sdom::summary_tsv(result));
  write_text(fs::path(out) / "summary.json", sdom::summary_json(result).dump(2) + "\n");
  std::cout << sdom::summary_tsv(result);
  for (const auto& e : result.generation_errors) std::cerr << "error: " << e << '\n';
  return result.failed() ? kExitFailed : 0;
}

int cmd_probe(const Global& g, std::size_t n, std::size_t trials, const std::string& out) {
  const sdom::ProbeReport report = sdom::probe_conjecture(n, trials, g.seed, g.exact());
  std::cout << "n\t" << n << "\ntrials\t" << report.trials.size() << "\nmax_ratio\t"
            << (report.max_ratio ? sdom::to_string(*report.max_ratio) : "-") << "\ncandidates\t"
            << report.candidates.size() << '\n';
  if (!out.empty()) {
    fs::create_directories(out);
    for (std::size_t i = 0; i < report.candidates.size(); ++i)
      sdom::write_factoring_file(report.candidates[i],
                                 (fs::path(out) / ("candidate_" + std::to_string(i) + ".sdf")).string());
    if (report.best) sdom::write_factoring_file(*report.best, (fs::path(out) / "best.sdf").string());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous domination: instances, exact values, constructions and bounds"};
  app.set_version_flag("--version", sdom::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--cap", g.cap, "Vertex cap for the exact solvers")->capture_default_str();
  app.add_option("--cover-cap", g.cover_cap, "Vertex cap for exact t-vertex covers, t >= 1")
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_flag("--deterministic", g.deterministic,
               "Single-threaded search order (the only mode; accepted for scripts)");

  std::string family, params = "-", out, path, methods = "all", structure, vertices, config;
  std::size_t n = 0, k = 0, trials = 0;
  std::optional<std::size_t> delta;
  bool gammas = false;

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("family", family, "stars, treepair, onefactorization, k5c5, familyG, random:<model>")
      ->required();
  gen->add_option("params", params, "key=value list, e.g. k=3,n=8");
  gen->add_option("-o,--out", out, "Output file (stdout when omitted)");

  auto* solve = app.add_subcommand("solve", "Run exact and constructive methods on an instance");
  solve->add_option("instance", path)->required()->check(CLI::ExistingFile);
  solve->add_option("-m,--methods", methods, "Comma list of methods or 'all'")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound for an instance or descriptor");
  bounds->add_option("instance", path)->check(CLI::ExistingFile);
  bounds->add_option("--n", n);
  bounds->add_option("--k", k);
  bounds->add_option("--delta", delta);
  bounds->add_option("--structure", structure, "regular, one_factors, cycles, c4, c5, clique<r>");
  bounds->add_flag("--gammas", gammas, "Solve per-factor domination numbers for the sandwich bound");

  app.add_subcommand("tables", "Print the four bound tables as TSV");

  auto* verify = app.add_subcommand("verify", "Check that a vertex set dominates every factor");
  verify->add_option("instance", path)->required()->check(CLI::ExistingFile);
  verify->add_option("vertices", vertices, "Comma list of vertices")->required();

  auto* experiment = app.add_subcommand("experiment", "Run a batch described by a config file");
  experiment->add_option("config", config)->required()->check(CLI::ExistingFile);
  experiment->add_option("-o,--out", out, "Report directory")->required();

  auto* probe = app.add_subcommand("probe", "Random search over two-factor minimum-degree-2 instances");
  probe->add_option("--n", n)->required();
  probe->add_option("--trials", trials)->required();
  probe->add_option("-o,--out", out, "Directory for candidate instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(g, family, params, out);
    if (*solve) return cmd_solve(g, path, methods);
    if (*bounds) return cmd_bounds(g, path, n, k, delta, structure, gammas);
    if (app.got_subcommand("tables")) {
      std::cout << sdom::tables_tsv();
      return 0;
    }
    if (*verify) return cmd_verify(path, vertices);
    if (*experiment) return cmd_experiment(g, config, out);
    if (*probe) return cmd_probe(g, n, trials, out);
  } catch (const sdom::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
