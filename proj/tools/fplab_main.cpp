// Command-line front end: check a data file against all necessary
// conditions, enumerate and classify bounded-weight candidates, list or
// export admissible multigraphs, and emit the shipped example data sets.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fplab/families.hpp"
#include "fplab/genus.hpp"
#include "fplab/localization.hpp"
#include "fplab/multigraph.hpp"
#include "fplab/search.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFilterFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_check(const std::string& path, bool full_eval) {
  fplab::FixedPointData d = fplab::parse_data(read_input(path));
  fplab::SearchSpec spec;
  spec.full_eval = full_eval;
  fplab::FilterReport report = fplab::run_pipeline(d, spec);
  for (const auto& [name, verdict] : report.entries) {
    std::cout << name << ": " << verdict.status_name();
    if (!verdict.certificate.empty()) std::cout << " (" << verdict.certificate << ")";
    std::cout << "\n";
  }
  fplab::ChiOutcome chi = fplab::chi_vector(d);
  if (chi.ok()) {
    std::cout << "chi^i:";
    for (const auto& v : chi.chi->values) std::cout << " " << fplab::rat_str(v);
    std::cout << "\n";
    fplab::ClassicalInvariants inv = fplab::classical_invariants(*chi.chi);
    std::cout << "Todd=" << fplab::rat_str(inv.todd)
              << " Euler=" << fplab::rat_str(inv.euler)
              << " signature=" << fplab::rat_str(inv.signature) << "\n";
  } else {
    std::cout << "chi_y: unavailable (chi^" << chi.non_constant_index
              << " is not constant)\n";
  }
  auto matches = fplab::match_family(d);
  if (matches.empty()) {
    std::cout << "family: unclassified\n";
  } else {
    for (const auto& m : matches) {
      std::cout << "family: " << fplab::family_name(m.family) << "(";
      for (size_t i = 0; i < m.params.size(); ++i)
        std::cout << (i ? "," : "") << m.params[i];
      std::cout << ") "
                << (m.orientation == fplab::Orientation::Forward ? "forward" : "reversed")
                << "\n";
    }
  }
  return report.survivor ? kExitPass : kExitFilterFail;
}

int cmd_enumerate(int dim, int points, std::int64_t max_weight, std::optional<int> todd,
                  bool full_eval, const std::string& jsonl_path) {
  if (dim <= 0 || dim % 2 != 0) {
    std::cerr << "error: OddDimension: --dim must be a positive even integer\n";
    return kExitUsage;
  }
  fplab::SearchSpec spec;
  spec.n = dim / 2;
  spec.k = points;
  spec.max_weight = max_weight;
  spec.todd = todd;
  spec.full_eval = full_eval;
  fplab::ClassificationReport report = fplab::classify_all(spec);

  if (!jsonl_path.empty()) {
    std::ofstream out(jsonl_path);
    if (!out) {
      std::cerr << "error: cannot write '" << jsonl_path << "'\n";
      return kExitUsage;
    }
    out << fplab::report_to_jsonl(report);
  }

  // family(params) -> survivor count, stable-sorted by family then params
  std::map<std::string, int> by_family;
  int unclassified = 0;
  for (const auto& rec : report.survivors) {
    if (rec.matches.empty()) {
      ++unclassified;
      continue;
    }
    std::ostringstream key;
    const auto& m = rec.matches.front();
    key << fplab::family_name(m.family) << "(";
    for (size_t i = 0; i < m.params.size(); ++i) key << (i ? "," : "") << m.params[i];
    key << ")";
    by_family[key.str()] += 1;
  }
  std::cout << "candidates: " << report.candidate_count << "\n";
  std::cout << "survivors: " << report.survivors.size() << "\n";
  for (const auto& [key, count] : by_family) std::cout << "  " << key << ": " << count << "\n";
  std::cout << "unclassified: " << unclassified << "\n";
  if (unclassified > 0) {
    for (const auto& rec : report.survivors)
      if (rec.matches.empty()) std::cout << "  " << fplab::serialize_data(rec.data) << "\n";
  }
  return kExitPass;
}

int cmd_graphs(const std::string& path, const std::string& dot_dir) {
  fplab::FixedPointData d = fplab::parse_data(read_input(path));
  fplab::FilterVerdict balance = fplab::weight_balance_check(d);
  if (!balance.passed()) {
    std::cerr << "error: " << balance.certificate << "\n";
    return kExitFilterFail;
  }
  std::vector<fplab::Multigraph> graphs = fplab::enumerate_admissible(d);
  std::cout << "admissible multigraphs: " << graphs.size() << "\n";
  for (size_t i = 0; i < graphs.size(); ++i) {
    std::cout << "multigraph " << (i + 1) << ":\n";
    for (const auto& e : graphs[i].edges) {
      std::cout << "  " << graphs[i].vertices[static_cast<size_t>(e.from)] << " -> "
                << graphs[i].vertices[static_cast<size_t>(e.to)] << " [" << e.weight << "]\n";
    }
  }
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (size_t i = 0; i < graphs.size(); ++i) {
      std::filesystem::path file =
          std::filesystem::path(dot_dir) / ("multigraph_" + std::to_string(i + 1) + ".dot");
      std::ofstream out(file);
      out << fplab::to_dot(graphs[i]);
    }
    std::cout << "wrote " << graphs.size() << " DOT file(s) to " << dot_dir << "\n";
  }
  return graphs.empty() ? kExitFilterFail : kExitPass;
}

int cmd_examples(const std::string& name, std::vector<std::int64_t> params) {
  if (name == "list") {
    for (const auto& [n, defaults] : fplab::shipped_examples()) {
      std::cout << n << " (defaults:";
      for (std::int64_t v : defaults) std::cout << " " << v;
      std::cout << ")\n";
    }
    return kExitPass;
  }
  if (params.empty()) {
    for (const auto& [n, defaults] : fplab::shipped_examples())
      if (n == name) params = defaults;
  }
  fplab::FixedPointData d = fplab::example_data(name, params);
  std::cout << fplab::serialize_data(d) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker and classifier for circle-action fixed point data"};
  app.require_subcommand(1);

  std::string check_path;
  bool check_full = false;
  auto* check = app.add_subcommand("check", "run all filters on a data file ('-' = stdin)");
  check->add_option("path", check_path, "JSON data file")->required();
  check->add_flag("--full-eval", check_full, "do not stop at the first failing filter");

  int dim = 0, points = 0;
  std::int64_t max_weight = 0;
  int todd_value = -1;
  bool enum_full = false;
  std::string jsonl_path;
  auto* enumerate = app.add_subcommand("enumerate", "classify all bounded-weight data");
  enumerate->add_option("--dim", dim, "manifold dimension (even)")->required();
  enumerate->add_option("--points", points, "number of fixed points")->required();
  enumerate->add_option("--max-weight", max_weight, "bound on |weight|")->required();
  enumerate->add_option("--todd", todd_value, "restrict to N^0 == value (0 or 1)");
  enumerate->add_flag("--full-eval", enum_full, "evaluate every filter for every candidate");
  enumerate->add_option("--jsonl", jsonl_path, "write one JSON object per survivor");

  std::string graphs_path, dot_dir;
  auto* graphs = app.add_subcommand("graphs", "enumerate admissible multigraphs");
  graphs->add_option("path", graphs_path, "JSON data file ('-' = stdin)")->required();
  graphs->add_option("--dot", dot_dir, "write DOT files into this directory");

  std::string example_name;
  std::vector<std::int64_t> example_params;
  auto* examples = app.add_subcommand("examples", "emit a shipped example as JSON");
  examples->add_option("name", example_name, "example name, or 'list'")->required();
  examples->add_option("params", example_params, "parameters (defaults if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, check_full);
    if (enumerate->parsed())
      return cmd_enumerate(dim, points, max_weight,
                           todd_value >= 0 ? std::optional<int>(todd_value) : std::nullopt,
                           enum_full, jsonl_path);
    if (graphs->parsed()) return cmd_graphs(graphs_path, dot_dir);
    if (examples->parsed()) return cmd_examples(example_name, example_params);
  } catch (const fplab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fplab::ParameterConstraintViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
