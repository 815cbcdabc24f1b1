// Command-line front end: analyze, moments, oracle, simulate, sample-measure.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rtn/exact_oracle.hpp"
#include "rtn/graph.hpp"
#include "rtn/measure_expr.hpp"
#include "rtn/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write to a sibling temporary and rename, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_atomically(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random tensor network entanglement spectra"};
  app.set_version_flag("--version", rtn::kToolVersion);
  app.require_subcommand(1);

  std::string file, expr, output, csv;
  int n_max = 5, n = 2, dimension = 2, samples = 100, size = 200, count = 20, bins = 60;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::optional<double> oracle_dimension;
  bool per_sample = false;

  auto* analyze = app.add_subcommand("analyze", "Flow, order graph, measure and limit moments");
  auto* moments = app.add_subcommand("moments", "Limit moments and entropy corrections only");
  for (auto* sub : {analyze, moments}) {
    sub->add_option("graph", file, "Graph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--n-max", n_max, "Highest moment order")->check(CLI::Range(1, 64));
    sub->add_option("--budget", budget, "Enumeration budget for the exact cross-check");
    sub->add_option("--output", output, "Write JSON here instead of stdout");
  }

  auto* oracle = app.add_subcommand("oracle", "Exact Hamiltonian histogram by enumeration");
  oracle->add_option("graph", file, "Graph file")->required()->check(CLI::ExistingFile);
  oracle->add_option("-n,--n", n, "Replica number")->check(CLI::Range(1, 7));
  oracle->add_option("--dimension", oracle_dimension, "Evaluate the polynomials at this D");
  oracle->add_option("--budget", budget, "Maximum number of assignments");
  oracle->add_option("--output", output, "Write JSON here instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "Gaussian tensor network Monte Carlo");
  simulate->add_option("graph", file, "Graph file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--dimension", dimension, "Bond dimension D")->check(CLI::Range(2, 1 << 16));
  simulate->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  simulate->add_option("--n-max", n_max, "Highest moment order")->check(CLI::Range(1, 64));
  simulate->add_option("--seed", seed, "Random seed");
  simulate->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);
  simulate->add_flag("--per-sample", per_sample, "Include per-sample arrays");
  simulate->add_option("--csv", csv, "Write the eigenvalue histogram CSV here");
  simulate->add_option("--output", output, "Write JSON here instead of stdout");

  auto* sample = app.add_subcommand("sample-measure", "Random-matrix sampler for a measure expression");
  sample->add_option("expression", expr, "Measure expression, e.g. box(mp,times(mp,mp))")->required();
  sample->add_option("--size", size, "Matrix size")->check(CLI::Range(2, 4096));
  sample->add_option("--samples", count, "Number of matrices")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Random seed");
  sample->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);
  sample->add_option("--csv", csv, "Write the eigenvalue histogram CSV here");
  sample->add_option("--output", output, "Write JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json result;
    std::string histogram;
    if (analyze->parsed() || moments->parsed()) {
      rtn::AnalyzeOptions opt;
      opt.n_max = n_max;
      if (budget) opt.oracle_budget = *budget;
      opt.moments_only = moments->parsed();
      result = rtn::cmd_analyze(read_file(file), opt);
    } else if (oracle->parsed()) {
      result = rtn::cmd_oracle(read_file(file), n, oracle_dimension,
                               budget.value_or(rtn::kDefaultEnumerationBudget));
    } else if (simulate->parsed()) {
      rtn::SimulateOptions opt{dimension, samples, n_max, seed, per_sample, bins};
      auto r = rtn::cmd_simulate(read_file(file), opt);
      result = std::move(r.json);
      histogram = std::move(r.csv);
    } else {
      auto r = rtn::cmd_sample_measure(expr, size, count, seed, bins);
      result = std::move(r.json);
      histogram = std::move(r.csv);
    }
    emit(result.dump(2) + "\n", output);
    if (!csv.empty()) write_atomically(csv, histogram);
  } catch (const rtn::InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 2;
  } catch (const rtn::GraphError& e) {
    std::cerr << "graph error: " << e.what() << '\n';
    return 1;
  } catch (const rtn::ExprParseError& e) {
    std::cerr << "expression error at position " << e.position() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
