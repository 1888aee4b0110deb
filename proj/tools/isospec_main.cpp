// Command-line front end.  Exit codes: 0 success (verify: all checks pass),
// 1 verify found a failing check, 2 invalid configuration or arguments,
// 3 numerical non-convergence.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isospec/models.hpp"
#include "isospec/oracle.hpp"
#include "isospec/report.hpp"
#include "isospec/specfun.hpp"
#include "isospec/susy.hpp"
#include "isospec/verify.hpp"

namespace {

using namespace isospec;

struct CliOptions {
  std::string model = "ho";
  int n = 0;
  double c = 1.0;
  std::vector<int> levels;
  double half_width = -1.0;
  int points = -1;
  std::string out;
  std::string format;
  std::string suite = "all";
  bool all_suites = false;
};

void add_run_options(CLI::App* sub, CliOptions* opt, CLI::Option** format_opt) {
  sub->add_option("--model", opt->model, "Reference model")
      ->check(CLI::IsMember({"ho", "cprs"}));
  sub->add_option("--n", opt->n, "Index of the level the family is built on");
  sub->add_option("--C", opt->c,
                  "Family parameter; |C| must exceed the half-line norm of "
                  "the chosen state");
  sub->add_option("--k", opt->levels, "Level indices to include")
      ->delimiter(',');
  sub->add_option("--L", opt->half_width, "Grid half-width");
  sub->add_option("--N", opt->points, "Number of grid points");
  sub->add_option("--out", opt->out, "Output path (default: stdout)");
  *format_opt = sub->add_option("--format", opt->format, "Output format")
                    ->check(CLI::IsMember({"csv", "json"}));
  sub->fallthrough();
}

cli::RunConfig to_run_config(const CliOptions& opt, cli::OutputFormat format) {
  cli::RunConfig config;
  config.model = opt.model == "cprs" ? models::ModelKind::Cprs
                                     : models::ModelKind::HarmonicOscillator;
  config.n = opt.n;
  config.c = opt.c;
  config.levels = opt.levels;
  config.half_width = opt.half_width;
  config.points = opt.points;
  config.format = format;
  return config;
}

// Payloads are assembled fully in memory first so that a failed run never
// leaves a partial output file behind.
int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  file << payload;
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing output file: " << path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Strictly isospectral one-parameter deformations of two exactly "
      "solvable wells, with closed-form states and a finite-difference "
      "cross-check"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "TOML file; put keys in a [table], [spectrum], or [verify] "
                 "section; explicit flags win");

  CliOptions opt;
  CLI::Option* table_format = nullptr;
  CLI::Option* spectrum_format = nullptr;

  CLI::App* table = app.add_subcommand(
      "table",
      "Emit x, the base and deformed potentials, and level-offset densities");
  add_run_options(table, &opt, &table_format);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum",
      "Finite-difference spectrum of the deformed potential vs analytic "
      "energies");
  add_run_options(spectrum, &opt, &spectrum_format);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run self-verification checks and emit a JSON report");
  verify->add_option("--suite", opt.suite,
                     "Restrict to one check suite (specfun, models, "
                     "cprs-identities, susy, oracle, figures)");
  verify->add_flag("--all", opt.all_suites, "Run every suite (the default)");
  verify->add_option("--out", opt.out, "Output path (default: stdout)");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) {
      const cli::OutputFormat format =
          table_format->count() > 0 && opt.format == "json"
              ? cli::OutputFormat::Json
              : cli::OutputFormat::Csv;
      return write_output(opt.out, cli::make_table(to_run_config(opt, format)));
    }
    if (spectrum->parsed()) {
      const cli::OutputFormat format =
          spectrum_format->count() > 0 && opt.format == "csv"
              ? cli::OutputFormat::Csv
              : cli::OutputFormat::Json;
      return write_output(opt.out,
                          cli::make_spectrum_report(to_run_config(opt, format)));
    }
    const std::string suite = opt.all_suites ? "all" : opt.suite;
    const auto results = verify::run_suite(suite);
    const int rc = write_output(opt.out, verify::report_json(results));
    if (rc != 0) return rc;
    return !results.empty() && verify::all_pass(results) ? 0 : 1;
  } catch (const oracle::ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const specfun::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
