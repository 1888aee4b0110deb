// Run configuration plus the table / spectrum report builders behind the
// command-line tool.  Everything is emitted as text with deterministic
// ordering and 17-significant-digit numbers, so identical configs produce
// byte-identical files.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "isospec/models.hpp"

namespace isospec::cli {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  models::ModelKind model = models::ModelKind::HarmonicOscillator;
  int n = 0;
  double c = 1.0;
  std::vector<int> levels;       // empty: command-specific default
  double half_width = -1.0;      // < 0: command default (table 5, spectrum 10)
  int points = -1;               // < 0: command default (table 1001, spectrum 4000)
  std::string out;               // empty: stdout
  OutputFormat format = OutputFormat::Csv;
};

// %.17g, enough digits to round-trip any double.
std::string format_double(double v);

// First `count` valid level indices of the model.
std::vector<int> default_levels(const models::Model& model, int count);

// Sampled x, base potential, deformed potential, and per-level unnormalized
// densities offset by their energy.  CSV by default, JSON on request.
std::string make_table(const RunConfig& config);

// Deformed-potential spectrum from the finite-difference solver with a
// Richardson step, compared level by level against 2(k - n).  Always JSON.
std::string make_spectrum_report(const RunConfig& config);

}  // namespace isospec::cli
