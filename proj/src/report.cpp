#include "isospec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "isospec/oracle.hpp"
#include "isospec/susy.hpp"

namespace isospec::cli {

namespace {

using nlohmann::json;

const char* model_name(models::ModelKind kind) {
  return kind == models::ModelKind::HarmonicOscillator ? "ho" : "cprs";
}

// Sorted, deduplicated, every index validated.
std::vector<int> resolve_levels(const models::Model& model,
                                const std::vector<int>& requested,
                                int default_count) {
  std::vector<int> levels =
      requested.empty() ? default_levels(model, default_count) : requested;
  std::set<int> unique;
  for (int k : levels) {
    if (!model.valid_index(k)) {
      throw ConfigError("level " + std::to_string(k) +
                        " is not in the spectrum of model " +
                        model_name(model.kind()));
    }
    unique.insert(k);
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<int> default_levels(const models::Model& model, int count) {
  std::vector<int> out;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    if (model.valid_index(k)) out.push_back(k);
  }
  return out;
}

std::string make_table(const RunConfig& config) {
  const models::Model model(config.model);
  const susy::PartnerFamily family(model, config.n, config.c);
  const std::vector<int> levels = resolve_levels(model, config.levels, 3);

  const double half_width = config.half_width < 0.0 ? 5.0 : config.half_width;
  const int points = config.points < 0 ? 1001 : config.points;
  if (!(half_width > 0.0) || points < 2) {
    throw ConfigError("table needs L > 0 and N >= 2 sample points");
  }

  std::vector<double> energies;
  for (int k : levels) {
    energies.push_back(model.energy(k) - model.energy(config.n));
  }

  const auto point = [&](int i) {
    return -half_width + (2.0 * half_width * i) / (points - 1);
  };

  if (config.format == OutputFormat::Csv) {
    std::string out = "x,V_base,V_tilde";
    for (int k : levels) out += ",density_k" + std::to_string(k);
    out += "\n";
    for (int i = 0; i < points; ++i) {
      const double x = point(i);
      out += format_double(x);
      out += "," + format_double(model.base_potential(config.n, x));
      out += "," + format_double(family.partner_potential(x));
      for (std::size_t j = 0; j < levels.size(); ++j) {
        const double v = family.raw_state(levels[j], x);
        out += "," + format_double(v * v + energies[j]);
      }
      out += "\n";
    }
    return out;
  }

  json doc;
  doc["model"] = model_name(config.model);
  doc["n"] = config.n;
  doc["C"] = config.c;
  doc["grid"] = {{"L", half_width}, {"N", points}};
  json columns = json::array({"x", "V_base", "V_tilde"});
  for (int k : levels) columns.push_back("density_k" + std::to_string(k));
  doc["columns"] = columns;
  json rows = json::array();
  for (int i = 0; i < points; ++i) {
    const double x = point(i);
    json row = json::array(
        {x, model.base_potential(config.n, x), family.partner_potential(x)});
    for (std::size_t j = 0; j < levels.size(); ++j) {
      const double v = family.raw_state(levels[j], x);
      row.push_back(v * v + energies[j]);
    }
    rows.push_back(row);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

std::string make_spectrum_report(const RunConfig& config) {
  if (config.format != OutputFormat::Json) {
    throw ConfigError("spectrum reports are emitted as json only");
  }
  const models::Model model(config.model);
  const susy::PartnerFamily family(model, config.n, config.c);
  const std::vector<int> levels = resolve_levels(model, config.levels, 4);

  const double half_width = config.half_width < 0.0 ? 10.0 : config.half_width;
  const int points = config.points < 0 ? 4000 : config.points;
  if (!(half_width > 0.0) || points < 32) {
    throw ConfigError("spectrum needs L > 0 and N >= 32 interior points");
  }

  int lowest = 0;
  for (int k : levels) lowest = std::max(lowest, model.ordinal(k) + 1);

  const auto potential = [&](double x) { return family.partner_potential(x); };
  const oracle::Grid coarse_grid{half_width, points};
  const oracle::Grid fine_grid{half_width, 2 * points + 1};
  const auto coarse =
      oracle::eigen_lowest(oracle::discretize(potential, coarse_grid), lowest);
  const auto fine =
      oracle::eigen_lowest(oracle::discretize(potential, fine_grid), lowest);
  const std::vector<double> extrapolated = oracle::richardson(coarse, fine);

  json doc;
  doc["model"] = model_name(config.model);
  doc["n"] = config.n;
  doc["C"] = config.c;
  doc["grid"] = {{"L", half_width},
                 {"N", points},
                 {"richardson", "steps h and h/2, (4 E_fine - E_coarse) / 3"}};
  json rows = json::array();
  double max_abs_delta = 0.0;
  for (int k : levels) {
    const int pos = model.ordinal(k);
    const double analytic = model.energy(k) - model.energy(config.n);
    const double numeric = extrapolated[pos];
    const double delta = numeric - analytic;
    max_abs_delta = std::max(max_abs_delta, std::abs(delta));
    rows.push_back({{"k", k},
                    {"energy_analytic", analytic},
                    {"energy_oracle", numeric},
                    {"delta", delta},
                    {"node_count_analytic", pos},
                    {"node_count_oracle", fine.node_counts[pos]}});
  }
  doc["levels"] = rows;
  doc["max_abs_delta"] = max_abs_delta;

  // Levels absent from the model spectrum: confirm the solver sees no
  // eigenvalue within half a level spacing of where they would sit.
  json absent = json::array();
  if (config.model == models::ModelKind::Cprs) {
    const auto op = oracle::discretize(potential, fine_grid);
    for (int k : {1, 2}) {
      const double would_be = 2.0 * (k - config.n);
      const int count = oracle::sturm_count(op, would_be + 0.5) -
                        oracle::sturm_count(op, would_be - 0.5);
      absent.push_back(
          {{"k", k}, {"energy", would_be}, {"window", 0.5}, {"count", count}});
    }
  }
  doc["absent_levels"] = absent;
  return doc.dump(2) + "\n";
}

}  // namespace isospec::cli
