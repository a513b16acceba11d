#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "fsslab/registry.hpp"

namespace fss {

// One sweep scenario: models x mode on a uniform alpha grid. Mirrors the
// command-line flags one to one; a JSON config file uses the same keys.
struct ScenarioConfig {
  std::vector<std::string> models{"hlih-h"};
  std::string mode = "lfss";
  double alpha_max = 1.5;
  int points = 151;
  int steps = 10000;
  double mu = 1.0;
  double lambda = 0.0;
  double sigma12_0 = 0.0;
  std::string out;
};

// Reads a flat JSON object: {"model": "...", "mode": "...", "alpha-max": x,
// "points": n, "steps": n, "mu": x, "lambda": x, "sigma12-0": x, "out": "..."}.
// Unknown keys are rejected.
ScenarioConfig load_config(const std::filesystem::path& path);

// Full-precision CSV for one model under the scenario. Header
//   alpha,sigma11,sigma22,sigma12,sigma_bar11,sigma_bar22,sigma_bar12
// then one row per grid point, every value printed with 17 significant
// digits. Byte-identical for identical inputs.
std::string sweep_csv(const ParsedModel& model, const ScenarioConfig& config);

// Writes via a temporary file in the target directory plus rename, so a
// scenario's output is never observable half-written.
void write_atomic(const std::filesystem::path& path, const std::string& text);

// Runs every model of the scenario and writes the outputs. A single model
// goes exactly to config.out (stdout when empty); several models treat
// config.out as a directory and write <model>_<mode>.csv inside, with
// characters unfit for filenames replaced. Returns a process exit code.
int run_sweep(const ScenarioConfig& config, std::ostream& log);

// Serializes one double with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace fss
