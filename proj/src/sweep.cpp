#include "fsslab/sweep.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace fss {

namespace {

std::vector<double> alpha_grid(double alpha_max, int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = alpha_max * double(i) / double(points - 1);
  return grid;
}

void validate(const ScenarioConfig& c) {
  if (c.points < 2) throw std::invalid_argument("points must be >= 2");
  if (c.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(c.alpha_max >= 0.0) || !std::isfinite(c.alpha_max))
    throw std::invalid_argument("alpha-max must be finite and >= 0");
  if (!(c.mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  if (!std::isfinite(c.lambda) || !std::isfinite(c.sigma12_0))
    throw std::invalid_argument("lambda and sigma12-0 must be finite");
}

// Trajectory steps rounded up to a multiple of the grid intervals so every
// grid point falls on an integration node.
int aligned_steps(int steps, int intervals) {
  const int per = (steps + intervals - 1) / intervals;
  return std::max(1, per) * intervals;
}

std::vector<TrajectorySample> subsample(const StressTrajectory& traj,
                                        int intervals) {
  const int stride = int(traj.samples.size() - 1) / intervals;
  std::vector<TrajectorySample> out;
  out.reserve(intervals + 1);
  for (int i = 0; i <= intervals; ++i)
    out.push_back(traj.samples[size_t(i) * size_t(stride)]);
  return out;
}

std::vector<TrajectorySample> hyperelastic_rows(const ParsedModel& model,
                                                ShearMode mode,
                                                const std::vector<double>& grid) {
  std::vector<TrajectorySample> rows;
  rows.reserve(grid.size());
  for (const double a : grid) {
    TrajectorySample row;
    row.alpha = a;
    if (mode == ShearMode::SimpleShear) {
      const KinematicState st = kinematic_state(mode, a);
      row.sigma = kirchhoff_stress(model.hyper, st.stretch, 1.0);
      row.sigma_bar = rotate(row.sigma, st.r, RotateDirection::Backward);
    } else {
      const StressPair p = shear_stress(model.hyper, mode, a);
      row.sigma = p.sigma;
      row.sigma_bar = p.sigma_bar;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<TrajectorySample> hypoelastic_rows(const ParsedModel& model,
                                               ShearMode mode,
                                               const ScenarioConfig& c,
                                               const std::vector<double>& grid) {
  const SymTensor2 sigma0{0.0, 0.0, c.sigma12_0};
  const int intervals = int(grid.size()) - 1;

  if (c.alpha_max == 0.0) {
    std::vector<TrajectorySample> rows(grid.size(), {0.0, sigma0, sigma0});
    return rows;
  }

  // Every corotational spin has a vanishing Lagrangian spin under RFSS, so
  // the rotated stress integrates in closed form.
  if (model.rate.family == RateFamily::Corotational &&
      mode == ShearMode::RFSS) {
    std::vector<TrajectorySample> rows;
    rows.reserve(grid.size());
    for (const double a : grid) {
      TrajectorySample row;
      row.alpha = a;
      row.sigma_bar = sigma0 + SymTensor2{0.0, 0.0, 2.0 * c.mu * a};
      row.sigma = rotate(row.sigma_bar, kinematic_state(mode, a).r,
                         RotateDirection::Forward);
      rows.push_back(row);
    }
    return rows;
  }

  HypoProblem problem;
  problem.rate = model.rate;
  problem.mode = mode;
  problem.mu = c.mu;
  problem.lambda = c.lambda;
  problem.sigma0 = sigma0;
  problem.alpha_max = c.alpha_max;
  problem.steps = aligned_steps(c.steps, intervals);

  const bool use_ode = model.rate.family == RateFamily::Corotational &&
                       mode == ShearMode::LFSS;
  const StressTrajectory traj =
      use_ode ? integrate_lfss(problem) : incremental_integrate(problem);
  return subsample(traj, intervals);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sweep_csv(const ParsedModel& model, const ScenarioConfig& config) {
  validate(config);
  const ShearMode mode = parse_mode(config.mode);
  const std::vector<double> grid = alpha_grid(config.alpha_max, config.points);

  if (model.category == ParsedModel::Category::Hyperelastic &&
      config.sigma12_0 != 0.0)
    throw std::invalid_argument(
        "sigma12-0 applies to hypoelastic models only");

  const std::vector<TrajectorySample> rows =
      model.category == ParsedModel::Category::Hyperelastic
          ? hyperelastic_rows(model, mode, grid)
          : hypoelastic_rows(model, mode, config, grid);

  std::string text =
      "alpha,sigma11,sigma22,sigma12,sigma_bar11,sigma_bar22,sigma_bar12\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const TrajectorySample& r = rows[i];
    text += format_double(grid[i]);
    text += ',';
    text += format_double(r.sigma.s11);
    text += ',';
    text += format_double(r.sigma.s22);
    text += ',';
    text += format_double(r.sigma.s12);
    text += ',';
    text += format_double(r.sigma_bar.s11);
    text += ',';
    text += format_double(r.sigma_bar.s22);
    text += ',';
    text += format_double(r.sigma_bar.s12);
    text += '\n';
  }
  return text;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open config file '" + path.string() +
                                "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("bad JSON in '" + path.string() +
                                "': " + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("config must be a JSON object");

  ScenarioConfig c;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "model")
        c.models = split_model_list(value.get<std::string>());
      else if (key == "mode")
        c.mode = value.get<std::string>();
      else if (key == "alpha-max")
        c.alpha_max = value.get<double>();
      else if (key == "points")
        c.points = value.get<int>();
      else if (key == "steps")
        c.steps = value.get<int>();
      else if (key == "mu")
        c.mu = value.get<double>();
      else if (key == "lambda")
        c.lambda = value.get<double>();
      else if (key == "sigma12-0")
        c.sigma12_0 = value.get<double>();
      else if (key == "out")
        c.out = value.get<std::string>();
      else
        throw std::invalid_argument("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad value for config key '" + key +
                                  "': " + e.what());
    }
  }
  return c;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

int run_sweep(const ScenarioConfig& config, std::ostream& log) {
  std::vector<ParsedModel> models;
  try {
    validate(config);
    for (const std::string& name : config.models)
      models.push_back(parse_model(name, config.mu, config.lambda));
    if (models.size() > 1 && config.out.empty())
      throw std::invalid_argument("--out is required for multiple models");
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return 2;
  }

  auto sanitize = [](std::string s) {
    for (char& ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' &&
          ch != '-' && ch != '_')
        ch = '_';
    return s;
  };

  try {
    for (const ParsedModel& model : models) {
      const std::string csv = sweep_csv(model, config);
      if (config.out.empty()) {
        std::cout << csv;
        continue;
      }
      std::filesystem::path target(config.out);
      if (models.size() > 1) {
        std::filesystem::create_directories(target);
        target /= sanitize(model.name) + "_" + config.mode + ".csv";
      } else if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path());
      }
      write_atomic(target, csv);
      log << "wrote " << target.string() << " (" << config.points
          << " rows)\n";
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace fss
