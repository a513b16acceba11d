// Command-line driver: shear-parameter tables, stress sweeps to CSV, and the
// verification suite. Exit codes: 0 success, 1 verification failure,
// 2 usage or configuration error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fsslab/kinematics.hpp"
#include "fsslab/registry.hpp"
#include "fsslab/sweep.hpp"
#include "fsslab/verify.hpp"

namespace {

void print_tables(std::ostream& out) {
  const double deg = 180.0 / M_PI;
  auto row = [&](fss::ShearMode mode, double alpha) {
    const fss::MotionParameters mp = fss::motion_parameters(mode, alpha);
    const fss::KinematicState st = fss::kinematic_state(mode, alpha);
    const double theta =
        (mode == fss::ShearMode::LFSS ? st.theta_star : st.theta) * deg;
    const double gamma =
        mode == fss::ShearMode::LFSS ? st.gamma_star : st.gamma;
    auto cell = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), std::abs(v) >= 10.0 ? "%10.3f" : "%10.4f",
                    v);
      return std::string(buf);
    };
    char theta_buf[32];
    std::snprintf(theta_buf, sizeof(theta_buf), "%10.2f", theta);
    out << cell(alpha) << theta_buf << cell(gamma) << cell(mp.a) << cell(mp.b)
        << cell(mp.c) << "\n";
  };

  auto header = [&](const char* title, const char* theta_name,
                    const char* gamma_name) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s\n%10s%10s%10s%10s%10s%10s\n", title,
                  "alpha", theta_name, gamma_name, "a", "b", "c");
    out << buf;
  };
  header("LFSS (shear angle in degrees)", "theta*", "gamma*");
  for (const double a : {0.0, 0.5, 1.0, 1.5}) row(fss::ShearMode::LFSS, a);
  header("RFSS (shear angle in degrees)", "theta", "gamma");
  for (const double a : {0.0, 0.5, 1.0, 1.5}) row(fss::ShearMode::RFSS, a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite simple shear laboratory: closed-form hyperelastic stresses and "
      "integrated hypoelastic stress paths under LFSS, RFSS and classical "
      "simple shear"};
  app.require_subcommand(1);

  CLI::App* tables = app.add_subcommand(
      "tables", "Print the LFSS/RFSS motion parameters and shear angles");

  fss::ScenarioConfig config;
  config.out.clear();
  std::string model_list = "hlih-h";
  std::string config_path;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Write stress components over an alpha grid as CSV");
  sweep->add_option("--model", model_list,
                    "Comma-separated model names (e.g. hlih-h,ogden-a,"
                    "obi:1.5,mr:0.5,0.5,hypo-zj)");
  sweep->add_option("--mode", config.mode, "lfss, rfss or simple-shear");
  sweep->add_option("--alpha-max", config.alpha_max, "End of the alpha grid");
  sweep->add_option("--points", config.points, "Grid points (>= 2)");
  sweep->add_option("--steps", config.steps,
                    "Integration steps for hypoelastic models");
  sweep->add_option("--mu", config.mu, "Shear modulus");
  sweep->add_option("--lambda", config.lambda, "Second Lame parameter");
  sweep->add_option("--sigma12-0", config.sigma12_0,
                    "Initial shear stress (hypoelastic models)");
  sweep->add_option("--out", config.out,
                    "Output file (one model) or directory (several); stdout "
                    "when omitted");
  sweep->add_option("--config", config_path,
                    "JSON config file; explicit flags override its values");

  std::string profile_name = "default";
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full verification suite and report each check");
  verify->add_option("--profile", profile_name, "default or strict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (tables->parsed()) {
      print_tables(std::cout);
      return 0;
    }

    if (sweep->parsed()) {
      if (!config_path.empty()) {
        fss::ScenarioConfig from_file = fss::load_config(config_path);
        // Flags override file values.
        if (sweep->count("--model"))
          from_file.models = fss::split_model_list(model_list);
        if (sweep->count("--mode")) from_file.mode = config.mode;
        if (sweep->count("--alpha-max")) from_file.alpha_max = config.alpha_max;
        if (sweep->count("--points")) from_file.points = config.points;
        if (sweep->count("--steps")) from_file.steps = config.steps;
        if (sweep->count("--mu")) from_file.mu = config.mu;
        if (sweep->count("--lambda")) from_file.lambda = config.lambda;
        if (sweep->count("--sigma12-0")) from_file.sigma12_0 = config.sigma12_0;
        if (sweep->count("--out")) from_file.out = config.out;
        config = from_file;
      } else {
        config.models = fss::split_model_list(model_list);
      }
      return fss::run_sweep(config, std::cerr);
    }

    if (verify->parsed()) {
      const fss::Profile profile = fss::parse_profile(profile_name);
      const std::vector<fss::CheckResult> results =
          fss::run_acceptance_checks(profile);
      fss::print_report(results, std::cout);
      return fss::all_passed(results) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
