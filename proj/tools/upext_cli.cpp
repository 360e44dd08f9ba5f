// upext: command-line front end for the anti-associated polynomial toolkit.
//
//   upext <coeffs|eval|measure|verify|ode> --config job.ini [--out DIR]
//         [--grid N] [--tol X] [--degree N] [--truncation N]
//
// Exit codes: 0 pass, 2 verification failure, 3 config error, 1 anything else.

#include "upext/commands.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Anti-associated orthogonal polynomials: recurrences, measures and differential equations"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::size_t> grid, degree, truncation;
  std::optional<double> tol;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const upext::JobConfig&, const std::filesystem::path&, std::ostream&);
  };
  const Command commands[] = {
      {"coeffs", "recurrence coefficients of the base, extended and shifted-back sequences", upext::run_coeffs},
      {"eval", "evaluate P^(-r)_m by the closed form and by the recurrence", upext::run_eval},
      {"measure", "density CSV and mass points JSON of the orthogonality measure", upext::run_measure},
      {"verify", "Gram, mass, Christoffel, trace-class and zero checks", upext::run_verify},
      {"ode", "differential equation coefficients with exact residuals", upext::run_ode},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "job description file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--grid", grid, "grid size");
    sub->add_option("--tol", tol, "pass/fail tolerance");
    sub->add_option("--degree", degree, "degree (eval, ode) or Gram size (verify)");
    sub->add_option("--truncation", truncation, "truncation size for limit checks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : upext::kExitConfig;
  }

  try {
    upext::JobConfig cfg = upext::load_config(config_path);
    if (grid) cfg.grid = *grid;
    if (tol) cfg.tol = *tol;
    if (degree) cfg.degree = *degree;
    if (truncation) cfg.truncation = *truncation;
    if (cfg.grid < 2) throw upext::ConfigError("grid must be at least 2");
    if (cfg.truncation < 50) throw upext::ConfigError("truncation must be at least 50");
    if (cfg.tol && !(*cfg.tol > 0.0)) throw upext::ConfigError("tol must be positive");
    for (const auto& c : commands)
      if (app.got_subcommand(c.name)) return c.run(cfg, out_dir, std::cout);
  } catch (const upext::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return upext::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return upext::kExitFailure;
  }
  return upext::kExitFailure;
}
