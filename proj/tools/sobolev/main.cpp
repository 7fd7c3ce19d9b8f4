#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "sobolev/error.hpp"

using namespace sobolev::cli;

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    if (const char* path = std::getenv("SOBOLEV_CONFIG"); path && *path) apply_config_file(path, cfg);
  } catch (const sobolev::Error& e) {
    std::cerr << "sobolev: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App app{"Sharp constants for weighted L1 / H0^k embeddings on (0,1)"};
  app.require_subcommand(1);
  std::string mode, format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "derivative order");
    sub->add_option("--weight", cfg.weight_spec, "weight DSL, e.g. poly:1+x, chi:0,1/2, dirac:1/3, pow:1/2, hardy:1");
    sub->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--samples", cfg.samples, "minimizer sample count");
    sub->add_option("--galerkin-degree", cfg.galerkin_degree, "Galerkin degree N");
    sub->add_option("--grid", cfg.grid, "finite-difference interior nodes");
    sub->add_option("--out", cfg.out_path, "write output to this file");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* constant = app.add_subcommand("constant", "sharp constant mu = Lambda^-2");
  CLI::App* minimizer = app.add_subcommand("minimizer", "sample the extremal function");
  CLI::App* verify = app.add_subcommand("verify", "cross-check the solver against the oracles");
  CLI::App* sweep = app.add_subcommand("sweep", "mu over a one-parameter weight family");
  for (CLI::App* sub : {constant, minimizer, verify, sweep}) add_common(sub);
  sweep->add_option("--param", cfg.sweep.param, "dirac (location), chi-center, chi-width (half-width) or pow (alpha)")
      ->check(CLI::IsMember({"dirac", "chi-center", "chi-width", "pow"}))
      ->required();
  sweep->add_option("--from", cfg.sweep.from, "first parameter value (rational)")->required();
  sweep->add_option("--to", cfg.sweep.to, "last parameter value (rational, inclusive)")->required();
  sweep->add_option("--step", cfg.sweep.step, "positive rational step")->required();
  sweep->add_option("--center", cfg.sweep.center, "indicator center for chi-width");
  sweep->add_option("--width", cfg.sweep.width, "full indicator width for chi-center");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (!mode.empty()) cfg.mode = mode;
  if (!format.empty()) cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

  try {
    CommandOutput result;
    if (*constant) cfg.command = Command::Constant;
    if (*minimizer) cfg.command = Command::Minimizer;
    if (*verify) cfg.command = Command::Verify;
    if (*sweep) cfg.command = Command::Sweep;
    validate(cfg);
    switch (cfg.command) {
      case Command::Constant: result = run_constant(cfg); break;
      case Command::Minimizer: result = run_minimizer(cfg); break;
      case Command::Verify: result = run_verify(cfg); break;
      case Command::Sweep: result = run_sweep(cfg); break;
    }
    if (cfg.out_path) {
      std::ofstream out(*cfg.out_path, std::ios::binary);
      if (!out || !(out << result.text)) {
        std::cerr << "sobolev: cannot write '" << *cfg.out_path << "'\n";
        return kExitInput;
      }
    } else {
      std::cout << result.text;
    }
    if (result.exit_code == kExitDisagree) std::cerr << "sobolev: verification disagreement\n";
    return result.exit_code;
  } catch (const sobolev::Error& e) {
    std::cerr << "sobolev: " << e.what() << "\n";
    return e.category() == sobolev::ErrorCategory::Input ? kExitInput : kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "sobolev: " << e.what() << "\n";
    return kExitSolver;
  }
}
