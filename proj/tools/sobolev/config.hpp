#pragma once

#include <optional>
#include <string>

namespace sobolev::cli {

enum class Command { Constant, Minimizer, Verify, Sweep };
enum class OutputFormat { Json, Csv };

struct SweepRange {
  std::string param;  // dirac | chi-center | chi-width | pow
  std::string from;
  std::string to;
  std::string step;
  std::string center = "1/2";
  std::string width = "1/10";
};

struct RunConfig {
  Command command = Command::Constant;
  int k = 1;
  std::string weight_spec;
  std::optional<std::string> mode;  // unset: exact
  int samples = 201;
  int galerkin_degree = 16;
  int grid = 199;
  std::optional<OutputFormat> format;  // unset: the command's natural format
  std::optional<std::string> out_path;
  SweepRange sweep;
};

/// Applies key=value lines from a config file onto cfg. Blank lines and
/// lines starting with '#' are skipped. Throws DomainError on unknown keys.
void apply_config_file(const std::string& path, RunConfig& cfg);

/// samples >= 2, galerkin_degree >= 0, grid >= 9, k >= 1.
void validate(const RunConfig& cfg);

}  // namespace sobolev::cli
