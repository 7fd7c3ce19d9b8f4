#include "config.hpp"

#include <charconv>
#include <fstream>

#include "sobolev/error.hpp"

namespace sobolev::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int to_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DomainError("config key '" + key + "' expects an integer, got '" + value + "'");
  }
  return out;
}

}  // namespace

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "k") cfg.k = to_int(key, value);
    else if (key == "weight") cfg.weight_spec = value;
    else if (key == "mode") cfg.mode = value;
    else if (key == "samples") cfg.samples = to_int(key, value);
    else if (key == "galerkin_degree" || key == "galerkin-degree") cfg.galerkin_degree = to_int(key, value);
    else if (key == "grid") cfg.grid = to_int(key, value);
    else if (key == "format") {
      if (value == "json") cfg.format = OutputFormat::Json;
      else if (value == "csv") cfg.format = OutputFormat::Csv;
      else throw DomainError("config key 'format' must be json or csv");
    } else if (key == "out") cfg.out_path = value;
    else throw DomainError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.k < 1) throw DomainError("--k must be at least 1");
  if (cfg.samples < 2) throw DomainError("--samples must be at least 2");
  if (cfg.galerkin_degree < 0) throw DomainError("--galerkin-degree must be non-negative");
  if (cfg.grid < 9) throw DomainError("--grid must be at least 9");
  if (cfg.mode && *cfg.mode != "exact" && *cfg.mode != "float") {
    throw DomainError("--mode must be exact or float");
  }
  if (cfg.command != Command::Sweep && cfg.weight_spec.empty()) throw DomainError("--weight is required");
}

}  // namespace sobolev::cli
