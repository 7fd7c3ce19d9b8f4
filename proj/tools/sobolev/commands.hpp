#pragma once

#include <string>

#include "config.hpp"

namespace sobolev::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitDisagree = 4;

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

CommandOutput run_constant(const RunConfig& cfg);
CommandOutput run_minimizer(const RunConfig& cfg);
CommandOutput run_verify(const RunConfig& cfg);
CommandOutput run_sweep(const RunConfig& cfg);

}  // namespace sobolev::cli
