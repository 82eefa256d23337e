// Copyright 2026 The tgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>

#include "tgate/cli/config.h"

namespace tgate::cli {

inline constexpr const char *kToolVersion = "1.0.0";

/// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDomainError = 3;
inline constexpr int kExitVerificationFailed = 4;

enum class OutputFormat {
    Json,
    Csv,
};

struct CommandOptions {
    OutputFormat format = OutputFormat::Json;
    /// Test hook for verify: perturbs the closed forms so every check fails.
    bool corrupt_formula = false;
};

struct CommandResult {
    /// Complete output document, newline terminated.
    std::string text;
    int exit_code = kExitOk;
};

/// One-qubit transport rotation: solved speed, truncation error, site phases.
CommandResult cmd_rotate(const RunConfig &config, const CommandOptions &options);
/// Full operating point for the first n in gate.n.
CommandResult cmd_gate_design(const RunConfig &config, const CommandOptions &options);
/// One row per n in gate.n; rows that cannot be solved carry an error cell.
CommandResult cmd_gate_table(const RunConfig &config, const CommandOptions &options);
/// Sampled phase-space trajectory of the designed gate, time in units of tau.
CommandResult cmd_gate_trajectory(const RunConfig &config, const CommandOptions &options);
/// Laser-free washboard gate report.
CommandResult cmd_washboard(const RunConfig &config, const CommandOptions &options);
/// Closed forms against the time-ordered oracle on random draws. Exit code
/// kExitVerificationFailed if any residual exceeds its tolerance.
CommandResult cmd_verify(const RunConfig &config, const CommandOptions &options);

}  // namespace tgate::cli
