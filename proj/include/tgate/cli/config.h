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

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgate/physics.h"

namespace tgate::cli {

/// Invalid or unreadable configuration. The message names the offending key
/// path or the line and column of a syntax error.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SpeciesConfig {
    std::string name = "Be9";
    std::optional<double> mass_u;
    std::optional<double> qubit_splitting_hz;
    std::optional<double> raman_wavelength_nm;
};

struct TrapConfig {
    double com_frequency_hz = 4e6;
};

struct BeamConfig {
    double waist_um = 20;
    std::optional<double> wavelength_nm;
};

struct RotateConfig {
    double rabi_frequency_hz = 250e3;
    double theta_rad = std::numbers::pi;
    double angle_deg = 90;
    double cutoff_waists = 2.6;
    std::vector<double> path_lengths_mm = {0, 60, 120};
};

struct GateConfig {
    double p = 3.48;
    double ratio = -0.5;
    std::vector<int> n = {10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 32, 34, 36, 38, 40, 42, 44, 46};
    bool allow_odd = false;
    double heating_rate_per_s = 1e3;
    double lamb_dicke_threshold = 0.3;
};

struct TrajectoryConfig {
    double p = 3.48;
    int samples = 2000;
    double t_begin_tau = -6;
    double t_end_tau = 6;
    double winding_window_tau = 3;
};

struct WashboardConfig {
    double bias_field_gauss = 120;
    double washboard_field_gauss = 20;
    double period_um = 20;
    double speed_m_per_s = 80;
};

struct VerifyConfig {
    int draws = 100;
    std::uint64_t seed = 20260101;
    double oracle_tol = 1e-12;
    double alpha_path_tol = 1e-9;
    double alpha_final_tol = 1e-9;
    double phase_tol = 1e-8;
    double square_tol = 1e-10;
    double p_min = 0.5;
    double p_max = 4.5;
};

struct OutputConfig {
    int precision = 17;
    int threads = 1;
};

/// Fully resolved run configuration. Every key is optional in the file and
/// defaults to the published operating point.
struct RunConfig {
    SpeciesConfig species;
    TrapConfig trap;
    BeamConfig beam;
    RotateConfig rotate;
    GateConfig gate;
    TrajectoryConfig trajectory;
    WashboardConfig washboard;
    VerifyConfig verify;
    OutputConfig output;

    /// Species with any overrides applied, in SI units.
    IonSpecies resolved_species() const;
    TrapContext trap_context() const;
    double waist() const;
    double wavelength() const;
};

/// Parses a JSON configuration. Unknown keys, wrong types and out-of-range
/// values throw ConfigError. `source` names the input in diagnostics.
RunConfig parse_config(const std::string &text, const std::string &source);
RunConfig load_config(const std::string &path);

/// Checks every physical quantity is in range; called by the parsers and
/// again after command-line overrides.
void validate_config(const RunConfig &config);

}  // namespace tgate::cli
