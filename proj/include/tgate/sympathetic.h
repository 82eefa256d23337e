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

#include <iosfwd>
#include <vector>

#include "tgate/phasegate.h"

namespace tgate {

/// A motional mode of a mixed crystal, given by its frequency and the
/// components of its normalized eigenvector on the two qubit ions and on
/// any refrigerator ions.
struct ModeSpec {
    /// Mode frequency in rad/s.
    double omega = 0;
    double v1 = 0;
    double v2 = 0;
    std::vector<double> refrigerator_amplitudes;
};

/// Checks finiteness, omega > 0 and that the squared amplitudes sum to at most
/// 1 + 1e-9. Throws InvalidArgument.
void validate_mode(const ModeSpec &mode);

/// Two-ion stretch mode at omega, v1 = -v2 = 1/sqrt(2).
ModeSpec two_ion_stretch_mode(double omega);

DriveCoefficients generalized_coefficients(const ModeSpec &mode, double rabi_up, double rabi_down, double phi_half);

/// pi v1 v2 e^{-p^2} erfi(p) eta^2 (Omega_up - Omega_down)^2 tau^2 cos(2 phi_half).
double generalized_logic_phase(
    const ModeSpec &mode, double rabi_up, double rabi_down, double eta, double delta, double tau, double phi_half);

/// |v1 v2| eta^2, with eta the Lamb-Dicke parameter evaluated at the mode frequency.
double mode_suitability(const ModeSpec &mode, double eta);

/// Same, evaluating eta = Delta k_z sqrt(hbar / (2 m omega_v)) for ions of the given mass.
double mode_suitability(const ModeSpec &mode, double mass, double delta_k_z);

struct SpacingCheck {
    /// Delta k_z d_12 / pi.
    double half_periods = 0;
    int nearest_n = 0;
    /// |half_periods - nearest_n|.
    double deviation = 0;
    bool satisfied = false;
};

/// Reports how close the qubit spacing is to a multiple of the half-period of
/// the standing wave; not enforced.
SpacingCheck check_spacing(double delta_k_z, double qubit_spacing, double tolerance = 1e-3);

/// Mode file: header "omega_hz,v1,v2,refrigerator..." then one mode per line
/// with the frequency in Hz and any number of refrigerator amplitudes.
std::vector<ModeSpec> read_mode_csv(std::istream &in);
void write_mode_csv(std::ostream &out, const std::vector<ModeSpec> &modes);

}  // namespace tgate
