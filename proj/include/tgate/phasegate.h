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

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "tgate/beams.h"
#include "tgate/numerics.h"
#include "tgate/physics.h"

namespace tgate {

/// Spin configurations of the two qubit ions, in the order uu, ud, du, dd.
enum SpinPair {
    UpUp = 0,
    UpDown = 1,
    DownUp = 2,
    DownDown = 3,
};
inline constexpr std::array<SpinPair, 4> kSpinPairs = {UpUp, UpDown, DownUp, DownDown};
const char *spin_pair_label(SpinPair pair);

/// State-dependent drive amplitudes A_ss' (rad/s) of one motional mode.
struct DriveCoefficients {
    std::array<Complex, 4> amplitude{};
    /// Half the axial phase difference between the ions, Delta k_z d / 2.
    double phi_half = 0;
    double rabi_up = 0;
    double rabi_down = 0;

    const Complex &operator[](SpinPair pair) const {
        return amplitude[pair];
    }
};

/// Drive amplitudes of a mode whose eigenvector has real components v1, v2 on
/// the two qubit ions:
///   A_uu = (v1 e^{-i phi} + v2 e^{i phi}) Omega_up
///   A_ud = v1 e^{-i phi} Omega_up + v2 e^{i phi} Omega_down
///   A_du = v1 e^{-i phi} Omega_down + v2 e^{i phi} Omega_up
///   A_dd = (v1 e^{-i phi} + v2 e^{i phi}) Omega_down
DriveCoefficients mode_drive_coefficients(double v1, double v2, double rabi_up, double rabi_down, double phi_half);

/// Eigenvector component of each ion in the two-ion stretch mode.
inline constexpr double kStretchComponent = 0.70710678118654752440;

/// Two-ion stretch mode, v1 = -v2 = 1/sqrt(2).
DriveCoefficients drive_coefficients(double rabi_up, double rabi_down, double phi_half);

/// delta_0 = 2 k v cos(gamma).
double doppler_detuning(double wavenumber, double speed, double angle);

/// Displacement accumulated from t = -infinity under a Gaussian drive
/// eta A0 e^{-t^2/tau^2} e^{i delta t}:
///   eta A0 tau (sqrt(pi)/2) e^{-delta^2 tau^2/4} [1 + erf(t/tau - i delta tau/2)].
/// Throws OverflowDomain when |delta tau / 2| > 12.
Complex alpha_of_t(Complex a0, double eta, double delta, double tau, double t);

/// Displacement over the symmetric window [-t, t]:
///   eta A0 tau (sqrt(pi)/2) e^{-delta^2 tau^2/4} [erf(t/tau - i delta tau/2) + erf(t/tau + i delta tau/2)].
Complex alpha_symmetric_window(Complex a0, double eta, double delta, double tau, double t);

/// Final displacement e^{-delta^2 tau^2/4} sqrt(pi) eta A0 tau.
Complex alpha_infinity(Complex a0, double eta, double delta, double tau);

/// Geometric phase of one spin configuration after the full transit,
/// |eta A0|^2 tau^2 (pi/2) e^{-p^2} erfi(p) with p = delta tau / sqrt(2).
double logic_phase_coeff(Complex a0, double eta, double delta, double tau);

/// Phi_uu + Phi_dd - Phi_ud - Phi_du summed from individual spin configurations.
double logic_phase_from_coefficients(const DriveCoefficients &coefficients, double eta, double delta, double tau);

/// Closed form for the two-ion stretch mode:
///   -(pi/2) e^{-p^2} erfi(p) eta^2 (Omega_up - Omega_down)^2 tau^2 cos(2 phi_half).
double total_logic_phase(double rabi_up, double rabi_down, double eta, double delta, double tau, double phi_half);

/// Closed form weighted by the mode product 2 v1 v2; -1 for the two-ion stretch mode.
double logic_phase_closed_form(
    double mode_weight, double rabi_up, double rabi_down, double eta, double delta, double tau, double phi_half);

/// Omega_down giving a pi phase: e^{-p^2} erfi(p) eta^2 (1 - r)^2 Omega_down^2 tau^2 / 2 = 1.
/// Throws DegenerateRatio if r = 1.
double pi_phase_solve(double eta, double delta, double tau, double ratio);

/// Upper bound on the gate error from residual displacement, pi / erfi(p).
double fidelity_bound(double p);

struct TrajectorySample {
    double t = 0;
    std::array<Complex, 4> alpha{};
    std::array<double, 4> phase{};
};

/// Sampled phase-space path of every spin configuration for a gate that
/// satisfies the pi-phase condition at adiabaticity p.
struct PhaseTrajectory {
    double p = 0;
    double tau = 1;
    std::vector<TrajectorySample> samples;
    std::array<Complex, 4> alpha_final{};
    std::array<double, 4> phase_final{};
    double logic_phase = 0;
};

/// Designed pi-phase gate trajectory, in units of tau:
///   alpha_ud(t) = sqrt(pi) (erf(t/tau - i p/sqrt(2)) + 1) / (2 sqrt(erfi(p))),
/// alpha_du = -alpha_ud, alpha_uu = alpha_dd = 0. The phase columns integrate
/// Im[alpha^* d alpha] from t = -infinity.
PhaseTrajectory designed_trajectory(double p, double tau, double t_begin, double t_end, int n_samples);

/// Default sampling of 2000 points over [-6 tau, 6 tau].
PhaseTrajectory designed_trajectory(double p, double tau = 1.0);

/// Number of turns made by the direction of travel over |t| < window.
double winding_count(const PhaseTrajectory &trajectory, SpinPair pair, double window);

struct DiscreteAngle {
    int n = 0;
    double gamma = 0;
};

/// Largest n with n pi <= 2 k d.
int discrete_angle_limit(const TrapContext &ctx, double wavenumber);

/// gamma_n = arccos(n pi / (2 k d)). Requires n >= 1 and n even unless
/// allow_odd is set. Throws OutOfRange beyond the limit.
DiscreteAngle discrete_angle(const TrapContext &ctx, double wavenumber, int n, bool allow_odd = false);

/// All even n from 2 to n_max.
std::vector<DiscreteAngle> discrete_angles(const TrapContext &ctx, double wavenumber, int n_max);

/// One solved operating point of the transport phase gate.
struct GateDesign {
    int n = 0;
    double gamma = 0;
    double eta = 0;
    double speed = 0;
    /// Transit time in the table convention, used for p and the pi-phase condition.
    double tau = 0;
    /// Transit time in the text convention, twice tau.
    double tau_text = 0;
    /// Time to cross +-2.6 waists along the trajectory.
    double full_transit_time = 0;
    double delta = 0;
    double delta0 = 0;
    double rabi_down = 0;
    double rabi_up = 0;
    double ratio = 0;
    double p = 0;
    double epsilon_bound = 0;
    double phi_half = 0;
    TransitConvention convention = TransitConvention::Table;
    /// delta / omega_COM; should be small.
    double detuning_ratio = 0;
};

/// Solves a gate design on the blue-detuned branch delta_0 > omega_str:
/// gamma_n, then v from p = (delta_0 - omega_str) tau / sqrt(2), then eta and
/// Omega_down. Throws NoSolution if no positive speed exists.
GateDesign design_row(
    const TrapContext &ctx, double waist, double wavelength, double p, double ratio, int n, bool allow_odd = false);

/// Fraction of a phase-space revolution during which one quantum is gained:
/// heating_rate * 2 pi / delta.
double heating_robustness(double heating_rate, double delta);

/// eta * max |alpha| over every sample of every spin configuration.
double lamb_dicke_validity(double eta, const PhaseTrajectory &trajectory);

/// diag(1, 1, 1, e^{i phi}) in the basis uu, ud, du, dd.
Eigen::Matrix4cd phase_gate_matrix(double logic_phase);

}  // namespace tgate
