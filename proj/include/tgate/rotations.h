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

#include <limits>

#include <Eigen/Dense>

#include "tgate/beams.h"
#include "tgate/physics.h"

namespace tgate {

using Matrix2c = Eigen::Matrix2cd;

/// Rabi rotation R(theta, phi) = [[cos(theta/2), -i e^{-i phi} sin(theta/2)],
///                               [-i e^{i phi} sin(theta/2), cos(theta/2)]].
struct OneQubitRotation {
    double theta = 0;
    double phi = 0;

    Matrix2c matrix() const;
};

/// Z(phi) = diag(e^{i phi}, e^{-i phi}).
struct ZRotation {
    double phi = 0;

    Matrix2c matrix() const;
};

struct RotationAngle {
    /// Integral of the Rabi rate over the window.
    double pulse_area = 0;
    /// Polar rotation on the Bloch sphere, twice the pulse area.
    double bloch_angle = 0;
};

/// Rotation accumulated over t in [-T, T]. Infinite T integrates the whole
/// transit.
RotationAngle rotation_angle(const TransitEnvelope &env, double half_window);

/// Rotation over the window implied by the envelope's start offset.
RotationAngle rotation_angle(const TransitEnvelope &env);

struct TruncationError {
    /// 1 - erf(sqrt(2) D sin(angle) / w0).
    double relative_angle_error = 0;
    /// (relative_angle_error)^2.
    double infidelity = 0;
};

TruncationError truncation_error(double start_offset, const BeamGeometry &beam);

/// Ratio of the truncated transit time to the sampling-equivalent pulse time,
/// D / w0 * sqrt(2/pi).
double transit_time_ratio(double cutoff_in_waists);

/// Speed at which a full transit produces the Bloch angle theta_target.
double solve_velocity(const BeamGeometry &beam, double peak_rabi, double theta_target);

/// Laser phase picked up between sites a distance s0 apart, 2 pi s0 / Lambda_0
/// reduced to [0, 2 pi).
double site_phase(double path_length, const IonSpecies &species);

struct ZrzDecomposition {
    double phi1 = 0;
    double theta2 = 0;
    double phi3 = 0;
    double global_phase = 0;

    /// e^{i global} Z(phi3) R(theta2, azimuth) Z(phi1).
    Matrix2c reconstruct(double azimuth) const;
};

/// Writes U = e^{i phi4} Z(phi3) R(theta2, azimuth) Z(phi1) with theta2 in
/// [0, pi]. Throws NotUnitary if U U^dagger deviates from I by more than 1e-10.
ZrzDecomposition decompose_one_qubit(const Matrix2c &u, double azimuth);

/// Z(a) Z(b) = Z(a + b), angle reduced to [0, 2 pi).
ZRotation merge_z(const ZRotation &previous_final, const ZRotation &next_initial);

/// Reduces an angle to [0, 2 pi).
double wrap_angle(double angle);

}  // namespace tgate
