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

#include "tgate/rotations.h"

#include <cmath>
#include <numbers>
#include <string>

#include "tgate/error.h"
#include "tgate/numerics.h"

namespace tgate {

namespace {

constexpr double kUnitarityTolerance = 1e-10;
constexpr double kDegenerateSine = 1e-12;

}  // namespace

Matrix2c OneQubitRotation::matrix() const {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    Complex minus_i(0, -1);
    Matrix2c m;
    m << c, minus_i * std::polar(s, -phi), minus_i * std::polar(s, phi), c;
    return m;
}

Matrix2c ZRotation::matrix() const {
    Matrix2c m;
    m << std::polar(1.0, phi), 0, 0, std::polar(1.0, -phi);
    return m;
}

RotationAngle rotation_angle(const TransitEnvelope &env, double half_window) {
    if (!(half_window >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "transit half-window must be non-negative");
    }
    double fraction = std::isinf(half_window) ? 1.0 : erf_real(half_window / env.tau);
    double area = env.peak_rabi * env.tau * std::sqrt(std::numbers::pi) * fraction;
    return RotationAngle{area, 2 * area};
}

RotationAngle rotation_angle(const TransitEnvelope &env) {
    return rotation_angle(env, env.half_window());
}

TruncationError truncation_error(double start_offset, const BeamGeometry &beam) {
    if (!(start_offset >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "start offset must be non-negative");
    }
    double x = std::numbers::sqrt2 * start_offset * std::sin(beam.angle) / beam.waist;
    double relative = std::erfc(x);
    return TruncationError{relative, relative * relative};
}

double transit_time_ratio(double cutoff_in_waists) {
    if (!(cutoff_in_waists > 0) || !std::isfinite(cutoff_in_waists)) {
        throw Error(ErrorCode::InvalidArgument, "cutoff must be positive and finite");
    }
    return cutoff_in_waists * std::sqrt(2 / std::numbers::pi);
}

double solve_velocity(const BeamGeometry &beam, double peak_rabi, double theta_target) {
    if (!(theta_target > 0) || !std::isfinite(theta_target)) {
        throw Error(ErrorCode::InvalidArgument, "target rotation angle must be positive");
    }
    if (!(peak_rabi > 0) || !std::isfinite(peak_rabi)) {
        throw Error(ErrorCode::InvalidArgument, "peak Rabi rate must be positive");
    }
    double s = std::sin(beam.angle);
    if (std::abs(s) < kDegenerateSine) {
        throw Error(ErrorCode::DegenerateGeometry, "transport direction is parallel to the beam axis");
    }
    // theta = 2 Omega_m tau sqrt(pi) with tau = w0 / (sqrt(2) v sin).
    return peak_rabi * beam.waist * std::sqrt(2 * std::numbers::pi) / (s * theta_target);
}

double wrap_angle(double angle) {
    double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(angle, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    return r >= two_pi ? 0.0 : r;
}

double site_phase(double path_length, const IonSpecies &species) {
    if (!(path_length >= 0) || !std::isfinite(path_length)) {
        throw Error(ErrorCode::InvalidArgument, "path length must be non-negative and finite");
    }
    double turns = path_length / species.hyperfine_wavelength();
    return 2 * std::numbers::pi * (turns - std::floor(turns));
}

Matrix2c ZrzDecomposition::reconstruct(double azimuth) const {
    return std::polar(1.0, global_phase) * ZRotation{phi3}.matrix() * OneQubitRotation{theta2, azimuth}.matrix() *
           ZRotation{phi1}.matrix();
}

ZrzDecomposition decompose_one_qubit(const Matrix2c &u, double azimuth) {
    if (!u.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
    }
    double deviation = (u * u.adjoint() - Matrix2c::Identity()).norm();
    if (deviation > kUnitarityTolerance) {
        throw Error(ErrorCode::NotUnitary, "matrix deviates from unitarity by " + std::to_string(deviation));
    }

    // Strip the global phase so that V lies in SU(2):
    //   V = [[e^{i sigma} c, -i e^{-i phi} e^{i Delta} s], [-i e^{i phi} e^{-i Delta} s, e^{-i sigma} c]]
    // with sigma = phi1 + phi3 and Delta = phi3 - phi1.
    ZrzDecomposition d;
    d.global_phase = std::arg(u.determinant()) / 2;
    Matrix2c v = std::polar(1.0, -d.global_phase) * u;
    double c = std::abs(v(0, 0));
    double s = std::abs(v(1, 0));
    d.theta2 = 2 * std::atan2(s, c);
    double sigma = c > 0 ? std::arg(v(0, 0)) : 0.0;
    double delta = s > 0 ? -std::arg(Complex(0, 1) * std::polar(1.0, -azimuth) * v(1, 0)) : 0.0;
    d.phi1 = (sigma - delta) / 2;
    d.phi3 = (sigma + delta) / 2;
    return d;
}

ZRotation merge_z(const ZRotation &previous_final, const ZRotation &next_initial) {
    return ZRotation{wrap_angle(previous_final.phi + next_initial.phi)};
}

}  // namespace tgate
