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

#include "tgate/beams.h"

#include <cmath>
#include <numbers>
#include <string>

#include "tgate/error.h"

namespace tgate {

namespace {

// Below this |sin(angle)| the transport is treated as running along the beam.
constexpr double kDegenerateSine = 1e-12;

void require_positive(double x, const char *what) {
    if (!(x > 0) || !std::isfinite(x)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive and finite");
    }
}

}  // namespace

double BeamGeometry::wavenumber() const {
    return 2 * std::numbers::pi / wavelength;
}

double BeamGeometry::rayleigh_range() const {
    return wavenumber() * waist * waist / 2;
}

double BeamGeometry::delta_k_z() const {
    if (configuration == BeamConfiguration::CoPropagating) {
        return 0;
    }
    return 2 * wavenumber() * std::cos(angle);
}

BeamGeometry make_beam(double waist, double wavelength, double angle, BeamConfiguration configuration) {
    require_positive(waist, "beam waist");
    require_positive(wavelength, "wavelength");
    if (!(angle >= 0 && angle <= std::numbers::pi)) {
        throw Error(ErrorCode::InvalidArgument, "beam angle must lie in [0, pi] rad");
    }
    return BeamGeometry{waist, wavelength, angle, configuration};
}

double field_amplitude(const BeamGeometry &beam, double r, double z, double paraxial_fraction) {
    if (!std::isfinite(r) || !std::isfinite(z)) {
        throw Error(ErrorCode::InvalidArgument, "field position must be finite");
    }
    require_positive(paraxial_fraction, "paraxial fraction");
    double limit = paraxial_fraction * beam.rayleigh_range();
    if (std::abs(z) >= limit) {
        throw Error(
            ErrorCode::ParaxialDomain,
            "|z| = " + std::to_string(std::abs(z)) + " m is outside the collimated region |z| < " +
                std::to_string(limit) + " m");
    }
    double x = r / beam.waist;
    return std::exp(-x * x);
}

double TransitEnvelope::rabi_at(double t) const {
    double x = t / tau;
    return peak_rabi * std::exp(-x * x);
}

double TransitEnvelope::half_window() const {
    return start_offset / transverse_speed;
}

TransitEnvelope envelope(const BeamGeometry &beam, double speed, double peak_rabi, double start_offset) {
    require_positive(speed, "transport speed");
    if (!std::isfinite(peak_rabi) || !(start_offset >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "peak Rabi rate must be finite and start offset non-negative");
    }
    double s = std::sin(beam.angle);
    if (std::abs(s) < kDegenerateSine) {
        throw Error(ErrorCode::DegenerateGeometry, "transport direction is parallel to the beam axis");
    }
    TransitEnvelope env;
    env.peak_rabi = peak_rabi;
    env.speed = speed;
    env.transverse_speed = speed * s;
    env.tau = beam.waist / (std::numbers::sqrt2 * env.transverse_speed);
    env.start_offset = start_offset;
    return env;
}

double transit_time(const BeamGeometry &beam, double speed, TransitConvention convention) {
    require_positive(speed, "transport speed");
    double s = std::sin(beam.angle);
    if (std::abs(s) < kDegenerateSine) {
        throw Error(ErrorCode::DegenerateGeometry, "transport direction is parallel to the beam axis");
    }
    double tau = beam.waist / (std::numbers::sqrt2 * speed * s);
    return convention == TransitConvention::Table ? tau / 2 : tau;
}

}  // namespace tgate
