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

namespace tgate {

enum class BeamConfiguration {
    CoPropagating,
    CounterPropagating,
};

/// A pair of Raman beams sharing one paraxial Gaussian mode function.
///
/// `angle` is measured between the beam axis and the transport direction.
struct BeamGeometry {
    double waist = 0;
    double wavelength = 0;
    double angle = 0;
    BeamConfiguration configuration = BeamConfiguration::CounterPropagating;

    double wavenumber() const;
    double rayleigh_range() const;
    /// Projection of the wavevector difference on the transport axis.
    double delta_k_z() const;
};

/// Validates and builds a beam geometry: waist and wavelength positive,
/// angle in [0, pi].
BeamGeometry make_beam(
    double waist,
    double wavelength,
    double angle,
    BeamConfiguration configuration = BeamConfiguration::CounterPropagating);

/// Relative field amplitude e^{-r^2/w0^2} in the collimated region.
///
/// Throws ParaxialDomain when |z| >= paraxial_fraction * z_r, where the
/// wavefront curvature would no longer be negligible.
double field_amplitude(const BeamGeometry &beam, double r, double z, double paraxial_fraction = 0.1);

/// Coupling seen by an ion crossing the beam: Omega(t) = Omega_m e^{-t^2/tau^2}.
struct TransitEnvelope {
    double peak_rabi = 0;
    double tau = 0;
    double speed = 0;
    /// Speed component perpendicular to the beam axis, v sin(angle).
    double transverse_speed = 0;
    /// Distance from the beam centre at which the transit starts.
    double start_offset = std::numeric_limits<double>::infinity();

    double rabi_at(double t) const;
    /// Half-window of the transit implied by start_offset.
    double half_window() const;
};

/// Builds the transit envelope with tau = w0 / (sqrt(2) v sin(angle)).
/// Throws DegenerateGeometry if the transport runs along the beam axis.
TransitEnvelope envelope(
    const BeamGeometry &beam,
    double speed,
    double peak_rabi,
    double start_offset = std::numeric_limits<double>::infinity());

/// Two transit-time conventions are in use: `Text` is w0/(sqrt(2) v sin),
/// `Table` is half of it and is the one the gate design tables follow.
enum class TransitConvention {
    Text,
    Table,
};

double transit_time(const BeamGeometry &beam, double speed, TransitConvention convention);

}  // namespace tgate
