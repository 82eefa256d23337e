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

#include "tgate/physics.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "tgate/error.h"

namespace tgate {

namespace {

// Below this |cos(angle)| the wavevector difference is taken as perpendicular
// to the transport axis.
constexpr double kZeroProjection = 1e-12;

void require_positive(double x, const std::string &what) {
    if (!(x > 0) || !std::isfinite(x)) {
        throw Error(ErrorCode::InvalidArgument, what + " must be positive and finite");
    }
}

}  // namespace

double IonSpecies::hyperfine_wavelength() const {
    return 2 * std::numbers::pi * constants::speed_of_light / qubit_splitting;
}

IonSpecies make_species(std::string name, double mass, double qubit_splitting, double raman_wavelength) {
    if (name.empty()) {
        throw Error(ErrorCode::InvalidArgument, "species name must not be empty");
    }
    require_positive(mass, "species mass");
    require_positive(qubit_splitting, "qubit splitting");
    require_positive(raman_wavelength, "Raman wavelength");
    return IonSpecies{std::move(name), mass, qubit_splitting, raman_wavelength};
}

const std::vector<IonSpecies> &species_registry() {
    static const std::vector<IonSpecies> registry = {
        make_species("Be9", 9.0 * constants::atomic_mass_unit, 2 * std::numbers::pi * 1.25e9, 313e-9),
        make_species("Be9-atomic", 9.0121831 * constants::atomic_mass_unit, 2 * std::numbers::pi * 1.25e9, 313e-9),
    };
    return registry;
}

IonSpecies find_species(std::string_view name) {
    for (const auto &s : species_registry()) {
        if (s.name == name) {
            return s;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown species '" + std::string(name) + "'");
}

double TrapContext::distance() const {
    return equilibrium_distance(*this);
}

double TrapContext::omega_stretch() const {
    return std::sqrt(3.0) * omega_com;
}

TrapContext make_trap(const IonSpecies &species, double omega_com) {
    require_positive(omega_com, "COM frequency");
    make_species(species.name, species.mass, species.qubit_splitting, species.raman_wavelength);
    return TrapContext{species, omega_com};
}

double equilibrium_distance(const TrapContext &ctx) {
    require_positive(ctx.omega_com, "COM frequency");
    double q = constants::elementary_charge;
    double w = ctx.omega_com;
    return std::cbrt(q * q / (2 * std::numbers::pi * constants::vacuum_permittivity * ctx.species.mass * w * w));
}

double mode_ground_extent(const TrapContext &ctx, Mode mode, int ion_count) {
    require_positive(ctx.omega_com, "COM frequency");
    double m = ctx.species.mass;
    double hbar = constants::hbar;
    if (ion_count == 1) {
        if (mode != Mode::Com) {
            throw Error(ErrorCode::InvalidArgument, "a single ion has no stretch mode");
        }
        return std::sqrt(hbar / (2 * m * ctx.omega_com));
    }
    if (ion_count != 2) {
        throw Error(ErrorCode::InvalidArgument, "ion_count must be 1 or 2");
    }
    if (mode == Mode::Com) {
        return std::sqrt(hbar / (4 * m * ctx.omega_com));
    }
    return std::sqrt(hbar / (2 * m * ctx.omega_stretch()));
}

double lamb_dicke_for_mode(double mass, double delta_k_z, double omega) {
    require_positive(mass, "mass");
    require_positive(omega, "mode frequency");
    return delta_k_z * std::sqrt(constants::hbar / (2 * mass * omega));
}

double lamb_dicke(const TrapContext &ctx, const BeamGeometry &beam) {
    if (beam.configuration == BeamConfiguration::CoPropagating) {
        throw Error(ErrorCode::ZeroProjection, "co-propagating beams carry no wavevector difference");
    }
    if (std::abs(std::cos(beam.angle)) < kZeroProjection) {
        throw Error(ErrorCode::ZeroProjection, "wavevector difference is perpendicular to the transport axis");
    }
    return lamb_dicke_for_mode(ctx.species.mass, beam.delta_k_z(), ctx.omega_stretch());
}

}  // namespace tgate
