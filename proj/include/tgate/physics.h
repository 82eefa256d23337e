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
#include <string_view>
#include <vector>

#include "tgate/beams.h"

namespace tgate {

/// CODATA 2018 values, SI units.
namespace constants {
inline constexpr double elementary_charge = 1.602176634e-19;
inline constexpr double vacuum_permittivity = 8.8541878128e-12;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double atomic_mass_unit = 1.66053906660e-27;
inline constexpr double bohr_magneton = 9.2740100783e-24;
inline constexpr double speed_of_light = 299792458.0;
}  // namespace constants

struct IonSpecies {
    std::string name;
    double mass = 0;
    /// Hyperfine qubit splitting omega_0 in rad/s.
    double qubit_splitting = 0;
    double raman_wavelength = 0;

    /// Lambda_0 = 2 pi c / omega_0.
    double hyperfine_wavelength() const;
};

IonSpecies make_species(std::string name, double mass, double qubit_splitting, double raman_wavelength);

/// Built-in species. "Be9" uses the nominal mass of 9 u that the published
/// gate tables are computed with; "Be9-atomic" uses the atomic mass.
const std::vector<IonSpecies> &species_registry();
IonSpecies find_species(std::string_view name);

/// Two identical ions in a harmonic well with axial COM frequency omega_com.
struct TrapContext {
    IonSpecies species;
    double omega_com = 0;

    /// Equilibrium ion separation.
    double distance() const;
    double omega_stretch() const;
};

TrapContext make_trap(const IonSpecies &species, double omega_com);

/// d = [q^2 / (2 pi eps0 m omega_com^2)]^{1/3}.
double equilibrium_distance(const TrapContext &ctx);

enum class Mode {
    Com,
    Stretch,
};

/// Ground-state extent of a motional mode. A single ion uses sqrt(hbar/(2 m w));
/// for two ions the COM mode uses sqrt(hbar/(4 m w_com)) and the stretch mode
/// sqrt(hbar/(2 m w_str)).
double mode_ground_extent(const TrapContext &ctx, Mode mode, int ion_count);

/// eta = Delta k_z sqrt(hbar / (2 m omega)).
double lamb_dicke_for_mode(double mass, double delta_k_z, double omega);

/// Lamb-Dicke parameter of the stretch mode for the given beams.
/// Throws ZeroProjection if the wavevector difference has no axial component.
double lamb_dicke(const TrapContext &ctx, const BeamGeometry &beam);

}  // namespace tgate
