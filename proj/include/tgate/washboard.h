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

#include "tgate/physics.h"

namespace tgate {

/// Ions carried at constant speed over a periodic magnet array. Fields in
/// tesla, period in metres, speed in m/s.
struct WashboardSpec {
    double bias_field = 0;
    double washboard_field = 0;
    double period = 0;
    double speed = 0;
    /// Smallest gyromagnetic ratio of the qubit states, rad/(s T).
    double gyromagnetic_min = constants::bohr_magneton / constants::hbar;
};

/// Throws InvalidArgument for non-positive parameters and ExpansionInvalid
/// unless bias_field > washboard_field.
void validate_washboard(const WashboardSpec &spec);

/// omega_w = 2 pi v / d_m.
double washboard_frequency(const WashboardSpec &spec);

/// |B(t)| = sqrt((B0 - Bw cos wt)^2 + (Bw sin wt)^2).
double field_total(const WashboardSpec &spec, double t);

struct HarmonicDecomposition {
    /// B0 (1 + (Bw/B0)^2 / 4).
    double dc_field = 0;
    double oscillating_field = 0;
    double frequency = 0;
    /// max over one period of |exact - (dc - osc cos wt)|, from a dense scan.
    double residual = 0;
};

HarmonicDecomposition harmonic_decomposition(const WashboardSpec &spec);

/// DC offset of the harmonic approximation above the bias, Bw^2 / (4 B0).
double dc_offset(const WashboardSpec &spec);

/// Exact time average of |B| over a period minus B0.
double mean_field_offset(const WashboardSpec &spec);

/// Omega_m = (2 pi / d_m) z0 mu_B Bw / hbar with the two-ion COM extent z0.
double gate_rabi(const WashboardSpec &spec, const TrapContext &ctx);

/// pi / Omega_m.
double gate_duration(const WashboardSpec &spec, const TrapContext &ctx);

struct ZPhase {
    double total = 0;
    /// total reduced to [0, 2 pi).
    double wrapped = 0;
};

/// Differential Z phase of the stretched-state pair from the DC offset:
/// 2 mu_B (Bw^2 / 4 B0) duration / hbar.
ZPhase residual_z_phase(const WashboardSpec &spec, double duration);

/// max |dB/dt| / |B| divided by gamma_min min |B|, over one period; much less
/// than 1 means the spins follow the field adiabatically.
double adiabaticity_margin(const WashboardSpec &spec);

/// eta_m = 2 pi z0 / d_m.
double magnetic_lamb_dicke(const WashboardSpec &spec, const TrapContext &ctx);

}  // namespace tgate
