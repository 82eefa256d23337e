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

#include "tgate/washboard.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tgate/error.h"
#include "tgate/rotations.h"

namespace tgate {

namespace {

constexpr int kScanPoints = 10000;

}  // namespace

void validate_washboard(const WashboardSpec &spec) {
    auto positive = [](double x, const char *what) {
        if (!(x > 0) || !std::isfinite(x)) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive and finite");
        }
    };
    positive(spec.bias_field, "bias field");
    positive(spec.period, "washboard period");
    positive(spec.speed, "transport speed");
    positive(spec.gyromagnetic_min, "gyromagnetic ratio");
    if (!(spec.washboard_field >= 0) || !std::isfinite(spec.washboard_field)) {
        throw Error(ErrorCode::InvalidArgument, "washboard field must be non-negative and finite");
    }
    if (!(spec.washboard_field < spec.bias_field)) {
        throw Error(ErrorCode::ExpansionInvalid, "harmonic expansion requires washboard field < bias field");
    }
}

double washboard_frequency(const WashboardSpec &spec) {
    return 2 * std::numbers::pi * spec.speed / spec.period;
}

double field_total(const WashboardSpec &spec, double t) {
    double phase = washboard_frequency(spec) * t;
    double axial = spec.bias_field - spec.washboard_field * std::cos(phase);
    double transverse = spec.washboard_field * std::sin(phase);
    return std::hypot(axial, transverse);
}

double dc_offset(const WashboardSpec &spec) {
    return spec.washboard_field * spec.washboard_field / (4 * spec.bias_field);
}

HarmonicDecomposition harmonic_decomposition(const WashboardSpec &spec) {
    validate_washboard(spec);
    HarmonicDecomposition h;
    h.dc_field = spec.bias_field + dc_offset(spec);
    h.oscillating_field = spec.washboard_field;
    h.frequency = washboard_frequency(spec);
    double period = 2 * std::numbers::pi / h.frequency;
    for (int i = 0; i < kScanPoints; i++) {
        double t = period * i / kScanPoints;
        double approx = h.dc_field - h.oscillating_field * std::cos(h.frequency * t);
        h.residual = std::max(h.residual, std::abs(field_total(spec, t) - approx));
    }
    return h;
}

double mean_field_offset(const WashboardSpec &spec) {
    validate_washboard(spec);
    // The rectangle rule is spectrally accurate for a smooth periodic integrand.
    double sum = 0;
    double period = 2 * std::numbers::pi / washboard_frequency(spec);
    for (int i = 0; i < kScanPoints; i++) {
        sum += field_total(spec, period * i / kScanPoints);
    }
    return sum / kScanPoints - spec.bias_field;
}

double magnetic_lamb_dicke(const WashboardSpec &spec, const TrapContext &ctx) {
    validate_washboard(spec);
    return 2 * std::numbers::pi / spec.period * mode_ground_extent(ctx, Mode::Com, 2);
}

double gate_rabi(const WashboardSpec &spec, const TrapContext &ctx) {
    return magnetic_lamb_dicke(spec, ctx) * constants::bohr_magneton * spec.washboard_field / constants::hbar;
}

double gate_duration(const WashboardSpec &spec, const TrapContext &ctx) {
    double rabi = gate_rabi(spec, ctx);
    if (!(rabi > 0)) {
        throw Error(ErrorCode::InvalidArgument, "gate duration is unbounded without a washboard field");
    }
    return std::numbers::pi / rabi;
}

ZPhase residual_z_phase(const WashboardSpec &spec, double duration) {
    validate_washboard(spec);
    if (!(duration >= 0) || !std::isfinite(duration)) {
        throw Error(ErrorCode::InvalidArgument, "duration must be non-negative and finite");
    }
    // The stretched states m_F = +2 and m_F = -2 shift by +-mu_B per gauss
    // unit of field, so the pair separates at 2 mu_B.
    double total = 2 * constants::bohr_magneton * dc_offset(spec) * duration / constants::hbar;
    return ZPhase{total, wrap_angle(total)};
}

double adiabaticity_margin(const WashboardSpec &spec) {
    validate_washboard(spec);
    double w = washboard_frequency(spec);
    double period = 2 * std::numbers::pi / w;
    double max_rate = 0;
    double min_field = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kScanPoints; i++) {
        double t = period * i / kScanPoints;
        double b = field_total(spec, t);
        // dB/dt = (Bw w sin wt, Bw w cos wt), of constant magnitude Bw w.
        double rate = spec.washboard_field * w;
        max_rate = std::max(max_rate, rate / b);
        min_field = std::min(min_field, b);
    }
    return max_rate / (spec.gyromagnetic_min * min_field);
}

}  // namespace tgate
