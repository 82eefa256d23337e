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

#include "tgate/sympathetic.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "tgate/error.h"
#include "tgate/physics.h"

namespace tgate {

namespace {

constexpr double kNormSlack = 1e-9;

std::string format_double(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

double parse_field(const std::string &text, int line) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t\r");
    if (begin == std::string::npos) {
        throw Error(ErrorCode::InvalidArgument, "mode file line " + std::to_string(line) + ": empty field");
    }
    std::string trimmed = text.substr(begin, end - begin + 1);
    double value = 0;
    auto r = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (r.ec != std::errc() || r.ptr != trimmed.data() + trimmed.size()) {
        throw Error(
            ErrorCode::InvalidArgument, "mode file line " + std::to_string(line) + ": '" + trimmed + "' is not a number");
    }
    return value;
}

}  // namespace

void validate_mode(const ModeSpec &mode) {
    if (!(mode.omega > 0) || !std::isfinite(mode.omega)) {
        throw Error(ErrorCode::InvalidArgument, "mode frequency must be positive and finite");
    }
    double norm = mode.v1 * mode.v1 + mode.v2 * mode.v2;
    for (double r : mode.refrigerator_amplitudes) {
        if (!std::isfinite(r)) {
            throw Error(ErrorCode::InvalidArgument, "refrigerator amplitudes must be finite");
        }
        norm += r * r;
    }
    if (!std::isfinite(norm) || norm > 1 + kNormSlack) {
        throw Error(
            ErrorCode::InvalidArgument,
            "eigenvector components have squared norm " + format_double(norm) + " > 1");
    }
}

ModeSpec two_ion_stretch_mode(double omega) {
    return ModeSpec{omega, kStretchComponent, -kStretchComponent, {}};
}

DriveCoefficients generalized_coefficients(const ModeSpec &mode, double rabi_up, double rabi_down, double phi_half) {
    validate_mode(mode);
    return mode_drive_coefficients(mode.v1, mode.v2, rabi_up, rabi_down, phi_half);
}

double generalized_logic_phase(
    const ModeSpec &mode, double rabi_up, double rabi_down, double eta, double delta, double tau, double phi_half) {
    validate_mode(mode);
    return logic_phase_closed_form(2 * mode.v1 * mode.v2, rabi_up, rabi_down, eta, delta, tau, phi_half);
}

double mode_suitability(const ModeSpec &mode, double eta) {
    validate_mode(mode);
    return std::abs(mode.v1 * mode.v2) * eta * eta;
}

double mode_suitability(const ModeSpec &mode, double mass, double delta_k_z) {
    validate_mode(mode);
    return mode_suitability(mode, lamb_dicke_for_mode(mass, delta_k_z, mode.omega));
}

SpacingCheck check_spacing(double delta_k_z, double qubit_spacing, double tolerance) {
    if (!std::isfinite(delta_k_z) || !(qubit_spacing > 0) || !std::isfinite(qubit_spacing) || !(tolerance >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "spacing check needs finite inputs and a positive spacing");
    }
    SpacingCheck check;
    check.half_periods = std::abs(delta_k_z) * qubit_spacing / std::numbers::pi;
    check.nearest_n = static_cast<int>(std::lround(check.half_periods));
    check.deviation = std::abs(check.half_periods - check.nearest_n);
    check.satisfied = check.deviation <= tolerance;
    return check;
}

std::vector<ModeSpec> read_mode_csv(std::istream &in) {
    std::vector<ModeSpec> modes;
    std::string line;
    int line_number = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        line_number++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (line.compare(start, 8, "omega_hz") != 0) {
                throw Error(
                    ErrorCode::InvalidArgument,
                    "mode file line " + std::to_string(line_number) + ": expected the header omega_hz,v1,v2[,...]");
            }
            continue;
        }
        std::vector<double> fields;
        size_t pos = 0;
        while (true) {
            size_t comma = line.find(',', pos);
            fields.push_back(parse_field(line.substr(pos, comma - pos), line_number));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
        if (fields.size() < 3) {
            throw Error(
                ErrorCode::InvalidArgument,
                "mode file line " + std::to_string(line_number) + ": expected omega_hz,v1,v2[,refrigerator...]");
        }
        ModeSpec mode;
        mode.omega = 2 * std::numbers::pi * fields[0];
        mode.v1 = fields[1];
        mode.v2 = fields[2];
        mode.refrigerator_amplitudes.assign(fields.begin() + 3, fields.end());
        try {
            validate_mode(mode);
        } catch (const Error &e) {
            throw Error(ErrorCode::InvalidArgument, "mode file line " + std::to_string(line_number) + ": " + e.what());
        }
        modes.push_back(std::move(mode));
    }
    return modes;
}

void write_mode_csv(std::ostream &out, const std::vector<ModeSpec> &modes) {
    out << "omega_hz,v1,v2,refrigerator_amplitudes...\n";
    for (const auto &m : modes) {
        out << format_double(m.omega / (2 * std::numbers::pi)) << ',' << format_double(m.v1) << ','
            << format_double(m.v2);
        for (double r : m.refrigerator_amplitudes) {
            out << ',' << format_double(r);
        }
        out << '\n';
    }
}

}  // namespace tgate
