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

#include "tgate/phasegate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tgate/error.h"

namespace tgate {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
// Transit window used for the full-transit time, in waists on each side.
constexpr double kTransitCutoffWaists = 2.6;

void require_positive(double x, const char *what) {
    if (!(x > 0) || !std::isfinite(x)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive and finite");
    }
}

void require_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be finite");
    }
}

// Common prefactor eta A0 tau (sqrt(pi)/2) e^{-delta^2 tau^2/4}.
Complex displacement_prefactor(Complex a0, double eta, double delta, double tau) {
    double y = delta * tau / 2;
    return a0 * (eta * tau * kSqrtPi / 2 * std::exp(-y * y));
}

}  // namespace

const char *spin_pair_label(SpinPair pair) {
    switch (pair) {
        case UpUp:
            return "uu";
        case UpDown:
            return "ud";
        case DownUp:
            return "du";
        case DownDown:
            return "dd";
    }
    return "??";
}

DriveCoefficients mode_drive_coefficients(double v1, double v2, double rabi_up, double rabi_down, double phi_half) {
    Complex left = std::polar(v1, -phi_half);
    Complex right = std::polar(v2, phi_half);
    DriveCoefficients c;
    c.amplitude[UpUp] = (left + right) * rabi_up;
    c.amplitude[UpDown] = left * rabi_up + right * rabi_down;
    c.amplitude[DownUp] = left * rabi_down + right * rabi_up;
    c.amplitude[DownDown] = (left + right) * rabi_down;
    c.phi_half = phi_half;
    c.rabi_up = rabi_up;
    c.rabi_down = rabi_down;
    return c;
}

DriveCoefficients drive_coefficients(double rabi_up, double rabi_down, double phi_half) {
    return mode_drive_coefficients(kStretchComponent, -kStretchComponent, rabi_up, rabi_down, phi_half);
}

double doppler_detuning(double wavenumber, double speed, double angle) {
    return 2 * wavenumber * speed * std::cos(angle);
}

Complex alpha_of_t(Complex a0, double eta, double delta, double tau, double t) {
    require_positive(tau, "tau");
    if (std::isinf(t)) {
        return t < 0 ? Complex(0, 0) : alpha_infinity(a0, eta, delta, tau);
    }
    Complex w = erf_complex(Complex(t / tau, -delta * tau / 2));
    return displacement_prefactor(a0, eta, delta, tau) * (1.0 + w);
}

Complex alpha_symmetric_window(Complex a0, double eta, double delta, double tau, double t) {
    require_positive(tau, "tau");
    if (std::isinf(t)) {
        return alpha_infinity(a0, eta, delta, tau);
    }
    double y = delta * tau / 2;
    Complex w = erf_complex(Complex(t / tau, -y)) + erf_complex(Complex(t / tau, y));
    return displacement_prefactor(a0, eta, delta, tau) * w;
}

Complex alpha_infinity(Complex a0, double eta, double delta, double tau) {
    require_positive(tau, "tau");
    return 2.0 * displacement_prefactor(a0, eta, delta, tau);
}

double logic_phase_coeff(Complex a0, double eta, double delta, double tau) {
    require_positive(tau, "tau");
    double scale = std::abs(eta * a0) * tau;
    return scale * scale * (std::numbers::pi / 2) * erfi_scaled(delta * tau / std::numbers::sqrt2);
}

double logic_phase_from_coefficients(const DriveCoefficients &coefficients, double eta, double delta, double tau) {
    double uu = logic_phase_coeff(coefficients[UpUp], eta, delta, tau);
    double dd = logic_phase_coeff(coefficients[DownDown], eta, delta, tau);
    double ud = logic_phase_coeff(coefficients[UpDown], eta, delta, tau);
    double du = logic_phase_coeff(coefficients[DownUp], eta, delta, tau);
    return uu + dd - (ud + du);
}

double logic_phase_closed_form(
    double mode_weight, double rabi_up, double rabi_down, double eta, double delta, double tau, double phi_half) {
    require_positive(tau, "tau");
    double contrast = eta * (rabi_up - rabi_down) * tau;
    return (std::numbers::pi / 2) * mode_weight * erfi_scaled(delta * tau / std::numbers::sqrt2) * contrast *
           contrast * std::cos(2 * phi_half);
}

double total_logic_phase(double rabi_up, double rabi_down, double eta, double delta, double tau, double phi_half) {
    constexpr double weight = 2 * kStretchComponent * -kStretchComponent;
    return logic_phase_closed_form(weight, rabi_up, rabi_down, eta, delta, tau, phi_half);
}

double pi_phase_solve(double eta, double delta, double tau, double ratio) {
    require_finite(ratio, "Rabi ratio");
    if (ratio == 1) {
        throw Error(ErrorCode::DegenerateRatio, "equal Rabi rates produce no logical phase");
    }
    require_positive(tau, "tau");
    require_finite(eta, "eta");
    if (eta == 0) {
        throw Error(ErrorCode::InvalidArgument, "eta must be non-zero");
    }
    double p = delta * tau / std::numbers::sqrt2;
    require_positive(p, "adiabaticity parameter");
    return std::numbers::sqrt2 / (std::abs(1 - ratio) * std::abs(eta) * tau * std::sqrt(erfi_scaled(p)));
}

double fidelity_bound(double p) {
    require_positive(p, "adiabaticity parameter");
    return std::numbers::pi * std::exp(-p * p) / erfi_scaled(p);
}

PhaseTrajectory designed_trajectory(double p, double tau, double t_begin, double t_end, int n_samples) {
    require_positive(p, "adiabaticity parameter");
    require_positive(tau, "tau");
    require_finite(t_begin, "trajectory start");
    require_finite(t_end, "trajectory end");
    if (!(t_begin < t_end)) {
        throw Error(ErrorCode::InvalidArgument, "trajectory start must precede its end");
    }
    if (n_samples < 2) {
        throw Error(ErrorCode::InvalidArgument, "trajectory needs at least 2 samples");
    }

    double y = p / std::numbers::sqrt2;
    double norm = 1 / std::sqrt(erfi_real(p));
    auto alpha = [&](double t) { return kSqrtPi / 2 * norm * (erf_complex(Complex(t / tau, -y)) + 1.0); };
    auto velocity = [&](double t) {
        Complex x(t / tau, -y);
        return norm / tau * std::exp(-x * x);
    };
    auto phase_rate = [&](double t) { return Complex(std::imag(std::conj(alpha(t)) * velocity(t)), 0); };

    PhaseTrajectory traj;
    traj.p = p;
    traj.tau = tau;
    traj.samples.resize(n_samples);

    // Phase accumulated before the first sample; the drive is negligible
    // before -8 tau.
    double phase = 0;
    double start = -8 * tau;
    if (t_begin > start) {
        QuadratureOptions options;
        options.tol = 1e-15;
        options.max_panel_width = tau;
        phase = integrate_adaptive(phase_rate, start, t_begin, options).value.real();
    }

    GaussLegendreRule rule = gauss_legendre(8);
    double previous_t = t_begin;
    for (int i = 0; i < n_samples; i++) {
        double t = i + 1 == n_samples ? t_end : t_begin + (t_end - t_begin) * i / (n_samples - 1);
        if (i > 0) {
            // Pieces no wider than tau / 4 keep the 8-point rule exact to
            // rounding however sparse the sampling.
            int pieces = std::max(1, static_cast<int>(std::ceil(4 * (t - previous_t) / tau)));
            double half = (t - previous_t) / (2 * pieces);
            for (int k = 0; k < pieces; k++) {
                double mid = previous_t + (2 * k + 1) * half;
                for (size_t j = 0; j < rule.nodes.size(); j++) {
                    phase += half * rule.weights[j] * phase_rate(mid + half * rule.nodes[j]).real();
                }
            }
        }
        Complex a = alpha(t);
        TrajectorySample &s = traj.samples[i];
        s.t = t;
        s.alpha = {Complex(0, 0), a, -a, Complex(0, 0)};
        s.phase = {0, phase, phase, 0};
        previous_t = t;
    }

    Complex a_final = kSqrtPi * norm;
    traj.alpha_final = {Complex(0, 0), a_final, -a_final, Complex(0, 0)};
    traj.phase_final = {0, std::numbers::pi / 2, std::numbers::pi / 2, 0};
    traj.logic_phase = -std::numbers::pi;
    return traj;
}

PhaseTrajectory designed_trajectory(double p, double tau) {
    return designed_trajectory(p, tau, -6 * tau, 6 * tau, 2000);
}

double winding_count(const PhaseTrajectory &trajectory, SpinPair pair, double window) {
    double turned = 0;
    bool have_heading = false;
    double heading = 0;
    const auto &samples = trajectory.samples;
    for (size_t i = 1; i < samples.size(); i++) {
        double limit = window * trajectory.tau;
        if (std::abs(samples[i - 1].t) >= limit || std::abs(samples[i].t) >= limit) {
            continue;
        }
        Complex step = samples[i].alpha[pair] - samples[i - 1].alpha[pair];
        if (step == Complex(0, 0)) {
            continue;
        }
        double next = std::arg(step);
        if (have_heading) {
            turned += std::remainder(next - heading, 2 * std::numbers::pi);
        }
        heading = next;
        have_heading = true;
    }
    return std::abs(turned) / (2 * std::numbers::pi);
}

int discrete_angle_limit(const TrapContext &ctx, double wavenumber) {
    require_positive(wavenumber, "wavenumber");
    return static_cast<int>(std::floor(2 * wavenumber * ctx.distance() / std::numbers::pi));
}

DiscreteAngle discrete_angle(const TrapContext &ctx, double wavenumber, int n, bool allow_odd) {
    require_positive(wavenumber, "wavenumber");
    if (n < 1) {
        throw Error(ErrorCode::OutOfRange, "n must be at least 1, got " + std::to_string(n));
    }
    if (n % 2 != 0 && !allow_odd) {
        throw Error(ErrorCode::InvalidArgument, "odd n leaves A_uu and A_dd non-zero; enable odd n explicitly");
    }
    double argument = n * std::numbers::pi / (2 * wavenumber * ctx.distance());
    if (argument > 1) {
        throw Error(
            ErrorCode::OutOfRange,
            "n = " + std::to_string(n) + " exceeds the largest reachable n = " +
                std::to_string(discrete_angle_limit(ctx, wavenumber)));
    }
    return DiscreteAngle{n, std::acos(argument)};
}

std::vector<DiscreteAngle> discrete_angles(const TrapContext &ctx, double wavenumber, int n_max) {
    std::vector<DiscreteAngle> result;
    for (int n = 2; n <= n_max; n += 2) {
        result.push_back(discrete_angle(ctx, wavenumber, n));
    }
    return result;
}

GateDesign design_row(
    const TrapContext &ctx, double waist, double wavelength, double p, double ratio, int n, bool allow_odd) {
    require_positive(p, "target adiabaticity parameter");
    require_positive(waist, "beam waist");
    require_positive(wavelength, "wavelength");
    double k = 2 * std::numbers::pi / wavelength;
    DiscreteAngle angle = discrete_angle(ctx, k, n, allow_odd);
    double gamma = angle.gamma;
    double omega_str = ctx.omega_stretch();

    // p = (2 k v cos(gamma) - omega_str) tau_tab / sqrt(2) with
    // tau_tab = w0 / (2 sqrt(2) v sin(gamma)) is linear in 1/v.
    double denominator = 2 * k * waist * std::cos(gamma) - 4 * p * std::sin(gamma);
    double speed = omega_str * waist / denominator;
    if (!(denominator > 0) || !std::isfinite(speed) || !(speed > 0)) {
        throw Error(
            ErrorCode::NoSolution,
            "no positive transport speed reaches p = " + std::to_string(p) + " at n = " + std::to_string(n));
    }

    BeamGeometry beam = make_beam(waist, wavelength, gamma);
    GateDesign d;
    d.n = n;
    d.gamma = gamma;
    d.speed = speed;
    d.tau = transit_time(beam, speed, TransitConvention::Table);
    d.tau_text = transit_time(beam, speed, TransitConvention::Text);
    d.full_transit_time = 2 * kTransitCutoffWaists * waist / (speed * std::sin(gamma));
    d.delta0 = doppler_detuning(k, speed, gamma);
    d.delta = d.delta0 - omega_str;
    d.eta = lamb_dicke(ctx, beam);
    d.ratio = ratio;
    d.rabi_down = pi_phase_solve(d.eta, d.delta, d.tau, ratio);
    d.rabi_up = ratio * d.rabi_down;
    d.p = p;
    d.epsilon_bound = fidelity_bound(p);
    d.phi_half = n * std::numbers::pi / 2;
    d.convention = TransitConvention::Table;
    d.detuning_ratio = d.delta / ctx.omega_com;
    return d;
}

double heating_robustness(double heating_rate, double delta) {
    require_positive(delta, "detuning");
    if (!(heating_rate >= 0) || !std::isfinite(heating_rate)) {
        throw Error(ErrorCode::InvalidArgument, "heating rate must be non-negative and finite");
    }
    return heating_rate * 2 * std::numbers::pi / delta;
}

double lamb_dicke_validity(double eta, const PhaseTrajectory &trajectory) {
    double peak = 0;
    for (const auto &s : trajectory.samples) {
        for (const auto &a : s.alpha) {
            peak = std::max(peak, std::abs(a));
        }
    }
    return std::abs(eta) * peak;
}

Eigen::Matrix4cd phase_gate_matrix(double logic_phase) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(3, 3) = std::polar(1.0, logic_phase);
    return m;
}

}  // namespace tgate
