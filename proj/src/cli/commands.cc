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


#include "tgate/cli/commands.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "tgate/cli/format.h"
#include "tgate/drive_oracle.h"
#include "tgate/phasegate.h"
#include "tgate/rotations.h"
#include "tgate/washboard.h"

namespace tgate::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kGauss = 1e-4;

/// Detuning above this fraction of the COM frequency is flagged.
constexpr double kDetuningWarning = 0.1;
/// Heating during one phase-space revolution above this is flagged.
constexpr double kHeatingWarning = 0.1;

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
/// written by index; the first exception by index is rethrown.
template <typename Fn>
void parallel_for(int count, int threads, Fn fn) {
    std::vector<std::exception_ptr> errors(count);
    auto guarded = [&](int i) {
        try {
            fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    int workers = std::min(threads, count);
    if (workers <= 1) {
        for (int i = 0; i < count; i++) {
            guarded(i);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back([&] {
                for (int i = next++; i < count; i = next++) {
                    guarded(i);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

/// Named scalar results with units, rendered as a JSON object or a
/// quantity,value,unit table.
class Quantities {
   public:
    void add(const std::string &name, double value, const std::string &unit) {
        entries_.push_back({name, value, unit});
    }

    void add_count(const std::string &name, long long value) {
        entries_.push_back({name, value, "1"});
    }

    Json to_json(int precision) const {
        Json object = Json::object();
        for (const auto &e : entries_) {
            object[e.name] = cell_to_json(e.value, precision);
        }
        return object;
    }

    Table to_table() const {
        Table table{{"quantity", "value", "unit"}, {}};
        for (const auto &e : entries_) {
            table.add_row({e.name, e.value, e.unit});
        }
        return table;
    }

   private:
    struct Entry {
        std::string name;
        Cell value;
        std::string unit;
    };
    std::vector<Entry> entries_;
};

Json make_report(const std::string &command, Json parameters) {
    Json report = Json::object();
    report["tool"] = "tgate";
    report["version"] = kToolVersion;
    report["command"] = command;
    report["parameters"] = std::move(parameters);
    report["results"] = Json::object();
    report["warnings"] = Json::array();
    return report;
}

std::string render_json(const Json &report) {
    return report.dump(2) + "\n";
}

Json trap_parameters(const RunConfig &config, int precision) {
    TrapContext ctx = config.trap_context();
    Json p = Json::object();
    p["species"] = ctx.species.name;
    p["mass_kg"] = json_number(ctx.species.mass, precision);
    p["com_frequency_hz"] = json_number(ctx.omega_com / kTwoPi, precision);
    p["stretch_frequency_hz"] = json_number(ctx.omega_stretch() / kTwoPi, precision);
    p["ion_distance_m"] = json_number(ctx.distance(), precision);
    p["waist_m"] = json_number(config.waist(), precision);
    p["wavelength_m"] = json_number(config.wavelength(), precision);
    return p;
}

}  // namespace

CommandResult cmd_rotate(const RunConfig &config, const CommandOptions &options) {
    int precision = config.output.precision;
    const RotateConfig &rc = config.rotate;
    IonSpecies species = config.resolved_species();
    BeamGeometry beam = make_beam(config.waist(), config.wavelength(), rc.angle_deg * kPi / 180);
    double rabi = kTwoPi * rc.rabi_frequency_hz;
    double speed = solve_velocity(beam, rabi, rc.theta_rad);
    double offset = rc.cutoff_waists * beam.waist;
    TransitEnvelope full = envelope(beam, speed, rabi);
    TransitEnvelope truncated = envelope(beam, speed, rabi, offset);
    TruncationError truncation = truncation_error(offset, beam);

    Quantities q;
    q.add("speed_m_per_s", speed, "m/s");
    q.add("transit_time_s", full.tau, "s");
    q.add("bloch_angle_full_rad", rotation_angle(full, INFINITY).bloch_angle, "rad");
    q.add("bloch_angle_truncated_rad", rotation_angle(truncated).bloch_angle, "rad");
    q.add("transit_time_ratio", transit_time_ratio(rc.cutoff_waists), "1");
    q.add("truncation_relative_angle_error", truncation.relative_angle_error, "1");
    q.add("truncation_infidelity", truncation.infidelity, "1");
    q.add("hyperfine_wavelength_m", species.hyperfine_wavelength(), "m");
    for (double mm : rc.path_lengths_mm) {
        q.add("site_phase_rad_at_" + format_shortest(mm) + "_mm", site_phase(mm / 1e3, species), "rad");
    }

    if (options.format == OutputFormat::Csv) {
        return {q.to_table().to_csv(precision)};
    }
    Json params = trap_parameters(config, precision);
    params["rabi_frequency_hz"] = json_number(rc.rabi_frequency_hz, precision);
    params["theta_rad"] = json_number(rc.theta_rad, precision);
    params["angle_deg"] = json_number(rc.angle_deg, precision);
    params["cutoff_waists"] = json_number(rc.cutoff_waists, precision);
    Json report = make_report("rotate", params);
    report["results"] = q.to_json(precision);
    return {render_json(report)};
}

namespace {

Quantities design_quantities(const GateDesign &g, const RunConfig &config, Json &warnings) {
    const GateConfig &gc = config.gate;
    DriveCoefficients coefficients = drive_coefficients(g.rabi_up, g.rabi_down, g.phi_half);
    PhaseTrajectory trajectory = designed_trajectory(g.p, g.tau);
    double ld = lamb_dicke_validity(g.eta, trajectory);
    double heating = heating_robustness(gc.heating_rate_per_s, g.delta);

    Quantities q;
    q.add_count("n", g.n);
    q.add("gamma_deg", g.gamma * 180 / kPi, "deg");
    q.add("eta", g.eta, "1");
    q.add("speed_m_per_s", g.speed, "m/s");
    q.add("tau_s", g.tau, "s");
    q.add("tau_text_s", g.tau_text, "s");
    q.add("full_transit_time_s", g.full_transit_time, "s");
    q.add("delta_over_2pi_hz", g.delta / kTwoPi, "Hz");
    q.add("delta0_over_2pi_hz", g.delta0 / kTwoPi, "Hz");
    q.add("rabi_down_over_2pi_hz", g.rabi_down / kTwoPi, "Hz");
    q.add("rabi_up_over_2pi_hz", g.rabi_up / kTwoPi, "Hz");
    q.add("ratio", g.ratio, "1");
    q.add("p", g.p, "1");
    q.add("epsilon_bound", g.epsilon_bound, "1");
    q.add("phi_half_rad", g.phi_half, "rad");
    q.add("logic_phase_rad", total_logic_phase(g.rabi_up, g.rabi_down, g.eta, g.delta, g.tau, g.phi_half), "rad");
    q.add("logic_phase_coefficients_rad", logic_phase_from_coefficients(coefficients, g.eta, g.delta, g.tau), "rad");
    q.add("detuning_ratio", g.detuning_ratio, "1");
    q.add("lamb_dicke_validity", ld, "1");
    q.add("heating_robustness", heating, "1");

    if (g.detuning_ratio > kDetuningWarning) {
        warnings.push_back(
            "n=" + std::to_string(g.n) + ": detuning is " + format_number(g.detuning_ratio, 3) +
            " of the COM frequency (flagged above " + format_number(kDetuningWarning, 3) + ")");
    }
    if (ld > gc.lamb_dicke_threshold) {
        warnings.push_back(
            "n=" + std::to_string(g.n) + ": eta max|alpha| = " + format_number(ld, 3) + " exceeds " +
            format_number(gc.lamb_dicke_threshold, 3));
    }
    if (heating > kHeatingWarning) {
        warnings.push_back(
            "n=" + std::to_string(g.n) + ": heating per phase-space revolution is " + format_number(heating, 3));
    }
    if (g.n % 2 != 0) {
        warnings.push_back("n=" + std::to_string(g.n) + ": odd n leaves A_uu and A_dd nonzero");
    }
    return q;
}

Json gate_parameters(const RunConfig &config, int precision) {
    Json params = trap_parameters(config, precision);
    params["p"] = json_number(config.gate.p, precision);
    params["ratio"] = json_number(config.gate.ratio, precision);
    params["heating_rate_per_s"] = json_number(config.gate.heating_rate_per_s, precision);
    params["transit_convention"] = "table";
    return params;
}

}  // namespace

CommandResult cmd_gate_design(const RunConfig &config, const CommandOptions &options) {
    int precision = config.output.precision;
    if (config.gate.n.empty()) {
        throw ConfigError("gate.n: gate design needs at least one n");
    }
    const GateConfig &gc = config.gate;
    GateDesign g = design_row(
        config.trap_context(), config.waist(), config.wavelength(), gc.p, gc.ratio, gc.n.front(), gc.allow_odd);
    Json warnings = Json::array();
    Quantities q = design_quantities(g, config, warnings);
    if (options.format == OutputFormat::Csv) {
        return {q.to_table().to_csv(precision)};
    }
    Json report = make_report("gate design", gate_parameters(config, precision));
    report["results"] = q.to_json(precision);
    report["warnings"] = warnings;
    return {render_json(report)};
}

CommandResult cmd_gate_table(const RunConfig &config, const CommandOptions &options) {
    int precision = config.output.precision;
    const GateConfig &gc = config.gate;
    TrapContext ctx = config.trap_context();
    double waist = config.waist();
    double wavelength = config.wavelength();

    int count = static_cast<int>(gc.n.size());
    std::vector<std::vector<Cell>> rows(count);
    parallel_for(count, config.output.threads, [&](int i) {
        int n = gc.n[i];
        try {
            GateDesign g = design_row(ctx, waist, wavelength, gc.p, gc.ratio, n, gc.allow_odd);
            rows[i] = {
                static_cast<long long>(n),
                g.gamma * 180 / kPi,
                g.eta,
                g.speed,
                g.tau * 1e6,
                g.delta / kTwoPi / 1e6,
                g.rabi_down / kTwoPi / 1e6,
                g.epsilon_bound,
                g.detuning_ratio,
                std::monostate{},
            };
        } catch (const Error &e) {
            rows[i] = {static_cast<long long>(n), {}, {}, {}, {}, {}, {}, {}, {}, std::string(e.what())};
        }
    });

    Table table{
        {"n", "gamma_deg", "eta", "speed_m_per_s", "tau_us", "delta_over_2pi_mhz", "rabi_down_over_2pi_mhz",
         "epsilon_bound", "detuning_ratio", "error"},
        {}};
    for (auto &row : rows) {
        table.add_row(std::move(row));
    }
    if (options.format == OutputFormat::Csv) {
        return {table.to_csv(precision)};
    }
    Json report = make_report("gate table", gate_parameters(config, precision));
    report["results"]["rows"] = table.to_json(precision);
    return {render_json(report)};
}

CommandResult cmd_gate_trajectory(const RunConfig &config, const CommandOptions &options) {
    int precision = config.output.precision;
    const TrajectoryConfig &tc = config.trajectory;
    PhaseTrajectory traj = designed_trajectory(tc.p, 1.0, tc.t_begin_tau, tc.t_end_tau, tc.samples);

    std::vector<std::string> columns = {"t_over_tau"};
    for (SpinPair pair : kSpinPairs) {
        std::string label = spin_pair_label(pair);
        columns.push_back("re_alpha_" + label);
        columns.push_back("im_alpha_" + label);
        columns.push_back("abs2_alpha_" + label);
        columns.push_back("phase_" + label + "_rad");
    }
    Table table{columns, {}};
    for (const TrajectorySample &s : traj.samples) {
        std::vector<Cell> row = {s.t};
        for (SpinPair pair : kSpinPairs) {
            row.push_back(s.alpha[pair].real());
            row.push_back(s.alpha[pair].imag());
            row.push_back(std::norm(s.alpha[pair]));
            row.push_back(s.phase[pair]);
        }
        table.add_row(std::move(row));
    }
    if (options.format == OutputFormat::Csv) {
        return {table.to_csv(precision)};
    }

    Json params = Json::object();
    params["p"] = json_number(tc.p, precision);
    params["samples"] = tc.samples;
    params["t_begin_tau"] = json_number(tc.t_begin_tau, precision);
    params["t_end_tau"] = json_number(tc.t_end_tau, precision);
    Json report = make_report("gate trajectory", params);
    Quantities q;
    for (SpinPair pair : kSpinPairs) {
        std::string label = spin_pair_label(pair);
        q.add("abs2_alpha_final_" + label, std::norm(traj.alpha_final[pair]), "1");
        q.add("phase_final_" + label + "_rad", traj.phase_final[pair], "rad");
    }
    q.add("logic_phase_rad", traj.logic_phase, "rad");
    q.add("epsilon_bound", fidelity_bound(tc.p), "1");
    q.add("winding_count_ud", winding_count(traj, UpDown, tc.winding_window_tau), "turns");
    report["results"] = q.to_json(precision);
    report["results"]["samples"] = table.to_json(precision);
    return {render_json(report)};
}

CommandResult cmd_washboard(const RunConfig &config, const CommandOptions &options) {
    int precision = config.output.precision;
    const WashboardConfig &wc = config.washboard;
    WashboardSpec spec;
    spec.bias_field = wc.bias_field_gauss * kGauss;
    spec.washboard_field = wc.washboard_field_gauss * kGauss;
    spec.period = wc.period_um / 1e6;
    spec.speed = wc.speed_m_per_s;
    validate_washboard(spec);
    TrapContext ctx = config.trap_context();

    HarmonicDecomposition h = harmonic_decomposition(spec);
    double duration = gate_duration(spec, ctx);
    ZPhase z = residual_z_phase(spec, duration);

    Quantities q;
    q.add("washboard_frequency_hz", washboard_frequency(spec) / kTwoPi, "Hz");
    q.add("gate_rabi_over_2pi_hz", gate_rabi(spec, ctx) / kTwoPi, "Hz");
    q.add("gate_duration_s", duration, "s");
    q.add("magnetic_lamb_dicke", magnetic_lamb_dicke(spec, ctx), "1");
    q.add("dc_offset_gauss", dc_offset(spec) / kGauss, "G");
    q.add("mean_field_offset_gauss", mean_field_offset(spec) / kGauss, "G");
    q.add("harmonic_dc_field_gauss", h.dc_field / kGauss, "G");
    q.add("harmonic_oscillating_field_gauss", h.oscillating_field / kGauss, "G");
    q.add("harmonic_residual_gauss", h.residual / kGauss, "G");
    q.add("residual_z_phase_rad", z.total, "rad");
    q.add("residual_z_phase_turns", z.total / kTwoPi, "turns");
    q.add("residual_z_phase_wrapped_rad", z.wrapped, "rad");
    q.add("adiabaticity_margin", adiabaticity_margin(spec), "1");

    if (options.format == OutputFormat::Csv) {
        return {q.to_table().to_csv(precision)};
    }
    Json params = Json::object();
    params["species"] = ctx.species.name;
    params["com_frequency_hz"] = json_number(ctx.omega_com / kTwoPi, precision);
    params["bias_field_gauss"] = json_number(wc.bias_field_gauss, precision);
    params["washboard_field_gauss"] = json_number(wc.washboard_field_gauss, precision);
    params["period_m"] = json_number(spec.period, precision);
    params["speed_m_per_s"] = json_number(wc.speed_m_per_s, precision);
    Json report = make_report("washboard", params);
    report["results"] = q.to_json(precision);
    report["notes"] = Json::array({"The gate may be split into two halves around a spin echo; this is not simulated."});
    return {render_json(report)};
}

namespace {

struct Draw {
    Complex a0;
    double eta = 0;
    double tau = 0;
    double delta = 0;
    double duration = 0;
};

struct DrawResidual {
    double gaussian_alpha_path = 0;
    double gaussian_alpha_final = 0;
    double gaussian_phase = 0;
    double square_alpha_path = 0;
    double square_phase = 0;
};

DrawResidual verify_draw(const Draw &d, double oracle_tol, bool corrupt) {
    double bias = corrupt ? 1 + 1e-6 : 1;
    DrawResidual r;
    OracleOptions options;
    options.tol = oracle_tol;
    for (int j = -30; j <= 30; j++) {
        options.sample_times.push_back(j * d.tau / 5);
    }

    try {
        OracleResult g = integrate_displacement(Envelope{GaussianShape{d.tau}, d.a0, d.eta, d.delta}, -INFINITY, INFINITY, options);
        double peak = 0;
        double worst = 0;
        for (const OracleSample &s : g.samples) {
            Complex closed = bias * alpha_of_t(d.a0, d.eta, d.delta, d.tau, s.t);
            peak = std::max(peak, std::abs(closed));
            worst = std::max(worst, std::abs(s.alpha - closed));
        }
        r.gaussian_alpha_path = worst / peak;
        r.gaussian_alpha_final = std::abs(g.alpha_final - bias * alpha_infinity(d.a0, d.eta, d.delta, d.tau)) / peak;
        double phase = bias * logic_phase_coeff(d.a0, d.eta, d.delta, d.tau);
        r.gaussian_phase = std::abs(g.phase_final - phase) / std::abs(phase);
    } catch (const ToleranceNotMet<OracleResult> &) {
        r.gaussian_alpha_path = r.gaussian_alpha_final = r.gaussian_phase = INFINITY;
    }

    OracleOptions square_options;
    square_options.tol = oracle_tol;
    for (int j = 1; j < 10; j++) {
        square_options.sample_times.push_back(d.duration * j / 10);
    }
    try {
        OracleResult s = integrate_displacement(Envelope{SquareShape{d.duration}, d.a0, d.eta, d.delta}, 0, d.duration, square_options);
        Complex c = d.eta * d.a0;
        double scale = std::abs(c) * d.duration;
        for (const OracleSample &sample : s.samples) {
            Complex expected = bias * c * (std::polar(1.0, d.delta * sample.t) - 1.0) / Complex(0, d.delta);
            r.square_alpha_path = std::max(r.square_alpha_path, std::abs(sample.alpha - expected) / scale);
        }
        double x = d.delta * d.duration;
        double expected_phase = bias * std::norm(c) / (d.delta * d.delta) * (x - std::sin(x));
        r.square_phase = std::abs(s.phase_final - expected_phase) / (scale * scale);
    } catch (const ToleranceNotMet<OracleResult> &) {
        r.square_alpha_path = r.square_phase = INFINITY;
    }
    return r;
}

}  // namespace

CommandResult cmd_verify(const RunConfig &config, const CommandOptions &options) {
    int precision = config.output.precision;
    const VerifyConfig &vc = config.verify;

    // Parameters are drawn serially so the set is independent of the thread count.
    std::mt19937_64 rng(vc.seed);
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<Draw> draws(vc.draws);
    for (Draw &d : draws) {
        d.a0 = std::polar(0.5 + 2 * unit(rng), kTwoPi * unit(rng));
        d.eta = 0.05 + 0.3 * unit(rng);
        d.tau = 0.5 + 2 * unit(rng);
        double p = vc.p_min + (vc.p_max - vc.p_min) * unit(rng);
        d.delta = p * std::numbers::sqrt2 / d.tau;
        d.duration = 0.5 + 10 * unit(rng);
    }

    std::vector<DrawResidual> residuals(draws.size());
    parallel_for(static_cast<int>(draws.size()), config.output.threads, [&](int i) {
        residuals[i] = verify_draw(draws[i], vc.oracle_tol, options.corrupt_formula);
    });

    struct Check {
        const char *name;
        double DrawResidual::*field;
        double tolerance;
        const char *scale;
    };
    const Check checks[] = {
        {"gaussian_alpha_path", &DrawResidual::gaussian_alpha_path, vc.alpha_path_tol, "peak |alpha|"},
        {"gaussian_alpha_final", &DrawResidual::gaussian_alpha_final, vc.alpha_final_tol, "peak |alpha|"},
        {"gaussian_phase_final", &DrawResidual::gaussian_phase, vc.phase_tol, "|phase|"},
        {"square_alpha_path", &DrawResidual::square_alpha_path, vc.square_tol, "eta |A0| T"},
        {"square_phase_final", &DrawResidual::square_phase, vc.square_tol, "(eta |A0| T)^2"},
    };

    Table table{{"check", "draws", "max_residual", "tolerance", "relative_to", "failures", "status"}, {}};
    bool all_pass = true;
    for (const Check &c : checks) {
        double worst = 0;
        long long failures = 0;
        for (const DrawResidual &r : residuals) {
            double value = r.*c.field;
            worst = std::max(worst, value);
            if (!(value <= c.tolerance)) {
                failures++;
            }
        }
        all_pass = all_pass && failures == 0;
        table.add_row({std::string(c.name), static_cast<long long>(draws.size()), worst, c.tolerance, std::string(c.scale),
                       failures, std::string(failures == 0 ? "pass" : "fail")});
    }

    int exit_code = all_pass ? kExitOk : kExitVerificationFailed;
    if (options.format == OutputFormat::Csv) {
        return {table.to_csv(precision), exit_code};
    }
    Json params = Json::object();
    params["draws"] = vc.draws;
    params["seed"] = vc.seed;
    params["oracle_tol"] = json_number(vc.oracle_tol, precision);
    params["p_min"] = json_number(vc.p_min, precision);
    params["p_max"] = json_number(vc.p_max, precision);
    params["corrupt_formula"] = options.corrupt_formula;
    Json report = make_report("verify", params);
    report["results"]["checks"] = table.to_json(precision);
    report["results"]["passed"] = all_pass;
    return {render_json(report), exit_code};
}

}  // namespace tgate::cli
