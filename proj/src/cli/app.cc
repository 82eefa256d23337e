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


#include "tgate/cli/app.h"

#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "tgate/cli/commands.h"
#include "tgate/cli/config.h"
#include "tgate/error.h"

namespace tgate::cli {

namespace {

struct Flags {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::optional<int> samples;
    std::optional<double> tol;
    std::optional<int> threads;
    std::optional<int> precision;
    std::optional<double> p;
    std::vector<int> n;
    bool corrupt_formula = false;
};

void add_common_flags(CLI::App &app, Flags &flags) {
    app.add_option("--config", flags.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", flags.out_path, "Write output to this file instead of stdout");
    app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--samples", flags.samples, "Trajectory sample count");
    app.add_option("--tol", flags.tol, "Oracle integration tolerance for verify");
    app.add_option("--threads", flags.threads, "Worker threads for table and verify");
    app.add_option("--precision", flags.precision, "Significant digits in numeric output (1 to 17)");
    app.add_option("--p", flags.p, "Adiabaticity parameter for gate and trajectory commands");
    app.add_option("--n", flags.n, "Discrete angle indices, overriding gate.n");
}

void apply_overrides(RunConfig &config, const Flags &flags) {
    if (flags.samples) {
        config.trajectory.samples = *flags.samples;
    }
    if (flags.tol) {
        config.verify.oracle_tol = *flags.tol;
    }
    if (flags.threads) {
        config.output.threads = *flags.threads;
    }
    if (flags.precision) {
        config.output.precision = *flags.precision;
    }
    if (flags.p) {
        config.gate.p = *flags.p;
        config.trajectory.p = *flags.p;
    }
    if (!flags.n.empty()) {
        config.gate.n = flags.n;
    }
    try {
        validate_config(config);
    } catch (const ConfigError &e) {
        throw ConfigError(std::string("command line: ") + e.what());
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Transport quantum gate design toolkit", "tgate"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Flags flags;
    add_common_flags(app, flags);

    using Command = CommandResult (*)(const RunConfig &, const CommandOptions &);
    struct Entry {
        CLI::App *app;
        Command run;
        OutputFormat default_format;
    };
    std::vector<Entry> entries;
    auto leaf = [&](CLI::App &parent, const std::string &name, const std::string &help, Command run, OutputFormat fmt) {
        CLI::App *sub = parent.add_subcommand(name, help);
        sub->fallthrough();
        entries.push_back({sub, run, fmt});
        return sub;
    };
    leaf(app, "rotate", "One-qubit transport rotation", cmd_rotate, OutputFormat::Json);
    CLI::App *gate = app.add_subcommand("gate", "Two-qubit transport phase gate");
    gate->require_subcommand(1);
    gate->fallthrough();
    leaf(*gate, "design", "Operating point for one n", cmd_gate_design, OutputFormat::Json);
    leaf(*gate, "table", "Operating points for every n", cmd_gate_table, OutputFormat::Csv);
    leaf(*gate, "trajectory", "Phase-space trajectory of the designed gate", cmd_gate_trajectory, OutputFormat::Csv);
    leaf(app, "washboard", "Laser-free magnetic washboard gate", cmd_washboard, OutputFormat::Json);
    CLI::App *verify = leaf(app, "verify", "Closed forms against the time-ordered oracle", cmd_verify, OutputFormat::Json);
    verify->add_flag("--corrupt-formula", flags.corrupt_formula, "Perturb the closed forms (negative control)")
        ->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    const Entry *selected = nullptr;
    for (const Entry &e : entries) {
        if (e.app->parsed()) {
            selected = &e;
        }
    }
    if (selected == nullptr) {
        err << "error: no command selected\n";
        return kExitConfigError;
    }

    CommandResult result;
    try {
        RunConfig config = flags.config_path.empty() ? RunConfig{} : load_config(flags.config_path);
        apply_overrides(config, flags);
        CommandOptions options;
        options.format = selected->default_format;
        if (!flags.format.empty()) {
            options.format = flags.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        }
        options.corrupt_formula = flags.corrupt_formula;
        result = selected->run(config, options);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const Error &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    }

    if (flags.out_path.empty()) {
        out << result.text;
    } else {
        std::ofstream file(flags.out_path, std::ios::binary);
        file << result.text;
        if (!file) {
            err << "error: cannot write " << flags.out_path << "\n";
            return kExitConfigError;
        }
    }
    if (result.exit_code == kExitVerificationFailed) {
        err << "verification failed: at least one residual exceeds its tolerance\n";
    }
    return result.exit_code;
}

}  // namespace tgate::cli
