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


#include "tgate/cli/config.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tgate/error.h"

namespace tgate::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string join_path(const std::string &parent, const std::string &key) {
    return parent.empty() ? key : parent + "." + key;
}

const char *type_name(const Json &j) {
    return j.type_name();
}

/// Reads the members of one JSON object and rejects any key that was not read.
class ObjectReader {
   public:
    ObjectReader(const Json &object, std::string path) : object_(object), path_(std::move(path)) {
        if (!object_.is_object()) {
            throw ConfigError(where() + ": expected an object, got " + type_name(object_));
        }
    }

    bool has(const std::string &key) const {
        return object_.contains(key);
    }

    void read(const std::string &key, double &out) {
        const Json *j = member(key);
        if (j == nullptr) {
            return;
        }
        if (!j->is_number()) {
            throw ConfigError(join_path(path_, key) + ": expected a number, got " + type_name(*j));
        }
        out = j->get<double>();
        if (!std::isfinite(out)) {
            throw ConfigError(join_path(path_, key) + ": must be finite");
        }
    }

    void read(const std::string &key, std::optional<double> &out) {
        if (has(key)) {
            double value = 0;
            read(key, value);
            out = value;
        }
    }

    void read(const std::string &key, int &out) {
        const Json *j = member(key);
        if (j == nullptr) {
            return;
        }
        if (!j->is_number_integer()) {
            throw ConfigError(join_path(path_, key) + ": expected an integer, got " + type_name(*j));
        }
        out = j->get<int>();
    }

    void read(const std::string &key, std::uint64_t &out) {
        const Json *j = member(key);
        if (j == nullptr) {
            return;
        }
        if (!j->is_number_unsigned()) {
            throw ConfigError(join_path(path_, key) + ": expected a non-negative integer, got " + type_name(*j));
        }
        out = j->get<std::uint64_t>();
    }

    void read(const std::string &key, bool &out) {
        const Json *j = member(key);
        if (j == nullptr) {
            return;
        }
        if (!j->is_boolean()) {
            throw ConfigError(join_path(path_, key) + ": expected true or false, got " + type_name(*j));
        }
        out = j->get<bool>();
    }

    void read(const std::string &key, std::string &out) {
        const Json *j = member(key);
        if (j == nullptr) {
            return;
        }
        if (!j->is_string()) {
            throw ConfigError(join_path(path_, key) + ": expected a string, got " + type_name(*j));
        }
        out = j->get<std::string>();
    }

    template <typename T>
    void read(const std::string &key, std::vector<T> &out) {
        const Json *j = member(key);
        if (j == nullptr) {
            return;
        }
        if (!j->is_array()) {
            throw ConfigError(join_path(path_, key) + ": expected an array, got " + type_name(*j));
        }
        out.clear();
        for (size_t i = 0; i < j->size(); i++) {
            const Json &e = (*j)[i];
            std::string at = join_path(path_, key) + "[" + std::to_string(i) + "]";
            if constexpr (std::is_same_v<T, int>) {
                if (!e.is_number_integer()) {
                    throw ConfigError(at + ": expected an integer, got " + type_name(e));
                }
            } else {
                if (!e.is_number()) {
                    throw ConfigError(at + ": expected a number, got " + type_name(e));
                }
            }
            out.push_back(e.get<T>());
        }
    }

    ObjectReader child(const std::string &key) {
        used_.insert(key);
        return ObjectReader(object_.at(key), join_path(path_, key));
    }

    /// Throws on the first key that no read() call asked for.
    void finish() const {
        for (auto it = object_.begin(); it != object_.end(); ++it) {
            if (used_.count(it.key()) == 0) {
                throw ConfigError(join_path(path_, it.key()) + ": unknown key");
            }
        }
    }

   private:
    const Json *member(const std::string &key) {
        used_.insert(key);
        auto it = object_.find(key);
        return it == object_.end() ? nullptr : &*it;
    }

    std::string where() const {
        return path_.empty() ? "configuration" : path_;
    }

    const Json &object_;
    std::string path_;
    std::set<std::string> used_;
};

void require_positive(double value, const std::string &key) {
    if (!(value > 0) || !std::isfinite(value)) {
        throw ConfigError(key + ": must be positive");
    }
}

template <typename Section, typename Fn>
void read_section(ObjectReader &root, const std::string &key, Section &section, Fn fn) {
    if (!root.has(key)) {
        return;
    }
    ObjectReader reader = root.child(key);
    fn(reader, section);
    reader.finish();
}

}  // namespace

IonSpecies RunConfig::resolved_species() const {
    IonSpecies base;
    try {
        base = find_species(species.name);
    } catch (const tgate::Error &e) {
        throw ConfigError("species.name: " + std::string(e.what()));
    }
    double mass = species.mass_u ? *species.mass_u * constants::atomic_mass_unit : base.mass;
    double splitting = species.qubit_splitting_hz ? 2 * std::numbers::pi * *species.qubit_splitting_hz : base.qubit_splitting;
    double wavelength = species.raman_wavelength_nm ? *species.raman_wavelength_nm / 1e9 : base.raman_wavelength;
    return make_species(base.name, mass, splitting, wavelength);
}

TrapContext RunConfig::trap_context() const {
    return make_trap(resolved_species(), 2 * std::numbers::pi * trap.com_frequency_hz);
}

double RunConfig::waist() const {
    return beam.waist_um / 1e6;
}

double RunConfig::wavelength() const {
    return beam.wavelength_nm ? *beam.wavelength_nm / 1e9 : resolved_species().raman_wavelength;
}

void validate_config(const RunConfig &c) {
    if (c.species.mass_u) {
        require_positive(*c.species.mass_u, "species.mass_u");
    }
    if (c.species.qubit_splitting_hz) {
        require_positive(*c.species.qubit_splitting_hz, "species.qubit_splitting_hz");
    }
    if (c.species.raman_wavelength_nm) {
        require_positive(*c.species.raman_wavelength_nm, "species.raman_wavelength_nm");
    }
    c.resolved_species();
    require_positive(c.trap.com_frequency_hz, "trap.com_frequency_hz");
    require_positive(c.beam.waist_um, "beam.waist_um");
    if (c.beam.wavelength_nm) {
        require_positive(*c.beam.wavelength_nm, "beam.wavelength_nm");
    }

    require_positive(c.rotate.rabi_frequency_hz, "rotate.rabi_frequency_hz");
    require_positive(c.rotate.theta_rad, "rotate.theta_rad");
    if (!(c.rotate.angle_deg > 0 && c.rotate.angle_deg < 180)) {
        throw ConfigError("rotate.angle_deg: must lie strictly between 0 and 180");
    }
    require_positive(c.rotate.cutoff_waists, "rotate.cutoff_waists");
    for (size_t i = 0; i < c.rotate.path_lengths_mm.size(); i++) {
        if (!(c.rotate.path_lengths_mm[i] >= 0)) {
            throw ConfigError("rotate.path_lengths_mm[" + std::to_string(i) + "]: must be non-negative");
        }
    }

    require_positive(c.gate.p, "gate.p");
    if (c.gate.ratio == 1) {
        throw ConfigError("gate.ratio: must differ from 1");
    }
    if (!(c.gate.heating_rate_per_s >= 0)) {
        throw ConfigError("gate.heating_rate_per_s: must be non-negative");
    }
    require_positive(c.gate.lamb_dicke_threshold, "gate.lamb_dicke_threshold");

    require_positive(c.trajectory.p, "trajectory.p");
    if (c.trajectory.samples < 2) {
        throw ConfigError("trajectory.samples: must be at least 2");
    }
    if (!(c.trajectory.t_begin_tau < c.trajectory.t_end_tau)) {
        throw ConfigError("trajectory.t_begin_tau: must be less than trajectory.t_end_tau");
    }
    require_positive(c.trajectory.winding_window_tau, "trajectory.winding_window_tau");

    require_positive(c.washboard.bias_field_gauss, "washboard.bias_field_gauss");
    require_positive(c.washboard.washboard_field_gauss, "washboard.washboard_field_gauss");
    require_positive(c.washboard.period_um, "washboard.period_um");
    require_positive(c.washboard.speed_m_per_s, "washboard.speed_m_per_s");

    if (c.verify.draws < 1) {
        throw ConfigError("verify.draws: must be at least 1");
    }
    require_positive(c.verify.oracle_tol, "verify.oracle_tol");
    require_positive(c.verify.alpha_path_tol, "verify.alpha_path_tol");
    require_positive(c.verify.alpha_final_tol, "verify.alpha_final_tol");
    require_positive(c.verify.phase_tol, "verify.phase_tol");
    require_positive(c.verify.square_tol, "verify.square_tol");
    require_positive(c.verify.p_min, "verify.p_min");
    if (!(c.verify.p_max >= c.verify.p_min)) {
        throw ConfigError("verify.p_max: must be at least verify.p_min");
    }

    if (c.output.precision < 1 || c.output.precision > 17) {
        throw ConfigError("output.precision: must lie in [1, 17]");
    }
    if (c.output.threads < 1) {
        throw ConfigError("output.threads: must be at least 1");
    }
}

RunConfig parse_config(const std::string &text, const std::string &source) {
    Json root;
    try {
        root = Json::parse(text, nullptr, true, true);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(source + ": " + e.what());
    }

    RunConfig c;
    try {
        ObjectReader r(root, "");
        read_section(r, "species", c.species, [](ObjectReader &s, SpeciesConfig &v) {
            s.read("name", v.name);
            s.read("mass_u", v.mass_u);
            s.read("qubit_splitting_hz", v.qubit_splitting_hz);
            s.read("raman_wavelength_nm", v.raman_wavelength_nm);
        });
        read_section(r, "trap", c.trap, [](ObjectReader &s, TrapConfig &v) {
            s.read("com_frequency_hz", v.com_frequency_hz);
        });
        read_section(r, "beam", c.beam, [](ObjectReader &s, BeamConfig &v) {
            s.read("waist_um", v.waist_um);
            s.read("wavelength_nm", v.wavelength_nm);
        });
        read_section(r, "rotate", c.rotate, [](ObjectReader &s, RotateConfig &v) {
            s.read("rabi_frequency_hz", v.rabi_frequency_hz);
            s.read("theta_rad", v.theta_rad);
            s.read("angle_deg", v.angle_deg);
            s.read("cutoff_waists", v.cutoff_waists);
            s.read("path_lengths_mm", v.path_lengths_mm);
        });
        read_section(r, "gate", c.gate, [](ObjectReader &s, GateConfig &v) {
            s.read("p", v.p);
            s.read("ratio", v.ratio);
            s.read("n", v.n);
            s.read("allow_odd", v.allow_odd);
            s.read("heating_rate_per_s", v.heating_rate_per_s);
            s.read("lamb_dicke_threshold", v.lamb_dicke_threshold);
        });
        read_section(r, "trajectory", c.trajectory, [](ObjectReader &s, TrajectoryConfig &v) {
            s.read("p", v.p);
            s.read("samples", v.samples);
            s.read("t_begin_tau", v.t_begin_tau);
            s.read("t_end_tau", v.t_end_tau);
            s.read("winding_window_tau", v.winding_window_tau);
        });
        read_section(r, "washboard", c.washboard, [](ObjectReader &s, WashboardConfig &v) {
            s.read("bias_field_gauss", v.bias_field_gauss);
            s.read("washboard_field_gauss", v.washboard_field_gauss);
            s.read("period_um", v.period_um);
            s.read("speed_m_per_s", v.speed_m_per_s);
        });
        read_section(r, "verify", c.verify, [](ObjectReader &s, VerifyConfig &v) {
            s.read("draws", v.draws);
            s.read("seed", v.seed);
            s.read("oracle_tol", v.oracle_tol);
            s.read("alpha_path_tol", v.alpha_path_tol);
            s.read("alpha_final_tol", v.alpha_final_tol);
            s.read("phase_tol", v.phase_tol);
            s.read("square_tol", v.square_tol);
            s.read("p_min", v.p_min);
            s.read("p_max", v.p_max);
        });
        read_section(r, "output", c.output, [](ObjectReader &s, OutputConfig &v) {
            s.read("precision", v.precision);
            s.read("threads", v.threads);
        });
        r.finish();
    } catch (const ConfigError &e) {
        throw ConfigError(source + ": " + e.what());
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(source + ": " + e.what());
    }

    try {
        validate_config(c);
    } catch (const ConfigError &e) {
        throw ConfigError(source + ": " + e.what());
    }
    return c;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path + ": cannot open configuration file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

}  // namespace tgate::cli
