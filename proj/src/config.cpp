#include "risbeam/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "risbeam/io.hpp"

namespace risbeam {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream in(value);
    while (std::getline(in, current, ',')) {
        items.push_back(trim(current));
    }
    return items;
}

[[noreturn]] void fail(const std::string& key, int line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ", key '" + key +
                      "': " + what);
}

double parse_double(const std::string& key, int line, const std::string& value) {
    const std::string v = trim(value);
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || v.empty()) {
        fail(key, line, "expected a number, got '" + v + "'");
    }
    if (!std::isfinite(out)) {
        fail(key, line, "value must be finite");
    }
    return out;
}

template <typename Int>
Int parse_int(const std::string& key, int line, const std::string& value) {
    const std::string v = trim(value);
    Int out = 0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || v.empty()) {
        fail(key, line, "expected an integer, got '" + v + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, int line, const std::string& value) {
    const std::string v = trim(value);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(key, line, "expected true/false, got '" + v + "'");
}

Vec3 parse_vec3(const std::string& key, int line, const std::string& value) {
    const auto items = split_list(value);
    if (items.size() != 3) {
        fail(key, line, "expected three comma-separated numbers");
    }
    return {parse_double(key, line, items[0]), parse_double(key, line, items[1]),
            parse_double(key, line, items[2])};
}

std::vector<double> parse_double_list(const std::string& key, int line,
                                      const std::string& value) {
    std::vector<double> out;
    for (const auto& item : split_list(value)) {
        out.push_back(parse_double(key, line, item));
    }
    if (out.empty()) {
        fail(key, line, "expected at least one number");
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& key, int line,
                                const std::string& value) {
    std::vector<int> out;
    for (const auto& item : split_list(value)) {
        out.push_back(parse_int<int>(key, line, item));
    }
    if (out.empty()) {
        fail(key, line, "expected at least one integer");
    }
    return out;
}

std::string vec3_text(const Vec3& v) {
    return io::format_double(v.x) + ", " + io::format_double(v.y) + ", " +
           io::format_double(v.z);
}

std::string double_list_text(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += io::format_double(v[i]);
    }
    return out;
}

std::string int_list_text(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string string_list_text(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i];
    }
    return out;
}

// Key table: parse callback plus canonical printer, in canonical order.
struct KeyHandler {
    std::function<void(RunConfig&, const std::string&, int)> parse;
    std::function<std::string(const RunConfig&)> print;
};

const std::vector<std::pair<std::string, KeyHandler>>& key_table() {
    static const std::vector<std::pair<std::string, KeyHandler>> table = [] {
        std::vector<std::pair<std::string, KeyHandler>> t;
        const auto add = [&t](const std::string& key,
                              std::function<void(RunConfig&, const std::string&, int)> parse,
                              std::function<std::string(const RunConfig&)> print) {
            t.push_back({key, {std::move(parse), std::move(print)}});
        };

        add("frequency_hz",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frequency_hz = parse_double("frequency_hz", ln, v);
                if (!(c.frequency_hz > 0.0)) fail("frequency_hz", ln, "must be > 0");
            },
            [](const RunConfig& c) { return io::format_double(c.frequency_hz); });
        add("tx",
            [](RunConfig& c, const std::string& v, int ln) { c.tx = parse_vec3("tx", ln, v); },
            [](const RunConfig& c) { return vec3_text(c.tx); });
        add("rx",
            [](RunConfig& c, const std::string& v, int ln) { c.rx = parse_vec3("rx", ln, v); },
            [](const RunConfig& c) { return vec3_text(c.rx); });
        add("ris_nx",
            [](RunConfig& c, const std::string& v, int ln) {
                c.ris_nx = parse_int<int>("ris_nx", ln, v);
                if (c.ris_nx < 1) fail("ris_nx", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.ris_nx); });
        add("ris_ny",
            [](RunConfig& c, const std::string& v, int ln) {
                c.ris_ny = parse_int<int>("ris_ny", ln, v);
                if (c.ris_ny < 1) fail("ris_ny", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.ris_ny); });
        add("ris_spacing_wavelengths",
            [](RunConfig& c, const std::string& v, int ln) {
                c.ris_spacing_wavelengths = parse_double("ris_spacing_wavelengths", ln, v);
                if (!(c.ris_spacing_wavelengths > 0.0)) {
                    fail("ris_spacing_wavelengths", ln, "must be > 0");
                }
            },
            [](const RunConfig& c) { return io::format_double(c.ris_spacing_wavelengths); });
        add("ris_center",
            [](RunConfig& c, const std::string& v, int ln) {
                c.ris_center = parse_vec3("ris_center", ln, v);
            },
            [](const RunConfig& c) { return vec3_text(c.ris_center); });
        add("ris_orientation",
            [](RunConfig& c, const std::string& v, int ln) {
                const std::string s = trim(v);
                if (s == "bisector") c.ris_orientation = RisOrientation::Bisector;
                else if (s == "explicit") c.ris_orientation = RisOrientation::Explicit;
                else fail("ris_orientation", ln, "expected bisector or explicit");
            },
            [](const RunConfig& c) {
                return std::string(c.ris_orientation == RisOrientation::Bisector
                                       ? "bisector" : "explicit");
            });
        add("ris_u_axis",
            [](RunConfig& c, const std::string& v, int ln) {
                c.ris_u_axis = parse_vec3("ris_u_axis", ln, v);
            },
            [](const RunConfig& c) { return vec3_text(c.ris_u_axis); });
        add("ris_v_axis",
            [](RunConfig& c, const std::string& v, int ln) {
                c.ris_v_axis = parse_vec3("ris_v_axis", ln, v);
            },
            [](const RunConfig& c) { return vec3_text(c.ris_v_axis); });
        add("tx_power_dbm",
            [](RunConfig& c, const std::string& v, int ln) {
                c.tx_power_dbm = parse_double("tx_power_dbm", ln, v);
            },
            [](const RunConfig& c) { return io::format_double(c.tx_power_dbm); });
        add("noise_power_dbm",
            [](RunConfig& c, const std::string& v, int ln) {
                c.noise_power_dbm = parse_double("noise_power_dbm", ln, v);
            },
            [](const RunConfig& c) { return io::format_double(c.noise_power_dbm); });
        add("los_blocked",
            [](RunConfig& c, const std::string& v, int ln) {
                c.los_blocked = parse_bool("los_blocked", ln, v);
            },
            [](const RunConfig& c) { return std::string(c.los_blocked ? "true" : "false"); });
        add("seed",
            [](RunConfig& c, const std::string& v, int ln) {
                c.seed = parse_int<std::uint64_t>("seed", ln, v);
            },
            [](const RunConfig& c) { return std::to_string(c.seed); });
        add("rule",
            [](RunConfig& c, const std::string& v, int ln) {
                const std::string s = trim(v);
                if (s == "zone-parity") c.rule = PhaseRule::ZoneParity;
                else if (s == "nearest-phase") c.rule = PhaseRule::NearestPhase;
                else fail("rule", ln, "expected zone-parity or nearest-phase");
            },
            [](const RunConfig& c) { return std::string(to_string(c.rule)); });
        add("xi_list_wavelengths",
            [](RunConfig& c, const std::string& v, int ln) {
                c.xi_list_wavelengths = parse_double_list("xi_list_wavelengths", ln, v);
                for (const double xi : c.xi_list_wavelengths) {
                    if (!(xi >= 0.0) || !(xi <= 0.5)) {
                        fail("xi_list_wavelengths", ln, "entries must lie in [0, 0.5]");
                    }
                }
            },
            [](const RunConfig& c) { return double_list_text(c.xi_list_wavelengths); });
        add("error_grid_wavelengths",
            [](RunConfig& c, const std::string& v, int ln) {
                c.error_grid_wavelengths = parse_double_list("error_grid_wavelengths", ln, v);
                for (const double e : c.error_grid_wavelengths) {
                    if (!(e >= 0.0)) fail("error_grid_wavelengths", ln, "entries must be >= 0");
                }
            },
            [](const RunConfig& c) { return double_list_text(c.error_grid_wavelengths); });
        add("trials",
            [](RunConfig& c, const std::string& v, int ln) {
                c.trials = parse_int<int>("trials", ln, v);
                if (c.trials < 1) fail("trials", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.trials); });
        add("schemes",
            [](RunConfig& c, const std::string& v, int ln) {
                c.schemes = split_list(v);
                if (c.schemes.empty()) fail("schemes", ln, "expected at least one scheme");
                for (const auto& s : c.schemes) {
                    try {
                        scheme_from_string(s);
                    } catch (const std::invalid_argument&) {
                        fail("schemes", ln, "unknown scheme '" + s + "'");
                    }
                }
            },
            [](const RunConfig& c) { return string_list_text(c.schemes); });
        add("error_model",
            [](RunConfig& c, const std::string& v, int ln) {
                const std::string s = trim(v);
                if (s != "fixed" && s != "gaussian") {
                    fail("error_model", ln, "expected fixed or gaussian");
                }
                c.error_model = s;
            },
            [](const RunConfig& c) { return c.error_model; });
        add("error_axes",
            [](RunConfig& c, const std::string& v, int ln) {
                const std::string s = trim(v);
                if (s.empty() || s.find_first_not_of("xyz") != std::string::npos) {
                    fail("error_axes", ln, "expected a nonempty subset of xyz");
                }
                c.error_axes = s;
            },
            [](const RunConfig& c) { return c.error_axes; });
        add("error_applies_to_tx",
            [](RunConfig& c, const std::string& v, int ln) {
                c.error_applies_to_tx = parse_bool("error_applies_to_tx", ln, v);
            },
            [](const RunConfig& c) {
                return std::string(c.error_applies_to_tx ? "true" : "false");
            });
        add("greedy_max_sweeps",
            [](RunConfig& c, const std::string& v, int ln) {
                c.greedy_max_sweeps = parse_int<int>("greedy_max_sweeps", ln, v);
                if (c.greedy_max_sweeps < 1) fail("greedy_max_sweeps", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.greedy_max_sweeps); });
        add("greedy_cold_start",
            [](RunConfig& c, const std::string& v, int ln) {
                c.greedy_cold_start = parse_bool("greedy_cold_start", ln, v);
            },
            [](const RunConfig& c) {
                return std::string(c.greedy_cold_start ? "true" : "false");
            });
        add("xi_grid_points",
            [](RunConfig& c, const std::string& v, int ln) {
                c.xi_grid_points = parse_int<int>("xi_grid_points", ln, v);
                if (c.xi_grid_points < 2) fail("xi_grid_points", ln, "must be >= 2");
            },
            [](const RunConfig& c) { return std::to_string(c.xi_grid_points); });
        add("frame_length",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_length = parse_int<std::int64_t>("frame_length", ln, v);
                if (c.frame_length < 1) fail("frame_length", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.frame_length); });
        add("frame_pilot_unit",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_pilot_unit = parse_int<std::int64_t>("frame_pilot_unit", ln, v);
                if (c.frame_pilot_unit < 0) fail("frame_pilot_unit", ln, "must be >= 0");
            },
            [](const RunConfig& c) { return std::to_string(c.frame_pilot_unit); });
        add("frame_control",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_control = parse_int<std::int64_t>("frame_control", ln, v);
                if (c.frame_control < 0) fail("frame_control", ln, "must be >= 0");
            },
            [](const RunConfig& c) { return std::to_string(c.frame_control); });
        add("frame_num_ris",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_num_ris = parse_int<int>("frame_num_ris", ln, v);
                if (c.frame_num_ris < 1) fail("frame_num_ris", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.frame_num_ris); });
        add("frame_paths_per_ris",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_paths_per_ris = parse_int<std::int64_t>("frame_paths_per_ris", ln, v);
                if (c.frame_paths_per_ris < 1) fail("frame_paths_per_ris", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.frame_paths_per_ris); });
        add("frame_enabled_fraction",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_enabled_fraction = parse_double("frame_enabled_fraction", ln, v);
                if (!(c.frame_enabled_fraction > 0.0) || !(c.frame_enabled_fraction <= 1.0)) {
                    fail("frame_enabled_fraction", ln, "must lie in (0, 1]");
                }
            },
            [](const RunConfig& c) { return io::format_double(c.frame_enabled_fraction); });
        add("frame_location_pilots_required",
            [](RunConfig& c, const std::string& v, int ln) {
                c.frame_location_pilots_required =
                    parse_bool("frame_location_pilots_required", ln, v);
            },
            [](const RunConfig& c) {
                return std::string(c.frame_location_pilots_required ? "true" : "false");
            });
        add("complexity_n_list",
            [](RunConfig& c, const std::string& v, int ln) {
                c.complexity_n_list = parse_int_list("complexity_n_list", ln, v);
                for (const int n : c.complexity_n_list) {
                    if (n < 1) fail("complexity_n_list", ln, "entries must be >= 1");
                }
                if (!std::is_sorted(c.complexity_n_list.begin(), c.complexity_n_list.end())) {
                    fail("complexity_n_list", ln, "entries must be ascending");
                }
            },
            [](const RunConfig& c) { return int_list_text(c.complexity_n_list); });
        add("complexity_small_n_list",
            [](RunConfig& c, const std::string& v, int ln) {
                c.complexity_small_n_list = parse_int_list("complexity_small_n_list", ln, v);
                for (const int n : c.complexity_small_n_list) {
                    if (n < 1 || n > kExhaustiveMaxElements) {
                        fail("complexity_small_n_list", ln, "entries must lie in [1, 20]");
                    }
                }
            },
            [](const RunConfig& c) { return int_list_text(c.complexity_small_n_list); });
        add("complexity_repetitions",
            [](RunConfig& c, const std::string& v, int ln) {
                c.complexity_repetitions = parse_int<int>("complexity_repetitions", ln, v);
                if (c.complexity_repetitions < 1) {
                    fail("complexity_repetitions", ln, "must be >= 1");
                }
            },
            [](const RunConfig& c) { return std::to_string(c.complexity_repetitions); });
        add("complexity_sdr_coeff",
            [](RunConfig& c, const std::string& v, int ln) {
                c.complexity_sdr_coeff = parse_double("complexity_sdr_coeff", ln, v);
                if (!(c.complexity_sdr_coeff > 0.0)) {
                    fail("complexity_sdr_coeff", ln, "must be > 0");
                }
            },
            [](const RunConfig& c) { return io::format_double(c.complexity_sdr_coeff); });
        add("complexity_mjce_coeff",
            [](RunConfig& c, const std::string& v, int ln) {
                c.complexity_mjce_coeff = parse_double("complexity_mjce_coeff", ln, v);
                if (!(c.complexity_mjce_coeff > 0.0)) {
                    fail("complexity_mjce_coeff", ln, "must be > 0");
                }
            },
            [](const RunConfig& c) { return io::format_double(c.complexity_mjce_coeff); });
        add("oracle_instances",
            [](RunConfig& c, const std::string& v, int ln) {
                c.oracle_instances = parse_int<int>("oracle_instances", ln, v);
                if (c.oracle_instances < 1) fail("oracle_instances", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.oracle_instances); });
        add("oracle_nx",
            [](RunConfig& c, const std::string& v, int ln) {
                c.oracle_nx = parse_int<int>("oracle_nx", ln, v);
                if (c.oracle_nx < 1) fail("oracle_nx", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.oracle_nx); });
        add("oracle_ny",
            [](RunConfig& c, const std::string& v, int ln) {
                c.oracle_ny = parse_int<int>("oracle_ny", ln, v);
                if (c.oracle_ny < 1) fail("oracle_ny", ln, "must be >= 1");
            },
            [](const RunConfig& c) { return std::to_string(c.oracle_ny); });
        return t;
    }();
    return table;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, std::ostream& log) {
    RunConfig cfg;
    std::map<std::string, int> seen;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& table = key_table();
        const auto it = std::find_if(table.begin(), table.end(),
                                     [&key](const auto& e) { return e.first == key; });
        if (it == table.end()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
        if (const auto prev = seen.find(key); prev != seen.end()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": key '" + key +
                              "' already set on line " + std::to_string(prev->second));
        }
        seen[key] = line_no;
        it->second.parse(cfg, value, line_no);
    }

    for (const auto& [key, handler] : key_table()) {
        if (!seen.count(key)) {
            log << "config: default " << key << " = " << handler.print(cfg) << "\n";
        }
    }
    return cfg;
}

RunConfig parse_config(const std::string& path, std::ostream& log) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), log);
}

void write_canonical(const RunConfig& cfg, std::ostream& out, const std::string& prefix) {
    for (const auto& [key, handler] : key_table()) {
        out << prefix << key << " = " << handler.print(cfg) << "\n";
    }
}

Scenario make_scenario(const RunConfig& cfg) {
    Scenario sc;
    sc.frequency_hz = cfg.frequency_hz;
    sc.tx_true = cfg.tx;
    sc.rx_true = cfg.rx;
    sc.rx_presumed = cfg.rx;
    sc.transmit_power_w = dbm_to_watts(cfg.tx_power_dbm);
    sc.noise_power_w = dbm_to_watts(cfg.noise_power_dbm);
    sc.los_blocked = cfg.los_blocked;
    sc.seed = cfg.seed;
    sc.validate();
    return sc;
}

RisGeometry make_geometry(const RunConfig& cfg) {
    const double wavelength = kSpeedOfLight / cfg.frequency_hz;
    RisGeometry geom;
    try {
        if (cfg.ris_orientation == RisOrientation::Bisector) {
            geom.frame = PlaneFrame::bisector(cfg.ris_center, cfg.tx, cfg.rx);
        } else {
            geom.frame = PlaneFrame::from_axes(cfg.ris_center, cfg.ris_u_axis, cfg.ris_v_axis);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: invalid RIS frame: ") + e.what());
    }
    geom.nx = cfg.ris_nx;
    geom.ny = cfg.ris_ny;
    geom.spacing = cfg.ris_spacing_wavelengths * wavelength;
    geom.validate();
    return geom;
}

AxisMask make_axis_mask(const RunConfig& cfg) {
    AxisMask mask;
    mask.x = cfg.error_axes.find('x') != std::string::npos;
    mask.y = cfg.error_axes.find('y') != std::string::npos;
    mask.z = cfg.error_axes.find('z') != std::string::npos;
    return mask;
}

ErrorKind make_error_kind(const RunConfig& cfg) {
    return cfg.error_model == "gaussian" ? ErrorKind::GaussianPerAxis
                                         : ErrorKind::FixedMagnitudeRandomDirection;
}

namespace {

SweepSpec base_sweep_spec(const RunConfig& cfg) {
    SweepSpec spec;
    spec.scenario = make_scenario(cfg);
    spec.geometry = make_geometry(cfg);
    const double wavelength = spec.scenario.wavelength();
    spec.error_magnitudes.reserve(cfg.error_grid_wavelengths.size());
    for (const double e : cfg.error_grid_wavelengths) {
        spec.error_magnitudes.push_back(e * wavelength);
    }
    spec.trials = cfg.trials;
    spec.rule = cfg.rule;
    spec.error_kind = make_error_kind(cfg);
    spec.error_axes = make_axis_mask(cfg);
    spec.error_applies_to_tx = cfg.error_applies_to_tx;
    spec.greedy_max_sweeps = cfg.greedy_max_sweeps;
    spec.greedy_cold_start = cfg.greedy_cold_start;
    return spec;
}

}  // namespace

SweepSpec make_sweep_spec(const RunConfig& cfg) {
    SweepSpec spec = base_sweep_spec(cfg);
    for (const auto& name : cfg.schemes) {
        const SchemeKind kind = scheme_from_string(name);
        if (kind == SchemeKind::Tposj) {
            for (const double xi : cfg.xi_list_wavelengths) {
                spec.schemes.push_back({kind, xi});
            }
        } else {
            spec.schemes.push_back({kind, -1.0});
        }
    }
    spec.validate();
    return spec;
}

SweepSpec make_xi_sweep_spec(const RunConfig& cfg) {
    SweepSpec spec = base_sweep_spec(cfg);
    const int points = cfg.xi_grid_points;
    for (int k = 0; k < points; ++k) {
        const double xi = 0.5 * static_cast<double>(k) / static_cast<double>(points - 1);
        spec.schemes.push_back({SchemeKind::Tposj, xi});
    }
    spec.validate();
    return spec;
}

ComplexitySpec make_complexity_spec(const RunConfig& cfg) {
    ComplexitySpec spec;
    spec.n_list = cfg.complexity_n_list;
    spec.small_n_list = cfg.complexity_small_n_list;
    spec.repetitions = cfg.complexity_repetitions;
    spec.sdr_coeff = cfg.complexity_sdr_coeff;
    spec.mjce_coeff = cfg.complexity_mjce_coeff;
    spec.seed = cfg.seed;
    spec.scenario = make_scenario(cfg);
    spec.rule = cfg.rule;
    spec.greedy_max_sweeps = cfg.greedy_max_sweeps;
    return spec;
}

FrameModel make_frame_model(const RunConfig& cfg, FrameScheme scheme) {
    FrameModel model;
    model.frame_length = cfg.frame_length;
    model.uplink_pilot_cost = cfg.frame_pilot_unit;
    model.control_cost = cfg.frame_control;
    model.scheme = scheme;
    model.num_ris = cfg.frame_num_ris;
    model.elements_per_ris = static_cast<std::int64_t>(cfg.ris_nx) * cfg.ris_ny;
    model.paths_per_ris = cfg.frame_paths_per_ris;
    model.enabled_ris_fraction = cfg.frame_enabled_fraction;
    model.location_pilots_required = cfg.frame_location_pilots_required;
    model.validate();
    return model;
}

}  // namespace risbeam
