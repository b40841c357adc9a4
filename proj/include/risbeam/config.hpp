#ifndef RISBEAM_CONFIG_HPP
#define RISBEAM_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "risbeam/beamforming.hpp"
#include "risbeam/channel.hpp"
#include "risbeam/geometry.hpp"
#include "risbeam/harness.hpp"
#include "risbeam/localization.hpp"
#include "risbeam/protocol.hpp"

namespace risbeam {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RisOrientation { Bisector, Explicit };

/// Flat key = value run configuration. Missing keys fall back to the
/// defaults below (the 80x80 half-wavelength surface at 28 GHz with terminals
/// at (0, 12, 0) and (5, 0, 0), 30 dBm transmit power, -90 dBm noise, NLoS);
/// unknown keys are rejected.
struct RunConfig {
    double frequency_hz = 28e9;
    Vec3 tx{0.0, 12.0, 0.0};
    Vec3 rx{5.0, 0.0, 0.0};
    int ris_nx = 80;
    int ris_ny = 80;
    double ris_spacing_wavelengths = 0.5;
    Vec3 ris_center{0.0, 0.0, 0.0};
    RisOrientation ris_orientation = RisOrientation::Bisector;
    Vec3 ris_u_axis{1.0, 0.0, 0.0};
    Vec3 ris_v_axis{0.0, 1.0, 0.0};
    double tx_power_dbm = 30.0;
    double noise_power_dbm = -90.0;
    bool los_blocked = true;
    std::uint64_t seed = 1;
    PhaseRule rule = PhaseRule::ZoneParity;
    std::vector<double> xi_list_wavelengths{0.1, 0.25, 0.5};
    std::vector<double> error_grid_wavelengths{0.0, 0.125, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
    int trials = 200;
    std::vector<std::string> schemes{"tposj", "benchmark-onebit", "benchmark-continuous",
                                     "random"};
    std::string error_model = "fixed";  // fixed | gaussian
    std::string error_axes = "xyz";     // any subset of xyz
    bool error_applies_to_tx = false;
    int greedy_max_sweeps = 50;
    bool greedy_cold_start = false;
    int xi_grid_points = 11;  // xi grid of the sweep-xi subcommand
    std::int64_t frame_length = 10000;
    std::int64_t frame_pilot_unit = 1;
    std::int64_t frame_control = 10;
    int frame_num_ris = 1;
    std::int64_t frame_paths_per_ris = 3;
    double frame_enabled_fraction = 1.0;
    bool frame_location_pilots_required = true;
    std::vector<int> complexity_n_list{100, 1000, 10000};
    std::vector<int> complexity_small_n_list{8, 10, 12};
    int complexity_repetitions = 9;
    double complexity_sdr_coeff = 1.0;
    double complexity_mjce_coeff = 1.0;
    int oracle_instances = 20;
    int oracle_nx = 4;
    int oracle_ny = 3;
};

/// Parses a config file. Every key that falls back to its default is logged
/// to `log`, one line per key. Throws ConfigError (naming the key and line)
/// on unknown keys, unparsable values or constraint violations.
RunConfig parse_config(const std::string& path, std::ostream& log);
RunConfig parse_config_text(const std::string& text, std::ostream& log);

/// Serialises every key in canonical form, one "key = value" line each,
/// prefixed by `prefix`. Feeding the output back through parse_config_text
/// reproduces the configuration exactly.
void write_canonical(const RunConfig& cfg, std::ostream& out, const std::string& prefix);

Scenario make_scenario(const RunConfig& cfg);
RisGeometry make_geometry(const RunConfig& cfg);
AxisMask make_axis_mask(const RunConfig& cfg);
ErrorKind make_error_kind(const RunConfig& cfg);

/// Sweep over the configured error grid: one tposj scheme per xi entry plus
/// every other scheme listed in cfg.schemes.
SweepSpec make_sweep_spec(const RunConfig& cfg);

/// Tposj-only sweep over a dense xi grid (xi_grid_points values spanning
/// [0, 1/2] wavelengths) and the configured error grid.
SweepSpec make_xi_sweep_spec(const RunConfig& cfg);

ComplexitySpec make_complexity_spec(const RunConfig& cfg);

FrameModel make_frame_model(const RunConfig& cfg, FrameScheme scheme);

}  // namespace risbeam

#endif
