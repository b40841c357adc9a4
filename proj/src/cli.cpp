#include "risbeam/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "risbeam/config.hpp"
#include "risbeam/io.hpp"

namespace risbeam::cli {

namespace {

void commit_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open output file '" + path + "'");
    }
    out << bytes;
    if (!out) {
        throw ConfigError("failed while writing '" + path + "'");
    }
}

io::MapTable near_field_map(const RunConfig& cfg, const Scenario& sc,
                            const RisGeometry& geom, double xi, PhaseRule rule) {
    const double lam = sc.wavelength();
    const FresnelMap map = build_fresnel_map(sc.tx_true, sc.rx_true, geom, lam);
    const RisConfiguration config = tposj_configure(map, {xi, rule});

    io::MapTable table;
    table.elements.reserve(map.size());
    std::int64_t max_zone = 1;
    for (int i = 0; i < geom.nx; ++i) {
        for (int j = 0; j < geom.ny; ++j) {
            const std::size_t n = static_cast<std::size_t>(i) * geom.ny + j;
            const auto& e = config.elements[n];
            table.elements.push_back({i, j, map.excess[n], map.zone[n], map.residual[n],
                                      e.mode == Mode::Reflect, e.phase});
            max_zone = std::max(max_zone, map.zone[n]);
        }
    }
    for (std::int64_t m = 1; m <= max_zone + 1; ++m) {
        table.conics.push_back({m, zone_boundary_conic(sc.tx_true, sc.rx_true,
                                                       geom.frame, m, lam)});
    }
    (void)cfg;
    return table;
}

io::MapTable far_field_map(const RunConfig& cfg, const Scenario& sc,
                           const RisGeometry& geom, double xi, PhaseRule rule) {
    const double lam = sc.wavelength();
    const double delta_center = excess_path(sc.tx_true, sc.rx_true, geom.frame.center);
    const auto positions = element_positions(geom);

    // Linearised map: centre excess plus the first-order term, clamped at
    // zero so the half-wave bucketing stays defined.
    FresnelMap map;
    map.wavelength = lam;
    map.los_distance = distance(sc.tx_true, sc.rx_true);
    map.excess.reserve(positions.size());
    map.zone.reserve(positions.size());
    map.residual.reserve(positions.size());
    for (const auto& q : positions) {
        const double delta =
            std::max(0.0, delta_center + far_field_excess_path(sc.tx_true, sc.rx_true,
                                                               geom.frame, q));
        const ZoneBucket b = zone_bucket(delta, lam);
        map.excess.push_back(delta);
        map.zone.push_back(b.zone);
        map.residual.push_back(b.residual);
    }
    const RisConfiguration config = tposj_configure(map, {xi, rule});

    io::MapTable table;
    table.elements.reserve(map.size());
    std::int64_t max_zone = 1;
    for (int i = 0; i < geom.nx; ++i) {
        for (int j = 0; j < geom.ny; ++j) {
            const std::size_t n = static_cast<std::size_t>(i) * geom.ny + j;
            const auto& e = config.elements[n];
            table.elements.push_back({i, j, map.excess[n], map.zone[n], map.residual[n],
                                      e.mode == Mode::Reflect, e.phase});
            max_zone = std::max(max_zone, map.zone[n]);
        }
    }
    for (std::int64_t m = 1; m <= max_zone + 1; ++m) {
        table.conics.push_back({m, far_field_zone_boundary(sc.tx_true, sc.rx_true,
                                                           geom.frame, m, lam)});
    }
    (void)cfg;
    return table;
}

void run_map(const RunConfig& cfg, const std::string& out_prefix, std::ostream& out) {
    const Scenario sc = make_scenario(cfg);
    const RisGeometry geom = make_geometry(cfg);
    const double xi = cfg.xi_list_wavelengths.front() * sc.wavelength();

    const io::MapTable near = near_field_map(cfg, sc, geom, xi, cfg.rule);
    const io::MapTable far = far_field_map(cfg, sc, geom, xi, cfg.rule);

    const struct {
        const char* suffix;
        const io::MapTable* table;
        const char* field;
        bool conics;
    } files[] = {
        {".near.elements.csv", &near, "near", false},
        {".near.conics.csv", &near, "near", true},
        {".far.elements.csv", &far, "far", false},
        {".far.conics.csv", &far, "far", true},
    };
    for (const auto& f : files) {
        std::ostringstream buffer;
        if (f.conics) {
            io::write_map_conics_csv(buffer, cfg, *f.table, f.field);
        } else {
            io::write_map_elements_csv(buffer, cfg, *f.table, f.field);
        }
        const std::string path = out_prefix + f.suffix;
        commit_file(path, buffer.str());
        out << "wrote " << path << "\n";
    }
}

void run_sweep(const RunConfig& cfg, const SweepSpec& spec, const std::string& path,
               int workers, const std::string& subcommand, std::ostream& out) {
    const SweepResult result = run_error_sweep(spec, workers);
    std::ostringstream buffer;
    io::write_sweep_csv(buffer, cfg, result, subcommand);
    commit_file(path, buffer.str());
    out << "wrote " << path << "\n";
}

void run_complexity(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const auto rows = run_complexity_bench(make_complexity_spec(cfg));
    std::ostringstream buffer;
    io::write_complexity_csv(buffer, cfg, rows);
    commit_file(path, buffer.str());
    out << "wrote " << path << "\n";
}

void run_frame(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const Scenario sc = make_scenario(cfg);
    const RisGeometry geom = make_geometry(cfg);
    const double lam = sc.wavelength();

    // Reference spectral efficiency: all-reflect location-driven configuration
    // at the true position.
    const FresnelMap map = build_fresnel_map(sc.tx_true, sc.rx_true, geom, lam);
    const RisConfiguration config = tposj_configure(map, {lam / 2.0, cfg.rule});
    const CascadedGains gains = cascaded_gains(sc, geom);
    const double se = spectral_efficiency(effective_channel(gains, config),
                                          sc.transmit_power_w, sc.noise_power_w);

    std::vector<io::FrameRow> rows;
    for (const FrameScheme scheme : {FrameScheme::LocationDriven, FrameScheme::CePerElement,
                                     FrameScheme::CeParametric}) {
        const FrameModel model = make_frame_model(cfg, scheme);
        io::FrameRow row;
        row.scheme = to_string(scheme);
        row.num_ris = model.num_ris;
        row.elements_per_ris = model.elements_per_ris;
        row.paths_per_ris = model.paths_per_ris;
        row.overhead = overhead_symbols(model);
        row.overhead_fraction =
            static_cast<double>(row.overhead) / static_cast<double>(model.frame_length);
        row.effective_rate = effective_rate(se, model);
        rows.push_back(row);
    }
    std::ostringstream buffer;
    io::write_frame_csv(buffer, cfg, rows);
    commit_file(path, buffer.str());
    out << "wrote " << path << "\n";
}

void run_oracle_cmd(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const Scenario sc = make_scenario(cfg);
    const auto rows = run_oracle(sc, cfg.oracle_nx, cfg.oracle_ny, cfg.oracle_instances,
                                 cfg.rule, cfg.greedy_max_sweeps);
    std::ostringstream buffer;
    io::write_oracle_csv(buffer, cfg, rows, cfg.oracle_nx * cfg.oracle_ny);
    commit_file(path, buffer.str());
    out << "wrote " << path << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Location-driven beamforming simulator for RIS-assisted near-field links"};
    app.name("risbeam");
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed_override = 0;
    int workers = 1;

    std::vector<CLI::Option*> seed_opts;
    const auto add_common = [&](CLI::App* sub, const std::string& default_out) {
        sub->add_option("--config", config_path, "run configuration file (key = value)");
        sub->add_option("--out", out_path, "output path" )->default_val(default_out);
        seed_opts.push_back(
            sub->add_option("--seed", seed_override, "override the configured seed"));
        sub->add_option("--workers", workers, "worker threads for sweeps")
            ->check(CLI::PositiveNumber);
        return sub;
    };

    CLI::App* map_cmd = add_common(
        app.add_subcommand("map", "per-element Fresnel map and zone-boundary conics"), "map");
    CLI::App* sweep_cmd = add_common(
        app.add_subcommand("sweep-error", "spectral efficiency vs location error"),
        "sweep_error.csv");
    CLI::App* xi_cmd = add_common(
        app.add_subcommand("sweep-xi", "spectral efficiency over a dense xi grid"),
        "sweep_xi.csv");
    CLI::App* complexity_cmd = add_common(
        app.add_subcommand("complexity", "configuration cost vs element count"),
        "complexity.csv");
    CLI::App* frame_cmd = add_common(
        app.add_subcommand("frame", "frame overhead and effective rate"), "frame.csv");
    CLI::App* oracle_cmd = add_common(
        app.add_subcommand("oracle", "small-N optimizer comparison"), "oracle.csv");

    std::vector<const char*> argv;
    argv.push_back("risbeam");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "risbeam: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        RunConfig cfg = config_path.empty() ? parse_config_text("", err)
                                            : parse_config(config_path, err);
        for (const CLI::Option* opt : seed_opts) {
            if (opt->count() > 0) {
                cfg.seed = seed_override;
            }
        }

        if (map_cmd->parsed()) {
            run_map(cfg, out_path, out);
        } else if (sweep_cmd->parsed()) {
            run_sweep(cfg, make_sweep_spec(cfg), out_path, workers, "sweep-error", out);
        } else if (xi_cmd->parsed()) {
            run_sweep(cfg, make_xi_sweep_spec(cfg), out_path, workers, "sweep-xi", out);
        } else if (complexity_cmd->parsed()) {
            run_complexity(cfg, out_path, out);
        } else if (frame_cmd->parsed()) {
            run_frame(cfg, out_path, out);
        } else if (oracle_cmd->parsed()) {
            run_oracle_cmd(cfg, out_path, out);
        }
        return kExitOk;
    } catch (const NumericError& e) {
        err << "risbeam: numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const ConfigError& e) {
        err << "risbeam: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "risbeam: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace risbeam::cli
