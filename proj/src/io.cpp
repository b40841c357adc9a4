#include "risbeam/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace risbeam::io {

void require_finite(double value, const char* context) {
    if (!std::isfinite(value)) {
        throw NumericError(std::string("non-finite value in ") + context);
    }
}

std::string format_double(double value) {
    require_finite(value, "numeric output");
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw NumericError("failed to format numeric output");
    }
    return std::string(buf, ptr);
}

void write_metadata(std::ostream& out, const RunConfig& cfg, const std::string& subcommand) {
    write_canonical(cfg, out, "# ");
    out << "## risbeam " << kVersion << "\n";
    out << "## subcommand: " << subcommand << "\n";
    const double wavelength = kSpeedOfLight / cfg.frequency_hz;
    out << "## wavelength_m: " << format_double(wavelength) << "\n";
    try {
        const RisGeometry geom = make_geometry(cfg);
        const auto vec = [](const Vec3& v) {
            return format_double(v.x) + ", " + format_double(v.y) + ", " + format_double(v.z);
        };
        out << "## ris_frame_u: " << vec(geom.frame.u_axis) << "\n";
        out << "## ris_frame_v: " << vec(geom.frame.v_axis) << "\n";
        out << "## ris_frame_normal: " << vec(geom.frame.normal) << "\n";
    } catch (const ConfigError&) {
        // frame reported only when constructible
    }
    out << "## nlos_phase_reference: minimum-total-path element\n";
}

namespace {

std::string xi_text(const SchemeSpec& scheme) {
    // -1 marks "not applicable" for schemes without a robustness threshold.
    return format_double(scheme.kind == SchemeKind::Tposj ? scheme.xi_wavelengths : -1.0);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const RunConfig& cfg, const SweepResult& result,
                     const std::string& subcommand) {
    write_metadata(out, cfg, subcommand);
    out << "scheme,xi_wavelengths,epsilon_m,mean_se,std_se,p05,p95,trials\n";
    for (const auto& p : result.points) {
        out << to_string(p.scheme.kind) << ',' << xi_text(p.scheme) << ','
            << format_double(p.epsilon) << ',' << format_double(p.mean_se) << ','
            << format_double(p.std_se) << ',' << format_double(p.p05) << ','
            << format_double(p.p95) << ',' << p.trials << "\n";
    }
}

void write_complexity_csv(std::ostream& out, const RunConfig& cfg,
                          const std::vector<ComplexityRow>& rows) {
    write_metadata(out, cfg, "complexity");
    out << "scheme,kind,n,op_count,wall_seconds\n";
    for (const auto& r : rows) {
        out << r.scheme << ',' << (r.model ? "model" : "measured") << ',' << r.n << ','
            << format_double(r.op_count) << ',' << format_double(r.wall_seconds) << "\n";
    }
}

void write_frame_csv(std::ostream& out, const RunConfig& cfg,
                     const std::vector<FrameRow>& rows) {
    write_metadata(out, cfg, "frame");
    out << "scheme,R,N,L,overhead_symbols,overhead_fraction,effective_rate\n";
    for (const auto& r : rows) {
        out << r.scheme << ',' << r.num_ris << ',' << r.elements_per_ris << ','
            << r.paths_per_ris << ',' << r.overhead << ','
            << format_double(r.overhead_fraction) << ','
            << format_double(r.effective_rate) << "\n";
    }
}

void write_oracle_csv(std::ostream& out, const RunConfig& cfg,
                      const std::vector<OracleRow>& rows, int elements) {
    write_metadata(out, cfg, "oracle");
    out << "instance,scheme,n,h_eff_abs,se\n";
    for (const auto& r : rows) {
        out << r.instance << ',' << r.scheme << ',' << elements << ','
            << format_double(r.h_eff_abs) << ',' << format_double(r.se) << "\n";
    }
}

void write_map_elements_csv(std::ostream& out, const RunConfig& cfg, const MapTable& table,
                            const std::string& field) {
    write_metadata(out, cfg, "map");
    out << "## field: " << field << "\n";
    out << "i,j,delta_m,zone,residual_m,mode,theta_rad\n";
    for (const auto& r : table.elements) {
        out << r.i << ',' << r.j << ',' << format_double(r.delta) << ',' << r.zone << ','
            << format_double(r.residual) << ',' << (r.reflect ? "reflect" : "absorb") << ','
            << format_double(r.theta) << "\n";
    }
}

void write_map_conics_csv(std::ostream& out, const RunConfig& cfg, const MapTable& table,
                          const std::string& field) {
    write_metadata(out, cfg, "map");
    out << "## field: " << field << "\n";
    out << "m,A,B,C,D,E,F,classification\n";
    for (const auto& r : table.conics) {
        out << r.m << ',' << format_double(r.conic.a) << ',' << format_double(r.conic.b)
            << ',' << format_double(r.conic.c) << ',' << format_double(r.conic.d) << ','
            << format_double(r.conic.e) << ',' << format_double(r.conic.f) << ','
            << to_string(r.conic.classification) << "\n";
    }
}

}  // namespace risbeam::io
