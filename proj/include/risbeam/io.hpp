#ifndef RISBEAM_IO_HPP
#define RISBEAM_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "risbeam/config.hpp"
#include "risbeam/harness.hpp"

namespace risbeam {

/// Raised when a NaN or Inf would reach an output file; mapped to exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "0.1.0";

namespace io {

void require_finite(double value, const char* context);

/// Locale-independent decimal text with 17 significant digits (exact
/// round-trip for doubles). Throws NumericError on NaN/Inf.
std::string format_double(double value);

/// Metadata block: "# key = value" for every config key (stripping the
/// leading "# " yields a parseable config), then "## " information lines.
void write_metadata(std::ostream& out, const RunConfig& cfg, const std::string& subcommand);

void write_sweep_csv(std::ostream& out, const RunConfig& cfg, const SweepResult& result,
                     const std::string& subcommand);

void write_complexity_csv(std::ostream& out, const RunConfig& cfg,
                          const std::vector<ComplexityRow>& rows);

struct FrameRow {
    std::string scheme;
    int num_ris = 0;
    std::int64_t elements_per_ris = 0;
    std::int64_t paths_per_ris = 0;
    std::int64_t overhead = 0;
    double overhead_fraction = 0.0;
    double effective_rate = 0.0;
};

void write_frame_csv(std::ostream& out, const RunConfig& cfg,
                     const std::vector<FrameRow>& rows);

void write_oracle_csv(std::ostream& out, const RunConfig& cfg,
                      const std::vector<OracleRow>& rows, int elements);

/// Per-element map rows plus the zone-boundary conics of one field model
/// (exact near-field or linearised far-field).
struct MapTable {
    struct ElementRow {
        int i = 0;
        int j = 0;
        double delta = 0.0;
        std::int64_t zone = 0;
        double residual = 0.0;
        bool reflect = true;
        double theta = 0.0;
    };
    struct ConicRow {
        std::int64_t m = 0;
        ConicSection conic;
    };
    std::vector<ElementRow> elements;
    std::vector<ConicRow> conics;
};

void write_map_elements_csv(std::ostream& out, const RunConfig& cfg, const MapTable& table,
                            const std::string& field);
void write_map_conics_csv(std::ostream& out, const RunConfig& cfg, const MapTable& table,
                          const std::string& field);

}  // namespace io

}  // namespace risbeam

#endif
