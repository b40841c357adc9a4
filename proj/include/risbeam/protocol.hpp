#ifndef RISBEAM_PROTOCOL_HPP
#define RISBEAM_PROTOCOL_HPP

#include <cstdint>

namespace risbeam {

/// How the frame acquires the information needed to configure the RIS:
///   LocationDriven - localise the terminal; pilot cost independent of the
///                    element count, only enabled surfaces sound pilots.
///   CePerElement   - per-element cascaded channel estimation.
///   CeParametric   - compressed estimation over L propagation paths per RIS.
enum class FrameScheme { LocationDriven, CePerElement, CeParametric };

const char* to_string(FrameScheme scheme);

/// TDD frame bookkeeping in symbols. The downlink configuration is reused for
/// the next uplink (reciprocity), so configuration adds no uplink cost.
struct FrameModel {
    std::int64_t frame_length = 10000;
    std::int64_t uplink_pilot_cost = 1;  // symbols per pilot unit
    std::int64_t control_cost = 10;
    FrameScheme scheme = FrameScheme::LocationDriven;
    int num_ris = 1;                       // R
    std::int64_t elements_per_ris = 6400;  // N
    std::int64_t paths_per_ris = 3;        // L
    double enabled_ris_fraction = 1.0;     // (0, 1]
    bool location_pilots_required = true;

    void validate() const;
};

/// Pilot + control overhead of one frame. Throws std::runtime_error when the
/// overhead exceeds the frame length.
std::int64_t overhead_symbols(const FrameModel& model);

/// se * (frame_length - overhead) / frame_length.
double effective_rate(double spectral_efficiency, const FrameModel& model);

}  // namespace risbeam

#endif
