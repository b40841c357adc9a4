#include "risbeam/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace risbeam {

const char* to_string(FrameScheme scheme) {
    switch (scheme) {
        case FrameScheme::LocationDriven: return "location-driven";
        case FrameScheme::CePerElement: return "ce-per-element";
        case FrameScheme::CeParametric: return "ce-parametric";
    }
    return "location-driven";
}

void FrameModel::validate() const {
    if (frame_length < 1) {
        throw std::invalid_argument("FrameModel: frame_length must be >= 1");
    }
    if (uplink_pilot_cost < 0 || control_cost < 0) {
        throw std::invalid_argument("FrameModel: costs must be nonnegative");
    }
    if (num_ris < 1) {
        throw std::invalid_argument("FrameModel: num_ris must be >= 1");
    }
    if (elements_per_ris < 1 || paths_per_ris < 1) {
        throw std::invalid_argument("FrameModel: element and path counts must be >= 1");
    }
    if (!(enabled_ris_fraction > 0.0) || !(enabled_ris_fraction <= 1.0)) {
        throw std::invalid_argument("FrameModel: enabled_ris_fraction must be in (0, 1]");
    }
}

std::int64_t overhead_symbols(const FrameModel& model) {
    model.validate();
    std::int64_t pilots = 0;
    switch (model.scheme) {
        case FrameScheme::LocationDriven: {
            const auto enabled = static_cast<std::int64_t>(
                std::ceil(model.num_ris * model.enabled_ris_fraction));
            pilots = model.location_pilots_required
                         ? model.uplink_pilot_cost * enabled
                         : 0;
            break;
        }
        case FrameScheme::CePerElement:
            pilots = model.uplink_pilot_cost * model.num_ris * model.elements_per_ris;
            break;
        case FrameScheme::CeParametric:
            pilots = model.uplink_pilot_cost * model.num_ris * model.paths_per_ris;
            break;
    }
    const std::int64_t overhead = pilots + model.control_cost;
    if (overhead > model.frame_length) {
        throw std::runtime_error("overhead_symbols: overhead exceeds frame length");
    }
    return overhead;
}

double effective_rate(double spectral_efficiency, const FrameModel& model) {
    const std::int64_t overhead = overhead_symbols(model);
    const double usable =
        static_cast<double>(model.frame_length - overhead) /
        static_cast<double>(model.frame_length);
    return spectral_efficiency * usable;
}

}  // namespace risbeam
