#include "risbeam/channel.hpp"

#include <numbers>
#include <stdexcept>

namespace risbeam {

void Scenario::validate() const {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
        throw std::invalid_argument("Scenario: frequency must be positive and finite");
    }
    if (!is_finite(tx_true) || !is_finite(rx_true) || !is_finite(rx_presumed)) {
        throw std::invalid_argument("Scenario: positions must be finite");
    }
    if (!(transmit_power_w >= 0.0) || !std::isfinite(transmit_power_w)) {
        throw std::invalid_argument("Scenario: transmit power must be >= 0 and finite");
    }
    if (!(noise_power_w > 0.0) || !std::isfinite(noise_power_w)) {
        throw std::invalid_argument("Scenario: noise power must be positive and finite");
    }
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

std::complex<double> freespace_gain(const Point3& a, const Point3& b, double wavelength) {
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("freespace_gain: wavelength must be positive");
    }
    const double d = distance(a, b);
    if (d < 1e-9) {
        throw std::invalid_argument("freespace_gain: points coincide (|a-b| < 1e-9 m)");
    }
    const double amplitude = wavelength / (4.0 * std::numbers::pi * d);
    const double phase = -2.0 * std::numbers::pi * d / wavelength;
    return std::polar(amplitude, phase);
}

CascadedGains cascaded_gains(const Point3& tx, const Point3& rx,
                             const RisGeometry& geom, double wavelength,
                             bool los_blocked) {
    const auto positions = element_positions(geom);
    CascadedGains gains;
    gains.wavelength = wavelength;
    gains.element_gain.reserve(positions.size());
    gains.total_path.reserve(positions.size());
    for (const auto& q : positions) {
        gains.element_gain.push_back(freespace_gain(tx, q, wavelength) *
                                     freespace_gain(q, rx, wavelength));
        gains.total_path.push_back(distance(tx, q) + distance(q, rx));
    }
    gains.direct_gain = los_blocked ? std::complex<double>{0.0, 0.0}
                                    : freespace_gain(tx, rx, wavelength);
    return gains;
}

CascadedGains cascaded_gains(const Scenario& scenario, const RisGeometry& geom) {
    scenario.validate();
    return cascaded_gains(scenario.tx_true, scenario.rx_true, geom,
                          scenario.wavelength(), scenario.los_blocked);
}

std::complex<double> effective_channel(const CascadedGains& gains,
                                       const RisConfiguration& config) {
    if (gains.size() != config.size()) {
        throw std::invalid_argument("effective_channel: gains and configuration differ in length");
    }
    std::complex<double> h = gains.direct_gain;
    for (std::size_t n = 0; n < gains.size(); ++n) {
        const auto& e = config.elements[n];
        if (e.mode != Mode::Reflect) {
            continue;
        }
        if (e.phase == 0.0) {
            h += gains.element_gain[n];
        } else if (e.phase == std::numbers::pi) {
            h -= gains.element_gain[n];
        } else {
            h += std::polar(1.0, e.phase) * gains.element_gain[n];
        }
    }
    return h;
}

double spectral_efficiency(std::complex<double> h_eff, double transmit_power_w,
                           double noise_power_w) {
    if (!(noise_power_w > 0.0)) {
        throw std::invalid_argument("spectral_efficiency: noise power must be positive");
    }
    if (transmit_power_w < 0.0) {
        throw std::invalid_argument("spectral_efficiency: transmit power must be >= 0");
    }
    const double snr = transmit_power_w * std::norm(h_eff) / noise_power_w;
    return std::log2(1.0 + snr);
}

}  // namespace risbeam
