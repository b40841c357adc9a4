#ifndef RISBEAM_CHANNEL_HPP
#define RISBEAM_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "risbeam/geometry.hpp"
#include "risbeam/ris_config.hpp"

namespace risbeam {

/// Single-link narrowband scenario. Powers in watts, positions in meters.
struct Scenario {
    double frequency_hz = 0.0;
    Point3 tx_true;
    Point3 rx_true;
    Point3 rx_presumed;
    double transmit_power_w = 0.0;
    double noise_power_w = 0.0;
    bool los_blocked = false;
    std::uint64_t seed = 0;

    double wavelength() const { return kSpeedOfLight / frequency_hz; }
    void validate() const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Free-space complex baseband gain (lambda/(4*pi*d)) * exp(-i*2*pi*d/lambda).
/// Throws std::invalid_argument when |a-b| < 1e-9 m.
std::complex<double> freespace_gain(const Point3& a, const Point3& b, double wavelength);

/// Cascaded tx -> element -> rx gains plus the direct tx -> rx gain.
/// total_path keeps |tx-q_n| + |q_n-rx| per element so phase references can be
/// picked without recovering path lengths from the complex values.
struct CascadedGains {
    std::vector<std::complex<double>> element_gain;
    std::vector<double> total_path;  // meters
    std::complex<double> direct_gain{0.0, 0.0};
    double wavelength = 0.0;

    std::size_t size() const { return element_gain.size(); }
};

/// Isotropic elements with unit reflection efficiency:
/// c_n = freespace_gain(tx, q_n) * freespace_gain(q_n, rx); the direct gain is
/// freespace_gain(tx, rx), or zero when the LoS path is blocked.
CascadedGains cascaded_gains(const Point3& tx, const Point3& rx,
                             const RisGeometry& geom, double wavelength,
                             bool los_blocked);

/// Convenience overload over the true terminal positions of a scenario.
CascadedGains cascaded_gains(const Scenario& scenario, const RisGeometry& geom);

/// h_eff = h_d + sum_n beta_n * exp(i*theta_n) * c_n with beta_n = 1 for
/// Reflect and 0 for Absorb. Throws std::invalid_argument on length mismatch.
std::complex<double> effective_channel(const CascadedGains& gains,
                                       const RisConfiguration& config);

/// log2(1 + P*|h|^2 / sigma^2) in bits/s/Hz.
double spectral_efficiency(std::complex<double> h_eff, double transmit_power_w,
                           double noise_power_w);

}  // namespace risbeam

#endif
