#ifndef RISBEAM_BEAMFORMING_HPP
#define RISBEAM_BEAMFORMING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "risbeam/channel.hpp"
#include "risbeam/geometry.hpp"
#include "risbeam/ris_config.hpp"

namespace risbeam {

/// One-bit phase assignment rule used by the location-driven configuration.
///   ZoneParity   - phase 0 in odd Fresnel zones, pi in even zones; the bit
///                  flips at zone boundaries (residual 0).
///   NearestPhase - phase that best aligns the element contribution; the bit
///                  flips mid-zone (residual lambda/4).
enum class PhaseRule { ZoneParity, NearestPhase };

const char* to_string(PhaseRule rule);

/// On/Off judgement parameters. threshold is the width xi in meters of the
/// reflecting band inside each half-wave residual interval, in [0, lambda/2];
/// lambda/2 keeps every element reflecting, 0 absorbs everything.
struct TposjParams {
    double threshold = 0.0;  // xi, meters
    PhaseRule rule = PhaseRule::ZoneParity;
};

/// Phase 0 for odd zones, pi for even zones.
std::vector<double> zone_parity_phases(const FresnelMap& map);

/// One-bit phases from the geometric excess path under the given rule.
std::vector<double> one_bit_phases(const FresnelMap& map, PhaseRule rule);

/// Reference phase for CSI-driven quantisation: arg of the direct gain when a
/// LoS path is present, otherwise the phase of the minimum-total-path element.
double reference_phase(const CascadedGains& gains);

/// One-bit phases maximising cos(theta + arg(c_n) - ref) over {0, pi}; ties at
/// exactly pi/2 resolve to 0.
std::vector<double> nearest_phase_bits(const CascadedGains& gains);

/// Two-step location-driven configuration: assign one-bit phases from the
/// Fresnel map, then absorb the elements whose residual sits within
/// (lambda/2 - xi)/2 of the bit-flip loci of the active rule. Equivalently an
/// element reflects iff |rho - lambda/4| <= xi/2, with rho the residual
/// re-centred on the flip loci.
RisConfiguration tposj_configure(const FresnelMap& map, const TposjParams& params);

/// Ideal continuous conjugate beamforming: all elements reflect with
/// theta_n = ref - arg(c_n), aligning every contribution with the reference.
RisConfiguration continuous_conjugate(const CascadedGains& gains);

/// All elements reflecting with phases drawn i.i.d. uniform on {0, pi}.
RisConfiguration random_configuration(std::size_t n, std::mt19937_64& engine);

struct GreedyStats {
    std::int64_t flip_tests = 0;
    std::int64_t flips = 0;
    int sweeps = 0;
    std::vector<double> sweep_objectives;  // |h|^2 after each sweep
};

/// Coordinate ascent on |h_eff|^2 over one-bit phases: sweeps the elements and
/// flips a bit when that strictly increases the objective, using a constant
/// work incremental update of the channel sum. Stops after a sweep with no
/// flips or after max_sweeps. init must be all-Reflect with phases in {0, pi}.
RisConfiguration greedy_onebit_search(const CascadedGains& gains,
                                      const RisConfiguration& init, int max_sweeps,
                                      GreedyStats* stats = nullptr);

inline constexpr int kExhaustiveMaxElements = 20;

/// Global optimum of |h_eff|^2 over all 2^n one-bit patterns, enumerated in
/// Gray-code order with single-bit incremental updates. Ties resolve to the
/// lexicographically smallest bit pattern (element 0 most significant,
/// bit 1 meaning phase pi). Throws std::invalid_argument when n > 20.
/// When objectives is non-null it receives |h|^2 at every enumeration step.
RisConfiguration exhaustive_onebit(const CascadedGains& gains,
                                   std::vector<double>* objectives = nullptr);

}  // namespace risbeam

#endif
