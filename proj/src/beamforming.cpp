#include "risbeam/beamforming.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "risbeam/rng.hpp"

namespace risbeam {

namespace {

constexpr double kPi = std::numbers::pi;

void check_map(const FresnelMap& map) {
    if (!(map.wavelength > 0.0)) {
        throw std::invalid_argument("FresnelMap: wavelength must be positive");
    }
}

std::vector<int> signs_from_config(const CascadedGains& gains,
                                   const RisConfiguration& config,
                                   const char* who) {
    if (config.size() != gains.size()) {
        throw std::invalid_argument(std::string(who) +
                                    ": configuration length does not match gains");
    }
    std::vector<int> signs(config.size());
    for (std::size_t n = 0; n < config.size(); ++n) {
        const auto& e = config.elements[n];
        if (e.mode != Mode::Reflect) {
            throw std::invalid_argument(std::string(who) +
                                        ": one-bit search requires all-Reflect input");
        }
        if (e.phase == 0.0) {
            signs[n] = 1;
        } else if (e.phase == kPi) {
            signs[n] = -1;
        } else {
            throw std::invalid_argument(std::string(who) +
                                        ": one-bit search requires phases in {0, pi}");
        }
    }
    return signs;
}

std::complex<double> signed_sum(const CascadedGains& gains, const std::vector<int>& signs) {
    std::complex<double> h = gains.direct_gain;
    for (std::size_t n = 0; n < signs.size(); ++n) {
        h += (signs[n] > 0 ? gains.element_gain[n] : -gains.element_gain[n]);
    }
    return h;
}

}  // namespace

const char* to_string(PhaseRule rule) {
    return rule == PhaseRule::ZoneParity ? "zone-parity" : "nearest-phase";
}

std::vector<double> zone_parity_phases(const FresnelMap& map) {
    check_map(map);
    std::vector<double> phases(map.size());
    for (std::size_t n = 0; n < map.size(); ++n) {
        phases[n] = (map.zone[n] % 2 != 0) ? 0.0 : kPi;
    }
    return phases;
}

std::vector<double> one_bit_phases(const FresnelMap& map, PhaseRule rule) {
    if (rule == PhaseRule::ZoneParity) {
        return zone_parity_phases(map);
    }
    check_map(map);
    // Nearest-phase on the geometric path: phase lag delta mod lambda; keep 0
    // while the lag is within a quarter wave of in-phase (ties included).
    const double lam = map.wavelength;
    std::vector<double> phases(map.size());
    for (std::size_t n = 0; n < map.size(); ++n) {
        const double lag = (map.zone[n] % 2 != 0) ? map.residual[n]
                                                  : map.residual[n] + lam / 2.0;
        phases[n] = (lag <= lam / 4.0 || lag >= 3.0 * lam / 4.0) ? 0.0 : kPi;
    }
    return phases;
}

double reference_phase(const CascadedGains& gains) {
    if (std::abs(gains.direct_gain) > 0.0) {
        return std::arg(gains.direct_gain);
    }
    if (gains.size() == 0) {
        throw std::invalid_argument("reference_phase: no direct gain and no elements");
    }
    const auto it = std::min_element(gains.total_path.begin(), gains.total_path.end());
    const std::size_t n = static_cast<std::size_t>(it - gains.total_path.begin());
    return std::arg(gains.element_gain[n]);
}

std::vector<double> nearest_phase_bits(const CascadedGains& gains) {
    const double ref = reference_phase(gains);
    std::vector<double> phases(gains.size());
    for (std::size_t n = 0; n < gains.size(); ++n) {
        const double c = std::cos(std::arg(gains.element_gain[n]) - ref);
        phases[n] = (c >= 0.0) ? 0.0 : kPi;
    }
    return phases;
}

RisConfiguration tposj_configure(const FresnelMap& map, const TposjParams& params) {
    check_map(map);
    const double lam = map.wavelength;
    if (!(params.threshold >= 0.0) || !(params.threshold <= lam / 2.0)) {
        throw std::invalid_argument(
            "tposj_configure: threshold xi must lie in [0, lambda/2]");
    }
    const std::vector<double> phases = one_bit_phases(map, params.rule);

    RisConfiguration config;
    config.elements.resize(map.size());
    const double half = lam / 2.0;
    const double quarter = lam / 4.0;
    for (std::size_t n = 0; n < map.size(); ++n) {
        // Residual measured from the bit-flip loci of the active rule.
        double rho = map.residual[n];
        if (params.rule == PhaseRule::NearestPhase) {
            rho = std::fmod(rho + quarter, half);
        }
        const bool reflect = std::abs(rho - quarter) <= params.threshold / 2.0;
        config.elements[n].mode = reflect ? Mode::Reflect : Mode::Absorb;
        config.elements[n].phase = phases[n];
    }
    return config;
}

RisConfiguration continuous_conjugate(const CascadedGains& gains) {
    const double ref = reference_phase(gains);
    RisConfiguration config;
    config.elements.resize(gains.size());
    for (std::size_t n = 0; n < gains.size(); ++n) {
        double theta = std::fmod(ref - std::arg(gains.element_gain[n]), 2.0 * kPi);
        if (theta < 0.0) {
            theta += 2.0 * kPi;
        }
        config.elements[n] = {Mode::Reflect, theta};
    }
    return config;
}

RisConfiguration random_configuration(std::size_t n, std::mt19937_64& engine) {
    if (n < 1) {
        throw std::invalid_argument("random_configuration: need at least one element");
    }
    RisConfiguration config;
    config.elements.resize(n);
    for (auto& e : config.elements) {
        e.mode = Mode::Reflect;
        e.phase = rng::coin(engine) ? kPi : 0.0;
    }
    return config;
}

RisConfiguration greedy_onebit_search(const CascadedGains& gains,
                                      const RisConfiguration& init, int max_sweeps,
                                      GreedyStats* stats) {
    std::vector<int> signs = signs_from_config(gains, init, "greedy_onebit_search");
    std::complex<double> h = signed_sum(gains, signs);
    double objective = std::norm(h);

    GreedyStats local;
    GreedyStats& st = stats ? *stats : local;
    st = GreedyStats{};

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool flipped = false;
        for (std::size_t n = 0; n < signs.size(); ++n) {
            const std::complex<double> delta =
                (signs[n] > 0 ? -2.0 : 2.0) * gains.element_gain[n];
            const std::complex<double> candidate = h + delta;
            ++st.flip_tests;
            const double cand_obj = std::norm(candidate);
            if (cand_obj > objective) {
                h = candidate;
                objective = cand_obj;
                signs[n] = -signs[n];
                ++st.flips;
                flipped = true;
            }
        }
        ++st.sweeps;
        st.sweep_objectives.push_back(objective);
        if (!flipped) {
            break;
        }
    }

    RisConfiguration out;
    out.elements.resize(signs.size());
    for (std::size_t n = 0; n < signs.size(); ++n) {
        out.elements[n] = {Mode::Reflect, signs[n] > 0 ? 0.0 : kPi};
    }
    return out;
}

RisConfiguration exhaustive_onebit(const CascadedGains& gains,
                                   std::vector<double>* objectives) {
    const std::size_t n = gains.size();
    if (n < 1) {
        throw std::invalid_argument("exhaustive_onebit: need at least one element");
    }
    if (n > static_cast<std::size_t>(kExhaustiveMaxElements)) {
        throw std::invalid_argument("exhaustive_onebit: more than 20 elements");
    }

    const std::uint32_t states = 1u << n;
    if (objectives) {
        objectives->assign(states, 0.0);
    }

    // Lexicographic key: element 0 is the most significant bit, 1 means pi.
    auto lex_key = [n](const std::vector<int>& signs) {
        std::uint32_t key = 0;
        for (std::size_t i = 0; i < n; ++i) {
            key = (key << 1) | (signs[i] < 0 ? 1u : 0u);
        }
        return key;
    };

    std::vector<int> signs(n, 1);
    std::complex<double> h = signed_sum(gains, signs);
    double best_obj = std::norm(h);
    std::uint32_t best_key = lex_key(signs);
    if (objectives) {
        (*objectives)[0] = best_obj;
    }

    for (std::uint32_t k = 1; k < states; ++k) {
        // Gray codes of k-1 and k differ exactly at the lowest set bit of k.
        const unsigned bit = static_cast<unsigned>(std::countr_zero(k));
        h += (signs[bit] > 0 ? -2.0 : 2.0) * gains.element_gain[bit];
        signs[bit] = -signs[bit];
        const double obj = std::norm(h);
        if (objectives) {
            (*objectives)[k] = obj;
        }
        if (obj > best_obj) {
            best_obj = obj;
            best_key = lex_key(signs);
        } else if (obj == best_obj) {
            best_key = std::min(best_key, lex_key(signs));
        }
    }

    RisConfiguration out;
    out.elements.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool bit = (best_key >> (n - 1 - i)) & 1u;
        out.elements[i] = {Mode::Reflect, bit ? kPi : 0.0};
    }
    return out;
}

}  // namespace risbeam
