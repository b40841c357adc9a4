#include "risbeam/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "risbeam/rng.hpp"

namespace risbeam {

namespace {

// Stream tags keeping error draws and scheme-private draws apart.
constexpr std::uint64_t kErrorStream = 0xE1107;
constexpr std::uint64_t kSchemeStream = 0x5EED5;

RisGeometry linear_array(const Scenario& scenario, int n) {
    RisGeometry geom;
    geom.frame = PlaneFrame::bisector({0.0, 0.0, 0.0}, scenario.tx_true, scenario.rx_true);
    geom.nx = n;
    geom.ny = 1;
    geom.spacing = scenario.wavelength() / 2.0;
    return geom;
}

CascadedGains synthetic_uniform_gains(int n, std::mt19937_64& engine) {
    CascadedGains gains;
    gains.wavelength = 1.0;
    gains.element_gain.reserve(n);
    gains.total_path.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double phase = 2.0 * 3.14159265358979323846 * rng::uniform01(engine);
        gains.element_gain.push_back(std::polar(1.0 / n, phase));
        gains.total_path.push_back(1.0 + rng::uniform01(engine));
    }
    gains.direct_gain = {0.0, 0.0};
    return gains;
}

RisConfiguration all_zero_config(std::size_t n) {
    RisConfiguration config;
    config.elements.assign(n, {Mode::Reflect, 0.0});
    return config;
}

RisConfiguration all_reflect(std::vector<double> phases) {
    RisConfiguration config;
    config.elements.resize(phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) {
        config.elements[i] = {Mode::Reflect, phases[i]};
    }
    return config;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) {
        return 0.0;
    }
    return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// Median wall time of fn over `repetitions` samples, batching fast kernels
/// so each sample spans at least ~3 ms.
double time_median_seconds(const std::function<void()>& fn, int repetitions) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    fn();
    const double first = std::chrono::duration<double>(clock::now() - t0).count();
    const int batch = std::max(1, static_cast<int>(std::ceil(3e-3 / std::max(first, 1e-9))));

    std::vector<double> samples;
    samples.reserve(repetitions);
    for (int r = 0; r < repetitions; ++r) {
        const auto s0 = clock::now();
        for (int b = 0; b < batch; ++b) {
            fn();
        }
        samples.push_back(std::chrono::duration<double>(clock::now() - s0).count() / batch);
    }
    return median_of(samples);
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(workers, count));
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) {
        pool.emplace_back(run);
    }
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace

const char* to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Tposj: return "tposj";
        case SchemeKind::BenchmarkOneBit: return "benchmark-onebit";
        case SchemeKind::BenchmarkContinuous: return "benchmark-continuous";
        case SchemeKind::Random: return "random";
        case SchemeKind::Greedy: return "greedy";
        case SchemeKind::Exhaustive: return "exhaustive";
    }
    return "tposj";
}

SchemeKind scheme_from_string(const std::string& name) {
    if (name == "tposj") return SchemeKind::Tposj;
    if (name == "benchmark-onebit") return SchemeKind::BenchmarkOneBit;
    if (name == "benchmark-continuous") return SchemeKind::BenchmarkContinuous;
    if (name == "random") return SchemeKind::Random;
    if (name == "greedy") return SchemeKind::Greedy;
    if (name == "exhaustive") return SchemeKind::Exhaustive;
    throw std::invalid_argument("unknown scheme: " + name);
}

void SweepSpec::validate() const {
    scenario.validate();
    geometry.validate();
    if (schemes.empty()) {
        throw std::invalid_argument("SweepSpec: at least one scheme required");
    }
    if (trials < 1) {
        throw std::invalid_argument("SweepSpec: trials must be >= 1");
    }
    if (error_magnitudes.empty()) {
        throw std::invalid_argument("SweepSpec: at least one error magnitude required");
    }
    for (const double eps : error_magnitudes) {
        if (!(eps >= 0.0) || !std::isfinite(eps)) {
            throw std::invalid_argument("SweepSpec: error magnitudes must be >= 0 and finite");
        }
    }
    for (const auto& s : schemes) {
        if (s.kind == SchemeKind::Tposj &&
            (!(s.xi_wavelengths >= 0.0) || !(s.xi_wavelengths <= 0.5))) {
            throw std::invalid_argument("SweepSpec: tposj xi must lie in [0, 0.5] wavelengths");
        }
        if (s.kind == SchemeKind::Exhaustive &&
            geometry.size() > kExhaustiveMaxElements) {
            throw std::invalid_argument("SweepSpec: exhaustive scheme limited to 20 elements");
        }
    }
    if (greedy_max_sweeps < 1) {
        throw std::invalid_argument("SweepSpec: greedy_max_sweeps must be >= 1");
    }
}

namespace {

struct TrialWorkspace {
    const SweepSpec& spec;
    const CascadedGains& gains_true;
    double wavelength;

    double run(const SchemeSpec& scheme, std::size_t scheme_index,
               std::size_t eps_index, std::size_t trial_index) const {
        const Scenario& sc = spec.scenario;

        // Error draws are shared across schemes so every scheme faces the
        // same presumed positions in a given trial.
        auto error_rng = rng::derive_stream(sc.seed, {kErrorStream, eps_index, trial_index});
        ErrorModel model;
        model.kind = spec.error_kind;
        model.axes = spec.error_axes;
        const double eps = spec.error_magnitudes[eps_index];
        model.magnitude = eps;
        model.sigma = {eps, eps, eps};

        const Point3 rx_p = sc.rx_true + sample_location_error(model, error_rng);
        const Point3 tx_p = spec.error_applies_to_tx
                                ? sc.tx_true + sample_location_error(model, error_rng)
                                : sc.tx_true;

        RisConfiguration config;
        switch (scheme.kind) {
            case SchemeKind::Tposj: {
                const FresnelMap map =
                    build_fresnel_map(tx_p, rx_p, spec.geometry, wavelength);
                config = tposj_configure(
                    map, {scheme.xi_wavelengths * wavelength, spec.rule});
                break;
            }
            case SchemeKind::BenchmarkOneBit: {
                const CascadedGains presumed = cascaded_gains(
                    tx_p, rx_p, spec.geometry, wavelength, sc.los_blocked);
                config = all_reflect(nearest_phase_bits(presumed));
                break;
            }
            case SchemeKind::BenchmarkContinuous: {
                const CascadedGains presumed = cascaded_gains(
                    tx_p, rx_p, spec.geometry, wavelength, sc.los_blocked);
                config = continuous_conjugate(presumed);
                break;
            }
            case SchemeKind::Random: {
                auto scheme_rng = rng::derive_stream(
                    sc.seed, {kSchemeStream, scheme_index, eps_index, trial_index});
                config = random_configuration(gains_true.size(), scheme_rng);
                break;
            }
            case SchemeKind::Greedy: {
                const CascadedGains presumed = cascaded_gains(
                    tx_p, rx_p, spec.geometry, wavelength, sc.los_blocked);
                const RisConfiguration init =
                    spec.greedy_cold_start ? all_zero_config(presumed.size())
                                           : all_reflect(nearest_phase_bits(presumed));
                config = greedy_onebit_search(presumed, init, spec.greedy_max_sweeps);
                break;
            }
            case SchemeKind::Exhaustive: {
                const CascadedGains presumed = cascaded_gains(
                    tx_p, rx_p, spec.geometry, wavelength, sc.los_blocked);
                config = exhaustive_onebit(presumed);
                break;
            }
        }

        const std::complex<double> h = effective_channel(gains_true, config);
        return spectral_efficiency(h, sc.transmit_power_w, sc.noise_power_w);
    }
};

}  // namespace

double percentile(std::vector<double> samples, double q) {
    if (samples.empty()) {
        throw std::invalid_argument("percentile: empty sample");
    }
    std::sort(samples.begin(), samples.end());
    const double pos = q * static_cast<double>(samples.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= samples.size()) {
        return samples.back();
    }
    const double frac = pos - static_cast<double>(lo);
    return samples[lo] + (samples[lo + 1] - samples[lo]) * frac;
}

SweepResult run_error_sweep(const SweepSpec& spec, int workers) {
    spec.validate();
    const double wavelength = spec.scenario.wavelength();
    const CascadedGains gains_true = cascaded_gains(spec.scenario, spec.geometry);
    TrialWorkspace ws{spec, gains_true, wavelength};

    const std::size_t n_schemes = spec.schemes.size();
    const std::size_t n_eps = spec.error_magnitudes.size();
    const std::size_t n_trials = static_cast<std::size_t>(spec.trials);
    const std::size_t total = n_schemes * n_eps * n_trials;

    std::vector<double> se(total, 0.0);
    parallel_for(total, workers, [&](std::size_t idx) {
        const std::size_t si = idx / (n_eps * n_trials);
        const std::size_t rest = idx % (n_eps * n_trials);
        const std::size_t ei = rest / n_trials;
        const std::size_t t = rest % n_trials;
        se[idx] = ws.run(spec.schemes[si], si, ei, t);
    });

    SweepResult result;
    result.seed = spec.scenario.seed;
    result.points.reserve(n_schemes * n_eps);
    for (std::size_t si = 0; si < n_schemes; ++si) {
        for (std::size_t ei = 0; ei < n_eps; ++ei) {
            const std::size_t base = (si * n_eps + ei) * n_trials;
            std::vector<double> samples(se.begin() + base, se.begin() + base + n_trials);

            const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
            double mean = 0.0;
            double var = 0.0;
            if (*mn == *mx) {
                mean = *mn;  // identical samples: exact mean, zero variance
            } else {
                for (const double v : samples) {
                    mean += v;
                }
                mean /= static_cast<double>(n_trials);
                for (const double v : samples) {
                    var += (v - mean) * (v - mean);
                }
                var = (n_trials > 1) ? var / static_cast<double>(n_trials - 1) : 0.0;
            }

            SweepPoint point;
            point.scheme = spec.schemes[si];
            point.epsilon = spec.error_magnitudes[ei];
            point.mean_se = mean;
            point.std_se = std::sqrt(var);
            point.p05 = percentile(samples, 0.05);
            point.p95 = percentile(samples, 0.95);
            point.trials = spec.trials;
            result.points.push_back(point);
        }
    }
    return result;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("linear_fit: need two or more paired points");
    }
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("linear_fit: x values are all equal");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += e * e;
    }
    fit.r2 = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

std::vector<ComplexityRow> run_complexity_bench(const ComplexitySpec& spec) {
    if (spec.n_list.empty()) {
        throw std::invalid_argument("run_complexity_bench: n_list must not be empty");
    }
    if (!std::is_sorted(spec.n_list.begin(), spec.n_list.end())) {
        throw std::invalid_argument("run_complexity_bench: n_list must be ascending");
    }
    if (spec.repetitions < 1) {
        throw std::invalid_argument("run_complexity_bench: repetitions must be >= 1");
    }
    spec.scenario.validate();
    for (const int n : spec.small_n_list) {
        if (n > kExhaustiveMaxElements) {
            throw std::invalid_argument(
                "run_complexity_bench: exhaustive sizes limited to 20 elements");
        }
    }

    const double wavelength = spec.scenario.wavelength();
    std::vector<ComplexityRow> rows;

    for (const int n : spec.n_list) {
        if (n < 1) {
            throw std::invalid_argument("run_complexity_bench: sizes must be >= 1");
        }
        const RisGeometry geom = linear_array(spec.scenario, n);
        const TposjParams params{wavelength / 4.0, spec.rule};
        const auto kernel = [&] {
            const FresnelMap map = build_fresnel_map(
                spec.scenario.tx_true, spec.scenario.rx_presumed, geom, wavelength);
            const RisConfiguration config = tposj_configure(map, params);
            (void)config;
        };
        ComplexityRow row;
        row.scheme = "tposj";
        row.n = n;
        // One excess path, one zone bucket and one mode judgement per element.
        row.op_count = 3.0 * n;
        row.wall_seconds = time_median_seconds(kernel, spec.repetitions);
        rows.push_back(row);
    }

    for (const int n : spec.n_list) {
        auto engine = rng::derive_stream(spec.seed, {0x96EED, static_cast<std::uint64_t>(n)});
        const CascadedGains gains = synthetic_uniform_gains(n, engine);
        const RisConfiguration init = all_reflect(nearest_phase_bits(gains));
        GreedyStats stats;
        greedy_onebit_search(gains, init, spec.greedy_max_sweeps, &stats);
        const auto kernel = [&] {
            greedy_onebit_search(gains, init, spec.greedy_max_sweeps);
        };
        ComplexityRow row;
        row.scheme = "greedy";
        row.n = n;
        row.op_count = static_cast<double>(stats.flip_tests);
        row.wall_seconds = time_median_seconds(kernel, spec.repetitions);
        rows.push_back(row);
    }

    for (const int n : spec.small_n_list) {
        auto engine = rng::derive_stream(spec.seed, {0xE4A0, static_cast<std::uint64_t>(n)});
        const CascadedGains gains = synthetic_uniform_gains(n, engine);
        const auto kernel = [&] { exhaustive_onebit(gains); };
        ComplexityRow row;
        row.scheme = "exhaustive";
        row.n = n;
        row.op_count = std::ldexp(1.0, n);  // 2^n states
        row.wall_seconds = time_median_seconds(kernel, spec.repetitions);
        rows.push_back(row);
    }

    for (const int n : spec.n_list) {
        rows.push_back({"sdr", true, n,
                        spec.sdr_coeff * std::pow(static_cast<double>(n), 4.5), 0.0});
        rows.push_back({"mjce", true, n,
                        spec.mjce_coeff * std::pow(static_cast<double>(n), 2.0), 0.0});
    }
    return rows;
}

std::vector<OracleRow> run_oracle(const Scenario& scenario, int nx, int ny,
                                  int instances, PhaseRule rule,
                                  int greedy_max_sweeps) {
    scenario.validate();
    if (nx * ny > kExhaustiveMaxElements) {
        throw std::invalid_argument("run_oracle: grid limited to 20 elements");
    }
    if (instances < 1) {
        throw std::invalid_argument("run_oracle: instances must be >= 1");
    }
    const double wavelength = scenario.wavelength();

    std::vector<OracleRow> rows;
    for (int inst = 0; inst < instances; ++inst) {
        auto engine = rng::derive_stream(scenario.seed,
                                         {0x04AC1E, static_cast<std::uint64_t>(inst)});
        const Vec3 offset = rng::unit_sphere(engine) * (0.1 + 0.9 * rng::uniform01(engine));
        const Point3 rx = scenario.rx_true + offset;

        RisGeometry geom;
        geom.frame = PlaneFrame::bisector({0.0, 0.0, 0.0}, scenario.tx_true, rx);
        geom.nx = nx;
        geom.ny = ny;
        geom.spacing = wavelength / 2.0;

        const CascadedGains gains = cascaded_gains(scenario.tx_true, rx, geom,
                                                   wavelength, scenario.los_blocked);
        const FresnelMap map = build_fresnel_map(scenario.tx_true, rx, geom, wavelength);

        const auto emit = [&](const char* name, const RisConfiguration& config) {
            const std::complex<double> h = effective_channel(gains, config);
            rows.push_back({inst, name, std::abs(h),
                            spectral_efficiency(h, scenario.transmit_power_w,
                                                scenario.noise_power_w)});
        };
        emit("tposj", tposj_configure(map, {wavelength / 2.0, rule}));
        emit("greedy", greedy_onebit_search(gains, all_reflect(nearest_phase_bits(gains)),
                                            greedy_max_sweeps));
        emit("exhaustive", exhaustive_onebit(gains));
        emit("continuous", continuous_conjugate(gains));
    }
    return rows;
}

}  // namespace risbeam
