#ifndef RISBEAM_HARNESS_HPP
#define RISBEAM_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "risbeam/beamforming.hpp"
#include "risbeam/channel.hpp"
#include "risbeam/geometry.hpp"
#include "risbeam/localization.hpp"

namespace risbeam {

enum class SchemeKind {
    Tposj,                // location-driven two-step on/off judgement
    BenchmarkOneBit,      // location-driven free-space phases, one-bit, no absorption
    BenchmarkContinuous,  // location-driven free-space phases, continuous
    Random,               // random one-bit phases, all reflecting
    Greedy,               // coordinate ascent on presumed gains
    Exhaustive            // global one-bit optimum on presumed gains (N <= 20)
};

const char* to_string(SchemeKind kind);
SchemeKind scheme_from_string(const std::string& name);

/// One sweep scheme instance; xi_wavelengths applies to Tposj only and is
/// carried as -1 (not applicable) for the other kinds.
struct SchemeSpec {
    SchemeKind kind = SchemeKind::Tposj;
    double xi_wavelengths = -1.0;
};

/// Location-error sweep request. Errors are drawn per trial from the template
/// model with its magnitude (or per-axis sigma) set to the swept epsilon;
/// schemes configure from the presumed position and are evaluated against the
/// true channel.
struct SweepSpec {
    Scenario scenario;
    RisGeometry geometry;
    std::vector<SchemeSpec> schemes;
    std::vector<double> error_magnitudes;  // meters
    int trials = 1;
    PhaseRule rule = PhaseRule::ZoneParity;
    ErrorKind error_kind = ErrorKind::FixedMagnitudeRandomDirection;
    AxisMask error_axes;
    bool error_applies_to_tx = false;
    int greedy_max_sweeps = 50;
    bool greedy_cold_start = false;  // all-zero phases instead of the warm start

    void validate() const;
};

struct SweepPoint {
    SchemeSpec scheme;
    double epsilon = 0.0;  // meters
    double mean_se = 0.0;
    double std_se = 0.0;   // sample standard deviation
    double p05 = 0.0;
    double p95 = 0.0;
    int trials = 0;
};

struct SweepResult {
    std::vector<SweepPoint> points;  // ordered by (scheme index, epsilon index)
    std::uint64_t seed = 0;
};

/// Runs the sweep on `workers` threads. Per-trial RNG streams are derived
/// from (seed, epsilon index, trial index), and error draws are shared across
/// schemes, so the result is identical for any worker count.
SweepResult run_error_sweep(const SweepSpec& spec, int workers = 1);

/// Interpolated percentile (q in [0, 1]) of an unsorted sample.
double percentile(std::vector<double> samples, double q);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Configuration-complexity measurement request. op counts are exact
/// (3N for the two-step judgement, flip tests for greedy, 2^N states for the
/// exhaustive search); SDR and MJCE baselines are closed-form operation-count
/// models, emitted with the "model" label and zero wall time.
struct ComplexitySpec {
    std::vector<int> n_list = {100, 1000, 10000};     // tposj, greedy, model curves
    std::vector<int> small_n_list = {8, 10, 12};      // exhaustive
    int repetitions = 9;
    double sdr_coeff = 1.0;   // model: sdr_coeff * N^4.5
    double mjce_coeff = 1.0;  // model: mjce_coeff * N^2
    std::uint64_t seed = 1;
    Scenario scenario;  // terminal geometry used for the location-driven timing
    PhaseRule rule = PhaseRule::ZoneParity;
    int greedy_max_sweeps = 50;
};

struct ComplexityRow {
    std::string scheme;
    bool model = false;  // true for closed-form curves, false for measurements
    std::int64_t n = 0;
    double op_count = 0.0;
    double wall_seconds = 0.0;  // median over repetitions; 0 for model rows
};

std::vector<ComplexityRow> run_complexity_bench(const ComplexitySpec& spec);

/// Small-N optimizer comparison at the true position (no location error):
/// TPOSJ at xi = lambda/2, warm-started greedy, the exhaustive one-bit
/// optimum and the continuous upper bound, over seeded receiver placements.
struct OracleRow {
    int instance = 0;
    std::string scheme;
    double h_eff_abs = 0.0;
    double se = 0.0;
};

std::vector<OracleRow> run_oracle(const Scenario& scenario, int nx, int ny,
                                  int instances, PhaseRule rule,
                                  int greedy_max_sweeps = 50);

}  // namespace risbeam

#endif
