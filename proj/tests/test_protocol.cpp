#include <doctest.h>

#include <stdexcept>

#include "risbeam/protocol.hpp"

using namespace risbeam;

namespace {

FrameModel base_model(FrameScheme scheme) {
    FrameModel m;
    m.frame_length = 10000;
    m.uplink_pilot_cost = 1;
    m.control_cost = 10;
    m.scheme = scheme;
    m.num_ris = 1;
    m.elements_per_ris = 6400;
    m.paths_per_ris = 3;
    m.enabled_ris_fraction = 1.0;
    m.location_pilots_required = true;
    return m;
}

}  // namespace

TEST_CASE("overhead: zero pilot and control cost gives zero overhead") {
    FrameModel m = base_model(FrameScheme::LocationDriven);
    m.uplink_pilot_cost = 0;
    m.control_cost = 0;
    CHECK(overhead_symbols(m) == 0);
}

TEST_CASE("overhead: per-element estimation scales with R*N") {
    FrameModel m = base_model(FrameScheme::CePerElement);
    m.num_ris = 3;
    m.frame_length = 100000;
    CHECK(overhead_symbols(m) == 3 * 6400 + 10);
}

TEST_CASE("overhead: location-driven pilots follow the enabled fraction, not N") {
    FrameModel m = base_model(FrameScheme::LocationDriven);
    m.num_ris = 3;
    m.enabled_ris_fraction = 1.0 / 3.0;
    CHECK(overhead_symbols(m) == 1 + 10);  // exactly one enabled surface

    m.elements_per_ris = 640000;  // element count is irrelevant
    CHECK(overhead_symbols(m) == 1 + 10);

    m.location_pilots_required = false;
    CHECK(overhead_symbols(m) == 10);
}

TEST_CASE("overhead: parametric estimation scales with R*L") {
    FrameModel m = base_model(FrameScheme::CeParametric);
    m.num_ris = 4;
    m.paths_per_ris = 7;
    CHECK(overhead_symbols(m) == 4 * 7 + 10);
}

TEST_CASE("overhead: exceeding the frame length is an error") {
    FrameModel m = base_model(FrameScheme::CePerElement);
    m.frame_length = 1000;  // N = 6400 pilots cannot fit
    CHECK_THROWS_AS(overhead_symbols(m), std::runtime_error);
}

TEST_CASE("overhead: growth directions per scheme") {
    FrameModel m = base_model(FrameScheme::CePerElement);
    m.frame_length = 1000000;
    const auto base = overhead_symbols(m);
    m.elements_per_ris *= 2;
    CHECK(overhead_symbols(m) > base);
    m.num_ris = 2;
    const auto doubled = overhead_symbols(m);
    CHECK(doubled > base);

    FrameModel ld = base_model(FrameScheme::LocationDriven);
    const auto ld_base = overhead_symbols(ld);
    ld.elements_per_ris *= 16;
    CHECK(overhead_symbols(ld) == ld_base);  // constant in N

    FrameModel par = base_model(FrameScheme::CeParametric);
    const auto par_base = overhead_symbols(par);
    par.paths_per_ris += 5;
    CHECK(overhead_symbols(par) > par_base);
}

TEST_CASE("effective rate: overhead-free and fully-consumed frames") {
    FrameModel m = base_model(FrameScheme::LocationDriven);
    m.uplink_pilot_cost = 0;
    m.control_cost = 0;
    CHECK(effective_rate(7.5, m) == 7.5);

    m.control_cost = m.frame_length;
    CHECK(effective_rate(7.5, m) == 0.0);
}

TEST_CASE("effective rate: bounded by the input rate and monotone in costs") {
    FrameModel m = base_model(FrameScheme::CeParametric);
    const double se = 9.25;
    double previous = se;
    for (std::int64_t control = 0; control <= 5000; control += 500) {
        m.control_cost = control;
        const double rate = effective_rate(se, m);
        CHECK(rate >= 0.0);
        CHECK(rate <= se);
        CHECK(rate <= previous);
        previous = rate;
    }
}

TEST_CASE("effective rate: crossover against per-element estimation found by scan") {
    // location-driven overhead: 1 + 10; per-element overhead: N + 10.
    // The smallest N at which location-driven wins should be N = 2.
    std::int64_t crossover = -1;
    for (std::int64_t n = 1; n <= 100; ++n) {
        FrameModel ld = base_model(FrameScheme::LocationDriven);
        FrameModel ce = base_model(FrameScheme::CePerElement);
        ld.elements_per_ris = n;
        ce.elements_per_ris = n;
        const double r_ld = effective_rate(1.0, ld);
        const double r_ce = effective_rate(1.0, ce);
        if (r_ld > r_ce) {
            crossover = n;
            break;
        }
    }
    CHECK(crossover == 2);
}

TEST_CASE("frame model validation") {
    FrameModel m = base_model(FrameScheme::LocationDriven);
    m.num_ris = 0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m = base_model(FrameScheme::LocationDriven);
    m.enabled_ris_fraction = 0.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m = base_model(FrameScheme::LocationDriven);
    m.uplink_pilot_cost = -1;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}
