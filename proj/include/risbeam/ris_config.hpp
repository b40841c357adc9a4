#ifndef RISBEAM_RIS_CONFIG_HPP
#define RISBEAM_RIS_CONFIG_HPP

#include <cstddef>
#include <vector>

namespace risbeam {

/// Element operating mode: reflect with a phase shift, or absorb the
/// incident energy entirely.
enum class Mode { Reflect, Absorb };

/// Per-element RIS configuration. Under the one-bit phase model phases are
/// exactly 0 or pi; Absorb-mode elements contribute nothing regardless of
/// their phase.
struct RisConfiguration {
    struct Element {
        Mode mode = Mode::Reflect;
        double phase = 0.0;  // radians
    };

    std::vector<Element> elements;

    std::size_t size() const { return elements.size(); }

    std::size_t reflect_count() const {
        std::size_t n = 0;
        for (const auto& e : elements) {
            if (e.mode == Mode::Reflect) {
                ++n;
            }
        }
        return n;
    }
};

}  // namespace risbeam

#endif
