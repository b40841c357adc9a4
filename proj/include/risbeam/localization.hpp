#ifndef RISBEAM_LOCALIZATION_HPP
#define RISBEAM_LOCALIZATION_HPP

#include <random>

#include "risbeam/geometry.hpp"

namespace risbeam {

/// Which coordinate axes may carry location error; axes outside the mask
/// contribute exactly zero.
struct AxisMask {
    bool x = true;
    bool y = true;
    bool z = true;

    int count() const { return (x ? 1 : 0) + (y ? 1 : 0) + (z ? 1 : 0); }
};

enum class ErrorKind { FixedMagnitudeRandomDirection, GaussianPerAxis };

/// Parametric stand-in for a localisation pipeline: the presumed position is
/// the true position plus a sampled error vector.
struct ErrorModel {
    ErrorKind kind = ErrorKind::FixedMagnitudeRandomDirection;
    double magnitude = 0.0;        // epsilon, meters (fixed-magnitude kind)
    Vec3 sigma{0.0, 0.0, 0.0};     // per-axis std dev, meters (gaussian kind)
    AxisMask axes;

    void validate() const;
};

/// Draws one location-error vector.
/// Fixed-magnitude kind: epsilon times a direction uniform on the unit sphere
/// restricted to the masked axes (unit circle for two axes, +/-1 for one).
/// Gaussian kind: independent zero-mean normals on the masked axes.
/// Throws std::invalid_argument when the mask is empty but epsilon > 0.
Vec3 sample_location_error(const ErrorModel& model, std::mt19937_64& engine);

}  // namespace risbeam

#endif
