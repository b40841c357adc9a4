#include "risbeam/localization.hpp"

#include <stdexcept>

#include "risbeam/rng.hpp"

namespace risbeam {

void ErrorModel::validate() const {
    if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
        throw std::invalid_argument("ErrorModel: magnitude must be >= 0 and finite");
    }
    if (!(sigma.x >= 0.0) || !(sigma.y >= 0.0) || !(sigma.z >= 0.0) || !is_finite(sigma)) {
        throw std::invalid_argument("ErrorModel: sigma components must be >= 0 and finite");
    }
}

Vec3 sample_location_error(const ErrorModel& model, std::mt19937_64& engine) {
    model.validate();
    const int active = model.axes.count();

    if (model.kind == ErrorKind::FixedMagnitudeRandomDirection) {
        if (model.magnitude == 0.0) {
            return {0.0, 0.0, 0.0};
        }
        if (active == 0) {
            throw std::invalid_argument(
                "sample_location_error: empty axis mask with nonzero magnitude");
        }
        Vec3 dir{0.0, 0.0, 0.0};
        if (active == 3) {
            dir = rng::unit_sphere(engine);
        } else if (active == 2) {
            double c = 0.0, s = 0.0;
            rng::unit_circle(engine, c, s);
            double* slots[2];
            int k = 0;
            Vec3 tmp{0.0, 0.0, 0.0};
            if (model.axes.x) slots[k++] = &tmp.x;
            if (model.axes.y) slots[k++] = &tmp.y;
            if (model.axes.z) slots[k++] = &tmp.z;
            *slots[0] = c;
            *slots[1] = s;
            dir = tmp;
        } else {
            const double sign = rng::coin(engine) ? 1.0 : -1.0;
            if (model.axes.x) dir.x = sign;
            else if (model.axes.y) dir.y = sign;
            else dir.z = sign;
        }
        return model.magnitude * dir;
    }

    // Gaussian per axis.
    Vec3 e{0.0, 0.0, 0.0};
    if (model.axes.x) e.x = model.sigma.x * rng::gaussian(engine);
    if (model.axes.y) e.y = model.sigma.y * rng::gaussian(engine);
    if (model.axes.z) e.z = model.sigma.z * rng::gaussian(engine);
    return e;
}

}  // namespace risbeam
