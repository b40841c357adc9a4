#include "risbeam/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risbeam {

namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kDegenerateFociTol = 1e-9;  // meters
constexpr double kConicTol = 1e-12;

void check_finite(const Vec3& v, const char* what) {
    if (!is_finite(v)) {
        throw std::invalid_argument(std::string(what) + ": non-finite component");
    }
}

}  // namespace

Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 1e-12)) {
        throw std::invalid_argument("normalized: vector norm below 1e-12");
    }
    return v / n;
}

PlaneFrame PlaneFrame::from_axes(const Point3& center, const Vec3& u, const Vec3& v) {
    PlaneFrame frame;
    frame.center = center;
    frame.u_axis = normalized(u);
    frame.v_axis = normalized(v);
    frame.normal = cross(frame.u_axis, frame.v_axis);
    frame.validate();
    return frame;
}

PlaneFrame PlaneFrame::bisector(const Point3& center, const Point3& toward_a,
                                const Point3& toward_b) {
    const Vec3 da = normalized(toward_a - center);
    const Vec3 db = normalized(toward_b - center);
    const Vec3 sum = da + db;
    if (norm(sum) < 1e-9) {
        throw std::invalid_argument(
            "PlaneFrame::bisector: directions are opposite, bisector undefined");
    }
    const Vec3 n = normalized(sum);

    Vec3 u_seed{1.0, 0.0, 0.0};
    Vec3 u_raw = u_seed - dot(u_seed, n) * n;
    if (norm(u_raw) < 1e-9) {
        u_seed = {0.0, 1.0, 0.0};
        u_raw = u_seed - dot(u_seed, n) * n;
    }
    const Vec3 u = normalized(u_raw);
    const Vec3 v = cross(n, u);

    PlaneFrame frame;
    frame.center = center;
    frame.u_axis = u;
    frame.v_axis = v;
    frame.normal = n;
    frame.validate();
    return frame;
}

void PlaneFrame::validate() const {
    check_finite(center, "PlaneFrame center");
    check_finite(u_axis, "PlaneFrame u_axis");
    check_finite(v_axis, "PlaneFrame v_axis");
    check_finite(normal, "PlaneFrame normal");
    if (std::abs(norm(u_axis) - 1.0) > kOrthoTol || std::abs(norm(v_axis) - 1.0) > kOrthoTol ||
        std::abs(norm(normal) - 1.0) > kOrthoTol) {
        throw std::invalid_argument("PlaneFrame: axes must be unit length");
    }
    if (std::abs(dot(u_axis, v_axis)) > kOrthoTol || std::abs(dot(u_axis, normal)) > kOrthoTol ||
        std::abs(dot(v_axis, normal)) > kOrthoTol) {
        throw std::invalid_argument("PlaneFrame: axes must be mutually orthogonal");
    }
    if (norm(cross(u_axis, v_axis) - normal) > 1e-11) {
        throw std::invalid_argument("PlaneFrame: normal must equal u x v");
    }
}

void RisGeometry::validate() const {
    frame.validate();
    if (nx < 1 || ny < 1) {
        throw std::invalid_argument("RisGeometry: nx and ny must be >= 1");
    }
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("RisGeometry: spacing must be positive and finite");
    }
}

std::vector<Point3> element_positions(const RisGeometry& geom) {
    geom.validate();
    std::vector<Point3> out;
    out.reserve(static_cast<std::size_t>(geom.size()));
    const double iu0 = (geom.nx - 1) / 2.0;
    const double jv0 = (geom.ny - 1) / 2.0;
    for (int i = 0; i < geom.nx; ++i) {
        for (int j = 0; j < geom.ny; ++j) {
            const double u = (i - iu0) * geom.spacing;
            const double v = (j - jv0) * geom.spacing;
            out.push_back(geom.frame.at(u, v));
        }
    }
    return out;
}

double excess_path(const Point3& tx, const Point3& rx, const Point3& q) {
    check_finite(tx, "excess_path tx");
    check_finite(rx, "excess_path rx");
    check_finite(q, "excess_path q");
    const double los = distance(tx, rx);
    if (los < kDegenerateFociTol) {
        throw std::invalid_argument("excess_path: tx and rx coincide (|tx-rx| < 1e-9 m)");
    }
    const double delta = distance(tx, q) + distance(q, rx) - los;
    return std::max(delta, 0.0);
}

ZoneBucket zone_bucket(double excess, double wavelength) {
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("zone_bucket: wavelength must be positive");
    }
    if (!(excess >= 0.0)) {
        throw std::invalid_argument("zone_bucket: excess path must be nonnegative");
    }
    ZoneBucket b;
    b.zone = static_cast<std::int64_t>(std::floor(2.0 * excess / wavelength)) + 1;
    b.residual = excess - static_cast<double>(b.zone - 1) * (wavelength / 2.0);
    // guard against roundoff at bucket edges
    if (b.residual < 0.0) {
        b.residual = 0.0;
    } else if (b.residual >= wavelength / 2.0) {
        b.zone += 1;
        b.residual = 0.0;
    }
    return b;
}

FresnelMap build_fresnel_map(const Point3& tx, const Point3& rx,
                             const RisGeometry& geom, double wavelength) {
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("build_fresnel_map: wavelength must be positive");
    }
    const auto positions = element_positions(geom);
    FresnelMap map;
    map.wavelength = wavelength;
    map.los_distance = distance(tx, rx);
    map.excess.reserve(positions.size());
    map.zone.reserve(positions.size());
    map.residual.reserve(positions.size());
    for (const auto& q : positions) {
        const double delta = excess_path(tx, rx, q);
        const ZoneBucket b = zone_bucket(delta, wavelength);
        map.excess.push_back(delta);
        map.zone.push_back(b.zone);
        map.residual.push_back(b.residual);
    }
    return map;
}

const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::Ellipse: return "ellipse";
        case ConicClass::Point: return "point";
        case ConicClass::Empty: return "empty";
        case ConicClass::Degenerate: return "degenerate";
    }
    return "degenerate";
}

namespace {

// Center of an elliptic conic (solves the gradient system).
bool conic_center(const ConicSection& q, double& u0, double& v0) {
    const double det = 4.0 * q.a * q.c - q.b * q.b;
    if (det == 0.0) {
        return false;
    }
    u0 = (-2.0 * q.c * q.d + q.b * q.e) / det;
    v0 = (-2.0 * q.a * q.e + q.b * q.d) / det;
    return true;
}

double conic_eval(const ConicSection& q, double u, double v) {
    return q.a * u * u + q.b * u * v + q.c * v * v + q.d * u + q.e * v + q.f;
}

}  // namespace

ConicClass classify_conic(double a, double b, double c, double d, double e, double f) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c),
                                   std::abs(d), std::abs(e), std::abs(f)});
    if (scale == 0.0) {
        return ConicClass::Degenerate;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc >= -kConicTol * scale * scale) {
        return ConicClass::Degenerate;  // parabolic or hyperbolic type, or linear
    }
    ConicSection q{a, b, c, d, e, f, ConicClass::Degenerate};
    double u0 = 0.0, v0 = 0.0;
    conic_center(q, u0, v0);
    // Normalise so the quadratic part is positive definite.
    const double sign = (a > 0.0) ? 1.0 : -1.0;
    const double q0 = sign * conic_eval(q, u0, v0);
    const double tol = kConicTol * scale * std::max(1.0, u0 * u0 + v0 * v0);
    if (q0 > tol) {
        return ConicClass::Empty;
    }
    if (q0 >= -tol) {
        return ConicClass::Point;
    }
    return ConicClass::Ellipse;
}

ConicSection zone_boundary_conic(const Point3& tx, const Point3& rx,
                                 const PlaneFrame& frame, std::int64_t zone,
                                 double wavelength) {
    if (zone < 1) {
        throw std::invalid_argument("zone_boundary_conic: zone index must be >= 1");
    }
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("zone_boundary_conic: wavelength must be positive");
    }
    frame.validate();
    const double los = distance(tx, rx);
    if (los < kDegenerateFociTol) {
        throw std::invalid_argument(
            "zone_boundary_conic: tx and rx coincide (|tx-rx| < 1e-9 m)");
    }

    // Ellipsoid of revolution: |p-tx| + |p-rx| = 2a, focal half-distance cf.
    const double semi_major = 0.5 * (los + static_cast<double>(zone) * wavelength / 2.0);
    const double cf = 0.5 * los;
    const double b2 = semi_major * semi_major - cf * cf;  // semi-minor squared
    const Point3 mid = (tx + rx) * 0.5;
    const Vec3 axis = normalized(rx - tx);

    // Substitute p = center + u*U + v*V into xi^2/a^2 + eta^2/b^2 = 1 with
    // xi the focal-axis component of p - mid and eta^2 = |p-mid|^2 - xi^2.
    // Multiplying by a^2*b^2 gives -cf^2*xi^2 + a^2*|p-mid|^2 - a^2*b^2 = 0.
    const Vec3 w0 = frame.center - mid;
    const double e0 = dot(axis, w0);
    const double eu = dot(axis, frame.u_axis);
    const double ev = dot(axis, frame.v_axis);
    const double a2 = semi_major * semi_major;
    const double k = -cf * cf;

    ConicSection conic;
    conic.a = k * eu * eu + a2;
    conic.b = 2.0 * k * eu * ev;
    conic.c = k * ev * ev + a2;
    conic.d = 2.0 * k * e0 * eu + 2.0 * a2 * dot(w0, frame.u_axis);
    conic.e = 2.0 * k * e0 * ev + 2.0 * a2 * dot(w0, frame.v_axis);
    conic.f = k * e0 * e0 + a2 * norm_squared(w0) - a2 * b2;
    conic.classification = classify_conic(conic.a, conic.b, conic.c,
                                          conic.d, conic.e, conic.f);
    return conic;
}

double far_field_excess_path(const Point3& tx, const Point3& rx,
                             const PlaneFrame& frame, const Point3& q) {
    frame.validate();
    const Vec3 offset = q - frame.center;
    if (std::abs(dot(offset, frame.normal)) > 1e-9) {
        throw std::invalid_argument("far_field_excess_path: point is not in the plane");
    }
    const Vec3 u_ct = normalized(tx - frame.center);
    const Vec3 u_cr = normalized(rx - frame.center);
    return -dot(u_ct + u_cr, offset);
}

ConicSection far_field_zone_boundary(const Point3& tx, const Point3& rx,
                                     const PlaneFrame& frame, std::int64_t zone,
                                     double wavelength) {
    if (zone < 1) {
        throw std::invalid_argument("far_field_zone_boundary: zone index must be >= 1");
    }
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("far_field_zone_boundary: wavelength must be positive");
    }
    frame.validate();
    const double delta_center = excess_path(tx, rx, frame.center);
    const Vec3 grad = -(normalized(tx - frame.center) + normalized(rx - frame.center));

    ConicSection conic;
    conic.d = dot(grad, frame.u_axis);
    conic.e = dot(grad, frame.v_axis);
    conic.f = delta_center - static_cast<double>(zone) * wavelength / 2.0;
    const double slope = std::hypot(conic.d, conic.e);
    if (slope > 1e-15) {
        conic.classification = ConicClass::Degenerate;  // a line
    } else {
        conic.classification = (std::abs(conic.f) <= 1e-15) ? ConicClass::Degenerate
                                                            : ConicClass::Empty;
    }
    return conic;
}

std::vector<Point3> conic_sample(const ConicSection& conic, const PlaneFrame& frame,
                                 int count) {
    std::vector<Point3> out;
    if (count <= 0) {
        return out;
    }
    if (conic.classification == ConicClass::Empty ||
        conic.classification == ConicClass::Degenerate) {
        return out;
    }
    double u0 = 0.0, v0 = 0.0;
    if (!conic_center(conic, u0, v0)) {
        return out;
    }
    if (conic.classification == ConicClass::Point) {
        out.push_back(frame.at(u0, v0));
        return out;
    }

    // Eigen-decomposition of the 2x2 quadratic part [[a, b/2], [b/2, c]].
    const double sign = (conic.a > 0.0) ? 1.0 : -1.0;
    const double a = sign * conic.a;
    const double bh = sign * conic.b / 2.0;
    const double c = sign * conic.c;
    const double tr = a + c;
    const double diff = a - c;
    const double root = std::hypot(diff, 2.0 * bh);
    const double mu1 = (tr + root) / 2.0;
    const double mu2 = (tr - root) / 2.0;
    double e1u, e1v;
    if (std::abs(bh) > 1e-300) {
        e1u = mu1 - c;
        e1v = bh;
    } else if (a >= c) {
        e1u = 1.0;
        e1v = 0.0;
    } else {
        e1u = 0.0;
        e1v = 1.0;
    }
    const double e1n = std::hypot(e1u, e1v);
    e1u /= e1n;
    e1v /= e1n;
    const double e2u = -e1v;
    const double e2v = e1u;

    const double rhs = -sign * (conic.a * u0 * u0 + conic.b * u0 * v0 + conic.c * v0 * v0 +
                                conic.d * u0 + conic.e * v0 + conic.f);
    if (!(rhs > 0.0) || !(mu1 > 0.0) || !(mu2 > 0.0)) {
        return out;
    }
    const double r1 = std::sqrt(rhs / mu1);
    const double r2 = std::sqrt(rhs / mu2);

    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / count;
        const double p = r1 * std::cos(phi);
        const double q = r2 * std::sin(phi);
        const double u = u0 + p * e1u + q * e2u;
        const double v = v0 + p * e1v + q * e2v;
        out.push_back(frame.at(u, v));
    }
    return out;
}

double fraunhofer_distance(double aperture_diameter, double wavelength) {
    if (aperture_diameter < 0.0) {
        throw std::invalid_argument("fraunhofer_distance: aperture diameter must be >= 0");
    }
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("fraunhofer_distance: wavelength must be positive");
    }
    return 2.0 * aperture_diameter * aperture_diameter / wavelength;
}

}  // namespace risbeam
