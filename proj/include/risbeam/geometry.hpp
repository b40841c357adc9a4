#ifndef RISBEAM_GEOMETRY_HPP
#define RISBEAM_GEOMETRY_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace risbeam {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// 3D point / displacement in meters. All components must stay finite.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool operator==(const Vec3&) const = default;
};

using Point3 = Vec3;

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Returns v/|v|; throws std::invalid_argument when |v| < 1e-12.
Vec3 normalized(const Vec3& v);

/// Orthonormal in-plane frame: center + unit axes u, v and normal n = u x v.
/// Orthonormality is checked to 1e-12 by the factory functions.
struct PlaneFrame {
    Point3 center;
    Vec3 u_axis;
    Vec3 v_axis;
    Vec3 normal;

    /// Builds a frame from a center and two axes; axes are normalised and
    /// must be orthogonal to 1e-12. normal is set to u x v.
    static PlaneFrame from_axes(const Point3& center, const Vec3& u, const Vec3& v);

    /// Frame whose normal bisects the unit directions from center toward a and b.
    /// The u axis is the component of the global x axis orthogonal to the
    /// normal (global y axis when x is degenerate); v = n x u.
    static PlaneFrame bisector(const Point3& center, const Point3& toward_a,
                               const Point3& toward_b);

    Point3 at(double u, double v) const {
        return center + u * u_axis + v * v_axis;
    }

    /// In-plane coordinates of q (projection onto u, v axes).
    void coordinates(const Point3& q, double& u, double& v) const {
        u = dot(q - center, u_axis);
        v = dot(q - center, v_axis);
    }

    /// Throws std::invalid_argument when axes are not orthonormal or n != u x v.
    void validate() const;
};

/// Planar RIS: frame plus an nx-by-ny element grid with the given spacing.
/// Element (i, j) sits at center + (i-(nx-1)/2)*spacing*u + (j-(ny-1)/2)*spacing*v.
struct RisGeometry {
    PlaneFrame frame;
    int nx = 1;
    int ny = 1;
    double spacing = 0.0;  // meters

    int size() const { return nx * ny; }
    void validate() const;
};

/// Element centers in row-major order: index = i*ny + j.
std::vector<Point3> element_positions(const RisGeometry& geom);

/// Excess path delta = |tx-q| + |q-rx| - |tx-rx|, clamped at zero against
/// roundoff. Throws std::invalid_argument when |tx-rx| < 1e-9 m.
double excess_path(const Point3& tx, const Point3& rx, const Point3& q);

/// Half-wave Fresnel bucket of an excess path: zone = floor(2*delta/lambda) + 1
/// and residual = delta - (zone-1)*lambda/2 in [0, lambda/2). The bucket is
/// half-open at the lower edge, so delta = lambda/2 falls in zone 2.
struct ZoneBucket {
    std::int64_t zone = 1;
    double residual = 0.0;  // meters
};
ZoneBucket zone_bucket(double excess, double wavelength);

/// Per-element excess paths, zone indices and half-wave residuals for a
/// tx/rx pair over a RIS grid.
struct FresnelMap {
    double wavelength = 0.0;    // meters
    double los_distance = 0.0;  // |tx - rx|, meters
    std::vector<double> excess;       // delta_n, meters
    std::vector<std::int64_t> zone;   // m_n >= 1
    std::vector<double> residual;     // r_n in [0, lambda/2)

    std::size_t size() const { return excess.size(); }
};

FresnelMap build_fresnel_map(const Point3& tx, const Point3& rx,
                             const RisGeometry& geom, double wavelength);

enum class ConicClass { Ellipse, Point, Empty, Degenerate };

const char* to_string(ConicClass c);

/// Conic a*u^2 + b*u*v + c*v^2 + d*u + e*v + f = 0 in plane coordinates.
struct ConicSection {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;
    ConicClass classification = ConicClass::Degenerate;
};

/// Classifies the coefficients with a tolerance of 1e-12 relative to the
/// largest coefficient magnitude.
ConicClass classify_conic(double a, double b, double c, double d, double e, double f);

/// Intersection of the Fresnel boundary ellipsoid (foci tx, rx, distance sum
/// |tx-rx| + zone*lambda/2) with the plane, as a conic in (u, v) coordinates.
/// The coefficients are the exact substitution of the plane parametrisation
/// into the ellipsoid quadratic form.
ConicSection zone_boundary_conic(const Point3& tx, const Point3& rx,
                                 const PlaneFrame& frame, std::int64_t zone,
                                 double wavelength);

/// First-order (plane-wave) excess path about the frame center:
/// -(u_ct + u_cr) . (q - center) with u_ct, u_cr the unit directions from the
/// center toward tx and rx. q must lie in the plane to 1e-9 m.
double far_field_excess_path(const Point3& tx, const Point3& rx,
                             const PlaneFrame& frame, const Point3& q);

/// Zone boundary of the linearised excess path: the line
/// d*u + e*v + (delta_center - zone*lambda/2) = 0, with delta_center the exact
/// excess path of the frame center. Classified Degenerate when a line exists,
/// Empty when the gradient vanishes and no point satisfies the equation.
ConicSection far_field_zone_boundary(const Point3& tx, const Point3& rx,
                                     const PlaneFrame& frame, std::int64_t zone,
                                     double wavelength);

/// Evenly sampled points on the conic locus, mapped back to 3D through the
/// frame. Ellipse: `count` points; Point: the single point; Empty or
/// Degenerate: no points.
std::vector<Point3> conic_sample(const ConicSection& conic, const PlaneFrame& frame,
                                 int count);

/// Fraunhofer distance 2*D^2/lambda for an aperture of diameter D.
double fraunhofer_distance(double aperture_diameter, double wavelength);

}  // namespace risbeam

#endif
