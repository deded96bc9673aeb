#pragma once

#include <string>

namespace pgc {

/// A vector of the pseudo-Galilean space G3^1. The first coordinate is the
/// absolute (non-isotropic) direction; the metric degenerates to a
/// Lorentzian product on (y, z) when both x components vanish.
struct GVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline GVector operator+(const GVector& a, const GVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline GVector operator-(const GVector& a, const GVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline GVector operator*(double c, const GVector& v) {
    return {c * v.x, c * v.y, c * v.z};
}
inline GVector operator-(const GVector& v) { return {-v.x, -v.y, -v.z}; }

enum class VectorClass {
    NonIsotropic,       // x != 0
    SpacelikeIsotropic, // x = 0, y^2 - z^2 > 0
    TimelikeIsotropic,  // x = 0, y^2 - z^2 < 0
    LightlikeIsotropic, // x = 0, y = +-z
};

std::string to_string(VectorClass c);

/// Degenerate scalar product: x1*x2 when either x component is nonzero,
/// otherwise y1*y2 - z1*z2. Branching is exact on the stored reals.
double scalar_product(const GVector& u, const GVector& v);

/// The Lorentzian product on the (y, z) plane, ignoring x. This is the
/// bilinear form the degenerate metric reduces to on isotropic vectors.
double planar_product(const GVector& u, const GVector& v);

/// |x| when x != 0, sqrt(|y^2 - z^2|) when x = 0. Always nonnegative.
double norm(const GVector& v);

/// Cross product from the determinant with symbolic first row (0, -e2, e3).
/// The result is always isotropic (first component zero).
GVector cross_product(const GVector& u, const GVector& v);

/// Total taxonomy of a vector. `iso_eps` absorbs rounding in numerically
/// computed vectors; pass 0 to classify exactly.
VectorClass classify_vector(const GVector& v, double iso_eps = 1e-12);

/// An isometry of G3^1: translation (a, b, d), shears (c, e) along the
/// absolute direction, and a hyperbolic rotation by angle phi.
struct Motion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double phi = 0.0;

    static Motion identity() { return {}; }
};

/// Point action: (a + x, b + c x + y cosh phi + z sinh phi,
///                       d + e x + y sinh phi + z cosh phi).
GVector apply_motion(const Motion& m, const GVector& p);

/// Induced action on difference vectors: the translations drop out.
GVector apply_motion_vector(const Motion& m, const GVector& v);

/// Composition: apply `first`, then `second`. Closed in the group.
Motion compose(const Motion& second, const Motion& first);

/// The sphere g(u - center, u - center) = sign * r2 with r2 > 0.
struct PGSphere {
    GVector center;
    double r2 = 1.0;
    int sign = +1;
};

/// g(p - center, p - center) - sign * r2; zero iff p lies on the sphere.
double sphere_residual(const PGSphere& s, const GVector& p);

} // namespace pgc
