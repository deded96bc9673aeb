#include "pgc/geometry.hpp"

#include <cmath>

namespace pgc {

std::string to_string(VectorClass c) {
    switch (c) {
    case VectorClass::NonIsotropic: return "non-isotropic";
    case VectorClass::SpacelikeIsotropic: return "spacelike";
    case VectorClass::TimelikeIsotropic: return "timelike";
    case VectorClass::LightlikeIsotropic: return "lightlike";
    }
    return "unknown";
}

double scalar_product(const GVector& u, const GVector& v) {
    if (u.x != 0.0 || v.x != 0.0) {
        return u.x * v.x;
    }
    return u.y * v.y - u.z * v.z;
}

double planar_product(const GVector& u, const GVector& v) {
    return u.y * v.y - u.z * v.z;
}

double norm(const GVector& v) {
    if (v.x != 0.0) {
        return std::abs(v.x);
    }
    return std::sqrt(std::abs(v.y * v.y - v.z * v.z));
}

GVector cross_product(const GVector& u, const GVector& v) {
    // Cofactor expansion of the first row (0, -e2, e3).
    return {0.0, u.x * v.z - u.z * v.x, u.x * v.y - u.y * v.x};
}

VectorClass classify_vector(const GVector& v, double iso_eps) {
    if (std::abs(v.x) > iso_eps) {
        return VectorClass::NonIsotropic;
    }
    const double q = v.y * v.y - v.z * v.z;
    const double scale = std::max(1.0, v.y * v.y + v.z * v.z);
    if (std::abs(q) <= iso_eps * scale) {
        return VectorClass::LightlikeIsotropic;
    }
    return q > 0.0 ? VectorClass::SpacelikeIsotropic : VectorClass::TimelikeIsotropic;
}

GVector apply_motion(const Motion& m, const GVector& p) {
    const double ch = std::cosh(m.phi);
    const double sh = std::sinh(m.phi);
    return {m.a + p.x,
            m.b + m.c * p.x + p.y * ch + p.z * sh,
            m.d + m.e * p.x + p.y * sh + p.z * ch};
}

GVector apply_motion_vector(const Motion& m, const GVector& v) {
    const double ch = std::cosh(m.phi);
    const double sh = std::sinh(m.phi);
    return {v.x,
            m.c * v.x + v.y * ch + v.z * sh,
            m.e * v.x + v.y * sh + v.z * ch};
}

Motion compose(const Motion& second, const Motion& first) {
    const double ch = std::cosh(second.phi);
    const double sh = std::sinh(second.phi);
    Motion out;
    out.a = second.a + first.a;
    out.b = second.b + second.c * first.a + first.b * ch + first.d * sh;
    out.c = second.c + first.c * ch + first.e * sh;
    out.d = second.d + second.e * first.a + first.b * sh + first.d * ch;
    out.e = second.e + first.c * sh + first.e * ch;
    out.phi = second.phi + first.phi;
    return out;
}

double sphere_residual(const PGSphere& s, const GVector& p) {
    const GVector d = p - s.center;
    return scalar_product(d, d) - s.sign * s.r2;
}

} // namespace pgc
