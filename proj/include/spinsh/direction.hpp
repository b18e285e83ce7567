// Unit directions on the sphere and the scalar/vector products of a pair.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace spinsh {

/// A point on the unit sphere, carrying both the angles and the cached
/// Cartesian unit vector so repeated component access costs nothing.
struct Direction {
    double theta = 0.0;
    double phi = 0.0;
    std::array<double, 3> n{0.0, 0.0, 1.0};

    Direction() = default;
    Direction(double theta_, double phi_) : theta(theta_), phi(phi_) {
        const double st = std::sin(theta);
        n = {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    }

    /// Build from a Cartesian vector, normalizing it first.
    static Direction from_vector(double x, double y, double z) {
        const double r = std::sqrt(x * x + y * y + z * z);
        if (r == 0.0) throw std::invalid_argument("Direction: zero vector");
        Direction d;
        d.n = {x / r, y / r, z / r};
        d.theta = std::acos(std::max(-1.0, std::min(1.0, z / r)));
        d.phi = std::atan2(y, x);
        return d;
    }

    Direction antipode() const { return from_vector(-n[0], -n[1], -n[2]); }
};

/// Dot product (clamped into [-1, 1]) and wedge (cross) product a x b of two
/// unit directions, the variables every bilocal right-hand side is built from.
struct DotWedge {
    double x = 1.0;
    std::array<double, 3> v{0.0, 0.0, 0.0};
};

inline DotWedge dot_and_wedge(const Direction& a, const Direction& b) {
    DotWedge r;
    double x = a.n[0] * b.n[0] + a.n[1] * b.n[1] + a.n[2] * b.n[2];
    r.x = std::max(-1.0, std::min(1.0, x));
    r.v = {a.n[1] * b.n[2] - a.n[2] * b.n[1],
           a.n[2] * b.n[0] - a.n[0] * b.n[2],
           a.n[0] * b.n[1] - a.n[1] * b.n[0]};
    return r;
}

} // namespace spinsh
