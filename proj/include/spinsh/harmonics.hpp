// Spin-s spherical harmonics and quadrature on the sphere.
#pragma once

#include "spinsh/basis.hpp"
#include "spinsh/clebsch.hpp"
#include "spinsh/direction.hpp"
#include "spinsh/spherical.hpp"
#include "spinsh/tensor.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinsh {

/// Label (l, s, j, j_z) of a spin-s harmonic. Well-formed labels have
/// non-negative l and s, j - j_z integer and j - l - s integer; the triangle
/// conditions |l - s| <= j <= l + s and |j_z| <= j are NOT part of
/// well-formedness, because out-of-triangle labels denote the zero tensor.
struct SpinHarmonicLabel {
    int l = 0;
    HalfInt s = 0;
    HalfInt j = 0;
    HalfInt jz = 0;

    bool well_formed() const {
        if (l < 0 || s.twice() < 0 || j.twice() < 0) return false;
        if (!integer_spaced(j, jz)) return false;
        if (!integer_spaced(j, s + HalfInt(l))) return false;
        return true;
    }
    bool triangle_ok() const {
        const HalfInt L(l);
        return j >= abs(L - s) && j <= L + s && abs(jz) <= j;
    }
};

/// Index shape of a spin-s harmonic value: n vector indices for integer
/// s = n, n vector indices plus one spinor index for s = n + 1/2.
inline std::vector<int> harmonic_dims(HalfInt s) {
    std::vector<int> dims(static_cast<std::size_t>(s.twice() / 2), 3);
    if (!s.is_integer()) dims.push_back(2);
    return dims;
}

/// Y^{l s}_{j j_z}(r) = sum_{l_z + s_z = j_z} <l l_z s s_z | j j_z>
/// Y_{l l_z}(r) e^(s)(s_z), where e^(s) is the standard tensor basis for
/// integer s, the standard spinor basis for half-odd s, and 1 for s = 0.
/// `row` must be ylm_row(l, r). Labels violating the triangle or projection
/// bounds give the zero tensor of the right shape.
inline SpinorTensor spin_harmonic_from_row(const SpinHarmonicLabel& lab,
                                           const std::vector<std::complex<double>>& row) {
    if (!lab.well_formed())
        throw std::invalid_argument("spin_harmonic: malformed label");
    SpinorTensor out{harmonic_dims(lab.s)};
    if (!lab.triangle_ok()) return out;
    for (int lz = -lab.l; lz <= lab.l; ++lz) {
        const HalfInt sz = lab.jz - HalfInt(lz);
        if (abs(sz) > lab.s) continue;
        const double c = cg(lab.l, lz, lab.s, sz, lab.j, lab.jz);
        if (c == 0.0) continue;
        const std::complex<double> y = row[static_cast<std::size_t>(lz + lab.l)];
        out += (c * y) * basis_element(lab.s, sz);
    }
    return out;
}

inline SpinorTensor spin_harmonic(const SpinHarmonicLabel& lab, const Direction& dir) {
    if (!lab.well_formed())
        throw std::invalid_argument("spin_harmonic: malformed label");
    if (!lab.triangle_ok()) return SpinorTensor{harmonic_dims(lab.s)};
    return spin_harmonic_from_row(lab, ylm_row(lab.l, dir));
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Evaluate P_n and P'_n by the Bonnet recurrence.
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        const double wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(n - 1 - i)] = wi;
    }
    return {x, w};
}

/// Product grid exact for spherical polynomials of degree <= 2 l_max:
/// Gauss-Legendre in cos(theta) with l_max + 2 nodes, uniform trapezoid in
/// phi with 2 l_max + 3 points.
struct SphereGrid {
    std::vector<Direction> dirs;
    std::vector<double> w;
};

inline SphereGrid sphere_grid(int l_max) {
    if (l_max < 0) throw std::invalid_argument("sphere_grid: negative l_max");
    const int n_theta = l_max + 2;
    const int n_phi = 2 * l_max + 3;
    const auto [x, wx] = gauss_legendre(n_theta);
    SphereGrid g;
    g.dirs.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    g.w.reserve(g.dirs.capacity());
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::acos(x[static_cast<std::size_t>(i)]);
        for (int k = 0; k < n_phi; ++k) {
            g.dirs.emplace_back(theta, dphi * k);
            g.w.push_back(wx[static_cast<std::size_t>(i)] * dphi);
        }
    }
    return g;
}

/// Full contraction sum_I conj(a_I) b_I of two same-shape tensors.
inline std::complex<double> dot_full(const SpinorTensor& a, const SpinorTensor& b) {
    if (a.dims() != b.dims())
        throw std::invalid_argument("dot_full: shape mismatch");
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

/// Quadrature approximation of the L^2 inner product
/// integral dOmega sum_I conj(f_I) g_I, exact when the integrand is a
/// spherical polynomial of degree <= 2 l_max.
template <typename F, typename G>
std::complex<double> quadrature_inner_product(F&& f, G&& g, int l_max) {
    const SphereGrid grid = sphere_grid(l_max);
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < grid.dirs.size(); ++i)
        acc += grid.w[i] * dot_full(f(grid.dirs[i]), g(grid.dirs[i]));
    return acc;
}

} // namespace spinsh
