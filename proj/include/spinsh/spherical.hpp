// Scalar spherical harmonics with the Condon-Shortley phase.
#pragma once

#include "spinsh/direction.hpp"
#include "spinsh/legendre.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spinsh {

/// All Y_{l m}(theta, phi) for m = -l..l, indexed by m + l. One associated
/// Legendre pass serves the whole row, which is what the pair sums want.
inline std::vector<std::complex<double>> ylm_row(int l, const Direction& d) {
    if (l < 0) throw std::invalid_argument("ylm_row: negative degree");
    const std::vector<double> p = assoc_legendre_row(l, std::cos(d.theta));
    std::vector<std::complex<double>> row(2 * static_cast<std::size_t>(l) + 1);
    const std::complex<double> eip(std::cos(d.phi), std::sin(d.phi));
    std::complex<double> eimp = 1.0;
    // ratio accumulates (l-m)!/(l+m)! one factor at a time.
    double ratio = 1.0;
    const double base = (2.0 * l + 1.0) / (4.0 * std::numbers::pi);
    for (int m = 0; m <= l; ++m) {
        if (m > 0) {
            ratio /= static_cast<double>(l - m + 1) * static_cast<double>(l + m);
            eimp *= eip;
        }
        const std::complex<double> y = std::sqrt(base * ratio) * p[m] * eimp;
        row[static_cast<std::size_t>(l + m)] = y;
        row[static_cast<std::size_t>(l - m)] =
            (m % 2 == 0) ? std::conj(y) : -std::conj(y);
    }
    return row;
}

/// Y_{l m}(theta, phi); zero whenever |m| > l.
inline std::complex<double> spherical_harmonic(int l, int m, const Direction& d) {
    if (l < 0) throw std::invalid_argument("spherical_harmonic: negative degree");
    if (std::abs(m) > l) return 0.0;
    return ylm_row(l, d)[static_cast<std::size_t>(m + l)];
}

} // namespace spinsh
