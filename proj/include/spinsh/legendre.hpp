// Legendre polynomials, their higher derivatives and associated functions.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinsh {

namespace detail {

inline double clamp_to_interval(double x) {
    if (x > 1.0) {
        if (x > 1.0 + 1e-12)
            throw std::invalid_argument("legendre: argument outside [-1, 1]");
        return 1.0;
    }
    if (x < -1.0) {
        if (x < -1.0 - 1e-12)
            throw std::invalid_argument("legendre: argument outside [-1, 1]");
        return -1.0;
    }
    return x;
}

} // namespace detail

/// Table of d^k P_n / dx^k for 0 <= k <= k_max, 0 <= n <= l_max, built from
/// the differentiated Bonnet recurrence
///   n P^(k)_n = (2n-1) (x P^(k)_{n-1} + k P^(k-1)_{n-1}) - (n-1) P^(k)_{n-2}.
class LegendreTable {
  public:
    LegendreTable(int l_max, int k_max, double x) : l_max_(l_max), k_max_(k_max) {
        if (l_max < 0 || k_max < 0)
            throw std::invalid_argument("LegendreTable: negative order");
        x = detail::clamp_to_interval(x);
        v_.assign(static_cast<std::size_t>(k_max + 1) * (l_max + 1), 0.0);
        at(0, 0) = 1.0;
        for (int n = 1; n <= l_max; ++n) {
            for (int k = 0; k <= k_max; ++k) {
                const double lower = (k > 0) ? at(k - 1, n - 1) : 0.0;
                double r = (2.0 * n - 1.0) * (x * at(k, n - 1) + k * lower);
                if (n >= 2) r -= (n - 1.0) * at(k, n - 2);
                at(k, n) = r / n;
            }
        }
    }

    /// d^k P_l / dx^k; zero for k > l, as the polynomial degree demands.
    double operator()(int k, int l) const {
        if (k > l) return 0.0;
        return v_[static_cast<std::size_t>(k) * (l_max_ + 1) + l];
    }

  private:
    double& at(int k, int l) {
        return v_[static_cast<std::size_t>(k) * (l_max_ + 1) + l];
    }
    int l_max_;
    int k_max_;
    std::vector<double> v_;
};

/// k-th derivative of the Legendre polynomial P_l at x in [-1, 1].
/// Arguments within 1e-12 outside the interval are clamped; k > l gives 0.
inline double legendre_p_deriv(int l, int k, double x) {
    if (l < 0) throw std::invalid_argument("legendre_p_deriv: negative degree");
    if (k < 0) throw std::invalid_argument("legendre_p_deriv: negative derivative order");
    if (k > l) return 0.0;
    LegendreTable t(l, k, x);
    return t(k, l);
}

/// The Legendre polynomial P_l(x). Identical, bit for bit, to
/// legendre_p_deriv(l, 0, x).
inline double legendre_p(int l, double x) {
    return legendre_p_deriv(l, 0, x);
}

/// Associated Legendre functions P_l^m(x) for m = 0..l, Condon-Shortley
/// phase included. Computed by the standard diagonal-then-upward recurrence,
/// stable for the moderate degrees used here.
inline std::vector<double> assoc_legendre_row(int l, double x) {
    if (l < 0) throw std::invalid_argument("assoc_legendre_row: negative degree");
    x = detail::clamp_to_interval(x);
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    std::vector<double> row(static_cast<std::size_t>(l) + 1, 0.0);
    // pmm walks the diagonal via P_m^m = -(2m-1) s P_{m-1}^{m-1}.
    double pmm = 1.0;
    for (int m = 0; m <= l; ++m) {
        if (m == l) {
            row[m] = pmm;
            break;
        }
        double p0 = pmm;
        double p1 = x * (2.0 * m + 1.0) * pmm;
        for (int n = m + 2; n <= l; ++n) {
            const double p2 = ((2.0 * n - 1.0) * x * p1 - (n + m - 1.0) * p0) / (n - m);
            p0 = p1;
            p1 = p2;
        }
        row[m] = p1;
        pmm *= -(2.0 * m + 1.0) * s;
    }
    return row;
}

} // namespace spinsh
