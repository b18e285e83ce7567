// Tests for Legendre machinery, directions and scalar spherical harmonics.
#include "spinsh/direction.hpp"
#include "spinsh/harmonics.hpp"
#include "spinsh/legendre.hpp"
#include "spinsh/spherical.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace spinsh;

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Direction random_direction(std::mt19937_64& rng) {
    const double z = 2.0 * unit_double(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit_double(rng);
    return Direction(std::acos(z), phi);
}

} // namespace

TEST_CASE("documented Legendre values") {
    CHECK(legendre_p(2, 0.5) == Catch::Approx(-0.125).margin(1e-15));
    CHECK(legendre_p_deriv(3, 1, 1.0) == Catch::Approx(6.0).epsilon(1e-14));
    CHECK(legendre_p_deriv(5, 6, 0.3) == 0.0);
    CHECK(legendre_p_deriv(4, 2, 0.0) == Catch::Approx(-7.5).epsilon(1e-14));
}

TEST_CASE("legendre_p is bit-identical to the k = 0 derivative") {
    for (int l = 0; l <= 30; ++l)
        for (double x = -1.0; x <= 1.0; x += 0.125)
            CHECK(legendre_p(l, x) == legendre_p_deriv(l, 0, x));
}

TEST_CASE("degree-5 closed forms match") {
    for (double x = -1.0; x <= 1.0; x += 0.1) {
        CHECK(legendre_p(5, x) ==
              Catch::Approx((63 * std::pow(x, 5) - 70 * x * x * x + 15 * x) / 8).margin(1e-14));
        CHECK(legendre_p_deriv(5, 1, x) ==
              Catch::Approx((315 * std::pow(x, 4) - 210 * x * x + 15) / 8).margin(1e-13));
        CHECK(legendre_p_deriv(5, 2, x) ==
              Catch::Approx((315 * x * x * x - 105 * x) / 2).margin(1e-12));
        CHECK(legendre_p_deriv(5, 3, x) ==
              Catch::Approx((945 * x * x - 105) / 2).margin(1e-12));
        CHECK(legendre_p_deriv(5, 4, x) == Catch::Approx(945 * x).margin(1e-12));
        CHECK(legendre_p_deriv(5, 5, x) == Catch::Approx(945.0).margin(1e-12));
    }
}

TEST_CASE("Legendre ODE residual stays small") {
    // (1 - x^2) P'' - 2 x P' + l (l + 1) P = 0.
    for (int l = 0; l <= 40; ++l) {
        double worst = 0.0;
        for (double x = -1.0; x <= 1.0; x += 0.05) {
            const LegendreTable t(l, 2, x);
            const double r =
                (1 - x * x) * t(2, l) - 2 * x * t(1, l) + l * (l + 1.0) * t(0, l);
            worst = std::max(worst, std::abs(r));
        }
        CHECK(worst <= 1e-10 * std::max(1, l * l));
    }
}

TEST_CASE("argument clamping") {
    CHECK(legendre_p(3, 1.0 + 5e-13) == legendre_p(3, 1.0));
    CHECK(legendre_p(3, -1.0 - 5e-13) == legendre_p(3, -1.0));
    CHECK_THROWS_AS(legendre_p(3, 1.01), std::invalid_argument);
    CHECK_THROWS_AS(legendre_p_deriv(3, 1, -1.01), std::invalid_argument);
    CHECK_THROWS_AS(legendre_p(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(legendre_p_deriv(2, -1, 0.0), std::invalid_argument);
}

TEST_CASE("Direction round-trip and products") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Direction d = random_direction(rng);
        const Direction e = Direction::from_vector(d.n[0], d.n[1], d.n[2]);
        CHECK(e.theta == Catch::Approx(d.theta).margin(1e-12));
        CHECK(std::abs(std::remainder(e.phi - d.phi, 2 * std::numbers::pi)) < 1e-12);
    }
    const Direction zhat(0.0, 0.0);
    const Direction xhat(std::numbers::pi / 2, 0.0);
    const DotWedge r = dot_and_wedge(zhat, xhat);
    CHECK(r.x == Catch::Approx(0.0).margin(1e-15));
    CHECK(r.v[0] == Catch::Approx(0.0).margin(1e-15));
    CHECK(r.v[1] == Catch::Approx(1.0).margin(1e-15));
    CHECK(r.v[2] == Catch::Approx(0.0).margin(1e-15));
    // Clamping keeps the dot product inside [-1, 1] for parallel directions.
    CHECK(std::abs(dot_and_wedge(xhat, xhat).x) <= 1.0);
    CHECK_THROWS_AS(Direction::from_vector(0, 0, 0), std::invalid_argument);
}

TEST_CASE("documented spherical harmonic values") {
    const Direction any(1.234, 2.345);
    CHECK(spherical_harmonic(0, 0, any).real() == Catch::Approx(0.28209479177387814).epsilon(1e-14));
    CHECK(spherical_harmonic(0, 0, any).imag() == Catch::Approx(0.0).margin(1e-16));
    CHECK(spherical_harmonic(1, 0, Direction(0.0, 0.0)).real() ==
          Catch::Approx(0.4886025119029199).epsilon(1e-14));
    const std::complex<double> y11 =
        spherical_harmonic(1, 1, Direction(std::numbers::pi / 2, 0.0));
    CHECK(y11.real() == Catch::Approx(-0.3454941494713355).epsilon(1e-14));
    CHECK(y11.imag() == Catch::Approx(0.0).margin(1e-15));
    CHECK(spherical_harmonic(2, 3, any) == std::complex<double>(0.0));
    CHECK(spherical_harmonic(2, -3, any) == std::complex<double>(0.0));
}

TEST_CASE("conjugation relation of the rows") {
    std::mt19937_64 rng(13);
    for (int l = 0; l <= 12; ++l) {
        const Direction d = random_direction(rng);
        const auto row = ylm_row(l, d);
        for (int m = 0; m <= l; ++m) {
            const std::complex<double> lhs = row[static_cast<std::size_t>(l - m)];
            const std::complex<double> rhs =
                (m % 2 == 0 ? 1.0 : -1.0) * std::conj(row[static_cast<std::size_t>(l + m)]);
            CHECK(std::abs(lhs - rhs) < 1e-15);
        }
    }
}

TEST_CASE("classic addition theorem to machine precision") {
    std::mt19937_64 rng(42);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Direction a = random_direction(rng);
        const Direction b = random_direction(rng);
        const DotWedge dw = dot_and_wedge(a, b);
        for (int l = 0; l <= 25; ++l) {
            const auto ra = ylm_row(l, a);
            const auto rb = ylm_row(l, b);
            std::complex<double> sum = 0.0;
            for (std::size_t k = 0; k < ra.size(); ++k) sum += rb[k] * std::conj(ra[k]);
            const double expect =
                (2.0 * l + 1.0) / (4.0 * std::numbers::pi) * legendre_p(l, dw.x);
            worst = std::max(worst, std::abs(sum - expect));
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("Gauss-Legendre nodes integrate high-degree monomials") {
    for (int n : {2, 5, 12, 27}) {
        const auto [x, w] = gauss_legendre(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::pow(x[i], k);
            const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1.0);
            CHECK(acc == Catch::Approx(exact).margin(1e-13));
        }
    }
}
