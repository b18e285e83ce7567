// Tests for spin-s spherical harmonics and the sphere quadrature.
#include "spinsh/harmonics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

using namespace spinsh;

namespace {

const HalfInt H = HalfInt::half();

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Direction random_direction(std::mt19937_64& rng) {
    const double z = 2.0 * unit_double(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit_double(rng);
    return Direction(std::acos(z), phi);
}

std::vector<SpinHarmonicLabel> labels_for_spin(HalfInt s, int l_max) {
    std::vector<SpinHarmonicLabel> out;
    for (int l = 0; l <= l_max; ++l) {
        const HalfInt L(l);
        for (HalfInt j = abs(L - s); j <= L + s; j += 1)
            for (HalfInt jz = -j; jz <= j; jz += 1)
                out.push_back({l, s, j, jz});
    }
    return out;
}

} // namespace

TEST_CASE("label validity") {
    CHECK(SpinHarmonicLabel{2, 1, 3, 0}.well_formed());
    CHECK(SpinHarmonicLabel{2, 1, 3, 0}.triangle_ok());
    // Out-of-triangle labels are well-formed and denote the zero tensor.
    const SpinHarmonicLabel far{0, HalfInt::from_twice(3), HalfInt::from_twice(9),
                                HalfInt::from_twice(1)};
    CHECK(far.well_formed());
    CHECK_FALSE(far.triangle_ok());
    const SpinorTensor z = spin_harmonic(far, Direction(1.0, 2.0));
    CHECK(z.dims() == std::vector<int>{3, 2});
    CHECK(z.max_abs() == 0.0);

    // |j_z| > j also gives the zero tensor.
    const SpinorTensor z2 = spin_harmonic({2, 1, 2, HalfInt(3)}, Direction(1.0, 2.0));
    CHECK(z2.max_abs() == 0.0);

    // Integer-incompatible or negative labels are malformed.
    CHECK_THROWS_AS(spin_harmonic({2, H, 2, 0}, Direction(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(spin_harmonic({2, 1, 2, H}, Direction(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(spin_harmonic({-1, 1, 1, 0}, Direction(1.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("spin-0 harmonics reduce to scalar harmonics") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        const Direction d = random_direction(rng);
        for (int l = 0; l <= 6; ++l)
            for (int jz = -l; jz <= l; ++jz) {
                const SpinorTensor y = spin_harmonic({l, 0, l, jz}, d);
                CHECK(y.order() == 0);
                CHECK(std::abs(y[0] - spherical_harmonic(l, jz, d)) < 1e-14);
            }
    }
}

TEST_CASE("spin-1/2 harmonics match the textbook closed form") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
        const Direction d = random_direction(rng);
        for (int l = 1; l <= 6; ++l) {
            for (std::int64_t tjz = -(2 * l + 1); tjz <= 2 * l + 1; tjz += 2) {
                const HalfInt jz = HalfInt::from_twice(tjz);
                const double up = 0.5 * (2 * l + 1 + tjz);
                const double dn = 0.5 * (2 * l + 1 - tjz);
                const int m_up = static_cast<int>((tjz - 1) / 2);
                const int m_dn = static_cast<int>((tjz + 1) / 2);

                const SpinorTensor plus =
                    spin_harmonic({l, H, HalfInt(l) + H, jz}, d);
                CHECK(std::abs(plus.at({0}) - std::sqrt(up / (2 * l + 1)) *
                                                  spherical_harmonic(l, m_up, d)) < 1e-13);
                CHECK(std::abs(plus.at({1}) - std::sqrt(dn / (2 * l + 1)) *
                                                  spherical_harmonic(l, m_dn, d)) < 1e-13);

                if (abs(jz) <= HalfInt(l) - H) {
                    const SpinorTensor minus =
                        spin_harmonic({l, H, HalfInt(l) - H, jz}, d);
                    CHECK(std::abs(minus.at({0}) + std::sqrt(dn / (2 * l + 1)) *
                                                       spherical_harmonic(l, m_up, d)) < 1e-13);
                    CHECK(std::abs(minus.at({1}) - std::sqrt(up / (2 * l + 1)) *
                                                       spherical_harmonic(l, m_dn, d)) < 1e-13);
                }
            }
        }
    }
}

TEST_CASE("integer-spin conjugation relation") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 2; ++n) {
        for (int i = 0; i < 4; ++i) {
            const Direction d = random_direction(rng);
            for (const auto& lab : labels_for_spin(HalfInt(n), 4)) {
                const SpinorTensor lhs = spin_harmonic(lab, d).conjugated();
                const int expo = static_cast<int>(lab.jz.integer() + lab.l + n -
                                                  lab.j.integer());
                const double phase = (expo % 2 == 0) ? 1.0 : -1.0;
                const SpinorTensor rhs =
                    phase * spin_harmonic({lab.l, lab.s, lab.j, -lab.jz}, d);
                CHECK(SpinorTensor::distance(lhs, rhs) < 1e-12);
            }
        }
    }
}

TEST_CASE("half-integer conjugation relation") {
    // i sigma^2 Y_{j j_z} = (-1)^{l + n + 1/2 - j} (-1)^{1/2 + j_z} conj(Y_{j, -j_z}),
    // acting on the spinor index.
    std::mt19937_64 rng(9);
    const SpinorTensor is2 = cplx(0.0, 1.0) * pauli(1);
    for (std::int64_t ts : {1, 3}) {
        const HalfInt s = HalfInt::from_twice(ts);
        const int n = static_cast<int>((ts - 1) / 2);
        for (int i = 0; i < 4; ++i) {
            const Direction d = random_direction(rng);
            for (const auto& lab : labels_for_spin(s, 4)) {
                const SpinorTensor y = spin_harmonic(lab, d);
                // Contract the spinor index (last axis) with i sigma^2; the
                // free spinor index then comes first, so rotate it back.
                SpinorTensor lhs = SpinorTensor::contracted(is2, {1}, y, {y.order() - 1});
                if (n > 0) {
                    std::vector<int> perm;
                    for (int k = 1; k <= n; ++k) perm.push_back(k);
                    perm.push_back(0);
                    lhs = lhs.transposed(perm);
                }
                const int expo =
                    static_cast<int>(lab.l + n + (1 - lab.j.twice()) / 2 +
                                     (1 + lab.jz.twice()) / 2);
                const double phase = (expo % 2 == 0) ? 1.0 : -1.0;
                const SpinorTensor rhs =
                    phase *
                    spin_harmonic({lab.l, lab.s, lab.j, -lab.jz}, d).conjugated();
                CHECK(SpinorTensor::distance(lhs, rhs) < 1e-12);
            }
        }
    }
}

TEST_CASE("sigma-tracelessness of tensor-spinor harmonics") {
    std::mt19937_64 rng(15);
    const SpinorTensor sig = pauli_vector();
    for (int i = 0; i < 4; ++i) {
        const Direction d = random_direction(rng);
        // s = 3/2: contract sigma over the tensor index and the spinor index.
        for (const auto& lab : labels_for_spin(HalfInt::from_twice(3), 4)) {
            const SpinorTensor y = spin_harmonic(lab, d);
            const SpinorTensor c = SpinorTensor::contracted(sig, {0, 2}, y, {0, 1});
            CHECK(c.max_abs() < 1e-12);
        }
        // s = 5/2: either tensor index works.
        for (const auto& lab : labels_for_spin(HalfInt::from_twice(5), 3)) {
            const SpinorTensor y = spin_harmonic(lab, d);
            for (int k = 0; k < 2; ++k) {
                const SpinorTensor c = SpinorTensor::contracted(sig, {0, 2}, y, {k, 2});
                CHECK(c.max_abs() < 1e-12);
            }
        }
    }
}

TEST_CASE("Gram matrix of harmonics is the identity") {
    for (HalfInt s : {HalfInt(0), H, HalfInt(1), HalfInt::from_twice(3), HalfInt(2)}) {
        const int l_max = 4;
        const auto labels = labels_for_spin(s, l_max);
        const SphereGrid grid = sphere_grid(l_max);
        // Precompute all values on the grid.
        std::vector<std::vector<SpinorTensor>> vals(labels.size());
        for (std::size_t a = 0; a < labels.size(); ++a) {
            vals[a].reserve(grid.dirs.size());
            for (const Direction& d : grid.dirs)
                vals[a].push_back(spin_harmonic(labels[a], d));
        }
        double worst = 0.0;
        for (std::size_t a = 0; a < labels.size(); ++a) {
            for (std::size_t b = a; b < labels.size(); ++b) {
                cplx acc = 0.0;
                for (std::size_t g = 0; g < grid.dirs.size(); ++g)
                    acc += grid.w[g] * dot_full(vals[a][g], vals[b][g]);
                const bool same = labels[a].l == labels[b].l &&
                                  labels[a].j == labels[b].j &&
                                  labels[a].jz == labels[b].jz;
                worst = std::max(worst, std::abs(acc - (same ? 1.0 : 0.0)));
            }
        }
        INFO("s = " << s.str());
        CHECK(worst < 1e-11);
    }
}

TEST_CASE("quadrature inner product integrates scalar harmonics") {
    auto f = [](const Direction& d) {
        return SpinorTensor::scalar(spherical_harmonic(3, 1, d));
    };
    auto g = [](const Direction& d) {
        return SpinorTensor::scalar(spherical_harmonic(3, 1, d));
    };
    auto h = [](const Direction& d) {
        return SpinorTensor::scalar(spherical_harmonic(2, 1, d));
    };
    CHECK(std::abs(quadrature_inner_product(f, g, 3) - 1.0) < 1e-13);
    CHECK(std::abs(quadrature_inner_product(f, h, 3)) < 1e-13);
}
