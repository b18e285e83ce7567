// Tests for the tensor value type and the standard spin bases.
#include "spinsh/basis.hpp"
#include "spinsh/tensor.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace spinsh;

namespace {
const cplx I(0.0, 1.0);
const HalfInt H = HalfInt::half();

SpinorTensor zhat() { return SpinorTensor::vector3(0.0, 0.0, 1.0); }
} // namespace

TEST_CASE("SpinorTensor shape bookkeeping") {
    SpinorTensor t(std::vector<int>{3, 2, 3});
    CHECK(t.order() == 3);
    CHECK(t.rank() == 2);
    CHECK(t.spinor_rank() == 1);
    CHECK(t.size() == 18);
    t.at({2, 1, 0}) = 5.0;
    CHECK(t.at({2, 1, 0}) == cplx(5.0));
    CHECK(t.max_abs() == 5.0);
    CHECK_THROWS_AS(t.at({3, 0, 0}), std::out_of_range);
    CHECK_THROWS_AS(SpinorTensor(std::vector<int>{4}), std::invalid_argument);
    CHECK_THROWS_AS(t += SpinorTensor(std::vector<int>{3}), std::invalid_argument);
}

TEST_CASE("outer, transpose, contraction and trace") {
    SpinorTensor a = SpinorTensor::vector3(1.0, 2.0, 3.0);
    SpinorTensor b = SpinorTensor::vector3(0.0, 1.0, I);
    SpinorTensor ab = SpinorTensor::outer(a, b);
    CHECK(ab.at({2, 1}) == cplx(3.0));
    CHECK(ab.at({1, 2}) == 2.0 * I);

    SpinorTensor tr = ab.transposed({1, 0});
    CHECK(tr.at({1, 2}) == cplx(3.0));

    // Contraction over the shared index reproduces the dot product a . b.
    SpinorTensor dot = SpinorTensor::contracted(a, {0}, b, {0});
    CHECK(dot.order() == 0);
    CHECK(dot[0] == cplx(2.0) + 3.0 * I);

    SpinorTensor traced = ab.traced(0, 1);
    CHECK(traced[0] == cplx(2.0) + 3.0 * I);

    // (a (x) b)(a (x) b)^T = (b . b) a (x) a, and b . b = 1 + i^2 = 0 here.
    SpinorTensor m = SpinorTensor::contracted(ab, {1}, ab.transposed({1, 0}), {0});
    CHECK(m.max_abs() < 1e-15);
}

TEST_CASE("spherical basis vectors") {
    const SpinorTensor e0 = spherical_basis(0);
    CHECK(e0.at({0}) == cplx(0.0));
    CHECK(e0.at({2}) == cplx(1.0));

    // -+ sqrt(2) eps(+-1) . y = y1 +- i y2 for y = (1, 2, 0).
    const SpinorTensor y = SpinorTensor::vector3(1.0, 2.0, 0.0);
    for (int m : {1, -1}) {
        const SpinorTensor em = spherical_basis(m);
        cplx dot = 0.0;
        for (std::size_t i = 0; i < 3; ++i) dot += em[i] * y[i];
        const cplx expect = (cplx(1.0) + double(m) * 2.0 * I) / (-double(m) * std::sqrt(2.0));
        CHECK(std::abs(dot - expect) < 1e-15);
    }

    // Orthonormality under the conjugate pairing.
    for (int m = -1; m <= 1; ++m)
        for (int mp = -1; mp <= 1; ++mp) {
            cplx acc = 0.0;
            const SpinorTensor em = spherical_basis(m);
            const SpinorTensor emp = spherical_basis(mp);
            for (std::size_t i = 0; i < 3; ++i) acc += std::conj(em[i]) * emp[i];
            CHECK(std::abs(acc - (m == mp ? 1.0 : 0.0)) < 1e-15);
        }
    CHECK_THROWS_AS(spherical_basis(2), std::invalid_argument);
}

TEST_CASE("standard tensors") {
    // eps^(2)(2) = eps(1) (x) eps(1).
    const SpinorTensor e22 = standard_tensor(2, 2);
    const SpinorTensor expect = SpinorTensor::outer(spherical_basis(1), spherical_basis(1));
    CHECK(SpinorTensor::distance(e22, expect) < 1e-15);

    CHECK_THROWS_AS(standard_tensor(2, 3), std::invalid_argument);
    CHECK(standard_tensor(0, 0)[0] == cplx(1.0));

    for (int n = 1; n <= 4; ++n) {
        // Orthonormality: sum conj(eps^(n)(m)) eps^(n)(m') = delta.
        for (int m = -n; m <= n; ++m)
            for (int mp = -n; mp <= n; ++mp) {
                const SpinorTensor em = standard_tensor(n, m);
                const SpinorTensor emp = standard_tensor(n, mp);
                cplx acc = 0.0;
                for (std::size_t i = 0; i < em.size(); ++i) acc += std::conj(em[i]) * emp[i];
                CHECK(std::abs(acc - (m == mp ? 1.0 : 0.0)) < 1e-14);
            }
        // Conjugation: conj(eps^(n)(m)) = (-1)^m eps^(n)(-m).
        for (int m = -n; m <= n; ++m) {
            const SpinorTensor lhs = standard_tensor(n, m).conjugated();
            const SpinorTensor rhs =
                (m % 2 == 0 ? 1.0 : -1.0) * standard_tensor(n, -m);
            CHECK(SpinorTensor::distance(lhs, rhs) < 1e-14);
        }
        // Tracelessness on every index pair (symmetric, so (0, 1) suffices).
        if (n >= 2) {
            for (int m = -n; m <= n; ++m) {
                const SpinorTensor t = standard_tensor(n, m).traced(0, 1);
                CHECK(t.max_abs() < 1e-14);
            }
        }
    }
}

TEST_CASE("standard spinors") {
    const SpinorTensor up = standard_spinor(H, H);
    CHECK(up.at({0}) == cplx(1.0));
    CHECK(up.at({1}) == cplx(0.0));
    const SpinorTensor down = standard_spinor(H, -H);
    CHECK(down.at({0}) == cplx(0.0));
    CHECK(down.at({1}) == cplx(1.0));

    // Top of the spin-3/2 multiplet couples with a single unit coefficient.
    const SpinorTensor top = standard_spinor(HalfInt::from_twice(3), HalfInt::from_twice(3));
    const SpinorTensor expect = SpinorTensor::outer(spherical_basis(1), up);
    CHECK(SpinorTensor::distance(top, expect) < 1e-15);

    // Orthonormality within each multiplet.
    for (std::int64_t ts = 1; ts <= 5; ts += 2) {
        const HalfInt s = HalfInt::from_twice(ts);
        for (std::int64_t ta = -ts; ta <= ts; ta += 2)
            for (std::int64_t tb = -ts; tb <= ts; tb += 2) {
                const SpinorTensor ca = standard_spinor(s, HalfInt::from_twice(ta));
                const SpinorTensor cb = standard_spinor(s, HalfInt::from_twice(tb));
                cplx acc = 0.0;
                for (std::size_t i = 0; i < ca.size(); ++i) acc += std::conj(ca[i]) * cb[i];
                CHECK(std::abs(acc - (ta == tb ? 1.0 : 0.0)) < 1e-14);
            }
    }
    CHECK_THROWS_AS(standard_spinor(HalfInt(1), HalfInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(standard_spinor(H, HalfInt(1)), std::invalid_argument);
}

TEST_CASE("projectors") {
    for (int n = 1; n <= 3; ++n) {
        const SpinorTensor x = projector_tensor(n);
        // Full trace equals the multiplet dimension 2n + 1.
        SpinorTensor tr = x;
        for (int k = 0; k < n; ++k) tr = tr.traced(0, tr.order() / 2);
        CHECK(std::abs(tr[0] - cplx(2.0 * n + 1.0)) < 1e-12);

        // Idempotence: X . X = X, contracting the right block with the left.
        std::vector<int> right(static_cast<std::size_t>(n)), left(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            right[k] = n + k;
            left[k] = k;
        }
        const SpinorTensor xx = SpinorTensor::contracted(x, right, x, left);
        CHECK(SpinorTensor::distance(xx, x) < 1e-12);
    }

    for (std::int64_t ts : {1, 3, 5}) {
        const HalfInt s = HalfInt::from_twice(ts);
        const SpinorTensor x = projector_spinor(s);
        const int n = static_cast<int>((ts - 1) / 2);
        // Full trace equals 2s + 1 = 2n + 2.
        SpinorTensor tr = x;
        const int half_order = n + 1;
        for (int k = 0; k < half_order; ++k) tr = tr.traced(0, tr.order() / 2);
        CHECK(std::abs(tr[0] - cplx(2.0 * n + 2.0)) < 1e-12);

        std::vector<int> right(static_cast<std::size_t>(half_order)),
            left(static_cast<std::size_t>(half_order));
        for (int k = 0; k < half_order; ++k) {
            right[k] = half_order + k;
            left[k] = k;
        }
        const SpinorTensor xx = SpinorTensor::contracted(x, right, x, left);
        CHECK(SpinorTensor::distance(xx, x) < 1e-12);
    }
}

TEST_CASE("symmetrized and antisymmetrized products") {
    // {z z z} has 3! identical terms.
    const SpinorTensor b3 = sym_braces({zhat(), zhat(), zhat()});
    SpinorTensor expect = SpinorTensor::outer(SpinorTensor::outer(zhat(), zhat()), zhat());
    expect *= 6.0;
    CHECK(SpinorTensor::distance(b3, expect) < 1e-15);

    // {z z}_0 component (3, 3) (1-based) equals 4/3.
    const SpinorTensor b0 = sym_braces_traceless({zhat(), zhat()});
    CHECK(std::abs(b0.at({2, 2}) - cplx(4.0 / 3.0)) < 1e-14);

    // Traceless output really is traceless.
    CHECK(b0.traced(0, 1).max_abs() < 1e-14);

    const SpinorTensor a = SpinorTensor::vector3(1.0, 2.0, 3.0);
    const SpinorTensor b = SpinorTensor::vector3(-1.0, 0.5, 2.0);
    const SpinorTensor br = antisym_brackets(a, b);
    CHECK(br.at({0, 1}) == cplx(1.0 * 0.5 - 2.0 * (-1.0)));
    CHECK(SpinorTensor::distance(br, -br.transposed({1, 0})) < 1e-15);

    CHECK_THROWS_AS(sym_braces({SpinorTensor(std::vector<int>{2})}), std::invalid_argument);
}

TEST_CASE("Pauli matrices") {
    const SpinorTensor s3 = pauli(2);
    CHECK(s3.at({0, 0}) == cplx(1.0));
    CHECK(s3.at({1, 1}) == cplx(-1.0));

    for (int k = 0; k < 3; ++k) CHECK(pauli(k).traced(0, 1).max_abs() < 1e-15);

    // sigma^i sigma^j = delta^{ij} I + i eps^{ijk} sigma^k.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SpinorTensor prod = SpinorTensor::contracted(pauli(i), {1}, pauli(j), {0});
            SpinorTensor expect2(std::vector<int>{2, 2});
            if (i == j) expect2 = spinor_identity();
            for (int k = 0; k < 3; ++k) {
                const int e = levi_civita(i, j, k);
                if (e != 0) expect2 += cplx(0.0, double(e)) * pauli(k);
            }
            CHECK(SpinorTensor::distance(prod, expect2) < 1e-15);
        }

    const SpinorTensor v = SpinorTensor::vector3(0.3, -0.4, 0.5);
    SpinorTensor sd = sigma_dot(v);
    SpinorTensor manual(std::vector<int>{2, 2});
    manual.at({0, 0}) = 0.5;
    manual.at({0, 1}) = cplx(0.3, 0.4);
    manual.at({1, 0}) = cplx(0.3, -0.4);
    manual.at({1, 1}) = -0.5;
    CHECK(SpinorTensor::distance(sd, manual) < 1e-15);

    CHECK(levi_civita(0, 1, 2) == 1);
    CHECK(levi_civita(2, 1, 0) == -1);
    CHECK(levi_civita(0, 0, 2) == 0);
}
