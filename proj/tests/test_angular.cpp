// Tests for exact Clebsch-Gordan coefficients and the half-integer type.
#include "spinsh/clebsch.hpp"
#include "spinsh/halfint.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <future>
#include <vector>

using namespace spinsh;

namespace {
const HalfInt H = HalfInt::half();
}

TEST_CASE("HalfInt basics") {
    CHECK(HalfInt(3).twice() == 6);
    CHECK(HalfInt::from_twice(3).value() == 1.5);
    CHECK(HalfInt::from_twice(3).str() == "3/2");
    CHECK(HalfInt(-2).str() == "-2");
    CHECK(H + H == HalfInt(1));
    CHECK((HalfInt(2) - H).twice() == 3);
    CHECK(abs(HalfInt::from_twice(-5)) == HalfInt::from_twice(5));
    CHECK(integer_spaced(HalfInt::from_twice(3), H));
    CHECK_FALSE(integer_spaced(HalfInt(1), H));
    CHECK(HalfInt(1) < HalfInt::from_twice(3));
}

TEST_CASE("documented example coefficients") {
    for (int l = 0; l <= 5; ++l) {
        for (int lz = -l; lz <= l; ++lz) {
            const CGExact c = cg_exact(l, lz, 0, 0, l, lz);
            CHECK(c.sign == 1);
            CHECK(c.square == 1);
        }
    }
    const CGExact c = cg_exact(H, H, H, -H, 1, 0);
    CHECK(c.sign == 1);
    CHECK(c.square == BigRational(1, 2));

    CHECK(cg(1, 0, 1, 0, 2, 0) == Catch::Approx(0.8164965809277260).epsilon(1e-14));
    CHECK(cg(H, H, H, H, 1, 1) == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(cg(1, 1, 1, -1, 0, 0) == Catch::Approx(0.5773502691896258).epsilon(1e-14));
}

TEST_CASE("selection rules give the zero coefficient") {
    CHECK(cg_exact(1, 1, 1, 1, 1, 1).sign == 0);
    CHECK(cg_exact(1, 0, 1, 0, 3, 0).sign == 0);
    CHECK(cg_exact(2, 0, H, H, HalfInt::from_twice(7), H).sign == 0);
    CHECK(cg(1, 1, 1, 0, 2, 0) == 0.0);
    // Coupling 1 x 1 to half-odd j is integer-incompatible, hence zero.
    CHECK(cg_exact(1, 0, 1, 0, HalfInt::from_twice(3), HalfInt::from_twice(1)).sign == 0);
}

TEST_CASE("malformed pairs throw") {
    CHECK_THROWS_AS(cg(HalfInt::from_twice(-2), 0, 1, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cg(H, HalfInt(0), 1, 0, H, H), std::invalid_argument);
    CHECK_THROWS_AS(cg(1, 2, 1, -1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cg(1, 0, 1, 0, 2, HalfInt(3)), std::invalid_argument);
}

TEST_CASE("frozen exact oracle values") {
    // Independently computed with SymPy's exact CG implementation
    // (sympy.physics.quantum.cg); entries are twice-values followed by
    // sign and the exact square as numerator/denominator.
    struct Row {
        int tj1, tm1, tj2, tm2, tj, tm, sign;
        long long num, den;
    };
    static const Row rows[] = {
        {5, -1, 5, 3, 2, 2, -1, 8, 35},
        {5, -1, 1, 1, 6, 0, 1, 1, 2},
        {6, -2, 6, -2, 12, -4, 1, 5, 11},
        {5, 5, 6, 0, 9, 5, 1, 25, 66},
        {3, -3, 6, 6, 9, 3, 1, 1, 84},
        {5, -3, 3, -1, 8, -4, 1, 15, 28},
        {5, -3, 5, 3, 10, 0, 1, 25, 252},
        {6, -6, 5, 3, 3, -3, 1, 3, 14},
        {5, -3, 6, 2, 11, -1, 1, 25, 154},
        {6, -2, 3, 1, 5, -1, -1, 1, 70},
        {4, -2, 2, 0, 6, -2, 1, 8, 15},
        {6, -6, 5, 5, 11, -1, 1, 1, 462},
        {5, -3, 6, 2, 5, -1, 1, 1, 35},
        {4, -4, 6, 6, 4, 2, -1, 5, 14},
        {6, -2, 4, 4, 10, 2, 1, 1, 14},
        {3, 3, 1, -1, 4, 2, 1, 1, 4},
        {6, -6, 6, 0, 10, -6, -1, 1, 3},
        {4, 0, 4, 0, 6, 0, 0, 0, 1},
        {2, 0, 4, -4, 4, -4, 1, 2, 3},
        {6, -6, 4, 4, 10, -2, 1, 1, 210},
        {3, 3, 5, 1, 8, 4, 1, 5, 14},
        {6, 2, 3, -3, 3, -1, 1, 4, 35},
        {6, 0, 4, -4, 10, -4, 1, 1, 6},
        {5, -5, 6, 2, 5, -3, -1, 2, 7},
        {4, 2, 6, 2, 10, 4, 1, 1, 2},
        {1, 1, 3, -3, 4, -2, 1, 1, 4},
        {4, -2, 6, 2, 8, 0, -1, 5, 14},
        {3, 3, 6, -6, 9, -3, 1, 1, 84},
        {4, -4, 5, 1, 7, -3, -1, 8, 21},
        {5, -3, 2, 2, 7, -1, 1, 1, 7},
        {6, -2, 5, -1, 9, -3, -1, 5, 231},
        {2, 2, 6, -6, 4, -4, 1, 5, 7},
        {4, 4, 5, -1, 3, 3, 1, 4, 35},
        {4, 4, 4, -4, 4, 0, 1, 2, 7},
        {1, -1, 6, 2, 7, 1, 1, 3, 7},
        {6, 4, 2, -2, 8, 2, 1, 3, 28},
        {5, 1, 2, 2, 7, 3, 1, 10, 21},
        {5, -5, 6, 0, 7, -5, 1, 8, 21},
        {4, -4, 5, 1, 3, -3, -1, 4, 35},
        {6, -4, 4, 0, 4, -4, 1, 5, 14},
    };
    for (const Row& r : rows) {
        const CGExact c = cg_exact(HalfInt::from_twice(r.tj1), HalfInt::from_twice(r.tm1),
                                   HalfInt::from_twice(r.tj2), HalfInt::from_twice(r.tm2),
                                   HalfInt::from_twice(r.tj), HalfInt::from_twice(r.tm));
        INFO("2j1=" << r.tj1 << " 2m1=" << r.tm1 << " 2j2=" << r.tj2 << " 2m2=" << r.tm2
                    << " 2j=" << r.tj << " 2m=" << r.tm);
        CHECK(c.sign == r.sign);
        CHECK(c.square == BigRational(r.num, r.den));
    }
}

namespace {

// All (j1, j2) with j1 + j2 <= bound, in half-integer steps.
std::vector<std::pair<HalfInt, HalfInt>> coupling_pairs(HalfInt bound) {
    std::vector<std::pair<HalfInt, HalfInt>> out;
    for (std::int64_t t1 = 0; t1 <= bound.twice(); ++t1)
        for (std::int64_t t2 = 0; t1 + t2 <= bound.twice(); ++t2)
            out.emplace_back(HalfInt::from_twice(t1), HalfInt::from_twice(t2));
    return out;
}

} // namespace

TEST_CASE("exchange and reflection symmetries, exactly") {
    for (const auto& [j1, j2] : coupling_pairs(HalfInt(4))) {
        for (HalfInt j = abs(j1 - j2); j <= j1 + j2; j += 1) {
            const bool odd = ((j1 + j2 - j).integer() % 2) != 0;
            for (HalfInt m1 = -j1; m1 <= j1; m1 += 1) {
                for (HalfInt m2 = -j2; m2 <= j2; m2 += 1) {
                    const HalfInt m = m1 + m2;
                    if (abs(m) > j) continue;
                    const CGExact c = cg_exact(j1, m1, j2, m2, j, m);
                    const CGExact swapped = cg_exact(j2, m2, j1, m1, j, m);
                    const CGExact reflected = cg_exact(j1, -m1, j2, -m2, j, -m);
                    const int phase = odd ? -1 : 1;
                    CHECK(swapped.sign == phase * c.sign);
                    CHECK(swapped.square == c.square);
                    CHECK(reflected.sign == phase * c.sign);
                    CHECK(reflected.square == c.square);
                }
            }
        }
    }
}

TEST_CASE("orthogonality and completeness are exact up to j1 + j2 = 6") {
    for (const auto& [j1, j2] : coupling_pairs(HalfInt(6))) {
        INFO("j1=" << j1.str() << " j2=" << j2.str());
        CHECK(cg_orthogonality_exact(j1, j2));
        CHECK(cg_completeness_exact(j1, j2));
    }
}

TEST_CASE("memo cache serves concurrent readers") {
    auto work = [] {
        double acc = 0.0;
        for (int l = 0; l <= 8; ++l)
            for (int lz = -l; lz <= l; ++lz)
                for (int two_sz = -3; two_sz <= 3; two_sz += 2)
                    acc += cg(l, lz, HalfInt::from_twice(3), HalfInt::from_twice(two_sz),
                              HalfInt(l) + HalfInt::from_twice(3),
                              HalfInt(lz) + HalfInt::from_twice(two_sz));
        return acc;
    };
    const double reference = work();
    std::vector<std::future<double>> futs;
    for (int i = 0; i < 8; ++i) futs.push_back(std::async(std::launch::async, work));
    for (auto& f : futs) CHECK(f.get() == reference);
    CHECK(cg_cache_size() > 0);
    CHECK(cg_cache_size() <= detail::CGCache::kMaxEntries);
}
