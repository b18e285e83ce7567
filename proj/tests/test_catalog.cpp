// Tests for the theorem registry: domain bookkeeping, the front-door
// evaluators, the full oracle-agreement sweep, locality limits and the
// conjugation structure of the mixed-spin sum.
#include "spinsh/spinsh.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace spinsh;
using namespace spinsh::catalog;

namespace {

double rel_dist(const SpinorTensor& x, const SpinorTensor& y) {
    return SpinorTensor::distance(x, y) / std::max(1.0, x.max_abs());
}

const std::vector<Direction>& probe_dirs() {
    static const std::vector<Direction> dirs = {
        Direction(1.0, 0.5), Direction(2.2, 4.0), Direction(0.4, 2.9)};
    return dirs;
}

} // namespace

TEST_CASE("registry shape and lookup") {
    const auto& specs = registry();
    CHECK(specs.size() == 94);

    std::set<std::string> ids;
    int explicit_count = 0;
    for (const auto& s : specs) {
        CAPTURE(s.id);
        CHECK(ids.insert(s.id).second);
        CHECK_FALSE(s.id.empty());
        CHECK(s.citation.rfind("eq:", 0) == 0);
        CHECK_FALSE(s.domain_summary.empty());
        CHECK(static_cast<bool>(s.in_domain));
        CHECK(static_cast<bool>(s.enumerate));
        CHECK(static_cast<bool>(s.lhs));
        if (s.mode == Mode::Explicit) {
            ++explicit_count;
            CHECK(static_cast<bool>(s.rhs));
        } else {
            CHECK(static_cast<bool>(s.basis));
            CHECK_FALSE(s.coeff_labels.empty());
        }
    }
    CHECK(explicit_count >= 45);

    CHECK(find_theorem("spin32.delta3").citation == "eq:add3hal4");
    CHECK(find_theorem("scalar.classic").family == Family::ScalarBilocal);
    CHECK_THROWS_AS(find_theorem("nosuch.theorem"), std::invalid_argument);
}

TEST_CASE("enumerations land inside the declared domains") {
    for (const auto& s : registry()) {
        CAPTURE(s.id);
        for (const auto& p : s.enumerate(6)) {
            CAPTURE(p.str(s.uses));
            CHECK(s.in_domain(p));
            CHECK_FALSE(s.in_vanishing(p));
        }
        for (const auto& p : s.enumerate_vanishing(6)) {
            CAPTURE(p.str(s.uses));
            CHECK(s.in_vanishing(p));
            CHECK_FALSE(s.in_domain(p));
        }
    }
}

TEST_CASE("front-door evaluators enforce mode and domain") {
    const Direction a(1.0, 0.5);
    const Direction b(2.0, 1.5);

    const TheoremSpec& extr = find_theorem("spin1.same-l");
    CHECK_THROWS_AS(evaluate_rhs(extr, {.l = 2, .j = 2}, a, b),
                    unsupported_mode_error);

    const TheoremSpec& expl = find_theorem("spinhalf.same-l");
    CHECK_THROWS_AS(evaluate_lhs(expl, {.l = 2, .j = 4}, a, b),
                    std::domain_error);
    CHECK_THROWS_AS(residual(expl, {.l = -1, .j = HalfInt::half()}, a, b),
                    std::domain_error);
}

TEST_CASE("spot values from the evaluator contracts") {
    const Direction a(1.0, 0.5);
    const Direction b(2.0, 1.5);

    SECTION("classic sum against the Legendre closed form") {
        const TheoremSpec& s = find_theorem("scalar.classic");
        const Params p{.l = 7};
        const SpinorTensor lhs = evaluate_lhs(s, p, a, b);
        double x = 0.0;
        for (int k = 0; k < 3; ++k) x += a.n[k] * b.n[k];
        const PDeriv pd(7, 0, x);
        CHECK(std::abs(lhs.at({}) - cplx(15.0 / kFourPi * pd(7, 0))) <
              1e-12);
    }

    SECTION("spin-1 sum vanishes outside the j validity list") {
        const TheoremSpec& s = find_theorem("spin1.same-l");
        const Params p{.l = 3, .j = 5};
        REQUIRE(s.in_vanishing(p));
        CHECK(evaluate_lhs(s, p, a, b).max_abs() < 1e-14);
    }

    SECTION("first moment at l = 0 is an empty sum") {
        const TheoremSpec& s = find_theorem("moments.t1");
        CHECK(evaluate_lhs(s, {.l = 0}, a, b).max_abs() < 1e-15);
        CHECK(residual(s, {.l = 0}, a, b) < 1e-15);
    }

    SECTION("first moment with a on the z axis") {
        const Direction az(0.0, 0.0);
        const Direction bx(1.0, 0.0);
        const TheoremSpec& s = find_theorem("moments.t1");
        const Params p{.l = 3};
        CHECK(evaluate_lhs(s, p, az, bx).max_abs() < 1e-13);
        CHECK(evaluate_rhs(s, p, az, bx).max_abs() < 1e-13);
    }

    SECTION("spin-1/2 closed form collapses to a diagonal local limit") {
        const TheoremSpec& s = find_theorem("spinhalf.same-l");
        for (int l : {1, 2, 5}) {
            for (const HalfInt j :
                 {HalfInt(l) - HalfInt::half(), HalfInt(l) + HalfInt::half()}) {
                if (j.twice() < 1) continue;
                const Params p{.l = l, .j = j};
                const SpinorTensor r = evaluate_rhs(s, p, a, a);
                const double diag = (j.value() * 2.0 + 1.0) / (2.0 * kFourPi);
                CHECK(std::abs(r.at({0, 0}) - cplx(diag)) < 1e-12);
                CHECK(std::abs(r.at({1, 1}) - cplx(diag)) < 1e-12);
                CHECK(std::abs(r.at({0, 1})) < 1e-12);
                CHECK(std::abs(r.at({1, 0})) < 1e-12);
            }
        }
    }

    SECTION("parity-odd right sides vanish and the sums agree") {
        for (const char* id : {"scalar.cginverse", "local.t0"}) {
            const TheoremSpec& s = find_theorem(id);
            int odd_seen = 0;
            int odd_same_l = 0;
            for (const auto& p : s.enumerate(5)) {
                const int ln = p.l + p.dl;
                if ((p.l + p.t + ln) % 2 == 0) continue;
                ++odd_seen;
                if (p.dl == 0 && p.t % 2 == 1) ++odd_same_l;
                CAPTURE(p.str(s.uses));
                const Direction d = probe_dirs()[p.l % 3];
                CHECK(s.rhs(p, d, d).max_abs() < 1e-14);
                CHECK(s.lhs(p, d, d).max_abs() < 1e-11);
            }
            CAPTURE(id);
            CHECK(odd_seen > 0);
            CHECK(odd_same_l > 0);
        }
    }
}

TEST_CASE("oracle agreement across the registry up to l = 12") {
    SweepConfig cfg;
    cfg.l_max = 12;
    cfg.jobs = 4;
    const VerificationReport rep = sweep(cfg);

    CHECK(rep.total == rep.passed + rep.failed);
    CHECK(rep.failed == 0);
    CHECK(rep.total > 5000);

    int vanishing = 0;
    for (const auto& r : rep.records) {
        CAPTURE(r.id, r.params.str(r.uses), r.kind, r.residual);
        CHECK(r.pass);
        if (r.kind == "vanishing") {
            ++vanishing;
            CHECK(r.residual < 1e-11);
        }
    }
    CHECK(vanishing > 250);
}

TEST_CASE("swap relation holds at a tightened tolerance") {
    const TheoremSpec& s = find_theorem("scaten.swap");
    const auto pairs = make_pairs(7, 20);
    for (const auto& p : s.enumerate(8)) {
        CAPTURE(p.str(s.uses));
        double worst = 0.0;
        for (const auto& [a, b] : pairs)
            worst = std::max(worst, residual(s, p, a, b));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("local theorems are the b -> a limits of their parents") {
    const std::vector<std::pair<const char*, const char*>> table = {
        {"local.rank1", "scaten.rank1.b"},
        {"local.rank2.a", "scaten.rank2.a"},
        {"local.rank2.b", "scaten.rank2.c"},
        {"local.rank3.a", "scaten.rank3.b"},
        {"local.rank3.b", "scaten.rank3.d"},
        {"local.lz.a", "scaten.lz.a"},
        {"local.lz.b", "scaten.lz.b"},
        {"local.lzrank1.a", "scaten.lz2.a"},
        {"local.lzrank1.b", "scaten.lz2.b"},
        {"local.lzrank2.a", "scaten.lzrank2.a"},
        {"local.lzrank2.b", "scaten.lzrank2.b"},
        {"local.lzrank2.c", "scaten.lzrank2.c"},
        {"spinhalf.local.same-l", "spinhalf.same-l"},
        {"spinhalf.local.delta1", "spinhalf.delta1"},
        {"spin1.local.same-l", "spin1.same-l"},
        {"spin1.local.delta1", "spin1.delta1"},
        {"spin1.local.delta2", "spin1.delta2"},
        {"spin32.local.same-l", "spin32.same-l"},
        {"spin32.local.delta1", "spin32.delta1"},
        {"spin32.local.delta2", "spin32.delta2"},
        {"spin32.local.delta3", "spin32.delta3"},
        {"mixed.local.same-l", "mixed.same-l"},
        {"mixed.local.delta1", "mixed.delta1"},
        {"mixed.local.delta1x", "mixed.delta1x"},
        {"mixed.local.delta2", "mixed.delta2"},
        {"mixed.local.delta2x", "mixed.delta2x"},
        {"appendix.sumrule", "scalar.classic"},
        {"appendix.moments.t2", "moments.t2"},
        {"appendix.moments.t4", "moments.t4"},
        {"appendix.shift1.a", "scalar.shift1.a"},
        {"appendix.shift1.b", "scalar.shift1.b"},
        {"appendix.lzshift1", "scalar.lzshift1.b"},
        {"appendix.lz2shift1.b", "scalar.lz2shift1"},
        {"appendix.shift2.a", "scalar.shift2.a"},
        {"appendix.shift2.b", "scalar.shift2.b"},
        {"appendix.shift2.c", "scalar.shift2.c"},
    };
    for (const auto& [local_id, parent_id] : table) {
        CAPTURE(local_id, parent_id);
        const TheoremSpec& loc = find_theorem(local_id);
        const TheoremSpec& par = find_theorem(parent_id);
        int matched = 0;
        for (const auto& p : loc.enumerate(5)) {
            if (!par.in_domain(p)) continue;
            ++matched;
            CAPTURE(p.str(loc.uses));
            for (const Direction& d : probe_dirs()) {
                CHECK(rel_dist(loc.lhs(p, d, d), par.lhs(p, d, d)) < 1e-9);
                if (loc.mode == Mode::Explicit && par.mode == Mode::Explicit)
                    CHECK(rel_dist(loc.rhs(p, d, d), par.rhs(p, d, d)) <
                          1e-9);
            }
        }
        CHECK(matched > 0);
    }
}

TEST_CASE("mixed same-l sum is the conjugate transpose of its exchange") {
    const Direction a(1.0, 0.5);
    const Direction b(2.2, 4.0);
    for (int l = 1; l <= 4; ++l) {
        for (int dt : {-1, 1}) {
            const HalfInt j = HalfInt::from_twice(2 * l + dt);
            CAPTURE(l, j.str());
            const SpinorTensor t1 = pair_sum(l, HalfInt::from_twice(3), l,
                                             HalfInt::half(), j, a, b);
            const SpinorTensor t2 = pair_sum(l, HalfInt::half(), l,
                                             HalfInt::from_twice(3), j, b, a);
            REQUIRE(t1.dims() == std::vector<int>{3, 2, 2});
            REQUIRE(t2.dims() == std::vector<int>{2, 3, 2});
            double dev = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int A = 0; A < 2; ++A)
                    for (int B = 0; B < 2; ++B)
                        dev = std::max(dev,
                                       std::abs(t1.at({i, A, B}) -
                                                std::conj(t2.at({B, i, A}))));
            CHECK(dev < 1e-11);
        }
    }
}
