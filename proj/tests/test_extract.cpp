// Tests for the least-squares coefficient extraction: fit quality across
// the open-coefficient identities, frozen coefficient values, the trace
// rule for the leading same-l coefficient, seed independence and the
// documented failure modes.
#include "spinsh/spinsh.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace spinsh;
using namespace spinsh::catalog;

namespace {

std::vector<std::pair<Direction, Direction>> sample_pairs(
    const TheoremSpec& spec, std::uint64_t seed = 42, int count = 12) {
    const auto pairs = make_pairs(seed, count);
    return spec.local_only ? localize(pairs) : pairs;
}

ExtractedCoefficients run_extract(const std::string& id, const Params& p,
                                  std::uint64_t seed = 42) {
    const auto& spec = find_theorem(id);
    return extract_coefficients(spec, p, sample_pairs(spec, seed));
}

} // namespace

TEST_CASE("every extraction theorem fits its structures to machine precision") {
    const std::vector<std::string> ids = {
        "spin1.same-l",  "spin1.delta1",  "spin32.same-l",
        "spin32.delta1", "spin32.delta2", "mixed.same-l",
        "mixed.delta1",  "mixed.delta1x", "scalar.ladder"};
    for (const auto& id : ids) {
        const auto& spec = find_theorem(id);
        const auto pairs = sample_pairs(spec);
        int tuples = 0;
        for (const auto& p : spec.enumerate(6)) {
            if (p.t > 4) continue;
            CAPTURE(id, p.str(spec.uses));
            const auto ex = extract_coefficients(spec, p, pairs);
            CHECK(ex.residual < 1e-9);
            CHECK(ex.spread < 1e-8);
            CHECK(ex.max_imag < 1e-9);
            REQUIRE(!ex.coefficients.empty());
            for (std::size_t k = 0; k < ex.coefficients.size(); ++k) {
                const std::string want = k < spec.coeff_labels.size()
                                             ? spec.coeff_labels[k]
                                             : "c" + std::to_string(k);
                CHECK(ex.coefficients[k].first == want);
            }
            ++tuples;
        }
        CAPTURE(id);
        CHECK(tuples > 0);
    }
}

TEST_CASE("extracted coefficients match their frozen values") {
    struct Frozen {
        std::string id;
        Params p;
        std::vector<double> coeffs;
    };
    const std::vector<Frozen> table = {
        {"spin1.same-l", {.l = 1, .j = 1}, {1.0 / 3.0, -0.25, -0.5}},
        {"spin1.delta1",
         {.l = 1, .dl = 1, .j = 1},
         {-std::sqrt(3.0) / 4.0, std::sqrt(3.0) / 2.0}},
        {"spin1.delta1",
         {.l = 1, .dl = 1, .j = 2},
         {-0.9682458366, -0.6454972244}},
        {"spin32.same-l",
         {.l = 2, .j = HalfInt::from_twice(5)},
         {0.3, -0.02, -1.0 / 14.0, -1.0 / 35.0}},
        {"spin32.delta1",
         {.l = 2, .dl = 1, .j = HalfInt::from_twice(7)},
         {-0.5237229366, -0.2182178902, -0.0484928645}},
        {"spin32.delta1",
         {.l = 2, .dl = 1, .j = HalfInt::from_twice(5)},
         {-0.3824731550, 0.1195228609, 0.1195228609}},
        {"spin32.delta1",
         {.l = 2, .dl = 1, .j = HalfInt::from_twice(3)},
         {-0.1788854382, 0.1490711985, -0.0993807990}},
        {"spin32.delta2",
         {.l = 2, .dl = 2, .j = HalfInt::from_twice(7)},
         {0.7453559925, 0.2981423970}},
        {"spin32.delta2",
         {.l = 2, .dl = 2, .j = HalfInt::from_twice(5)},
         {0.4082482905, -0.4082482905}},
        {"mixed.same-l",
         {.l = 1, .j = HalfInt::from_twice(3)},
         {1.0540925534, 0.8432740427}},
        {"mixed.same-l",
         {.l = 1, .j = HalfInt::from_twice(1)},
         {1.0 / 3.0, -4.0 / 3.0}},
        {"mixed.delta1",
         {.l = 1, .dl = 1, .j = HalfInt::from_twice(3)},
         {-std::sqrt(2.0), -1.8856180832}},
        {"mixed.delta1x",
         {.l = 1, .dl = 1, .j = HalfInt::from_twice(5)},
         {2.3237900077, 1.0327955590}},
        {"spin1.local.same-l", {.l = 2, .j = 2}, {1.0 / 3.0, -1.0 / 6.0}},
        {"spin32.local.same-l",
         {.l = 2, .j = HalfInt::from_twice(5)},
         {0.3, -1.0 / 14.0}},
        {"spin32.local.delta1",
         {.l = 2, .dl = 1, .j = HalfInt::from_twice(5)},
         {-0.3824731550, 0.1195228609}},
        {"spin32.local.delta2",
         {.l = 2, .dl = 2, .j = HalfInt::from_twice(7)},
         {0.7453559925}},
        {"mixed.local.same-l",
         {.l = 2, .j = HalfInt::from_twice(5)},
         {0.3023715784}},
        {"mixed.local.delta1",
         {.l = 1, .dl = -1, .j = HalfInt::from_twice(3)},
         {2.0 * std::sqrt(2.0)}},
        {"mixed.local.delta1x",
         {.l = 1, .dl = -1, .j = HalfInt::from_twice(1)},
         {-2.0}},
        {"mixed.local.delta1x",
         {.l = 2, .dl = 1, .j = HalfInt::from_twice(5)},
         {0.7559289460}},
        {"scalar.ladder", {.l = 2, .m = 1, .t = 1}, {1.0}},
        {"scalar.ladder", {.l = 2, .m = -1, .t = 2}, {1.0, 1.0}},
        {"scalar.ladder", {.l = 3, .m = 1, .t = 3}, {1.0, 3.0}},
        {"scalar.ladder", {.l = 4, .m = 1, .t = 4}, {1.0, 6.0, 3.0}},
    };
    for (const auto& f : table) {
        const auto& spec = find_theorem(f.id);
        CAPTURE(f.id, f.p.str(spec.uses));
        REQUIRE(spec.in_domain(f.p));
        const auto ex = run_extract(f.id, f.p);
        REQUIRE(ex.coefficients.size() >= f.coeffs.size());
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
            CAPTURE(k, ex.coefficients[k].first);
            CHECK(std::abs(ex.coefficients[k].second - f.coeffs[k]) < 1e-9);
        }
        for (std::size_t k = f.coeffs.size(); k < ex.coefficients.size(); ++k)
            CHECK(ex.coefficients[k].second == 0.0);
    }
}

TEST_CASE("a degenerate structure is dropped and reported as exactly zero") {
    const auto ex = run_extract("spin1.local.same-l", {.l = 0, .j = 1});
    REQUIRE(ex.coefficients.size() == 2);
    CHECK(std::abs(ex.coefficients[0].second - 1.0) < 1e-12);
    CHECK(ex.coefficients[1].second == 0.0);
    CHECK(ex.residual < 1e-12);
}

TEST_CASE("the leading same-l coefficient carries the trace rule") {
    for (const std::string id : {"spin1.same-l", "spin32.same-l"}) {
        const auto& spec = find_theorem(id);
        const auto pairs = sample_pairs(spec);
        const double two_s_plus_1 = id == "spin1.same-l" ? 3.0 : 4.0;
        int tuples = 0;
        for (const auto& p : spec.enumerate(8)) {
            CAPTURE(id, p.str(spec.uses));
            const auto ex = extract_coefficients(spec, p, pairs);
            const double expected =
                (p.j.value() * 2.0 + 1.0) / (two_s_plus_1 * (2.0 * p.l + 1.0));
            CHECK(std::abs(ex.coefficients[0].second - expected) < 1e-9);
            ++tuples;
        }
        CAPTURE(id);
        CHECK(tuples >= 15);
    }
}

TEST_CASE("extraction does not depend on the sampled directions") {
    const std::vector<std::pair<std::string, Params>> probes = {
        {"spin1.same-l", {.l = 3, .j = 3}},
        {"spin32.delta1", {.l = 3, .dl = 1, .j = HalfInt::from_twice(7)}},
        {"mixed.delta1x", {.l = 2, .dl = 1, .j = HalfInt::from_twice(7)}},
        {"mixed.local.delta1", {.l = 1, .dl = -1, .j = HalfInt::from_twice(3)}},
        {"scalar.ladder", {.l = 3, .m = -1, .t = 2}},
    };
    for (const auto& [id, p] : probes) {
        CAPTURE(id);
        const auto first = run_extract(id, p, 101);
        const auto second = run_extract(id, p, 202);
        REQUIRE(first.coefficients.size() == second.coefficients.size());
        for (std::size_t k = 0; k < first.coefficients.size(); ++k)
            CHECK(std::abs(first.coefficients[k].second -
                           second.coefficients[k].second) < 1e-8);
    }
}

TEST_CASE("extraction rejects bad calls with the documented exceptions") {
    const auto pairs = make_pairs(42, 12);

    SECTION("closed-form theorems have nothing to extract") {
        CHECK_THROWS_AS(extract_coefficients(find_theorem("scalar.classic"),
                                             {.l = 2}, pairs),
                        unsupported_mode_error);
    }

    SECTION("parameters outside the domain are refused") {
        CHECK_THROWS_AS(extract_coefficients(find_theorem("spin1.same-l"),
                                             {.l = 2, .j = 5}, pairs),
                        std::domain_error);
    }

    SECTION("an empty sample set is refused") {
        CHECK_THROWS_AS(extract_coefficients(find_theorem("spin1.same-l"),
                                             {.l = 2, .j = 2}, {}),
                        std::invalid_argument);
    }

    SECTION("too few scalar equations for the coefficient count") {
        CHECK_THROWS_AS(
            extract_coefficients(find_theorem("scalar.ladder"),
                                 {.l = 4, .m = 1, .t = 4}, make_pairs(42, 0)),
            std::invalid_argument);
    }
}

TEST_CASE("collinear or vanishing structures raise conditioning errors") {
    const auto pairs = make_pairs(42, 6);
    TheoremSpec synthetic;
    synthetic.id = "synthetic";
    synthetic.mode = Mode::Extraction;
    synthetic.coeff_labels = {"A", "B"};
    synthetic.in_domain = [](const Params&) { return true; };
    synthetic.lhs = [](const Params&, const Direction& a, const Direction&) {
        return SpinorTensor::scalar(cplx(a.n[2], 0.0));
    };

    SECTION("two identical structures cannot be separated") {
        synthetic.basis = [](const Params&, const Direction& a,
                             const Direction&) {
            const auto s = SpinorTensor::scalar(cplx(a.n[2], 0.0));
            return std::vector<SpinorTensor>{s, s};
        };
        CHECK_THROWS_AS(extract_coefficients(synthetic, {}, pairs),
                        conditioning_error);
        CHECK_THROWS_WITH(extract_coefficients(synthetic, {}, pairs),
                          Catch::Matchers::ContainsSubstring("independent"));
    }

    SECTION("structures that all vanish leave nothing to fit") {
        synthetic.basis = [](const Params&, const Direction&,
                             const Direction&) {
            return std::vector<SpinorTensor>(2, SpinorTensor::scalar(0.0));
        };
        CHECK_THROWS_AS(extract_coefficients(synthetic, {}, pairs),
                        conditioning_error);
    }
}
