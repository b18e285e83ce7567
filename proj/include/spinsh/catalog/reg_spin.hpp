// Spin-spin identities: pair sums of two spin-carrying harmonics over a
// shared total angular momentum, for the (1/2, 1/2), (1, 1), (3/2, 3/2) and
// mixed (3/2, 1/2) spin pairs, together with their single-direction limits.
#pragma once

#include "spinsh/catalog/helpers.hpp"
#include "spinsh/catalog/types.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <utility>
#include <vector>

namespace spinsh::catalog::detail {

/// [i A B] = sum_k X32[i A k C] w_k delta_{C B}.
inline SpinorTensor x_vec(const SpinorTensor& w) {
    return SpinorTensor::contracted(x32(), {2}, w, {0});
}

/// [A i B] = sum_k w_k X32[k A i B] (spinor slot first).
inline SpinorTensor vec_x(const SpinorTensor& w) {
    return SpinorTensor::contracted(x32(), {0}, w, {0});
}

/// [i A B] = sum_{k p C} X32[i A k C] T[k p] sigma_p[C B].
inline SpinorTensor x_t_sigma(const SpinorTensor& t) {
    const SpinorTensor step = SpinorTensor::contracted(x32(), {2}, t, {0});
    return SpinorTensor::contracted(step, {3, 2}, pauli3(), {0, 1});
}

/// [A i B] = sum_{k p C} sigma_k[A C] T[k p] X32[p C i B] for symmetric T.
inline SpinorTensor sigma_t_x(const SpinorTensor& t) {
    const SpinorTensor step = SpinorTensor::contracted(pauli3(), {0}, t, {0});
    return SpinorTensor::contracted(step, {2, 1}, x32(), {0, 1});
}

inline void add_spin(std::vector<TheoremSpec>& out) {
    {
        TheoremSpec s;
        s.id = "spinhalf.same-l";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1half2";
        s.domain_summary = "l >= 0, j = l +- 1/2 with j >= 1/2";
        s.uses = {.j = true};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            return p.l >= 0 && t2 >= 1 && std::abs(t2 - 2 * p.l) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t2 : {2 * l + 1, 2 * l - 1})
                    if (t2 >= 1)
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return pair_sum(p.l, HalfInt::half(), p.l, HalfInt::half(), p.j, a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 1, g.x);
            const double jd = p.j.value();
            return (jd + 0.5) / kFourPi * P(p.l, 0) * spinor_identity() +
                   kI * (2.0 * (jd - p.l)) / kFourPi * P(p.l, 1) *
                       sigma_dot(vec3(g.v));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spinhalf.delta1";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1half3";
        s.domain_summary =
            "dl = +1 with l >= 0, dl = -1 with l >= 1; j = l + dl/2";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const HalfInt j = HalfInt::from_twice(2 * p.l + p.dl);
            return pair_sum(p.l + p.dl, HalfInt::half(), p.l, HalfInt::half(),
                            j, a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 1, g.x);
            return (-p.dl / kFourPi) *
                   (P(l1, 1) * sigma_dot(vec3(g.b)) -
                    P(p.l, 1) * sigma_dot(vec3(g.a)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spinhalf.local.same-l";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1halflocal";
        s.domain_summary = "l >= 0, j = l +- 1/2 with j >= 1/2";
        s.local_only = true;
        s.uses = {.j = true};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            return p.l >= 0 && t2 >= 1 && std::abs(t2 - 2 * p.l) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t2 : {2 * l + 1, 2 * l - 1})
                    if (t2 >= 1)
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return pair_sum(p.l, HalfInt::half(), p.l, HalfInt::half(), p.j, a, a);
        };
        s.rhs = [](const Params& p, const Direction&, const Direction&) {
            return (2.0 * p.j.value() + 1.0) / (2.0 * kFourPi) *
                   spinor_identity();
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spinhalf.local.delta1";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1halflocal";
        s.domain_summary =
            "dl = +1 with l >= 0, dl = -1 with l >= 1; j = l + dl/2";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const HalfInt j = HalfInt::from_twice(2 * p.l + p.dl);
            return pair_sum(p.l + p.dl, HalfInt::half(), p.l, HalfInt::half(),
                            j, a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            return -(2.0 * p.l + p.dl + 1.0) / (2.0 * kFourPi) *
                   sigma_dot(vec3(a.n));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin1.same-l";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add1-1";
        s.domain_summary =
            "l >= 1, integer j in {l-1, l, l+1} with j >= 1; "
            "out-of-triangle j vanish";
        s.uses = {.j = true};
        s.coeff_labels = {"C_0", "C_1", "C_2"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 % 2 != 0) return false;
            const auto j = t2 / 2;
            return p.l >= 1 && j >= 1 && std::abs(j - p.l) <= 1;
        };
        s.in_vanishing = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 % 2 != 0) return false;
            const auto j = t2 / 2;
            return p.l >= 1 && j >= 0 && j >= p.l - 3 && j <= p.l + 3 &&
                   (j < p.l - 1 || j > p.l + 1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int j : {l - 1, l, l + 1})
                    if (j >= 1) v.push_back({.l = l, .j = HalfInt(j)});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int j : {l - 3, l - 2, l + 2, l + 3})
                    if (j >= 0) v.push_back({.l = l, .j = HalfInt(j)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return pair_sum(p.l, HalfInt(1), p.l, HalfInt(1), p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 2, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            return std::vector<SpinorTensor>{
                pref * P(p.l, 0) * identity3(),
                pref * P(p.l, 1) * (outer2(g.a, g.b) - outer2(g.b, g.a)),
                (2.0 * p.l + 1.0) / (2.0 * kFourPi) *
                    (P(p.l, 1) * braces0({g.a, g.b}) +
                     P(p.l, 2) * braces0({g.v, g.v})),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin1.delta1";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add1-2";
        s.domain_summary =
            "dl = +-1 with l1 = l + dl >= 1, integer j between l and l1, "
            "j >= 1; adjacent j vanish";
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1", "C_2"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 % 2 != 0 || std::abs(p.dl) != 1) return false;
            const auto j = t2 / 2;
            const int l1 = p.l + p.dl;
            return l1 >= 1 && j >= 1 && j >= std::min(p.l, l1) &&
                   j <= std::max(p.l, l1);
        };
        s.in_vanishing = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 % 2 != 0 || std::abs(p.dl) != 1) return false;
            const auto j = t2 / 2;
            const int l1 = p.l + p.dl;
            return l1 >= 1 && j >= 0 &&
                   (j == std::min(p.l, l1) - 1 || j == std::max(p.l, l1) + 1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 1 : 2; l <= lm; ++l)
                    for (int j : {std::min(l, l + dl), std::max(l, l + dl)})
                        if (j >= 1)
                            v.push_back({.l = l, .dl = dl, .j = HalfInt(j)});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 1 : 2; l <= lm; ++l)
                    for (int j :
                         {std::min(l, l + dl) - 1, std::max(l, l + dl) + 1})
                        if (j >= 0)
                            v.push_back({.l = l, .dl = dl, .j = HalfInt(j)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return pair_sum(p.l + p.dl, HalfInt(1), p.l, HalfInt(1), p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const cplx c1 = -kI * (2.0 * p.dl) / (2.0 * kFourPi);
            const cplx c2 = -kI * (1.0 * p.dl) / (2.0 * kFourPi);
            return std::vector<SpinorTensor>{
                c1 * eps_dot(P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a)),
                c2 * (P(l1, 2) * braces({g.v, g.b}) -
                      P(p.l, 2) * braces({g.v, g.a})),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin1.delta2";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1-3";
        s.domain_summary =
            "dl = +2 with l >= 0, dl = -2 with l >= 2; j = l + dl/2";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int j = p.l + p.dl / 2;
            return pair_sum(p.l + p.dl, HalfInt(1), p.l, HalfInt(1),
                            HalfInt(j), a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l2 = p.l + p.dl;
            const int l1 = p.l + p.dl / 2;
            const int j = l1;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(std::max(p.l, l2), 2, g.x);
            const double fac = -1.0 / kFourPi / std::sqrt(j * (j + 1.0));
            return fac * (P(l2, 2) * paren0(g.b, g.b) -
                          P(l1, 2) * braces0({g.b, g.a}) +
                          P(p.l, 2) * paren0(g.a, g.a));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin1.local.same-l";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add1-local";
        s.domain_summary =
            "integer j in {l-1, l, l+1} with j >= 0, except j = l = 0";
        s.local_only = true;
        s.uses = {.j = true};
        s.coeff_labels = {"C_0", "C_2"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 % 2 != 0) return false;
            const auto j = t2 / 2;
            return p.l >= 0 && j >= 0 && std::abs(j - p.l) <= 1 &&
                   !(j == 0 && p.l == 0);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int j : {l - 1, l, l + 1})
                    if (j >= 0 && !(j == 0 && l == 0))
                        v.push_back({.l = l, .j = HalfInt(j)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return pair_sum(p.l, HalfInt(1), p.l, HalfInt(1), p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = a.n;
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            return std::vector<SpinorTensor>{
                pref * identity3(),
                pref * 0.25 * (p.l * (p.l + 1.0)) * braces0({pv, pv}),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin1.local.delta1";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1-local";
        s.domain_summary =
            "dl = +-1 with l1 = l + dl >= 1, integer j between l and l1 "
            "inside both spin-1 triangles";
        s.local_only = true;
        s.uses = {.dl = true, .j = true};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 % 2 != 0 || std::abs(p.dl) != 1) return false;
            const auto j = t2 / 2;
            const int l1 = p.l + p.dl;
            return l1 >= 1 && j >= 0 && j >= std::min(p.l, l1) &&
                   j <= std::max(p.l, l1) && std::abs(p.l - 1) <= j &&
                   std::abs(l1 - 1) <= j;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 2; l <= lm; ++l)
                    for (int j : {std::min(l, l + dl), std::max(l, l + dl)})
                        if (j >= 0 && std::abs(l - 1) <= j &&
                            std::abs(l + dl - 1) <= j)
                            v.push_back({.l = l, .dl = dl, .j = HalfInt(j)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return pair_sum(p.l + p.dl, HalfInt(1), p.l, HalfInt(1), p.j, a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double lav = p.l + 0.5 * p.dl;
            const double jd = p.j.value();
            const cplx fac =
                kI / (2.0 * kFourPi) *
                std::sqrt((2.0 * jd + 1.0) * (2.0 * jd - lav + 0.5));
            return fac * eps_dot(vec3(a.n));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin1.local.delta2";
        s.family = Family::SpinSpin;
        s.citation = "eq:add1-local";
        s.domain_summary =
            "dl = +2 with l >= 0, dl = -2 with l >= 2; j = l + dl/2";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const int j = p.l + p.dl / 2;
            return pair_sum(p.l + p.dl, HalfInt(1), p.l, HalfInt(1),
                            HalfInt(j), a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int j = p.l + p.dl / 2;
            const auto pv = a.n;
            const double fac =
                -3.0 / (2.0 * kFourPi) * std::sqrt(j * (j + 1.0)) * 0.5;
            return fac * braces0({pv, pv});
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.same-l";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add3hal1";
        s.domain_summary =
            "l >= 0, 2j in {2l-3, 2l-1, 2l+1, 2l+3} with j >= |l - 3/2|; "
            "out-of-triangle j vanish";
        s.uses = {.j = true};
        s.coeff_labels = {"C_0", "C_1", "C_2", "C_3"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            return p.l >= 0 && t2 >= 1 && t2 % 2 != 0 &&
                   std::abs(t2 - 2 * p.l) <= 3 &&
                   t2 >= std::abs(2 * p.l - 3);
        };
        s.in_vanishing = [](const Params& p) {
            const auto t2 = p.j.twice();
            const auto d = std::abs(t2 - 2 * p.l);
            if (p.l < 0 || t2 < 1 || t2 % 2 == 0) return false;
            return d == 5 || d == 7 || (d <= 3 && t2 < std::abs(2 * p.l - 3));
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t2 : {2 * l + 3, 2 * l + 1, 2 * l - 1, 2 * l - 3})
                    if (t2 >= 1 && t2 >= std::abs(2 * l - 3))
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t2 : {2 * l + 5, 2 * l + 7, 2 * l - 5, 2 * l - 7,
                               2 * l - 1, 2 * l - 3})
                    if (t2 >= 1 && (std::abs(t2 - 2 * l) >= 5 ||
                                    t2 < std::abs(2 * l - 3)))
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const HalfInt s32 = HalfInt::from_twice(3);
            return pair_sum(p.l, s32, p.l, s32, p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 3, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            const SpinorTensor t2 = braces0({g.v, g.v}) * P(p.l, 2) +
                                    braces0({g.a, g.b}) * P(p.l, 1);
            const SpinorTensor t3 = braces0({g.v, g.v, g.v}) * P(p.l, 3) +
                                    3.0 * braces0({g.a, g.b, g.v}) * P(p.l, 2);
            return std::vector<SpinorTensor>{
                pref * P(p.l, 0) *
                    sandwich32(block(identity3(), spinor_identity())),
                pref * 1.5 * kI * P(p.l, 1) *
                    sandwich32(block(identity3(), sigma_dot(vec3(g.v)))),
                pref * 1.5 * sandwich32(block(t2, spinor_identity())),
                pref * 0.25 * kI * sandwich32(block_sigma(t3)),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.delta1";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add3hal2";
        s.domain_summary =
            "dl = +-1 with l1 = l + dl >= 0, 2j - 2l - dl in {-2, 0, 2}, "
            "j >= 3/2; adjacent j vanish";
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1", "C_2", "C_3"};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.dl) != 1 || p.l + p.dl < 0) return false;
            const auto t2 = p.j.twice();
            const auto d = t2 - 2 * p.l - p.dl;
            return t2 >= 3 && std::abs(d) <= 2 && d % 2 == 0;
        };
        s.in_vanishing = [](const Params& p) {
            if (std::abs(p.dl) != 1 || p.l + p.dl < 0) return false;
            const auto t2 = p.j.twice();
            const auto d = t2 - 2 * p.l - p.dl;
            return t2 >= 1 && std::abs(d) == 4;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int d : {2, 0, -2}) {
                        const int t2 = 2 * l + dl + d;
                        if (t2 >= 3)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
                    }
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int d : {4, -4}) {
                        const int t2 = 2 * l + dl + d;
                        if (t2 >= 1)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
                    }
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const HalfInt s32 = HalfInt::from_twice(3);
            return pair_sum(p.l + p.dl, s32, p.l, s32, p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(std::max(p.l, l1), 3, g.x);
            const double pref = (1.0 * p.dl) / kFourPi;
            const SpinorTensor w =
                P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a);
            const SpinorTensor t2 = braces0({g.b, g.v}) * P(l1, 2) -
                                    braces0({g.a, g.v}) * P(p.l, 2);
            const SpinorTensor t3 = braces0({g.b, g.v, g.v}) * P(l1, 3) -
                                    braces0({g.a, g.v, g.v}) * P(p.l, 3) +
                                    braces0({g.b, g.b, g.a}) * P(l1, 2) -
                                    braces0({g.a, g.a, g.b}) * P(p.l, 2);
            return std::vector<SpinorTensor>{
                pref * 1.5 * sandwich32(block(identity3(), sigma_dot(w))),
                pref * (-1.5) * kI *
                    sandwich32(block(t2, spinor_identity())),
                pref * 0.25 * sandwich32(block_sigma(t3)),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.delta2";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add3hal3";
        s.domain_summary =
            "dl = +-2 with l2 = l + dl >= 0, 2j - 2l - dl in {-1, +1}, "
            "j >= 3/2";
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_2", "C_3"};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.dl) != 2 || p.l + p.dl < 0) return false;
            const auto t2 = p.j.twice();
            return t2 >= 3 && std::abs(t2 - 2 * p.l - p.dl) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {2, -2})
                for (int l = (dl == 2) ? 0 : 2; l <= lm; ++l)
                    for (int d : {1, -1}) {
                        const int t2 = 2 * l + dl + d;
                        if (t2 >= 3)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
                    }
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const HalfInt s32 = HalfInt::from_twice(3);
            return pair_sum(p.l + p.dl, s32, p.l, s32, p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const int l2 = p.l + p.dl;
            const int l1 = p.l + p.dl / 2;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(std::max(p.l, l2), 3, g.x);
            const double pref = -1.0 / (kFourPi * (2.0 * l1 + 1.0));
            const SpinorTensor t2 = braces0({g.b, g.b}) * P(l2, 2) +
                                    braces0({g.a, g.a}) * P(p.l, 2) -
                                    2.0 * braces0({g.b, g.a}) * P(l1, 2);
            const SpinorTensor t3 = braces0({g.b, g.b, g.v}) * P(l2, 3) +
                                    braces0({g.a, g.a, g.v}) * P(p.l, 3) -
                                    2.0 * braces0({g.b, g.a, g.v}) * P(l1, 3);
            return std::vector<SpinorTensor>{
                pref * 1.5 * sandwich32(block(t2, spinor_identity())),
                pref * 0.25 * kI * sandwich32(block_sigma(t3)),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.delta3";
        s.family = Family::SpinSpin;
        s.citation = "eq:add3hal4";
        s.domain_summary =
            "dl = +3 with l >= 0, dl = -3 with l >= 3; j = l + dl/2";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 3 && p.l >= 0) || (p.dl == -3 && p.l >= 3);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{3, 0}, {-3, 3}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const HalfInt s32 = HalfInt::from_twice(3);
            const HalfInt j = HalfInt::from_twice(2 * p.l + p.dl);
            return pair_sum(p.l + p.dl, s32, p.l, s32, j, a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int sgn = (p.dl > 0) ? 1 : -1;
            const int l1 = p.l + sgn;
            const int l2 = p.l + 2 * sgn;
            const int l3 = p.l + p.dl;
            const double jd = p.l + 1.5 * sgn;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(std::max(p.l, l3), 3, g.x);
            const SpinorTensor t =
                braces0({g.b, g.b, g.b}) * (P(l3, 3) / 3.0) -
                braces0({g.b, g.b, g.a}) * P(l2, 3) +
                braces0({g.b, g.a, g.a}) * P(l1, 3) -
                braces0({g.a, g.a, g.a}) * (P(p.l, 3) / 3.0);
            const double fac =
                sgn / kFourPi / ((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0)) *
                std::sqrt(jd * (jd + 1.0) / ((jd - 0.5) * (jd + 1.5)));
            return fac * sandwich32(block_sigma_mid(t));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.local.same-l";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add3hal-local";
        s.domain_summary =
            "l >= 0, 2j in {2l-3, 2l-1, 2l+1, 2l+3} with j >= 3/2";
        s.local_only = true;
        s.uses = {.j = true};
        s.coeff_labels = {"C_0", "C_2"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            return p.l >= 0 && t2 >= 3 && t2 % 2 != 0 &&
                   std::abs(t2 - 2 * p.l) <= 3;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t2 : {2 * l + 3, 2 * l + 1, 2 * l - 1, 2 * l - 3})
                    if (t2 >= 3)
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const HalfInt s32 = HalfInt::from_twice(3);
            return pair_sum(p.l, s32, p.l, s32, p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = a.n;
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            return std::vector<SpinorTensor>{
                pref * sandwich32(block(identity3(), spinor_identity())),
                pref * 0.75 * (p.l * (p.l + 1.0)) *
                    sandwich32(block(braces0({pv, pv}), spinor_identity())),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.local.delta1";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add3hal-local";
        s.domain_summary =
            "dl = +-1 with l1 = l + dl >= 0, 2j - 2l - dl in {-2, 0, 2}, "
            "j >= 3/2";
        s.local_only = true;
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1", "C_3"};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.dl) != 1 || p.l + p.dl < 0) return false;
            const auto t2 = p.j.twice();
            const auto d = t2 - 2 * p.l - p.dl;
            return t2 >= 3 && std::abs(d) <= 2 && d % 2 == 0;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int d : {2, 0, -2}) {
                        const int t2 = 2 * l + dl + d;
                        if (t2 >= 3)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
                    }
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const HalfInt s32 = HalfInt::from_twice(3);
            return pair_sum(p.l + p.dl, s32, p.l, s32, p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl;
            const auto pv = a.n;
            const double pref = (l1 + p.l + 1.0) / (4.0 * kFourPi);
            return std::vector<SpinorTensor>{
                pref * 3.0 *
                    sandwich32(block(identity3(), sigma_dot(vec3(pv)))),
                pref / 16.0 * ((l1 + p.l - 1.0) * (l1 + p.l + 3.0)) *
                    sandwich32(block_sigma(braces0({pv, pv, pv}))),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.local.delta2";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add3hal-local";
        s.domain_summary =
            "dl = +-2 with l2 = l + dl >= 0, 2j - 2l - dl in {-1, +1}, "
            "j >= 3/2";
        s.local_only = true;
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_2"};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.dl) != 2 || p.l + p.dl < 0) return false;
            const auto t2 = p.j.twice();
            return t2 >= 3 && std::abs(t2 - 2 * p.l - p.dl) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {2, -2})
                for (int l = (dl == 2) ? 0 : 2; l <= lm; ++l)
                    for (int d : {1, -1}) {
                        const int t2 = 2 * l + dl + d;
                        if (t2 >= 3)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
                    }
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const HalfInt s32 = HalfInt::from_twice(3);
            return pair_sum(p.l + p.dl, s32, p.l, s32, p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl / 2;
            const auto pv = a.n;
            const double fac = -9.0 / (4.0 * kFourPi) *
                               (l1 * (l1 + 1.0) / (2.0 * l1 + 1.0));
            return std::vector<SpinorTensor>{
                fac * sandwich32(
                          block(braces0({pv, pv}), spinor_identity())),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "spin32.local.delta3";
        s.family = Family::SpinSpin;
        s.citation = "eq:add3hal-local";
        s.domain_summary =
            "dl = +3 with l >= 0, dl = -3 with l >= 3; j = l + dl/2";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 3 && p.l >= 0) || (p.dl == -3 && p.l >= 3);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{3, 0}, {-3, 3}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const HalfInt s32 = HalfInt::from_twice(3);
            const HalfInt j = HalfInt::from_twice(2 * p.l + p.dl);
            return pair_sum(p.l + p.dl, s32, p.l, s32, j, a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int sgn = p.dl / 3;
            const int l1 = p.l + sgn;
            const int l2 = p.l + 2 * sgn;
            const double jd = p.l + 1.5 * sgn;
            const auto pv = a.n;
            const double fac =
                5.0 / (48.0 * kFourPi) * std::sqrt(2.0 * jd + 1.0) /
                ((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0)) *
                std::sqrt((2.0 * jd + 3.0) * (2.0 * jd + 2.0) *
                          (2.0 * jd + 1.0) * (2.0 * jd) * (2.0 * jd - 1.0));
            return fac * sandwich32(block_sigma(braces0({pv, pv, pv})));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.same-l";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add13half1";
        s.domain_summary =
            "l >= 1, j = l +- 1/2; j = l +- 3/2 and the l = 0 tuple vanish";
        s.uses = {.j = true};
        s.coeff_labels = {"C_1", "C_2"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            return p.l >= 1 && t2 >= 1 && std::abs(t2 - 2 * p.l) == 1;
        };
        s.in_vanishing = [](const Params& p) {
            const auto t2 = p.j.twice();
            if (t2 < 1 || t2 % 2 == 0) return false;
            if (p.l == 0 && t2 == 1) return true;
            return std::abs(t2 - 2 * p.l) == 3;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int t2 : {2 * l + 1, 2 * l - 1})
                    v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            v.push_back({.l = 0, .j = HalfInt::from_twice(1)});
            for (int l = 0; l <= lm; ++l)
                for (int t2 : {2 * l + 3, 2 * l - 3})
                    if (t2 >= 1)
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return pair_sum(p.l, HalfInt::from_twice(3), p.l, HalfInt::half(),
                            p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 2, g.x);
            const double pref =
                (2.0 * p.l + 1.0) / (2.0 * kFourPi) * std::sqrt(1.5);
            const SpinorTensor t2 = braces0({g.v, g.v}) * P(p.l, 2) +
                                    braces0({g.a, g.b}) * P(p.l, 1);
            return std::vector<SpinorTensor>{
                pref * kI * P(p.l, 1) * x_vec(vec3(g.v)),
                (-pref / 4.0) * x_t_sigma(t2),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.delta1";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add13half2";
        s.domain_summary = "dl = +-1 with l1 = l + dl >= 1, j = l +- 1/2";
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1", "C_2"};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.dl) != 1 || p.l + p.dl < 1) return false;
            const auto t2 = p.j.twice();
            return t2 >= 1 && std::abs(t2 - 2 * p.l) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 2; l <= lm; ++l)
                    for (int t2 : {2 * l + 1, 2 * l - 1})
                        if (t2 >= 1)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return pair_sum(p.l + p.dl, HalfInt::from_twice(3), p.l,
                            HalfInt::half(), p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const double pref =
                (1.0 * p.dl) / (2.0 * kFourPi) * std::sqrt(1.5);
            const SpinorTensor w =
                P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a);
            const SpinorTensor t2 = braces({g.b, g.v}) * P(l1, 2) -
                                    braces({g.a, g.v}) * P(p.l, 2);
            return std::vector<SpinorTensor>{
                pref * x_vec(w),
                pref * 0.25 * kI * x_t_sigma(t2),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.delta1x";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add13half2x";
        s.domain_summary =
            "dl = +-1 with l1 = l + dl >= 1, j = l1 +- 1/2 inside the "
            "spin-3/2 triangle; the spin-1/2 harmonic sits on the shifted "
            "degree";
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1", "C_2"};
        s.in_domain = [](const Params& p) {
            const int l1 = p.l + p.dl;
            if (std::abs(p.dl) != 1 || l1 < 1) return false;
            const auto t2 = p.j.twice();
            return t2 >= 1 && std::abs(t2 - 2 * l1) == 1 &&
                   std::abs(t2 - 3) <= 2 * p.l;
        };
        s.in_vanishing = [](const Params& p) {
            const int l1 = p.l + p.dl;
            if (std::abs(p.dl) != 1 || l1 < 1) return false;
            const auto t2 = p.j.twice();
            return t2 >= 1 && std::abs(t2 - 2 * l1) == 1 &&
                   std::abs(t2 - 3) > 2 * p.l;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 2; l <= lm; ++l)
                    for (int t2 : {2 * (l + dl) + 1, 2 * (l + dl) - 1})
                        if (t2 >= 1 && std::abs(t2 - 3) <= 2 * l)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 2; l <= lm; ++l)
                    for (int t2 : {2 * (l + dl) + 1, 2 * (l + dl) - 1})
                        if (t2 >= 1 && std::abs(t2 - 3) > 2 * l)
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return pair_sum(p.l + p.dl, HalfInt::half(), p.l,
                            HalfInt::from_twice(3), p.j, a, b);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const double pref =
                (1.0 * p.dl) / (2.0 * kFourPi) * std::sqrt(1.5);
            const SpinorTensor w =
                P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a);
            const SpinorTensor t2 = braces({g.b, g.v}) * P(l1, 2) -
                                    braces({g.a, g.v}) * P(p.l, 2);
            return std::vector<SpinorTensor>{
                pref * vec_x(w),
                pref * 0.25 * kI * sigma_t_x(t2),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.delta2";
        s.family = Family::SpinSpin;
        s.citation = "eq:add13half3";
        s.domain_summary =
            "dl = +2 with l >= 0 and j = l + 1/2; dl = -2 with l >= 2 "
            "and j = l - 1/2";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int sgn = p.dl / 2;
            const HalfInt j = HalfInt::from_twice(2 * p.l + sgn);
            return pair_sum(p.l + p.dl, HalfInt::from_twice(3), p.l,
                            HalfInt::half(), j, a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int sgn = p.dl / 2;
            const int l1 = p.l + sgn;
            const int l2 = p.l + p.dl;
            const double jd = p.l + 0.5 * sgn;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(std::max(p.l, l2), 2, g.x);
            const SpinorTensor t = paren0(g.b, g.b) * P(l2, 2) -
                                   braces0({g.b, g.a}) * P(l1, 2) +
                                   paren0(g.a, g.a) * P(p.l, 2);
            const double fac =
                sgn / kFourPi *
                std::sqrt((jd + 0.5) / (l1 * (l1 + 1.0) * (2.0 * l1 + 1.0)));
            return fac * x_t_sigma(t);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.delta2x";
        s.family = Family::SpinSpin;
        s.citation = "eq:add13half4";
        s.domain_summary =
            "dl = +2 with l >= 0 and j = l + 3/2; dl = -2 with l >= 3 "
            "and j = l - 3/2; spin-1/2 harmonic on the shifted degree";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 3);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 3}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int sgn = p.dl / 2;
            const HalfInt j = HalfInt::from_twice(2 * p.l + 3 * sgn);
            return pair_sum(p.l + p.dl, HalfInt::half(), p.l,
                            HalfInt::from_twice(3), j, a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int sgn = p.dl / 2;
            const int l1 = p.l + sgn;
            const int l2 = p.l + p.dl;
            const double jd = p.l + 1.5 * sgn;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(std::max(p.l, l2), 2, g.x);
            const SpinorTensor t = paren0(g.b, g.b) * P(l2, 2) -
                                   braces0({g.b, g.a}) * P(l1, 2) +
                                   paren0(g.a, g.a) * P(p.l, 2);
            const double fac =
                -sgn / kFourPi *
                std::sqrt((jd + 0.5) / (l1 * (l1 + 1.0) * (2.0 * l1 + 1.0)));
            return fac * sigma_t_x(t);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.local.same-l";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add13half-local";
        s.domain_summary = "j = l +- 1/2 with j >= 3/2";
        s.local_only = true;
        s.uses = {.j = true};
        s.coeff_labels = {"C_2"};
        s.in_domain = [](const Params& p) {
            const auto t2 = p.j.twice();
            return t2 >= 3 && std::abs(t2 - 2 * p.l) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int t2 : {2 * l + 1, 2 * l - 1})
                    if (t2 >= 3)
                        v.push_back({.l = l, .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return pair_sum(p.l, HalfInt::from_twice(3), p.l, HalfInt::half(),
                            p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = a.n;
            const double fac = -std::sqrt(1.5) * (2.0 * p.l + 1.0) /
                               (16.0 * kFourPi) * (p.l * (p.l + 1.0));
            return std::vector<SpinorTensor>{
                fac * x_t_sigma(braces0({pv, pv})),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.local.delta1";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add13half-local";
        s.domain_summary =
            "dl = +-1 with l1 = l + dl >= 0, j = l +- 1/2 with "
            "|j - 3/2| <= l1";
        s.local_only = true;
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1"};
        s.in_domain = [](const Params& p) {
            const int l1 = p.l + p.dl;
            if (std::abs(p.dl) != 1 || l1 < 0) return false;
            const auto t2 = p.j.twice();
            return t2 >= 1 && std::abs(t2 - 2 * p.l) == 1 &&
                   std::abs(t2 - 3) <= 2 * l1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int t2 : {2 * l + 1, 2 * l - 1})
                        if (t2 >= 1 && std::abs(t2 - 3) <= 2 * (l + dl))
                            v.push_back({.l = l,
                                         .dl = dl,
                                         .j = HalfInt::from_twice(t2)});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return pair_sum(p.l + p.dl, HalfInt::from_twice(3), p.l,
                            HalfInt::half(), p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl;
            const double pref =
                std::sqrt(1.5) * (l1 + p.l + 1.0) / (4.0 * kFourPi);
            return std::vector<SpinorTensor>{
                pref * x_vec(vec3(a.n)),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.local.delta1x";
        s.family = Family::SpinSpin;
        s.mode = Mode::Extraction;
        s.citation = "eq:add13half-local";
        s.domain_summary =
            "dl = +-1 with l >= 1 and j = l + dl/2, the only branch both "
            "triangles allow; spin-1/2 harmonic on the shifted degree";
        s.local_only = true;
        s.uses = {.dl = true, .j = true};
        s.coeff_labels = {"C_1"};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.dl) != 1 || p.l < 1) return false;
            return p.j.twice() == 2 * p.l + p.dl;
        };
        s.in_vanishing = [](const Params& p) {
            const int l1 = p.l + p.dl;
            if (std::abs(p.dl) != 1 || l1 < 0) return false;
            const auto t2 = p.j.twice();
            if (t2 < 1 || std::abs(t2 - 2 * p.l) != 1) return false;
            return t2 == 2 * p.l - p.dl ||
                   (p.l == 0 && p.dl == 1 && t2 == 1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = 1; l <= lm; ++l)
                    v.push_back({.l = l,
                                 .dl = dl,
                                 .j = HalfInt::from_twice(2 * l + dl)});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            v.push_back({.l = 0, .dl = 1, .j = HalfInt::from_twice(1)});
            for (int dl : {1, -1})
                for (int l = 1; l <= lm; ++l) {
                    const int t2 = 2 * l - dl;
                    if (t2 >= 1 && l + dl >= 0)
                        v.push_back({.l = l,
                                     .dl = dl,
                                     .j = HalfInt::from_twice(t2)});
                }
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return pair_sum(p.l + p.dl, HalfInt::half(), p.l,
                            HalfInt::from_twice(3), p.j, a, a);
        };
        s.basis = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl;
            const double pref =
                std::sqrt(1.5) * (l1 + p.l + 1.0) / (4.0 * kFourPi);
            return std::vector<SpinorTensor>{
                pref * vec_x(vec3(a.n)),
            };
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.local.delta2";
        s.family = Family::SpinSpin;
        s.citation = "eq:add13half-local";
        s.domain_summary =
            "dl = +2 with l >= 0 and j = l + 1/2; dl = -2 with l >= 2 "
            "and j = l - 1/2";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const int sgn = p.dl / 2;
            const HalfInt j = HalfInt::from_twice(2 * p.l + sgn);
            return pair_sum(p.l + p.dl, HalfInt::from_twice(3), p.l,
                            HalfInt::half(), j, a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int sgn = p.dl / 2;
            const int l1 = p.l + sgn;
            const double jd = p.l + 0.5 * sgn;
            const auto pv = a.n;
            const double fac =
                3.0 / (4.0 * kFourPi) * sgn *
                std::sqrt((jd + 0.5) * l1 * (l1 + 1.0) / (2.0 * l1 + 1.0));
            return fac * x_t_sigma(braces0({pv, pv}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "mixed.local.delta2x";
        s.family = Family::SpinSpin;
        s.citation = "eq:add13half-local";
        s.domain_summary =
            "dl = +2 with l >= 0 and j = l + 3/2; dl = -2 with l >= 2 "
            "and j = l - 3/2; spin-1/2 harmonic on the shifted degree";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const int sgn = p.dl / 2;
            const HalfInt j = HalfInt::from_twice(2 * p.l + 3 * sgn);
            return pair_sum(p.l + p.dl, HalfInt::half(), p.l,
                            HalfInt::from_twice(3), j, a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int sgn = p.dl / 2;
            const int l1 = p.l + sgn;
            const double jd = p.l + 1.5 * sgn;
            const auto pv = a.n;
            const double fac =
                3.0 / (4.0 * kFourPi) * sgn *
                std::sqrt((jd + 0.5) * l1 * (l1 + 1.0) / (2.0 * l1 + 1.0));
            return -fac * sigma_t_x(braces0({pv, pv}));
        };
        out.push_back(std::move(s));
    }
}

} // namespace spinsh::catalog::detail
