// Scalar-tensor identities: sums of a rank-s harmonic against a conjugated
// scalar harmonic, with and without projection weights.
#pragma once

#include "spinsh/catalog/helpers.hpp"
#include "spinsh/catalog/types.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace spinsh::catalog::detail {

/// The vector a b_z - a_z b that the weighted identities single out.
inline std::array<double, 3> zx_vec(const PairVars& g) {
    return {g.a[0] * g.bz - g.az * g.b[0], g.a[1] * g.bz - g.az * g.b[1],
            g.a[2] * g.bz - g.az * g.b[2]};
}

inline SpinorTensor antivec(const std::array<double, 3>& u,
                            const std::array<double, 3>& w) {
    return outer2(u, w) - outer2(w, u);
}

/// eps^{ih3} T^{hj} + eps^{jh3} T^{hi}.
inline SpinorTensor eps_sym(const SpinorTensor& t) {
    return mat3([&t](int i, int j) {
        cplx acc = 0.0;
        for (int h = 0; h < 3; ++h)
            acc += static_cast<double>(levi_civita(i, h, 2)) * t[static_cast<std::size_t>(3 * h + j)] +
                   static_cast<double>(levi_civita(j, h, 2)) * t[static_cast<std::size_t>(3 * h + i)];
        return acc;
    });
}

/// eps^{hj3} T^{hi} - eps^{ih3} T^{hj}.
inline SpinorTensor eps_anti(const SpinorTensor& t) {
    return mat3([&t](int i, int j) {
        cplx acc = 0.0;
        for (int h = 0; h < 3; ++h)
            acc += static_cast<double>(levi_civita(h, j, 2)) * t[static_cast<std::size_t>(3 * h + i)] -
                   static_cast<double>(levi_civita(i, h, 2)) * t[static_cast<std::size_t>(3 * h + j)];
        return acc;
    });
}

inline void add_scaten(std::vector<TheoremSpec>& out) {
    {
        TheoremSpec s;
        s.id = "scaten.swap";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr1";
        s.domain_summary = "l >= 0, t = s in 1..3, |dl| <= s, l + dl >= 0";
        s.uses = {.dl = true, .t = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && p.t >= 1 && p.t <= 3 && std::abs(p.dl) <= p.t &&
                   p.l + p.dl >= 0;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int n = 1; n <= 3; ++n)
                    for (int dl = -n; dl <= n; ++dl)
                        if (l + dl >= 0) v.push_back({.l = l, .dl = dl, .t = n});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return swap_sum(p.l + p.dl, p.l, p.t, a, b);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int ln = p.l + p.dl;
            const double phase = (p.dl % 2 == 0) ? 1.0 : -1.0;
            const double fac =
                phase * std::sqrt((2.0 * ln + 1.0) / (2.0 * p.l + 1.0));
            return fac * scaten_sum(ln, p.t, p.l, a, b, unit_weight);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank1.a";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr2a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l, 1, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 1, g.x);
            const cplx fac = kI / kFourPi * (2.0 * p.l + 1.0) /
                             std::sqrt(static_cast<double>(p.l) * (p.l + 1));
            return (fac * P(p.l, 1)) * vec3(g.v);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank1.b";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr2b";
        s.domain_summary = "dl = +1 with l >= 0, dl = -1 with l >= 1";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 1, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 1, g.x);
            const double fac = -std::sqrt(2.0) / kFourPi *
                               std::sqrt((2.0 * p.l + 1.0) / (l1 + p.l + 1.0));
            return fac * (P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank2.a";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr3a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l, 2, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 2, g.x);
            const double l = p.l;
            const double fac = -std::sqrt(1.5) / kFourPi * (2.0 * l + 1.0) /
                               std::sqrt(l * (l + 1.0)) /
                               std::sqrt((2.0 * l - 1.0) * (2.0 * l + 3.0));
            return fac * (P(p.l, 2) * braces0({g.v, g.v}) +
                          P(p.l, 1) * braces0({g.b, g.a}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank2.b";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr3b";
        s.domain_summary =
            "dl = +1 with l >= 1, dl = -1 with l >= 2; (0,+1) and (1,-1) vanish";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 1) || (p.dl == -1 && p.l >= 2);
        };
        s.in_vanishing = [](const Params& p) {
            return (p.dl == 1 && p.l == 0) || (p.dl == -1 && p.l == 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 1}, {-1, 2}}); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0, .dl = 1}, {.l = 1, .dl = -1}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const cplx fac = -kI * 2.0 / kFourPi * std::sqrt(2.0 * p.l + 1.0) *
                             std::sqrt(dfact(l1 + p.l - 3) / dfact(l1 + p.l + 3));
            return fac * (P(l1, 2) * braces({g.b, g.v}) -
                          P(p.l, 2) * braces({g.a, g.v}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank2.c";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr3c";
        s.domain_summary = "dl = +2 with l >= 0, dl = -2 with l >= 2";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l2 = p.l + p.dl;
            const int l1 = (p.l + l2) / 2;
            const double q = l2 + p.l;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 2, 2, g.x);
            const double fac =
                1.0 / kFourPi / std::sqrt(2.0 * l2 + 1.0) *
                std::sqrt((q - 1.0) * (q + 3.0) / (q * (q + 1.0) * (q + 2.0)));
            return fac * (P(l2, 2) * braces0({g.b, g.b}) -
                          2.0 * P(l1, 2) * braces0({g.b, g.a}) +
                          P(p.l, 2) * braces0({g.a, g.a}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank3.a";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr4a";
        s.domain_summary = "l >= 2; l = 0, 1 vanish";
        s.in_domain = [](const Params& p) { return p.l >= 2; };
        s.in_vanishing = [](const Params& p) { return p.l == 0 || p.l == 1; };
        s.enumerate = [](int lm) { return enum_l(2, lm); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0}, {.l = 1}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l, 3, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 3, g.x);
            double rat = 1.0;
            for (int k = 2 * p.l - 2; k <= 2 * p.l + 4; ++k) rat /= k;
            const cplx fac = -kI * 2.0 / kFourPi * (std::sqrt(10.0) / 3.0) *
                             std::sqrt(rat) * std::pow(2.0 * p.l + 1.0, 1.5);
            return fac * (P(p.l, 3) * braces0({g.v, g.v, g.v}) +
                          3.0 * P(p.l, 2) * braces0({g.b, g.a, g.v}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank3.b";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr4b";
        s.domain_summary =
            "dl = +1 with l >= 1, dl = -1 with l >= 2; (0,+1) and (1,-1) vanish";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 1) || (p.dl == -1 && p.l >= 2);
        };
        s.in_vanishing = [](const Params& p) {
            return (p.dl == 1 && p.l == 0) || (p.dl == -1 && p.l == 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 1}, {-1, 2}}); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0, .dl = 1}, {.l = 1, .dl = -1}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 3, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 3, g.x);
            double rat = 1.0;
            for (int k = l1 + p.l - 2; k <= l1 + p.l + 4; ++k) rat /= k;
            const double q = l1 + p.l;
            const double fac = 1.0 / kFourPi * std::sqrt(10.0 / 3.0) *
                               std::sqrt(2.0 * p.l + 1.0) * std::sqrt(rat) *
                               std::sqrt(q * (q + 2.0));
            return fac * (P(l1, 3) * braces0({g.b, g.v, g.v}) -
                          P(p.l, 3) * braces0({g.a, g.v, g.v}) +
                          P(l1, 2) * braces0({g.b, g.b, g.a}) -
                          P(p.l, 2) * braces0({g.b, g.a, g.a}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank3.c";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr4c";
        s.domain_summary =
            "dl = +2 with l >= 1, dl = -2 with l >= 3; (0,+2) and (2,-2) vanish";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 1) || (p.dl == -2 && p.l >= 3);
        };
        s.in_vanishing = [](const Params& p) {
            return (p.dl == 2 && p.l == 0) || (p.dl == -2 && p.l == 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 1}, {-2, 3}}); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0, .dl = 2}, {.l = 2, .dl = -2}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 3, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l2 = p.l + p.dl;
            const int l1 = (p.l + l2) / 2;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 2, 3, g.x);
            const double num =
                (2.0 * l1 + 3.0) * (2.0 * l1 + 1.0) * (2.0 * l1 - 1.0);
            const double den = (l1 + 2.0) * (l1 + 1.0) * l1 * (l1 - 1.0);
            const cplx fac = kI * 0.5 / kFourPi / std::sqrt(3.0) /
                             ((2.0 * l1 + 1.0) * std::sqrt(2.0 * l2 + 1.0)) *
                             std::sqrt(num) * std::sqrt(1.0 / den);
            return fac * (P(l2, 3) * braces0({g.b, g.b, g.v}) -
                          2.0 * P(l1, 3) * braces0({g.b, g.a, g.v}) +
                          P(p.l, 3) * braces0({g.a, g.a, g.v}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.rank3.d";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr4d";
        s.domain_summary = "dl = +3 with l >= 0, dl = -3 with l >= 3";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 3 && p.l >= 0) || (p.dl == -3 && p.l >= 3);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{3, 0}, {-3, 3}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 3, p.l, a, b, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int sgn = p.dl > 0 ? 1 : -1;
            const int l3 = p.l + p.dl;
            const int l1 = p.l + sgn, l2 = p.l + 2 * sgn;
            const double lav = 0.5 * (p.l + l3);
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 3, 3, g.x);
            const double df = dfact(l3 + p.l - 3) / dfact(l3 + p.l + 3);
            const double fal = (lav + 1.0) * lav * (lav - 1.0);
            const double fac = -4.0 / (3.0 * kFourPi) * std::sqrt(2.0) *
                               std::sqrt(lav + 2.0) /
                               ((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0) *
                                std::sqrt(2.0 * l3 + 1.0)) *
                               std::sqrt(df) * std::sqrt(fal);
            return fac * (P(l3, 3) * braces0({g.b, g.b, g.b}) -
                          3.0 * P(l2, 3) * braces0({g.b, g.b, g.a}) +
                          3.0 * P(l1, 3) * braces0({g.b, g.a, g.a}) -
                          P(p.l, 3) * braces0({g.a, g.a, g.a}));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lz.a";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr5a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l, 1, p.l, a, b,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 2, g.x);
            const double ll = static_cast<double>(p.l) * (p.l + 1);
            const double fac = -0.5 / kFourPi * (2.0 * p.l + 1.0) / std::sqrt(ll);
            return fac * (P(p.l, 2) * slice_last(braces0({g.v, g.v}), 2) +
                          P(p.l, 1) * slice_last(braces0({g.b, g.a}), 2) +
                          P(p.l, 1) * vec3(zx_vec(g)) -
                          (2.0 / 3.0) * ll * P(p.l, 0) * zhat());
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lz.b";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr5b";
        s.domain_summary = "dl = +1 with l >= 0, dl = -1 with l >= 1";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 1, p.l, a, b,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const cplx fac = -kI * std::sqrt(2.0) * 0.5 / kFourPi *
                             std::sqrt((2.0 * p.l + 1.0) / (l1 + p.l + 1.0));
            const SpinorTensor grad =
                P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a);
            return fac * (P(l1, 2) * slice_last(braces({g.b, g.v}), 2) -
                          P(p.l, 2) * slice_last(braces({g.a, g.v}), 2) -
                          (p.dl * (p.l + 0.5) - 0.5) * eps_z(grad));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lz2.a";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr6a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l, 1, p.l, a, b,
                              [](int lz) { return ipow_i(lz, 2); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 3, g.x);
            const double ll = static_cast<double>(p.l) * (p.l + 1);
            const cplx fac = -kI / kFourPi * (2.0 * p.l + 1.0) / std::sqrt(ll);
            const SpinorTensor core =
                (1.0 / 6.0) *
                (P(p.l, 3) * slice_last(slice_last(braces0({g.v, g.v, g.v}), 2), 2) +
                 3.0 * P(p.l, 2) *
                     slice_last(slice_last(braces0({g.b, g.a, g.v}), 2), 2));
            return fac * (core + (g.vz * P(p.l, 2)) * vec3(zx_vec(g)) +
                          (0.5 * P(p.l, 1)) *
                              eps_z(slice_last(braces0({g.b, g.a}), 2)) -
                          (0.2 * (ll + 0.5) * P(p.l, 1)) * vec3(g.v) -
                          (0.4 * (ll - 0.75) * g.vz * P(p.l, 1)) * zhat());
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lz2.b";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr6b";
        s.domain_summary = "dl = +1 with l >= 0, dl = -1 with l >= 1";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 1, p.l, a, b,
                              [](int lz) { return ipow_i(lz, 2); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const double l = p.l;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 3, g.x);
            const double fac = -2.0 / kFourPi *
                               std::sqrt((l + 0.5) / (l1 + l + 1.0));
            const SpinorTensor core =
                (-1.0 / 6.0) *
                (P(l1, 3) * slice_last(slice_last(braces0({g.b, g.v, g.v}), 2), 2) -
                 P(p.l, 3) * slice_last(slice_last(braces0({g.a, g.v, g.v}), 2), 2) +
                 P(l1, 2) * slice_last(slice_last(braces0({g.b, g.b, g.a}), 2), 2) -
                 P(p.l, 2) * slice_last(slice_last(braces0({g.a, g.a, g.b}), 2), 2));
            const SpinorTensor eps_arg =
                P(l1, 2) * slice_last(braces0({g.b, g.v}), 2) -
                P(p.l, 2) * slice_last(braces0({g.a, g.v}), 2);
            const double c1 = (p.dl * (l1 + l + 1.0) - 3.0) / 6.0;
            const double c2 = (l1 * (l1 + 1.0) - 9.0 * l * (l + 1.0) - 2.0) / 20.0;
            const double c3 =
                (3.0 * l1 * (l1 + 1.0) - 7.0 * l * (l + 1.0) - 6.0) / 20.0;
            return fac * (core + c1 * eps_z(eps_arg) -
                          c2 * (P(l1, 1) * vec3(g.b) - P(p.l, 1) * vec3(g.a)) +
                          (c3 * (g.bz * P(l1, 1) - g.az * P(p.l, 1))) * zhat());
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lzrank2.a";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr7a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l, 2, p.l, a, b,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 3, g.x);
            const double ll = static_cast<double>(p.l) * (p.l + 1);
            const std::array<double, 3> w = zx_vec(g);
            const SpinorTensor bav = braces0({g.b, g.a, g.v});
            const SpinorTensor bba = braces0({g.b, g.a});
            const SpinorTensor term2 =
                -eps_dot(slice_last(braces0({g.v, g.v}), 2)) +
                2.0 * slice_last(bav, 2) +
                (4.0 / 3.0) * (g.vz * antivec(g.a, g.b) + outer2(g.v, w) +
                               2.0 * outer2(w, g.v));
            const SpinorTensor term3_eps = mat3([&bba](int i, int j) {
                cplx acc = 0.0;
                for (int h = 0; h < 3; ++h) {
                    const std::size_t hi = static_cast<std::size_t>(3 * h + i);
                    const std::size_t hj = static_cast<std::size_t>(3 * h + j);
                    acc += static_cast<double>(levi_civita(h, j, 2)) * bba[hi] +
                           2.0 * static_cast<double>(levi_civita(i, 2, h)) * bba[hj];
                }
                return acc;
            });
            const SpinorTensor term3 =
                (1.0 / 6.0) * (-0.5 * eps_dot(slice_last(bba, 2)) + term3_eps) -
                0.25 * eps_dot(vec3(w)) +
                ((2.0 / 15.0) * (ll - 0.75) * g.vz) * identity3() -
                (0.2 * (ll + 0.5)) * outer2(g.v, {0.0, 0.0, 1.0}) -
                (0.2 * (ll - 2.0)) * outer2({0.0, 0.0, 1.0}, g.v);
            const cplx fac = -kI * 2.0 / kFourPi * std::sqrt(1.5) *
                             (2.0 * p.l + 1.0) / std::sqrt(ll) /
                             std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0));
            return fac *
                   ((P(p.l, 3) / 6.0) * slice_last(braces0({g.v, g.v, g.v}), 2) +
                    (P(p.l, 2) / 4.0) * term2 + P(p.l, 1) * term3);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lzrank2.b";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr7b";
        s.domain_summary =
            "dl = +1 with l >= 1, dl = -1 with l >= 2; (0,+1) and (1,-1) vanish";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 1) || (p.dl == -1 && p.l >= 2);
        };
        s.in_vanishing = [](const Params& p) {
            return (p.dl == 1 && p.l == 0) || (p.dl == -1 && p.l == 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 1}, {-1, 2}}); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0, .dl = 1}, {.l = 1, .dl = -1}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, b,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const double l = p.l;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 3, g.x);
            const double df = dfact(l1 + p.l - 3) / dfact(l1 + p.l + 3);
            const double fac =
                4.0 / kFourPi * std::sqrt(2.0 * l + 1.0) * std::sqrt(df);
            const SpinorTensor core =
                (1.0 / 6.0) *
                (P(l1, 3) * slice_last(braces0({g.b, g.v, g.v}), 2) -
                 P(p.l, 3) * slice_last(braces0({g.a, g.v, g.v}), 2) +
                 P(l1, 2) * slice_last(braces0({g.b, g.b, g.a}), 2) -
                 P(p.l, 2) * slice_last(braces0({g.b, g.a, g.a}), 2));
            const double c1 = (l1 * (l1 + 1.0) - l * (l + 1.0) - 6.0) / 24.0;
            const double c2 =
                (3.0 / 80.0) * (l1 + l - 1.0) * (l1 + l + 3.0);
            const std::array<double, 3> z3{0.0, 0.0, 1.0};
            const SpinorTensor tb = outer2(g.b, z3) + outer2(z3, g.b) -
                                    (2.0 / 3.0) * g.bz * identity3();
            const SpinorTensor ta = outer2(g.a, z3) + outer2(z3, g.a) -
                                    (2.0 / 3.0) * g.az * identity3();
            return fac * (core +
                          c1 * (P(l1, 2) * eps_sym(braces0({g.b, g.v})) -
                                P(p.l, 2) * eps_sym(braces0({g.a, g.v}))) -
                          c2 * (P(l1, 1) * tb - P(p.l, 1) * ta));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scaten.lzrank2.c";
        s.family = Family::ScalarTensor;
        s.citation = "eq:sca-ten-addthr7c";
        s.domain_summary = "dl = +2 with l >= 0, dl = -2 with l >= 2";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, b,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l2 = p.l + p.dl;
            const int l1 = (p.l + l2) / 2;
            const int ds = p.dl > 0 ? 1 : -1;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 2, 3, g.x);
            const SpinorTensor tcomb = P(l2, 2) * braces0({g.b, g.b}) -
                                       2.0 * P(l1, 2) * braces0({g.b, g.a}) +
                                       P(p.l, 2) * braces0({g.a, g.a});
            const cplx fac = kI / (6.0 * kFourPi) *
                             std::sqrt((2.0 * p.l + 1.0) / (2.0 * l1 + 1.0)) /
                             std::sqrt(static_cast<double>(l1) * (l1 + 1));
            return fac * (P(l2, 3) * slice_last(braces0({g.b, g.b, g.v}), 2) -
                          2.0 * P(l1, 3) * slice_last(braces0({g.b, g.a, g.v}), 2) +
                          P(p.l, 3) * slice_last(braces0({g.a, g.a, g.v}), 2) -
                          (0.5 * (ds * (l2 + p.l + 1.0) - 3.0)) * eps_anti(tcomb));
        };
        out.push_back(std::move(s));
    }
}

} // namespace spinsh::catalog::detail
