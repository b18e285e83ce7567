// Single-direction limits of the scalar-tensor sums: both harmonics sit on
// the same direction, so every right side collapses to polynomials in the
// unit vector and the z axis.
#pragma once

#include "spinsh/catalog/helpers.hpp"
#include "spinsh/catalog/types.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace spinsh::catalog::detail {

inline std::array<double, 3> dir_vec(const Direction& d) { return d.n; }

/// [i][j] = sum_h (eps_{h j 2} t_{h i} + 2 eps_{i 2 h} t_{h j}).
inline SpinorTensor eps_mix_local(const SpinorTensor& t) {
    return mat3([&](int i, int j) {
        cplx acc = 0.0;
        for (int h = 0; h < 3; ++h)
            acc += static_cast<double>(levi_civita(h, j, 2)) *
                       t[static_cast<std::size_t>(3 * h + i)] +
                   2.0 * static_cast<double>(levi_civita(i, 2, h)) *
                       t[static_cast<std::size_t>(3 * h + j)];
        return acc;
    });
}

/// [i][j] = sum_h (eps_{i 2 h} t_{h j} + eps_{j 2 h} t_{h i}).
inline SpinorTensor eps_sym_z(const SpinorTensor& t) {
    return mat3([&](int i, int j) {
        cplx acc = 0.0;
        for (int h = 0; h < 3; ++h)
            acc += static_cast<double>(levi_civita(i, 2, h)) *
                       t[static_cast<std::size_t>(3 * h + j)] +
                   static_cast<double>(levi_civita(j, 2, h)) *
                       t[static_cast<std::size_t>(3 * h + i)];
        return acc;
    });
}

inline void add_local(std::vector<TheoremSpec>& out) {
    {
        TheoremSpec s;
        s.id = "local.t0";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local0";
        s.domain_summary =
            "l >= 0, ln = l + dl >= 0, t = K with |dl| <= K <= l + ln; "
            "odd l + K + ln gives zero on both sides";
        s.local_only = true;
        s.uses = {.dl = true, .t = true};
        s.in_domain = [](const Params& p) {
            const int ln = p.l + p.dl;
            return p.l >= 0 && ln >= 0 && p.t >= std::abs(p.dl) &&
                   p.t <= p.l + ln;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int ln = 0; ln <= lm; ++ln)
                    for (int K = std::abs(ln - l); K <= std::min(ln + l, 6); ++K)
                        v.push_back({.l = l, .dl = ln - l, .t = K});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return swap_sum(p.l + p.dl, p.l, p.t, a, a);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int ln = p.l + p.dl;
            const double phase = (p.t % 2 == 0) ? 1.0 : -1.0;
            const double fac =
                phase * std::sqrt((2.0 * p.l + 1.0) * (2.0 * ln + 1.0)) *
                cg(p.l, 0, p.t, 0, ln, 0) / std::sqrt(kFourPi);
            return fac * spin_harmonic({p.t, HalfInt(p.t), HalfInt(0), HalfInt(0)}, a);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.rank1";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local1";
        s.domain_summary = "dl = +1 with l >= 0, dl = -1 with l >= 1";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 1, p.l, a, a, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl;
            const double fac = -p.dl / kFourPi *
                               std::sqrt((p.l + 0.5) * (l1 + p.l + 1.0));
            return fac * vec3(dir_vec(a));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.rank2.a";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local2a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l, 2, p.l, a, a, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = dir_vec(a);
            const double fac =
                -1.0 / (2.0 * kFourPi) * std::sqrt(1.5) * (2.0 * p.l + 1.0) *
                std::sqrt(p.l * (p.l + 1.0) /
                          ((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)));
            return fac * braces0({pv, pv});
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.rank2.b";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local2b";
        s.domain_summary = "dl = +2 with l >= 0, dl = -2 with l >= 2";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, a, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int l2 = p.l + p.dl;
            const int l1 = (p.l + l2) / 2;
            const auto pv = dir_vec(a);
            const double fac = 3.0 / (4.0 * kFourPi) *
                               std::sqrt(l1 * (l1 + 1.0)) *
                               std::sqrt((2.0 * p.l + 1.0) / (l2 + p.l + 1.0));
            return fac * braces0({pv, pv});
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.rank3.a";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local3a";
        s.domain_summary =
            "dl = +1 with l >= 1, dl = -1 with l >= 2; "
            "(l, dl) = (0, +1) and (1, -1) vanish";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 1) || (p.dl == -1 && p.l >= 2);
        };
        s.in_vanishing = [](const Params& p) {
            return (p.l == 0 && p.dl == 1) || (p.l == 1 && p.dl == -1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 1}, {-1, 2}}); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0, .dl = 1}, {.l = 1, .dl = -1}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 3, p.l, a, a, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int q = 2 * p.l + p.dl;
            const auto pv = dir_vec(a);
            const double fac =
                p.dl / (16.0 * kFourPi) * std::sqrt(10.0 / 3.0) *
                std::sqrt(2.0 * p.l + 1.0) *
                std::sqrt((q - 1.0) * (q + 1.0) * (q + 3.0) /
                          ((q - 2.0) * (q + 4.0)));
            return fac * braces0({pv, pv, pv});
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.rank3.b";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local3b";
        s.domain_summary = "dl = +3 with l >= 0, dl = -3 with l >= 3";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 3 && p.l >= 0) || (p.dl == -3 && p.l >= 3);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{3, 0}, {-3, 3}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 3, p.l, a, a, unit_weight);
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int sgn = (p.dl > 0) ? 1 : -1;
            const int q = 2 * p.l + p.dl;
            const auto pv = dir_vec(a);
            const double fac =
                -sgn / (16.0 * kFourPi) * (5.0 * std::sqrt(2.0) / 3.0) *
                std::sqrt(2.0 * p.l + 1.0) *
                std::sqrt((q - 1.0) * (q + 1.0) * (q + 3.0) /
                          (q * (q + 2.0)));
            return fac * braces0({pv, pv, pv});
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lz.a";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local4a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l, 1, p.l, a, a,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = dir_vec(a);
            const double fac = -1.0 / (2.0 * kFourPi) * (2.0 * p.l + 1.0) *
                               std::sqrt(p.l * (p.l + 1.0));
            return fac * (pv[2] * vec3(pv) - zhat());
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lz.b";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local4b";
        s.domain_summary = "dl = +1 with l >= 0, dl = -1 with l >= 1";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 1, p.l, a, a,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl;
            const cplx fac =
                kI * std::sqrt(2.0) / (2.0 * kFourPi) *
                std::sqrt((2.0 * p.l + 1.0) / (l1 + p.l + 1.0)) *
                (p.l * (p.l + 1.0));
            return fac * eps_z(vec3(dir_vec(a)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lzrank1.a";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local5a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l, 1, p.l, a, a,
                              [](int lz) { return ipow_i(lz, 2); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = dir_vec(a);
            const cplx fac = -kI / (2.0 * kFourPi) * (2.0 * p.l + 1.0) *
                             std::sqrt(p.l * (p.l + 1.0)) * pv[2];
            return fac * eps_z(vec3(pv));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lzrank1.b";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local5b";
        s.domain_summary = "dl = +1 with l >= 0, dl = -1 with l >= 1";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 1, p.l, a, a,
                              [](int lz) { return ipow_i(lz, 2); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int l1 = p.l + p.dl;
            const int q = 2 * p.l + p.dl;
            const double ll = p.l * (p.l + 1.0);
            const double l11 = l1 * (l1 + 1.0);
            const auto pv = dir_vec(a);
            const SpinorTensor b3 = braces0({pv, pv, pv});
            const double fac =
                2.0 * p.dl / kFourPi * std::sqrt((p.l + 0.5) * (q + 1.0));
            return fac * ((q - 1.0) * (q + 3.0) / 96.0 *
                              slice_last(slice_last(b3, 2), 2) +
                          (l11 - 9.0 * ll - 2.0) / 40.0 * vec3(pv) -
                          (3.0 * l11 - 7.0 * ll - 6.0) / 40.0 * pv[2] * zhat());
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lzrank2.a";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local6a";
        s.domain_summary = "l >= 1; l = 0 vanishes";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.in_vanishing = [](const Params& p) { return p.l == 0; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.enumerate_vanishing = [](int) { return fixed_params({{.l = 0}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l, 2, p.l, a, a,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto pv = dir_vec(a);
            const SpinorTensor b2 = braces0({pv, pv});
            const SpinorTensor term =
                -0.5 * eps_dot(slice_last(b2, 2)) + eps_mix_local(b2);
            const cplx fac =
                -kI / (6.0 * kFourPi) * std::sqrt(1.5) * (2.0 * p.l + 1.0) *
                std::sqrt(p.l * (p.l + 1.0) /
                          ((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)));
            return fac * term;
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lzrank2.b";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local6b";
        s.domain_summary =
            "dl = +1 with l >= 1, dl = -1 with l >= 2; "
            "(l, dl) = (0, +1) and (1, -1) vanish";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 1) || (p.dl == -1 && p.l >= 2);
        };
        s.in_vanishing = [](const Params& p) {
            return (p.l == 0 && p.dl == 1) || (p.l == 1 && p.dl == -1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 1}, {-1, 2}}); };
        s.enumerate_vanishing = [](int) {
            return fixed_params({{.l = 0, .dl = 1}, {.l = 1, .dl = -1}});
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, a,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int q = 2 * p.l + p.dl;
            const auto pv = dir_vec(a);
            const SpinorTensor b3 = braces0({pv, pv, pv});
            const SpinorTensor tz = outer2(pv, {0.0, 0.0, 1.0}) +
                                    outer2({0.0, 0.0, 1.0}, pv) -
                                    (2.0 / 3.0) * pv[2] * identity3();
            const double fac =
                p.dl / (8.0 * kFourPi) * std::sqrt(2.0 * p.l + 1.0) *
                std::sqrt((q - 1.0) * (q + 1.0) * (q + 3.0));
            return fac * ((1.0 / 3.0) * slice_last(b3, 2) - 0.6 * tz);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "local.lzrank2.c";
        s.family = Family::Local;
        s.citation = "eq:sca-ten-local6c";
        s.domain_summary = "dl = +2 with l >= 0, dl = -2 with l >= 2";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 2 && p.l >= 0) || (p.dl == -2 && p.l >= 2);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{2, 0}, {-2, 2}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return scaten_sum(p.l + p.dl, 2, p.l, a, a,
                              [](int lz) { return static_cast<double>(lz); });
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int l2 = p.l + p.dl;
            const int l1 = (p.l + l2) / 2;
            const int ds = (p.dl > 0) ? 1 : -1;
            const auto pv = dir_vec(a);
            const cplx fac = -kI / (8.0 * kFourPi) *
                             (ds * (2.0 * p.l + 1.0) - 1.0) *
                             std::sqrt((2.0 * p.l + 1.0) / (2.0 * l1 + 1.0)) *
                             std::sqrt(l1 * (l1 + 1.0));
            return fac * eps_sym_z(braces0({pv, pv}));
        };
        out.push_back(std::move(s));
    }
}

} // namespace spinsh::catalog::detail
