// Scalar-bilocal identities: projection moments of sum_lz Y(b) conj(Y(a))
// and the degree-shifted ladder family, all reduced to Legendre data.
#pragma once

#include "spinsh/catalog/helpers.hpp"
#include "spinsh/catalog/types.hpp"
#include "spinsh/clebsch.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace spinsh::catalog::detail {

inline std::vector<Params> enum_l_dl(int l_max, int abs_dl) {
    std::vector<Params> v;
    for (int l = 0; l <= l_max; ++l)
        for (int dl : {abs_dl, -abs_dl})
            if (l + dl >= 0) v.push_back({.l = l, .dl = dl});
    return v;
}

/// Weight sqrt((lav + 1/2)^2 - lz^2) shared by the dl = +-1 identities.
inline LzWeight w_shift1(int l, int l1) {
    const double lav = 0.5 * (l + l1);
    return [lav](int lz) {
        return std::sqrt(std::max(0.0, (lav + 0.5) * (lav + 0.5) - lz * lz));
    };
}

/// Weight sqrt((l1 + dl m lz)(l1 + dl m lz + 1)) for the lz -> lz + m shift.
inline LzWeight w_shift1_m(int l1, int dl, int m) {
    return [l1, dl, m](int lz) {
        const double base = l1 + dl * m * lz;
        return std::sqrt(std::max(0.0, base)) * std::sqrt(std::max(0.0, base + 1.0));
    };
}

/// Weight sqrt((l^2 - lz^2)((l+1)^2 - lz^2)) between degrees l-1 and l+1.
inline LzWeight w_shift2(int l) {
    return [l](int lz) {
        const double f1 = static_cast<double>(l) * l - static_cast<double>(lz) * lz;
        const double f2 = static_cast<double>(l + 1) * (l + 1) -
                          static_cast<double>(lz) * lz;
        return std::sqrt(std::max(0.0, f1)) * std::sqrt(std::max(0.0, f2));
    };
}

inline void add_scalar(std::vector<TheoremSpec>& out) {
    {
        TheoremSpec s;
        s.id = "scalar.classic";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:mix1";
        s.domain_summary = "l >= 0";
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l, p.l, a, b, unit_weight));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            return sc((2.0 * p.l + 1.0) / kFourPi * legendre_p(p.l, g.x));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "moments.t1";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:momresa";
        s.domain_summary = "l >= 0";
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l, p.l, a, b,
                                 [](int lz) { return static_cast<double>(lz); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 1, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            return sc(kI * pref * g.vz * P(p.l, 1));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "moments.t2";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:momresb";
        s.domain_summary = "l >= 0";
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l, p.l, a, b,
                                 [](int lz) { return ipow_i(lz, 2); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 2, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            return sc(-pref * (g.vz * g.vz * P(p.l, 2) +
                               (g.az * g.bz - g.x) * P(p.l, 1)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "moments.t3";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:momresc";
        s.domain_summary = "l >= 0";
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l, p.l, a, b,
                                 [](int lz) { return ipow_i(lz, 3); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 3, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            return sc(-kI * pref * g.vz *
                      (g.vz * g.vz * P(p.l, 3) +
                       3.0 * (g.az * g.bz - g.x) * P(p.l, 2) - P(p.l, 1)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "moments.t4";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:momresd";
        s.domain_summary = "l >= 0";
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l, p.l, a, b,
                                 [](int lz) { return ipow_i(lz, 4); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 4, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            const double ll = static_cast<double>(p.l) * (p.l + 1);
            const double val =
                all_z(braces0({g.v, g.v, g.v, g.v})) * P(p.l, 4) +
                6.0 * all_z(braces0({g.a, g.b, g.v, g.v})) * P(p.l, 3) +
                3.0 * all_z(braces0({g.a, g.a, g.b, g.b})) * P(p.l, 2) -
                (12.0 / 7.0) * (6.0 * ll - 5.0) *
                    (all_z(braces0({g.v, g.v})) * P(p.l, 2) +
                     all_z(braces0({g.a, g.b})) * P(p.l, 1)) +
                (8.0 / 5.0) * ll * (3.0 * ll - 1.0) * P(p.l, 0);
            return sc(pref / 24.0 * val);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "moments.t5";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:momrese";
        s.domain_summary = "l >= 0";
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l, p.l, a, b,
                                 [](int lz) { return ipow_i(lz, 5); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, 5, g.x);
            const double pref = (2.0 * p.l + 1.0) / kFourPi;
            const double ll = static_cast<double>(p.l) * (p.l + 1);
            const double val =
                all_z(braces0({g.v, g.v, g.v, g.v, g.v})) * P(p.l, 5) +
                10.0 * all_z(braces0({g.a, g.b, g.v, g.v, g.v})) * P(p.l, 4) +
                15.0 * all_z(braces0({g.a, g.a, g.b, g.b, g.v})) * P(p.l, 3) -
                (100.0 / 9.0) * (2.0 * ll - 3.0) *
                    (all_z(braces0({g.v, g.v, g.v})) * P(p.l, 3) +
                     3.0 * all_z(braces0({g.a, g.b, g.v})) * P(p.l, 2)) +
                (120.0 / 7.0) * (3.0 * ll * ll - 3.0 * ll + 1.0) * g.vz * P(p.l, 1);
            return sc(kI * pref / 120.0 * val);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.shift1.a";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:rmat6a";
        s.domain_summary = "l >= 0, dl = +-1, l + dl >= 0";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && (p.dl == 1 || p.dl == -1) && p.l + p.dl >= 0;
        };
        s.enumerate = [](int lm) { return enum_l_dl(lm, 1); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            return sc(scalar_sum(l1, p.l, a, b, w_shift1(p.l, l1)));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 1, g.x);
            const double fac =
                p.dl / kFourPi * std::sqrt((2.0 * p.l + 1.0) * (2.0 * l1 + 1.0));
            return sc(fac * (g.bz * P(l1, 1) - g.az * P(p.l, 1)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.shift1.b";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:rmat6b";
        s.domain_summary = "l >= 0, dl = +-1, l + dl >= 0, m = +-1";
        s.uses = {.dl = true, .m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && (p.dl == 1 || p.dl == -1) && p.l + p.dl >= 0 &&
                   (p.m == 1 || p.m == -1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (const Params& q : enum_l_dl(lm, 1))
                for (int m : {1, -1})
                    v.push_back({.l = q.l, .dl = q.dl, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            return sc(scalar_sum(l1, p.l, a, b, w_shift1_m(l1, p.dl, p.m), p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 1, g.x);
            const double fac =
                -p.m / kFourPi * std::sqrt((2.0 * p.l + 1.0) * (2.0 * l1 + 1.0));
            return sc(fac * (comp_m(g.b, p.m) * P(l1, 1) -
                             comp_m(g.a, p.m) * P(p.l, 1)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.lzshift1.a";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:mix3a";
        s.domain_summary = "l >= 0, dl = +-1, l + dl >= 0";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && (p.dl == 1 || p.dl == -1) && p.l + p.dl >= 0;
        };
        s.enumerate = [](int lm) { return enum_l_dl(lm, 1); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const LzWeight base = w_shift1(p.l, l1);
            return sc(scalar_sum(l1, p.l, a, b,
                                 [base](int lz) { return lz * base(lz); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const double fac =
                p.dl / kFourPi * std::sqrt((2.0 * p.l + 1.0) * (2.0 * l1 + 1.0));
            return sc(kI * fac * g.vz * (g.bz * P(l1, 2) - g.az * P(p.l, 2)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.lzshift1.b";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:mix3b";
        s.domain_summary = "l >= 0, dl = +-1, l + dl >= 0, m = +-1";
        s.uses = {.dl = true, .m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && (p.dl == 1 || p.dl == -1) && p.l + p.dl >= 0 &&
                   (p.m == 1 || p.m == -1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (const Params& q : enum_l_dl(lm, 1))
                for (int m : {1, -1})
                    v.push_back({.l = q.l, .dl = q.dl, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const LzWeight base = w_shift1_m(l1, p.dl, p.m);
            return sc(scalar_sum(l1, p.l, a, b,
                                 [base](int lz) { return lz * base(lz); }, p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const cplx vm = comp_m(g.v, p.m);
            const cplx am = comp_m(g.a, p.m);
            const cplx bm = comp_m(g.b, p.m);
            const double md = p.m;
            const double edge = p.dl * (p.l + (1.0 - p.dl) / 2.0);
            const cplx val =
                kI * md * (vm * g.bz + g.vz * bm) * P(l1, 2) -
                kI * md * (vm * g.az + g.vz * am) * P(p.l, 2) +
                edge * (bm * P(l1, 1) - am * P(p.l, 1));
            const double fac =
                -1.0 / (2.0 * kFourPi) *
                std::sqrt((2.0 * p.l + 1.0) * (2.0 * l1 + 1.0));
            return sc(fac * val);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.lz2shift1";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:mix4";
        s.domain_summary = "l >= 0, dl = +-1, l + dl >= 0";
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && (p.dl == 1 || p.dl == -1) && p.l + p.dl >= 0;
        };
        s.enumerate = [](int lm) { return enum_l_dl(lm, 1); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const LzWeight base = w_shift1(p.l, l1);
            return sc(scalar_sum(l1, p.l, a, b, [base](int lz) {
                return static_cast<double>(lz) * lz * base(lz);
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l1 = p.l + p.dl;
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 3, g.x);
            const double lav = 0.5 * (p.l + l1);
            const double sin2 = 1.0 - g.x * g.x;
            const double val =
                (-g.bz * sin2 + 5.0 * g.bz * g.vz * g.vz) * P(l1, 3) -
                (-g.az * sin2 + 5.0 * g.az * g.vz * g.vz) * P(p.l, 3) +
                (-g.az - 2.0 * g.x * g.bz + 5.0 * g.az * g.bz * g.bz) * P(l1, 2) -
                (-g.bz - 2.0 * g.x * g.az + 5.0 * g.bz * g.az * g.az) * P(p.l, 2) -
                (lav - 0.5) * (lav + 1.5) * (g.bz * P(l1, 1) - g.az * P(p.l, 1));
            const double fac =
                -p.dl / (5.0 * kFourPi) *
                std::sqrt((2.0 * p.l + 1.0) * (2.0 * l1 + 1.0));
            return sc(fac * val);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.shift2.a";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:rmat7a";
        s.domain_summary = "l >= 1, between degrees l-1 and l+1";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            return sc(scalar_sum(p.l + 1, p.l - 1, a, b, w_shift2(p.l)));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const double fac =
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) / kFourPi;
            return sc(fac * (g.bz * g.bz * P(p.l + 1, 2) -
                             2.0 * g.az * g.bz * P(p.l, 2) +
                             g.az * g.az * P(p.l - 1, 2) - P(p.l, 1)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.shift2.b";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:rmat7b";
        s.domain_summary = "l >= 1, m = +-1";
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && (p.m == 1 || p.m == -1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l = p.l, m = p.m;
            const LzWeight w = [l, m](int lz) {
                const double f1 = static_cast<double>(l) * l -
                                  static_cast<double>(lz) * lz;
                const double base = l + m * lz;
                return std::sqrt(std::max(0.0, f1)) *
                       std::sqrt(std::max(0.0, (base + 1.0) * (base + 2.0)));
            };
            return sc(scalar_sum(l + 1, l - 1, a, b, w, m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const cplx am = comp_m(g.a, p.m);
            const cplx bm = comp_m(g.b, p.m);
            const double fac =
                -p.m / kFourPi * std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0));
            return sc(fac * (bm * g.bz * P(p.l + 1, 2) -
                             (bm * g.az + g.bz * am) * P(p.l, 2) +
                             am * g.az * P(p.l - 1, 2)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.shift2.c";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:rmat7c";
        s.domain_summary = "l >= 1, m = +-1, projection shift 2m";
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && (p.m == 1 || p.m == -1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l = p.l, m = p.m;
            const LzWeight w = [l, m](int lz) {
                const double base = l + m * lz;
                return std::sqrt(std::max(
                    0.0, (base + 3.0) * (base + 2.0) * (base + 1.0) * base));
            };
            return sc(scalar_sum(l + 1, l - 1, a, b, w, 2 * m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 2, g.x);
            const cplx am = comp_m(g.a, p.m);
            const cplx bm = comp_m(g.b, p.m);
            const double fac =
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) / kFourPi;
            return sc(fac * (bm * bm * P(p.l + 1, 2) -
                             2.0 * bm * am * P(p.l, 2) +
                             am * am * P(p.l - 1, 2)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.lzshift2";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:mix5";
        s.domain_summary = "l >= 1, between degrees l-1 and l+1";
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const LzWeight base = w_shift2(p.l);
            return sc(scalar_sum(p.l + 1, p.l - 1, a, b,
                                 [base](int lz) { return lz * base(lz); }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l + 1, 3, g.x);
            const double fac =
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) / kFourPi;
            return sc(fac * kI * g.vz *
                      (g.bz * g.bz * P(p.l + 1, 3) -
                       2.0 * g.bz * g.az * P(p.l, 3) +
                       g.az * g.az * P(p.l - 1, 3) - P(p.l, 2)));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.cginverse";
        s.family = Family::ScalarBilocal;
        s.citation = "eq:mix6";
        s.domain_summary =
            "l >= 0, ln = l + dl >= 0, t = K with |dl| <= K <= l + ln, |m| <= K; "
            "odd l + K + ln gives zero on both sides";
        s.local_only = true;
        s.uses = {.dl = true, .m = true, .t = true};
        s.in_domain = [](const Params& p) {
            const int ln = p.l + p.dl;
            return p.l >= 0 && ln >= 0 && p.t >= std::abs(p.dl) &&
                   p.t <= p.l + ln && std::abs(p.m) <= p.t;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int ln = 0; ln <= lm; ++ln)
                    for (int K = std::abs(ln - l); K <= std::min(ln + l, 6); ++K) {
                        std::vector<int> ms;
                        for (int m : {0, 1, -1, std::min(K, 2), -std::min(K, 2)}) {
                            if (std::abs(m) > K) continue;
                            bool seen = false;
                            for (int u : ms) seen = seen || u == m;
                            if (!seen) ms.push_back(m);
                        }
                        for (int m : ms)
                            v.push_back({.l = l, .dl = ln - l, .m = m, .t = K});
                    }
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const int l = p.l, ln = p.l + p.dl, K = p.t, m = p.m;
            const LzWeight w = [l, ln, K, m](int lz) {
                return cg(l, lz, K, m, ln, lz + m);
            };
            return sc(scalar_sum(ln, l, a, a, w, m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int ln = p.l + p.dl;
            const double fac =
                std::sqrt((2.0 * p.l + 1.0) * (2.0 * ln + 1.0) / (2.0 * p.t + 1.0)) *
                cg(p.l, 0, p.t, 0, ln, 0) / std::sqrt(kFourPi);
            return sc(fac * spherical_harmonic(p.t, p.m, a));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "scalar.ladder";
        s.family = Family::ScalarBilocal;
        s.mode = Mode::Extraction;
        s.citation = "eq:addthr2";
        s.domain_summary = "l >= t, t in 1..4, m = +-1 sign branch";
        s.uses = {.m = true, .t = true};
        s.coeff_labels = {"C_{t,0}", "C_{t,1}", "C_{t,2}"};
        s.in_domain = [](const Params& p) {
            return p.t >= 1 && p.t <= 4 && (p.m == 1 || p.m == -1) && p.l >= p.t;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int t = 1; t <= 4; ++t)
                for (int m : {1, -1})
                    for (int l = t; l <= lm; ++l)
                        v.push_back({.l = l, .m = m, .t = t});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction& b) {
            const int l = p.l, t = p.t, sg = p.m;
            const LzWeight w = [l, t, sg](int lz) {
                double r = 1.0;
                for (int k = 0; k < t; ++k) {
                    const double f1 = l - sg * lz - k;
                    const double f2 = l + sg * lz + t - k;
                    if (f1 < 0.0 || f2 < 0.0) return 0.0;
                    r *= f1 * f2;
                }
                return std::sqrt(r);
            };
            return sc(scalar_sum(l, l, a, b, w, sg * t));
        };
        s.basis = [](const Params& p, const Direction& a, const Direction& b) {
            const PairVars g = pair_vars(a, b);
            const PDeriv P(p.l, p.t, g.x);
            const cplx am = comp_m(g.a, p.m);
            const cplx bm = comp_m(g.b, p.m);
            const cplx vm = comp_m(g.v, p.m);
            const cplx pref = kIPow[p.t % 4] * (2.0 * p.l + 1.0) / kFourPi;
            std::vector<SpinorTensor> basis;
            for (int q = 0; q <= p.t / 2; ++q) {
                cplx mono = 1.0;
                for (int i = 0; i < q; ++i) mono *= am * bm;
                for (int i = 0; i < p.t - 2 * q; ++i) mono *= vm;
                basis.push_back(sc(pref * mono * P(p.l, p.t - q)));
            }
            return basis;
        };
        out.push_back(std::move(s));
    }
}

} // namespace spinsh::catalog::detail
