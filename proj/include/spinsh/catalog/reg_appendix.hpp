// Single-direction scalar sums: the lz sum rule and its polynomial moments,
// ladder-weighted sums, and square-root-weighted sums with the two degrees
// one or two steps apart. Every right side is a trigonometric polynomial in
// the polar angle times a phase in the azimuth.
#pragma once

#include "spinsh/catalog/helpers.hpp"
#include "spinsh/catalog/types.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace spinsh::catalog::detail {

inline cplx azimuth(const Direction& a, int m) {
    return std::exp(kI * (static_cast<double>(m) * a.phi));
}

inline double sqrt0(double x) { return std::sqrt(std::max(0.0, x)); }

inline void add_appendix(std::vector<TheoremSpec>& out) {
    {
        TheoremSpec s;
        s.id = "appendix.sumrule";
        s.family = Family::Appendix;
        s.citation = "eq:momres2";
        s.domain_summary = "l >= 0";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l, p.l, a, a, unit_weight));
        };
        s.rhs = [](const Params& p, const Direction&, const Direction&) {
            return sc((2.0 * p.l + 1.0) / kFourPi);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.moments.t2";
        s.family = Family::Appendix;
        s.citation = "eq:momres2b";
        s.domain_summary = "l >= 0, weight lz^2";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l, p.l, a, a, [](int lz) {
                return static_cast<double>(lz) * lz;
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            return sc((2.0 * p.l + 1.0) * (p.l * (p.l + 1.0)) * st * st /
                      (2.0 * kFourPi));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.moments.t4";
        s.family = Family::Appendix;
        s.citation = "eq:momres2c";
        s.domain_summary = "l >= 0, weight lz^4";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l, p.l, a, a, [](int lz) {
                const double z2 = static_cast<double>(lz) * lz;
                return z2 * z2;
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            const double ll = p.l * (p.l + 1.0);
            return sc((2.0 * p.l + 1.0) * ll * st * st / (2.0 * kFourPi) *
                      (0.75 * (ll - 2.0) * st * st + 1.0));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.moments.t6";
        s.family = Family::Appendix;
        s.citation = "eq:momres2d";
        s.domain_summary = "l >= 0, weight lz^6";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l, p.l, a, a, [](int lz) {
                const double z2 = static_cast<double>(lz) * lz;
                return z2 * z2 * z2;
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            const double ll = p.l * (p.l + 1.0);
            const double poly =
                5.0 * ((p.l + 3.0) * (p.l + 2.0) * (p.l - 1.0) * (p.l - 2.0)) *
                    std::cos(4.0 * a.theta) -
                20.0 * falling(p.l + 2.0, 4) * std::cos(2.0 * a.theta) +
                15.0 * ll * ll + 4.0;
            return sc((2.0 * p.l + 1.0) * ll * st * st / (128.0 * kFourPi) *
                      poly);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.moments.t8";
        s.family = Family::Appendix;
        s.citation = "eq:momres2e";
        s.domain_summary = "l >= 0, weight lz^8";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 0; };
        s.enumerate = [](int lm) { return enum_l(0, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l, p.l, a, a, [](int lz) {
                const double z2 = static_cast<double>(lz) * lz;
                return z2 * z2 * z2 * z2;
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            const double ll = p.l * (p.l + 1.0);
            const double poly =
                -falling(p.l + 4.0, 8) * std::cos(6.0 * a.theta) +
                2.0 * falling(p.l + 3.0, 6) * (3.0 * ll - 4.0) *
                    std::cos(4.0 * a.theta) -
                0.2 * falling(p.l + 2.0, 4) *
                    (75.0 * ll * ll - 70.0 * ll + 24.0) *
                    std::cos(2.0 * a.theta) +
                (2.0 / 35.0) * ll *
                    (175.0 * ll * ll * ll - 140.0 * ll * ll + 84.0 * ll +
                     16.0);
            return sc(35.0 * (2.0 * p.l + 1.0) * st * st /
                      (4096.0 * kFourPi) * poly);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.ladder";
        s.family = Family::Appendix;
        s.citation = "eq:rp=r.3";
        s.domain_summary =
            "l >= 0, even rung count t in {2, 4}, direction m = +-1; "
            "odd t vanish";
        s.local_only = true;
        s.uses = {.m = true, .t = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 0 && (p.t == 2 || p.t == 4) && std::abs(p.m) == 1;
        };
        s.in_vanishing = [](const Params& p) {
            return p.l >= 0 && (p.t == 1 || p.t == 3) && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t : {2, 4})
                    for (int m : {1, -1})
                        v.push_back({.l = l, .m = m, .t = t});
            return v;
        };
        s.enumerate_vanishing = [](int lm) {
            std::vector<Params> v;
            for (int l = 0; l <= lm; ++l)
                for (int t : {1, 3})
                    for (int m : {1, -1})
                        v.push_back({.l = l, .m = m, .t = t});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l, p.l, a, a,
                [&p](int lz) {
                    double r = 1.0;
                    for (int k = 0; k < p.t; ++k)
                        r *= (p.l - p.m * lz - k) *
                             static_cast<double>(p.l + p.m * lz + p.t - k);
                    return sqrt0(r);
                },
                p.m * p.t));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int h = p.t / 2;
            double hfact = 1.0;
            for (int k = 2; k <= h; ++k) hfact *= k;
            const double mag = dfact(p.t - 1) /
                               (std::pow(2.0, h) * hfact) *
                               (2.0 * p.l + 1.0) * falling(p.l + h, p.t) *
                               std::pow(std::sin(a.theta), p.t) / kFourPi;
            return sc(((h % 2 == 0) ? 1.0 : -1.0) * mag *
                      azimuth(a, p.m * p.t));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.shift1.a";
        s.family = Family::Appendix;
        s.citation = "eq:rmat9a";
        s.domain_summary =
            "dl = +1 with l >= 0, dl = -1 with l >= 1 (derived by relabel)";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const int n = (p.dl == 1) ? p.l + 1 : p.l;
            return sc(scalar_sum(p.l + p.dl, p.l, a, a, [n](int lz) {
                return sqrt0(static_cast<double>(n) * n -
                             static_cast<double>(lz) * lz);
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int n = (p.dl == 1) ? p.l + 1 : p.l;
            return sc(std::sqrt((2.0 * p.l + 1.0) *
                                (2.0 * (p.l + p.dl) + 1.0)) *
                      n * std::cos(a.theta) / kFourPi);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.shift1.b";
        s.family = Family::Appendix;
        s.citation = "eq:rmat9b";
        s.domain_summary =
            "dl = +1 with l >= 0, dl = -1 with l >= 1 (derived by relabel); "
            "azimuthal shift m = +-1";
        s.local_only = true;
        s.uses = {.dl = true, .m = true};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.m) != 1) return false;
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int m : {1, -1})
                        v.push_back({.l = l, .dl = dl, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto w = (p.dl == 1)
                ? LzWeight([&p](int lz) {
                      return sqrt0((p.l + 1.0 + p.m * lz) *
                                   (p.l + 2.0 + p.m * lz));
                  })
                : LzWeight([&p](int lz) {
                      return sqrt0((p.l - 1.0 - p.m * lz) *
                                   (p.l - static_cast<double>(p.m) * lz));
                  });
            return sc(scalar_sum(p.l + p.dl, p.l, a, a, w, p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int n = (p.dl == 1) ? p.l + 1 : p.l;
            const double fac = -(static_cast<double>(p.m) * p.dl) / kFourPi *
                               std::sqrt((2.0 * p.l + 1.0) *
                                         (2.0 * (p.l + p.dl) + 1.0)) *
                               n * std::sin(a.theta);
            return sc(fac * azimuth(a, p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lzshift1";
        s.family = Family::Appendix;
        s.citation = "eq:mix7";
        s.domain_summary =
            "dl = +1 with l >= 0, dl = -1 with l >= 1 (derived by relabel); "
            "weight lz, azimuthal shift m = +-1";
        s.local_only = true;
        s.uses = {.dl = true, .m = true};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.m) != 1) return false;
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int m : {1, -1})
                        v.push_back({.l = l, .dl = dl, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto w = (p.dl == 1)
                ? LzWeight([&p](int lz) {
                      return lz * sqrt0((p.l + 1.0 + p.m * lz) *
                                        (p.l + 2.0 + p.m * lz));
                  })
                : LzWeight([&p](int lz) {
                      return lz * sqrt0((p.l - 1.0 - p.m * lz) *
                                        (p.l - static_cast<double>(p.m) * lz));
                  });
            return sc(scalar_sum(p.l + p.dl, p.l, a, a, w, p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double fac = -1.0 / (2.0 * kFourPi) *
                               std::sqrt((2.0 * p.l + 1.0) *
                                         (2.0 * (p.l + p.dl) + 1.0)) *
                               (p.l * (p.l + 1.0)) * std::sin(a.theta);
            return sc(fac * azimuth(a, p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lz2shift1.a";
        s.family = Family::Appendix;
        s.citation = "eq:mix8a";
        s.domain_summary =
            "dl = +1 with l >= 0 and weight lz^2; dl = -1 with l >= 1 and "
            "weight (lz + m)^2 (derived by relabel); azimuthal shift "
            "m = +-1";
        s.local_only = true;
        s.uses = {.dl = true, .m = true};
        s.in_domain = [](const Params& p) {
            if (std::abs(p.m) != 1) return false;
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int dl : {1, -1})
                for (int l = (dl == 1) ? 0 : 1; l <= lm; ++l)
                    for (int m : {1, -1})
                        v.push_back({.l = l, .dl = dl, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const auto w = (p.dl == 1)
                ? LzWeight([&p](int lz) {
                      return static_cast<double>(lz) * lz *
                             sqrt0((p.l + 1.0 + p.m * lz) *
                                   (p.l + 2.0 + p.m * lz));
                  })
                : LzWeight([&p](int lz) {
                      const double q = lz + static_cast<double>(p.m);
                      return q * q * sqrt0((p.l - 1.0 - p.m * lz) *
                                           (p.l -
                                            static_cast<double>(p.m) * lz));
                  });
            return sc(scalar_sum(p.l + p.dl, p.l, a, a, w, p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            const double s3 = std::sin(3.0 * a.theta);
            const double root = std::sqrt((2.0 * p.l + 1.0) *
                                          (2.0 * (p.l + p.dl) + 1.0));
            double fac;
            if (p.dl == 1)
                fac = p.m / (8.0 * kFourPi) * root * (p.l * (p.l + 1.0)) *
                      ((p.l + 2.0) * s3 - (3.0 * p.l + 2.0) * st);
            else
                fac = -p.m / (8.0 * kFourPi) * root *
                      ((p.l - 1.0) * p.l) *
                      ((p.l + 1.0) * s3 - (3.0 * p.l - 1.0) * st);
            return sc(fac * azimuth(a, p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lz2shift1.b";
        s.family = Family::Appendix;
        s.citation = "eq:mix8b";
        s.domain_summary =
            "dl = +1 with l >= 0, dl = -1 with l >= 1 (derived by relabel); "
            "weight lz^2, no azimuthal shift";
        s.local_only = true;
        s.uses = {.dl = true};
        s.in_domain = [](const Params& p) {
            return (p.dl == 1 && p.l >= 0) || (p.dl == -1 && p.l >= 1);
        };
        s.enumerate = [](int lm) { return enum_dl_min(lm, {{1, 0}, {-1, 1}}); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            const int n = (p.dl == 1) ? p.l + 1 : p.l;
            return sc(scalar_sum(p.l + p.dl, p.l, a, a, [n](int lz) {
                return static_cast<double>(lz) * lz *
                       sqrt0(static_cast<double>(n) * n -
                             static_cast<double>(lz) * lz);
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const int n = (p.dl == 1) ? p.l + 1 : p.l;
            const double st = std::sin(a.theta);
            return sc(1.0 / (2.0 * kFourPi) *
                      std::sqrt((2.0 * p.l + 1.0) *
                                (2.0 * (p.l + p.dl) + 1.0)) *
                      falling(n + 1.0, 3) * std::cos(a.theta) * st * st);
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.shift2.a";
        s.family = Family::Appendix;
        s.citation = "eq:rmataa";
        s.domain_summary = "l >= 1; degrees l + 1 and l - 1";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l + 1, p.l - 1, a, a, [&p](int lz) {
                const double z2 = static_cast<double>(lz) * lz;
                return sqrt0((static_cast<double>(p.l) * p.l - z2) *
                             ((p.l + 1.0) * (p.l + 1.0) - z2));
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double ct = std::cos(a.theta);
            return sc(std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                      (p.l * (p.l + 1.0)) * (3.0 * ct * ct - 1.0) /
                      (2.0 * kFourPi));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.shift2.b";
        s.family = Family::Appendix;
        s.citation = "eq:rmatab";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, azimuthal shift m = +-1";
        s.local_only = true;
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l + 1, p.l - 1, a, a,
                [&p](int lz) {
                    return sqrt0(static_cast<double>(p.l) * p.l -
                                 static_cast<double>(lz) * lz) *
                           sqrt0((p.l + 1.0 + p.m * lz) *
                                 (p.l + 2.0 + p.m * lz));
                },
                p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double fac =
                -3.0 * p.m / (2.0 * kFourPi) *
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                (p.l * (p.l + 1.0)) * std::cos(a.theta) * std::sin(a.theta);
            return sc(fac * azimuth(a, p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.shift2.c";
        s.family = Family::Appendix;
        s.citation = "eq:rmatac";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, azimuthal shift 2m, m = +-1";
        s.local_only = true;
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l + 1, p.l - 1, a, a,
                [&p](int lz) {
                    return sqrt0(falling(p.l + p.m * lz + 3.0, 4));
                },
                2 * p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            const double fac =
                3.0 / (2.0 * kFourPi) *
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                (p.l * (p.l + 1.0)) * st * st;
            return sc(fac * azimuth(a, 2 * p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lzshift2.a";
        s.family = Family::Appendix;
        s.citation = "eq:mix9a";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, weight lz, azimuthal shift "
            "m = +-1";
        s.local_only = true;
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l + 1, p.l - 1, a, a,
                [&p](int lz) {
                    return lz *
                           sqrt0(static_cast<double>(p.l) * p.l -
                                 static_cast<double>(lz) * lz) *
                           sqrt0((p.l + 1.0 + p.m * lz) *
                                 (p.l + 2.0 + p.m * lz));
                },
                p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double fac =
                -1.0 / (2.0 * kFourPi) *
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                falling(p.l + 1.0, 3) * std::cos(a.theta) *
                std::sin(a.theta);
            return sc(fac * azimuth(a, p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lzshift2.b";
        s.family = Family::Appendix;
        s.citation = "eq:mix9b";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, weight lz, azimuthal shift "
            "2m, m = +-1";
        s.local_only = true;
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l + 1, p.l - 1, a, a,
                [&p](int lz) {
                    return lz * sqrt0(falling(p.l + p.m * lz + 3.0, 4));
                },
                2 * p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            const double fac =
                p.m / kFourPi *
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                falling(p.l + 1.0, 3) * st * st;
            return sc(fac * azimuth(a, 2 * p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lz2shift2.a";
        s.family = Family::Appendix;
        s.citation = "eq:mixaa";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, weight lz^2, no azimuthal "
            "shift";
        s.local_only = true;
        s.in_domain = [](const Params& p) { return p.l >= 1; };
        s.enumerate = [](int lm) { return enum_l(1, lm); };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(p.l + 1, p.l - 1, a, a, [&p](int lz) {
                const double z2 = static_cast<double>(lz) * lz;
                return z2 * sqrt0((static_cast<double>(p.l) * p.l - z2) *
                                  ((p.l + 1.0) * (p.l + 1.0) - z2));
            }));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double st = std::sin(a.theta);
            return sc(1.0 / (16.0 * kFourPi) *
                      std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                      falling(p.l + 2.0, 4) * st * st *
                      (5.0 * std::cos(2.0 * a.theta) + 3.0));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lz2shift2.b";
        s.family = Family::Appendix;
        s.citation = "eq:mixa";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, weight lz^2, azimuthal shift "
            "m = +-1";
        s.local_only = true;
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l + 1, p.l - 1, a, a,
                [&p](int lz) {
                    const double z2 = static_cast<double>(lz) * lz;
                    return z2 *
                           sqrt0(static_cast<double>(p.l) * p.l - z2) *
                           sqrt0((p.l + 1.0 + p.m * lz) *
                                 (p.l + 2.0 + p.m * lz));
                },
                p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double ct = std::cos(a.theta);
            const double fac =
                p.m / (8.0 * kFourPi) *
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                falling(p.l + 1.0, 3) * ct * std::sin(a.theta) *
                (5.0 * (p.l + 2.0) * ct * ct - 5.0 * p.l - 6.0);
            return sc(fac * azimuth(a, p.m));
        };
        out.push_back(std::move(s));
    }
    {
        TheoremSpec s;
        s.id = "appendix.lz2shift2.c";
        s.family = Family::Appendix;
        s.citation = "eq:mixa";
        s.domain_summary =
            "l >= 1; degrees l + 1 and l - 1, weight lz^2, azimuthal shift "
            "2m, m = +-1";
        s.local_only = true;
        s.uses = {.m = true};
        s.in_domain = [](const Params& p) {
            return p.l >= 1 && std::abs(p.m) == 1;
        };
        s.enumerate = [](int lm) {
            std::vector<Params> v;
            for (int l = 1; l <= lm; ++l)
                for (int m : {1, -1}) v.push_back({.l = l, .m = m});
            return v;
        };
        s.lhs = [](const Params& p, const Direction& a, const Direction&) {
            return sc(scalar_sum(
                p.l + 1, p.l - 1, a, a,
                [&p](int lz) {
                    const double z2 = static_cast<double>(lz) * lz;
                    return z2 * sqrt0(falling(p.l + 3.0 + p.m * lz, 4));
                },
                2 * p.m));
        };
        s.rhs = [](const Params& p, const Direction& a, const Direction&) {
            const double ct = std::cos(a.theta);
            const double st = std::sin(a.theta);
            const double fac =
                -1.0 / (8.0 * kFourPi) *
                std::sqrt((2.0 * p.l - 1.0) * (2.0 * p.l + 3.0)) *
                falling(p.l + 1.0, 3) * st * st *
                (5.0 * (p.l + 2.0) * ct * ct - 7.0 * p.l + 2.0);
            return sc(fac * azimuth(a, 2 * p.m));
        };
        out.push_back(std::move(s));
    }
}

} // namespace spinsh::catalog::detail
