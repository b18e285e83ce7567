// Seeded sweep over the registry: every valid tuple of every selected
// theorem evaluated against the configured direction pairs, with glob
// filtering and optional thread parallelism.
#pragma once

#include "spinsh/catalog/extract.hpp"
#include "spinsh/catalog/registry.hpp"
#include "spinsh/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace spinsh::catalog {

struct SweepConfig {
    int l_max = 10;
    int pairs = 20;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::string filter;
    int jobs = 1;
};

/// Sums over tuples outside the validity lists must land on zero harder
/// than the residual tolerance asks of the live ones.
inline constexpr double kVanishTol = 1e-11;

inline bool glob_match(const char* pat, const char* str) {
    while (*pat) {
        if (*pat == '*') {
            ++pat;
            if (*pat == '\0') return true;
            for (const char* s = str;; ++s) {
                if (glob_match(pat, s)) return true;
                if (*s == '\0') return false;
            }
        }
        if (*str == '\0' || (*pat != '?' && *pat != *str)) return false;
        ++pat;
        ++str;
    }
    return *str == '\0';
}

/// The two deterministic pairs (equal and antipodal, where v = 0) followed
/// by `count` uniform pairs from the named generator.
inline std::vector<std::pair<Direction, Direction>> make_pairs(
    std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    const auto u01 = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    std::vector<std::pair<Direction, Direction>> out;
    const Direction d0(1.0, 0.5);
    out.emplace_back(d0, d0);
    out.emplace_back(d0, d0.antipode());
    for (int i = 0; i < count; ++i) {
        const double za = 2.0 * u01() - 1.0;
        const double pa = 2.0 * kPi * u01();
        const double zb = 2.0 * u01() - 1.0;
        const double pb = 2.0 * kPi * u01();
        out.emplace_back(Direction(std::acos(za), pa),
                         Direction(std::acos(zb), pb));
    }
    return out;
}

/// Unique directions of a pair list, each turned into the pair (d, d).
inline std::vector<std::pair<Direction, Direction>> localize(
    const std::vector<std::pair<Direction, Direction>>& pairs) {
    std::vector<std::pair<Direction, Direction>> out;
    const auto push_unique = [&out](const Direction& d) {
        for (const auto& q : out)
            if (q.first.theta == d.theta && q.first.phi == d.phi) return;
        out.emplace_back(d, d);
    };
    for (const auto& pr : pairs) {
        push_unique(pr.first);
        push_unique(pr.second);
    }
    return out;
}

namespace detail {

inline void sweep_one(const TheoremSpec& s, const SweepConfig& cfg,
                      const std::vector<std::pair<Direction, Direction>>& pairs,
                      std::vector<CaseRecord>& out) {
    const std::vector<std::pair<Direction, Direction>> eval_pairs =
        s.local_only ? localize(pairs) : pairs;

    for (const auto& p : s.enumerate(cfg.l_max)) {
        CaseRecord rec;
        rec.id = s.id;
        rec.params = p;
        rec.uses = s.uses;
        rec.kind = s.mode == Mode::Explicit ? "explicit" : "extraction";
        try {
            if (s.mode == Mode::Explicit) {
                double worst = 0.0;
                for (const auto& [a, b] : eval_pairs)
                    worst = std::max(worst, residual(s, p, a, b));
                rec.residual = worst;
                rec.pass = worst < cfg.tol;
            } else {
                const ExtractedCoefficients ex =
                    extract_coefficients(s, p, eval_pairs);
                rec.residual = ex.residual;
                rec.pass = ex.residual < cfg.tol && ex.max_imag < cfg.tol;
            }
        } catch (const std::exception&) {
            rec.residual = std::numeric_limits<double>::infinity();
            rec.pass = false;
        }
        out.push_back(std::move(rec));
    }

    for (const auto& p : s.enumerate_vanishing(cfg.l_max)) {
        CaseRecord rec;
        rec.id = s.id;
        rec.params = p;
        rec.uses = s.uses;
        rec.kind = "vanishing";
        try {
            double worst = 0.0;
            for (const auto& [a, b] : eval_pairs)
                worst = std::max(worst, evaluate_lhs(s, p, a, b).max_abs());
            rec.residual = worst;
            rec.pass = worst < kVanishTol;
        } catch (const std::exception&) {
            rec.residual = std::numeric_limits<double>::infinity();
            rec.pass = false;
        }
        out.push_back(std::move(rec));
    }
}

} // namespace detail

inline VerificationReport sweep(const SweepConfig& cfg) {
    std::vector<const TheoremSpec*> selected;
    for (const auto& s : registry())
        if (cfg.filter.empty() || glob_match(cfg.filter.c_str(), s.id.c_str()))
            selected.push_back(&s);

    const auto pairs = make_pairs(cfg.seed, cfg.pairs);

    std::vector<std::vector<CaseRecord>> slots(selected.size());
    const int jobs =
        std::min(std::max(1, cfg.jobs), static_cast<int>(selected.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            detail::sweep_one(*selected[i], cfg, pairs, slots[i]);
    } else {
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < selected.size();
                 i = next.fetch_add(1))
                detail::sweep_one(*selected[i], cfg, pairs, slots[i]);
        };
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    VerificationReport rep;
    rep.meta.seed = cfg.seed;
    rep.meta.l_max = cfg.l_max;
    rep.meta.pairs = cfg.pairs;
    rep.meta.tol = cfg.tol;
    rep.meta.version = kVersion;
    rep.meta.timestamp = utc_timestamp();
    for (auto& slot : slots)
        for (auto& rec : slot) rep.records.push_back(std::move(rec));
    std::stable_sort(rep.records.begin(), rep.records.end(),
                     [](const CaseRecord& x, const CaseRecord& y) {
                         if (x.id != y.id) return x.id < y.id;
                         return x.params < y.params;
                     });
    rep.recount();
    return rep;
}

} // namespace spinsh::catalog
