// Exact Clebsch-Gordan coefficients in the Condon-Shortley convention.
#pragma once

#include "spinsh/halfint.hpp"
#include "spinsh/rational.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spinsh {

/// A Clebsch-Gordan coefficient represented exactly: the value is
/// sign * sqrt(square) with square a non-negative rational.
struct CGExact {
    int sign = 0;
    BigRational square = 0;

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::sqrt(spinsh::to_double(square));
    }
    bool operator==(const CGExact& o) const {
        return sign == o.sign && square == o.square;
    }
};

namespace detail {

inline void check_pair(HalfInt j, HalfInt m, const char* name) {
    if (j.twice() < 0)
        throw std::invalid_argument(std::string("cg: negative angular momentum ") + name);
    if (!integer_spaced(j, m))
        throw std::invalid_argument(std::string("cg: projection of ") + name +
                                    " differs from it by a non-integer");
    if (abs(m) > j)
        throw std::invalid_argument(std::string("cg: |projection| exceeds ") + name);
}

/// Racah's single-sum form, evaluated in exact rational arithmetic.
inline CGExact cg_exact_uncached(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                                 HalfInt j, HalfInt m) {
    check_pair(j1, m1, "j1");
    check_pair(j2, m2, "j2");
    check_pair(j, m, "j");

    if (m1 + m2 != m) return {};
    if (!integer_spaced(j1 + j2, j)) return {};
    if (j > j1 + j2 || j < abs(j1 - j2)) return {};

    const std::int64_t a = (j1 + j2 - j).integer();
    const std::int64_t b = (j1 - j2 + j).integer();
    const std::int64_t c = (j2 - j1 + j).integer();
    const std::int64_t d = (j1 + m1).integer();
    const std::int64_t e = (j1 - m1).integer();
    const std::int64_t f = (j2 + m2).integer();
    const std::int64_t g = (j2 - m2).integer();
    const std::int64_t h = (j + m).integer();
    const std::int64_t i = (j - m).integer();
    const std::int64_t p = (j - j2 + m1).integer();
    const std::int64_t q = (j - j1 - m2).integer();

    BigRational pref(j.twice() + 1, 1);
    pref *= BigRational(factorial(a) * factorial(b) * factorial(c),
                        factorial((j1 + j2 + j).integer() + 1));
    pref *= BigRational(factorial(d) * factorial(e), 1) * BigRational(factorial(f), 1);
    pref *= BigRational(factorial(g) * factorial(h) * factorial(i), 1);

    const std::int64_t k_lo = std::max<std::int64_t>({0, -p, -q});
    const std::int64_t k_hi = std::min<std::int64_t>({a, e, f});
    BigRational sum = 0;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        BigRational term(1, factorial(k) * factorial(a - k) * factorial(e - k) *
                                factorial(f - k) * factorial(p + k) * factorial(q + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum == 0) return {};

    CGExact out;
    out.sign = sign_of(sum);
    out.square = pref * sum * sum;
    return out;
}

struct CGKey {
    std::array<std::int64_t, 6> t;
    bool operator==(const CGKey& o) const { return t == o.t; }
};

struct CGKeyHash {
    std::size_t operator()(const CGKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::int64_t v : k.t) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct CGCacheEntry {
    CGExact exact;
    double value = 0.0;
};

/// Process-wide memo table. Lookups take a shared lock so concurrent readers
/// never block each other; the table stops growing past a fixed bound.
class CGCache {
  public:
    static CGCache& instance() {
        static CGCache c;
        return c;
    }

    CGCacheEntry lookup(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                        HalfInt j, HalfInt m) {
        const CGKey key{{j1.twice(), m1.twice(), j2.twice(), m2.twice(),
                         j.twice(), m.twice()}};
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        CGCacheEntry entry;
        entry.exact = cg_exact_uncached(j1, m1, j2, m2, j, m);
        entry.value = entry.exact.to_double();
        {
            std::unique_lock lock(mutex_);
            if (map_.size() < kMaxEntries) map_.emplace(key, entry);
        }
        return entry;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    static constexpr std::size_t kMaxEntries = 1u << 20;

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CGKey, CGCacheEntry, CGKeyHash> map_;
};

} // namespace detail

/// <j1 m1 j2 m2 | j m> exactly. Unphysical (j, m) pairs throw; selection-rule
/// violations (m1 + m2 != m, triangle failure) give the zero coefficient.
inline CGExact cg_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                        HalfInt j, HalfInt m) {
    return detail::CGCache::instance().lookup(j1, m1, j2, m2, j, m).exact;
}

/// <j1 m1 j2 m2 | j m> as a double, through the same memo table.
inline double cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    return detail::CGCache::instance().lookup(j1, m1, j2, m2, j, m).value;
}

inline std::size_t cg_cache_size() { return detail::CGCache::instance().size(); }

/// Result of collapsing sum_i sign_i * sqrt(square_i) into coeff * sqrt(common).
/// Valid only when every nonzero square_i / square_j is a perfect rational
/// square; `ok` reports whether that held.
struct SignedSqrtSum {
    bool ok = false;
    BigRational common = 0;
    BigRational coeff = 0;
};

/// Collapse a sum of exact signed square roots into a single coeff*sqrt(common).
/// Terms with sign 0 are skipped. Used to verify CG orthogonality and
/// completeness with zero floating-point tolerance.
inline SignedSqrtSum signed_sqrt_sum(const std::vector<CGExact>& terms) {
    SignedSqrtSum out;
    const CGExact* first = nullptr;
    for (const auto& t : terms) {
        if (t.sign != 0) {
            first = &t;
            break;
        }
    }
    if (first == nullptr) {
        out.ok = true;
        return out;
    }
    out.common = first->square;
    BigRational coeff = 0;
    for (const auto& t : terms) {
        if (t.sign == 0) continue;
        BigRational ratio = t.square / out.common;
        BigRational root;
        if (!exact_sqrt(ratio, root)) return out;
        coeff += t.sign * root;
    }
    out.coeff = coeff;
    out.ok = true;
    return out;
}

/// True iff the collapsed sum equals the exact rational `expected`
/// (coeff * sqrt(common) == expected, decided without floating point).
inline bool signed_sqrt_sum_equals(const SignedSqrtSum& s, const BigRational& expected) {
    if (!s.ok) return false;
    if (s.coeff == 0) return expected == 0;
    if (sign_of(s.coeff) != sign_of(expected)) return false;
    return s.coeff * s.coeff * s.common == expected * expected;
}

/// Exact orthogonality of the coupling matrix for fixed (j1, j2):
/// sum_{m1} <j1 m1 j2 m-m1 | j m> <j1 m1 j2 m-m1 | j' m> = delta_{j j'},
/// verified in rational arithmetic for every (j, j', m). Within each sum the
/// m1-dependent factorials enter both factors, so term ratios are perfect
/// rational squares and the whole sum collapses to coeff * sqrt(common).
inline bool cg_orthogonality_exact(HalfInt j1, HalfInt j2) {
    for (HalfInt j = abs(j1 - j2); j <= j1 + j2; j += 1) {
        for (HalfInt jp = j; jp <= j1 + j2; jp += 1) {
            const HalfInt m_hi = j < jp ? j : jp;
            for (HalfInt m = -m_hi; m <= m_hi; m += 1) {
                std::vector<CGExact> terms;
                for (HalfInt m1 = -j1; m1 <= j1; m1 += 1) {
                    const HalfInt m2 = m - m1;
                    if (abs(m2) > j2) continue;
                    const CGExact a = cg_exact(j1, m1, j2, m2, j, m);
                    const CGExact b = cg_exact(j1, m1, j2, m2, jp, m);
                    terms.push_back({a.sign * b.sign, a.square * b.square});
                }
                const BigRational expected = (j == jp) ? 1 : 0;
                if (!signed_sqrt_sum_equals(signed_sqrt_sum(terms), expected))
                    return false;
            }
        }
    }
    return true;
}

/// Exact completeness for fixed (j1, j2):
/// sum_j <j1 m1 j2 m2 | j m> <j1 m1' j2 m2' | j m> = delta_{m1 m1'}
/// whenever m1 + m2 = m1' + m2' = m, verified the same way (here the
/// j-dependent factors are common to both coefficients of each term).
inline bool cg_completeness_exact(HalfInt j1, HalfInt j2) {
    for (HalfInt m = -(j1 + j2); m <= j1 + j2; m += 1) {
        for (HalfInt m1 = -j1; m1 <= j1; m1 += 1) {
            const HalfInt m2 = m - m1;
            if (abs(m2) > j2) continue;
            for (HalfInt m1p = m1; m1p <= j1; m1p += 1) {
                const HalfInt m2p = m - m1p;
                if (abs(m2p) > j2) continue;
                std::vector<CGExact> terms;
                for (HalfInt j = abs(j1 - j2); j <= j1 + j2; j += 1) {
                    if (abs(m) > j) continue;
                    const CGExact a = cg_exact(j1, m1, j2, m2, j, m);
                    const CGExact b = cg_exact(j1, m1p, j2, m2p, j, m);
                    terms.push_back({a.sign * b.sign, a.square * b.square});
                }
                const BigRational expected = (m1 == m1p) ? 1 : 0;
                if (!signed_sqrt_sum_equals(signed_sqrt_sum(terms), expected))
                    return false;
            }
        }
    }
    return true;
}

} // namespace spinsh
