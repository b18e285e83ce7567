// Standard spin basis elements, projectors and index-symmetry helpers.
#pragma once

#include "spinsh/clebsch.hpp"
#include "spinsh/halfint.hpp"
#include "spinsh/tensor.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace spinsh {

/// The rank-1 spherical basis: eps(0) = (0, 0, 1),
/// eps(+-1) = -+ (1, +-i, 0) / sqrt(2).
inline SpinorTensor spherical_basis(int m) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (m) {
        case 0:
            return SpinorTensor::vector3(0.0, 0.0, 1.0);
        case 1:
            return SpinorTensor::vector3(-r, cplx(0.0, -r), 0.0);
        case -1:
            return SpinorTensor::vector3(r, cplx(0.0, -r), 0.0);
        default:
            throw std::invalid_argument("spherical_basis: m must be -1, 0 or 1");
    }
}

namespace detail {

struct BasisKey {
    std::int64_t a, b;
    bool operator==(const BasisKey& o) const { return a == o.a && b == o.b; }
};
struct BasisKeyHash {
    std::size_t operator()(const BasisKey& k) const {
        return std::hash<std::int64_t>()(k.a * 1000003 + k.b);
    }
};

template <typename Builder>
inline SpinorTensor cached_lookup(std::unordered_map<BasisKey, SpinorTensor, BasisKeyHash>& map,
                                  std::shared_mutex& mutex, BasisKey key, Builder build) {
    {
        std::shared_lock lock(mutex);
        auto it = map.find(key);
        if (it != map.end()) return it->second;
    }
    SpinorTensor t = build();
    std::unique_lock lock(mutex);
    return map.emplace(key, std::move(t)).first->second;
}

} // namespace detail

/// Standard rank-n spin basis tensor eps^(n)(m), built by coupling
/// eps^(n-1) with eps^(1) through Clebsch-Gordan coefficients. Shape (3,)*n.
inline SpinorTensor standard_tensor(int n, int m) {
    if (n < 0) throw std::invalid_argument("standard_tensor: negative rank");
    if (std::abs(m) > n)
        throw std::invalid_argument("standard_tensor: |m| exceeds the rank");
    if (n == 0) return SpinorTensor::scalar(1.0);
    if (n == 1) return spherical_basis(m);

    static std::unordered_map<detail::BasisKey, SpinorTensor, detail::BasisKeyHash> cache;
    static std::shared_mutex mutex;
    return detail::cached_lookup(cache, mutex, {n, m}, [n, m] {
        SpinorTensor out(std::vector<int>(static_cast<std::size_t>(n), 3));
        for (int m2 = -1; m2 <= 1; ++m2) {
            const int m1 = m - m2;
            if (std::abs(m1) > n - 1) continue;
            const double c = cg(n - 1, m1, 1, m2, n, m);
            if (c == 0.0) continue;
            SpinorTensor term =
                SpinorTensor::outer(standard_tensor(n - 1, m1), spherical_basis(m2));
            out += c * term;
        }
        return out;
    });
}

/// Standard spin-s basis spinor chi^(s)(s_z) for half-odd s, built by coupling
/// eps^(s-1/2) with the elementary spinor chi(+1/2) = (1, 0), chi(-1/2) = (0, 1).
/// Shape (3,)*(s-1/2) + (2,).
inline SpinorTensor standard_spinor(HalfInt s, HalfInt sz) {
    if (s.is_integer() || s.twice() < 1)
        throw std::invalid_argument("standard_spinor: s must be a positive half-odd integer");
    if (!integer_spaced(s, sz) || abs(sz) > s)
        throw std::invalid_argument("standard_spinor: bad projection");
    if (s.twice() == 1) {
        SpinorTensor t(std::vector<int>{2});
        t[sz.twice() == 1 ? 0 : 1] = 1.0;
        return t;
    }

    static std::unordered_map<detail::BasisKey, SpinorTensor, detail::BasisKeyHash> cache;
    static std::shared_mutex mutex;
    return detail::cached_lookup(cache, mutex, {s.twice(), sz.twice()}, [s, sz] {
        const int n = static_cast<int>((s.twice() - 1) / 2);
        std::vector<int> dims(static_cast<std::size_t>(n), 3);
        dims.push_back(2);
        SpinorTensor out(dims);
        const HalfInt half = HalfInt::half();
        for (int two_m2 = -1; two_m2 <= 1; two_m2 += 2) {
            const HalfInt m2 = HalfInt::from_twice(two_m2);
            const HalfInt m1 = sz - m2;
            if (abs(m1) > HalfInt(n)) continue;
            const double c = cg(HalfInt(n), m1, half, m2, s, sz);
            if (c == 0.0) continue;
            SpinorTensor term = SpinorTensor::outer(
                standard_tensor(n, static_cast<int>(m1.integer())),
                standard_spinor(half, m2));
            out += c * term;
        }
        return out;
    });
}

/// Generic basis element for spin s: 1 for s = 0, eps^(s)(s_z) for integer s,
/// chi^(s)(s_z) for half-odd s.
inline SpinorTensor basis_element(HalfInt s, HalfInt sz) {
    if (s.twice() == 0) return SpinorTensor::scalar(1.0);
    if (s.is_integer())
        return standard_tensor(static_cast<int>(s.integer()), static_cast<int>(sz.integer()));
    return standard_spinor(s, sz);
}

/// Projector onto the traceless symmetric rank-n subspace:
/// X_n = sum_m eps^(n)(m) (x) conj(eps^(n)(m)), shape (3,)*2n.
inline SpinorTensor projector_tensor(int n) {
    if (n < 0) throw std::invalid_argument("projector_tensor: negative rank");
    static std::unordered_map<detail::BasisKey, SpinorTensor, detail::BasisKeyHash> cache;
    static std::shared_mutex mutex;
    return detail::cached_lookup(cache, mutex, {n, 0}, [n] {
        SpinorTensor out(std::vector<int>(static_cast<std::size_t>(2 * n), 3));
        for (int m = -n; m <= n; ++m) {
            const SpinorTensor e = standard_tensor(n, m);
            out += SpinorTensor::outer(e, e.conjugated());
        }
        return out;
    });
}

/// Spin-s projector for half-odd s:
/// X_s = sum_{s_z} chi^(s)(s_z) (x) conj(chi^(s)(s_z)),
/// shape (3,)*n + (2,) + (3,)*n + (2,) with n = s - 1/2.
inline SpinorTensor projector_spinor(HalfInt s) {
    if (s.is_integer() || s.twice() < 1)
        throw std::invalid_argument("projector_spinor: s must be a positive half-odd integer");
    static std::unordered_map<detail::BasisKey, SpinorTensor, detail::BasisKeyHash> cache;
    static std::shared_mutex mutex;
    return detail::cached_lookup(cache, mutex, {s.twice(), 0}, [s] {
        SpinorTensor out;
        bool first = true;
        for (std::int64_t two_sz = -s.twice(); two_sz <= s.twice(); two_sz += 2) {
            const SpinorTensor c = standard_spinor(s, HalfInt::from_twice(two_sz));
            SpinorTensor term = SpinorTensor::outer(c, c.conjugated());
            if (first) {
                out = term;
                first = false;
            } else {
                out += term;
            }
        }
        return out;
    });
}

/// {a b ... } : sum of the outer products of rank-1 factors over all
/// permutations of the factor order. No 1/n! normalization.
inline SpinorTensor sym_braces(const std::vector<SpinorTensor>& factors) {
    const int n = static_cast<int>(factors.size());
    if (n == 0) return SpinorTensor::scalar(1.0);
    for (const auto& f : factors)
        if (f.dims() != std::vector<int>{3})
            throw std::invalid_argument("sym_braces: factors must be rank-1 tensors");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    SpinorTensor out(std::vector<int>(static_cast<std::size_t>(n), 3));
    do {
        SpinorTensor prod = factors[perm[0]];
        for (int i = 1; i < n; ++i) prod = SpinorTensor::outer(prod, factors[perm[i]]);
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// {a b ...}_0 : the traceless projection X_n . {a b ...}.
inline SpinorTensor sym_braces_traceless(const std::vector<SpinorTensor>& factors) {
    const int n = static_cast<int>(factors.size());
    const SpinorTensor braces = sym_braces(factors);
    if (n == 0) return braces;
    std::vector<int> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        left[i] = n + i;
        right[i] = i;
    }
    return SpinorTensor::contracted(projector_tensor(n), left, braces, right);
}

/// [a b] = a (x) b - b (x) a for rank-1 factors.
inline SpinorTensor antisym_brackets(const SpinorTensor& a, const SpinorTensor& b) {
    if (a.dims() != std::vector<int>{3} || b.dims() != std::vector<int>{3})
        throw std::invalid_argument("antisym_brackets: factors must be rank-1 tensors");
    return SpinorTensor::outer(a, b) - SpinorTensor::outer(b, a);
}

/// Pauli matrix sigma^k (k = 0, 1, 2 for x, y, z), shape (2, 2).
inline SpinorTensor pauli(int k) {
    SpinorTensor s(std::vector<int>{2, 2});
    switch (k) {
        case 0:
            s.at({0, 1}) = 1.0;
            s.at({1, 0}) = 1.0;
            break;
        case 1:
            s.at({0, 1}) = cplx(0.0, -1.0);
            s.at({1, 0}) = cplx(0.0, 1.0);
            break;
        case 2:
            s.at({0, 0}) = 1.0;
            s.at({1, 1}) = -1.0;
            break;
        default:
            throw std::invalid_argument("pauli: k must be 0, 1 or 2");
    }
    return s;
}

/// The Pauli vector as one tensor sigma[k, A, B], shape (3, 2, 2).
inline SpinorTensor pauli_vector() {
    SpinorTensor s(std::vector<int>{3, 2, 2});
    for (int k = 0; k < 3; ++k) {
        const SpinorTensor pk = pauli(k);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) s.at({k, a, b}) = pk.at({a, b});
    }
    return s;
}

/// v . sigma for a (possibly complex) 3-vector v, shape (2, 2).
inline SpinorTensor sigma_dot(const SpinorTensor& v) {
    if (v.dims() != std::vector<int>{3})
        throw std::invalid_argument("sigma_dot: expected a rank-1 tensor");
    SpinorTensor out(std::vector<int>{2, 2});
    for (int k = 0; k < 3; ++k) out += v[static_cast<std::size_t>(k)] * pauli(k);
    return out;
}

/// Identity on the spinor index, shape (2, 2).
inline SpinorTensor spinor_identity() {
    SpinorTensor s(std::vector<int>{2, 2});
    s.at({0, 0}) = 1.0;
    s.at({1, 1}) = 1.0;
    return s;
}

constexpr int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

} // namespace spinsh
