// Shared numerical building blocks for the registry: pair sums over
// projections, symmetrized tensor structures, Pauli and projector assemblies.
#pragma once

#include "spinsh/basis.hpp"
#include "spinsh/direction.hpp"
#include "spinsh/harmonics.hpp"
#include "spinsh/legendre.hpp"
#include "spinsh/spherical.hpp"
#include "spinsh/tensor.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace spinsh::catalog {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};
inline constexpr cplx kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

inline SpinorTensor sc(cplx z) { return SpinorTensor::scalar(z); }

/// Exact small integer power in double arithmetic.
inline double ipow_i(int base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= static_cast<double>(base);
    return r;
}

/// Rank-2 Cartesian tensor with entries f(i, j).
template <typename F>
SpinorTensor mat3(F f) {
    SpinorTensor m({3, 3});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(3 * i + j)] = f(i, j);
    return m;
}

/// Falling factorial a (a-1) ... (a-k+1).
inline double falling(double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a - static_cast<double>(i);
    return r;
}

/// Double factorial n!!, with 0!! = (-1)!! = 1.
inline double dfact(int n) {
    double r = 1.0;
    for (int k = n; k >= 2; k -= 2) r *= static_cast<double>(k);
    return r;
}

/// The scalar and vector variables every bilocal right side is built from:
/// x = a.b (clamped), v = a x b, and the Cartesian components.
struct PairVars {
    std::array<double, 3> a{}, b{}, v{};
    double x = 1.0;
    double az = 0.0, bz = 0.0, vz = 0.0;
};

inline PairVars pair_vars(const Direction& da, const Direction& db) {
    PairVars g;
    g.a = da.n;
    g.b = db.n;
    const DotWedge dw = dot_and_wedge(da, db);
    g.x = dw.x;
    g.v = dw.v;
    g.az = da.n[2];
    g.bz = db.n[2];
    g.vz = dw.v[2];
    return g;
}

/// u^(m) = u_1 + i m u_2 for m = +-1, the ladder component of a vector.
inline cplx comp_m(const std::array<double, 3>& u, int m) {
    return {u[0], static_cast<double>(m) * u[1]};
}

/// Derivative table P^(k)_l at one argument; l < 0 or k > l give 0.
class PDeriv {
  public:
    PDeriv(int l_max, int k_max, double x)
        : tab_(l_max < 0 ? 0 : l_max, k_max, x) {}
    double operator()(int l, int k) const {
        return (l < 0 || k > l) ? 0.0 : tab_(k, l);
    }

  private:
    LegendreTable tab_;
};

inline SpinorTensor vec3(const std::array<double, 3>& u) {
    return SpinorTensor::vector3(u[0], u[1], u[2]);
}

/// The all-indices-z component of a real Cartesian tensor.
inline double all_z(const SpinorTensor& t) {
    return t[t.size() - 1].real();
}

inline SpinorTensor identity3() {
    SpinorTensor t(std::vector<int>{3, 3});
    for (int i = 0; i < 3; ++i) t.at({i, i}) = 1.0;
    return t;
}

inline SpinorTensor zhat() { return SpinorTensor::vector3(0.0, 0.0, 1.0); }

inline SpinorTensor outer2(const std::array<double, 3>& u,
                           const std::array<double, 3>& w) {
    return SpinorTensor::outer(vec3(u), vec3(w));
}

/// {u1 ... un}: permutation-symmetrized outer product, no normalization.
inline SpinorTensor braces(const std::vector<std::array<double, 3>>& us) {
    std::vector<SpinorTensor> f;
    f.reserve(us.size());
    for (const auto& u : us) f.push_back(vec3(u));
    return sym_braces(f);
}

/// {u1 ... un}_0: the traceless projection of braces.
inline SpinorTensor braces0(const std::vector<std::array<double, 3>>& us) {
    std::vector<SpinorTensor> f;
    f.reserve(us.size());
    for (const auto& u : us) f.push_back(vec3(u));
    return sym_braces_traceless(f);
}

/// (u w)_0 = {u w}_0 / 2, the round-parenthesis structure; the relative
/// factor 1/2 was fixed by calibration against the brute-force sums.
inline SpinorTensor paren0(const std::array<double, 3>& u,
                           const std::array<double, 3>& w) {
    return 0.5 * braces0({u, w});
}

/// Fix one axis of a tensor to a given index, dropping that axis.
inline SpinorTensor slice_axis(const SpinorTensor& t, int axis, int fixed) {
    std::vector<int> odims;
    for (int k = 0; k < t.order(); ++k)
        if (k != axis) odims.push_back(t.dims()[k]);
    SpinorTensor out(odims);
    std::vector<int> idx(odims.size(), 0);
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::size_t fin = 0;
        int oi = 0;
        for (int k = 0; k < t.order(); ++k) {
            const int component = (k == axis) ? fixed : idx[static_cast<std::size_t>(oi++)];
            fin = fin * static_cast<std::size_t>(t.dims()[k]) +
                  static_cast<std::size_t>(component);
        }
        out[f] = t[fin];
        for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
            if (++idx[static_cast<std::size_t>(k)] < odims[static_cast<std::size_t>(k)]) break;
            idx[static_cast<std::size_t>(k)] = 0;
        }
    }
    return out;
}

inline SpinorTensor slice_last(const SpinorTensor& t, int fixed) {
    return slice_axis(t, t.order() - 1, fixed);
}

/// M[i j] = sum_h eps_{i j h} w_h.
inline SpinorTensor eps_dot(const SpinorTensor& w) {
    SpinorTensor out(std::vector<int>{3, 3});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx acc = 0.0;
            for (int h = 0; h < 3; ++h)
                if (const int e = levi_civita(i, j, h))
                    acc += static_cast<double>(e) * w[static_cast<std::size_t>(h)];
            out.at({i, j}) = acc;
        }
    return out;
}

/// out_i = sum_h eps_{i z h} w_h, i.e. the z-row slice zhat x w.
inline SpinorTensor eps_z(const SpinorTensor& w) {
    SpinorTensor out(std::vector<int>{3});
    for (int i = 0; i < 3; ++i) {
        cplx acc = 0.0;
        for (int h = 0; h < 3; ++h)
            if (const int e = levi_civita(i, 2, h))
                acc += static_cast<double>(e) * w[static_cast<std::size_t>(h)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

/// The spin-3/2 projector X, shape (3, 2, 3, 2) ordered [i A h C].
inline const SpinorTensor& x32() {
    static const SpinorTensor x = projector_spinor(HalfInt::from_twice(3));
    return x;
}

/// sigma[q A B], shape (3, 2, 2), built once.
inline const SpinorTensor& pauli3() {
    static const SpinorTensor s = pauli_vector();
    return s;
}

/// M[h C k D] = T[h k] S[C D] for a vector-block and a spinor-block factor.
inline SpinorTensor block(const SpinorTensor& t, const SpinorTensor& s) {
    return SpinorTensor::outer(t, s).transposed({0, 2, 1, 3});
}

/// M[h C k D] = sum_q T[h k q] sigma^q_{C D}.
inline SpinorTensor block_sigma(const SpinorTensor& t3) {
    return SpinorTensor::contracted(t3, {2}, pauli3(), {0}).transposed({0, 2, 1, 3});
}

/// M[p C r D] = sum_q T[p q r] sigma^q_{C D}.
inline SpinorTensor block_sigma_mid(const SpinorTensor& t3) {
    return SpinorTensor::contracted(t3, {1}, pauli3(), {0}).transposed({0, 2, 1, 3});
}

/// X M X for M indexed [h C k D]; the result is indexed [i A j B].
inline SpinorTensor sandwich32(const SpinorTensor& m) {
    const SpinorTensor inner = SpinorTensor::contracted(x32(), {2, 3}, m, {0, 1});
    return SpinorTensor::contracted(inner, {2, 3}, x32(), {0, 1});
}

using LzWeight = std::function<double(int)>;

inline double unit_weight(int) { return 1.0; }

/// sum_{lz} w(lz) Y_{l2, lz+shift}(b) conj(Y_{l1, lz}(a)).
inline cplx scalar_sum(int l2, int l1, const Direction& a, const Direction& b,
                       const LzWeight& w, int shift = 0) {
    const auto rb = ylm_row(l2, b);
    const auto ra = ylm_row(l1, a);
    cplx acc = 0.0;
    for (int lz = -l1; lz <= l1; ++lz) {
        if (std::abs(lz + shift) > l2) continue;
        const double wv = w(lz);
        if (wv == 0.0) continue;
        acc += wv * rb[static_cast<std::size_t>(l2 + lz + shift)] *
               std::conj(ra[static_cast<std::size_t>(l1 + lz)]);
    }
    return acc;
}

/// sum_{lz} w(lz) Y^{lp s}_{l lz}(b) conj(Y_{l lz}(a)) for integer spin s.
inline SpinorTensor scaten_sum(int lp, int s, int l, const Direction& a,
                               const Direction& b, const LzWeight& w) {
    const auto rb = ylm_row(lp, b);
    const auto ra = ylm_row(l, a);
    SpinorTensor acc{harmonic_dims(HalfInt(s))};
    for (int lz = -l; lz <= l; ++lz) {
        const double wv = w(lz);
        if (wv == 0.0) continue;
        const SpinorTensor y = spin_harmonic_from_row(
            {lp, HalfInt(s), HalfInt(l), HalfInt(lz)}, rb);
        acc += (wv * std::conj(ra[static_cast<std::size_t>(l + lz)])) * y;
    }
    return acc;
}

/// Swapped ordering: sum over the shared projection of
/// Y_{ln}(b) conj(Y^{l s}_{ln}(a)), the scalar harmonic on the b side.
inline SpinorTensor swap_sum(int ln, int l, int s, const Direction& a,
                             const Direction& b) {
    const auto rb = ylm_row(ln, b);
    const auto ra = ylm_row(l, a);
    SpinorTensor acc{harmonic_dims(HalfInt(s))};
    for (int mz = -ln; mz <= ln; ++mz) {
        const SpinorTensor y = spin_harmonic_from_row(
            {l, HalfInt(s), HalfInt(ln), HalfInt(mz)}, ra);
        acc += rb[static_cast<std::size_t>(ln + mz)] * y.conjugated();
    }
    return acc;
}

/// sum_{jz} Y^{lp sp}_{j jz}(b) (x) conj(Y^{l s}_{j jz}(a)).
inline SpinorTensor pair_sum(int lp, HalfInt sp, int l, HalfInt s, HalfInt j,
                             const Direction& a, const Direction& b) {
    const auto rb = ylm_row(lp, b);
    const auto ra = ylm_row(l, a);
    std::vector<int> dims = harmonic_dims(sp);
    const std::vector<int> da = harmonic_dims(s);
    dims.insert(dims.end(), da.begin(), da.end());
    SpinorTensor acc(dims);
    for (std::int64_t tz = -j.twice(); tz <= j.twice(); tz += 2) {
        const HalfInt jz = HalfInt::from_twice(tz);
        const SpinorTensor yb = spin_harmonic_from_row({lp, sp, j, jz}, rb);
        const SpinorTensor ya = spin_harmonic_from_row({l, s, j, jz}, ra);
        acc += SpinorTensor::outer(yb, ya.conjugated());
    }
    return acc;
}

} // namespace spinsh::catalog
