// Dense complex tensors mixing vector (extent 3) and spinor (extent 2) indices.
#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace spinsh {

using cplx = std::complex<double>;

/// Small dense tensor over C with an arbitrary mix of vector indices
/// (extent 3) and spinor indices (extent 2), stored row-major. A scalar is
/// the empty-dims case with a single entry. Every quantity the identities
/// handle, from plain numbers to rank-3 tensors with two spinor legs, fits
/// this one type, which keeps the theorem registry uniform.
class SpinorTensor {
  public:
    SpinorTensor() : v_(1, cplx(0.0)) {}
    explicit SpinorTensor(std::vector<int> dims) : dims_(std::move(dims)) {
        std::size_t n = 1;
        for (int d : dims_) {
            if (d != 2 && d != 3)
                throw std::invalid_argument("SpinorTensor: index extents must be 2 or 3");
            n *= static_cast<std::size_t>(d);
        }
        v_.assign(n, cplx(0.0));
    }

    static SpinorTensor scalar(cplx z) {
        SpinorTensor t;
        t.v_[0] = z;
        return t;
    }
    static SpinorTensor vector3(cplx x, cplx y, cplx z) {
        SpinorTensor t(std::vector<int>{3});
        t.v_ = {x, y, z};
        return t;
    }

    const std::vector<int>& dims() const { return dims_; }
    int order() const { return static_cast<int>(dims_.size()); }
    int rank() const {
        return static_cast<int>(std::count(dims_.begin(), dims_.end(), 3));
    }
    int spinor_rank() const {
        return static_cast<int>(std::count(dims_.begin(), dims_.end(), 2));
    }
    std::size_t size() const { return v_.size(); }

    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }

    std::size_t flat_index(std::initializer_list<int> idx) const {
        if (idx.size() != dims_.size())
            throw std::invalid_argument("SpinorTensor: wrong number of indices");
        std::size_t f = 0;
        auto it = idx.begin();
        for (std::size_t k = 0; k < dims_.size(); ++k, ++it) {
            if (*it < 0 || *it >= dims_[k])
                throw std::out_of_range("SpinorTensor: index out of range");
            f = f * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(*it);
        }
        return f;
    }
    cplx& at(std::initializer_list<int> idx) { return v_[flat_index(idx)]; }
    const cplx& at(std::initializer_list<int> idx) const { return v_[flat_index(idx)]; }

    SpinorTensor& operator+=(const SpinorTensor& o) {
        require_same_dims(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    SpinorTensor& operator-=(const SpinorTensor& o) {
        require_same_dims(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    SpinorTensor& operator*=(cplx z) {
        for (auto& c : v_) c *= z;
        return *this;
    }
    friend SpinorTensor operator+(SpinorTensor a, const SpinorTensor& b) { return a += b; }
    friend SpinorTensor operator-(SpinorTensor a, const SpinorTensor& b) { return a -= b; }
    friend SpinorTensor operator*(SpinorTensor a, cplx z) { return a *= z; }
    friend SpinorTensor operator*(cplx z, SpinorTensor a) { return a *= z; }
    SpinorTensor operator-() const {
        SpinorTensor t = *this;
        for (auto& c : t.v_) c = -c;
        return t;
    }

    SpinorTensor conjugated() const {
        SpinorTensor t = *this;
        for (auto& c : t.v_) c = std::conj(c);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : v_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Tensor (outer) product; the dims concatenate.
    static SpinorTensor outer(const SpinorTensor& a, const SpinorTensor& b) {
        std::vector<int> dims = a.dims_;
        dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
        SpinorTensor out(std::move(dims));
        std::size_t f = 0;
        for (std::size_t i = 0; i < a.v_.size(); ++i)
            for (std::size_t j = 0; j < b.v_.size(); ++j, ++f)
                out.v_[f] = a.v_[i] * b.v_[j];
        return out;
    }

    /// Index permutation: out[idx] = in[idx composed with perm], where
    /// perm[k] names the input axis that becomes output axis k.
    SpinorTensor transposed(const std::vector<int>& perm) const {
        if (perm.size() != dims_.size())
            throw std::invalid_argument("transposed: permutation length mismatch");
        std::vector<int> odims(dims_.size());
        for (std::size_t k = 0; k < perm.size(); ++k) odims[k] = dims_[perm[k]];
        SpinorTensor out(odims);
        std::vector<int> idx(dims_.size(), 0);
        for (std::size_t f = 0; f < v_.size(); ++f) {
            std::size_t of = 0;
            for (std::size_t k = 0; k < perm.size(); ++k)
                of = of * static_cast<std::size_t>(odims[k]) +
                     static_cast<std::size_t>(idx[perm[k]]);
            out.v_[of] = v_[f];
            for (int k = static_cast<int>(dims_.size()) - 1; k >= 0; --k) {
                if (++idx[k] < dims_[k]) break;
                idx[k] = 0;
            }
        }
        return out;
    }

    /// Contract axes_a of a against axes_b of b pairwise; the free axes of a
    /// come first in the result, then the free axes of b.
    static SpinorTensor contracted(const SpinorTensor& a, const std::vector<int>& axes_a,
                                   const SpinorTensor& b, const std::vector<int>& axes_b) {
        if (axes_a.size() != axes_b.size())
            throw std::invalid_argument("contracted: axis count mismatch");
        for (std::size_t k = 0; k < axes_a.size(); ++k)
            if (a.dims_[axes_a[k]] != b.dims_[axes_b[k]])
                throw std::invalid_argument("contracted: extent mismatch");

        const std::vector<int> free_a = complement(a.order(), axes_a);
        const std::vector<int> free_b = complement(b.order(), axes_b);
        std::vector<int> odims;
        for (int k : free_a) odims.push_back(a.dims_[k]);
        for (int k : free_b) odims.push_back(b.dims_[k]);
        SpinorTensor out(odims);

        const std::vector<std::size_t> sa = strides(a.dims_);
        const std::vector<std::size_t> sb = strides(b.dims_);
        std::size_t con_total = 1;
        for (int k : axes_a) con_total *= static_cast<std::size_t>(a.dims_[k]);

        // Precompute flat offsets for the contracted block of each operand.
        std::vector<std::size_t> coff_a(con_total, 0), coff_b(con_total, 0);
        {
            std::vector<int> cidx(axes_a.size(), 0);
            for (std::size_t c = 0; c < con_total; ++c) {
                std::size_t fa = 0, fb = 0;
                for (std::size_t k = 0; k < axes_a.size(); ++k) {
                    fa += static_cast<std::size_t>(cidx[k]) * sa[axes_a[k]];
                    fb += static_cast<std::size_t>(cidx[k]) * sb[axes_b[k]];
                }
                coff_a[c] = fa;
                coff_b[c] = fb;
                for (int k = static_cast<int>(cidx.size()) - 1; k >= 0; --k) {
                    if (++cidx[k] < a.dims_[axes_a[k]]) break;
                    cidx[k] = 0;
                }
            }
        }

        std::size_t na = 1, nb = 1;
        for (int k : free_a) na *= static_cast<std::size_t>(a.dims_[k]);
        for (int k : free_b) nb *= static_cast<std::size_t>(b.dims_[k]);
        std::vector<std::size_t> foff_a(na, 0), foff_b(nb, 0);
        fill_free_offsets(foff_a, a.dims_, sa, free_a);
        fill_free_offsets(foff_b, b.dims_, sb, free_b);

        std::size_t f = 0;
        for (std::size_t ia = 0; ia < na; ++ia) {
            for (std::size_t ib = 0; ib < nb; ++ib, ++f) {
                cplx acc = 0.0;
                for (std::size_t c = 0; c < con_total; ++c)
                    acc += a.v_[foff_a[ia] + coff_a[c]] * b.v_[foff_b[ib] + coff_b[c]];
                out.v_[f] = acc;
            }
        }
        return out;
    }

    /// Sum over the diagonal of two equal-extent axes.
    SpinorTensor traced(int ax1, int ax2) const {
        if (ax1 == ax2 || dims_[ax1] != dims_[ax2])
            throw std::invalid_argument("traced: invalid axis pair");
        if (ax1 > ax2) std::swap(ax1, ax2);
        std::vector<int> odims;
        for (int k = 0; k < order(); ++k)
            if (k != ax1 && k != ax2) odims.push_back(dims_[k]);
        SpinorTensor out(odims);
        const std::vector<std::size_t> s = strides(dims_);
        std::vector<int> free_axes = complement(order(), {ax1, ax2});
        std::size_t nf = 1;
        for (int k : free_axes) nf *= static_cast<std::size_t>(dims_[k]);
        std::vector<std::size_t> foff(nf, 0);
        fill_free_offsets(foff, dims_, s, free_axes);
        for (std::size_t i = 0; i < nf; ++i) {
            cplx acc = 0.0;
            for (int d = 0; d < dims_[ax1]; ++d)
                acc += v_[foff[i] + static_cast<std::size_t>(d) * (s[ax1] + s[ax2])];
            out.v_[i] = acc;
        }
        return out;
    }

    /// Largest entry of a - b in absolute value.
    static double distance(const SpinorTensor& a, const SpinorTensor& b) {
        a.require_same_dims(b);
        double m = 0.0;
        for (std::size_t i = 0; i < a.v_.size(); ++i)
            m = std::max(m, std::abs(a.v_[i] - b.v_[i]));
        return m;
    }

  private:
    void require_same_dims(const SpinorTensor& o) const {
        if (dims_ != o.dims_)
            throw std::invalid_argument("SpinorTensor: shape mismatch");
    }
    static std::vector<std::size_t> strides(const std::vector<int>& dims) {
        std::vector<std::size_t> s(dims.size(), 1);
        for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
            s[k] = s[k + 1] * static_cast<std::size_t>(dims[k + 1]);
        return s;
    }
    static std::vector<int> complement(int n, const std::vector<int>& axes) {
        std::vector<int> out;
        for (int k = 0; k < n; ++k)
            if (std::find(axes.begin(), axes.end(), k) == axes.end()) out.push_back(k);
        return out;
    }
    static void fill_free_offsets(std::vector<std::size_t>& off, const std::vector<int>& dims,
                                  const std::vector<std::size_t>& s,
                                  const std::vector<int>& free_axes) {
        std::vector<int> idx(free_axes.size(), 0);
        for (std::size_t i = 0; i < off.size(); ++i) {
            std::size_t f = 0;
            for (std::size_t k = 0; k < free_axes.size(); ++k)
                f += static_cast<std::size_t>(idx[k]) * s[free_axes[k]];
            off[i] = f;
            for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
                if (++idx[k] < dims[free_axes[k]]) break;
                idx[k] = 0;
            }
        }
    }

    std::vector<int> dims_;
    std::vector<cplx> v_;
};

} // namespace spinsh
