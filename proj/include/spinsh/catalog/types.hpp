// Parameter tuples, registry entry shape and the evaluation front doors of
// the identity catalog.
#pragma once

#include "spinsh/direction.hpp"
#include "spinsh/halfint.hpp"
#include "spinsh/tensor.hpp"

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace spinsh::catalog {

enum class Family { ScalarBilocal, ScalarTensor, SpinSpin, Local, Appendix };
enum class Mode { Explicit, Extraction };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::ScalarBilocal: return "scalar-bilocal";
        case Family::ScalarTensor: return "scalar-tensor";
        case Family::SpinSpin: return "spin-spin";
        case Family::Local: return "local";
        case Family::Appendix: return "appendix";
    }
    return "?";
}

inline const char* to_string(Mode m) {
    return m == Mode::Explicit ? "explicit" : "extraction";
}

/// Which optional parameter fields a theorem reads; l is always read.
struct ParamFields {
    bool dl = false;
    bool j = false;
    bool m = false;
    bool t = false;
};

/// One parameter tuple. Fields the owning theorem does not use keep their
/// defaults and are ignored by its evaluators.
struct Params {
    int l = 0;
    int dl = 0;
    HalfInt j{0};
    int m = 0;
    int t = 0;

    std::tuple<int, int, std::int64_t, int, int> key() const {
        return {l, dl, j.twice(), m, t};
    }
    friend bool operator==(const Params& a, const Params& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const Params& a, const Params& b) {
        return a.key() < b.key();
    }

    std::string str(const ParamFields& used) const {
        std::string s = "l=" + std::to_string(l);
        if (used.dl) s += " dl=" + std::to_string(dl);
        if (used.j) s += " j=" + j.str();
        if (used.m) s += " m=" + std::to_string(m);
        if (used.t) s += " t=" + std::to_string(t);
        return s;
    }
};

using Evaluator =
    std::function<SpinorTensor(const Params&, const Direction&, const Direction&)>;
using BasisEvaluator = std::function<std::vector<SpinorTensor>(
    const Params&, const Direction&, const Direction&)>;
using ParamPredicate = std::function<bool(const Params&)>;
using ParamEnumerator = std::function<std::vector<Params>(int)>;

/// Requesting the closed form of an extraction-mode theorem.
class unsupported_mode_error : public std::logic_error {
  public:
    explicit unsupported_mode_error(const std::string& what)
        : std::logic_error(what) {}
};

/// One registered identity: a brute-force left side, and either a
/// closed-form right side (Mode::Explicit) or a list of tensor structures
/// whose scalar coefficients extract_coefficients solves for
/// (Mode::Extraction). enumerate yields the valid parameter tuples up to
/// l_max; enumerate_vanishing yields tuples outside the validity list whose
/// left side must still come out as the zero tensor.
struct TheoremSpec {
    std::string id;
    Family family = Family::ScalarBilocal;
    Mode mode = Mode::Explicit;
    std::string citation;
    std::string domain_summary;
    bool local_only = false;
    ParamFields uses;
    std::vector<std::string> coeff_labels;

    ParamPredicate in_domain;
    ParamPredicate in_vanishing = [](const Params&) { return false; };
    ParamEnumerator enumerate;
    ParamEnumerator enumerate_vanishing = [](int) { return std::vector<Params>{}; };

    Evaluator lhs;
    Evaluator rhs;
    BasisEvaluator basis;
};

/// Brute-force sum of harmonic products. Accepts both valid tuples and the
/// declared trivially-vanishing ones (whose sum must land on zero).
inline SpinorTensor evaluate_lhs(const TheoremSpec& spec, const Params& p,
                                 const Direction& a, const Direction& b) {
    if (!spec.in_domain(p) && !spec.in_vanishing(p))
        throw std::domain_error(spec.id + ": parameters outside the domain (" +
                                p.str(spec.uses) + ")");
    return spec.lhs(p, a, b);
}

/// Closed-form right side; valid tuples only, explicit mode only.
inline SpinorTensor evaluate_rhs(const TheoremSpec& spec, const Params& p,
                                 const Direction& a, const Direction& b) {
    if (spec.mode == Mode::Extraction)
        throw unsupported_mode_error(
            spec.id + ": coefficients are not in closed form here; use "
                      "extract_coefficients on the declared structures");
    if (!spec.in_domain(p))
        throw std::domain_error(spec.id + ": parameters outside the domain (" +
                                p.str(spec.uses) + ")");
    return spec.rhs(p, a, b);
}

/// Max-norm of LHS - RHS, normalized by max(1, |LHS|_inf) so the factorially
/// growing identities neither mask nor inflate failures.
inline double residual(const TheoremSpec& spec, const Params& p,
                       const Direction& a, const Direction& b) {
    const SpinorTensor lhs = evaluate_lhs(spec, p, a, b);
    const SpinorTensor rhs = evaluate_rhs(spec, p, a, b);
    return SpinorTensor::distance(lhs, rhs) / std::max(1.0, lhs.max_abs());
}

/// Enumeration building blocks shared by the registry sections.
inline std::vector<Params> enum_l(int l_min, int l_max) {
    std::vector<Params> v;
    for (int l = l_min; l <= l_max; ++l) v.push_back({.l = l});
    return v;
}

/// One Params per (l, dl) with dl drawn from pairs (dl, minimum l).
inline std::vector<Params> enum_dl_min(
    int l_max, std::initializer_list<std::pair<int, int>> dl_min) {
    std::vector<Params> v;
    for (int l = 0; l <= l_max; ++l)
        for (const auto& [dl, mn] : dl_min)
            if (l >= mn) v.push_back({.l = l, .dl = dl});
    return v;
}

inline std::vector<Params> fixed_params(std::vector<Params> v) { return v; }

} // namespace spinsh::catalog
