// Least-squares recovery of the scalar coefficients left open by the
// identities that factor into known tensor structures, fitted over sampled
// direction pairs.
#pragma once

#include "spinsh/catalog/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinsh::catalog {

/// Structures too collinear at the sampled pairs to pin the coefficients.
class conditioning_error : public std::runtime_error {
  public:
    explicit conditioning_error(const std::string& what)
        : std::runtime_error(what) {}
};

struct ExtractedCoefficients {
    std::string id;
    Params params;
    std::vector<std::pair<std::string, double>> coefficients;
    double residual = 0.0;
    double spread = 0.0;
    double max_imag = 0.0;
};

inline ExtractedCoefficients extract_coefficients(
    const TheoremSpec& spec, const Params& p,
    const std::vector<std::pair<Direction, Direction>>& pairs) {
    if (spec.mode != Mode::Extraction)
        throw unsupported_mode_error(
            spec.id + ": closed form available; use evaluate_rhs");
    if (!spec.in_domain(p))
        throw std::domain_error(spec.id + ": parameters outside the domain (" +
                                p.str(spec.uses) + ")");
    if (pairs.empty())
        throw std::invalid_argument(spec.id + ": no sample pairs");

    std::vector<SpinorTensor> lhs;
    std::vector<std::vector<SpinorTensor>> structures;
    lhs.reserve(pairs.size());
    structures.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        lhs.push_back(spec.lhs(p, a, b));
        structures.push_back(spec.basis(p, a, b));
    }
    const std::size_t nb = structures.front().size();
    const std::size_t ts = lhs.front().size();
    const std::size_t rows = pairs.size() * ts;
    if (rows < nb)
        throw std::invalid_argument(
            spec.id + ": fewer scalar equations than twice the " +
            std::to_string(nb) + " coefficients");

    const auto label = [&spec](std::size_t k) {
        return k < spec.coeff_labels.size() ? spec.coeff_labels[k]
                                            : "c" + std::to_string(k);
    };

    Eigen::MatrixXcd A(rows, nb);
    Eigen::VectorXcd y(rows);
    for (std::size_t q = 0; q < pairs.size(); ++q)
        for (std::size_t e = 0; e < ts; ++e) {
            y(q * ts + e) = lhs[q][e];
            for (std::size_t k = 0; k < nb; ++k)
                A(q * ts + e, k) = structures[q][k][e];
        }

    double max_norm = 0.0;
    for (std::size_t k = 0; k < nb; ++k)
        max_norm = std::max(max_norm, A.col(k).norm());
    if (max_norm == 0.0)
        throw conditioning_error(
            spec.id + ": every structure vanishes at the sampled pairs");
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < nb; ++k)
        if (A.col(k).norm() >= 1e-12 * max_norm) kept.push_back(k);

    Eigen::MatrixXcd Ak(rows, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k)
        Ak.col(k) = A.col(kept[k]);

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(Ak);
    if (static_cast<std::size_t>(cod.rank()) < kept.size()) {
        const auto& perm = cod.colsPermutation().indices();
        std::string bad;
        for (std::size_t j = static_cast<std::size_t>(cod.rank());
             j < kept.size(); ++j) {
            if (!bad.empty()) bad += ", ";
            bad += label(kept[static_cast<std::size_t>(perm(j))]);
        }
        throw conditioning_error(
            spec.id + ": structures not independent at the sampled pairs (" +
            bad + ")");
    }

    const Eigen::VectorXcd c = cod.solve(y);
    const double ynorm = y.cwiseAbs().maxCoeff();
    const double rnorm = (Ak * c - y).cwiseAbs().maxCoeff();

    ExtractedCoefficients out;
    out.id = spec.id;
    out.params = p;
    out.residual = rnorm / std::max(1.0, ynorm);
    std::vector<double> values(nb, 0.0);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        values[kept[k]] = c(k).real();
        out.max_imag = std::max(out.max_imag, std::abs(c(k).imag()));
    }
    for (std::size_t k = 0; k < nb; ++k)
        out.coefficients.emplace_back(label(k), values[k]);

    if (pairs.size() >= 2) {
        const auto fit_half = [&](std::size_t parity) {
            std::vector<std::size_t> idx;
            for (std::size_t q = 0; q < pairs.size(); ++q)
                if (q % 2 == parity) idx.push_back(q);
            Eigen::MatrixXcd Ah(idx.size() * ts, kept.size());
            Eigen::VectorXcd yh(idx.size() * ts);
            for (std::size_t r = 0; r < idx.size(); ++r) {
                Ah.middleRows(r * ts, ts) = Ak.middleRows(idx[r] * ts, ts);
                yh.segment(r * ts, ts) = y.segment(idx[r] * ts, ts);
            }
            Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> half(Ah);
            return Eigen::VectorXcd(half.solve(yh));
        };
        const Eigen::VectorXcd even = fit_half(0);
        const Eigen::VectorXcd odd = fit_half(1);
        out.spread = (even - odd).cwiseAbs().maxCoeff();
    }
    return out;
}

} // namespace spinsh::catalog
