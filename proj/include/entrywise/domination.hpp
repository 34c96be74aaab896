#ifndef ENTRYWISE_DOMINATION_HPP
#define ENTRYWISE_DOMINATION_HPP

#include "entrywise/linalg.hpp"
#include "entrywise/partition.hpp"
#include "entrywise/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace entrywise {

struct DominationResult {
    VectorXcd u;
    double residualMinEig = 0.0;  // min eig of A - u u*
};

struct EqualRowsError : std::domain_error {
    EqualRowsError() : std::domain_error("dominating_vector: matrix has equal rows") {}
};

namespace detail {

inline bool rows_distinct(const HermitianMatrix& a, double tolAbs) {
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        for (Eigen::Index j = i + 1; j < a.dim(); ++j) {
            bool equal = true;
            for (Eigen::Index k = 0; k < a.dim() && equal; ++k) {
                if (std::abs(a(i, k) - a(j, k)) > tolAbs) equal = false;
            }
            if (equal) return false;
        }
    }
    return true;
}

inline bool entrywise_nonnegative(const HermitianMatrix& a) {
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        for (Eigen::Index j = 0; j < a.dim(); ++j) {
            const Complex z = a(i, j);
            if (z.imag() != 0.0 || z.real() < 0.0) return false;
        }
    }
    return true;
}

/// Dominating vector with positive distinct entries for one irreducible
/// block: spectrally split A = sum_j u_j u_j^T, anchor on the Perron
/// direction and perturb by a small random convex combination of the
/// remaining rank-one factors until the coordinates separate.
inline VectorXd dominate_irreducible_block(const MatrixXd& block, Rng& rng, const ToleranceProfile& tol) {
    const Eigen::Index m = block.rows();
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(block);
    if (solver.info() != Eigen::Success) throw std::runtime_error("dominating_vector: eigensolver failed");
    const VectorXd evs = solver.eigenvalues();
    const double cut = tol.rankGap * std::max(1.0, std::abs(evs(m - 1)));

    std::vector<VectorXd> factors;  // scaled eigenvectors sqrt(lambda) q, Perron first
    for (Eigen::Index i = m - 1; i >= 0; --i) {
        if (evs(i) > cut) factors.push_back(std::sqrt(evs(i)) * solver.eigenvectors().col(i));
    }
    if (factors.empty()) throw std::logic_error("dominating_vector: block with no positive spectrum");

    VectorXd perron = factors.front();
    if (perron.sum() < 0.0) perron = -perron;  // Perron direction is entrywise positive
    factors.front() = perron;
    const double minPerron = perron.minCoeff();
    if (!(minPerron > 0.0)) {
        throw std::runtime_error("dominating_vector: Perron vector not entrywise positive");
    }

    const double distinctGap = 1e-8 * (1.0 + perron.maxCoeff());
    auto distinct = [&](const VectorXd& v) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            for (Eigen::Index j = i + 1; j < v.size(); ++j) {
                if (std::abs(v(i) - v(j)) <= distinctGap) return false;
            }
        }
        return true;
    };

    if (factors.size() == 1) {
        if (!distinct(perron)) throw EqualRowsError();  // rank-one block with repeated entries
        return perron;
    }

    double tailNorm = 0.0;
    for (std::size_t j = 1; j < factors.size(); ++j) tailNorm += factors[j].cwiseAbs().maxCoeff();
    const double eps = minPerron / (2.0 * tailNorm);

    for (int attempt = 0; attempt < 64; ++attempt) {
        VectorXd psi = perron;
        double weightSum = 1.0;
        for (std::size_t j = 1; j < factors.size(); ++j) {
            const double c = rng.uniform(0.0, eps);
            psi += c * factors[j];
            weightSum += c;
        }
        if (psi.minCoeff() > 0.0 && distinct(psi)) return psi / weightSum;
    }
    throw std::runtime_error("dominating_vector: retry budget exhausted, resample the seed");
}

/// Blocks of the positivity graph (edges where an off-diagonal entry is
/// strictly positive), with zero rows set aside.
struct PositivityBlocks {
    std::vector<std::vector<Eigen::Index>> components;
    std::vector<Eigen::Index> zeroRows;
};

inline PositivityBlocks positivity_components(const HermitianMatrix& a) {
    const Eigen::Index n = a.dim();
    PositivityBlocks out;
    std::vector<bool> isZero(static_cast<std::size_t>(n), false);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a.row_is_zero(i)) {
            isZero[static_cast<std::size_t>(i)] = true;
            out.zeroRows.push_back(i);
        }
    }
    UnionFind uf(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (a(i, j).real() > 0.0) uf.merge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    std::vector<std::vector<Eigen::Index>> byRoot(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!isZero[static_cast<std::size_t>(i)]) byRoot[uf.find(static_cast<std::size_t>(i))].push_back(i);
    }
    for (auto& c : byRoot) {
        if (!c.empty()) out.components.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

/// Constructs u with distinct entries, A >= u u*, and u_i = 0 exactly when
/// row i of A is zero. Entrywise non-negative real input goes through the
/// Perron-Frobenius block construction, which keeps u non-negative; general
/// Hermitian input uses a generic vector in the row space scaled into the
/// Loewner cone.
inline DominationResult dominating_vector(const HermitianMatrix& a, Rng& rng, const ToleranceProfile& tol = {}) {
    const Eigen::Index n = a.dim();
    const double tolAbs = tol.rowEq * (1.0 + a.max_abs_entry());
    if (!detail::rows_distinct(a, tolAbs)) throw EqualRowsError();
    if (!is_psd(a, tol).psd) throw std::domain_error("dominating_vector: matrix is not positive semidefinite");

    VectorXcd u = VectorXcd::Zero(n);

    if (a.is_real() && detail::entrywise_nonnegative(a)) {
        const detail::PositivityBlocks blocks = detail::positivity_components(a);
        const MatrixXd real = a.real_mat();

        std::vector<std::pair<std::vector<Eigen::Index>, VectorXd>> scaled;
        double prevMin = 0.0;
        double mu = blocks.components.size() > 1 ? 0.5 : 1.0;
        for (std::size_t k = 0; k < blocks.components.size(); ++k) {
            const auto& idx = blocks.components[k];
            MatrixXd sub(idx.size(), idx.size());
            for (std::size_t p = 0; p < idx.size(); ++p) {
                for (std::size_t q = 0; q < idx.size(); ++q) sub(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = real(idx[p], idx[q]);
            }
            VectorXd v = detail::dominate_irreducible_block(sub, rng, tol);
            if (k > 0) {
                // keep every entry of this block below the previous block's
                // minimum; the shrinking scales keep sum of mu^2 below one
                mu = std::min(mu / 2.0, prevMin / (2.0 * v.maxCoeff()));
            }
            v *= mu;
            prevMin = v.minCoeff();
            scaled.emplace_back(idx, v);
        }
        for (const auto& [idx, v] : scaled) {
            for (std::size_t p = 0; p < idx.size(); ++p) u(idx[p]) = Complex(v(static_cast<Eigen::Index>(p)), 0.0);
        }
    } else {
        // Generic construction: w = A conj(v) has distinct entries for a
        // v avoiding finitely many hyperplanes, and w lies in range(A), so
        // some positive multiple of w w* sits below A.
        const HermitianMatrix root = pseudo_inverse_sqrt(a, tol);
        const double scale = std::max(1.0, a.max_abs_entry());
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
            VectorXcd v(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                v(i) = a.is_real() ? Complex(rng.gaussian(), 0.0) : rng.complex_gaussian();
            }
            VectorXcd w = a.mat() * v.conjugate();
            const double wScale = std::max(1e-12, w.cwiseAbs().maxCoeff());
            bool generic = true;
            for (Eigen::Index i = 0; i < n && generic; ++i) {
                if (!a.row_is_zero(i) && std::abs(w(i)) <= 1e-6 * wScale) generic = false;
                for (Eigen::Index j = i + 1; j < n && generic; ++j) {
                    if (std::abs(w(i) - w(j)) <= 1e-6 * wScale) generic = false;
                }
            }
            if (!generic) continue;
            const double rootNorm = (root.mat() * w).squaredNorm();
            if (!(rootNorm > 1e-15 * scale)) continue;
            u = w / std::sqrt(rootNorm);
            found = true;
        }
        if (!found) throw std::runtime_error("dominating_vector: retry budget exhausted, resample the seed");
        for (Eigen::Index i = 0; i < n; ++i) {
            if (a.row_is_zero(i)) u(i) = Complex(0.0, 0.0);
        }
    }

    const HermitianMatrix residual =
        hermitian_difference(a, HermitianMatrix::rank_one(u, a.field()));
    DominationResult out;
    out.u = u;
    out.residualMinEig = eigen_hermitian(residual, tol).min_eigenvalue();
    return out;
}

} // namespace entrywise

#endif // ENTRYWISE_DOMINATION_HPP
