#ifndef ENTRYWISE_SAMPLING_HPP
#define ENTRYWISE_SAMPLING_HPP

#include "entrywise/hermitian.hpp"
#include "entrywise/linalg.hpp"
#include "entrywise/partition.hpp"
#include "entrywise/preserver_spec.hpp"
#include "entrywise/rng.hpp"
#include "entrywise/strata.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace entrywise {

/// Positive vector with pairwise-distinct coordinates in (lo, hi).
inline VectorXd random_distinct_vector(Rng& rng, Eigen::Index n, double lo, double hi) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        VectorXd u(n);
        for (Eigen::Index i = 0; i < n; ++i) u(i) = rng.uniform(lo, hi);
        bool distinct = true;
        for (Eigen::Index i = 0; i < n && distinct; ++i) {
            for (Eigen::Index j = i + 1; j < n && distinct; ++j) {
                if (std::abs(u(i) - u(j)) <= 1e-6 * (hi - lo)) distinct = false;
            }
        }
        if (distinct) return u;
    }
    throw std::runtime_error("random_distinct_vector: could not separate coordinates");
}

inline VectorXcd random_complex_disc_vector(Rng& rng, Eigen::Index n, double radius) {
    VectorXcd u(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double r = radius * std::sqrt(rng.uniform(0.01, 1.0));
        const double phi = rng.uniform(0.0, 6.283185307179586);
        u(i) = Complex(r * std::cos(phi), r * std::sin(phi));
    }
    return u;
}

/// Random full-rank PSD Gram matrix with entries rescaled so the largest
/// modulus is boxFraction * rho.
inline HermitianMatrix random_psd(Rng& rng, Eigen::Index n, Field field, double rho,
                                  double boxFraction = 0.9) {
    MatrixXcd b(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            b(i, j) = field == Field::Real ? Complex(rng.gaussian(), 0.0) : rng.complex_gaussian();
        }
    }
    MatrixXcd gram = b * b.adjoint();
    const double maxAbs = gram.cwiseAbs().maxCoeff();
    gram *= boxFraction * rho / std::max(maxAbs, 1e-12);
    return HermitianMatrix::from_upper(std::move(gram), field);
}

/// PSD matrix with strictly positive entries (an irreducible non-negative
/// matrix): Gram matrix of strictly positive rows, rescaled into the box.
inline HermitianMatrix random_positive_entry_psd(Rng& rng, Eigen::Index n, double rho,
                                                 double boxFraction = 0.9) {
    MatrixXcd b(n, n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n + 1; ++j) b(i, j) = Complex(rng.uniform(0.05, 1.0), 0.0);
    }
    MatrixXcd gram = b * b.adjoint();
    const double maxAbs = gram.cwiseAbs().maxCoeff();
    gram *= boxFraction * rho / std::max(maxAbs, 1e-12);
    return HermitianMatrix::from_upper(std::move(gram), Field::Real);
}

/// Random partition of {0..n-1} with a requested number of blocks.
inline Partition random_partition(Rng& rng, std::size_t n, std::size_t blocks) {
    if (blocks == 0 || blocks > n) throw std::invalid_argument("random_partition: bad block count");
    std::vector<std::vector<std::size_t>> assign(blocks);
    // seed every block once, then scatter the rest
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
    for (std::size_t k = 0; k < blocks; ++k) assign[k].push_back(perm[k]);
    for (std::size_t i = blocks; i < n; ++i) assign[rng.uniform_index(blocks)].push_back(perm[i]);
    return Partition::from_blocks(std::move(assign), n);
}

/// PD core with distinct rows, suitable for inflation through a partition.
inline HermitianMatrix random_pd_core_distinct_rows(Rng& rng, Eigen::Index m, Field field, double rho) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        HermitianMatrix core = random_psd(rng, m, field, rho, 0.8);
        MatrixXcd jittered = core.mat() + 0.05 * rho * MatrixXcd::Identity(m, m);
        const double maxAbs = jittered.cwiseAbs().maxCoeff();
        if (maxAbs > rho) jittered *= 0.95 * rho / maxAbs;
        HermitianMatrix out = HermitianMatrix::from_upper(std::move(jittered), field);
        ToleranceProfile tol;
        const double tolAbs = 1e-6 * (1.0 + out.max_abs_entry());
        bool distinct = true;
        for (Eigen::Index i = 0; i < m && distinct; ++i) {
            for (Eigen::Index j = i + 1; j < m && distinct; ++j) {
                bool equal = true;
                for (Eigen::Index k = 0; k < m && equal; ++k) {
                    if (std::abs(out(i, k) - out(j, k)) > tolAbs) equal = false;
                }
                if (equal) distinct = false;
            }
        }
        if (distinct && is_psd(out, tol).psd && numeric_rank(out, tol) == m) return out;
    }
    throw std::runtime_error("random_pd_core_distinct_rows: sampling failed");
}

/// Borders a PSD matrix with one zero row and column (stays PSD).
inline HermitianMatrix with_zero_row(const HermitianMatrix& a, Eigen::Index position) {
    const Eigen::Index n = a.dim() + 1;
    MatrixXcd m = MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        for (Eigen::Index j = 0; j < a.dim(); ++j) {
            const Eigen::Index ii = i < position ? i : i + 1;
            const Eigen::Index jj = j < position ? j : j + 1;
            m(ii, jj) = a(i, j);
        }
    }
    return HermitianMatrix(std::move(m), a.field());
}

/// Symmetric permutation P A P^T, used to hide block structure.
inline HermitianMatrix permute_symmetric(const HermitianMatrix& a, Rng& rng) {
    const Eigen::Index n = a.dim();
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = static_cast<std::size_t>(n); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
    MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return HermitianMatrix(std::move(m), a.field());
}

/// Draws a matrix from the declared test set of the spec: rank-one Gram
/// matrices for the rank-one sets, rescaled Gram matrices for the full box,
/// and a mix of rank-one and full-rank matrices over the complex disc.
inline HermitianMatrix sample_test_set(const PreserverSpec& spec, Eigen::Index n, Rng& rng) {
    const double rho = spec.rho_d();
    const double sqrtRho = std::sqrt(rho);
    switch (spec.testSet) {
        case TestSet::RankOneOpen: {
            VectorXd u = random_distinct_vector(rng, n, 0.05 * sqrtRho, 0.98 * sqrtRho);
            return HermitianMatrix::rank_one(u);
        }
        case TestSet::RankOneClosed: {
            VectorXd u = random_distinct_vector(rng, n, 0.0, sqrtRho);
            if (rng.coin(0.25)) u(rng.uniform_index(static_cast<std::uint64_t>(n))) = 0.0;
            return HermitianMatrix::rank_one(u);
        }
        case TestSet::FullClosedRealPowers: {
            if (rng.coin(0.3)) {
                VectorXd u = random_distinct_vector(rng, n, 0.05 * sqrtRho, 0.98 * sqrtRho);
                return HermitianMatrix::rank_one(u);
            }
            return random_positive_entry_psd(rng, n, rho);
        }
        case TestSet::ComplexDiscConsecutive: {
            if (rng.coin(0.4)) {
                VectorXcd u = random_complex_disc_vector(rng, n, 0.95 * sqrtRho);
                return HermitianMatrix::rank_one(u);
            }
            return random_psd(rng, n, Field::Complex, rho);
        }
    }
    throw std::logic_error("sample_test_set: unknown test set");
}

} // namespace entrywise

#endif // ENTRYWISE_SAMPLING_HPP
