#ifndef ENTRYWISE_LINALG_HPP
#define ENTRYWISE_LINALG_HPP

#include "entrywise/hermitian.hpp"
#include "entrywise/tolerances.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrywise {

/// Eigensystem of a Hermitian matrix: real eigenvalues ascending together
/// with an orthonormal column system. The constructor contract (residual and
/// orthogonality bounds) is validated by eigen_hermitian.
struct SpectralFactorization {
    VectorXd eigenvalues;  // ascending
    MatrixXcd eigenvectors;

    double min_eigenvalue() const { return eigenvalues(0); }
    double max_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
    double spectral_radius() const { return std::max(std::abs(min_eigenvalue()), std::abs(max_eigenvalue())); }
};

inline SpectralFactorization eigen_hermitian(const HermitianMatrix& a,
                                             const ToleranceProfile& tol = {}) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(a.mat());
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigen_hermitian: eigensolver failed");
    SpectralFactorization f{solver.eigenvalues(), solver.eigenvectors()};

    const double scale = std::max(1.0, a.mat().norm());
    const double residual =
        (a.mat() - f.eigenvectors * f.eigenvalues.asDiagonal() * f.eigenvectors.adjoint()).norm();
    if (residual > tol.reconstructionTol * scale) {
        throw std::runtime_error("eigen_hermitian: reconstruction residual out of contract");
    }
    const Eigen::Index n = a.dim();
    const double ortho = (f.eigenvectors.adjoint() * f.eigenvectors - MatrixXcd::Identity(n, n)).norm();
    if (ortho > tol.orthogonalityTol * std::max(1.0, std::sqrt(static_cast<double>(n)))) {
        throw std::runtime_error("eigen_hermitian: eigenvector system not orthonormal");
    }
    return f;
}

struct PsdVerdict {
    bool psd = false;
    double minEigenvalue = 0.0;
};

/// PSD test with a relative floor: psd iff min eig >= -psdFloor * max(1, lambda_max).
inline PsdVerdict is_psd(const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    const SpectralFactorization f = eigen_hermitian(a, tol);
    const double floor = tol.psdFloor * std::max(1.0, f.max_eigenvalue());
    return {f.min_eigenvalue() >= -floor, f.min_eigenvalue()};
}

/// Strict counterpart used for positive-definiteness flags: the smallest
/// eigenvalue must clear the same scaled floor from above.
inline bool is_pd(const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    const SpectralFactorization f = eigen_hermitian(a, tol);
    return f.min_eigenvalue() > tol.psdFloor * std::max(1.0, f.max_eigenvalue());
}

/// Count of eigenvalues above the relative rank gap; 0 for the zero matrix.
inline int numeric_rank(const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    const SpectralFactorization f = eigen_hermitian(a, tol);
    const double cut = tol.rankGap * std::max(1.0, f.spectral_radius());
    int rank = 0;
    for (Eigen::Index i = 0; i < f.eigenvalues.size(); ++i) {
        if (std::abs(f.eigenvalues(i)) > cut) ++rank;
    }
    return rank;
}

inline HermitianMatrix hermitian_difference(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hermitian_difference: dimension mismatch");
    const Field field = (a.is_real() && b.is_real()) ? Field::Real : Field::Complex;
    return HermitianMatrix(a.mat() - b.mat(), field);
}

/// Loewner order: A >= B iff A - B is positive semidefinite.
inline bool loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                        const ToleranceProfile& tol = {}) {
    return is_psd(hermitian_difference(a, b), tol).psd;
}

inline double spectral_radius(const HermitianMatrix& a) {
    return eigen_hermitian(a).spectral_radius();
}

/// A^{dagger/2}: eigenvalues above the rank cut map to 1/sqrt(lambda), the
/// rest to zero, in the same eigenbasis. Rejects input that is not PSD
/// within tolerance.
inline HermitianMatrix pseudo_inverse_sqrt(const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    const SpectralFactorization f = eigen_hermitian(a, tol);
    const double floor = tol.psdFloor * std::max(1.0, f.max_eigenvalue());
    if (f.min_eigenvalue() < -floor) {
        throw std::domain_error("pseudo_inverse_sqrt: matrix is not positive semidefinite");
    }
    const double cut = tol.rankGap * std::max(1.0, f.spectral_radius());
    VectorXd mapped(f.eigenvalues.size());
    for (Eigen::Index i = 0; i < f.eigenvalues.size(); ++i) {
        mapped(i) = f.eigenvalues(i) > cut ? 1.0 / std::sqrt(f.eigenvalues(i)) : 0.0;
    }
    MatrixXcd m = f.eigenvectors * mapped.asDiagonal() * f.eigenvectors.adjoint();
    return HermitianMatrix::from_upper(std::move(m), a.field());
}

} // namespace entrywise

#endif // ENTRYWISE_LINALG_HPP
