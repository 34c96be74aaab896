#ifndef ENTRYWISE_HERMITIAN_HPP
#define ENTRYWISE_HERMITIAN_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <utility>

namespace entrywise {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using MatrixXd = Eigen::MatrixXd;
using VectorXcd = Eigen::VectorXcd;
using VectorXd = Eigen::VectorXd;

enum class Field { Real, Complex };

/// Square matrix with the Hermitian invariant enforced at construction.
/// Real-symmetric and complex-Hermitian flavors share this one type; the
/// field is a construction-time tag. Storage is always complex.
class HermitianMatrix {
public:
    /// Validating constructor: rejects non-square and non-Hermitian input.
    explicit HermitianMatrix(MatrixXcd entries, Field field = Field::Complex)
        : entries_(std::move(entries)), field_(field) {
        if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
            throw std::invalid_argument("HermitianMatrix: matrix must be square and non-empty");
        }
        for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
            for (Eigen::Index j = i; j < entries_.cols(); ++j) {
                if (entries_(i, j) != std::conj(entries_(j, i))) {
                    throw std::invalid_argument("HermitianMatrix: entries are not Hermitian");
                }
            }
        }
        if (field_ == Field::Real) {
            for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
                for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
                    if (entries_(i, j).imag() != 0.0) {
                        throw std::invalid_argument("HermitianMatrix: real flavor with complex entries");
                    }
                }
            }
        }
    }

    explicit HermitianMatrix(const MatrixXd& real) : HermitianMatrix(real.cast<Complex>(), Field::Real) {}

    /// Mirrors the upper triangle onto the lower one and forces the diagonal
    /// real, so results of entrywise operations are Hermitian bit-for-bit.
    /// Real-tagged results are projected onto their real part, which discards
    /// the rounding-level imaginary dust of complex intermediate arithmetic.
    static HermitianMatrix from_upper(MatrixXcd m, Field field) {
        if (field == Field::Real) m = m.real().cast<Complex>();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            m(i, i) = Complex(m(i, i).real(), 0.0);
            for (Eigen::Index j = i + 1; j < m.cols(); ++j) m(j, i) = std::conj(m(i, j));
        }
        return HermitianMatrix(std::move(m), field);
    }

    static HermitianMatrix identity(Eigen::Index n, Field field = Field::Real) {
        return HermitianMatrix(MatrixXcd::Identity(n, n), field);
    }

    static HermitianMatrix zero(Eigen::Index n, Field field = Field::Real) {
        return HermitianMatrix(MatrixXcd::Zero(n, n), field);
    }

    static HermitianMatrix ones(Eigen::Index n, Field field = Field::Real) {
        return HermitianMatrix(MatrixXcd::Ones(n, n), field);
    }

    /// Rank-one Gram matrix u u*.
    static HermitianMatrix rank_one(const VectorXcd& u, Field field = Field::Complex) {
        MatrixXcd m(u.size(), u.size());
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            m(i, i) = Complex(std::norm(u(i)), 0.0);
            for (Eigen::Index j = i + 1; j < u.size(); ++j) {
                m(i, j) = u(i) * std::conj(u(j));
                m(j, i) = std::conj(m(i, j));
            }
        }
        return HermitianMatrix(std::move(m), field);
    }

    static HermitianMatrix rank_one(const VectorXd& u) {
        return rank_one(u.cast<Complex>(), Field::Real);
    }

    Eigen::Index dim() const { return entries_.rows(); }
    Field field() const { return field_; }
    bool is_real() const { return field_ == Field::Real; }

    const MatrixXcd& mat() const { return entries_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    MatrixXd real_mat() const {
        if (!is_real()) throw std::domain_error("HermitianMatrix: real view of a complex matrix");
        return entries_.real();
    }

    double max_abs_entry() const { return entries_.cwiseAbs().maxCoeff(); }

    bool row_is_zero(Eigen::Index i) const {
        for (Eigen::Index j = 0; j < dim(); ++j) {
            if (entries_(i, j) != Complex(0.0, 0.0)) return false;
        }
        return true;
    }

private:
    MatrixXcd entries_;
    Field field_;
};

} // namespace entrywise

#endif // ENTRYWISE_HERMITIAN_HPP
