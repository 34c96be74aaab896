#ifndef ENTRYWISE_STRATA_HPP
#define ENTRYWISE_STRATA_HPP

#include "entrywise/linalg.hpp"
#include "entrywise/partition.hpp"
#include "entrywise/preserver_spec.hpp"
#include "entrywise/rational.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace entrywise {

namespace detail {

template <typename T>
double entry_distance(const T& a, const T& b) {
    return std::abs(a - b);
}

inline double entry_distance(const Rational& a, const Rational& b) {
    return a == b ? 0.0 : 1.0; // exact comparison; any tolerance below 1 works
}

} // namespace detail

/// Generic grid used for the exact-arithmetic strata paths.
template <typename T>
using Grid = std::vector<std::vector<T>>;

/// Finest partition pi(A) such that every submatrix A_{I x J} with I, J
/// blocks of pi is constant. Rows are grouped by entrywise equality within
/// the absolute tolerance (exact when tolerance is zero); for non-symmetric
/// input the grouping is refined by columns until stable.
template <typename T>
Partition partition_of_grid(const Grid<T>& a, double tolAbs) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("partition_of_grid: matrix not square");
    }
    if (n == 0) throw std::invalid_argument("partition_of_grid: empty matrix");

    auto rows_equal = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (detail::entry_distance(a[i][k], a[j][k]) > tolAbs) return false;
        }
        return true;
    };
    auto cols_equal = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (detail::entry_distance(a[k][i], a[k][j]) > tolAbs) return false;
        }
        return true;
    };

    // Merging indices whose rows AND columns agree gives the coarsest
    // block-constant partition for arbitrary square matrices: within a
    // merged block, equal rows make A_{I x J} constant along columns and
    // equal columns make it constant along rows. For Hermitian input the
    // column test is implied by the row test.
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows_equal(i, j) && cols_equal(i, j)) uf.merge(i, j);
        }
    }
    return Partition::from_union_find(uf, n);
}

inline Grid<Complex> to_grid(const HermitianMatrix& a) {
    Grid<Complex> g(static_cast<std::size_t>(a.dim()), std::vector<Complex>(static_cast<std::size_t>(a.dim())));
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        for (Eigen::Index j = 0; j < a.dim(); ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    }
    return g;
}

/// pi(A) for a Hermitian matrix with the row-equality tolerance scaled as
/// rowEq * (1 + max |a_ij|).
inline Partition partition_of(const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    const double tolAbs = tol.rowEq * (1.0 + a.max_abs_entry());
    return partition_of_grid(to_grid(a), tolAbs);
}

/// Compression: block-wise averaging down to a |pi| x |pi| core.
template <typename T>
Grid<T> compress_grid(const Grid<T>& a, const Partition& pi) {
    const std::size_t n = a.size();
    if (pi.ground_size() != n) throw std::invalid_argument("compress_grid: partition size mismatch");
    const std::size_t m = pi.size();
    Grid<T> b(m, std::vector<T>(m, T(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            T sum = T(0);
            for (std::size_t p : pi.block(i)) {
                for (std::size_t q : pi.block(j)) sum += a[p][q];
            }
            b[i][j] = sum / T(static_cast<long>(pi.block(i).size() * pi.block(j).size()));
        }
    }
    return b;
}

/// Inflation: block-constant expansion of an m x m core through pi.
template <typename T>
Grid<T> inflate_grid(const Grid<T>& b, const Partition& pi) {
    const std::size_t m = b.size();
    if (pi.size() != m) throw std::invalid_argument("inflate_grid: block count mismatch");
    const std::size_t n = pi.ground_size();
    Grid<T> a(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t p : pi.block(i)) {
                for (std::size_t q : pi.block(j)) a[p][q] = b[i][j];
            }
        }
    }
    return a;
}

inline HermitianMatrix compress(const HermitianMatrix& a, const Partition& pi) {
    if (pi.ground_size() != static_cast<std::size_t>(a.dim())) {
        throw std::invalid_argument("compress: partition size mismatch");
    }
    const std::size_t m = pi.size();
    MatrixXcd b(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            Complex sum(0.0, 0.0);
            for (std::size_t p : pi.block(i)) {
                for (std::size_t q : pi.block(j)) sum += a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
            }
            b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                sum / static_cast<double>(pi.block(i).size() * pi.block(j).size());
        }
    }
    return HermitianMatrix::from_upper(std::move(b), a.field());
}

inline HermitianMatrix inflate(const HermitianMatrix& b, const Partition& pi) {
    if (pi.size() != static_cast<std::size_t>(b.dim())) {
        throw std::invalid_argument("inflate: block count mismatch");
    }
    const std::size_t n = pi.ground_size();
    MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t j = 0; j < pi.size(); ++j) {
            for (std::size_t p : pi.block(i)) {
                for (std::size_t q : pi.block(j)) {
                    a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
                        b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                }
            }
        }
    }
    return HermitianMatrix(std::move(a), b.field());
}

/// Weighted compression D^{1/2} down(A) D^{1/2} with D = diag(|I_k|).
inline HermitianMatrix compress_weighted(const HermitianMatrix& a, const Partition& pi) {
    HermitianMatrix core = compress(a, pi);
    MatrixXcd m = core.mat();
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const double di = std::sqrt(static_cast<double>(pi.block(i).size()));
        for (std::size_t j = 0; j < pi.size(); ++j) {
            const double dj = std::sqrt(static_cast<double>(pi.block(j).size()));
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *= di * dj;
        }
    }
    return HermitianMatrix::from_upper(std::move(m), a.field());
}

/// Weighted inflation up(D^{-1/2} B D^{-1/2}).
inline HermitianMatrix inflate_weighted(const HermitianMatrix& b, const Partition& pi) {
    MatrixXcd m = b.mat();
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const double di = std::sqrt(static_cast<double>(pi.block(i).size()));
        for (std::size_t j = 0; j < pi.size(); ++j) {
            const double dj = std::sqrt(static_cast<double>(pi.block(j).size()));
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) /= di * dj;
        }
    }
    return inflate(HermitianMatrix::from_upper(std::move(m), b.field()), pi);
}

/// A lies in the closure of the stratum S_pi iff A is block-constant with
/// respect to pi, i.e. pi refines pi(A).
inline bool closure_membership(const Partition& pi, const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    if (pi.ground_size() != static_cast<std::size_t>(a.dim())) {
        throw std::invalid_argument("closure_membership: partition size mismatch");
    }
    const double tolAbs = tol.rowEq * (1.0 + a.max_abs_entry());
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t j = 0; j < pi.size(); ++j) {
            const Complex ref = a(static_cast<Eigen::Index>(pi.block(i).front()),
                                  static_cast<Eigen::Index>(pi.block(j).front()));
            for (std::size_t p : pi.block(i)) {
                for (std::size_t q : pi.block(j)) {
                    if (std::abs(a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) - ref) > tolAbs) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Rank prediction on a stratum: rank f[A] = rank h[A] = |pi(A)|, with the
/// g-clause checked when A sits below the top stratum or has a row with
/// distinct entries.
struct StratumDiagnostics {
    Partition partition;
    HermitianMatrix compressed;
    int predictedRank = 0;
    int rankF = 0;
    int rankH = 0;
    std::optional<int> rankG;  // checked only when the sufficient condition applies
    bool agrees = false;
};

inline bool has_distinct_entry_row(const HermitianMatrix& a, double tolAbs) {
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        bool distinct = true;
        for (Eigen::Index p = 0; p < a.dim() && distinct; ++p) {
            for (Eigen::Index q = p + 1; q < a.dim() && distinct; ++q) {
                if (std::abs(a(i, p) - a(i, q)) <= tolAbs) distinct = false;
            }
        }
        if (distinct) return true;
    }
    return false;
}

inline StratumDiagnostics rank_on_stratum(const PreserverSpec& spec, const HermitianMatrix& a,
                                          const ToleranceProfile& tol = {}) {
    spec.validate();
    if (spec.terms() != static_cast<std::size_t>(a.dim())) {
        throw std::invalid_argument("rank_on_stratum: spec needs one term per matrix dimension");
    }
    const ThresholdValue c = threshold_C(spec);
    if (!(spec.cprime() > -1.0 / c.value)) {
        throw std::invalid_argument("rank_on_stratum: requires c' > -1/C");
    }
    bool zeroRow = false;
    for (Eigen::Index i = 0; i < a.dim(); ++i) zeroRow = zeroRow || a.row_is_zero(i);
    if (zeroRow && spec.exponents[0] != 0.0) {
        throw std::invalid_argument("rank_on_stratum: zero row requires n_0 = 0");
    }

    Partition pi = partition_of(a, tol);
    StratumDiagnostics d{pi, compress(a, pi)};
    d.predictedRank = static_cast<int>(pi.size());
    d.rankF = numeric_rank(apply_f(spec, a), tol);
    d.rankH = numeric_rank(apply_h(spec, a), tol);

    const double tolAbs = tol.rowEq * (1.0 + a.max_abs_entry());
    const bool topStratum = pi.size() == static_cast<std::size_t>(a.dim());
    const bool conditionB = topStratum && has_distinct_entry_row(a, tolAbs);
    if (!topStratum || conditionB) {
        d.rankG = numeric_rank(apply_g(spec, a, c.value), tol);
    }
    d.agrees = d.rankF == d.predictedRank && d.rankH == d.predictedRank &&
               (!d.rankG || *d.rankG == d.predictedRank);
    return d;
}

/// The m-term constant of the stratum-restricted inequality
/// A^{oM} <= C_m sum_{j<m} c_j A^{o n_j} on the closure of S_pi, computed
/// from the first m terms of the spec with M, rho unchanged.
struct BlockLmiReport {
    Rational cmExact = 0;
    double cm = 0.0;
    double cFull = 0.0;
    bool cmStrictlyBelow = false;
    bool exact = false;
};

inline BlockLmiReport block_lmi_constant(const Partition& pi, const PreserverSpec& spec) {
    spec.validate();
    const std::size_t m = pi.size();
    if (m > spec.terms()) throw std::invalid_argument("block_lmi_constant: more blocks than terms");
    const PreserverSpec truncated = spec.prefix(m);
    const ThresholdValue cm = threshold_C(truncated);
    const ThresholdValue cFull = threshold_C(spec);
    BlockLmiReport out;
    out.cm = cm.value;
    out.cFull = cFull.value;
    if (cm.exact && cFull.exact) {
        out.exact = true;
        out.cmExact = cm.exact_value();
        out.cmStrictlyBelow = cm.exact_value() < cFull.exact_value();
    } else {
        out.cmStrictlyBelow = cm.value < cFull.value;
    }
    return out;
}

} // namespace entrywise

#endif // ENTRYWISE_STRATA_HPP
