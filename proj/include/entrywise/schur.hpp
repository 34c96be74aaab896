#ifndef ENTRYWISE_SCHUR_HPP
#define ENTRYWISE_SCHUR_HPP

#include "entrywise/exponents.hpp"
#include "entrywise/rational.hpp"
#include "entrywise/tableaux.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace entrywise {

template <typename T>
T int_pow(T base, long long e) {
    if (e < 0) throw std::domain_error("int_pow: negative exponent");
    T acc = T(1);
    T b = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ULL) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// x^e for real exponents with the 0^0 = 1 convention; rejects negative bases
/// unless the exponent is an integer.
inline double real_pow(double x, double e) {
    if (std::rint(e) == e) {
        if (x == 0.0 && e == 0.0) return 1.0;
        return std::pow(x, e);
    }
    if (x < 0.0) throw std::domain_error("real_pow: negative base with non-integer exponent");
    if (x == 0.0) return e == 0.0 ? 1.0 : 0.0;
    return std::pow(x, e);
}

namespace detail {

inline double pivot_weight(double x) { return std::abs(x); }
inline double pivot_weight(const std::complex<double>& x) { return std::abs(x); }
inline double pivot_weight(const Rational& x) { return x == 0 ? 0.0 : 1.0; }

} // namespace detail

/// Determinant by Gaussian elimination; exact over rationals, partially
/// pivoted over floating scalars.
template <typename T>
T determinant(std::vector<std::vector<T>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    }
    T det = T(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = detail::pivot_weight(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double w = detail::pivot_weight(a[r][col]);
            if (w > best) {
                best = w;
                pivot = r;
            }
        }
        if (!(best > 0.0)) return T(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == T(0)) continue;
            const T factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

/// The generalized Vandermonde matrix (u_i^{n_j}) for an integral tuple.
template <typename T>
std::vector<std::vector<T>> power_matrix(std::span<const T> u, const ExponentTuple& n) {
    if (!n.integral()) throw std::domain_error("power_matrix: integral exponents required");
    if (u.size() != n.size()) throw std::invalid_argument("power_matrix: |u| must equal |n|");
    const std::size_t N = u.size();
    std::vector<std::vector<T>> a(N, std::vector<T>(N));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) a[i][j] = int_pow(u[i], n.int_at(j));
    }
    return a;
}

/// det(u_i^{n_j}) for arbitrary real exponents; requires admissible bases.
inline double gen_vandermonde_det(std::span<const double> u, const ExponentTuple& n) {
    if (u.size() != n.size()) throw std::invalid_argument("gen_vandermonde_det: |u| must equal |n|");
    const std::size_t N = u.size();
    std::vector<std::vector<double>> a(N, std::vector<double>(N));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) a[i][j] = real_pow(u[i], n[j]);
    }
    return determinant(std::move(a));
}

/// det(u_i^{n_j}) for integral exponents over any scalar (complex included).
template <typename T>
T gen_vandermonde_det_integral(std::span<const T> u, const ExponentTuple& n) {
    return determinant(power_matrix(u, n));
}

template <typename T>
bool coords_distinct(std::span<const T> u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (u[i] == u[j]) return false;
        }
    }
    return true;
}

template <typename T>
std::size_t count_zero_coords(std::span<const T> u) {
    std::size_t z = 0;
    for (const auto& x : u) {
        if (x == T(0)) ++z;
    }
    return z;
}

/// Schur polynomial via the bialternant quotient det(u^{on}) / V(u) when the
/// coordinates are distinct; falls back to the Littlewood tableau sum (the
/// unique polynomial extension) otherwise.
template <typename T>
T schur_bialternant(std::span<const T> u, const ExponentTuple& n, std::uint64_t budget = 1000000) {
    if (!n.integral()) throw std::domain_error("schur_bialternant: integral exponents required");
    if (u.size() != n.size()) throw std::invalid_argument("schur_bialternant: |u| must equal |n|");
    if (coords_distinct(u)) {
        std::vector<T> uv(u.begin(), u.end());
        const T denom = vandermonde_product(std::span<const T>(uv));
        return gen_vandermonde_det_integral(u, n) / denom;
    }
    return schur_tableaux(u, n, budget).value;
}

/// s_n(1, q, ..., q^{N-1}) as the exact two-Vandermonde product. Degenerate
/// q (0 is rejected, +-1 collapse denominators) are routed through the limit
/// value V(n)/V(delta) and the tableau sum respectively.
inline Rational schur_principal_specialization(const ExponentTuple& n, const Rational& q,
                                               std::uint64_t budget = 1000000) {
    if (!n.integral()) throw std::domain_error("schur_principal_specialization: integral exponents required");
    if (q == 0) throw std::domain_error("schur_principal_specialization: q must be non-zero");
    const std::size_t N = n.size();
    if (q == 1) {
        return Rational(vandermonde_exact(n)) / Rational(vandermonde_exact(ExponentTuple::delta(N)));
    }
    if (q == -1) {
        std::vector<Rational> u(N);
        for (std::size_t i = 0; i < N; ++i) u[i] = pow_rational(q, static_cast<long long>(i));
        return schur_tableaux(std::span<const Rational>(u), n, budget).value;
    }
    Rational prod = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        for (std::size_t l = k + 1; l < N; ++l) {
            const Rational num = pow_rational(q, n.int_at(l)) - pow_rational(q, n.int_at(k));
            const Rational den =
                pow_rational(q, static_cast<long long>(l)) - pow_rational(q, static_cast<long long>(k));
            prod *= num / den;
        }
    }
    return prod;
}

/// Length of the prefix where m_j = j, i.e. the number of zero parts of
/// m - delta. Determines the boundary domain: the ratio with denominator
/// tuple m is defined for points with at most this many zero coordinates.
inline std::size_t zero_prefix_length(const ExponentTuple& m) {
    if (!m.integral()) throw std::domain_error("zero_prefix_length: integral exponents required");
    std::size_t k = 0;
    while (k < m.size() && m.int_at(k) == static_cast<long long>(k)) ++k;
    return k;
}

namespace detail {

/// Schur value on the closed orthant, reducing zero coordinates to the
/// truncated tuple (n_l - l, ..., n_{N-1} - l) in the non-zero variables.
/// Returns 0 when the shape forces a vanishing sum.
template <typename T>
T schur_with_zero_reduction(std::span<const T> u, const ExponentTuple& n, std::uint64_t budget) {
    const std::size_t l = count_zero_coords(u);
    if (l == 0) return schur_bialternant(u, n, budget);
    if (zero_prefix_length(n) < l) return T(0);
    std::vector<T> reduced;
    reduced.reserve(u.size() - l);
    for (const auto& x : u) {
        if (!(x == T(0))) reduced.push_back(x);
    }
    if (reduced.empty()) return T(1); // empty-shape remnant: n = delta on the zero prefix
    std::vector<double> shifted;
    for (std::size_t j = l; j < n.size(); ++j) {
        shifted.push_back(static_cast<double>(n.int_at(j) - static_cast<long long>(l)));
    }
    return schur_bialternant(std::span<const T>(reduced), ExponentTuple(shifted), budget);
}

} // namespace detail

/// Schur polynomial ratio s_n(u)/s_m(u) for integral tuples with m <= n
/// componentwise, defined on the boundary domain allowed by m.
template <typename T>
T schur_ratio_integral(std::span<const T> u, const ExponentTuple& m, const ExponentTuple& n,
                       std::uint64_t budget = 1000000) {
    if (!m.dominated_by(n)) throw std::invalid_argument("schur_ratio: tuples not componentwise comparable");
    for (const auto& x : u) {
        if (x < T(0)) throw std::domain_error("schur_ratio: coordinates must lie in the closed orthant");
    }
    const std::size_t zeros = count_zero_coords(u);
    if (zeros > zero_prefix_length(m)) {
        throw std::domain_error("schur_ratio: too many zero coordinates for the denominator tuple");
    }
    const T denom = detail::schur_with_zero_reduction(u, m, budget);
    if (denom == T(0)) throw std::domain_error("schur_ratio: denominator Schur polynomial vanishes");
    return detail::schur_with_zero_reduction(u, n, budget) / denom;
}

/// Generalized Vandermonde ratio det(u^{on})/det(u^{om}) for real exponent
/// tuples with m <= n componentwise. Requires distinct coordinates, positive
/// unless m_0 = n_0 = 0 in which case a single zero coordinate is reduced by
/// cofactor expansion to the truncated tuples.
inline double schur_ratio_real(std::span<const double> u, const ExponentTuple& m, const ExponentTuple& n) {
    if (!m.dominated_by(n)) throw std::invalid_argument("schur_ratio: tuples not componentwise comparable");
    if (!coords_distinct(u)) throw std::domain_error("schur_ratio: real-exponent ratio requires distinct coordinates");
    std::vector<double> coords(u.begin(), u.end());
    for (double x : coords) {
        if (x < 0.0) throw std::domain_error("schur_ratio: negative coordinate");
    }
    const std::size_t zeros = count_zero_coords(std::span<const double>(coords));
    if (zeros > 0) {
        if (m[0] != 0.0 || n[0] != 0.0) {
            throw std::domain_error("schur_ratio: zero coordinate requires m_0 = n_0 = 0");
        }
        // first-row cofactor expansion at the zero coordinate
        std::vector<double> reduced;
        for (double x : coords) {
            if (x != 0.0) reduced.push_back(x);
        }
        std::vector<double> mt(m.values().begin() + 1, m.values().end());
        std::vector<double> nt(n.values().begin() + 1, n.values().end());
        if (mt.empty()) return 1.0;
        return schur_ratio_real(std::span<const double>(reduced), ExponentTuple(mt), ExponentTuple(nt));
    }
    const double denom = gen_vandermonde_det(std::span<const double>(coords), m);
    if (denom == 0.0) throw std::domain_error("schur_ratio: denominator determinant vanishes");
    return gen_vandermonde_det(std::span<const double>(coords), n) / denom;
}

/// Upper bound rho^{|n-m|/2} V(n)/V(m) for the ratio on (0, sqrt(rho)]^N.
inline double monotone_bound(const ExponentTuple& m, const ExponentTuple& n, double rho) {
    return std::pow(rho, (n.sum() - m.sum()) / 2.0) * vandermonde(n) / vandermonde(m);
}

/// Square of the bound, exact for integral tuples and rational rho.
inline Rational monotone_bound_squared_exact(const ExponentTuple& m, const ExponentTuple& n,
                                             const Rational& rho) {
    if (!m.integral() || !n.integral()) throw std::domain_error("monotone_bound_squared_exact: integral tuples required");
    const long long gap = static_cast<long long>(n.sum() - m.sum());
    const Rational vr = Rational(vandermonde_exact(n)) / Rational(vandermonde_exact(m));
    return pow_rational(rho, gap) * vr * vr;
}

} // namespace entrywise

#endif // ENTRYWISE_SCHUR_HPP
