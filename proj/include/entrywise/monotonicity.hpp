#ifndef ENTRYWISE_MONOTONICITY_HPP
#define ENTRYWISE_MONOTONICITY_HPP

#include "entrywise/rng.hpp"
#include "entrywise/schur.hpp"
#include "entrywise/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace entrywise {

struct MonotonicityReport {
    int chainsRun = 0;
    int evaluations = 0;
    double minForwardDifference = std::numeric_limits<double>::infinity();
    bool strictViolation = false;   // some forward difference below -strictMargin
    bool nonStrictFlagged = false;  // some difference inside [-strictMargin, strictMargin]
    bool boundHolds = true;         // ratio <= rho-corner bound on box samples
    double maxBoundExcess = 0.0;
    bool exactMode = false;
};

namespace detail {

/// Largest k with m_j = n_j = j for j < k and (k = N or m_k, n_k > k).
/// On points with at most this many zero coordinates the ratio is strictly
/// increasing in every coordinate.
inline std::size_t strictness_zero_budget(const ExponentTuple& m, const ExponentTuple& n) {
    if (!m.integral() || !n.integral()) return 0;
    const std::size_t k = std::min(zero_prefix_length(m), zero_prefix_length(n));
    return k;
}

} // namespace detail

/// Samples increasing chains per coordinate and certifies that the Schur
/// ratio s_n/s_m (or the generalized Vandermonde ratio for real exponent
/// tuples) increases strictly along each, plus the rho-corner upper bound on
/// box samples. Integral tuples with rational sample points run exactly.
inline MonotonicityReport monotonicity_certify(const ExponentTuple& m, const ExponentTuple& n, double rho,
                                               Rng& rng, int chains, const ToleranceProfile& tol = {},
                                               int pointsPerChain = 5) {
    if (m.size() != n.size()) throw std::invalid_argument("monotonicity_certify: tuple sizes differ");
    if (m == n) throw std::invalid_argument("monotonicity_certify: tuples must be distinct");
    if (!m.dominated_by(n)) throw std::invalid_argument("monotonicity_certify: requires m <= n componentwise");
    if (!(rho > 0.0)) throw std::invalid_argument("monotonicity_certify: rho must be positive");
    if (chains < 1 || pointsPerChain < 2) throw std::invalid_argument("monotonicity_certify: bad sample counts");

    const std::size_t N = m.size();
    MonotonicityReport report;
    report.exactMode = m.integral() && n.integral();
    const double sqrtRho = std::sqrt(rho);

    const std::size_t zeroBudget = report.exactMode ? detail::strictness_zero_budget(m, n) : 0;

    auto track_difference = [&](double diff) {
        report.minForwardDifference = std::min(report.minForwardDifference, diff);
        if (diff < -tol.strictMargin) report.strictViolation = true;
        if (std::abs(diff) <= tol.strictMargin) report.nonStrictFlagged = true;
    };

    for (int chain = 0; chain < chains; ++chain) {
        const std::size_t coord = static_cast<std::size_t>(rng.uniform_index(N));

        if (report.exactMode) {
            // rational base point in (0, sqrt(rho)]^N, occasionally with
            // zeros inside the licensed boundary budget
            const Rational cap = rational_from_double(sqrtRho * 0.999);
            std::vector<Rational> u(N);
            std::size_t zeros = 0;
            if (zeroBudget > 0 && rng.coin(0.3)) {
                zeros = 1 + rng.uniform_index(zeroBudget);
            }
            for (std::size_t i = 0; i < N; ++i) {
                if (i < zeros && i != coord) {
                    u[i] = 0;
                    continue;
                }
                const long den = rng.uniform_int(7, 40);
                const long num = rng.uniform_int(1, den - 1);
                u[i] = Rational(num, den) * cap;
            }
            // chain of increasing rational values for the chosen coordinate
            std::vector<Rational> ts;
            Rational t = Rational(rng.uniform_int(1, 5), 64) * cap;
            for (int p = 0; p < pointsPerChain; ++p) {
                ts.push_back(t);
                t += Rational(rng.uniform_int(1, 7), 64) * cap;
            }
            std::optional<Rational> prev;
            for (const Rational& tv : ts) {
                u[coord] = tv;
                Rational value;
                try {
                    value = schur_ratio_integral(std::span<const Rational>(u), m, n);
                } catch (const std::domain_error&) {
                    prev.reset();
                    continue;  // point outside the admissible boundary set
                }
                ++report.evaluations;
                if (prev) {
                    const Rational diff = value - *prev;
                    track_difference(to_double(diff));
                    if (!(diff > 0)) report.strictViolation = true;
                }
                prev = value;
            }
        } else {
            std::vector<double> u(N);
            bool ok = false;
            for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
                for (std::size_t i = 0; i < N; ++i) u[i] = rng.uniform(1e-3, 1.0) * sqrtRho;
                ok = coords_distinct(std::span<const double>(u));
            }
            if (!ok) continue;
            double t = rng.uniform(1e-3, 0.2) * sqrtRho;
            std::optional<double> prev;
            for (int p = 0; p < pointsPerChain; ++p) {
                u[coord] = t;
                t += rng.uniform(0.02, 0.25) * sqrtRho;
                if (!coords_distinct(std::span<const double>(u))) continue;
                const double value = schur_ratio_real(std::span<const double>(u), m, n);
                ++report.evaluations;
                if (prev) track_difference(value - *prev);
                prev = value;
            }
        }
        ++report.chainsRun;
    }

    // rho-corner upper bound on (0, sqrt(rho)]^N samples
    const int boundSamples = std::max(8, chains / 2);
    if (report.exactMode) {
        const Rational rhoExact = rational_from_double(rho);
        const Rational boundSq = monotone_bound_squared_exact(m, n, rhoExact);
        const Rational cap = rational_from_double(sqrtRho * 0.9999);
        for (int s = 0; s < boundSamples; ++s) {
            std::vector<Rational> u(N);
            for (std::size_t i = 0; i < N; ++i) {
                const long den = rng.uniform_int(5, 60);
                u[i] = Rational(rng.uniform_int(1, den), den) * cap;
            }
            Rational value;
            try {
                value = schur_ratio_integral(std::span<const Rational>(u), m, n);
            } catch (const std::domain_error&) {
                continue;
            }
            if (value * value > boundSq) {
                report.boundHolds = false;
                report.maxBoundExcess = std::max(report.maxBoundExcess, to_double(value * value - boundSq));
            }
        }
    } else {
        const double bound = monotone_bound(m, n, rho);
        for (int s = 0; s < boundSamples; ++s) {
            std::vector<double> u(N);
            for (std::size_t i = 0; i < N; ++i) u[i] = rng.uniform(1e-3, 1.0) * sqrtRho;
            if (!coords_distinct(std::span<const double>(u))) continue;
            const double value = schur_ratio_real(std::span<const double>(u), m, n);
            const double excess = value - bound;
            if (excess > tol.strictMargin * std::max(1.0, bound)) {
                report.boundHolds = false;
                report.maxBoundExcess = std::max(report.maxBoundExcess, excess);
            }
        }
    }
    return report;
}

} // namespace entrywise

#endif // ENTRYWISE_MONOTONICITY_HPP
