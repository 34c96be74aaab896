#ifndef ENTRYWISE_PRESERVER_HPP
#define ENTRYWISE_PRESERVER_HPP

#include "entrywise/domination.hpp"
#include "entrywise/linalg.hpp"
#include "entrywise/preserver_spec.hpp"
#include "entrywise/sampling.hpp"
#include "entrywise/strata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace entrywise {

/// Full test-set membership: entry ranges, positive semidefiniteness, and
/// the rank-one restriction where the test set demands it.
inline bool in_test_set(const PreserverSpec& spec, const HermitianMatrix& a, const ToleranceProfile& tol = {}) {
    if (!entries_in_test_set(spec, a)) return false;
    if (!is_psd(a, tol).psd) return false;
    if (spec.testSet == TestSet::RankOneOpen || spec.testSet == TestSet::RankOneClosed) {
        return numeric_rank(a, tol) <= 1;
    }
    return true;
}

struct JacobiTrudiResult {
    double lhs = 0.0;  // det F[u u*] computed entrywise
    double rhs = 0.0;  // sum over increasing exponent tuples of |det u^{on}|^2 prod c_n
};

/// Both sides of the determinant expansion of det F[u u*] over N-subsets of
/// the exponent set S, computed by independent routes.
inline JacobiTrudiResult jacobi_trudi_det(const std::vector<double>& exponents,
                                          const std::vector<double>& coefficients, const VectorXcd& u) {
    const std::size_t N = static_cast<std::size_t>(u.size());
    if (exponents.size() != coefficients.size()) {
        throw std::invalid_argument("jacobi_trudi_det: exponent/coefficient length mismatch");
    }
    if (exponents.size() < N) throw std::invalid_argument("jacobi_trudi_det: |S| must be at least N");
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        if (!(exponents[i - 1] < exponents[i])) {
            throw std::invalid_argument("jacobi_trudi_det: exponents must be strictly increasing");
        }
    }
    bool allIntegral = true;
    for (double e : exponents) allIntegral = allIntegral && std::rint(e) == e && e >= 0.0;
    if (!allIntegral) {
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            if (u(i).imag() != 0.0 || u(i).real() < 0.0) {
                throw std::domain_error("jacobi_trudi_det: real exponents need non-negative real u");
            }
        }
    }

    std::vector<PolyTerm> terms;
    for (std::size_t i = 0; i < exponents.size(); ++i) terms.push_back({coefficients[i], exponents[i]});
    const HermitianMatrix gram = HermitianMatrix::rank_one(u, allIntegral ? Field::Complex : Field::Real);
    JacobiTrudiResult out;
    out.lhs = apply_entrywise(terms, gram).mat().determinant().real();

    std::vector<Complex> coords(N);
    for (std::size_t i = 0; i < N; ++i) coords[i] = u(static_cast<Eigen::Index>(i));

    std::vector<std::size_t> pick(N);
    auto subsetTerm = [&](const std::vector<std::size_t>& sel) {
        std::vector<double> tuple(N);
        double coeffProd = 1.0;
        for (std::size_t k = 0; k < N; ++k) {
            tuple[k] = exponents[sel[k]];
            coeffProd *= coefficients[sel[k]];
        }
        if (coeffProd == 0.0) return 0.0;
        const ExponentTuple nt{std::vector<double>(tuple)};
        double detAbsSq = 0.0;
        if (allIntegral) {
            const Complex det = gen_vandermonde_det_integral(std::span<const Complex>(coords), nt);
            detAbsSq = std::norm(det);
        } else {
            std::vector<double> realCoords(N);
            for (std::size_t i = 0; i < N; ++i) realCoords[i] = coords[i].real();
            const double det = gen_vandermonde_det(std::span<const double>(realCoords), nt);
            detAbsSq = det * det;
        }
        return detAbsSq * coeffProd;
    };

    auto recurse = [&](auto&& self, std::size_t slot, std::size_t next) -> void {
        if (slot == N) {
            std::vector<std::size_t> sel(pick.begin(), pick.end());
            out.rhs += subsetTerm(sel);
            return;
        }
        for (std::size_t i = next; i + (N - slot - 1) < exponents.size(); ++i) {
            pick[slot] = i;
            self(self, slot + 1, i + 1);
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

struct SharpLmiVerdict {
    bool holds = false;        // A^{oM} <= C h[A] in the Loewner order
    double minEigG = 0.0;      // smallest eigenvalue of g[A] = h[A] - C^{-1} A^{oM}
    double thresholdValue = 0.0;
};

inline SharpLmiVerdict sharp_lmi_check(const PreserverSpec& spec, const HermitianMatrix& a,
                                       const ToleranceProfile& tol = {}) {
    spec.validate();
    if (spec.terms() != static_cast<std::size_t>(a.dim())) {
        throw std::invalid_argument("sharp_lmi_check: spec needs one term per matrix dimension");
    }
    if (!in_test_set(spec, a, tol)) throw std::domain_error("sharp_lmi_check: matrix outside the declared test set");
    const ThresholdValue c = threshold_C(spec);

    std::vector<PolyTerm> scaled = h_terms(spec);
    for (PolyTerm& t : scaled) t.coeff *= c.value;
    const HermitianMatrix lhs = apply_entrywise(scaled, a);
    const HermitianMatrix powM = hadamard_power(a, spec.M);

    SharpLmiVerdict v;
    v.thresholdValue = c.value;
    v.holds = loewner_geq(lhs, powM, tol);
    v.minEigG = eigen_hermitian(apply_g(spec, a, c.value), tol).min_eigenvalue();
    return v;
}

/// The five equivalent positive-definiteness flags, each computed by an
/// independent route. Under the theorem's preconditions they must agree.
struct EquivalenceReport {
    bool hasDominatingVector = false;
    bool rowsDistinct = false;
    bool hPD = false;
    bool fPD = false;
    bool inTopStratum = false;
    std::optional<VectorXcd> witness;

    bool consistent() const {
        return hasDominatingVector == rowsDistinct && rowsDistinct == hPD && hPD == fPD &&
               fPD == inTopStratum;
    }
};

inline EquivalenceReport equivalence_report(const PreserverSpec& spec, const HermitianMatrix& a, Rng& rng,
                                            const ToleranceProfile& tol = {}) {
    spec.validate();
    if (spec.terms() != static_cast<std::size_t>(a.dim())) {
        throw std::invalid_argument("equivalence_report: spec needs one term per matrix dimension");
    }
    const ThresholdValue c = threshold_C(spec);
    bool cPrimeAbove;
    if (c.exact) {
        cPrimeAbove = spec.cPrime > -1 / c.exact_value();
    } else {
        cPrimeAbove = spec.cprime() > -1.0 / c.value;
    }
    if (!cPrimeAbove) throw std::invalid_argument("equivalence_report: requires c' > -1/C");
    bool zeroRow = false;
    for (Eigen::Index i = 0; i < a.dim(); ++i) zeroRow = zeroRow || a.row_is_zero(i);
    if (zeroRow && spec.exponents[0] != 0.0) {
        throw std::invalid_argument("equivalence_report: zero row requires n_0 = 0");
    }
    if (!in_test_set(spec, a, tol)) {
        throw std::domain_error("equivalence_report: matrix outside the declared test set");
    }

    EquivalenceReport r;
    const double tolAbs = tol.rowEq * (1.0 + a.max_abs_entry());
    r.rowsDistinct = detail::rows_distinct(a, tolAbs);
    try {
        DominationResult dom = dominating_vector(a, rng, tol);
        r.hasDominatingVector = true;
        r.witness = dom.u;
    } catch (const EqualRowsError&) {
        r.hasDominatingVector = false;
    }
    r.hPD = is_pd(apply_h(spec, a), tol);
    r.fPD = is_pd(apply_f(spec, a), tol);
    r.inTopStratum = partition_of(a, tol).size() == static_cast<std::size_t>(a.dim());
    return r;
}

struct SharpnessSearchReport {
    double thresholdValue = 0.0;
    double cprimeUsed = 0.0;
    int samples = 0;
    double minEigSampled = std::numeric_limits<double>::infinity();
    double gridMinEig = std::numeric_limits<double>::infinity();
    std::optional<VectorXd> witness;  // rank-one grid point with the most negative eigenvalue
    bool violationFound = false;
};

/// Hunts for PSD violations of f[A] over the declared test set: seeded
/// random samples plus a rank-one grid concentrated near the extremal
/// corner u -> sqrt(rho) 1 (geometric-progression vectors included). With
/// c' >= -1/C no violation should exist; anything below the threshold is
/// expected to produce a witness.
inline SharpnessSearchReport sharpness_search(const PreserverSpec& spec, int samples, Rng& rng,
                                              const ToleranceProfile& tol = {}, int gridPerCoord = 64) {
    spec.validate();
    const Eigen::Index n = static_cast<Eigen::Index>(spec.terms());
    const double rho = spec.rho_d();
    const double sqrtRho = std::sqrt(rho);

    SharpnessSearchReport report;
    report.thresholdValue = threshold_C(spec).value;
    report.cprimeUsed = spec.cprime();

    auto probe = [&](const HermitianMatrix& a, const std::optional<VectorXd>& u, bool fromGrid) {
        const SpectralFactorization f = eigen_hermitian(apply_f(spec, a), tol);
        const double minEig = f.min_eigenvalue();
        if (fromGrid) {
            if (minEig < report.gridMinEig) {
                report.gridMinEig = minEig;
                report.witness = u;
            }
            if (minEig < -1e-10) report.violationFound = true;
        } else {
            report.minEigSampled = std::min(report.minEigSampled, minEig);
            if (minEig < -1e-9 * std::max(1.0, f.max_eigenvalue())) report.violationFound = true;
        }
    };

    for (int s = 0; s < samples; ++s) {
        probe(sample_test_set(spec, n, rng), std::nullopt, false);
        ++report.samples;
    }

    // Rank-one corner grid: u_k = sqrt(rho)(1 - eta_k), eta log-spaced, with
    // strictly increasing tuples to avoid redundant permutations.
    std::vector<double> etas;
    for (int g = 0; g < gridPerCoord; ++g) {
        const double t = static_cast<double>(g) / static_cast<double>(gridPerCoord - 1);
        etas.push_back(std::pow(10.0, -4.0 + t * (std::log10(0.25) + 4.0)));
    }
    std::vector<int> pick(static_cast<std::size_t>(n));
    auto visit = [&](auto&& self, std::size_t slot, int next) -> void {
        if (slot == static_cast<std::size_t>(n)) {
            VectorXd u(n);
            for (Eigen::Index k = 0; k < n; ++k) u(k) = sqrtRho * (1.0 - etas[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])]);
            probe(HermitianMatrix::rank_one(u), u, true);
            return;
        }
        for (int g = next; g < gridPerCoord; ++g) {
            pick[slot] = g;
            self(self, slot + 1, g + 1);
        }
    };
    visit(visit, 0, 0);

    // geometric-progression vectors (rank-one Hankel moment matrices)
    for (double eta : {1e-4, 1e-3, 5e-3, 2e-2, 1e-1}) {
        for (double q : {0.9, 0.95, 0.99, 0.999}) {
            VectorXd u(n);
            for (Eigen::Index k = 0; k < n; ++k) u(k) = sqrtRho * (1.0 - eta) * std::pow(q, static_cast<double>(k));
            probe(HermitianMatrix::rank_one(u), u, true);
        }
    }
    return report;
}

struct LoewnerNecessityReport {
    std::vector<double> derivativeMin;  // min over the grid of f^{(k)}, k = 0..N-1
    bool conditionHolds = false;        // every listed derivative non-negative on the grid
};

/// Grid check of Loewner's necessary condition: f, f', ..., f^{(N-1)} must
/// be non-negative on (0, rho).
inline LoewnerNecessityReport loewner_necessity_check(std::vector<PolyTerm> terms, int N, double rho,
                                                      int gridPoints = 256) {
    if (N < 1 || gridPoints < 2 || !(rho > 0.0)) {
        throw std::invalid_argument("loewner_necessity_check: bad parameters");
    }
    LoewnerNecessityReport report;
    report.conditionHolds = true;
    double scale = 0.0;
    for (const PolyTerm& t : terms) scale = std::max(scale, std::abs(t.coeff));
    const double floor = -1e-12 * std::max(1.0, scale);

    for (int order = 0; order < N; ++order) {
        double minVal = std::numeric_limits<double>::infinity();
        for (int g = 1; g < gridPoints; ++g) {
            const double x = rho * static_cast<double>(g) / static_cast<double>(gridPoints);
            double val = 0.0;
            for (const PolyTerm& t : terms) {
                if (t.coeff == 0.0) continue;
                val += t.coeff * real_pow(x, t.exponent);
            }
            minVal = std::min(minVal, val);
        }
        report.derivativeMin.push_back(minVal);
        report.conditionHolds = report.conditionHolds && minVal >= floor;
        // differentiate termwise for the next order
        for (PolyTerm& t : terms) {
            t.coeff *= t.exponent;
            t.exponent -= 1.0;
        }
    }
    return report;
}

} // namespace entrywise

#endif // ENTRYWISE_PRESERVER_HPP
