#ifndef ENTRYWISE_RAYLEIGH_HPP
#define ENTRYWISE_RAYLEIGH_HPP

#include "entrywise/linalg.hpp"
#include "entrywise/preserver_spec.hpp"
#include "entrywise/schur.hpp"
#include "entrywise/strata.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace entrywise {

/// The h-part of a preserver together with the power M it is measured
/// against. Unlike the full spec, M is only required to be positive and
/// n_0 = 0; M may sit below the largest exponent.
struct RayleighData {
    std::vector<double> coeffs;
    ExponentTuple exponents;
    double M;

    void validate() const {
        if (coeffs.empty() || coeffs.size() != exponents.size()) {
            throw std::invalid_argument("RayleighData: |c| must equal |n| and be non-empty");
        }
        for (double c : coeffs) {
            if (!(c > 0.0)) throw std::invalid_argument("RayleighData: coefficients must be positive");
        }
        if (exponents[0] != 0.0) throw std::invalid_argument("RayleighData: requires n_0 = 0");
        if (!(M > 0.0)) throw std::invalid_argument("RayleighData: requires M > 0");
    }

    static RayleighData from_spec(const PreserverSpec& spec) {
        RayleighData d{{}, spec.exponents, spec.M};
        for (std::size_t j = 0; j < spec.terms(); ++j) d.coeffs.push_back(spec.coeff(j));
        return d;
    }

    std::vector<PolyTerm> h_poly() const {
        std::vector<PolyTerm> terms;
        for (std::size_t j = 0; j < coeffs.size(); ++j) terms.push_back({coeffs[j], exponents[j]});
        return terms;
    }
};

/// R(A, u) = (u* A^{oM} u) / (u* h[A] u).
inline double rayleigh_quotient(const HermitianMatrix& a, const VectorXcd& u, const RayleighData& data) {
    if (u.size() != a.dim()) throw std::invalid_argument("rayleigh_quotient: size mismatch");
    const HermitianMatrix powM = hadamard_power(a, data.M);
    const HermitianMatrix h = apply_entrywise(data.h_poly(), a);
    const double num = (u.adjoint() * powM.mat() * u)(0).real();
    const double den = (u.adjoint() * h.mat() * u)(0).real();
    const double scale = std::max(1.0, h.max_abs_entry() * u.squaredNorm());
    if (std::abs(den) <= 1e-14 * scale) {
        throw std::domain_error("rayleigh_quotient: denominator form vanishes");
    }
    return num / den;
}

/// The smallest constant with A^{oM} <= C_R h[A], computed as the spectral
/// radius of h[A]^{dagger/2} A^{oM} h[A]^{dagger/2}.
inline double c_R(const HermitianMatrix& a, const RayleighData& data, const ToleranceProfile& tol = {}) {
    data.validate();
    if (!is_psd(a, tol).psd) throw std::domain_error("c_R: matrix is not positive semidefinite");
    const HermitianMatrix h = apply_entrywise(data.h_poly(), a);
    const HermitianMatrix root = pseudo_inverse_sqrt(h, tol);
    const HermitianMatrix powM = hadamard_power(a, data.M);
    MatrixXcd q = root.mat() * powM.mat() * root.mat();
    const HermitianMatrix congruence = HermitianMatrix::from_upper(std::move(q), a.field());
    return spectral_radius(congruence);
}

inline double c_R(const HermitianMatrix& a, const PreserverSpec& spec, const ToleranceProfile& tol = {}) {
    return c_R(a, RayleighData::from_spec(spec), tol);
}

/// Closed form for rank one: sum_j det(u^{o n_j})^2 / (c_j det(u^{o n})^2),
/// where n_j replaces the j-th exponent by M. Requires distinct positive u.
inline double c_R_rank_one(const VectorXd& u, const RayleighData& data) {
    data.validate();
    const std::size_t N = static_cast<std::size_t>(u.size());
    if (data.exponents.size() != N) throw std::invalid_argument("c_R_rank_one: |u| must equal |n|");
    std::vector<double> coords(N);
    for (std::size_t i = 0; i < N; ++i) {
        coords[i] = u(static_cast<Eigen::Index>(i));
        if (!(coords[i] > 0.0)) throw std::domain_error("c_R_rank_one: coordinates must be positive");
    }
    if (!coords_distinct(std::span<const double>(coords))) {
        throw std::domain_error("c_R_rank_one: coordinates must be distinct");
    }

    const double base = gen_vandermonde_det(std::span<const double>(coords), data.exponents);
    double sum = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        std::vector<double> exps = data.exponents.values();
        exps[j] = data.M;
        std::sort(exps.begin(), exps.end());
        bool repeated = false;
        for (std::size_t k = 1; k < exps.size(); ++k) repeated = repeated || exps[k - 1] == exps[k];
        if (repeated) continue;  // M collides with another exponent: zero determinant
        const double det = gen_vandermonde_det(std::span<const double>(coords), ExponentTuple(exps));
        sum += (det * det) / (data.coeffs[j] * base * base);
    }
    return sum;
}

struct MinimalityVerdict {
    double cR = 0.0;
    bool psdAtCR = false;          // C_R h[A] - A^{oM} is PSD
    bool minimalityWitnessed = false;  // shrinking C_R by 1e-6 breaks PSD
    bool degenerate = false;       // C_R ~ 0, clause (ii) vacuous
    double minEigShrunk = 0.0;
};

/// Certifies both halves of minimality: the bound holds at C_R and fails
/// strictly just below it.
inline MinimalityVerdict minimality_certify(const HermitianMatrix& a, const RayleighData& data,
                                            const ToleranceProfile& tol = {}) {
    MinimalityVerdict v;
    v.cR = c_R(a, data, tol);
    const HermitianMatrix h = apply_entrywise(data.h_poly(), a);
    const HermitianMatrix powM = hadamard_power(a, data.M);
    const double scale = std::max(1.0, spectral_radius(powM));

    {
        MatrixXcd lhs = v.cR * h.mat() - powM.mat();
        v.psdAtCR = is_psd(HermitianMatrix::from_upper(std::move(lhs), a.field()), tol).psd;
    }
    if (v.cR <= 1e-12 * scale) {
        v.degenerate = true;
        v.minimalityWitnessed = true;  // vacuous clause
        return v;
    }
    {
        const double shrunk = (1.0 - 1e-6) * v.cR;
        MatrixXcd lhs = shrunk * h.mat() - powM.mat();
        v.minEigShrunk =
            eigen_hermitian(HermitianMatrix::from_upper(std::move(lhs), a.field()), tol).min_eigenvalue();
        v.minimalityWitnessed = v.minEigShrunk < -1e-12 * scale;
    }
    return v;
}

struct JumpRecord {
    double t = 0.0;          // parameter where the path left the stratum
    double cRInside = 0.0;   // value at the last in-stratum point
    double cROutside = 0.0;  // value at the offending point
};

struct ContinuityReport {
    bool inStratumThroughout = false;
    std::vector<double> oscillations;  // max |Delta C_R| per refinement level
    std::vector<double> ratios;        // oscillation ratios between levels
    bool ratioTestPassed = false;
    std::optional<JumpRecord> jump;
};

/// Samples C_R along the inflated path A_t = up(B + tE) for t in [0, 1] and
/// runs a three-level refinement-ratio test: the oscillation should halve
/// (within a factor of 1.5) each time the step is halved. If the path exits
/// the stratum the probe stops there and records the one-sided values.
inline ContinuityReport continuity_probe(const Partition& pi, const RayleighData& data,
                                         const HermitianMatrix& core, const HermitianMatrix& direction,
                                         int steps, const ToleranceProfile& tol = {}) {
    if (steps < 2) throw std::invalid_argument("continuity_probe: need at least two steps");
    if (core.dim() != direction.dim() || static_cast<std::size_t>(core.dim()) != pi.size()) {
        throw std::invalid_argument("continuity_probe: core/direction size must match the block count");
    }
    data.validate();

    ContinuityReport report;
    report.inStratumThroughout = true;

    auto matrix_at = [&](double t) {
        MatrixXcd m = core.mat() + t * direction.mat();
        return inflate(HermitianMatrix::from_upper(std::move(m), core.field()), pi);
    };

    double lastInsideT = 0.0;
    double lastInsideValue = 0.0;
    for (int level = 0; level < 3 && report.inStratumThroughout; ++level) {
        const int segments = steps << level;
        double osc = 0.0;
        std::optional<double> prev;
        for (int k = 0; k <= segments; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(segments);
            const HermitianMatrix at = matrix_at(t);
            if (!(partition_of(at, tol) == pi)) {
                report.inStratumThroughout = false;
                JumpRecord jump;
                jump.t = t;
                jump.cRInside = lastInsideValue;
                jump.cROutside = c_R(at, data, tol);
                report.jump = jump;
                break;
            }
            const double value = c_R(at, data, tol);
            if (prev) osc = std::max(osc, std::abs(value - *prev));
            prev = value;
            lastInsideT = t;
            lastInsideValue = value;
        }
        if (report.inStratumThroughout) report.oscillations.push_back(osc);
    }
    (void)lastInsideT;

    if (report.oscillations.size() == 3) {
        const double floor = 1e-13 * std::max(1.0, std::abs(lastInsideValue));
        report.ratioTestPassed = true;
        for (std::size_t l = 0; l + 1 < report.oscillations.size(); ++l) {
            const double coarse = report.oscillations[l];
            const double fine = report.oscillations[l + 1];
            if (coarse <= floor && fine <= floor) {
                report.ratios.push_back(1.0);  // flat path: nothing to refine
                continue;
            }
            const double ratio = fine / std::max(coarse, floor);
            report.ratios.push_back(ratio);
            if (ratio > 0.75) report.ratioTestPassed = false;  // 1.5 x perfect halving
        }
    }
    return report;
}

struct EqualityGap {
    double cR = 0.0;
    double cV = 0.0;
    double gap = 0.0;
};

/// Exploratory comparison of the Rayleigh bound with the sharp threshold.
inline EqualityGap equality_gap(const HermitianMatrix& a, const PreserverSpec& spec,
                                const ToleranceProfile& tol = {}) {
    spec.validate();
    EqualityGap out;
    out.cR = c_R(a, RayleighData::from_spec(spec), tol);
    out.cV = threshold_C(spec).value;
    out.gap = out.cV - out.cR;
    return out;
}

} // namespace entrywise

#endif // ENTRYWISE_RAYLEIGH_HPP
