#ifndef ENTRYWISE_FUZZ_HPP
#define ENTRYWISE_FUZZ_HPP

#include "entrywise/domination.hpp"
#include "entrywise/monotonicity.hpp"
#include "entrywise/preserver.hpp"
#include "entrywise/rayleigh.hpp"
#include "entrywise/sampling.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace entrywise {

/// Consecutive-integer spec with small random data; n_0 drawn from
/// {0, ..., n0Max} and rational coefficients.
inline PreserverSpec random_consecutive_spec(Rng& rng, std::size_t N, TestSet ts, long n0Max = 1,
                                             double rho = 1.0) {
    PreserverSpec spec;
    const long n0 = rng.uniform_int(0, n0Max);
    std::vector<double> exps(N);
    for (std::size_t j = 0; j < N; ++j) exps[j] = static_cast<double>(n0 + static_cast<long>(j));
    spec.exponents = ExponentTuple(exps);
    for (std::size_t j = 0; j < N; ++j) spec.coeffs.push_back(Rational(rng.uniform_int(1, 4), rng.uniform_int(1, 2)));
    spec.M = static_cast<double>(n0 + static_cast<long>(N) + rng.uniform_int(0, 2));
    spec.rho = rational_from_double(rho);
    spec.testSet = ts;
    spec.validate();
    return spec;
}

/// Sets c' = -factor / C exactly.
inline void inject_cprime_factor(PreserverSpec& spec, const Rational& factor) {
    const ThresholdValue c = threshold_C(spec);
    if (c.exact) {
        spec.cPrime = -factor / c.exact_value();
    } else {
        spec.cPrime = rational_from_double(-to_double(factor) / c.value);
    }
}

/// Rank-one matrix concentrated near the extremal corner u -> sqrt(rho) 1.
inline HermitianMatrix corner_rank_one(Rng& rng, Eigen::Index n, double rho) {
    const double sqrtRho = std::sqrt(rho);
    const double eta = std::pow(10.0, rng.uniform(-4.0, -0.7));
    VectorXd u(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        u(i) = sqrtRho * (1.0 - eta * (1.0 + 0.2 * rng.uniform01() + 0.05 * static_cast<double>(i)));
    }
    return HermitianMatrix::rank_one(u);
}

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::string firstCounterexample;
};

struct FuzzSummary {
    std::vector<SuiteResult> suites;
    bool allPassed = true;
};

struct FuzzOptions {
    std::uint64_t seed = 0;
    int budget = 10;
    std::string suite = "all";
    Rational sharpnessFactor = 1;  // c' = -factor / C in the sharpness suite
    int workers = 0;              // 0: hardware concurrency
};

namespace detail {

using InstanceFn = std::function<std::optional<std::string>(Rng&)>;

/// Runs `budget` instances with per-index seeds and merges results by index,
/// so the outcome does not depend on thread scheduling.
inline SuiteResult run_suite(const std::string& name, std::uint64_t seed, int budget, int workers,
                             const InstanceFn& instance) {
    std::vector<std::optional<std::string>> failures(static_cast<std::size_t>(budget));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned W = workers > 0 ? static_cast<unsigned>(workers) : std::min(hw, 8u);

    auto work = [&](unsigned w) {
        for (int i = static_cast<int>(w); i < budget; i += static_cast<int>(W)) {
            Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1)) ^
                    std::hash<std::string>{}(name));
            try {
                failures[static_cast<std::size_t>(i)] = instance(rng);
            } catch (const std::exception& e) {
                failures[static_cast<std::size_t>(i)] = std::string("exception: ") + e.what();
            }
        }
    };
    if (W == 1 || budget <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < W; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SuiteResult r;
    r.name = name;
    for (int i = 0; i < budget; ++i) {
        if (failures[static_cast<std::size_t>(i)]) {
            ++r.failed;
            if (r.firstCounterexample.empty()) {
                r.firstCounterexample = "instance " + std::to_string(i) + ": " + *failures[static_cast<std::size_t>(i)];
            }
        } else {
            ++r.passed;
        }
    }
    return r;
}

inline std::optional<std::string> jacobi_trudi_instance(Rng& rng) {
    const Eigen::Index N = static_cast<Eigen::Index>(rng.uniform_int(2, 4));
    const int setSize = static_cast<int>(rng.uniform_int(static_cast<long>(N), 7));
    const bool integral = rng.coin(0.6);
    std::vector<double> S;
    double next = integral ? static_cast<double>(rng.uniform_int(0, 1)) : rng.uniform(0.0, 0.7);
    for (int i = 0; i < setSize; ++i) {
        S.push_back(next);
        next += integral ? static_cast<double>(rng.uniform_int(1, 2)) : rng.uniform(0.3, 1.5);
        if (next > 8.0) break;
    }
    if (S.size() < static_cast<std::size_t>(N)) return std::nullopt;
    std::vector<double> coeffs;
    for (std::size_t i = 0; i < S.size(); ++i) coeffs.push_back(rng.uniform(-1.0, 2.0));
    if (rng.coin(0.2)) coeffs[rng.uniform_index(coeffs.size())] = 0.0;

    VectorXcd u(N);
    if (integral && rng.coin(0.5)) {
        for (Eigen::Index i = 0; i < N; ++i) u(i) = rng.complex_gaussian();
    } else {
        for (Eigen::Index i = 0; i < N; ++i) u(i) = Complex(rng.uniform(0.05, 1.2), 0.0);
    }

    const JacobiTrudiResult r = jacobi_trudi_det(S, coeffs, u);
    const double err = std::abs(r.lhs - r.rhs);
    if (err > 1e-8 * std::max(1.0, std::abs(r.lhs))) {
        std::ostringstream os;
        os << "determinant expansion mismatch: lhs=" << r.lhs << " rhs=" << r.rhs;
        return os.str();
    }
    return std::nullopt;
}

inline std::optional<std::string> sharpness_instance(Rng& rng, const Rational& factor) {
    const std::size_t N = static_cast<std::size_t>(rng.uniform_int(2, 3));
    const TestSet kinds[] = {TestSet::RankOneOpen, TestSet::RankOneClosed, TestSet::FullClosedRealPowers,
                             TestSet::ComplexDiscConsecutive};
    PreserverSpec spec = random_consecutive_spec(rng, N, kinds[rng.uniform_index(4)]);
    inject_cprime_factor(spec, factor);

    HermitianMatrix a = rng.coin(0.5) ? corner_rank_one(rng, static_cast<Eigen::Index>(N), spec.rho_d())
                                      : sample_test_set(spec, static_cast<Eigen::Index>(N), rng);
    const SpectralFactorization f = eigen_hermitian(apply_f(spec, a));
    const double floor = -1e-9 * std::max(1.0, f.max_eigenvalue());
    if (f.min_eigenvalue() < floor) {
        std::ostringstream os;
        os << "f[A] not PSD: min eig " << f.min_eigenvalue() << " (testset " << to_string(spec.testSet)
           << ", N=" << N << ")";
        return os.str();
    }
    return std::nullopt;
}

inline std::optional<std::string> domination_instance(Rng& rng) {
    const ToleranceProfile tol;
    const int flavor = static_cast<int>(rng.uniform_index(4));
    HermitianMatrix a = HermitianMatrix::identity(1);
    switch (flavor) {
        case 0:
            a = random_positive_entry_psd(rng, rng.uniform_int(2, 6), 1.0);
            break;
        case 1: {
            const Eigen::Index n1 = rng.uniform_int(1, 3);
            const Eigen::Index n2 = rng.uniform_int(1, 3);
            HermitianMatrix b1 = random_positive_entry_psd(rng, n1, 1.0);
            HermitianMatrix b2 = random_positive_entry_psd(rng, n2, 0.5);
            MatrixXcd m = MatrixXcd::Zero(n1 + n2, n1 + n2);
            m.topLeftCorner(n1, n1) = b1.mat();
            m.bottomRightCorner(n2, n2) = b2.mat();
            a = permute_symmetric(HermitianMatrix(std::move(m), Field::Real), rng);
            break;
        }
        case 2:
            a = with_zero_row(random_positive_entry_psd(rng, rng.uniform_int(2, 5), 1.0),
                              rng.uniform_int(0, 2));
            break;
        default:
            a = random_psd(rng, rng.uniform_int(2, 5), Field::Complex, 1.0);
            break;
    }
    const double tolAbs = tol.rowEq * (1.0 + a.max_abs_entry());
    if (!detail::rows_distinct(a, tolAbs)) return std::nullopt;  // sampled degenerate, skip

    const DominationResult dom = dominating_vector(a, rng, tol);
    const double lambdaMax = eigen_hermitian(a).max_eigenvalue();
    if (dom.residualMinEig < -1e-9 * std::max(1.0, lambdaMax)) {
        return "residual A - uu* not PSD: min eig " + std::to_string(dom.residualMinEig);
    }
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        const bool zeroRow = a.row_is_zero(i);
        const bool zeroEntry = std::abs(dom.u(i)) == 0.0;
        if (zeroRow != zeroEntry) return "zero-pattern contract violated";
        for (Eigen::Index j = i + 1; j < a.dim(); ++j) {
            if (std::abs(dom.u(i) - dom.u(j)) <= 1e-10) return "entries of u not distinct";
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> strata_rank_instance(Rng& rng) {
    const ToleranceProfile tol;
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const std::size_t blocks = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(n)));
    const Partition pi = random_partition(rng, n, blocks);
    const Field field = rng.coin(0.5) ? Field::Real : Field::Complex;
    const HermitianMatrix core = random_pd_core_distinct_rows(rng, static_cast<Eigen::Index>(blocks), field, 1.0);
    const HermitianMatrix a = inflate(core, pi);

    PreserverSpec spec = random_consecutive_spec(rng, n, TestSet::ComplexDiscConsecutive, 0);
    spec.cPrime = rng.coin(0.5) ? Rational(rng.uniform_int(0, 2), 1) : Rational(-1, 100);
    const ThresholdValue c = threshold_C(spec);
    if (!(spec.cPrime > -1 / c.exact_value())) spec.cPrime = 0;

    const StratumDiagnostics d = rank_on_stratum(spec, a, tol);
    if (!d.agrees || d.predictedRank != static_cast<int>(blocks)) {
        std::ostringstream os;
        os << "rank mismatch: predicted " << d.predictedRank << " f " << d.rankF << " h " << d.rankH;
        if (d.rankG) os << " g " << *d.rankG;
        return os.str();
    }
    return std::nullopt;
}

inline std::optional<std::string> rayleigh_agreement_instance(Rng& rng) {
    const ToleranceProfile tol;
    const std::size_t N = static_cast<std::size_t>(rng.uniform_int(2, 4));
    PreserverSpec spec = random_consecutive_spec(rng, N, TestSet::RankOneOpen, 0);
    const RayleighData data = RayleighData::from_spec(spec);

    const VectorXd u = random_distinct_vector(rng, static_cast<Eigen::Index>(N), 0.15, 1.2);
    const double closed = c_R_rank_one(u, data);
    const double spectral = c_R(HermitianMatrix::rank_one(u), data, tol);
    if (std::abs(closed - spectral) > 1e-8 * std::max(1.0, std::abs(spectral))) {
        std::ostringstream os;
        os << "closed form " << closed << " vs spectral " << spectral;
        return os.str();
    }
    // any quotient is dominated by C_R
    VectorXcd v(static_cast<Eigen::Index>(N));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(rng.gaussian(), 0.0);
    const double q = rayleigh_quotient(HermitianMatrix::rank_one(u), v, data);
    if (q > spectral + 1e-9 * std::max(1.0, spectral)) {
        return "Rayleigh quotient exceeds C_R";
    }
    return std::nullopt;
}

inline std::optional<std::string> monotonicity_instance(Rng& rng) {
    const ToleranceProfile tol;
    const std::size_t N = static_cast<std::size_t>(rng.uniform_int(2, 4));
    std::vector<double> mE(N), nE(N);
    long base = rng.uniform_int(0, 1);
    for (std::size_t j = 0; j < N; ++j) {
        mE[j] = static_cast<double>(base + static_cast<long>(j));
        if (rng.coin(0.5)) base += rng.uniform_int(0, 1);
    }
    long bump = 0;
    for (std::size_t j = 0; j < N; ++j) {
        bump += rng.uniform_int(0, 1);
        nE[j] = mE[j] + static_cast<double>(bump);
    }
    if (bump == 0) nE[N - 1] += 1.0;
    ExponentTuple m(mE), n(nE);
    const MonotonicityReport r = monotonicity_certify(m, n, 1.0, rng, 6, tol, 4);
    if (r.strictViolation) return "strict monotonicity violated";
    if (!r.boundHolds) return "rho-corner bound violated";
    return std::nullopt;
}

} // namespace detail

inline FuzzSummary run_fuzz(const FuzzOptions& options) {
    if (options.budget < 1) throw std::invalid_argument("run_fuzz: budget must be at least 1");
    FuzzSummary summary;
    auto want = [&](const std::string& name) { return options.suite == "all" || options.suite == name; };

    if (want("jacobi-trudi")) {
        summary.suites.push_back(detail::run_suite("jacobi-trudi", options.seed, options.budget,
                                                   options.workers, detail::jacobi_trudi_instance));
    }
    if (want("sharpness")) {
        const Rational factor = options.sharpnessFactor;
        summary.suites.push_back(detail::run_suite(
            "sharpness", options.seed, options.budget, options.workers,
            [factor](Rng& rng) { return detail::sharpness_instance(rng, factor); }));
    }
    if (want("domination")) {
        summary.suites.push_back(detail::run_suite("domination", options.seed, options.budget,
                                                   options.workers, detail::domination_instance));
    }
    if (want("strata-rank")) {
        summary.suites.push_back(detail::run_suite("strata-rank", options.seed, options.budget,
                                                   options.workers, detail::strata_rank_instance));
    }
    if (want("rayleigh-agreement")) {
        summary.suites.push_back(detail::run_suite("rayleigh-agreement", options.seed, options.budget,
                                                   options.workers, detail::rayleigh_agreement_instance));
    }
    if (want("monotonicity")) {
        summary.suites.push_back(detail::run_suite("monotonicity", options.seed, options.budget,
                                                   options.workers, detail::monotonicity_instance));
    }
    if (summary.suites.empty()) throw std::invalid_argument("run_fuzz: unknown suite '" + options.suite + "'");
    for (const SuiteResult& s : summary.suites) summary.allPassed = summary.allPassed && s.failed == 0;
    return summary;
}

} // namespace entrywise

#endif // ENTRYWISE_FUZZ_HPP
