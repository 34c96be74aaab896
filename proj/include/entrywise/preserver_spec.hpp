#ifndef ENTRYWISE_PRESERVER_SPEC_HPP
#define ENTRYWISE_PRESERVER_SPEC_HPP

#include "entrywise/exponents.hpp"
#include "entrywise/hermitian.hpp"
#include "entrywise/rational.hpp"
#include "entrywise/schur.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrywise {

/// Test sets over which the polynomial acts, in increasing order of demands
/// on the exponents: rank-one matrices with entries in the open or closed
/// box (arbitrary / non-negative real powers), full-rank matrices with
/// entries in [0, rho] (powers in Z_+ or beyond N-1), and matrices over the
/// closed complex disc (consecutive integer exponents).
enum class TestSet { RankOneOpen, RankOneClosed, FullClosedRealPowers, ComplexDiscConsecutive };

inline std::string to_string(TestSet t) {
    switch (t) {
        case TestSet::RankOneOpen: return "rank-one-open";
        case TestSet::RankOneClosed: return "rank-one-closed";
        case TestSet::FullClosedRealPowers: return "full-closed-real-powers";
        case TestSet::ComplexDiscConsecutive: return "complex-disc-consecutive";
    }
    throw std::logic_error("to_string(TestSet)");
}

inline TestSet test_set_from_string(const std::string& s) {
    if (s == "rank-one-open") return TestSet::RankOneOpen;
    if (s == "rank-one-closed") return TestSet::RankOneClosed;
    if (s == "full-closed-real-powers") return TestSet::FullClosedRealPowers;
    if (s == "complex-disc-consecutive") return TestSet::ComplexDiscConsecutive;
    throw std::invalid_argument("unknown test set '" + s + "'");
}

/// The polynomial f(z) = sum_j c_j z^{n_j} + c' z^M together with the data
/// it is tested against: the radius rho and the declared test set.
struct PreserverSpec {
    std::vector<Rational> coeffs;  // c_j, all positive
    ExponentTuple exponents;       // n_0 < ... < n_{N-1}
    double M = 0.0;
    Rational cPrime = 0;
    Rational rho = 1;
    TestSet testSet = TestSet::RankOneOpen;

    std::size_t terms() const { return coeffs.size(); }

    bool exact() const { return exponents.integral() && std::rint(M) == M && M >= 0.0; }

    long long M_int() const {
        if (!(std::rint(M) == M)) throw std::domain_error("PreserverSpec: M is not an integer");
        return static_cast<long long>(std::llrint(M));
    }

    double coeff(std::size_t j) const { return to_double(coeffs[j]); }
    double cprime() const { return to_double(cPrime); }
    double rho_d() const { return to_double(rho); }

    void validate() const {
        const std::size_t n = coeffs.size();
        if (n == 0) throw std::invalid_argument("PreserverSpec: no coefficients");
        if (exponents.size() != n) throw std::invalid_argument("PreserverSpec: |c| must equal |n|");
        for (const Rational& c : coeffs) {
            if (!(c > 0)) throw std::invalid_argument("PreserverSpec: coefficients must be positive");
        }
        if (!(rho > 0)) throw std::invalid_argument("PreserverSpec: rho must be positive");
        if (!(exponents[n - 1] < M)) throw std::invalid_argument("PreserverSpec: M must exceed the largest exponent");
        switch (testSet) {
            case TestSet::RankOneOpen:
                break;
            case TestSet::RankOneClosed:
                if (exponents[0] < 0.0 || M < 0.0) {
                    throw std::invalid_argument("PreserverSpec: closed rank-one test set needs non-negative powers");
                }
                break;
            case TestSet::FullClosedRealPowers: {
                const double threshold = static_cast<double>(n) - 1.0;
                auto admissible = [&](double e) {
                    return (e >= 0.0 && std::rint(e) == e) || e >= threshold;
                };
                for (double e : exponents.values()) {
                    if (!admissible(e)) {
                        throw std::invalid_argument(
                            "PreserverSpec: full test set needs powers in Z_+ or beyond N-1");
                    }
                }
                if (!admissible(M)) {
                    throw std::invalid_argument("PreserverSpec: full test set needs powers in Z_+ or beyond N-1");
                }
                break;
            }
            case TestSet::ComplexDiscConsecutive:
                if (!exponents.consecutive() || !(std::rint(M) == M) || M < 0.0) {
                    throw std::invalid_argument(
                        "PreserverSpec: complex disc test set needs consecutive integer exponents and integer M");
                }
                break;
        }
    }

    /// Truncation to the first m terms, same M, rho and test-set data.
    PreserverSpec prefix(std::size_t m) const {
        if (m == 0 || m > terms()) throw std::invalid_argument("PreserverSpec: invalid truncation");
        PreserverSpec out = *this;
        out.coeffs.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(m));
        out.exponents = ExponentTuple(
            std::vector<double>(exponents.values().begin(), exponents.values().begin() + static_cast<std::ptrdiff_t>(m)));
        return out;
    }
};

/// The sharp constant C = sum_j (V(n_j)/V(n))^2 rho^{M - n_j} / c_j with
/// n_j the tuple n with entry j replaced by M (appended at the end).
/// Exact over the rationals for integer exponent data; for consecutive
/// integers every Vandermonde ratio is cross-checked against the
/// hook-content binomial product.
struct ThresholdValue {
    double value = 0.0;
    std::optional<Rational> exact;

    Rational exact_value() const {
        if (!exact) throw std::domain_error("ThresholdValue: not computed exactly");
        return *exact;
    }
};

inline ThresholdValue threshold_C(const PreserverSpec& spec) {
    spec.validate();
    const std::size_t n = spec.terms();
    ThresholdValue out;
    if (spec.exact()) {
        const Rational vn = vandermonde_exact(spec.exponents);
        Rational sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const ExponentTuple nj = spec.exponents.drop_and_append(j, spec.M);
            const Rational ratio = vandermonde_exact(nj) / vn;
            if (spec.exponents.consecutive()) {
                const BigInt viaHook = hook_content_binomial(spec.exponents.int_at(0), static_cast<long long>(j),
                                                             spec.M_int(), static_cast<long long>(n));
                if (Rational(viaHook) != ratio) {
                    throw std::logic_error("threshold_C: hook-content cross-check failed");
                }
            }
            const long long gap = spec.M_int() - spec.exponents.int_at(j);
            sum += ratio * ratio * pow_rational(spec.rho, gap) / spec.coeffs[j];
        }
        out.exact = sum;
        out.value = to_double(sum);
        return out;
    }
    const double vn = vandermonde(spec.exponents);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double ratio = vandermonde(spec.exponents.drop_and_append(j, spec.M)) / vn;
        sum += ratio * ratio * std::pow(spec.rho_d(), spec.M - spec.exponents[j]) / spec.coeff(j);
    }
    out.value = sum;
    return out;
}

/// One monomial term of an entrywise polynomial.
struct PolyTerm {
    double coeff;
    double exponent;
};

inline Complex pow_entry(Complex z, double e) {
    if (std::rint(e) == e && e >= 0.0) {
        return int_pow(z, static_cast<long long>(std::llrint(e)));
    }
    if (z.imag() != 0.0) throw std::domain_error("entrywise power: complex entry with non-integer exponent");
    return Complex(real_pow(z.real(), e), 0.0);
}

/// f[A]: the polynomial applied to each entry. Hermitian output is
/// guaranteed by computing the upper triangle and mirroring.
inline HermitianMatrix apply_entrywise(const std::vector<PolyTerm>& terms, const HermitianMatrix& a) {
    const Eigen::Index n = a.dim();
    MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (const PolyTerm& t : terms) acc += t.coeff * pow_entry(a(i, j), t.exponent);
            out(i, j) = acc;
        }
    }
    return HermitianMatrix::from_upper(std::move(out), a.field());
}

/// A^{o alpha}, the entrywise power.
inline HermitianMatrix hadamard_power(const HermitianMatrix& a, double alpha) {
    return apply_entrywise({{1.0, alpha}}, a);
}

inline std::vector<PolyTerm> h_terms(const PreserverSpec& spec) {
    std::vector<PolyTerm> terms;
    terms.reserve(spec.terms());
    for (std::size_t j = 0; j < spec.terms(); ++j) terms.push_back({spec.coeff(j), spec.exponents[j]});
    return terms;
}

/// h[A] = sum_j c_j A^{o n_j}.
inline HermitianMatrix apply_h(const PreserverSpec& spec, const HermitianMatrix& a) {
    return apply_entrywise(h_terms(spec), a);
}

/// f[A] = h[A] + c' A^{o M}.
inline HermitianMatrix apply_f(const PreserverSpec& spec, const HermitianMatrix& a) {
    auto terms = h_terms(spec);
    terms.push_back({spec.cprime(), spec.M});
    return apply_entrywise(terms, a);
}

/// g[A] = h[A] - C^{-1} A^{o M} for the sharp constant C.
inline HermitianMatrix apply_g(const PreserverSpec& spec, const HermitianMatrix& a, double thresholdValue) {
    auto terms = h_terms(spec);
    terms.push_back({-1.0 / thresholdValue, spec.M});
    return apply_entrywise(terms, a);
}

/// Entry-range part of test-set membership; the PSD and rank-one checks
/// live next to the spectral primitives.
inline bool entries_in_test_set(const PreserverSpec& spec, const HermitianMatrix& a) {
    const double rho = spec.rho_d();
    switch (spec.testSet) {
        case TestSet::RankOneOpen:
            for (Eigen::Index i = 0; i < a.dim(); ++i)
                for (Eigen::Index j = 0; j < a.dim(); ++j) {
                    const Complex z = a(i, j);
                    if (z.imag() != 0.0 || !(z.real() > 0.0 && z.real() < rho)) return false;
                }
            return true;
        case TestSet::RankOneClosed:
        case TestSet::FullClosedRealPowers:
            for (Eigen::Index i = 0; i < a.dim(); ++i)
                for (Eigen::Index j = 0; j < a.dim(); ++j) {
                    const Complex z = a(i, j);
                    if (z.imag() != 0.0 || z.real() < 0.0 || z.real() > rho) return false;
                }
            return true;
        case TestSet::ComplexDiscConsecutive:
            return a.max_abs_entry() <= rho;
    }
    return false;
}

} // namespace entrywise

#endif // ENTRYWISE_PRESERVER_SPEC_HPP
