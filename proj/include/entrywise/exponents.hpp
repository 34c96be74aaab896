#ifndef ENTRYWISE_EXPONENTS_HPP
#define ENTRYWISE_EXPONENTS_HPP

#include "entrywise/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrywise {

/// Strictly increasing tuple of exponents. Entries are stored as doubles;
/// a tuple whose entries are all non-negative integers is flagged integral,
/// which unlocks the exact (big-rational) evaluation paths.
class ExponentTuple {
public:
    ExponentTuple() = default;

    explicit ExponentTuple(std::vector<double> entries) : entries_(std::move(entries)) {
        validate();
        integral_ = true;
        for (double e : entries_) {
            if (!(e >= 0.0) || std::rint(e) != e) {
                integral_ = false;
                break;
            }
        }
    }

    ExponentTuple(std::initializer_list<double> entries) : ExponentTuple(std::vector<double>(entries)) {}

    static ExponentTuple delta(std::size_t n) {
        std::vector<double> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<double>(i);
        return ExponentTuple(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t j) const { return entries_[j]; }
    const std::vector<double>& values() const { return entries_; }

    bool integral() const { return integral_; }

    long long int_at(std::size_t j) const {
        if (!integral_) throw std::domain_error("ExponentTuple: integral access on a real tuple");
        return static_cast<long long>(std::llrint(entries_[j]));
    }

    /// |n| = sum of entries.
    double sum() const {
        double s = 0;
        for (double e : entries_) s += e;
        return s;
    }

    /// The tuple with entry j removed and M appended at the end.
    /// Requires M greater than the last entry so the result stays increasing.
    ExponentTuple drop_and_append(std::size_t j, double M) const {
        if (j >= entries_.size()) throw std::out_of_range("ExponentTuple: drop index");
        if (!(M > entries_.back())) throw std::invalid_argument("ExponentTuple: appended exponent must exceed the last entry");
        std::vector<double> e;
        e.reserve(entries_.size());
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (k != j) e.push_back(entries_[k]);
        }
        e.push_back(M);
        return ExponentTuple(std::move(e));
    }

    /// True when m_j <= n_j for all j (same length).
    bool dominated_by(const ExponentTuple& n) const {
        if (size() != n.size()) return false;
        for (std::size_t j = 0; j < size(); ++j) {
            if (entries_[j] > n.entries_[j]) return false;
        }
        return true;
    }

    bool operator==(const ExponentTuple& o) const { return entries_ == o.entries_; }

    /// n_j = n_0 + j for all j.
    bool consecutive() const {
        if (!integral_) return false;
        for (std::size_t j = 1; j < entries_.size(); ++j) {
            if (int_at(j) != int_at(0) + static_cast<long long>(j)) return false;
        }
        return true;
    }

    /// Partition shape lambda with lambda_i = n_{N-i} - (N-i); weakly decreasing.
    std::vector<long long> shape_lambda() const {
        if (!integral_) throw std::domain_error("ExponentTuple: tableau shape requires integer exponents");
        const std::size_t n = entries_.size();
        std::vector<long long> lambda(n);
        for (std::size_t i = 0; i < n; ++i) {
            lambda[i] = int_at(n - 1 - i) - static_cast<long long>(n - 1 - i);
        }
        return lambda;
    }

private:
    void validate() const {
        if (entries_.empty()) throw std::invalid_argument("ExponentTuple: empty tuple");
        for (std::size_t j = 1; j < entries_.size(); ++j) {
            if (!(entries_[j - 1] < entries_[j])) {
                throw std::invalid_argument("ExponentTuple: entries must be strictly increasing");
            }
        }
        for (double e : entries_) {
            if (!std::isfinite(e)) throw std::invalid_argument("ExponentTuple: non-finite entry");
        }
    }

    std::vector<double> entries_;
    bool integral_ = false;
};

/// Vandermonde product over the tuple entries, prod_{k<l} (m_l - m_k).
template <typename T>
T vandermonde_product(std::span<const T> m) {
    T v = T(1);
    for (std::size_t k = 0; k + 1 < m.size(); ++k) {
        for (std::size_t l = k + 1; l < m.size(); ++l) {
            v *= m[l] - m[k];
        }
    }
    return v;
}

inline double vandermonde(const ExponentTuple& m) {
    return vandermonde_product(std::span<const double>(m.values()));
}

/// Exact Vandermonde of an integral tuple.
inline Rational vandermonde_exact(const ExponentTuple& m) {
    if (!m.integral()) throw std::domain_error("vandermonde_exact: tuple is not integral");
    std::vector<Rational> e(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) e[j] = m.int_at(j);
    return vandermonde_product(std::span<const Rational>(e));
}

/// V(n_j)/V(n) for consecutive integer exponents n_j = n0 + j, as the
/// hook-content binomial product. Exact companion to the Vandermonde ratio.
inline BigInt hook_content_binomial(long long n0, long long j, long long M, long long N) {
    if (N < 1 || j < 0 || j > N - 1) throw std::invalid_argument("hook_content_binomial: index out of range");
    if (n0 < 0) throw std::invalid_argument("hook_content_binomial: n0 must be non-negative");
    if (!(M > n0 + N - 1)) throw std::invalid_argument("hook_content_binomial: M must exceed n0 + N - 1");
    const long long shifted = M - n0;
    return binomial(shifted, j) * binomial(shifted - j - 1, N - j - 1);
}

} // namespace entrywise

#endif // ENTRYWISE_EXPONENTS_HPP
