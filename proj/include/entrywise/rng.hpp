#ifndef ENTRYWISE_RNG_HPP
#define ENTRYWISE_RNG_HPP

#include "entrywise/rational.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace entrywise {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

/// Deterministic splittable RNG. All floating draws are derived from the raw
/// 64-bit stream directly, so sequences do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x5851f42d4c957f2dULL) {
        // warm up so nearby seeds decorrelate
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    /// Independent child stream; distinct tags give distinct streams.
    Rng split(std::uint64_t tag) const {
        std::uint64_t s = state_;
        std::uint64_t mixed = detail::splitmix64(s) ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
        return Rng(mixed);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t uniform_index(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin(double p = 0.5) { return uniform01() < p; }

    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::complex<double> complex_gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        const double r = std::sqrt(-std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Small random rational with numerator in [lo, hi] and denominator in [1, maxDen].
    Rational rational(long lo, long hi, long maxDen = 8) {
        long num = uniform_int(lo, hi);
        long den = uniform_int(1, maxDen);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace entrywise

#endif // ENTRYWISE_RNG_HPP
