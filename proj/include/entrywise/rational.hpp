#ifndef ENTRYWISE_RATIONAL_HPP
#define ENTRYWISE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entrywise {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// q^e for integer e (e < 0 requires q != 0).
inline Rational pow_rational(const Rational& q, long long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return 1 / pow_rational(q, -e);
    }
    Rational base = q;
    Rational acc = 1;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

/// Binomial coefficient over arbitrary-precision integers; zero outside range.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt num = 1;
    BigInt den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

/// Parses "a/b", integers, and plain decimal/scientific literals exactly.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("parse_rational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) fail();
        return Rational(num, den);
    }

    std::string_view s = text;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long long exp10 = 0;
    std::size_t i = 0;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) digits.push_back(s[i]);
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
            digits.push_back(s[i]);
            --exp10;
        }
    }
    if (digits.empty()) fail();
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        long long e = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), e);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail();
        exp10 += e;
        i = s.size();
    }
    if (i != s.size()) fail();

    Rational value{BigInt(digits)};
    value *= pow_rational(Rational(10), exp10);
    return negative ? Rational(-value) : value;
}

/// Exact conversion of a double through its shortest round-trip decimal form,
/// so 0.1 becomes 1/10 rather than the underlying binary fraction.
inline Rational rational_from_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) throw std::invalid_argument("rational_from_double: non-finite value");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

inline double to_double(const Rational& q) { return static_cast<double>(q); }

inline std::string to_fraction_string(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Decimal rendering: exact when the expansion terminates within maxDigits,
/// otherwise rounded to maxDigits fractional digits.
inline std::string to_decimal_string(const Rational& q, unsigned maxDigits = 17) {
    BigInt num = numerator(q);
    const BigInt den = denominator(q);
    std::string out;
    if (num < 0) {
        out.push_back('-');
        num = -num;
    }
    BigInt intPart = num / den;
    BigInt rem = num % den;
    out += intPart.str();
    if (rem == 0) return out;
    std::string frac;
    for (unsigned d = 0; d < maxDigits && rem != 0; ++d) {
        rem *= 10;
        frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
        rem %= den;
    }
    if (rem != 0) {
        // round half up on the truncated tail
        rem *= 2;
        if (rem >= den) {
            int i = static_cast<int>(frac.size()) - 1;
            for (; i >= 0; --i) {
                if (frac[i] != '9') {
                    ++frac[i];
                    break;
                }
                frac[i] = '0';
            }
            if (i < 0) out = (out[0] == '-' ? "-" : "") + BigInt(intPart + 1).str();
        }
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    return out;
}

} // namespace entrywise

#endif // ENTRYWISE_RATIONAL_HPP
