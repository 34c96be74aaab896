#include "entrywise/exponents.hpp"
#include "entrywise/rng.hpp"
#include "entrywise/schur.hpp"
#include "entrywise/tableaux.hpp"

#include <gtest/gtest.h>

#include <span>
#include <vector>

using namespace entrywise;

namespace {

std::span<const Rational> rs(const std::vector<Rational>& v) { return {v.data(), v.size()}; }
std::span<const double> ds(const std::vector<double>& v) { return {v.data(), v.size()}; }

} // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
    EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(to_fraction_string(Rational(-1, 5)), "-1/5");
    EXPECT_EQ(to_decimal_string(Rational(5)), "5");
    EXPECT_EQ(to_decimal_string(Rational(-1, 4)), "-0.25");
    EXPECT_EQ(rational_from_double(0.1), Rational(1, 10));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(ExponentTuple, Validation) {
    EXPECT_THROW(ExponentTuple({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(ExponentTuple({2.0, 1.0}), std::invalid_argument);
    ExponentTuple n{0.0, 1.0, 3.0};
    EXPECT_TRUE(n.integral());
    EXPECT_TRUE(n.consecutive() == false);
    EXPECT_FALSE(ExponentTuple({0.5, 1.0}).integral());
    EXPECT_EQ(n.drop_and_append(1, 5.0).values(), (std::vector<double>{0.0, 3.0, 5.0}));
    EXPECT_THROW(n.drop_and_append(0, 2.0), std::invalid_argument);
}

TEST(Vandermonde, KnownValues) {
    EXPECT_EQ(vandermonde_exact(ExponentTuple{0, 1, 2}), Rational(2));
    EXPECT_EQ(vandermonde_exact(ExponentTuple{0, 1}), Rational(1));
    // direct product: (2-0)(3-0)(3-2) = 6
    EXPECT_EQ(vandermonde_exact(ExponentTuple{0, 2, 3}), Rational(6));
    EXPECT_DOUBLE_EQ(vandermonde(ExponentTuple{0.0, 0.5, 2.0}), 0.5 * 2.0 * 1.5);
    // single entry: empty product
    EXPECT_EQ(vandermonde_exact(ExponentTuple{4}), Rational(1));
}

TEST(GenVandermonde, KnownValues) {
    std::vector<double> u{1.0, 2.0};
    EXPECT_DOUBLE_EQ(gen_vandermonde_det(ds(u), ExponentTuple{0, 1}), 1.0);
    std::vector<double> rep{1.3, 1.3};
    EXPECT_DOUBLE_EQ(gen_vandermonde_det(ds(rep), ExponentTuple{0, 1}), 0.0);
    // Vandermonde specialization at (1, q, q^2)
    const double q = 1.7;
    std::vector<double> geo{1.0, q, q * q};
    const double expected = (q - 1.0) * (q * q - 1.0) * (q * q - q);
    EXPECT_NEAR(gen_vandermonde_det(ds(geo), ExponentTuple{0, 1, 2}), expected, 1e-12);
    EXPECT_THROW(gen_vandermonde_det(ds(std::vector<double>{-1.0, 2.0}), ExponentTuple{0.0, 0.5}),
                 std::domain_error);
    // 0^0 = 1 lets a zero coordinate through when n_0 = 0
    std::vector<double> withZero{0.0, 2.0};
    EXPECT_DOUBLE_EQ(gen_vandermonde_det(ds(withZero), ExponentTuple{0, 2}), 4.0);
}

TEST(Tableaux, CountsAndValues) {
    // shape from n = (0,1,3): single cell, s = u1 + u2 + u3
    std::vector<Rational> u{1, 2, 3};
    const auto r = schur_tableaux(rs(u), ExponentTuple{0, 1, 3});
    EXPECT_EQ(r.value, Rational(6));
    EXPECT_EQ(r.count, BigInt(3));
    // count equals V(n)/V(delta) = 6/2
    EXPECT_EQ(Rational(r.count), vandermonde_exact(ExponentTuple{0, 1, 3}) / vandermonde_exact(ExponentTuple::delta(3)));

    // trivial shape
    const auto triv = schur_tableaux(rs(u), ExponentTuple::delta(3));
    EXPECT_EQ(triv.value, Rational(1));
    EXPECT_EQ(triv.count, BigInt(1));

    // all-ones point: value = count
    std::vector<Rational> ones{1, 1, 1};
    const auto atOnes = schur_tableaux(rs(ones), ExponentTuple{0, 2, 4});
    EXPECT_EQ(atOnes.value, Rational(atOnes.count));

    EXPECT_THROW(schur_tableaux(rs(u), ExponentTuple{0, 1, 8}, 2), EnumerationBudgetExceeded);
}

TEST(Tableaux, CountMatchesVandermondeRatioOnSamples) {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t N = static_cast<std::size_t>(rng.uniform_int(1, 4));
        std::vector<double> exps;
        long v = rng.uniform_int(0, 1);
        for (std::size_t j = 0; j < N; ++j) {
            exps.push_back(static_cast<double>(v));
            v += rng.uniform_int(1, 3);
        }
        ExponentTuple n(exps);
        if (n.values().back() > 8.0) continue;
        const Rational expected = vandermonde_exact(n) / vandermonde_exact(ExponentTuple::delta(N));
        EXPECT_EQ(Rational(tableau_count(n)), expected);
    }
}

TEST(Bialternant, AgreesWithTableauxExactly) {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t N = static_cast<std::size_t>(rng.uniform_int(1, 4));
        std::vector<double> exps;
        long v = rng.uniform_int(0, 2);
        for (std::size_t j = 0; j < N; ++j) {
            exps.push_back(static_cast<double>(v));
            v += rng.uniform_int(1, 2);
        }
        ExponentTuple n(exps);
        std::vector<Rational> u(N);
        for (auto& x : u) x = rng.rational(-6, 8, 5);
        const Rational viaDet = schur_bialternant(rs(u), n);
        const Rational viaTab = schur_tableaux(rs(u), n).value;
        EXPECT_EQ(viaDet, viaTab);
    }
}

TEST(PrincipalSpecialization, ProductFormula) {
    // q=2, n=(0,1,3): (2-1)(8-1)(8-2) / ((2-1)(4-1)(4-2)) = 42/6 = 7; equals 1+2+4
    EXPECT_EQ(schur_principal_specialization(ExponentTuple{0, 1, 3}, Rational(2)), Rational(7));
    // trivial shape: 1 for every q
    EXPECT_EQ(schur_principal_specialization(ExponentTuple::delta(4), Rational(5, 3)), Rational(1));
    // q -> 1 limit is the tableau count
    EXPECT_EQ(schur_principal_specialization(ExponentTuple{0, 2, 5}, Rational(1)),
              vandermonde_exact(ExponentTuple{0, 2, 5}) / vandermonde_exact(ExponentTuple::delta(3)));
    EXPECT_THROW(schur_principal_specialization(ExponentTuple{0, 1, 3}, Rational(0)), std::domain_error);

    // exact agreement with the tableau sum at u = (1, q, ..., q^{N-1})
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t N = static_cast<std::size_t>(rng.uniform_int(2, 4));
        std::vector<double> exps;
        long v = rng.uniform_int(0, 1);
        for (std::size_t j = 0; j < N; ++j) {
            exps.push_back(static_cast<double>(v));
            v += rng.uniform_int(1, 2);
        }
        ExponentTuple n(exps);
        Rational q = rng.rational(-5, 5, 3);
        if (q == 0 || q == 1 || q == -1) q = Rational(2, 3);
        std::vector<Rational> u(N);
        for (std::size_t i = 0; i < N; ++i) u[i] = pow_rational(q, static_cast<long long>(i));
        EXPECT_EQ(schur_principal_specialization(n, q), schur_tableaux(rs(u), n).value);
    }
}

TEST(HookContent, MatchesVandermondeRatio) {
    EXPECT_EQ(hook_content_binomial(0, 1, 2, 2), BigInt(2));
    EXPECT_EQ(hook_content_binomial(0, 0, 2, 2), BigInt(1));
    EXPECT_EQ(hook_content_binomial(0, 1, 4, 3), BigInt(8));
    // cross-check against the exact Vandermonde ratio, including n0 > 0
    for (long long n0 : {0LL, 1LL, 2LL}) {
        for (long long N : {2LL, 3LL, 4LL}) {
            for (long long M = n0 + N; M <= n0 + N + 3; ++M) {
                std::vector<double> exps;
                for (long long j = 0; j < N; ++j) exps.push_back(static_cast<double>(n0 + j));
                const ExponentTuple n(exps);
                for (long long j = 0; j < N; ++j) {
                    const Rational ratio =
                        vandermonde_exact(n.drop_and_append(static_cast<std::size_t>(j), static_cast<double>(M))) /
                        vandermonde_exact(n);
                    EXPECT_EQ(Rational(hook_content_binomial(n0, j, M, N)), ratio)
                        << "n0=" << n0 << " N=" << N << " M=" << M << " j=" << j;
                }
            }
        }
    }
    EXPECT_THROW(hook_content_binomial(0, 2, 4, 2), std::invalid_argument);
    EXPECT_THROW(hook_content_binomial(0, 0, 1, 2), std::invalid_argument);
}

TEST(SchurRatio, KnownValues) {
    // m=(0,1), n=(0,2), u=(1,2): (4-1)/(2-1) = 3
    std::vector<double> u{1.0, 2.0};
    EXPECT_DOUBLE_EQ(schur_ratio_real(ds(u), ExponentTuple{0, 1}, ExponentTuple{0, 2}), 3.0);
    std::vector<Rational> ur{1, 2};
    EXPECT_EQ(schur_ratio_integral(rs(ur), ExponentTuple{0, 1}, ExponentTuple{0, 2}), Rational(3));

    // identical tuples: 1 everywhere
    EXPECT_EQ(schur_ratio_integral(rs(ur), ExponentTuple{0, 2}, ExponentTuple{0, 2}), Rational(1));

    // corner limit toward equal coordinates: ratio (x+y) -> 2 sqrt(rho)
    std::vector<Rational> corner{Rational(99, 100), Rational(995, 1000)};
    const Rational val = schur_ratio_integral(rs(corner), ExponentTuple{0, 1}, ExponentTuple{0, 2});
    EXPECT_EQ(val, corner[0] + corner[1]);

    EXPECT_THROW(schur_ratio_real(ds(u), ExponentTuple{0, 2}, ExponentTuple{0, 1}), std::invalid_argument);
}

TEST(SchurRatio, BoundaryReduction) {
    // with m_0 = n_0 = 0 and u_1 = 0, the ratio reduces to truncated tuples
    std::vector<double> u{0.0, 0.7, 1.3};
    const double full = schur_ratio_real(ds(u), ExponentTuple{0, 1, 4}, ExponentTuple{0, 2, 5});
    std::vector<double> truncated{0.7, 1.3};
    const double reduced = schur_ratio_real(ds(truncated), ExponentTuple{1, 4}, ExponentTuple{2, 5});
    EXPECT_DOUBLE_EQ(full, reduced);

    // exact in rational mode via the Schur-polynomial route
    std::vector<Rational> ur{0, Rational(7, 10), Rational(13, 10)};
    const Rational fullExact = schur_ratio_integral(rs(ur), ExponentTuple{0, 1, 4}, ExponentTuple{0, 2, 5});
    std::vector<Rational> urt{Rational(7, 10), Rational(13, 10)};
    // truncated tuples shifted by the zero count: (1,4)-1 = (0,3), (2,5)-1 = (1,4)
    const Rational reducedExact = schur_ratio_integral(rs(urt), ExponentTuple{0, 3}, ExponentTuple{1, 4});
    EXPECT_EQ(fullExact, reducedExact);

    // zero coordinate without m_0 = n_0 = 0 is rejected in the real flavor
    EXPECT_THROW(schur_ratio_real(ds(u), ExponentTuple{1, 2, 4}, ExponentTuple{1, 3, 5}), std::domain_error);
    // too many zeros for the denominator tuple
    std::vector<Rational> twoZeros{0, 0, Rational(1, 2)};
    EXPECT_THROW(schur_ratio_integral(rs(twoZeros), ExponentTuple{0, 2, 3}, ExponentTuple{0, 2, 4}),
                 std::domain_error);
}

TEST(SchurRatio, SymmetryUnderPermutation) {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> u{rng.rational(1, 9, 4), rng.rational(1, 9, 4), rng.rational(1, 9, 4)};
        const ExponentTuple m{0, 1, 3};
        const ExponentTuple n{0, 2, 4};
        const Rational base = schur_ratio_integral(rs(u), m, n);
        std::vector<Rational> perm{u[2], u[0], u[1]};
        EXPECT_EQ(schur_ratio_integral(rs(perm), m, n), base);
    }
}

TEST(Determinant, ExactAndFloat) {
    std::vector<std::vector<Rational>> a{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
    EXPECT_EQ(determinant(a), Rational(3));
    std::vector<std::vector<double>> b{{0.0, 1.0}, {1.0, 0.0}};
    EXPECT_DOUBLE_EQ(determinant(b), -1.0);
    std::vector<std::vector<Complex>> c{{Complex(0, 1), Complex(1, 0)}, {Complex(1, 0), Complex(0, -1)}};
    // det = (i)(-i) - 1 = 0
    EXPECT_NEAR(std::abs(determinant(c)), 0.0, 1e-15);
}
