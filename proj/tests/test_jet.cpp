#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "greenbound/analytic.hpp"
#include "greenbound/ensemble.hpp"
#include "greenbound/error.hpp"
#include "greenbound/jet.hpp"

using namespace greenbound;
using Complex = std::complex<double>;

TEST(Jet, ProductAndQuotientOfLinearJets) {
    const Complex c{0.5, -0.25};
    const Jet z = Jet::variable(c, 4);
    // (z - 1)(z - 1) = (c-1)^2 + 2(c-1) h + h^2
    const Jet sq = (z - 1.0) * (z - 1.0);
    EXPECT_NEAR(std::abs(sq.coeff(0) - (c - 1.0) * (c - 1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sq.coeff(1) - 2.0 * (c - 1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sq.coeff(2) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(sq.coeff(3), Complex(0.0, 0.0));

    // 1/(z - p) has coeff r = -(p - c)^{-(r+1)}, and q * (z - p) == 1.
    const Jet q = Jet::constant(c, 4, 1.0) / (z - 3.0);
    const Jet back = q * (z - 3.0);
    EXPECT_NEAR(std::abs(back.coeff(0) - 1.0), 0.0, 1e-15);
    for (int r = 1; r <= 4; ++r) {
        EXPECT_NEAR(std::abs(back.coeff(r)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(q.coeff(r) + std::pow(3.0 - c, -(r + 1))), 0.0, 1e-14);
    }
}

TEST(Jet, ExpOfScaledVariable) {
    const double t = 1.7;
    const Complex c{-0.3, 0.4};
    const Jet e = exp(Jet::variable(c, 6) * Complex{t, 0.0});
    double fact = 1.0;
    for (int r = 0; r <= 6; ++r) {
        if (r > 0) {
            fact *= r;
        }
        const Complex expected = std::exp(c * t) * std::pow(t, r) / fact;
        EXPECT_NEAR(std::abs(e.coeff(r) - expected), 0.0, 1e-14 * std::abs(expected) + 1e-300);
        EXPECT_NEAR(std::abs(e.derivative(r) - std::exp(c * t) * std::pow(t, r)), 0.0, 1e-12);
    }
}

TEST(Jet, DivisionByVanishingJetIsEvaluationError) {
    const Jet z = Jet::variable(2.0, 2);
    EXPECT_THROW((void)(Jet::constant(2.0, 2, 1.0) / (z - 2.0)), EvaluationError);
}

TEST(Jet, MismatchedJetsAreRejected) {
    EXPECT_THROW((void)(Jet::variable(0.0, 2) + Jet::variable(1.0, 2)), InvalidInput);
    EXPECT_THROW((void)(Jet::variable(0.0, 2) * Jet::variable(0.0, 3)), InvalidInput);
}

TEST(AnalyticFn, PoleRaisesEvaluationError) {
    const AnalyticFn f = fn::tilde_exp_plus(1.0, {Complex{2.0, 0.0}});
    EXPECT_THROW((void)f.jet(2.0, 1), EvaluationError);
    EXPECT_THROW((void)fn::left_half_indicator().jet(Complex{0.0, 1.0}, 0), EvaluationError);
}

TEST(AnalyticFn, PiecewiseExponentials) {
    const AnalyticFn plus = fn::exp_plus(2.0);
    const AnalyticFn minus = fn::exp_minus(2.0);
    EXPECT_NEAR(std::abs(plus.value(-1.0) - std::exp(-2.0)), 0.0, 1e-16);
    EXPECT_EQ(plus.value(1.0), Complex(0.0, 0.0));
    EXPECT_EQ(minus.value(-1.0), Complex(0.0, 0.0));
    EXPECT_NEAR(std::abs(minus.value(1.0) - std::exp(2.0)), 0.0, 1e-14);
    const Jet ind = fn::left_half_indicator().jet(Complex{-0.5, 3.0}, 3);
    EXPECT_EQ(ind.coeff(0), Complex(1.0, 0.0));
    EXPECT_EQ(ind.coeff(3), Complex(0.0, 0.0));
}

// Lower-order jets are exact prefixes of higher-order jets for every provided instance.
TEST(AnalyticFn, JetPrefixProperty) {
    std::mt19937_64 gen(17);
    const std::vector<Complex> mu{{1.0, 0.5}, {2.0, -0.3}, {2.0, -0.3}};
    const std::vector<AnalyticFn> fns{
        fn::exp_t(0.8),
        fn::polynomial({1.0, -2.0, 0.5, Complex{0.0, 1.0}}),
        fn::constant(Complex{2.0, -1.0}),
        fn::reciprocal_product(mu),
        fn::tilde_exp_plus(1.3, mu),
        fn::tilde_exp_minus(-0.7, mu),
        fn::exp_plus(0.4),
        fn::exp_minus(-0.4),
        fn::left_half_indicator(),
    };
    for (const auto& f : fns) {
        for (int trial = 0; trial < 20; ++trial) {
            const Complex c{uniform(gen, -3.0, -0.1), uniform(gen, -2.0, 2.0)};
            const Jet high = f.jet(c, 7);
            for (int q = 0; q < 7; ++q) {
                const Jet low = f.jet(c, q);
                for (int r = 0; r <= q; ++r) {
                    ASSERT_EQ(low.coeff(r), high.coeff(r)) << f.name() << " order " << q;
                }
            }
        }
    }
}
