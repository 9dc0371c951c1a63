#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "greenbound/analytic.hpp"
#include "greenbound/error.hpp"
#include "greenbound/linalg.hpp"
#include "greenbound/newton.hpp"
#include "test_support.hpp"

using namespace greenbound;
using greenbound::testing::rel_diff;

namespace {

NodeList spectrum_nodes(const ComplexMatrix& a) {
    const auto s = cluster_eigenvalues(eigenvalues(a), default_cluster_tol(a));
    NodeList nodes = s.eigenvalues;
    // Contiguous repeats after clustering.
    std::stable_sort(nodes.begin(), nodes.end(), [](Complex x, Complex y) {
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    });
    return nodes;
}

ComplexMatrix scaled_random(std::mt19937_64& gen, int n, double max_norm) {
    ComplexMatrix a = random_matrix(gen, n);
    return a * (max_norm * uniform(gen, 0.1, 1.0) / op_norm(a));
}

}  // namespace

TEST(BuildNewton, QuadraticCoefficients) {
    const auto p = build_newton(fn::polynomial({0.0, 0.0, 1.0}), NodeList{1.0, 2.0, 3.0});
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.coeffs()[0], Complex(1.0, 0.0));
    EXPECT_EQ(p.coeffs()[1], Complex(3.0, 0.0));
    EXPECT_EQ(p.coeffs()[2], Complex(1.0, 0.0));
}

TEST(EvalScalar, Examples) {
    const auto sq = build_newton(fn::polynomial({0.0, 0.0, 1.0}), NodeList{1.0, 2.0, 3.0});
    EXPECT_NEAR(std::abs(eval_scalar(sq, 5.0) - 25.0), 0.0, 1e-13);
    const auto c = build_newton(fn::constant(Complex{2.0, -1.0}), NodeList{0.0, 1.0, Complex{0.0, 1.0}});
    EXPECT_NEAR(std::abs(eval_scalar(c, Complex{7.0, 3.0}) - Complex{2.0, -1.0}), 0.0, 1e-14);
    // exp on the confluent pair (0, 0): p(z) = 1 + z, p(1) = 2.
    const auto e = build_newton(fn::exp_t(1.0), NodeList{0.0, 0.0});
    EXPECT_NEAR(std::abs(eval_scalar(e, 1.0) - 2.0), 0.0, 1e-15);
}

TEST(EvalMatrix, ConstantAndNilpotent) {
    std::mt19937_64 gen(1);
    const ComplexMatrix a = random_matrix(gen, 3);
    const auto c = build_newton(fn::constant(3.0), NodeList{0.5, 1.0, -2.0});
    EXPECT_LT(op_norm(eval_matrix(c, a) - 3.0 * identity(3)), 1e-13);

    ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
    nil(0, 1) = 1.0;
    const auto e = build_newton(fn::exp_t(2.0), NodeList{0.0, 0.0});
    ComplexMatrix expected = identity(2);
    expected(0, 1) = 2.0;
    EXPECT_LT(op_norm(eval_matrix(e, nil) - expected), 1e-15);
}

TEST(EvalMatrix, DiagonalMatchesExpm) {
    ComplexMatrix a = ComplexMatrix::Zero(3, 3);
    a(0, 0) = -1.0;
    a(1, 1) = 0.5;
    a(2, 2) = Complex{0.2, 1.0};
    const auto p = build_newton(fn::exp_t(1.5), NodeList{-1.0, 0.5, Complex{0.2, 1.0}});
    EXPECT_LT(rel_diff(eval_matrix(p, a), expm(a, 1.5)), 1e-13);
}

TEST(EvalMatrix, RejectsInvalidMatrix) {
    const auto p = build_newton(fn::exp_t(1.0), NodeList{0.0});
    EXPECT_THROW((void)eval_matrix(p, ComplexMatrix(2, 3)), InvalidInput);
}

TEST(MatrixFunction, RejectsWrongNodeCount) {
    EXPECT_THROW((void)matrix_function(fn::exp_t(1.0), identity(3), NodeList{1.0, 1.0}), InvalidInput);
}

TEST(MatrixFunction, AgreesWithExpm) {
    std::mt19937_64 gen(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 4 + 1;
        const ComplexMatrix a = scaled_random(gen, n, 3.0);
        const double t = uniform(gen, -3.0, 3.0);
        const ComplexMatrix viaNewton = matrix_function(fn::exp_t(t), a, spectrum_nodes(a));
        EXPECT_LT(rel_diff(viaNewton, expm(a, t)), 1e-8) << "trial " << trial;
    }
}

TEST(MatrixFunction, DefectiveMatrix) {
    // Jordan block J_3(-0.5): e^{Jt} has entries e^{-t/2} t^j / j!.
    ComplexMatrix j = -0.5 * identity(3);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    const double t = 1.3;
    const ComplexMatrix f = matrix_function(fn::exp_t(t), j, NodeList{-0.5, -0.5, -0.5});
    EXPECT_LT(rel_diff(f, expm(j, t)), 1e-14);
    EXPECT_NEAR(std::abs(f(0, 2) - std::exp(-0.5 * t) * t * t / 2.0), 0.0, 1e-15);
}

TEST(HermiteCheck, DetectsMismatch) {
    const NodeList nodes{0.0, 0.0, 1.0};
    const auto p = build_newton(fn::exp_t(1.0), nodes);
    EXPECT_TRUE(hermite_check(p, fn::exp_t(1.0), 1e-12));
    EXPECT_FALSE(hermite_check(p, fn::exp_t(1.1), 1e-12));
    // A polynomial interpolant that matches values but not the derivative at 0.
    const NewtonPolynomial wrong(nodes, {1.0, 0.0, std::numbers::e - 1.0});
    EXPECT_FALSE(hermite_check(wrong, fn::exp_t(1.0), 1e-12));
}

TEST(NewtonProperties, HermiteConditionsHold) {
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 40; ++trial) {
        NodeList nodes;
        const int runs = 1 + trial % 4;
        for (int r = 0; r < runs; ++r) {
            const Complex z{uniform(gen, -2.0, -0.2), uniform(gen, -1.0, 1.0)};
            for (int rep = 0; rep <= (trial + r) % 3; ++rep) {
                nodes.push_back(z);
            }
        }
        const AnalyticFn f = fn::exp_t(uniform(gen, 0.1, 2.0));
        EXPECT_TRUE(hermite_check(build_newton(f, nodes), f, 1e-8));
    }
}

TEST(NewtonProperties, MultiplicativeHomomorphism) {
    std::mt19937_64 gen(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 4;
        const ComplexMatrix a = scaled_random(gen, n, 3.0);
        const NodeList nodes = spectrum_nodes(a);
        const double s = uniform(gen, -1.5, 1.5);
        const double t = uniform(gen, -1.5, 1.5);
        const ComplexMatrix lhs = matrix_function(fn::exp_t(s + t), a, nodes);
        const ComplexMatrix rhs = matrix_function(fn::exp_t(s), a, nodes) * matrix_function(fn::exp_t(t), a, nodes);
        EXPECT_LT(rel_diff(lhs, rhs), 1e-7);
    }
}

TEST(NewtonProperties, NodeOrderIndependence) {
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 30; ++trial) {
        NodeList nodes = greenbound::testing::random_points(gen, 2 + trial % 5, Complex{-1.0, 0.0}, 1.5);
        const AnalyticFn f = fn::exp_t(1.2);
        const auto p = build_newton(f, nodes);
        std::reverse(nodes.begin(), nodes.end());
        const auto q = build_newton(f, nodes);
        for (int probe = 0; probe < 5; ++probe) {
            const Complex z{uniform(gen, -3.0, 1.0), uniform(gen, -2.0, 2.0)};
            EXPECT_LT(std::abs(p(z) - q(z)), 1e-8 * (1.0 + std::abs(p(z))));
        }
    }
}

// An interpolant on N nodes has degree < N: the N-th divided difference of p vanishes.
TEST(NewtonProperties, DegreeBound) {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const NodeList nodes = greenbound::testing::random_points(gen, 2 + trial % 4, 0.0, 1.0);
        const auto p = build_newton(fn::exp_t(0.7), nodes);
        Jet z = Jet::variable(Complex{uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)},
                              static_cast<int>(nodes.size()));
        const Jet pj = p(z);
        EXPECT_LT(std::abs(pj.coeff(static_cast<int>(nodes.size()))), 1e-12);
    }
}
