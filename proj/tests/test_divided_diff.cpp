#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "greenbound/analytic.hpp"
#include "greenbound/divided_diff.hpp"
#include "greenbound/ensemble.hpp"
#include "greenbound/error.hpp"
#include "test_support.hpp"

using namespace greenbound;
using Complex = std::complex<double>;

namespace {

const AnalyticFn kSquare = fn::polynomial({0.0, 0.0, 1.0});
const double kLn2 = std::numbers::ln2;

double cabs(Complex z) { return std::abs(z); }

}  // namespace

TEST(DividedDifferenceTable, QuadraticOnThreePoints) {
    const auto table = divided_difference_table(kSquare, NodeList{1.0, 2.0, 3.0});
    ASSERT_EQ(table.size(), 3u);
    EXPECT_NEAR(cabs(table[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(cabs(table[1] - 3.0), 0.0, 1e-15);
    EXPECT_NEAR(cabs(table[2] - 1.0), 0.0, 1e-15);
}

TEST(DividedDifferenceTable, ConfluentPairIsDerivative) {
    const auto table = divided_difference_table(fn::exp_t(1.0), NodeList{1.0, 1.0});
    EXPECT_NEAR(cabs(table[1] - std::numbers::e), 0.0, 1e-15);
}

TEST(DividedDifferenceTable, TwoPointQuotient) {
    const auto table = divided_difference_table(fn::exp_t(1.0), NodeList{0.0, kLn2});
    EXPECT_NEAR(cabs(table[1] - 1.0 / kLn2), 0.0, 1e-14);
}

TEST(DividedDifferenceTable, MixedConfluenceMatchesHermiteData) {
    // f = exp, nodes (0,0,0,1): f[0,0,0] = 1/2, f[0,0,0,1] = (f[0,0,1] - f[0,0,0]) / 1,
    // f[0,0,1] = (f[0,1] - f[0,0]) / 1 = (e - 1) - 1.
    const auto table = divided_difference_table(fn::exp_t(1.0), NodeList{0.0, 0.0, 0.0, 1.0});
    const double e = std::numbers::e;
    EXPECT_NEAR(cabs(table[2] - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(cabs(table[3] - ((e - 2.0) - 0.5)), 0.0, 1e-15);
}

TEST(DividedDifferenceTable, RejectsNonContiguousRepeats) {
    EXPECT_THROW((void)divided_difference_table(kSquare, NodeList{1.0, 2.0, 1.0}), InvalidInput);
    EXPECT_THROW((void)divided_difference_table(kSquare, NodeList{}), InvalidInput);
}

TEST(DividedDifferenceTable, PoleAtNodeIsEvaluationError) {
    const AnalyticFn f = fn::tilde_exp_plus(1.0, {Complex{2.0, 0.0}});
    EXPECT_THROW((void)divided_difference_table(f, NodeList{-1.0, 2.0}), EvaluationError);
}

TEST(ContourOracle, Examples) {
    EXPECT_NEAR(cabs(dd_contour_oracle(kSquare, NodeList{1.0, 2.0, 3.0}, 1.0, 256) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(cabs(dd_contour_oracle(fn::exp_t(1.0), NodeList{1.0, 1.0}, 1.0, 256) - std::numbers::e), 0.0, 1e-10);
    const auto table = divided_difference_table(fn::exp_t(1.0), NodeList{0.0, kLn2});
    EXPECT_NEAR(cabs(dd_contour_oracle(fn::exp_t(1.0), NodeList{0.0, kLn2}, 1.0, 256) - table[1]), 0.0, 1e-10);
    EXPECT_NEAR(cabs(table[1] - 1.0 / kLn2), 0.0, 1e-10);
}

TEST(ContourOracle, Errors) {
    EXPECT_THROW((void)dd_contour_oracle(kSquare, NodeList{1.0, 2.0}, 0.0, 64), ContourError);
    // Pole at 3 lies inside the circle around (0, 1) of radius 0.5 + 3.
    const AnalyticFn f = fn::reciprocal_product({Complex{3.0, 0.0}});
    EXPECT_THROW((void)dd_contour_oracle(f, NodeList{0.0, 1.0}, 3.0, 64), ContourError);
    // Pole exactly on the circle.
    EXPECT_THROW((void)dd_contour_oracle(f, NodeList{0.0, 1.0}, 2.0, 64), ContourError);
    EXPECT_NO_THROW((void)dd_contour_oracle(f, NodeList{0.0, 1.0}, 1.0, 64));
}

TEST(DistinctFormula, Examples) {
    EXPECT_NEAR(cabs(dd_distinct_formula(kSquare, NodeList{1.0, 2.0, 3.0}) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(cabs(dd_distinct_formula(fn::exp_t(1.0), NodeList{0.0, kLn2}) - 1.0 / kLn2), 0.0, 1e-14);
    // e^{-1}/2 - e^{-2} + e^{-3}/2
    EXPECT_NEAR(cabs(dd_distinct_formula(fn::exp_t(1.0), NodeList{-1.0, -2.0, -3.0}) - 0.0734979715330404404), 0.0,
                1e-15);
}

TEST(DistinctFormula, RepeatedNodesAreRejected) {
    EXPECT_THROW((void)dd_distinct_formula(kSquare, NodeList{1.0, 1.0}), DistinctnessViolation);
    EXPECT_THROW((void)dd_distinct_formula(kSquare, NodeList{1.0, 2.0, 1.0 + 1e-12}), DistinctnessViolation);
}

TEST(GelfondBound, Examples) {
    const NodeList pair{-1.0, -1.0};
    EXPECT_NEAR(gelfond_bound(fn::exp_t(1.0), pair), std::exp(-1.0), 1e-16);
    EXPECT_NEAR(cabs(divided_difference_table(fn::exp_t(1.0), pair)[1]), std::exp(-1.0), 1e-16);

    EXPECT_NEAR(gelfond_bound(kSquare, NodeList{1.0, 2.0, 3.0}), 1.0, 1e-15);

    const NodeList three{-1.0, -2.0, -3.0};
    const double bound = gelfond_bound(fn::exp_t(1.0), three);
    EXPECT_NEAR(bound, 0.5 * std::exp(-1.0), 1e-16);
    EXPECT_GE(bound, cabs(dd_distinct_formula(fn::exp_t(1.0), three)));
}

TEST(ConvexHull, SquareWithInteriorPoint) {
    const std::vector<Complex> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0.0}};
    const auto hull = convex_hull(pts);
    EXPECT_EQ(hull.size(), 4u);
    EXPECT_EQ(convex_hull(std::vector<Complex>{{1, 1}, {1, 1}}).size(), 1u);
    EXPECT_EQ(convex_hull(std::vector<Complex>{{0, 0}, {1, 1}, {2, 2}}).size(), 2u);
}

TEST(DividedDifferenceProperties, PermutationSymmetry) {
    std::mt19937_64 gen(23);
    const AnalyticFn f = fn::exp_t(0.9);
    for (int trial = 0; trial < 50; ++trial) {
        NodeList nodes = greenbound::testing::random_points(gen, 2 + trial % 5, 0.0, 2.0);
        const Complex ref = dd_distinct_formula(f, nodes);
        EXPECT_LT(cabs(divided_difference_table(f, nodes).back() - ref), 1e-10 * (1.0 + cabs(ref)));
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(nodes.begin(), nodes.end(), gen);
            EXPECT_LT(cabs(dd_distinct_formula(f, nodes) - ref), 1e-10 * (1.0 + cabs(ref)));
            EXPECT_LT(cabs(divided_difference_table(f, nodes).back() - ref), 1e-10 * (1.0 + cabs(ref)));
        }
    }
}

TEST(DividedDifferenceProperties, ContinuityInConfluence) {
    const AnalyticFn f = fn::exp_t(1.0);
    for (const Complex mu : {Complex{0.0, 0.0}, Complex{-1.5, 0.5}, Complex{2.0, -1.0}}) {
        const Complex confluent = divided_difference_table(f, NodeList{mu, mu}).back();
        const Complex nearby = divided_difference_table(f, NodeList{mu, mu + 1e-6}).back();
        EXPECT_LT(cabs(confluent - nearby), 1e-4);
    }
}

// dd of exp_plus over (mu..., nu...) equals dd of exp_plus/prod(z - mu) over nu alone.
TEST(DividedDifferenceProperties, VanishingOnRightHalfPlaneReducesToLeftNodes) {
    const double t = 0.7;
    const NodeList mu{1.0, 2.0};
    const NodeList nu{-1.0, -3.0};
    NodeList all = mu;
    all.insert(all.end(), nu.begin(), nu.end());
    const auto full = divided_difference_table(fn::exp_plus(t), all);
    const auto reduced = divided_difference_table(fn::tilde_exp_plus(t, mu), nu);
    EXPECT_EQ(full[0], Complex(0.0, 0.0));
    EXPECT_EQ(full[1], Complex(0.0, 0.0));
    // Frozen from a 30-digit evaluation of the distinct-point sum.
    EXPECT_NEAR(cabs(full[2] - 0.0827642172985682524508), 0.0, 1e-15);
    EXPECT_NEAR(cabs(full[3] - 0.0383206979429595784699), 0.0, 1e-15);
    EXPECT_NEAR(cabs(full[2] - reduced[0]), 0.0, 1e-15);
    EXPECT_NEAR(cabs(full[3] - reduced[1]), 0.0, 1e-15);
}
