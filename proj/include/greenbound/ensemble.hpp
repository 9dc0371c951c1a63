#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "greenbound/dichotomy.hpp"
#include "greenbound/linalg.hpp"

namespace greenbound {

/// splitmix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

/// Independent stream seed for item `index` of a seeded campaign. Derived from
/// (seed, index) alone, so results do not depend on evaluation order.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Uniform double in [lo, hi) from the top 53 bits of one draw. Bit-identical
/// across standard libraries, unlike std::uniform_real_distribution.
[[nodiscard]] double uniform(std::mt19937_64& gen, double lo, double hi);

/// n x n matrix with real and imaginary parts uniform in [-1, 1].
[[nodiscard]] ComplexMatrix random_matrix(std::mt19937_64& gen, int n);

/// A random matrix together with its dichotomy split.
struct DichotomyMatrix {
    ComplexMatrix a;
    DichotomyData d;
};

/// Draws random_matrix(gen, n) until every eigenvalue has |Re| >= margin.
/// Throws GenerationError after `max_rejections` rejected draws.
[[nodiscard]] DichotomyMatrix random_dichotomy_matrix(std::mt19937_64& gen, int n, double margin,
                                                      int max_rejections = 1000);

/// Smallest pairwise distance between eigenvalues; +inf for a single value.
[[nodiscard]] double min_separation(const std::vector<Complex>& values);

/// `steps` points evenly spaced on [lo, hi] (just lo when steps == 1).
[[nodiscard]] std::vector<double> linspace(double lo, double hi, int steps);

/// The standard verification grid: 30 points on [0.05, 10] and their negatives.
[[nodiscard]] std::vector<double> standard_time_grid();

}  // namespace greenbound
