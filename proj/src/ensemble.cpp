#include "greenbound/ensemble.hpp"

#include <cmath>
#include <limits>

#include "greenbound/error.hpp"

namespace greenbound {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept { return mix64(mix64(seed) ^ index); }

double uniform(std::mt19937_64& gen, double lo, double hi) {
    const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

ComplexMatrix random_matrix(std::mt19937_64& gen, int n) {
    if (n < 1) {
        throw InvalidInput("random_matrix: dimension must be positive");
    }
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = uniform(gen, -1.0, 1.0);
            const double im = uniform(gen, -1.0, 1.0);
            a(i, j) = Complex{re, im};
        }
    }
    return a;
}

DichotomyMatrix random_dichotomy_matrix(std::mt19937_64& gen, int n, double margin, int max_rejections) {
    for (int attempt = 0; attempt <= max_rejections; ++attempt) {
        ComplexMatrix a = random_matrix(gen, n);
        try {
            DichotomyData d = split_spectrum(a);
            const double gap = std::min(d.gamma_minus, d.gamma_plus);
            if (gap >= margin) {
                return {std::move(a), std::move(d)};
            }
        } catch (const DichotomyViolation&) {
        }
    }
    throw GenerationError("no matrix with axis margin " + std::to_string(margin) + " after " +
                          std::to_string(max_rejections) + " rejections");
}

double min_separation(const std::vector<Complex>& values) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            best = std::min(best, std::abs(values[i] - values[j]));
        }
    }
    return best;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) {
        throw InvalidInput("linspace: steps must be positive");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    }
    return out;
}

std::vector<double> standard_time_grid() {
    std::vector<double> grid = linspace(0.05, 10.0, 30);
    const std::size_t half = grid.size();
    for (std::size_t i = 0; i < half; ++i) {
        grid.push_back(-grid[i]);
    }
    return grid;
}

}  // namespace greenbound
