#pragma once

#include <limits>
#include <optional>

#include "greenbound/divided_diff.hpp"
#include "greenbound/linalg.hpp"

namespace greenbound {

/// Spectrum split across the imaginary axis.
///
/// `mu` holds the k eigenvalues with Re > 0 and `nu` the m eigenvalues with
/// Re < 0, each repeated by multiplicity and sorted by (Re, Im) so that equal
/// values are contiguous. The gap constants are the tight ones:
/// gamma_plus = min Re mu, gamma_minus = -max Re nu. An empty half has its
/// constant set to +infinity.
struct DichotomyData {
    NodeList mu;
    NodeList nu;
    double gamma_plus = std::numeric_limits<double>::infinity();
    double gamma_minus = std::numeric_limits<double>::infinity();

    [[nodiscard]] int k() const noexcept { return static_cast<int>(mu.size()); }
    [[nodiscard]] int m() const noexcept { return static_cast<int>(nu.size()); }
};

enum class TimeSign { positive = +1, negative = -1 };

[[nodiscard]] inline TimeSign sign_of(double t) noexcept { return t > 0.0 ? TimeSign::positive : TimeSign::negative; }

/// Computes, clusters and partitions the eigenvalues of `a`. `axis_tol`
/// defaults to 1e-8 * max(1, ||a||). Throws DichotomyViolation if some
/// eigenvalue has |Re| <= axis_tol.
[[nodiscard]] DichotomyData split_spectrum(const ComplexMatrix& a, std::optional<double> axis_tol = std::nullopt);

/// Partitions an already clustered spectrum; see split_spectrum.
[[nodiscard]] DichotomyData split_eigenvalues(const Spectrum& clustered, double axis_tol);

/// mu followed by nu for t > 0, nu followed by mu for t < 0.
[[nodiscard]] NodeList ordered_nodes(const DichotomyData& d, TimeSign sign);

}  // namespace greenbound
