#include "greenbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

// Largest ||tA||_1 we accept; roughly 30 squarings of the Pade kernel.
constexpr double kExpmNormBudget = 1e9;

}  // namespace

void require_valid(const ComplexMatrix& a) {
    if (a.rows() < 1 || a.rows() != a.cols()) {
        throw InvalidInput("matrix must be square with dimension >= 1, got " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (!a.allFinite()) {
        throw InvalidInput("matrix has non-finite entries");
    }
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

double op_norm(const ComplexMatrix& a) {
    require_valid(a);
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
}

Spectrum eigenvalues(const ComplexMatrix& a) {
    require_valid(a);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw EigenFailure("complex Schur iteration did not converge");
    }
    Spectrum s;
    s.eigenvalues.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    return s;
}

double default_cluster_tol(const ComplexMatrix& a) { return 1e-8 * std::max(1.0, op_norm(a)); }

Spectrum cluster_eigenvalues(const Spectrum& s, double tol) {
    const std::size_t n = s.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(s.eigenvalues[i] - s.eigenvalues[j]) < tol) {
                parent[find(j)] = find(i);
            }
        }
    }
    std::vector<Complex> sum(n, Complex{0.0, 0.0});
    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        sum[find(i)] += s.eigenvalues[i];
        ++count[find(i)];
    }
    Spectrum out;
    out.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        out.eigenvalues.push_back(sum[root] / static_cast<double>(count[root]));
    }
    return out;
}

ComplexMatrix expm(const ComplexMatrix& a, double t) {
    require_valid(a);
    if (!std::isfinite(t)) {
        throw InvalidInput("expm: t must be finite");
    }
    const ComplexMatrix at = a * t;
    if (at.cwiseAbs().colwise().sum().maxCoeff() > kExpmNormBudget) {
        throw RangeError("expm: ||tA|| exceeds the scaling budget");
    }
    ComplexMatrix result = at.exp();
    if (!result.allFinite()) {
        throw RangeError("expm: result overflows");
    }
    return result;
}

}  // namespace greenbound
