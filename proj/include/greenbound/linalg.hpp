#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace greenbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Eigenvalues of a square matrix, repeated according to algebraic multiplicity.
struct Spectrum {
    std::vector<Complex> eigenvalues;

    [[nodiscard]] std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// Throws InvalidInput unless `a` is square, non-empty and finite.
void require_valid(const ComplexMatrix& a);

/// Spectral norm (largest singular value), the operator norm induced by the
/// Euclidean vector norm.
[[nodiscard]] double op_norm(const ComplexMatrix& a);

/// Dense eigenvalues via Hessenberg reduction and shifted QR (complex Schur form).
/// Throws EigenFailure when the QR iteration does not converge.
[[nodiscard]] Spectrum eigenvalues(const ComplexMatrix& a);

/// Default clustering radius for eigenvalues of `a`: 1e-8 * max(1, ||a||).
[[nodiscard]] double default_cluster_tol(const ComplexMatrix& a);

/// Single-linkage clustering of eigenvalues closer than `tol`. Every member of
/// a cluster is replaced by the cluster mean, so multiplicities become exact
/// repetitions of one value. Order of the input is preserved.
[[nodiscard]] Spectrum cluster_eigenvalues(const Spectrum& s, double tol);

/// Matrix exponential e^{tA} by scaling and squaring with a Pade kernel.
/// Throws RangeError if ||tA|| exceeds the scaling budget or the result overflows.
[[nodiscard]] ComplexMatrix expm(const ComplexMatrix& a, double t);

[[nodiscard]] ComplexMatrix identity(Eigen::Index n);

}  // namespace greenbound
