#pragma once

#include <complex>
#include <vector>

#include "greenbound/analytic.hpp"
#include "greenbound/divided_diff.hpp"
#include "greenbound/linalg.hpp"

namespace greenbound {

/// Interpolating polynomial in Newton form:
///   p(z) = c_0 + c_1 (z - mu_1) + ... + c_{N-1} (z - mu_1)...(z - mu_{N-1}),
/// with c_j = f[mu_1, ..., mu_{j+1}].
class NewtonPolynomial {
public:
    NewtonPolynomial(NodeList nodes, std::vector<Complex> coeffs);

    [[nodiscard]] const NodeList& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    /// Nested evaluation: ((c_{N-1}(z - mu_{N-1}) + c_{N-2})(z - mu_{N-2}) + ...).
    [[nodiscard]] Complex operator()(Complex z) const;
    /// Same nested scheme on a jet, giving derivatives of p at the jet's center.
    [[nodiscard]] Jet operator()(const Jet& z) const;
    /// p(A) with (z - mu_j) replaced by (A - mu_j I); N-1 matrix products.
    [[nodiscard]] ComplexMatrix operator()(const ComplexMatrix& a) const;

private:
    NodeList nodes_;
    std::vector<Complex> coeffs_;
};

[[nodiscard]] NewtonPolynomial build_newton(const AnalyticFn& f, const NodeList& nodes);

[[nodiscard]] inline Complex eval_scalar(const NewtonPolynomial& p, Complex z) { return p(z); }

/// Throws InvalidInput for an invalid matrix.
[[nodiscard]] ComplexMatrix eval_matrix(const NewtonPolynomial& p, const ComplexMatrix& a);

/// f(A) = p(A) where p interpolates f on `nodes`, which must be the spectrum of
/// A repeated by algebraic multiplicity.
[[nodiscard]] ComplexMatrix matrix_function(const AnalyticFn& f, const ComplexMatrix& a, const NodeList& nodes);

/// True iff p matches the jet of f at every distinct node up to the node's
/// multiplicity minus one. Jet coefficients are compared with
/// |dp - df| <= tolerance * (1 + |df|).
[[nodiscard]] bool hermite_check(const NewtonPolynomial& p, const AnalyticFn& f, double tolerance);

}  // namespace greenbound
