#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "greenbound/jet.hpp"

namespace greenbound {

/// An analytic function given by its jet evaluator.
///
/// `jet(center, order)` returns the Taylor expansion up to `order` at `center`.
/// `poles()` lists known singularities; the contour oracle uses them to reject
/// contours that would enclose or graze a pole.
class AnalyticFn {
public:
    using Complex = std::complex<double>;
    using Evaluator = std::function<Jet(Complex center, int order)>;

    AnalyticFn(std::string name, Evaluator eval, std::vector<Complex> poles = {});

    /// Throws EvaluationError if the expansion is not finite (e.g. at a pole).
    [[nodiscard]] Jet jet(Complex center, int order) const;
    [[nodiscard]] Complex value(Complex z) const { return jet(z, 0).value(); }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::span<const Complex> poles() const noexcept { return poles_; }

private:
    std::string name_;
    Evaluator eval_;
    std::vector<Complex> poles_;
};

namespace fn {

/// z -> e^{z t}
[[nodiscard]] AnalyticFn exp_t(double t);

/// z -> sum_r coeffs[r] z^r
[[nodiscard]] AnalyticFn polynomial(std::vector<std::complex<double>> coeffs);

/// z -> c
[[nodiscard]] AnalyticFn constant(std::complex<double> c);

/// z -> 1 / prod_i (z - poles[i])
[[nodiscard]] AnalyticFn reciprocal_product(std::vector<std::complex<double>> poles);

/// z -> e^{z t} / prod_i (z - poles[i]). With poles = right-half-plane
/// eigenvalues this is the reduced function whose Newton polynomial on the
/// left eigenvalues yields Green's function for t > 0.
[[nodiscard]] AnalyticFn exp_over_product(double t, std::vector<std::complex<double>> poles);

/// exp_over_product(t, mu) for the right eigenvalues mu (used with t > 0).
[[nodiscard]] AnalyticFn tilde_exp_plus(double t, std::vector<std::complex<double>> mu);

/// exp_over_product(t, nu) for the left eigenvalues nu (used with t < 0).
[[nodiscard]] AnalyticFn tilde_exp_minus(double t, std::vector<std::complex<double>> nu);

/// e^{z t} on Re z < 0, zero on Re z > 0. Undefined on the imaginary axis.
[[nodiscard]] AnalyticFn exp_plus(double t);

/// Zero on Re z < 0, e^{z t} on Re z > 0. Undefined on the imaginary axis.
[[nodiscard]] AnalyticFn exp_minus(double t);

/// Indicator of the open left half-plane. Locally constant, so every jet is
/// a constant jet (1 or 0).
[[nodiscard]] AnalyticFn left_half_indicator();

}  // namespace fn

}  // namespace greenbound
