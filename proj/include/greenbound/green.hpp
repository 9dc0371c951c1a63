#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "greenbound/dichotomy.hpp"
#include "greenbound/linalg.hpp"

namespace greenbound {

/// Green's function G(t) = g_t(A) of the bounded-solutions problem
/// x' = Ax + f, evaluated through the factorized Newton polynomial.
///
/// For t > 0, G(t) = prod_i (A - mu_i I) q_t^+(A), where q_t^+ interpolates
/// e^{zt} / prod_i (z - mu_i) on the left eigenvalues nu. For t < 0,
/// G(t) = -prod_j (A - nu_j I) q_t^-(A), with q_t^- interpolating
/// e^{zt} / prod_j (z - nu_j) on the right eigenvalues mu. A half-axis whose
/// interpolation set is empty yields the exact zero matrix.
///
/// Throws InvalidInput for t = 0 or when `d` does not match the dimension of A.
[[nodiscard]] ComplexMatrix green_newton(const ComplexMatrix& a, const DichotomyData& d, double t);

/// One-sided limit G(0+) or G(0-). G(0+) - G(0-) = I.
[[nodiscard]] ComplexMatrix green_limit(const ComplexMatrix& a, const DichotomyData& d, TimeSign side);

/// Riesz projector onto the left spectral subspace, P = chi(A) with chi the
/// indicator of Re z < 0, realized by Newton interpolation on ordered_nodes(d, +).
[[nodiscard]] ComplexMatrix spectral_projector(const ComplexMatrix& a, const DichotomyData& d);

/// Independent oracle for G: e^{At} P for t > 0 and -e^{At}(I - P) for t < 0,
/// with P = spectral_projector(a, d). Evaluated as e^{Bt} P with
/// B = AP - gamma_minus (I - P) (mirrored for t < 0), which is the same matrix
/// but never forms the growing part of e^{At}. Throws InvalidInput for t = 0.
[[nodiscard]] ComplexMatrix green_projector(const ComplexMatrix& a, const DichotomyData& d, double t);

/// A bounded forcing term s -> f(s) in C^N.
struct ForcingFn {
    std::string family;
    std::vector<double> params;
    std::function<ComplexVector(double)> eval;
    /// sup_s ||f(s)||, used to certify the truncation window.
    double sup_norm = 0.0;

    [[nodiscard]] ComplexVector operator()(double s) const { return eval(s); }
};

/// f(s) = v.
[[nodiscard]] ForcingFn constant_forcing(ComplexVector v);
/// f(s) = sin(omega s) v.
[[nodiscard]] ForcingFn sine_forcing(double omega, ComplexVector v);
/// f(s) = exp(-s^2) v.
[[nodiscard]] ForcingFn gaussian_pulse_forcing(ComplexVector v);

/// Quadrature for x(t) = \int G(t - s) f(s) ds = \int G(u) f(t - u) du.
///
/// The integral is truncated to |u| <= W, where W is the smallest window with
/// sup||f|| * (tail integral of green_bound beyond W) <= eps / 2. Each half
/// [-W, 0] and [0, W] uses composite Simpson with one-sided kernel values at
/// u = 0. The kernel samples are computed once per step size, so x(t) for
/// different t uses one fixed discretization (needed for finite-difference
/// residuals).
class BoundedSolver {
public:
    /// Throws InvalidInput on inconsistent data or eps <= 0, and WindowError
    /// if no finite window certifies eps.
    BoundedSolver(ComplexMatrix a, DichotomyData d, ForcingFn f, double eps);

    /// Halves the step until successive results at every t in `ts` differ by
    /// less than eps / 2. Throws WindowError if the step budget is exhausted.
    void calibrate(std::span<const double> ts);

    [[nodiscard]] ComplexVector operator()(double t) const;

    [[nodiscard]] double window() const noexcept { return window_; }
    [[nodiscard]] int panels() const noexcept { return panels_; }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return a_; }
    [[nodiscard]] const ForcingFn& forcing() const noexcept { return f_; }

private:
    void refine();
    [[nodiscard]] ComplexVector integrate(double t, int panels, const std::vector<ComplexMatrix>& plus,
                                          const std::vector<ComplexMatrix>& minus) const;

    ComplexMatrix a_;
    DichotomyData d_;
    ForcingFn f_;
    double eps_;
    double window_ = 0.0;
    int panels_ = 0;
    // Kernel samples G(+u_j) and G(-u_j) at u_j = j W / panels_, j = 0..panels_.
    std::vector<ComplexMatrix> plus_;
    std::vector<ComplexMatrix> minus_;
};

/// Bounded solution x(t) to accuracy eps (truncation eps/2, quadrature eps/2).
[[nodiscard]] ComplexVector bounded_solution(const ComplexMatrix& a, const DichotomyData& d, const ForcingFn& f,
                                             double t, double eps);

/// Central-difference ODE residual ||(x(t+h) - x(t-h)) / 2h - A x(t) - f(t)||.
[[nodiscard]] double residual(const ComplexMatrix& a, const std::function<ComplexVector(double)>& x_eval,
                              const ForcingFn& f, double t, double h);

}  // namespace greenbound
