#pragma once

#include <cstdint>
#include <vector>

#include "greenbound/dichotomy.hpp"
#include "greenbound/linalg.hpp"

namespace greenbound {

/// Inputs of the closed-form Green's function estimates.
///
/// k and m count the right and left eigenvalues; gamma_plus / gamma_minus are
/// gap constants with Re mu >= gamma_plus and Re nu <= -gamma_minus. A constant
/// may be +infinity when its half of the spectrum is empty.
struct BoundParams {
    double t = 0.0;
    double norm_a = 0.0;
    int k = 0;
    int m = 0;
    double gamma_minus = 0.0;
    double gamma_plus = 0.0;

    [[nodiscard]] double gamma() const noexcept { return gamma_minus + gamma_plus; }
};

/// Parameters for A with dichotomy data `d` at time t, using the tight gaps
/// and the spectral norm of A.
[[nodiscard]] BoundParams make_bound_params(const ComplexMatrix& a, const DichotomyData& d, double t);

/// One summand coef * 2^pow_two * |t|^pow_t * ||A||^pow_norm_a / gamma^pow_inv_gamma
/// of the Green's function estimate, with coef = numerator / denominator.
/// The exponential prefactor is shared by all terms and not part of a term.
struct BoundTerm {
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 1;
    int pow_t = 0;
    int pow_norm_a = 0;
    int pow_inv_gamma = 0;
    int pow_two = 0;

    [[nodiscard]] double coef() const noexcept {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    [[nodiscard]] double value(double abs_t, double norm_a, double gamma) const;

    friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

/// Binomial coefficient C(a, b) extended to b = -1 by the factorial
/// conventions (-1)!/(-1)! = 1 and (i-1)!/(-1)! = 0 for i >= 1, so that
/// C(k+i-1, k-1) with k = 0 is 1 for i = 0 and 0 otherwise.
[[nodiscard]] double binom_conv(int a, int b);

/// Bound on |d^l/dz^l e^{zt} / prod_{j=1}^k (z - mu_j)| for Re z <= -gamma_minus,
/// Re mu_j >= gamma_plus, t > 0:
///   e^{-gamma_minus t} sum_{i=0}^{l} t^{l-i} C(l,i) (k+i-1)!/(k-1)! gamma^{-(k+i)},
/// gamma = gamma_minus + gamma_plus. For k = 0 this is e^{-gamma_minus t} t^l.
/// Throws InvalidInput for t <= 0.
[[nodiscard]] double lemma_derivative_bound(int l, double t, int k, double gamma_minus, double gamma_plus);

/// Estimate of ||G(t)||. For t > 0
///   e^{-gamma_minus t} sum_{j=0}^{m-1} sum_{i=0}^{j} t^{j-i}/(j-i)! C(k+i-1,k-1) (2||A||)^{k+j} / gamma^{k+i},
/// and for t < 0 the mirror image (k <-> m, gamma_minus <-> gamma_plus, t -> -t).
/// Empty sums give 0, matching G = 0 on that half-axis.
/// Throws InvalidInput for t = 0.
[[nodiscard]] double green_bound(const BoundParams& p);

/// Symbolic summands of green_bound for the given half-axis, in (j, i) order.
/// Throws RangeError if a coefficient does not fit in 64 bits.
[[nodiscard]] std::vector<BoundTerm> green_bound_terms(int k, int m, TimeSign sign);

/// Numeric value of a term list for parameters p, including the exponential
/// prefactor of the half-axis selected by sign(p.t).
[[nodiscard]] double evaluate_terms(const std::vector<BoundTerm>& terms, const BoundParams& p);

/// Exponential estimate for a Hurwitz matrix, Re lambda < -gamma_minus:
///   ||e^{At}|| <= e^{-gamma_minus t} sum_{j=0}^{N-1} (2 t ||A||)^j / j!.
/// Throws InvalidInput for t <= 0 or n < 1.
[[nodiscard]] double expm_bound(double t, double norm_a, int n, double gamma_minus);

/// Integral over [w, inf) of s^power e^{-rate s}, i.e. Gamma(power+1, rate w) / rate^{power+1}.
[[nodiscard]] double power_exp_tail(int power, double rate, double w);

/// Integral of green_bound over |t| >= w, both half-axes, evaluated term by
/// term in closed form. p.t is ignored.
[[nodiscard]] double bound_tail_integral(const BoundParams& p, double w);

}  // namespace greenbound
