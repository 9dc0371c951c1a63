#include "greenbound/green.hpp"

#include <cmath>

#include "greenbound/analytic.hpp"
#include "greenbound/bounds.hpp"
#include "greenbound/error.hpp"
#include "greenbound/newton.hpp"

namespace greenbound {

namespace {

constexpr int kInitialPanels = 64;
constexpr int kMaxPanels = 1 << 22;
constexpr int kMaxWindowDoublings = 200;

void require_consistent(const ComplexMatrix& a, const DichotomyData& d) {
    require_valid(a);
    if (d.k() + d.m() != a.rows()) {
        throw InvalidInput("dichotomy data does not match the matrix dimension");
    }
}

// prod_i (A - p_i I) * rhs
ComplexMatrix apply_linear_factors(const ComplexMatrix& a, const NodeList& points, ComplexMatrix rhs) {
    for (const auto& p : points) {
        ComplexMatrix shifted = a;
        shifted.diagonal().array() -= p;
        rhs = shifted * rhs;
    }
    return rhs;
}

// Green's function on one half-axis; t = 0 gives the one-sided limit.
ComplexMatrix green_side(const ComplexMatrix& a, const DichotomyData& d, double t, TimeSign side) {
    const Eigen::Index n = a.rows();
    if (side == TimeSign::positive) {
        if (d.m() == 0) {
            return ComplexMatrix::Zero(n, n);
        }
        const NewtonPolynomial q = build_newton(fn::tilde_exp_plus(t, d.mu), d.nu);
        return apply_linear_factors(a, d.mu, q(a));
    }
    if (d.k() == 0) {
        return ComplexMatrix::Zero(n, n);
    }
    const NewtonPolynomial q = build_newton(fn::tilde_exp_minus(t, d.nu), d.mu);
    return -apply_linear_factors(a, d.nu, q(a));
}

double max_abs_diff(const ComplexVector& x, const ComplexVector& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace

ComplexMatrix green_newton(const ComplexMatrix& a, const DichotomyData& d, double t) {
    require_consistent(a, d);
    if (t == 0.0 || !std::isfinite(t)) {
        throw InvalidInput("Green's function is defined for finite t != 0");
    }
    return green_side(a, d, t, sign_of(t));
}

ComplexMatrix green_limit(const ComplexMatrix& a, const DichotomyData& d, TimeSign side) {
    require_consistent(a, d);
    return green_side(a, d, 0.0, side);
}

ComplexMatrix spectral_projector(const ComplexMatrix& a, const DichotomyData& d) {
    require_consistent(a, d);
    return matrix_function(fn::left_half_indicator(), a, ordered_nodes(d, TimeSign::positive));
}

ComplexMatrix green_projector(const ComplexMatrix& a, const DichotomyData& d, double t) {
    require_consistent(a, d);
    if (t == 0.0 || !std::isfinite(t)) {
        throw InvalidInput("Green's function is defined for finite t != 0");
    }
    const ComplexMatrix p_left = spectral_projector(a, d);
    const ComplexMatrix p_right = identity(a.rows()) - p_left;
    // B = A P + lambda (I - P) agrees with A on range(P). With lambda at the
    // slowest rate of that half, e^{Bt} has no block much larger than e^{At} P,
    // so the final product does not cancel.
    if (t > 0.0) {
        const double lambda = d.m() > 0 ? -d.gamma_minus : -1.0;
        return expm(a * p_left + lambda * p_right, t) * p_left;
    }
    const double lambda = d.k() > 0 ? d.gamma_plus : 1.0;
    return -(expm(a * p_right + lambda * p_left, t) * p_right);
}

ForcingFn constant_forcing(ComplexVector v) {
    const double sup = v.norm();
    return ForcingFn{"constant", {}, [v = std::move(v)](double) { return v; }, sup};
}

ForcingFn sine_forcing(double omega, ComplexVector v) {
    const double sup = v.norm();
    return ForcingFn{"sine", {omega}, [omega, v = std::move(v)](double s) -> ComplexVector {
                         return std::sin(omega * s) * v;
                     },
                     sup};
}

ForcingFn gaussian_pulse_forcing(ComplexVector v) {
    const double sup = v.norm();
    return ForcingFn{"pulse", {}, [v = std::move(v)](double s) -> ComplexVector { return std::exp(-s * s) * v; }, sup};
}

BoundedSolver::BoundedSolver(ComplexMatrix a, DichotomyData d, ForcingFn f, double eps)
    : a_(std::move(a)), d_(std::move(d)), f_(std::move(f)), eps_(eps) {
    require_consistent(a_, d_);
    if (!(eps_ > 0.0)) {
        throw InvalidInput("eps must be positive");
    }
    if (f_(0.0).size() != a_.rows()) {
        throw InvalidInput("forcing dimension does not match the matrix");
    }

    const BoundParams params = make_bound_params(a_, d_, 1.0);
    const double target = eps_ / 2.0;
    auto tail_ok = [&](double w) { return f_.sup_norm * bound_tail_integral(params, w) <= target; };

    double hi = 1.0;
    int doublings = 0;
    while (!tail_ok(hi)) {
        if (++doublings > kMaxWindowDoublings || !std::isfinite(hi)) {
            throw WindowError("no finite window certifies the requested eps");
        }
        hi *= 2.0;
    }
    double lo = doublings == 0 ? 0.0 : hi / 2.0;
    for (int iter = 0; iter < 60 && hi - lo > 1e-9 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (tail_ok(mid) ? hi : lo) = mid;
    }
    window_ = hi;

    panels_ = kInitialPanels;
    const double step = window_ / panels_;
    plus_.reserve(static_cast<std::size_t>(panels_) + 1);
    minus_.reserve(static_cast<std::size_t>(panels_) + 1);
    plus_.push_back(green_limit(a_, d_, TimeSign::positive));
    minus_.push_back(green_limit(a_, d_, TimeSign::negative));
    for (int j = 1; j <= panels_; ++j) {
        plus_.push_back(green_newton(a_, d_, j * step));
        minus_.push_back(green_newton(a_, d_, -j * step));
    }
}

void BoundedSolver::refine() {
    if (2 * panels_ > kMaxPanels) {
        throw WindowError("quadrature did not converge within the step budget");
    }
    const int panels = 2 * panels_;
    const double step = window_ / panels;
    std::vector<ComplexMatrix> plus(static_cast<std::size_t>(panels) + 1);
    std::vector<ComplexMatrix> minus(static_cast<std::size_t>(panels) + 1);
    for (int j = 0; j <= panels; ++j) {
        if (j % 2 == 0) {
            plus[j] = std::move(plus_[j / 2]);
            minus[j] = std::move(minus_[j / 2]);
        } else {
            plus[j] = green_newton(a_, d_, j * step);
            minus[j] = green_newton(a_, d_, -j * step);
        }
    }
    plus_ = std::move(plus);
    minus_ = std::move(minus);
    panels_ = panels;
}

ComplexVector BoundedSolver::integrate(double t, int panels, const std::vector<ComplexMatrix>& plus,
                                       const std::vector<ComplexMatrix>& minus) const {
    // `plus`/`minus` may be sampled more finely than `panels`; use every stride-th sample.
    const int stride = (static_cast<int>(plus.size()) - 1) / panels;
    const double step = window_ / panels;
    ComplexVector acc = ComplexVector::Zero(a_.rows());
    for (int j = 0; j <= panels; ++j) {
        const double weight = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        const double u = j * step;
        const std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(stride);
        acc += weight * (plus[idx] * f_(t - u) + minus[idx] * f_(t + u));
    }
    return acc * (step / 3.0);
}

void BoundedSolver::calibrate(std::span<const double> ts) {
    for (;;) {
        double worst = 0.0;
        for (double t : ts) {
            const ComplexVector fine = integrate(t, panels_, plus_, minus_);
            const ComplexVector coarse = integrate(t, panels_ / 2, plus_, minus_);
            worst = std::max(worst, max_abs_diff(fine, coarse));
        }
        if (worst < eps_ / 2.0) {
            return;
        }
        refine();
    }
}

ComplexVector BoundedSolver::operator()(double t) const { return integrate(t, panels_, plus_, minus_); }

ComplexVector bounded_solution(const ComplexMatrix& a, const DichotomyData& d, const ForcingFn& f, double t,
                               double eps) {
    BoundedSolver solver(a, d, f, eps);
    const double ts[] = {t};
    solver.calibrate(ts);
    return solver(t);
}

double residual(const ComplexMatrix& a, const std::function<ComplexVector(double)>& x_eval, const ForcingFn& f,
                double t, double h) {
    if (!(h > 0.0)) {
        throw InvalidInput("residual: h must be positive");
    }
    const ComplexVector derivative = (x_eval(t + h) - x_eval(t - h)) / (2.0 * h);
    return (derivative - a * x_eval(t) - f(t)).norm();
}

}  // namespace greenbound
