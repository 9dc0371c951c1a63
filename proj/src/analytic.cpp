#include "greenbound/analytic.hpp"

#include <cmath>
#include <sstream>

#include "greenbound/error.hpp"

namespace greenbound {

AnalyticFn::AnalyticFn(std::string name, Evaluator eval, std::vector<Complex> poles)
    : name_(std::move(name)), eval_(std::move(eval)), poles_(std::move(poles)) {}

Jet AnalyticFn::jet(Complex center, int order) const {
    if (order < 0) {
        throw InvalidInput("jet order must be nonnegative");
    }
    Jet j = eval_(center, order);
    for (const auto& c : j.coeffs()) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            std::ostringstream msg;
            msg << name_ << ": non-finite expansion at " << center;
            throw EvaluationError(msg.str());
        }
    }
    return j;
}

namespace fn {

namespace {

using Complex = std::complex<double>;

void require_off_axis(Complex z, const char* who) {
    if (z.real() == 0.0) {
        throw EvaluationError(std::string(who) + ": undefined on the imaginary axis");
    }
}

Jet exp_jet(Complex center, int order, double t) { return exp(Jet::variable(center, order) * Complex{t, 0.0}); }

}  // namespace

AnalyticFn exp_t(double t) {
    std::ostringstream name;
    name << "exp_t(t=" << t << ")";
    return AnalyticFn(name.str(), [t](Complex c, int order) { return exp_jet(c, order, t); });
}

AnalyticFn polynomial(std::vector<Complex> coeffs) {
    return AnalyticFn("polynomial", [coeffs = std::move(coeffs)](Complex c, int order) {
        const Jet z = Jet::variable(c, order);
        Jet acc = Jet::constant(c, order, 0.0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    });
}

AnalyticFn constant(Complex value) {
    return AnalyticFn("constant", [value](Complex c, int order) { return Jet::constant(c, order, value); });
}

AnalyticFn reciprocal_product(std::vector<Complex> poles) {
    auto eval = [poles](Complex c, int order) {
        const Jet z = Jet::variable(c, order);
        Jet acc = Jet::constant(c, order, 1.0);
        for (const auto& p : poles) {
            acc /= (z - p);
        }
        return acc;
    };
    return AnalyticFn("reciprocal_product", std::move(eval), std::move(poles));
}

AnalyticFn exp_over_product(double t, std::vector<Complex> poles) {
    auto eval = [t, poles](Complex c, int order) {
        const Jet z = Jet::variable(c, order);
        Jet acc = exp_jet(c, order, t);
        for (const auto& p : poles) {
            acc /= (z - p);
        }
        return acc;
    };
    std::ostringstream name;
    name << "exp_over_product(t=" << t << ")";
    return AnalyticFn(name.str(), std::move(eval), std::move(poles));
}

AnalyticFn tilde_exp_plus(double t, std::vector<Complex> mu) { return exp_over_product(t, std::move(mu)); }

AnalyticFn tilde_exp_minus(double t, std::vector<Complex> nu) { return exp_over_product(t, std::move(nu)); }

AnalyticFn exp_plus(double t) {
    return AnalyticFn("exp_plus", [t](Complex c, int order) {
        require_off_axis(c, "exp_plus");
        return c.real() < 0.0 ? exp_jet(c, order, t) : Jet::constant(c, order, 0.0);
    });
}

AnalyticFn exp_minus(double t) {
    return AnalyticFn("exp_minus", [t](Complex c, int order) {
        require_off_axis(c, "exp_minus");
        return c.real() > 0.0 ? exp_jet(c, order, t) : Jet::constant(c, order, 0.0);
    });
}

AnalyticFn left_half_indicator() {
    return AnalyticFn("left_half_indicator", [](Complex c, int order) {
        require_off_axis(c, "left_half_indicator");
        return Jet::constant(c, order, c.real() < 0.0 ? 1.0 : 0.0);
    });
}

}  // namespace fn

}  // namespace greenbound
