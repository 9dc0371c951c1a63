#include "greenbound/jet.hpp"

#include <cmath>

#include "greenbound/error.hpp"

namespace greenbound {

Jet::Jet(Complex center, std::vector<Complex> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InvalidInput("jet needs at least one coefficient");
    }
}

Jet Jet::constant(Complex center, int order, Complex c) {
    if (order < 0) {
        throw InvalidInput("jet order must be nonnegative");
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    coeffs[0] = c;
    return Jet(center, std::move(coeffs));
}

Jet Jet::variable(Complex center, int order) {
    Jet z = constant(center, order, center);
    if (order >= 1) {
        z.coeffs_[1] = 1.0;
    }
    return z;
}

Jet::Complex Jet::derivative(int r) const {
    double factorial = 1.0;
    for (int i = 2; i <= r; ++i) {
        factorial *= i;
    }
    return coeff(r) * factorial;
}

Jet Jet::truncated(int order) const {
    if (order < 0 || order > this->order()) {
        throw InvalidInput("cannot truncate jet to a higher order");
    }
    return Jet(center_, std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void Jet::require_compatible(const Jet& rhs) const {
    if (rhs.center_ != center_ || rhs.coeffs_.size() != coeffs_.size()) {
        throw InvalidInput("jet arithmetic needs a shared center and order");
    }
}

Jet& Jet::operator+=(const Jet& rhs) {
    require_compatible(rhs);
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        coeffs_[r] += rhs.coeffs_[r];
    }
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    require_compatible(rhs);
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        coeffs_[r] -= rhs.coeffs_[r];
    }
    return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
    require_compatible(rhs);
    std::vector<Complex> out(coeffs_.size(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < out.size(); ++r) {
        for (std::size_t i = 0; i <= r; ++i) {
            out[r] += coeffs_[i] * rhs.coeffs_[r - i];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

Jet& Jet::operator/=(const Jet& rhs) {
    require_compatible(rhs);
    const Complex lead = rhs.coeffs_[0];
    if (lead == Complex{0.0, 0.0}) {
        throw EvaluationError("division by a jet vanishing at its center (pole)");
    }
    // Solve rhs * q = *this term by term.
    std::vector<Complex> q(coeffs_.size());
    for (std::size_t r = 0; r < q.size(); ++r) {
        Complex acc = coeffs_[r];
        for (std::size_t i = 1; i <= r; ++i) {
            acc -= rhs.coeffs_[i] * q[r - i];
        }
        q[r] = acc / lead;
    }
    coeffs_ = std::move(q);
    return *this;
}

Jet& Jet::operator+=(Complex c) {
    coeffs_[0] += c;
    return *this;
}

Jet& Jet::operator-=(Complex c) {
    coeffs_[0] -= c;
    return *this;
}

Jet& Jet::operator*=(Complex c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Jet exp(const Jet& f) {
    const auto fc = f.coeffs();
    std::vector<std::complex<double>> g(fc.size());
    g[0] = std::exp(fc[0]);
    for (std::size_t n = 1; n < g.size(); ++n) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 1; k <= n; ++k) {
            acc += static_cast<double>(k) * fc[k] * g[n - k];
        }
        g[n] = acc / static_cast<double>(n);
    }
    return Jet(f.center(), std::move(g));
}

}  // namespace greenbound
