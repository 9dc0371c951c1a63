#pragma once

#include <complex>
#include <span>
#include <vector>

namespace greenbound {

/// Truncated Taylor expansion of an analytic function at a fixed center.
///
/// `coeff(r)` holds f^{(r)}(center) / r! for r = 0..order(). All arithmetic is
/// exact truncated power-series arithmetic, so the order-q jet of any
/// expression is a bitwise prefix of its order-p jet for q < p.
class Jet {
public:
    using Complex = std::complex<double>;

    Jet(Complex center, std::vector<Complex> coeffs);

    /// Constant function c expanded at `center`.
    static Jet constant(Complex center, int order, Complex c);
    /// The identity function z expanded at `center`.
    static Jet variable(Complex center, int order);

    [[nodiscard]] Complex center() const noexcept { return center_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Complex value() const noexcept { return coeffs_.front(); }
    [[nodiscard]] Complex coeff(int r) const { return coeffs_.at(static_cast<std::size_t>(r)); }
    /// r-th derivative at the center: coeff(r) * r!.
    [[nodiscard]] Complex derivative(int r) const;
    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Jet of the same expansion truncated to a lower order.
    [[nodiscard]] Jet truncated(int order) const;

    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator*=(const Jet& rhs);
    /// Throws EvaluationError if rhs vanishes at the center.
    Jet& operator/=(const Jet& rhs);
    Jet& operator+=(Complex c);
    Jet& operator-=(Complex c);
    Jet& operator*=(Complex c);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator+(Jet a, Complex c) { return a += c; }
    friend Jet operator-(Jet a, Complex c) { return a -= c; }
    friend Jet operator*(Jet a, Complex c) { return a *= c; }
    friend Jet operator*(Complex c, Jet a) { return a *= c; }
    friend Jet operator-(Jet a) { return a *= Complex{-1.0, 0.0}; }

private:
    void require_compatible(const Jet& rhs) const;

    Complex center_;
    std::vector<Complex> coeffs_;
};

/// exp composed with a jet: g = e^f, via g' = f' g.
[[nodiscard]] Jet exp(const Jet& f);

}  // namespace greenbound
