#include "greenbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

// Above this value of |t| * ||A|| the estimate is accumulated in the log domain.
constexpr double kLogDomainThreshold = 300.0;

// x^n with x^0 = 1 even for x = 0 or x = inf.
double pow_int(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// The half-axis view of the estimate: `near` linear factors in front of the
// reduced Newton polynomial, `far` interpolation nodes, decay rate `rate`.
struct Side {
    int near;
    int far;
    double rate;
};

Side side_of(const BoundParams& p) {
    if (p.t > 0.0) {
        return {p.k, p.m, p.gamma_minus};
    }
    return {p.m, p.k, p.gamma_plus};
}

std::uint64_t checked_binomial(int a, int b) {
    if (b == -1) {
        return a == -1 ? 1 : 0;
    }
    if (b < 0 || a < b) {
        return 0;
    }
    b = std::min(b, a - b);
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a - b + i);
        // r * factor / i is always integral; divide by the gcd first to delay overflow.
        const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
        const std::uint64_t r_red = r / g;
        const std::uint64_t i_red = static_cast<std::uint64_t>(i) / g;
        const std::uint64_t f_red = factor / i_red;
        if (r_red > std::numeric_limits<std::uint64_t>::max() / f_red) {
            throw RangeError("binomial coefficient exceeds 64 bits");
        }
        r = r_red * f_red;
    }
    return r;
}

std::uint64_t checked_factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i)) {
            throw RangeError("factorial exceeds 64 bits");
        }
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

double green_bound_direct(const Side& side, double s, double norm_a, double gamma) {
    const double b = 2.0 * norm_a;
    double total = 0.0;
    for (int j = 0; j < side.far; ++j) {
        for (int i = 0; i <= j; ++i) {
            const double c = binom_conv(side.near + i - 1, side.near - 1);
            if (c == 0.0) {
                continue;
            }
            total += pow_int(s, j - i) / factorial(j - i) * c * pow_int(b, side.near + j) / pow_int(gamma, side.near + i);
        }
    }
    return std::exp(-side.rate * s) * total;
}

double green_bound_log(const Side& side, double s, double norm_a, double gamma) {
    const double log_b = std::log(2.0 * norm_a);
    std::vector<double> logs;
    for (int j = 0; j < side.far; ++j) {
        for (int i = 0; i <= j; ++i) {
            const double c = binom_conv(side.near + i - 1, side.near - 1);
            const int pow_b = side.near + j;
            if (c == 0.0 || (norm_a == 0.0 && pow_b > 0)) {
                continue;
            }
            double l = std::log(c) - std::lgamma(j - i + 1.0) - side.rate * s;
            if (j - i > 0) {
                l += (j - i) * std::log(s);
            }
            if (pow_b > 0) {
                l += pow_b * log_b;
            }
            if (side.near + i > 0) {
                l -= (side.near + i) * std::log(gamma);
            }
            logs.push_back(l);
        }
    }
    if (logs.empty()) {
        return 0.0;
    }
    const double peak = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double l : logs) {
        acc += std::exp(l - peak);
    }
    return std::exp(peak + std::log(acc));
}

}  // namespace

BoundParams make_bound_params(const ComplexMatrix& a, const DichotomyData& d, double t) {
    return BoundParams{t, op_norm(a), d.k(), d.m(), d.gamma_minus, d.gamma_plus};
}

double BoundTerm::value(double abs_t, double norm_a, double gamma) const {
    return coef() * pow_int(2.0, pow_two) * pow_int(abs_t, pow_t) * pow_int(norm_a, pow_norm_a) /
           pow_int(gamma, pow_inv_gamma);
}

double binom_conv(int a, int b) {
    if (b >= 0 && a < 0) {
        throw InvalidInput("binom_conv: negative upper argument");
    }
    if (b == -1) {
        return a == -1 ? 1.0 : 0.0;
    }
    if (b < -1) {
        throw InvalidInput("binom_conv: lower argument below -1");
    }
    if (a < b) {
        return 0.0;
    }
    b = std::min(b, a - b);
    double r = 1.0;
    for (int i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return std::round(r);
}

double lemma_derivative_bound(int l, double t, int k, double gamma_minus, double gamma_plus) {
    if (!(t > 0.0)) {
        throw InvalidInput("lemma_derivative_bound: t must be positive");
    }
    if (l < 0 || k < 0) {
        throw InvalidInput("lemma_derivative_bound: l and k must be nonnegative");
    }
    const double gamma = gamma_minus + gamma_plus;
    double total = 0.0;
    for (int i = 0; i <= l; ++i) {
        // (k+i-1)!/(k-1)! as a rising product; empty for i = 0, zero for k = 0 < i.
        double rising = 1.0;
        for (int q = 0; q < i; ++q) {
            rising *= (k + q);
        }
        if (rising == 0.0) {
            continue;
        }
        total += pow_int(t, l - i) * binom_conv(l, i) * rising / pow_int(gamma, k + i);
    }
    return std::exp(-gamma_minus * t) * total;
}

double green_bound(const BoundParams& p) {
    if (p.t == 0.0 || !std::isfinite(p.t)) {
        throw InvalidInput("green_bound: t must be finite and nonzero");
    }
    if (p.k < 0 || p.m < 0 || p.k + p.m < 1) {
        throw InvalidInput("green_bound: need k, m >= 0 and k + m >= 1");
    }
    if (!(p.gamma_minus > 0.0) || !(p.gamma_plus > 0.0) || !(p.norm_a >= 0.0)) {
        throw InvalidInput("green_bound: gaps must be positive and ||A|| nonnegative");
    }
    const Side side = side_of(p);
    const double s = std::abs(p.t);
    if (side.far == 0) {
        return 0.0;
    }
    if (s * p.norm_a <= kLogDomainThreshold) {
        const double direct = green_bound_direct(side, s, p.norm_a, p.gamma());
        if (std::isfinite(direct)) {
            return direct;
        }
    }
    return green_bound_log(side, s, p.norm_a, p.gamma());
}

std::vector<BoundTerm> green_bound_terms(int k, int m, TimeSign sign) {
    if (k < 0 || m < 0) {
        throw InvalidInput("green_bound_terms: k and m must be nonnegative");
    }
    const int near = sign == TimeSign::positive ? k : m;
    const int far = sign == TimeSign::positive ? m : k;
    std::vector<BoundTerm> terms;
    for (int j = 0; j < far; ++j) {
        for (int i = 0; i <= j; ++i) {
            std::uint64_t num = checked_binomial(near + i - 1, near - 1);
            if (num == 0) {
                continue;
            }
            std::uint64_t den = checked_factorial(j - i);
            const std::uint64_t g = std::gcd(num, den);
            num /= g;
            den /= g;
            terms.push_back(BoundTerm{num, den, j - i, near + j, near + i, near + j});
        }
    }
    return terms;
}

double evaluate_terms(const std::vector<BoundTerm>& terms, const BoundParams& p) {
    if (p.t == 0.0) {
        throw InvalidInput("evaluate_terms: t must be nonzero");
    }
    const double s = std::abs(p.t);
    double total = 0.0;
    for (const auto& term : terms) {
        total += term.value(s, p.norm_a, p.gamma());
    }
    return std::exp(-side_of(p).rate * s) * total;
}

double expm_bound(double t, double norm_a, int n, double gamma_minus) {
    if (!(t > 0.0)) {
        throw InvalidInput("expm_bound: t must be positive");
    }
    if (n < 1) {
        throw InvalidInput("expm_bound: dimension must be positive");
    }
    const double x = 2.0 * t * norm_a;
    double term = 1.0;
    double total = 1.0;
    for (int j = 1; j < n; ++j) {
        term *= x / j;
        total += term;
    }
    return std::exp(-gamma_minus * t) * total;
}

double power_exp_tail(int power, double rate, double w) {
    if (power < 0 || !(rate > 0.0) || !(w >= 0.0)) {
        throw InvalidInput("power_exp_tail: need power >= 0, rate > 0, w >= 0");
    }
    // Gamma(q+1, x) = q Gamma(q, x) + x^q e^{-x}, starting from Gamma(1, x) = e^{-x}.
    const double x = rate * w;
    const double ex = std::exp(-x);
    double upper = ex;
    double xq = 1.0;
    for (int q = 1; q <= power; ++q) {
        xq *= x;
        upper = q * upper + xq * ex;
    }
    return upper / pow_int(rate, power + 1);
}

double bound_tail_integral(const BoundParams& p, double w) {
    if (!(w >= 0.0)) {
        throw InvalidInput("bound_tail_integral: w must be nonnegative");
    }
    const double b = 2.0 * p.norm_a;
    double total = 0.0;
    for (const double sign : {1.0, -1.0}) {
        BoundParams half = p;
        half.t = sign;
        const Side side = side_of(half);
        for (int j = 0; j < side.far; ++j) {
            for (int i = 0; i <= j; ++i) {
                const double c = binom_conv(side.near + i - 1, side.near - 1);
                if (c == 0.0) {
                    continue;
                }
                total += c / factorial(j - i) * pow_int(b, side.near + j) / pow_int(p.gamma(), side.near + i) *
                         power_exp_tail(j - i, side.rate, w);
            }
        }
    }
    return total;
}

}  // namespace greenbound
