#include "greenbound/divided_diff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

using Complex = std::complex<double>;

constexpr double kContourClearance = 1e-10;

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

void require_valid_nodes(std::span<const Complex> nodes) {
    if (nodes.empty()) {
        throw InvalidInput("node list must be non-empty");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i].real()) || !std::isfinite(nodes[i].imag())) {
            throw InvalidInput("node list has non-finite entries");
        }
        if (i > 0 && nodes[i] == nodes[i - 1]) {
            continue;
        }
        // A new run starts at i; its value must not occur earlier.
        for (std::size_t j = 0; j < i; ++j) {
            if (nodes[j] == nodes[i]) {
                throw InvalidInput("equal nodes must occupy contiguous runs");
            }
        }
    }
}

std::vector<NodeRun> node_runs(std::span<const Complex> nodes) {
    std::vector<NodeRun> runs;
    for (const auto& z : nodes) {
        if (!runs.empty() && runs.back().value == z) {
            ++runs.back().multiplicity;
        } else {
            runs.push_back({z, 1});
        }
    }
    return runs;
}

std::vector<Complex> divided_difference_table(const AnalyticFn& f, std::span<const Complex> nodes) {
    require_valid_nodes(nodes);
    const std::size_t n = nodes.size();

    // One jet per run, deep enough for the run's multiplicity.
    std::vector<Jet> jets;
    std::vector<std::size_t> run_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || nodes[i] != nodes[i - 1]) {
            std::size_t len = 1;
            while (i + len < n && nodes[i + len] == nodes[i]) {
                ++len;
            }
            jets.push_back(f.jet(nodes[i], static_cast<int>(len) - 1));
        }
        run_of[i] = jets.size() - 1;
    }

    // column[i] holds f[mu_{i-level}, ..., mu_i] after each sweep.
    std::vector<Complex> column(n);
    for (std::size_t i = 0; i < n; ++i) {
        column[i] = jets[run_of[i]].value();
    }
    std::vector<Complex> top(n);
    top[0] = column[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Complex lo = nodes[i - level];
            const Complex hi = nodes[i];
            if (hi == lo) {
                column[i] = jets[run_of[i]].coeff(static_cast<int>(level));
            } else {
                column[i] = (column[i] - column[i - 1]) / (hi - lo);
            }
        }
        top[level] = column[level];
    }
    return top;
}

Complex dd_contour_oracle(const AnalyticFn& f, std::span<const Complex> nodes, double radius_margin, int quad_points) {
    if (nodes.empty()) {
        throw InvalidInput("node list must be non-empty");
    }
    if (quad_points < 1) {
        throw InvalidInput("quad_points must be positive");
    }
    if (!(radius_margin >= kContourClearance)) {
        throw ContourError("contour passes within 1e-10 of a node");
    }
    Complex center{0.0, 0.0};
    for (const auto& z : nodes) {
        center += z;
    }
    center /= static_cast<double>(nodes.size());
    double reach = 0.0;
    for (const auto& z : nodes) {
        reach = std::max(reach, std::abs(z - center));
    }
    const double radius = reach + radius_margin;
    for (const auto& p : f.poles()) {
        const double d = std::abs(p - center);
        if (std::abs(d - radius) < kContourClearance) {
            throw ContourError("contour passes within 1e-10 of a pole");
        }
        if (d < radius) {
            throw ContourError("contour encloses a pole of " + f.name());
        }
    }

    // (1/2 pi i) \oint g dz with z = c + R e^{i theta} reduces to the mean of g(z)(z - c).
    Complex sum{0.0, 0.0};
    for (int j = 0; j < quad_points; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / quad_points;
        const Complex offset = std::polar(radius, theta);
        const Complex z = center + offset;
        Complex omega{1.0, 0.0};
        for (const auto& mu : nodes) {
            omega *= (z - mu);
        }
        sum += f.value(z) * offset / omega;
    }
    return sum / static_cast<double>(quad_points);
}

Complex dd_distinct_formula(const AnalyticFn& f, std::span<const Complex> nodes) {
    if (nodes.empty()) {
        throw InvalidInput("node list must be non-empty");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (std::abs(nodes[i] - nodes[j]) <= 1e-10) {
                throw DistinctnessViolation("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                            " coincide");
            }
        }
    }
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        Complex denom{1.0, 0.0};
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (k != j) {
                denom *= (nodes[j] - nodes[k]);
            }
        }
        sum += f.value(nodes[j]) / denom;
    }
    return sum;
}

std::vector<Complex> convex_hull(std::span<const Complex> points) {
    std::vector<Complex> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) {
        return pts;
    }
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) {
            --k;
        }
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

double gelfond_bound(const AnalyticFn& f, std::span<const Complex> nodes, int boundary_samples) {
    if (nodes.empty()) {
        throw InvalidInput("node list must be non-empty");
    }
    const int order = static_cast<int>(nodes.size()) - 1;
    // coeff(order) is already f^{(N-1)}/(N-1)!.
    auto scaled = [&](Complex z) { return std::abs(f.jet(z, order).coeff(order)); };

    const std::vector<Complex> hull = convex_hull(nodes);
    double best = 0.0;
    for (const auto& v : hull) {
        best = std::max(best, scaled(v));
    }
    if (hull.size() == 1) {
        return best;
    }

    // Closed boundary polyline; a segment is traversed once.
    std::vector<std::pair<Complex, Complex>> edges;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (hull.size() == 2 && i == 1) {
            break;
        }
        edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    }
    double perimeter = 0.0;
    for (const auto& [a, b] : edges) {
        perimeter += std::abs(b - a);
    }
    for (const auto& [a, b] : edges) {
        const int samples = std::max(1, static_cast<int>(std::ceil(boundary_samples * std::abs(b - a) / perimeter)));
        for (int s = 1; s < samples; ++s) {
            best = std::max(best, scaled(a + (b - a) * (static_cast<double>(s) / samples)));
        }
    }
    return best;
}

}  // namespace greenbound
