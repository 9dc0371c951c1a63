#pragma once

#include <complex>
#include <span>
#include <vector>

#include "greenbound/analytic.hpp"

namespace greenbound {

/// Interpolation nodes mu_1..mu_N. Repeated values must form contiguous runs;
/// a run of length r means multiplicity r. Confluence is decided by exact
/// equality, so clustered eigenvalues should be passed unchanged.
using NodeList = std::vector<std::complex<double>>;

/// A distinct node together with its multiplicity (run length).
struct NodeRun {
    std::complex<double> value;
    int multiplicity;
};

/// Throws InvalidInput if `nodes` is empty or a value reappears after its run ended.
void require_valid_nodes(std::span<const std::complex<double>> nodes);

/// Collapses contiguous runs of equal nodes.
[[nodiscard]] std::vector<NodeRun> node_runs(std::span<const std::complex<double>> nodes);

/// Confluent divided-difference table. Entry j of the result is
/// f[mu_1, ..., mu_{j+1}]. Runs of a repeated node are seeded from the jet of f
/// (f[mu,...,mu] with r+1 copies = f^{(r)}(mu)/r!); all other entries come
/// from the quotient recurrence.
[[nodiscard]] std::vector<std::complex<double>> divided_difference_table(const AnalyticFn& f,
                                                                       std::span<const std::complex<double>> nodes);

/// f[mu_1..mu_N] as (1/2 pi i) times the contour integral of f(z)/Omega(z),
/// Omega(z) = prod (z - mu_k), over the circle centred at the node centroid with
/// radius (max node distance + radius_margin), by the trapezoidal rule with
/// `quad_points` samples. Multiplicity-blind. Throws ContourError if the circle
/// passes within 1e-10 of a node, or encloses or grazes a known pole of f.
[[nodiscard]] std::complex<double> dd_contour_oracle(const AnalyticFn& f, std::span<const std::complex<double>> nodes,
                                                     double radius_margin, int quad_points);

/// Lagrange-type sum over pairwise distinct nodes:
/// sum_j f(mu_j) / prod_{k != j} (mu_j - mu_k).
/// Throws DistinctnessViolation when two nodes are closer than 1e-10.
[[nodiscard]] std::complex<double> dd_distinct_formula(const AnalyticFn& f, std::span<const std::complex<double>> nodes);

/// (1/(N-1)!) max |f^{(N-1)}| over the convex hull of the nodes, sampled at
/// `boundary_samples` points of the hull boundary plus its vertices. The true
/// maximum of an analytic derivative over the hull lies on the boundary, so this
/// is a sampled approximation from below that is exact at the vertices.
[[nodiscard]] double gelfond_bound(const AnalyticFn& f, std::span<const std::complex<double>> nodes,
                                   int boundary_samples = 512);

/// Counter-clockwise convex hull of planar points (Andrew's monotone chain).
/// Collinear points are dropped; degenerate inputs return one or two points.
[[nodiscard]] std::vector<std::complex<double>> convex_hull(std::span<const std::complex<double>> points);

}  // namespace greenbound
