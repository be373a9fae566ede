#pragma once

#include <span>
#include <utility>
#include <vector>

namespace kuranet {

/// Modulus and mean phase of the population average of e^{i theta}.
struct OrderParameter {
    double r = 0.0;    // in [0, 1]
    double psi = 0.0;  // principal value in (-pi, pi]; pinned to 0 when r < 1e-12
};

/// r = |(1/N) sum_j e^{i theta_j}|, psi = arg of the sum.
/// Throws InvalidParameterError on an empty vector.
OrderParameter order_parameter(std::span<const double> theta);

/// Same quantity computed from precomputed sin/cos tables; the summation
/// order matches order_parameter(theta) bit for bit.
OrderParameter order_parameter_from_sincos(std::span<const double> sin_theta,
                                           std::span<const double> cos_theta);

/// Arithmetic mean and population standard deviation of the final `tail`
/// entries. Throws InvalidParameterError if tail < 1 or tail > series size.
std::pair<double, double> tail_stats(std::span<const double> r_series, long tail);

/// Derivative of r with respect to k on a strictly ascending grid: the
/// three-point Lagrange stencil, central at interior points and one-sided at
/// the ends (exact for quadratics either way). Needs at least 3 points.
/// Throws InvalidParameterError on short, unsorted, or duplicate grids.
std::vector<double> dR_dK(std::span<const double> k_values, std::span<const double> r_values);

}  // namespace kuranet
