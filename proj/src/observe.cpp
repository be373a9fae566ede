#include "kuranet/observe.hpp"

#include <cmath>
#include <cstddef>

#include "kuranet/errors.hpp"

namespace kuranet {

namespace {

OrderParameter from_sums(double sum_cos, double sum_sin, std::size_t n) {
    const double inv_n = 1.0 / static_cast<double>(n);
    OrderParameter op;
    op.r = std::hypot(sum_cos, sum_sin) * inv_n;
    // psi is ill-conditioned as r -> 0; pin it for determinism.
    op.psi = (op.r < 1e-12) ? 0.0 : std::atan2(sum_sin, sum_cos);
    if (op.r > 1.0) {  // roundoff can push |mean| a hair past 1
        op.r = 1.0;
    }
    return op;
}

}  // namespace

OrderParameter order_parameter(std::span<const double> theta) {
    if (theta.empty()) {
        throw InvalidParameterError("order_parameter: empty phase vector");
    }
    double sum_cos = 0.0;
    double sum_sin = 0.0;
    for (double t : theta) {
        sum_cos += std::cos(t);
        sum_sin += std::sin(t);
    }
    return from_sums(sum_cos, sum_sin, theta.size());
}

OrderParameter order_parameter_from_sincos(std::span<const double> sin_theta,
                                           std::span<const double> cos_theta) {
    if (sin_theta.empty() || sin_theta.size() != cos_theta.size()) {
        throw InvalidParameterError("order_parameter_from_sincos: bad table sizes");
    }
    double sum_cos = 0.0;
    double sum_sin = 0.0;
    for (std::size_t j = 0; j < sin_theta.size(); ++j) {
        sum_cos += cos_theta[j];
        sum_sin += sin_theta[j];
    }
    return from_sums(sum_cos, sum_sin, sin_theta.size());
}

std::pair<double, double> tail_stats(std::span<const double> r_series, long tail) {
    if (tail < 1 || tail > static_cast<long>(r_series.size())) {
        throw InvalidParameterError("tail_stats: tail must lie in [1, series length]");
    }
    const std::size_t start = r_series.size() - static_cast<std::size_t>(tail);
    double mean = 0.0;
    for (std::size_t i = start; i < r_series.size(); ++i) {
        mean += r_series[i];
    }
    mean /= static_cast<double>(tail);
    double var = 0.0;
    for (std::size_t i = start; i < r_series.size(); ++i) {
        const double d = r_series[i] - mean;
        var += d * d;
    }
    var /= static_cast<double>(tail);  // population variance
    return {mean, std::sqrt(var)};
}

std::vector<double> dR_dK(std::span<const double> k_values, std::span<const double> r_values) {
    const std::size_t n = k_values.size();
    if (n < 3) {
        throw InvalidParameterError("dR_dK: need at least 3 grid points");
    }
    if (r_values.size() != n) {
        throw InvalidParameterError("dR_dK: k and r lengths differ");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(k_values[i] > k_values[i - 1])) {
            throw InvalidParameterError("dR_dK: k grid must be strictly ascending");
        }
    }
    std::vector<double> deriv(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Three-point stencil {m, c, p}, clamped to the grid at the ends;
        // differentiate the Lagrange quadratic through it at k_values[i].
        const std::size_t c = (i == 0) ? 1 : (i == n - 1 ? n - 2 : i);
        const std::size_t m = c - 1;
        const std::size_t p = c + 1;
        const double xm = k_values[m], xc = k_values[c], xp = k_values[p];
        const double x = k_values[i];
        const double wm = (2.0 * x - xc - xp) / ((xm - xc) * (xm - xp));
        const double wc = (2.0 * x - xm - xp) / ((xc - xm) * (xc - xp));
        const double wp = (2.0 * x - xm - xc) / ((xp - xm) * (xp - xc));
        deriv[i] = wm * r_values[m] + wc * r_values[c] + wp * r_values[p];
    }
    return deriv;
}

}  // namespace kuranet
