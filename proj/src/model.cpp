#include "kuranet/model.hpp"

#include <cmath>

#include "kuranet/errors.hpp"

namespace kuranet {

Ensemble init_ensemble(int n, RngStream& freq_stream, RngStream& phase_stream,
                       double freq_mean, double freq_sigma) {
    if (n < 1) {
        throw InvalidParameterError("init_ensemble: n must be >= 1");
    }
    if (!(freq_sigma >= 0.0)) {
        throw InvalidParameterError("init_ensemble: freq_sigma must be >= 0");
    }
    Ensemble e;
    e.omega.reserve(n);
    e.theta.reserve(n);
    for (int i = 0; i < n; ++i) {
        e.omega.push_back(freq_stream.normal(freq_mean, freq_sigma));
    }
    for (int i = 0; i < n; ++i) {
        e.theta.push_back(phase_stream.uniform(0.0, 2.0 * M_PI));
    }
    return e;
}

namespace detail {

void RhsScratch::fill(std::span<const double> theta) {
    sin_theta.resize(theta.size());
    cos_theta.resize(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        sin_theta[i] = std::sin(theta[i]);
        cos_theta[i] = std::cos(theta[i]);
    }
}

void rhs_network_from_sincos(const Graph& g, const RhsScratch& s,
                             std::span<const double> omega, double k,
                             std::span<double> dtheta) {
    const int n = g.n();
    const double* sn = s.sin_theta.data();
    const double* cs = s.cos_theta.data();

    if (k == 0.0) {
        for (int i = 0; i < n; ++i) {
            dtheta[i] = omega[i];
        }
        return;
    }

    if (g.is_complete()) {
        // sum_{j != i} sin(theta_j - theta_i) = S cos(theta_i) - C sin(theta_i)
        // with S = sum sin, C = sum cos (the j = i term vanishes).
        double sum_sin = 0.0;
        double sum_cos = 0.0;
        for (int j = 0; j < n; ++j) {
            sum_sin += sn[j];
            sum_cos += cs[j];
        }
        const double scale = k / static_cast<double>(n - 1);
        for (int i = 0; i < n; ++i) {
            dtheta[i] = omega[i] + scale * (sum_sin * cs[i] - sum_cos * sn[i]);
        }
        return;
    }

    for (int i = 0; i < n; ++i) {
        if (g.degree(i) == 0) {
            throw DegenerateDegreeError(
                "rhs_network: node " + std::to_string(i) +
                    " has degree 0 (K/k_i undefined)",
                i);
        }
        dtheta[i] = 0.0;
    }
    for (const auto& [u, v] : g.edges()) {
        const double t = sn[v] * cs[u] - cs[v] * sn[u];  // sin(theta_v - theta_u)
        dtheta[u] += t;
        dtheta[v] -= t;
    }
    const std::vector<std::uint32_t>& deg = g.degrees();
    for (int i = 0; i < n; ++i) {
        dtheta[i] = omega[i] + (k / static_cast<double>(deg[i])) * dtheta[i];
    }
}

void rhs_meanfield_from_sincos(const RhsScratch& s, std::span<const double> omega,
                               double k, std::span<double> dtheta) {
    const std::size_t n = omega.size();
    const double* sn = s.sin_theta.data();
    const double* cs = s.cos_theta.data();
    double sum_sin = 0.0;
    double sum_cos = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        sum_sin += sn[j];
        sum_cos += cs[j];
    }
    // (K/N) sum_j sin(theta_j - theta_i) = (K/N)(S cos_i - C sin_i)
    //                                    = K R sin(psi - theta_i)
    const double scale = k / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        dtheta[i] = omega[i] + scale * (sum_sin * cs[i] - sum_cos * sn[i]);
    }
}

}  // namespace detail

std::vector<double> rhs_network(const Graph& g, std::span<const double> theta,
                                std::span<const double> omega, double k) {
    if (static_cast<int>(theta.size()) != g.n() || theta.size() != omega.size()) {
        throw InvalidParameterError("rhs_network: vector lengths must match the graph");
    }
    detail::RhsScratch scratch;
    scratch.fill(theta);
    std::vector<double> dtheta(theta.size());
    detail::rhs_network_from_sincos(g, scratch, omega, k, dtheta);
    return dtheta;
}

std::vector<double> rhs_meanfield(std::span<const double> theta,
                                  std::span<const double> omega, double k) {
    if (theta.empty() || theta.size() != omega.size()) {
        throw InvalidParameterError("rhs_meanfield: vectors must be nonempty and equal-length");
    }
    detail::RhsScratch scratch;
    scratch.fill(theta);
    std::vector<double> dtheta(theta.size());
    detail::rhs_meanfield_from_sincos(scratch, omega, k, dtheta);
    return dtheta;
}

}  // namespace kuranet
