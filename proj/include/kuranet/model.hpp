#pragma once

#include <span>
#include <vector>

#include "kuranet/graph.hpp"
#include "kuranet/rng.hpp"

namespace kuranet {

/// Per-oscillator phases (radians) and natural frequencies (rad/s).
struct Ensemble {
    std::vector<double> theta;
    std::vector<double> omega;

    int n() const { return static_cast<int>(theta.size()); }
};

enum class CouplingForm {
    network,    // theta_dot_i = omega_i + (K/k_i) sum_j A_ij sin(theta_j - theta_i)
    meanfield,  // theta_dot_i = omega_i + (K/N)  sum_j      sin(theta_j - theta_i)
};

struct CouplingSpec {
    double k = 0.0;  // coupling constant, >= 0
    CouplingForm form = CouplingForm::network;
};

/// omega_i ~ normal(freq_mean, freq_sigma) from freq_stream, theta_i uniform
/// on [0, 2 pi) from phase_stream. Streams advance; topology streams are
/// untouched, so reseeding one ingredient never perturbs the others.
Ensemble init_ensemble(int n, RngStream& freq_stream, RngStream& phase_stream,
                       double freq_mean = 0.0, double freq_sigma = 0.1);

/// Network-coupled phase velocities. Throws InvalidParameterError on length
/// mismatch and DegenerateDegreeError when some node has degree 0 (the
/// normalization divides by k_i).
std::vector<double> rhs_network(const Graph& g, std::span<const double> theta,
                                std::span<const double> omega, double k);

/// All-to-all phase velocities with 1/N normalization, evaluated in O(n)
/// through the order-parameter identity (algebraically exact).
std::vector<double> rhs_meanfield(std::span<const double> theta,
                                  std::span<const double> omega, double k);

namespace detail {

/// Scratch tables reused across RHS evaluations inside hot loops.
struct RhsScratch {
    std::vector<double> sin_theta;
    std::vector<double> cos_theta;

    void fill(std::span<const double> theta);
};

/// Network RHS given filled sin/cos tables. sin(theta_j - theta_i) expands to
/// sin_j cos_i - cos_j sin_i, so the edge loop is trig-free; each edge is
/// visited once and contributes exactly antisymmetric terms to its endpoints.
/// Complete graphs collapse to the order-parameter identity in O(n).
void rhs_network_from_sincos(const Graph& g, const RhsScratch& s,
                             std::span<const double> omega, double k,
                             std::span<double> dtheta);

/// Mean-field RHS given filled sin/cos tables.
void rhs_meanfield_from_sincos(const RhsScratch& s, std::span<const double> omega,
                               double k, std::span<double> dtheta);

}  // namespace detail

}  // namespace kuranet
