#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kuranet/graph.hpp"
#include "kuranet/model.hpp"

namespace kuranet {

enum class Scheme { euler, rk4 };

/// Fixed-step integration settings. Defaults match the study protocol:
/// 5000 steps of 0.1 s with the last 1000 recorded values averaged.
struct SimConfig {
    double dt = 0.1;
    long steps = 5000;
    long tail = 1000;
    Scheme scheme = Scheme::rk4;
    CouplingSpec coupling;
};

/// Aggregates of one run. r_series[i] (and psi_series[i]) is the order
/// parameter at t = i * dt; index 0 is the initial condition, so the
/// vectors hold steps + 1 entries. r_mean and r_std are the mean and
/// population standard deviation of the final `tail` entries. theta_final
/// holds the unwrapped phases after the last step.
struct RunSummary {
    double r_mean = 0.0;
    double r_std = 0.0;
    double psi_final = 0.0;
    std::vector<double> r_series;
    std::vector<double> psi_series;
    std::vector<double> theta_final;
};

using RhsFn = std::function<std::vector<double>(std::span<const double>)>;

/// One explicit step of the requested scheme applied to an arbitrary
/// autonomous RHS. Returns the new state; `theta` is not modified.
/// step_index only labels a potential blowup error.
std::vector<double> step(const RhsFn& rhs, std::span<const double> theta,
                         double dt, Scheme scheme, long step_index = 0);

/// Integrates the ensemble for cfg.steps steps, recording the order
/// parameter at every recorded state. The graph is ignored when
/// cfg.coupling.form is meanfield. Phases are not wrapped mod 2*pi.
RunSummary run(const Graph& g, Ensemble e, const SimConfig& cfg);

}  // namespace kuranet
