#include "kuranet/integrate.hpp"

#include <cmath>
#include <string>

#include "kuranet/errors.hpp"
#include "kuranet/observe.hpp"

namespace kuranet {

namespace {

constexpr double kBlowupLimit = 1e6;

// The vector field is bounded by max|omega| + K, so any velocity beyond
// the limit (or NaN, which fails the comparison) signals a defect.
void check_velocity(std::span<const double> v, long step_index) {
    for (double x : v) {
        if (!(std::abs(x) <= kBlowupLimit)) {
            throw NumericalBlowupError(
                "integration blew up at step " + std::to_string(step_index) +
                    ": |dtheta/dt| exceeds " + std::to_string(kBlowupLimit),
                step_index);
        }
    }
}

// Stage evaluator holding reusable scratch so the hot loop never allocates.
struct Advancer {
    const Graph* g;
    std::span<const double> omega;
    double k;
    CouplingForm form;
    detail::RhsScratch stage_scratch;
    std::vector<double> k1, k2, k3, k4, tmp;

    Advancer(const Graph* g_, std::span<const double> omega_, const CouplingSpec& cs)
        : g(g_), omega(omega_), k(cs.k), form(cs.form) {
        const std::size_t n = omega.size();
        k1.resize(n);
        k2.resize(n);
        k3.resize(n);
        k4.resize(n);
        tmp.resize(n);
    }

    void eval(const detail::RhsScratch& s, std::span<double> out) const {
        if (form == CouplingForm::network) {
            detail::rhs_network_from_sincos(*g, s, omega, k, out);
        } else {
            detail::rhs_meanfield_from_sincos(s, omega, k, out);
        }
    }

    // Advances theta in place by one step. `cur` must hold the sin/cos
    // tables of the incoming state; stage 1 reuses them.
    void advance(std::vector<double>& theta, const detail::RhsScratch& cur,
                 double dt, Scheme scheme, long step_index) {
        const std::size_t n = theta.size();
        eval(cur, k1);
        check_velocity(k1, step_index);
        if (scheme == Scheme::euler) {
            for (std::size_t i = 0; i < n; ++i) {
                theta[i] += dt * k1[i];
            }
            return;
        }
        const double half = 0.5 * dt;
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = theta[i] + half * k1[i];
        }
        stage_scratch.fill(tmp);
        eval(stage_scratch, k2);
        check_velocity(k2, step_index);
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = theta[i] + half * k2[i];
        }
        stage_scratch.fill(tmp);
        eval(stage_scratch, k3);
        check_velocity(k3, step_index);
        for (std::size_t i = 0; i < n; ++i) {
            tmp[i] = theta[i] + dt * k3[i];
        }
        stage_scratch.fill(tmp);
        eval(stage_scratch, k4);
        check_velocity(k4, step_index);
        const double sixth = dt / 6.0;
        for (std::size_t i = 0; i < n; ++i) {
            theta[i] += sixth * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        }
    }
};

void validate_config(const SimConfig& cfg) {
    if (!(cfg.dt > 0.0)) {
        throw InvalidParameterError("run: dt must be > 0");
    }
    if (cfg.steps < 1) {
        throw InvalidParameterError("run: steps must be >= 1");
    }
    if (cfg.tail < 1 || cfg.tail > cfg.steps) {
        throw InvalidParameterError("run: tail must satisfy 1 <= tail <= steps");
    }
}

}  // namespace

std::vector<double> step(const RhsFn& rhs, std::span<const double> theta,
                         double dt, Scheme scheme, long step_index) {
    if (!(dt > 0.0)) {
        throw InvalidParameterError("step: dt must be > 0");
    }
    const std::size_t n = theta.size();
    auto eval = [&](std::span<const double> state) {
        std::vector<double> v = rhs(state);
        if (v.size() != n) {
            throw InvalidParameterError("step: rhs returned a vector of wrong length");
        }
        check_velocity(v, step_index);
        return v;
    };
    std::vector<double> out(n);
    std::vector<double> k1 = eval(theta);
    if (scheme == Scheme::euler) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = theta[i] + dt * k1[i];
        }
        return out;
    }
    const double half = 0.5 * dt;
    std::vector<double> tmp(n);
    for (std::size_t i = 0; i < n; ++i) {
        tmp[i] = theta[i] + half * k1[i];
    }
    std::vector<double> k2 = eval(tmp);
    for (std::size_t i = 0; i < n; ++i) {
        tmp[i] = theta[i] + half * k2[i];
    }
    std::vector<double> k3 = eval(tmp);
    for (std::size_t i = 0; i < n; ++i) {
        tmp[i] = theta[i] + dt * k3[i];
    }
    std::vector<double> k4 = eval(tmp);
    const double sixth = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = theta[i] + sixth * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
    return out;
}

RunSummary run(const Graph& g, Ensemble e, const SimConfig& cfg) {
    validate_config(cfg);
    const int n = e.n();
    if (n < 1) {
        throw InvalidParameterError("run: ensemble is empty");
    }
    if (static_cast<int>(e.omega.size()) != n) {
        throw InvalidParameterError("run: theta and omega lengths differ");
    }
    if (cfg.coupling.form == CouplingForm::network && g.n() != n) {
        throw InvalidParameterError("run: graph size does not match ensemble size");
    }

    RunSummary out;
    out.r_series.reserve(cfg.steps + 1);
    out.psi_series.reserve(cfg.steps + 1);

    detail::RhsScratch cur;  // tables of the current state, shared by the
                             // order parameter and the first stage
    cur.fill(e.theta);
    auto record = [&] {
        OrderParameter op = order_parameter_from_sincos(cur.sin_theta, cur.cos_theta);
        out.r_series.push_back(op.r);
        out.psi_series.push_back(op.psi);
    };
    record();

    if (cfg.coupling.k == 0.0) {
        // With no coupling the RHS is the constant omega, so every stage
        // derivative coincides and both schemes reduce to theta += dt*omega.
        for (long s = 1; s <= cfg.steps; ++s) {
            for (int i = 0; i < n; ++i) {
                e.theta[i] += cfg.dt * e.omega[i];
            }
            cur.fill(e.theta);
            record();
        }
    } else {
        Advancer adv(&g, e.omega, cfg.coupling);
        for (long s = 1; s <= cfg.steps; ++s) {
            adv.advance(e.theta, cur, cfg.dt, cfg.scheme, s);
            cur.fill(e.theta);
            record();
        }
    }

    auto [mean, sd] = tail_stats(out.r_series, cfg.tail);
    out.r_mean = mean;
    out.r_std = sd;
    out.psi_final = out.psi_series.back();
    out.theta_final = std::move(e.theta);
    return out;
}

}  // namespace kuranet
