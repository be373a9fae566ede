#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kuranet/integrate.hpp"

namespace kuranet {

enum class PPolicy { threshold_only, ladder };

/// Grid/orchestration settings for a full (N, p, K, replicate) campaign.
/// sim.coupling.k is ignored: the coupling sweep supplies K from the grid.
/// workers is an execution hint only; the result table is identical for
/// any worker count.
struct SweepConfig {
    std::vector<int> sizes{50, 100, 200};
    double k_max = 1.0;
    int k_steps = 100;
    PPolicy p_policy = PPolicy::threshold_only;
    bool include_complete = false;  // append p = 1 when the policy grid lacks it
    int replicates = 10;
    SimConfig sim;
    double freq_mean = 0.0;
    double freq_sigma = 0.1;
    std::uint64_t seed = 12345;
    int workers = 1;
    bool timing = false;  // when false wall_s is written as 0 so outputs are byte-stable
    int max_attempts = 10000;  // rejection cap for connectivity-conditioned generation
};

struct ResultRow {
    int n = 0;
    double p = 0.0;
    double k = 0.0;
    int rep = 0;
    double r_mean = 0.0;
    double r_std = 0.0;
    long edges = 0;
    double wall_s = 0.0;
};

/// Rows are unique on (n, p, k, rep) and kept in that ascending order.
struct ResultTable {
    std::vector<ResultRow> rows;
};

struct KcEstimate {
    double k_c = 0.0;
    std::vector<double> k_values;
    std::vector<double> variation_by_k;
    std::vector<double> grand_mean_by_k;
    std::string method = "min-variation-across-N";
};

/// k_steps + 1 equally spaced couplings {0, k_max/k_steps, ..., k_max}.
std::vector<double> k_grid(double k_max, int k_steps);

/// 11 probabilities from the connectivity threshold of n to 1 inclusive,
/// equally spaced; the last entry is exactly 1.
std::vector<double> p_grid(int n);

/// Small preset: sizes {50, 100, 200}, 5 replicates, threshold plus the
/// complete graph. Minutes of runtime.
SweepConfig desk_preset();

/// Full-scale preset: sizes up to 1000, the 11-rung p ladder, 10
/// replicates. Multi-hour runtime; the CLI warns before starting it.
SweepConfig full_preset();

/// Runs every (n, p, k, replicate) cell. Graph and ensemble are fixed per
/// (n, p, replicate) while K varies; generation is connectivity-conditioned
/// exactly when p equals the threshold of n. Row order is canonical
/// regardless of scheduling.
ResultTable run_sweep(const SweepConfig& cfg);

/// Finite-size estimate of the critical coupling: per K, the variation
/// metric is the range across sizes of the replicate-mean R; k_c minimizes
/// it within the transition window (grand-mean R in [0.15, 0.85]), ties
/// toward smaller K. Rows whose n is not in `sizes` are ignored; each kept
/// n must carry a single p and the full common K grid.
KcEstimate estimate_kc(const ResultTable& table, const std::vector<int>& sizes);

}  // namespace kuranet
