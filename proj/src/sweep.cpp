#include "kuranet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "kuranet/errors.hpp"
#include "kuranet/graph.hpp"

namespace kuranet {

std::vector<double> k_grid(double k_max, int k_steps) {
    if (!(k_max > 0.0)) {
        throw InvalidParameterError("k_grid: k_max must be > 0");
    }
    if (k_steps < 2) {
        throw InvalidParameterError("k_grid: k_steps must be >= 2");
    }
    std::vector<double> ks(k_steps + 1);
    for (int i = 0; i <= k_steps; ++i) {
        ks[i] = k_max * static_cast<double>(i) / static_cast<double>(k_steps);
    }
    return ks;
}

std::vector<double> p_grid(int n) {
    const double pc = connectivity_threshold(n);
    const double dp = (1.0 - pc) / 10.0;
    std::vector<double> ps(11);
    for (int i = 0; i < 11; ++i) {
        ps[i] = pc + static_cast<double>(i) * dp;
    }
    ps[0] = pc;   // exact endpoints regardless of rounding
    ps[10] = 1.0;
    return ps;
}

SweepConfig desk_preset() {
    SweepConfig cfg;
    cfg.sizes = {50, 100, 200};
    cfg.replicates = 5;
    cfg.p_policy = PPolicy::threshold_only;
    cfg.include_complete = true;
    return cfg;
}

SweepConfig full_preset() {
    SweepConfig cfg;
    cfg.sizes = {50, 100, 500, 1000};
    cfg.replicates = 10;
    cfg.p_policy = PPolicy::ladder;
    cfg.include_complete = false;  // the ladder already ends at p = 1
    return cfg;
}

namespace {

std::vector<double> policy_p_values(const SweepConfig& cfg, int n) {
    std::vector<double> ps;
    if (cfg.p_policy == PPolicy::threshold_only) {
        ps.push_back(connectivity_threshold(n));
    } else {
        ps = p_grid(n);
    }
    if (cfg.include_complete && ps.back() != 1.0) {
        ps.push_back(1.0);
    }
    return ps;
}

void validate(const SweepConfig& cfg) {
    if (cfg.sizes.empty()) {
        throw InvalidParameterError("run_sweep: sizes must be nonempty");
    }
    for (std::size_t i = 0; i + 1 < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] >= cfg.sizes[i + 1]) {
            throw InvalidParameterError("run_sweep: sizes must be strictly ascending");
        }
    }
    for (int n : cfg.sizes) {
        if (n < 2) {
            throw InvalidParameterError("run_sweep: every size must be >= 2");
        }
    }
    if (cfg.replicates < 1) {
        throw InvalidParameterError("run_sweep: replicates must be >= 1");
    }
    if (cfg.max_attempts < 1) {
        throw InvalidParameterError("run_sweep: max_attempts must be >= 1");
    }
    if (!(cfg.freq_sigma >= 0.0)) {
        throw InvalidParameterError("run_sweep: freq_sigma must be >= 0");
    }
}

// One task = one (n, p, replicate) column: a fixed graph and ensemble
// integrated once per grid coupling. Coarser than per-K tasks, which keeps
// large graphs from piling up in memory and matches the per-column seed
// derivation.
struct Task {
    int n_idx;
    int p_idx;
    int rep;
    int n;
    double p;
    bool conditioned;
    std::size_t row_base;  // rows go to row_base + k_idx * replicates + rep
};

std::string task_key(const Task& t, double k, bool have_k) {
    std::ostringstream os;
    os << "n=" << t.n << " p=" << t.p;
    if (have_k) {
        os << " k=" << k;
    }
    os << " rep=" << t.rep;
    return os.str();
}

}  // namespace

ResultTable run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<double> ks = k_grid(cfg.k_max, cfg.k_steps);
    const std::size_t nk = ks.size();
    const std::size_t reps = static_cast<std::size_t>(cfg.replicates);

    std::vector<Task> tasks;
    std::size_t total_rows = 0;
    for (std::size_t ni = 0; ni < cfg.sizes.size(); ++ni) {
        const int n = cfg.sizes[ni];
        const double pc = connectivity_threshold(n);
        const std::vector<double> ps = policy_p_values(cfg, n);
        for (std::size_t pi = 0; pi < ps.size(); ++pi) {
            for (int rep = 0; rep < cfg.replicates; ++rep) {
                Task t;
                t.n_idx = static_cast<int>(ni);
                t.p_idx = static_cast<int>(pi);
                t.rep = rep;
                t.n = n;
                t.p = ps[pi];
                t.conditioned = (ps[pi] == pc);
                t.row_base = total_rows + pi * nk * reps + rep;
                tasks.push_back(t);
            }
        }
        total_rows += ps.size() * nk * reps;
    }

    ResultTable table;
    table.rows.resize(total_rows);

    const RngStream root(cfg.seed);
    std::atomic<std::size_t> next{0};
    std::mutex fail_mu;
    // first failure in task order wins, so the reported key is scheduling-independent
    std::size_t fail_idx = tasks.size();
    std::string fail_key;
    std::string fail_what;

    auto record_failure = [&](std::size_t idx, const std::string& key, const std::string& what) {
        std::lock_guard<std::mutex> lock(fail_mu);
        if (idx < fail_idx) {
            fail_idx = idx;
            fail_key = key;
            fail_what = what;
        }
    };

    auto exec = [&](std::size_t idx) {
        const Task& t = tasks[idx];
        const RngStream base =
            root.derive(t.n_idx).derive(t.p_idx).derive(3 + t.rep);
        double k_ctx = 0.0;
        bool have_k = false;
        try {
            Graph g;
            if (t.conditioned) {
                g = gen_connected_at_threshold(t.n, base.derive(0), cfg.max_attempts);
            } else {
                RngStream gs = base.derive(0);
                g = gen_er(t.n, t.p, gs);
            }
            RngStream freq = base.derive(1);
            RngStream phase = base.derive(2);
            const Ensemble e =
                init_ensemble(t.n, freq, phase, cfg.freq_mean, cfg.freq_sigma);

            for (std::size_t ki = 0; ki < nk; ++ki) {
                k_ctx = ks[ki];
                have_k = true;
                SimConfig sim = cfg.sim;
                sim.coupling.k = ks[ki];
                const auto t0 = std::chrono::steady_clock::now();
                const RunSummary s = run(g, e, sim);
                const auto t1 = std::chrono::steady_clock::now();
                ResultRow& row = table.rows[t.row_base + ki * reps];
                row.n = t.n;
                row.p = t.p;
                row.k = ks[ki];
                row.rep = t.rep;
                row.r_mean = s.r_mean;
                row.r_std = s.r_std;
                row.edges = static_cast<long>(g.edge_count());
                row.wall_s = cfg.timing
                                 ? std::chrono::duration<double>(t1 - t0).count()
                                 : 0.0;
            }
        } catch (const std::exception& ex) {
            record_failure(idx, task_key(t, k_ctx, have_k), ex.what());
        }
    };

    int workers = cfg.workers;
    if (workers < 1) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), tasks.size()));

    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            exec(i);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) {
                        return;
                    }
                    exec(i);
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    if (fail_idx < tasks.size()) {
        throw IncompleteSweepError(
            "sweep task failed (" + fail_key + "): " + fail_what, fail_key);
    }
    return table;
}

KcEstimate estimate_kc(const ResultTable& table, const std::vector<int>& sizes) {
    std::vector<int> ns = sizes;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.size() < 2) {
        throw InvalidParameterError("estimate_kc: need at least 2 distinct sizes");
    }

    struct Cell {
        double sum = 0.0;
        long count = 0;
    };
    // exact double keys: every row's k originates from the same grid values
    std::map<int, std::map<double, Cell>> by_n;
    std::map<int, double> p_of_n;
    for (const ResultRow& row : table.rows) {
        if (!std::binary_search(ns.begin(), ns.end(), row.n)) {
            continue;
        }
        auto [it, inserted] = p_of_n.try_emplace(row.n, row.p);
        if (!inserted && it->second != row.p) {
            throw InvalidParameterError(
                "estimate_kc: multiple p values present for N=" +
                std::to_string(row.n) + "; filter the table to one p per size");
        }
        Cell& c = by_n[row.n][row.k];
        c.sum += row.r_mean;
        c.count += 1;
    }

    for (int n : ns) {
        if (by_n.find(n) == by_n.end()) {
            throw IncompleteTableError("estimate_kc: no rows for N=" +
                                       std::to_string(n));
        }
    }

    const std::map<double, Cell>& first = by_n.begin()->second;
    std::vector<double> grid;
    grid.reserve(first.size());
    for (const auto& [k, cell] : first) {
        grid.push_back(k);
    }
    for (const auto& [n, cells] : by_n) {
        if (cells.size() != grid.size()) {
            throw IncompleteTableError(
                "estimate_kc: K grid size differs for N=" + std::to_string(n));
        }
        std::size_t i = 0;
        for (const auto& [k, cell] : cells) {
            if (k != grid[i]) {
                throw IncompleteTableError(
                    "estimate_kc: K grids are not identical across sizes (N=" +
                    std::to_string(n) + ")");
            }
            ++i;
        }
    }

    KcEstimate est;
    est.k_values = grid;
    est.variation_by_k.resize(grid.size());
    est.grand_mean_by_k.resize(grid.size());

    bool found = false;
    double best_var = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double lo = 2.0;
        double hi = -1.0;
        double acc = 0.0;
        for (const auto& [n, cells] : by_n) {
            const Cell& c = cells.at(grid[i]);
            const double mean = c.sum / static_cast<double>(c.count);
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
            acc += mean;
        }
        const double grand = acc / static_cast<double>(by_n.size());
        est.variation_by_k[i] = hi - lo;
        est.grand_mean_by_k[i] = grand;
        if (grand >= 0.15 && grand <= 0.85) {
            if (!found || est.variation_by_k[i] < best_var) {
                found = true;
                best_var = est.variation_by_k[i];
                est.k_c = grid[i];
            }
        }
    }
    if (!found) {
        throw NoTransitionError(
            "estimate_kc: no grid point has grand-mean R in [0.15, 0.85]");
    }
    return est;
}

}  // namespace kuranet
