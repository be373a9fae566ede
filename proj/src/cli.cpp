#include "kuranet/cli.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kuranet/config.hpp"
#include "kuranet/errors.hpp"
#include "kuranet/graph.hpp"
#include "kuranet/integrate.hpp"
#include "kuranet/model.hpp"
#include "kuranet/result_io.hpp"
#include "kuranet/svg_plot.hpp"
#include "kuranet/sweep.hpp"

namespace kuranet {

namespace {

// ---------- value parsing shared by config files and flags ----------

long parse_long_value(const std::string& v, const std::string& key) {
    const char* begin = v.c_str();
    char* end = nullptr;
    const long x = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') {
        throw InvalidParameterError("key '" + key + "': expected an integer, got '" + v + "'");
    }
    return x;
}

int parse_int_value(const std::string& v, const std::string& key) {
    return static_cast<int>(parse_long_value(v, key));
}

std::uint64_t parse_u64_value(const std::string& v, const std::string& key) {
    const char* begin = v.c_str();
    char* end = nullptr;
    const unsigned long long x = std::strtoull(begin, &end, 10);
    if (end == begin || *end != '\0' || v.find('-') != std::string::npos) {
        throw InvalidParameterError("key '" + key +
                                    "': expected an unsigned integer, got '" + v + "'");
    }
    return x;
}

double parse_double_value(const std::string& v, const std::string& key) {
    const char* begin = v.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(x)) {
        throw InvalidParameterError("key '" + key + "': expected a number, got '" + v + "'");
    }
    return x;
}

bool parse_bool_value(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off") {
        return false;
    }
    throw InvalidParameterError("key '" + key + "': expected true/false, got '" + v + "'");
}

std::vector<int> parse_sizes_value(const std::string& v, const std::string& key) {
    std::vector<int> sizes;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        sizes.push_back(parse_int_value(item, key));
    }
    if (sizes.empty()) {
        throw InvalidParameterError("key '" + key + "': expected a comma-separated list");
    }
    return sizes;
}

Scheme parse_scheme_value(const std::string& v) {
    if (v == "rk4") {
        return Scheme::rk4;
    }
    if (v == "euler") {
        return Scheme::euler;
    }
    throw InvalidParameterError("scheme must be 'rk4' or 'euler', got '" + v + "'");
}

PPolicy parse_policy_value(const std::string& v) {
    if (v == "threshold_only") {
        return PPolicy::threshold_only;
    }
    if (v == "ladder") {
        return PPolicy::ladder;
    }
    throw InvalidParameterError("p_policy must be 'threshold_only' or 'ladder', got '" +
                                v + "'");
}

CouplingForm parse_form_value(const std::string& v) {
    if (v == "network") {
        return CouplingForm::network;
    }
    if (v == "meanfield") {
        return CouplingForm::meanfield;
    }
    throw InvalidParameterError("coupling_form must be 'network' or 'meanfield', got '" +
                                v + "'");
}

std::string format_sizes(const std::vector<int>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(sizes[i]);
    }
    return s;
}

// ---------- sweep settings and the config-key registry ----------

struct SweepSettings {
    SweepConfig sweep = desk_preset();  // the CLI starts from the desk preset
    std::string out_dir = "out";
    bool workers_set = false;  // true once a flag or config key pinned it
};

struct KeyDef {
    const char* name;
    void (*apply)(SweepSettings&, const std::string&);
    std::string (*format)(const SweepSettings&);
};

const std::array<KeyDef, 18>& key_registry() {
    static const std::array<KeyDef, 18> keys = {{
        {"seed",
         [](SweepSettings& s, const std::string& v) { s.sweep.seed = parse_u64_value(v, "seed"); },
         [](const SweepSettings& s) { return std::to_string(s.sweep.seed); }},
        {"sizes",
         [](SweepSettings& s, const std::string& v) { s.sweep.sizes = parse_sizes_value(v, "sizes"); },
         [](const SweepSettings& s) { return format_sizes(s.sweep.sizes); }},
        {"k_max",
         [](SweepSettings& s, const std::string& v) { s.sweep.k_max = parse_double_value(v, "k_max"); },
         [](const SweepSettings& s) { return format_g9(s.sweep.k_max); }},
        {"k_steps",
         [](SweepSettings& s, const std::string& v) { s.sweep.k_steps = parse_int_value(v, "k_steps"); },
         [](const SweepSettings& s) { return std::to_string(s.sweep.k_steps); }},
        {"p_policy",
         [](SweepSettings& s, const std::string& v) { s.sweep.p_policy = parse_policy_value(v); },
         [](const SweepSettings& s) {
             return std::string(s.sweep.p_policy == PPolicy::threshold_only ? "threshold_only"
                                                                            : "ladder");
         }},
        {"include_complete",
         [](SweepSettings& s, const std::string& v) {
             s.sweep.include_complete = parse_bool_value(v, "include_complete");
         },
         [](const SweepSettings& s) {
             return std::string(s.sweep.include_complete ? "true" : "false");
         }},
        {"replicates",
         [](SweepSettings& s, const std::string& v) { s.sweep.replicates = parse_int_value(v, "replicates"); },
         [](const SweepSettings& s) { return std::to_string(s.sweep.replicates); }},
        {"dt",
         [](SweepSettings& s, const std::string& v) { s.sweep.sim.dt = parse_double_value(v, "dt"); },
         [](const SweepSettings& s) { return format_g9(s.sweep.sim.dt); }},
        {"steps",
         [](SweepSettings& s, const std::string& v) { s.sweep.sim.steps = parse_long_value(v, "steps"); },
         [](const SweepSettings& s) { return std::to_string(s.sweep.sim.steps); }},
        {"tail",
         [](SweepSettings& s, const std::string& v) { s.sweep.sim.tail = parse_long_value(v, "tail"); },
         [](const SweepSettings& s) { return std::to_string(s.sweep.sim.tail); }},
        {"scheme",
         [](SweepSettings& s, const std::string& v) { s.sweep.sim.scheme = parse_scheme_value(v); },
         [](const SweepSettings& s) {
             return std::string(s.sweep.sim.scheme == Scheme::rk4 ? "rk4" : "euler");
         }},
        {"coupling_form",
         [](SweepSettings& s, const std::string& v) { s.sweep.sim.coupling.form = parse_form_value(v); },
         [](const SweepSettings& s) {
             return std::string(s.sweep.sim.coupling.form == CouplingForm::network
                                    ? "network"
                                    : "meanfield");
         }},
        {"freq_mean",
         [](SweepSettings& s, const std::string& v) { s.sweep.freq_mean = parse_double_value(v, "freq_mean"); },
         [](const SweepSettings& s) { return format_g9(s.sweep.freq_mean); }},
        {"freq_sigma",
         [](SweepSettings& s, const std::string& v) { s.sweep.freq_sigma = parse_double_value(v, "freq_sigma"); },
         [](const SweepSettings& s) { return format_g9(s.sweep.freq_sigma); }},
        {"workers",
         [](SweepSettings& s, const std::string& v) {
             s.sweep.workers = parse_int_value(v, "workers");
             s.workers_set = true;
         },
         [](const SweepSettings& s) { return std::to_string(s.sweep.workers); }},
        {"timing",
         [](SweepSettings& s, const std::string& v) { s.sweep.timing = parse_bool_value(v, "timing"); },
         [](const SweepSettings& s) { return std::string(s.sweep.timing ? "true" : "false"); }},
        {"max_attempts",
         [](SweepSettings& s, const std::string& v) { s.sweep.max_attempts = parse_int_value(v, "max_attempts"); },
         [](const SweepSettings& s) { return std::to_string(s.sweep.max_attempts); }},
        {"out_dir",
         [](SweepSettings& s, const std::string& v) { s.out_dir = v; },
         [](const SweepSettings& s) { return s.out_dir; }},
    }};
    return keys;
}

void apply_config_key(SweepSettings& st, const std::string& key, const std::string& value) {
    for (const KeyDef& def : key_registry()) {
        if (key == def.name) {
            def.apply(st, value);
            return;
        }
    }
    throw InvalidParameterError("unknown config key '" + key + "'");
}

void apply_config_file(SweepSettings& st, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameterError("cannot open config file '" + path + "'");
    }
    for (const auto& [key, value] : parse_config(in)) {
        apply_config_key(st, key, value);
    }
}

void write_effective_config(const SweepSettings& st, std::ostream& out) {
    out << "# effective configuration\n";
    for (const KeyDef& def : key_registry()) {
        out << def.name << " = " << def.format(st) << '\n';
    }
}

int resolve_env_workers() {
    const char* env = std::getenv("KURAMOTO_WORKERS");
    if (env == nullptr || *env == '\0') {
        return 0;  // auto
    }
    const int w = parse_int_value(env, "KURAMOTO_WORKERS");
    if (w < 0) {
        throw InvalidParameterError("KURAMOTO_WORKERS must be >= 0");
    }
    return w;
}

// ---------- shared row filtering for kc and plot ----------

ResultTable filter_table(const ResultTable& in, const std::optional<double>& p_sel,
                         bool threshold, bool complete, const std::optional<int>& n_sel) {
    ResultTable out;
    for (const ResultRow& row : in.rows) {
        if (n_sel && row.n != *n_sel) {
            continue;
        }
        if (p_sel && !(std::abs(row.p - *p_sel) <= 1e-9)) {
            continue;
        }
        if (complete && row.p != 1.0) {
            continue;
        }
        if (threshold &&
            std::abs(row.p - connectivity_threshold(row.n)) > 1e-8) {
            continue;
        }
        out.rows.push_back(row);
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidParameterError("cannot open output file '" + path + "'");
    }
    return f;
}

ResultTable load_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidParameterError("cannot open input file '" + path + "'");
    }
    return read_result_csv(f);
}

// Rethrows the in-flight exception and translates it to an exit code.
int map_exception(std::ostream& err) {
    try {
        throw;
    } catch (const RejectionExhaustedError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const NumericalBlowupError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const IncompleteSweepError& e) {
        err << "error: " << e.what() << '\n';
        err << "offending key: " << e.key << '\n';
        return 5;
    } catch (const NoTransitionError& e) {
        err << "error: " << e.what() << '\n';
        return 6;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kuramoto oscillators on random networks: simulate, sweep, estimate, plot"};
    app.require_subcommand(1);

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Integrate one system and print tail-averaged order-parameter statistics");
    int sim_n = 0;
    double sim_p = 0.0;
    double sim_k = 0.0;
    std::uint64_t sim_seed = 12345;
    std::string sim_scheme = "rk4";
    double sim_dt = 0.1;
    long sim_steps = 5000;
    long sim_tail = 1000;
    double sim_fmean = 0.0;
    double sim_fsigma = 0.1;
    int sim_max_attempts = 10000;
    bool sim_threshold = false;
    bool sim_meanfield = false;
    std::string sim_trace;
    std::string sim_graph_in;
    std::string sim_graph_out;
    auto* sim_n_opt = sim_cmd->add_option("--n", sim_n, "Number of oscillators");
    auto* sim_p_opt = sim_cmd->add_option("--p", sim_p, "Edge probability in [0, 1]");
    auto* sim_thr = sim_cmd->add_flag(
        "--threshold", sim_threshold,
        "Use p = ln(N)/N with connectivity-conditioned generation");
    sim_p_opt->excludes(sim_thr);
    sim_cmd->add_option("--k", sim_k, "Coupling constant K")->required();
    sim_cmd->add_option("--seed", sim_seed, "Master seed");
    sim_cmd->add_option("--scheme", sim_scheme, "Integration scheme: rk4 or euler");
    sim_cmd->add_option("--dt", sim_dt, "Time step in seconds");
    sim_cmd->add_option("--steps", sim_steps, "Total iterations");
    sim_cmd->add_option("--tail", sim_tail, "Iterations averaged for R");
    sim_cmd->add_option("--freq-mean", sim_fmean, "Mean natural frequency");
    sim_cmd->add_option("--freq-sigma", sim_fsigma, "Std of natural frequencies");
    sim_cmd->add_option("--max-attempts", sim_max_attempts,
                        "Rejection cap for --threshold generation");
    sim_cmd->add_flag("--meanfield", sim_meanfield,
                      "All-to-all coupling with 1/N normalization (ignores the graph)");
    sim_cmd->add_option("--trace", sim_trace, "Write a step,t,R,psi trace CSV here");
    auto* sim_gin = sim_cmd->add_option("--graph-in", sim_graph_in,
                                        "Load the graph from an edge-list file instead of sampling");
    sim_cmd->add_option("--graph-out", sim_graph_out,
                        "Dump the simulated graph as an edge-list file");
    sim_gin->excludes(sim_p_opt);
    sim_gin->excludes(sim_thr);

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Run the (N, p, K, replicate) campaign and write a result CSV");
    std::string sw_config;
    bool sw_desk = false;
    bool sw_full = false;
    std::string sw_out_dir;
    std::string sw_sizes;
    std::uint64_t sw_seed = 0;
    double sw_k_max = 0.0;
    int sw_k_steps = 0;
    std::string sw_policy;
    bool sw_include_complete = false;
    int sw_replicates = 0;
    double sw_dt = 0.0;
    long sw_steps = 0;
    long sw_tail = 0;
    std::string sw_scheme;
    std::string sw_form;
    double sw_fmean = 0.0;
    double sw_fsigma = 0.0;
    int sw_workers = 0;
    bool sw_timing = false;
    int sw_max_attempts = 0;
    sweep_cmd->add_option("--config", sw_config, "Config file of key = value lines");
    auto* desk_flag = sweep_cmd->add_flag("--desk", sw_desk,
                                          "Desk-scale preset (default): sizes 50,100,200, 5 replicates, "
                                          "threshold and complete graphs");
    auto* full_flag = sweep_cmd->add_flag("--full", sw_full,
                                          "Full-scale preset: sizes up to 1000, 11-rung p ladder, "
                                          "10 replicates (hours of runtime)");
    full_flag->excludes(desk_flag);
    sweep_cmd->add_option("--out", sw_out_dir, "Output directory (default out)");
    auto* o_sizes = sweep_cmd->add_option("--sizes", sw_sizes, "Comma-separated N list");
    auto* o_seed = sweep_cmd->add_option("--seed", sw_seed, "Master seed");
    auto* o_kmax = sweep_cmd->add_option("--k-max", sw_k_max, "Largest coupling");
    auto* o_ksteps = sweep_cmd->add_option("--k-steps", sw_k_steps, "Coupling grid steps");
    auto* o_policy = sweep_cmd->add_option("--p-policy", sw_policy,
                                           "threshold_only or ladder");
    auto* o_inc = sweep_cmd->add_flag("--include-complete,!--no-include-complete",
                                      sw_include_complete, "Also run the p = 1 column");
    auto* o_reps = sweep_cmd->add_option("--replicates", sw_replicates, "Replicates per cell");
    auto* o_dt = sweep_cmd->add_option("--dt", sw_dt, "Time step in seconds");
    auto* o_steps = sweep_cmd->add_option("--steps", sw_steps, "Total iterations");
    auto* o_tail = sweep_cmd->add_option("--tail", sw_tail, "Iterations averaged for R");
    auto* o_scheme = sweep_cmd->add_option("--scheme", sw_scheme, "rk4 or euler");
    auto* o_form = sweep_cmd->add_option("--coupling-form", sw_form, "network or meanfield");
    auto* o_fmean = sweep_cmd->add_option("--freq-mean", sw_fmean, "Mean natural frequency");
    auto* o_fsigma = sweep_cmd->add_option("--freq-sigma", sw_fsigma, "Std of natural frequencies");
    auto* o_workers = sweep_cmd->add_option(
        "--workers", sw_workers, "Worker threads (0 = auto; falls back to KURAMOTO_WORKERS)");
    auto* o_timing = sweep_cmd->add_flag("--timing", sw_timing,
                                         "Record wall-clock seconds per run (makes the CSV "
                                         "timing column nondeterministic)");
    auto* o_maxatt = sweep_cmd->add_option("--max-attempts", sw_max_attempts,
                                           "Rejection cap for conditioned generation");

    // ---- kc ----
    auto* kc_cmd = app.add_subcommand(
        "kc", "Estimate the critical coupling from a result CSV by minimal variation across N");
    std::string kc_input;
    double kc_p = 0.0;
    bool kc_threshold = false;
    bool kc_complete = false;
    std::string kc_sizes;
    std::string kc_out;
    kc_cmd->add_option("--input", kc_input, "Result CSV path")->required();
    auto* kc_p_opt = kc_cmd->add_option("--p", kc_p, "Keep rows with this p");
    auto* kc_thr = kc_cmd->add_flag("--threshold", kc_threshold,
                                    "Keep rows at each size's connectivity threshold");
    auto* kc_comp = kc_cmd->add_flag("--complete", kc_complete, "Keep rows with p = 1");
    kc_p_opt->excludes(kc_thr);
    kc_p_opt->excludes(kc_comp);
    kc_thr->excludes(kc_comp);
    auto* kc_sizes_opt = kc_cmd->add_option(
        "--sizes", kc_sizes, "Comma-separated N list (default: all sizes present)");
    kc_cmd->add_option("--out", kc_out, "Also write the variation profile CSV here");

    // ---- plot ----
    auto* plot_cmd = app.add_subcommand("plot", "Render an SVG chart from a result CSV");
    std::string pl_input;
    std::string pl_kind;
    std::string pl_out;
    int pl_n = 0;
    double pl_p = 0.0;
    bool pl_threshold = false;
    bool pl_complete = false;
    plot_cmd->add_option("--input", pl_input, "Result CSV path")->required();
    plot_cmd->add_option("--kind", pl_kind, "r_vs_k, r_vs_n, or drdk")->required();
    plot_cmd->add_option("--out", pl_out, "Output SVG path (default <kind>.svg)");
    auto* pl_n_opt = plot_cmd->add_option("--n", pl_n, "Keep rows with this size");
    auto* pl_p_opt = plot_cmd->add_option("--p", pl_p, "Keep rows with this p");
    auto* pl_thr = plot_cmd->add_flag("--threshold", pl_threshold,
                                      "Keep rows at each size's connectivity threshold");
    auto* pl_comp = plot_cmd->add_flag("--complete", pl_complete, "Keep rows with p = 1");
    pl_p_opt->excludes(pl_thr);
    pl_p_opt->excludes(pl_comp);
    pl_thr->excludes(pl_comp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sim_cmd->parsed()) {
            const RngStream root(sim_seed);
            Graph g;
            if (!sim_graph_in.empty()) {
                std::ifstream f(sim_graph_in);
                if (!f) {
                    throw InvalidParameterError("cannot open graph file '" + sim_graph_in + "'");
                }
                g = load_edge_list(f);
                sim_n = g.n();
            } else {
                if (sim_n_opt->count() == 0) {
                    throw InvalidParameterError("simulate: --n is required unless --graph-in is given");
                }
                if (sim_threshold) {
                    g = gen_connected_at_threshold(sim_n, root.derive(0), sim_max_attempts);
                } else {
                    if (sim_p_opt->count() == 0) {
                        throw InvalidParameterError("simulate: give --p or --threshold");
                    }
                    RngStream gs = root.derive(0);
                    g = gen_er(sim_n, sim_p, gs);
                }
            }
            RngStream freq = root.derive(1);
            RngStream phase = root.derive(2);
            const Ensemble e = init_ensemble(sim_n, freq, phase, sim_fmean, sim_fsigma);
            SimConfig cfg;
            cfg.dt = sim_dt;
            cfg.steps = sim_steps;
            cfg.tail = sim_tail;
            cfg.scheme = parse_scheme_value(sim_scheme);
            cfg.coupling.k = sim_k;
            cfg.coupling.form = sim_meanfield ? CouplingForm::meanfield : CouplingForm::network;
            const RunSummary s = run(g, e, cfg);
            out << "r_mean = " << format_g9(s.r_mean) << '\n';
            out << "r_std = " << format_g9(s.r_std) << '\n';
            out << "psi_final = " << format_g9(s.psi_final) << '\n';
            if (!sim_trace.empty()) {
                std::ofstream tf = open_output(sim_trace);
                write_trace_csv(s, cfg.dt, tf);
            }
            if (!sim_graph_out.empty()) {
                std::ofstream gf = open_output(sim_graph_out);
                save_edge_list(g, gf);
            }
            return 0;
        }

        if (sweep_cmd->parsed()) {
            SweepSettings st;
            if (sw_full) {
                st.sweep = full_preset();
            }
            if (!sw_config.empty()) {
                apply_config_file(st, sw_config);
            }
            if (!sw_out_dir.empty()) {
                st.out_dir = sw_out_dir;
            }
            if (o_sizes->count()) st.sweep.sizes = parse_sizes_value(sw_sizes, "sizes");
            if (o_seed->count()) st.sweep.seed = sw_seed;
            if (o_kmax->count()) st.sweep.k_max = sw_k_max;
            if (o_ksteps->count()) st.sweep.k_steps = sw_k_steps;
            if (o_policy->count()) st.sweep.p_policy = parse_policy_value(sw_policy);
            if (o_inc->count()) st.sweep.include_complete = sw_include_complete;
            if (o_reps->count()) st.sweep.replicates = sw_replicates;
            if (o_dt->count()) st.sweep.sim.dt = sw_dt;
            if (o_steps->count()) st.sweep.sim.steps = sw_steps;
            if (o_tail->count()) st.sweep.sim.tail = sw_tail;
            if (o_scheme->count()) st.sweep.sim.scheme = parse_scheme_value(sw_scheme);
            if (o_form->count()) st.sweep.sim.coupling.form = parse_form_value(sw_form);
            if (o_fmean->count()) st.sweep.freq_mean = sw_fmean;
            if (o_fsigma->count()) st.sweep.freq_sigma = sw_fsigma;
            if (o_workers->count()) {
                st.sweep.workers = sw_workers;
                st.workers_set = true;
            }
            if (o_timing->count()) st.sweep.timing = sw_timing;
            if (o_maxatt->count()) st.sweep.max_attempts = sw_max_attempts;
            if (!st.workers_set) {
                st.sweep.workers = resolve_env_workers();
            }
            if (sw_full) {
                err << "warning: the full-scale campaign (sizes up to 1000, 11 edge "
                       "probabilities, 10 replicates) typically needs several hours; "
                       "use --desk or --sizes for a shorter run\n";
            }
            std::filesystem::create_directories(st.out_dir);
            const ResultTable table = run_sweep(st.sweep);
            const std::string csv_path = st.out_dir + "/results.csv";
            {
                std::ofstream csv = open_output(csv_path);
                write_result_csv(table, csv);
            }
            {
                std::ofstream cf = open_output(st.out_dir + "/config.txt");
                write_effective_config(st, cf);
            }
            out << "wrote " << table.rows.size() << " rows to " << csv_path << '\n';
            return 0;
        }

        if (kc_cmd->parsed()) {
            ResultTable table = load_table(kc_input);
            table = filter_table(table,
                                 kc_p_opt->count() ? std::optional<double>(kc_p) : std::nullopt,
                                 kc_threshold, kc_complete, std::nullopt);
            std::vector<int> sizes;
            if (kc_sizes_opt->count()) {
                sizes = parse_sizes_value(kc_sizes, "sizes");
            } else {
                std::set<int> ns;
                for (const ResultRow& r : table.rows) {
                    ns.insert(r.n);
                }
                sizes.assign(ns.begin(), ns.end());
            }
            if (sizes.size() < 2) {
                throw InvalidParameterError(
                    "kc: need at least 2 sizes in the table (after filters)");
            }
            const KcEstimate est = estimate_kc(table, sizes);
            out << "k_c = " << format_g9(est.k_c) << '\n';
            out << "method = " << est.method << '\n';
            write_variation_csv(est, out);
            if (!kc_out.empty()) {
                std::ofstream vf = open_output(kc_out);
                write_variation_csv(est, vf);
            }
            return 0;
        }

        // plot
        ResultTable table = load_table(pl_input);
        table = filter_table(table,
                             pl_p_opt->count() ? std::optional<double>(pl_p) : std::nullopt,
                             pl_threshold, pl_complete,
                             pl_n_opt->count() ? std::optional<int>(pl_n) : std::nullopt);
        PlotKind kind;
        if (pl_kind == "r_vs_k") {
            kind = PlotKind::r_vs_k;
        } else if (pl_kind == "r_vs_n") {
            kind = PlotKind::r_vs_n;
        } else if (pl_kind == "drdk") {
            kind = PlotKind::drdk;
        } else {
            throw InvalidParameterError("plot: --kind must be r_vs_k, r_vs_n, or drdk");
        }
        if (pl_out.empty()) {
            pl_out = pl_kind + ".svg";
        }
        std::ofstream svg = open_output(pl_out);
        write_plot_svg(table, kind, svg);
        out << "wrote " << pl_out << '\n';
        return 0;
    } catch (...) {
        return map_exception(err);
    }
}

}  // namespace kuranet
