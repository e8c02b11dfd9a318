// Experiment harness for the two-provider peering placement game.
// Subcommands: graph | run | sweep | enumerate | worstlink.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peering/experiment.hpp"

namespace {

using namespace peering;

struct TopologyArgs {
    std::string kind = "ba";  // ba | path | cycle | complete
    std::string graph_file;
    int n = 30;
    int m = 2;
    uint64_t seed = 1;  // BA generator seed (shared with the run seed flag)
};

void add_topology_flags(CLI::App* cmd, TopologyArgs& args) {
    cmd->add_option("--topology", args.kind, "topology kind: ba|path|cycle|complete");
    cmd->add_option("--graph-file", args.graph_file, "edge-list file (overrides --topology)");
    cmd->add_option("--n", args.n, "nodes per provider");
    cmd->add_option("--m", args.m, "BA edges per new node");
}

Graph build_graph(const TopologyArgs& args) {
    if (!args.graph_file.empty()) return load_graph(read_file(args.graph_file));
    if (args.kind == "ba") return generate_ba(args.n, args.m, args.seed);
    return generate_regular(parse_regular_kind(args.kind), args.n);
}

std::vector<std::pair<std::string, std::string>> topology_metadata(const TopologyArgs& args,
                                                                   const Graph& g) {
    std::vector<std::pair<std::string, std::string>> meta;
    if (!args.graph_file.empty()) {
        meta.emplace_back("graph_file", args.graph_file);
    } else {
        meta.emplace_back("topology", args.kind);
        if (args.kind == "ba") {
            meta.emplace_back("m", std::to_string(args.m));
            meta.emplace_back("graph_seed", std::to_string(args.seed));
        }
    }
    meta.emplace_back("n", std::to_string(g.node_count()));
    meta.emplace_back("edges", std::to_string(g.edge_count()));
    return meta;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::string hist_path(const std::string& base, double alpha, double beta, Side side) {
    return base + ".a" + format_double(alpha) + "_b" + format_double(beta) +
           (side == Side::A ? ".ca" : ".cb") + ".hist.csv";
}

// Flat key=value config support: "--config FILE" pulls in one flag per line;
// flags given on the command line win on conflict.
std::vector<std::string> expand_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (it + 1 == args.end()) throw std::runtime_error("--config needs a file path");
    std::string path = *(it + 1);
    args.erase(it, it + 2);

    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        std::string key = "--" + trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (std::find(args.begin(), args.end(), key) != args.end()) continue;
        if (value == "true" || value == "false") {  // boolean flags
            if (value == "true") args.push_back(key);
            continue;
        }
        args.push_back(key);
        args.push_back(value);
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-provider peering point placement game simulator"};
    app.require_subcommand(1);

    // graph ---------------------------------------------------------------
    auto* cmd_graph = app.add_subcommand("graph", "generate a topology and write its edge list");
    std::string g_kind = "ba", g_out;
    int g_n = 30, g_m = 2;
    uint64_t g_seed = 1;
    cmd_graph->add_option("--kind", g_kind, "ba|path|cycle|complete");
    cmd_graph->add_option("--n", g_n, "node count")->required();
    cmd_graph->add_option("--m", g_m, "BA edges per new node");
    cmd_graph->add_option("--seed", g_seed, "BA generator seed");
    cmd_graph->add_option("--out", g_out, "output path (default stdout)");

    // shared simulation flags ----------------------------------------------
    TopologyArgs topo;
    double alpha = 0.5;
    std::vector<double> alphas, betas;
    double beta = 1.0, eps0 = 0.5, rate = 3.33e-4;
    int64_t t_max = 30000, t0 = 3000, sample_every = 10;
    int64_t window_start = 0, window_end = 0;
    int runs = 20, jobs = 1;
    uint64_t seed = 1;
    bool paper_scale = false;
    std::string out;
    double hist_bin = 0.005;
    bool emit_hist = false;

    auto* cmd_run = app.add_subcommand("run", "single perturbed link-formation run");
    add_topology_flags(cmd_run, topo);
    cmd_run->add_option("--alpha", alpha, "congestion-vs-link weight");
    cmd_run->add_option("--beta", beta, "B->A traffic intensity");
    cmd_run->add_option("--seed", seed, "rng seed");
    cmd_run->add_option("--t-max", t_max, "total steps");
    cmd_run->add_option("--t0", t0, "burn-in length");
    cmd_run->add_option("--rate", rate, "epsilon decay rate per step");
    cmd_run->add_option("--eps0", eps0, "initial inversion probability");
    cmd_run->add_option("--sample-every", sample_every, "trace sampling stride");
    cmd_run->add_option("--out", out, "trace CSV path (metadata at <out>.meta)");
    cmd_run->add_flag("--paper", paper_scale, "paper-scale preset: n=100 t0=1e4 t-max=1e5 rate=1e-4");

    auto* cmd_sweep = app.add_subcommand("sweep", "(alpha, beta) sweep with replicate runs");
    add_topology_flags(cmd_sweep, topo);
    cmd_sweep->add_option("--alpha", alphas, "alpha grid")->delimiter(',');
    cmd_sweep->add_option("--beta", betas, "beta grid")->delimiter(',');
    cmd_sweep->add_option("--runs", runs, "replicate runs per cell");
    cmd_sweep->add_option("--seed", seed, "base seed; run seeds are base + run index");
    cmd_sweep->add_option("--t-max", t_max, "total steps");
    cmd_sweep->add_option("--t0", t0, "burn-in length");
    cmd_sweep->add_option("--rate", rate, "epsilon decay rate per step");
    cmd_sweep->add_option("--eps0", eps0, "initial inversion probability");
    cmd_sweep->add_option("--sample-every", sample_every, "trace sampling stride");
    cmd_sweep->add_option("--window-start", window_start, "stationary window start (default t0)");
    cmd_sweep->add_option("--window-end", window_end, "stationary window end (default t-max)");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");
    cmd_sweep->add_option("--out", out, "summary CSV path (metadata at <out>.meta)");
    cmd_sweep->add_flag("--hist", emit_hist, "emit per-cell cost histogram CSVs");
    cmd_sweep->add_option("--hist-bin", hist_bin, "histogram bin width");
    cmd_sweep->add_flag("--paper", paper_scale,
                        "paper-scale preset: n=100 runs=150 t0=1e4 t-max=1e5 rate=1e-4");

    auto* cmd_enum = app.add_subcommand("enumerate", "exhaustive stability table (n <= 4)");
    add_topology_flags(cmd_enum, topo);
    cmd_enum->add_option("--alpha", alpha, "congestion-vs-link weight");
    cmd_enum->add_option("--beta", beta, "B->A traffic intensity");
    cmd_enum->add_option("--out", out, "stable-set CSV path (default stdout)");

    auto* cmd_worst = app.add_subcommand("worstlink", "worst-case single-link congestion");
    add_topology_flags(cmd_worst, topo);
    cmd_worst->add_option("--beta", beta, "B->A traffic intensity");
    cmd_worst->add_option("--seed", seed, "BA generator seed");

    try {
        std::vector<std::string> args = expand_args(argc, argv);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::ParseError& e) {
            return app.exit(e);
        }

        if (*cmd_graph) {
            Graph g = g_kind == "ba" ? generate_ba(g_n, g_m, g_seed)
                                     : generate_regular(parse_regular_kind(g_kind), g_n);
            emit(g_out, save_graph(g));
            return 0;
        }

        if (paper_scale) {
            auto defaulted = [](CLI::App* cmd, const std::string& flag) {
                return cmd->count(flag) == 0;
            };
            CLI::App* cmd = *cmd_run ? cmd_run : cmd_sweep;
            if (defaulted(cmd, "--n")) topo.n = 100;
            if (defaulted(cmd, "--t0")) t0 = 10000;
            if (defaulted(cmd, "--t-max")) t_max = 100000;
            if (defaulted(cmd, "--rate")) rate = 1e-4;
            if (*cmd_sweep && defaulted(cmd, "--runs")) runs = 150;
        }
        topo.seed = seed;

        if (*cmd_run) {
            Graph g = build_graph(topo);
            DistanceMatrix dist = all_pairs_distances(g);
            RunConfig config;
            config.params = make_params(alpha, beta, dist, dist);
            config.schedule = {eps0, t0, rate};
            config.t_max = t_max;
            config.sample_every = sample_every;
            config.seed = seed;
            RunTrace trace = run(config, dist, dist);

            emit(out, trace_csv(trace));
            auto meta = topology_metadata(topo, g);
            meta.emplace_back("alpha", format_double(alpha));
            meta.emplace_back("beta", format_double(beta));
            meta.emplace_back("eps0", format_double(eps0));
            meta.emplace_back("t0", std::to_string(t0));
            meta.emplace_back("rate", format_double(rate));
            meta.emplace_back("t_max", std::to_string(t_max));
            meta.emplace_back("sample_every", std::to_string(sample_every));
            meta.emplace_back("seed", std::to_string(seed));
            meta.emplace_back("rng", "mt19937_64");
            meta.emplace_back("nf_a", format_double(config.params.nf_a_scaled / 100.0));
            meta.emplace_back("nf_b", format_double(config.params.nf_b_scaled / 100.0));
            meta.emplace_back("final_np", std::to_string(trace.final_p.size()));
            if (!out.empty()) write_file(out + ".meta", metadata_text(meta));
            return 0;
        }

        if (*cmd_sweep) {
            if (alphas.empty() || betas.empty())
                throw std::invalid_argument("sweep needs --alpha and --beta lists");
            Graph g = build_graph(topo);
            SweepSpec spec;
            spec.alphas = alphas;
            spec.betas = betas;
            spec.runs = runs;
            spec.schedule = {eps0, t0, rate};
            spec.t_max = t_max;
            spec.sample_every = sample_every;
            spec.base_seed = seed;
            spec.window_lo = window_start;
            spec.window_hi = window_end;
            spec.jobs = jobs;
            auto cells = run_sweep(spec, g);

            emit(out, sweep_csv(cells, runs));
            if (emit_hist && !out.empty()) {
                int64_t lo = window_start > 0 ? window_start : t0;
                int64_t hi = window_end > 0 ? window_end : t_max;
                for (const SweepCell& cell : cells) {
                    for (Side side : {Side::A, Side::B}) {
                        auto values = window_costs(cell.traces, lo, hi, side);
                        write_file(hist_path(out, cell.alpha, cell.beta, side),
                                   histogram_csv(make_histogram(values, hist_bin)));
                    }
                }
            }
            auto meta = topology_metadata(topo, g);
            auto join = [](const std::vector<double>& v) {
                std::string s;
                for (double x : v) s += (s.empty() ? "" : ",") + format_double(x);
                return s;
            };
            meta.emplace_back("alpha", join(alphas));
            meta.emplace_back("beta", join(betas));
            meta.emplace_back("runs", std::to_string(runs));
            meta.emplace_back("eps0", format_double(eps0));
            meta.emplace_back("t0", std::to_string(t0));
            meta.emplace_back("rate", format_double(rate));
            meta.emplace_back("t_max", std::to_string(t_max));
            meta.emplace_back("sample_every", std::to_string(sample_every));
            meta.emplace_back("window_start", std::to_string(window_start > 0 ? window_start : t0));
            meta.emplace_back("window_end", std::to_string(window_end > 0 ? window_end : t_max));
            meta.emplace_back("base_seed", std::to_string(seed));
            meta.emplace_back("rng", "mt19937_64");
            if (emit_hist) meta.emplace_back("hist_bin", format_double(hist_bin));
            if (!out.empty()) write_file(out + ".meta", metadata_text(meta));
            return 0;
        }

        if (*cmd_enum) {
            Graph g = build_graph(topo);
            if (g.node_count() > 4)
                throw std::invalid_argument("enumerate: limited to n <= 4");
            DistanceMatrix dist = all_pairs_distances(g);
            GameParams params = make_params(alpha, beta, dist, dist);
            auto result = enumerate_pairwise_stable(params, dist, dist);
            emit(out, enumeration_csv(result, g.node_count()));
            return 0;
        }

        if (*cmd_worst) {
            Graph g = build_graph(topo);
            DistanceMatrix dist = all_pairs_distances(g);
            WorstCase worst = worst_case_congestion(dist, dist, make_traffic(beta));
            std::cout << "nf_a: " << format_double(worst.nf_a_scaled / 100.0) << '\n'
                      << "nf_b: " << format_double(worst.nf_b_scaled / 100.0) << '\n'
                      << "argmax_link: (" << worst.argmax.a << "," << worst.argmax.b << ")\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
