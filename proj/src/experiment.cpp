#include "peering/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace peering {

std::vector<SweepCell> run_sweep(const SweepSpec& spec, const Graph& g) {
    if (spec.alphas.empty() || spec.betas.empty())
        throw std::invalid_argument("sweep needs nonempty alpha and beta lists");
    if (spec.runs < 1) throw std::invalid_argument("sweep needs runs >= 1");

    DistanceMatrix dist = all_pairs_distances(g);

    // n_f depends only on (graph, beta); compute once per beta.
    std::map<int, GameParams> params_by_beta;
    for (double beta : spec.betas) {
        int key = make_traffic(beta).beta_centi;
        if (!params_by_beta.count(key))
            params_by_beta.emplace(key, make_params(0.0, beta, dist, dist, spec.penalty));
    }

    struct Task {
        size_t cell;
        int replicate;
        uint64_t seed;
    };
    std::vector<SweepCell> cells;
    std::vector<Task> tasks;
    uint64_t run_index = 0;
    for (double alpha : spec.alphas) {
        for (double beta : spec.betas) {
            SweepCell cell;
            cell.alpha = alpha;
            cell.beta = beta;
            cell.traces.resize(spec.runs);
            for (int r = 0; r < spec.runs; ++r)
                tasks.push_back({cells.size(), r, spec.base_seed + run_index++});
            cells.push_back(std::move(cell));
        }
    }

    auto run_task = [&](const Task& task) {
        SweepCell& cell = cells[task.cell];
        RunConfig config;
        config.params = params_by_beta.at(make_traffic(cell.beta).beta_centi);
        config.params.alpha_centi = alpha_to_centi(cell.alpha);
        config.schedule = spec.schedule;
        config.t_max = spec.t_max;
        config.sample_every = spec.sample_every;
        config.seed = task.seed;
        cell.traces[task.replicate] = run(config, dist, dist);
    };

    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (const Task& task : tasks) run_task(task);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(tasks[i]);
            });
        for (std::thread& worker : workers) worker.join();
    }

    const int64_t lo = spec.window_lo > 0 ? spec.window_lo : spec.schedule.t0;
    const int64_t hi = spec.window_hi > 0 ? spec.window_hi : spec.t_max;
    for (SweepCell& cell : cells) cell.stats = stationary_stats(cell.traces, lo, hi);
    return cells;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string trace_csv(const RunTrace& trace) {
    std::ostringstream out;
    out << "t,np,cost_a,cost_b\n";
    for (const TraceSample& s : trace.samples)
        out << s.t << ',' << s.np << ',' << format_double(s.cost_a) << ','
            << format_double(s.cost_b) << '\n';
    return out.str();
}

std::string sweep_csv(const std::vector<SweepCell>& cells, int runs) {
    std::ostringstream out;
    out << "alpha,beta,runs,mean_np,std_np,mean_ca,std_ca,mean_cb,std_cb\n";
    for (const SweepCell& c : cells)
        out << format_double(c.alpha) << ',' << format_double(c.beta) << ',' << runs << ','
            << format_double(c.stats.mean_np) << ',' << format_double(c.stats.std_np) << ','
            << format_double(c.stats.mean_ca) << ',' << format_double(c.stats.std_ca) << ','
            << format_double(c.stats.mean_cb) << ',' << format_double(c.stats.std_cb) << '\n';
    return out.str();
}

std::string enumeration_csv(const EnumerationResult& result, int n) {
    std::ostringstream out;
    out << "bitmask,np,cost_a,cost_b,is_efficient\n";
    for (const EnumeratedNetwork& net : result.stable)
        out << net.p.bitmask(n) << ',' << net.p.size() << ',' << format_double(net.cost_a) << ','
            << format_double(net.cost_b) << ',' << (net.efficient ? 1 : 0) << '\n';
    return out.str();
}

std::string histogram_csv(const Histogram& h) {
    std::ostringstream out;
    out << "bin_lo,bin_hi,count\n";
    for (size_t k = 0; k < h.counts.size(); ++k) {
        double lo = static_cast<double>(h.first_bin + static_cast<int64_t>(k)) * h.bin_width;
        out << format_double(lo) << ',' << format_double(lo + h.bin_width) << ',' << h.counts[k]
            << '\n';
    }
    return out.str();
}

std::string metadata_text(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ostringstream out;
    out << "schema: 1\n";
    for (const auto& [key, value] : entries) out << key << ": " << value << '\n';
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace peering
