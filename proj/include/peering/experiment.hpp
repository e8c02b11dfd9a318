#pragma once

#include <map>
#include <string>
#include <vector>

#include "peering/dynamics.hpp"
#include "peering/stability.hpp"

namespace peering {

struct SweepSpec {
    std::vector<double> alphas;
    std::vector<double> betas;
    int runs = 20;
    Schedule schedule;
    int64_t t_max = 30000;
    int64_t sample_every = 10;
    uint64_t base_seed = 1;
    int64_t window_lo = 0;  // 0 = schedule.t0
    int64_t window_hi = 0;  // 0 = t_max
    int jobs = 1;
    double penalty = 1e6;
};

struct SweepCell {
    double alpha = 0.0;
    double beta = 0.0;
    StationaryStats stats;
    std::vector<RunTrace> traces;
};

// Runs x |alphas| x |betas| independent chains. Per-run seed is base_seed +
// global run index in (alpha, beta, replicate) lexicographic order, so
// results are byte-identical for any jobs count.
std::vector<SweepCell> run_sweep(const SweepSpec& spec, const Graph& g);

// CSV / metadata serialization. Numbers printed with %.10g for stable bytes.
std::string format_double(double v);
std::string trace_csv(const RunTrace& trace);
std::string sweep_csv(const std::vector<SweepCell>& cells, int runs);
std::string enumeration_csv(const EnumerationResult& result, int n);
std::string histogram_csv(const Histogram& h);

// Flat "key: value" sidecar; keys emitted in insertion order.
std::string metadata_text(const std::vector<std::pair<std::string, std::string>>& entries);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace peering
