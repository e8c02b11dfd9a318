#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "peering/cost.hpp"

namespace peering {

// Annealing schedule for the inversion probability: eps0 until t0, then
// exponential decay at `rate` per step.
struct Schedule {
    double eps0 = 0.5;
    int64_t t0 = 10000;
    double rate = 1e-4;
};

double epsilon(int64_t t, const Schedule& s);

struct RunConfig {
    GameParams params;
    Schedule schedule;
    int64_t t_max = 100000;
    int64_t sample_every = 10;
    uint64_t seed = 0;
    PeeringSet initial = PeeringSet({{0, 0}});
};

struct TraceSample {
    int64_t t = 0;
    int np = 0;
    double cost_a = 0.0;
    double cost_b = 0.0;
};

struct RunTrace {
    std::vector<TraceSample> samples;
    PeeringSet final_p;
    int64_t final_t = 0;
    uint64_t seed = 0;
};

enum class StepKind { add_proposal, delete_proposal, noop };

struct StepEvent {
    StepKind kind = StepKind::noop;
    Link link;
    bool accepted = false;
};

// One period of the perturbed link-formation process. Addition and deletion
// rounds are equally likely; each provider's correct decision is inverted
// independently with probability eps. Addition needs both approvals,
// deletion needs one severance.
StepEvent step(PeeringSet& state, double eps, const GameParams& params,
               const DistanceMatrix& dist_a, const DistanceMatrix& dist_b,
               std::mt19937_64& rng);

RunTrace run(const RunConfig& config, const DistanceMatrix& dist_a,
             const DistanceMatrix& dist_b);

// Unperturbed (eps = 0) chain driven to an absorbing state: returns once a
// full sweep of every possible proposal accepts nothing. Throws if max_steps
// random steps pass without absorbing (a cycle, in Jackson-Watts terms).
PeeringSet run_to_absorption(const GameParams& params, const DistanceMatrix& dist_a,
                             const DistanceMatrix& dist_b, PeeringSet initial, uint64_t seed,
                             int64_t max_steps = 1000000);

struct StationaryStats {
    int64_t count = 0;
    double mean_np = 0.0, std_np = 0.0;
    double mean_ca = 0.0, std_ca = 0.0;
    double mean_cb = 0.0, std_cb = 0.0;
};

// Pools samples with t_lo < t < t_hi across traces.
StationaryStats stationary_stats(const std::vector<RunTrace>& traces, int64_t t_lo, int64_t t_hi);

struct Histogram {
    double bin_width = 0.0;
    int64_t first_bin = 0;            // index of the lowest occupied bin
    std::vector<int64_t> counts;      // bin k covers [(first_bin+k)*w, (first_bin+k+1)*w)
};

Histogram make_histogram(const std::vector<double>& values, double bin_width);

// Pooled C_A (side A) or C_B values in the window, for cost histograms.
std::vector<double> window_costs(const std::vector<RunTrace>& traces, int64_t t_lo, int64_t t_hi,
                                 Side side);

}  // namespace peering
