#include "peering/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "peering/stability.hpp"

namespace peering {

namespace {

// Raw-output draws keep traces identical across standard libraries;
// std::uniform_*_distribution is implementation-defined.
uint64_t bounded(std::mt19937_64& rng, uint64_t k) { return rng() % k; }
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// The k-th link of E \ P in lexicographic (a,b) order.
Link kth_free_link(const PeeringSet& p, int n, uint64_t k) {
    uint64_t idx = k;
    for (const Link& l : p.links()) {
        uint64_t member = static_cast<uint64_t>(l.a) * n + l.b;
        if (member <= idx) ++idx;
    }
    return {static_cast<int>(idx / n), static_cast<int>(idx % n)};
}

}  // namespace

double epsilon(int64_t t, const Schedule& s) {
    if (t < 0) throw std::invalid_argument("epsilon: negative step index");
    if (t < s.t0) return s.eps0;
    return s.eps0 * std::exp(s.rate * static_cast<double>(s.t0 - t));
}

StepEvent step(PeeringSet& state, double eps, const GameParams& params,
               const DistanceMatrix& dist_a, const DistanceMatrix& dist_b,
               std::mt19937_64& rng) {
    const int n = params.n;
    const bool addition = (rng() >> 63) == 0;

    if (addition) {
        const uint64_t free_links = static_cast<uint64_t>(n) * n - state.size();
        if (free_links == 0) return {};
        Link l = kth_free_link(state, n, bounded(rng, free_links));

        auto [before_a, before_b] = exact_costs(params, dist_a, dist_b, state);
        PeeringSet with = state;
        with.add(l);
        auto [after_a, after_b] = exact_costs(params, dist_a, dist_b, with);
        bool approve_a = cost_less(after_a, before_a);
        bool approve_b = cost_less(after_b, before_b);
        if (unit(rng) < eps) approve_a = !approve_a;
        if (unit(rng) < eps) approve_b = !approve_b;
        bool accepted = approve_a && approve_b;
        if (accepted) state = std::move(with);
        return {StepKind::add_proposal, l, accepted};
    }

    if (state.empty()) return {};
    Link l = state.links()[bounded(rng, state.size())];

    auto [before_a, before_b] = exact_costs(params, dist_a, dist_b, state);
    PeeringSet without = state;
    without.remove(l);
    auto [after_a, after_b] = exact_costs(params, dist_a, dist_b, without);
    bool sever_a = cost_less(after_a, before_a);
    bool sever_b = cost_less(after_b, before_b);
    if (unit(rng) < eps) sever_a = !sever_a;
    if (unit(rng) < eps) sever_b = !sever_b;
    bool accepted = sever_a || sever_b;
    if (accepted) state = std::move(without);
    return {StepKind::delete_proposal, l, accepted};
}

RunTrace run(const RunConfig& config, const DistanceMatrix& dist_a,
             const DistanceMatrix& dist_b) {
    if (config.t_max <= config.schedule.t0)
        throw std::invalid_argument("t_max must exceed the burn-in length t0");
    if (config.sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");

    std::mt19937_64 rng(config.seed);
    PeeringSet state = config.initial;
    RunTrace trace;
    trace.seed = config.seed;

    for (int64_t t = 0; t < config.t_max; ++t) {
        step(state, epsilon(t, config.schedule), config.params, dist_a, dist_b, rng);
        const int64_t now = t + 1;
        if (now % config.sample_every == 0 || now == config.t_max) {
            auto [ca, cb] = total_cost(config.params, dist_a, dist_b, state);
            trace.samples.push_back({now, state.size(), ca, cb});
        }
    }
    trace.final_p = std::move(state);
    trace.final_t = config.t_max;
    return trace;
}

PeeringSet run_to_absorption(const GameParams& params, const DistanceMatrix& dist_a,
                             const DistanceMatrix& dist_b, PeeringSet initial, uint64_t seed,
                             int64_t max_steps) {
    std::mt19937_64 rng(seed);
    PeeringSet state = std::move(initial);
    int64_t budget = max_steps;
    while (budget > 0) {
        if (is_pairwise_stable(params, dist_a, dist_b, state).stable) return state;
        while (budget > 0) {
            --budget;
            if (step(state, 0.0, params, dist_a, dist_b, rng).accepted) break;
        }
    }
    throw std::runtime_error("unperturbed chain did not absorb within the step budget");
}

StationaryStats stationary_stats(const std::vector<RunTrace>& traces, int64_t t_lo, int64_t t_hi) {
    if (traces.empty()) throw std::invalid_argument("stationary_stats: no traces");
    if (t_lo >= t_hi) throw std::invalid_argument("stationary_stats: empty window");

    double sum_np = 0, sum_ca = 0, sum_cb = 0;
    double sq_np = 0, sq_ca = 0, sq_cb = 0;
    int64_t count = 0;
    for (const RunTrace& trace : traces) {
        for (const TraceSample& s : trace.samples) {
            if (s.t <= t_lo || s.t >= t_hi) continue;
            ++count;
            sum_np += s.np;
            sum_ca += s.cost_a;
            sum_cb += s.cost_b;
            sq_np += static_cast<double>(s.np) * s.np;
            sq_ca += s.cost_a * s.cost_a;
            sq_cb += s.cost_b * s.cost_b;
        }
    }
    if (count == 0) throw std::invalid_argument("stationary_stats: window contains no samples");

    StationaryStats stats;
    stats.count = count;
    auto finish = [count](double sum, double sq, double& mean, double& sd) {
        mean = sum / static_cast<double>(count);
        double var = sq / static_cast<double>(count) - mean * mean;
        sd = var > 0 ? std::sqrt(var) : 0.0;
    };
    finish(sum_np, sq_np, stats.mean_np, stats.std_np);
    finish(sum_ca, sq_ca, stats.mean_ca, stats.std_ca);
    finish(sum_cb, sq_cb, stats.mean_cb, stats.std_cb);
    return stats;
}

Histogram make_histogram(const std::vector<double>& values, double bin_width) {
    if (bin_width <= 0) throw std::invalid_argument("histogram bin width must be positive");
    Histogram h;
    h.bin_width = bin_width;
    if (values.empty()) return h;

    int64_t lo = 0, hi = 0;
    bool first = true;
    std::vector<int64_t> bins(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        bins[i] = static_cast<int64_t>(std::floor(values[i] / bin_width));
        if (first || bins[i] < lo) lo = bins[i];
        if (first || bins[i] > hi) hi = bins[i];
        first = false;
    }
    h.first_bin = lo;
    h.counts.assign(static_cast<size_t>(hi - lo + 1), 0);
    for (int64_t b : bins) ++h.counts[static_cast<size_t>(b - lo)];
    return h;
}

std::vector<double> window_costs(const std::vector<RunTrace>& traces, int64_t t_lo, int64_t t_hi,
                                 Side side) {
    std::vector<double> values;
    for (const RunTrace& trace : traces)
        for (const TraceSample& s : trace.samples)
            if (s.t > t_lo && s.t < t_hi)
                values.push_back(side == Side::A ? s.cost_a : s.cost_b);
    return values;
}

}  // namespace peering
