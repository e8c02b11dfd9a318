#include "peering/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace peering {

int alpha_to_centi(double alpha) {
    double scaled = alpha * 100.0;
    int centi = static_cast<int>(std::lround(scaled));
    if (centi < 0 || centi > 100 || std::abs(scaled - centi) > 1e-9)
        throw std::invalid_argument("alpha must lie on the 1/100 grid within [0,1]");
    return centi;
}

WorstCase worst_case_congestion(const DistanceMatrix& dist_a, const DistanceMatrix& dist_b,
                                TrafficSpec traffic) {
    const int n = dist_a.node_count();
    WorstCase worst;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            PeeringSet p({{a, b}});
            FlowSummary flows = provider_flows(dist_a, dist_b, p, traffic);
            if (flows.total_a_scaled > worst.nf_a_scaled) {
                worst.nf_a_scaled = flows.total_a_scaled;
                worst.argmax = {a, b};
            }
            worst.nf_b_scaled = std::max(worst.nf_b_scaled, flows.total_b_scaled);
        }
    }
    return worst;
}

GameParams make_params(double alpha, double beta, const DistanceMatrix& dist_a,
                       const DistanceMatrix& dist_b, double penalty) {
    GameParams params;
    params.alpha_centi = alpha_to_centi(alpha);
    params.traffic = make_traffic(beta);
    params.n = dist_a.node_count();
    params.n_p = params.n;
    WorstCase worst = worst_case_congestion(dist_a, dist_b, params.traffic);
    params.nf_a_scaled = worst.nf_a_scaled;
    params.nf_b_scaled = worst.nf_b_scaled;
    params.penalty = penalty;
    if (penalty <= params.alpha() + (1.0 - params.alpha()) * params.n)
        throw std::invalid_argument("penalty must exceed any achievable connected cost");
    return params;
}

bool cost_less(const ExactCost& lhs, const ExactCost& rhs) {
    if (lhs.disconnected) return false;
    if (rhs.disconnected) return true;
    return lhs.numerator < rhs.numerator;
}

std::pair<ExactCost, ExactCost> exact_costs(const GameParams& params,
                                            const DistanceMatrix& dist_a,
                                            const DistanceMatrix& dist_b, const PeeringSet& p) {
    if (p.empty()) return {ExactCost{true, 0}, ExactCost{true, 0}};
    FlowSummary flows = provider_flows(dist_a, dist_b, p, params.traffic);
    const int64_t a = params.alpha_centi;
    const int64_t np_links = p.size();
    ExactCost ca{false, a * flows.total_a_scaled * params.n_p +
                            (100 - a) * np_links * params.nf_a_scaled};
    ExactCost cb{false, a * flows.total_b_scaled * params.n_p +
                            (100 - a) * np_links * params.nf_b_scaled};
    return {ca, cb};
}

double cost_to_double(const GameParams& params, const ExactCost& cost, Side side) {
    if (cost.disconnected) return params.penalty;
    int64_t nf = side == Side::A ? params.nf_a_scaled : params.nf_b_scaled;
    return static_cast<double>(cost.numerator) / (100.0 * static_cast<double>(nf) * params.n_p);
}

std::pair<double, double> total_cost(const GameParams& params, const DistanceMatrix& dist_a,
                                     const DistanceMatrix& dist_b, const PeeringSet& p) {
    auto [ca, cb] = exact_costs(params, dist_a, dist_b, p);
    return {cost_to_double(params, ca, Side::A), cost_to_double(params, cb, Side::B)};
}

std::pair<double, double> cost_delta(const GameParams& params, const DistanceMatrix& dist_a,
                                     const DistanceMatrix& dist_b, const PeeringSet& p, Link l,
                                     LinkAction action) {
    PeeringSet after = p;
    if (action == LinkAction::add)
        after.add(l);
    else
        after.remove(l);
    auto [before_a, before_b] = total_cost(params, dist_a, dist_b, p);
    auto [after_a, after_b] = total_cost(params, dist_a, dist_b, after);
    return {after_a - before_a, after_b - before_b};
}

}  // namespace peering
