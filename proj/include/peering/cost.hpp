#pragma once

#include <cstdint>
#include <utility>

#include "peering/graph.hpp"
#include "peering/routing.hpp"

namespace peering {

// Per-game constants of the cost function. alpha lives on a 1/100 grid so
// that cost comparisons stay in exact integer arithmetic.
struct GameParams {
    int alpha_centi = 50;
    TrafficSpec traffic;
    int n = 0;            // nodes per provider
    int n_p = 0;          // link normalizer, = n
    int64_t nf_a_scaled = 0;  // worst-case congestion, centi-packet units
    int64_t nf_b_scaled = 0;
    double penalty = 1e6;  // disconnection cost, both providers

    double alpha() const { return alpha_centi / 100.0; }
    double beta() const { return traffic.beta_centi / 100.0; }
};

int alpha_to_centi(double alpha);

struct WorstCase {
    int64_t nf_a_scaled = 0;
    int64_t nf_b_scaled = 0;
    Link argmax;  // smallest (a,b) attaining the A-side max
};

// Exhaustive search over all n^2 single-link peering sets for the largest
// provider totals.
WorstCase worst_case_congestion(const DistanceMatrix& dist_a, const DistanceMatrix& dist_b,
                                TrafficSpec traffic);

GameParams make_params(double alpha, double beta, const DistanceMatrix& dist_a,
                       const DistanceMatrix& dist_b, double penalty = 1e6);

// Exact cost of one provider: either the disconnection penalty or the integer
// numerator of (alpha/n_f)*total + ((1-alpha)/n_p)*|P| over the provider's
// fixed denominator 100*n_f_scaled*n_p. Comparable within one provider.
struct ExactCost {
    bool disconnected = false;
    int64_t numerator = 0;

    friend bool operator==(const ExactCost&, const ExactCost&) = default;
};

// true iff lhs is a strictly smaller cost. Any connected cost beats the
// penalty (GameParams invariant: penalty exceeds every achievable cost).
bool cost_less(const ExactCost& lhs, const ExactCost& rhs);

std::pair<ExactCost, ExactCost> exact_costs(const GameParams& params,
                                            const DistanceMatrix& dist_a,
                                            const DistanceMatrix& dist_b, const PeeringSet& p);

double cost_to_double(const GameParams& params, const ExactCost& cost, Side side);

// (C_A, C_B); (penalty, penalty) when P is empty.
std::pair<double, double> total_cost(const GameParams& params, const DistanceMatrix& dist_a,
                                     const DistanceMatrix& dist_b, const PeeringSet& p);

enum class LinkAction { add, remove };

// total_cost(after) - total_cost(before).
std::pair<double, double> cost_delta(const GameParams& params, const DistanceMatrix& dist_a,
                                     const DistanceMatrix& dist_b, const PeeringSet& p, Link l,
                                     LinkAction action);

}  // namespace peering
