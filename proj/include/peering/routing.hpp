#pragma once

#include <cstdint>
#include <vector>

#include "peering/graph.hpp"

namespace peering {

// A peering link joining node a of provider A to node b of provider B.
struct Link {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Link&, const Link&) = default;
};

enum class Side { A, B };

// The set P of established cross-links; the game's state.
// Links kept in canonical lexicographic order by (a, b).
class PeeringSet {
public:
    PeeringSet() = default;
    explicit PeeringSet(std::vector<Link> links);

    // Subset of the full link space E decoded from a bitmask, bit a*n+b.
    static PeeringSet from_bitmask(uint64_t mask, int n);

    bool contains(Link l) const;
    void add(Link l);     // throws if already present
    void remove(Link l);  // throws if absent

    int size() const { return static_cast<int>(links_.size()); }
    bool empty() const { return links_.empty(); }
    const std::vector<Link>& links() const { return links_; }
    uint64_t bitmask(int n) const;

    friend bool operator==(const PeeringSet&, const PeeringSet&) = default;

private:
    std::vector<Link> links_;
};

// Traffic intensities on a 1/100 grid: A->B is fixed at 1 packet per node
// pair (100 centi-packets), B->A is beta.
struct TrafficSpec {
    int beta_centi = 100;
};

TrafficSpec make_traffic(double beta);

// Node-visit totals in centi-packet units (flow x100), exact integers.
struct FlowSummary {
    int64_t total_a_scaled = 0;
    int64_t total_b_scaled = 0;
    std::vector<int64_t> per_node_a;  // filled by per_node_flows only
    std::vector<int64_t> per_node_b;

    double total_a() const { return static_cast<double>(total_a_scaled) / 100.0; }
    double total_b() const { return static_cast<double>(total_b_scaled) / 100.0; }
};

// For each source node on the given side, the index into P.links() of its
// hot-potato exit: the link whose same-side endpoint is nearest, ties broken
// by smaller same-side label, then smaller far-side label.
std::vector<int> exit_assignment(const DistanceMatrix& dist, const PeeringSet& p, Side side);

FlowSummary provider_flows(const DistanceMatrix& dist_a, const DistanceMatrix& dist_b,
                           const PeeringSet& p, TrafficSpec traffic);

// Also fills per-node visit counts, routing each packet along the
// lexicographically least shortest path. Diagnostic; totals match
// provider_flows exactly.
FlowSummary per_node_flows(const Graph& g_a, const DistanceMatrix& dist_a, const Graph& g_b,
                           const DistanceMatrix& dist_b, const PeeringSet& p, TrafficSpec traffic);

}  // namespace peering
