#pragma once

#include <optional>
#include <vector>

#include "peering/cost.hpp"

namespace peering {

// A deviation demonstrating instability.
struct InstabilityWitness {
    Link link;
    LinkAction action = LinkAction::remove;
    bool benefits_a = false;
    bool benefits_b = false;
};

struct StabilityReport {
    bool stable = false;
    std::optional<InstabilityWitness> witness;
    int deletion_checks = 0;
    int addition_checks = 0;
};

// Pairwise stability: no provider strictly gains by severing a link in P,
// and no link outside P would strictly benefit both providers. Witness is
// the first violation in canonical link order (deletions scanned first).
StabilityReport is_pairwise_stable(const GameParams& params, const DistanceMatrix& dist_a,
                                   const DistanceMatrix& dist_b, const PeeringSet& p);

// Pairwise stability plus robustness to severance of any nonempty subset of
// P by a single provider. Guarded at |P| <= 20 (2^|P| subset scan).
StabilityReport is_strongly_pairwise_stable(const GameParams& params,
                                            const DistanceMatrix& dist_a,
                                            const DistanceMatrix& dist_b, const PeeringSet& p);

struct EnumeratedNetwork {
    PeeringSet p;
    double cost_a = 0.0;
    double cost_b = 0.0;
    bool efficient = false;  // minimizes C_A + C_B over nonempty subsets
};

struct EnumerationResult {
    std::vector<EnumeratedNetwork> stable;     // canonical bitmask order
    std::vector<PeeringSet> efficient;         // cost-minimizing nonempty sets
};

// Classifies all 2^(n^2) subsets of E. Guarded at n <= 4.
EnumerationResult enumerate_pairwise_stable(const GameParams& params,
                                            const DistanceMatrix& dist_a,
                                            const DistanceMatrix& dist_b);

}  // namespace peering
