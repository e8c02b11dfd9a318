#include "peering/stability.hpp"

#include <bit>
#include <stdexcept>

namespace peering {

StabilityReport is_pairwise_stable(const GameParams& params, const DistanceMatrix& dist_a,
                                   const DistanceMatrix& dist_b, const PeeringSet& p) {
    StabilityReport report;
    auto [cost_a, cost_b] = exact_costs(params, dist_a, dist_b, p);

    // Conditions 1-2: unilateral severance of any established link.
    for (const Link& l : p.links()) {
        ++report.deletion_checks;
        PeeringSet without = p;
        without.remove(l);
        auto [ca, cb] = exact_costs(params, dist_a, dist_b, without);
        bool gains_a = cost_less(ca, cost_a);
        bool gains_b = cost_less(cb, cost_b);
        if (gains_a || gains_b) {
            report.witness = InstabilityWitness{l, LinkAction::remove, gains_a, gains_b};
            return report;
        }
    }

    // Condition 3, restricted to links outside P: bilateral addition.
    const int n = params.n;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Link l{a, b};
            if (p.contains(l)) continue;
            ++report.addition_checks;
            PeeringSet with = p;
            with.add(l);
            auto [ca, cb] = exact_costs(params, dist_a, dist_b, with);
            if (cost_less(ca, cost_a) && cost_less(cb, cost_b)) {
                report.witness = InstabilityWitness{l, LinkAction::add, true, true};
                return report;
            }
        }
    }
    report.stable = true;
    return report;
}

StabilityReport is_strongly_pairwise_stable(const GameParams& params,
                                            const DistanceMatrix& dist_a,
                                            const DistanceMatrix& dist_b, const PeeringSet& p) {
    if (p.size() > 20)
        throw std::invalid_argument("strong stability check limited to |P| <= 20");
    StabilityReport report = is_pairwise_stable(params, dist_a, dist_b, p);
    if (!report.stable) return report;

    auto [cost_a, cost_b] = exact_costs(params, dist_a, dist_b, p);
    const auto& links = p.links();
    const uint64_t subsets = uint64_t{1} << p.size();
    for (uint64_t q = 1; q < subsets; ++q) {
        PeeringSet without = p;
        for (int i = 0; i < p.size(); ++i)
            if (q >> i & 1) without.remove(links[i]);
        ++report.deletion_checks;
        auto [ca, cb] = exact_costs(params, dist_a, dist_b, without);
        bool gains_a = cost_less(ca, cost_a);
        bool gains_b = cost_less(cb, cost_b);
        if (gains_a || gains_b) {
            // Report the lowest-index link of the violating subset.
            Link first = links[std::countr_zero(q)];
            report.stable = false;
            report.witness = InstabilityWitness{first, LinkAction::remove, gains_a, gains_b};
            return report;
        }
    }
    return report;
}

EnumerationResult enumerate_pairwise_stable(const GameParams& params,
                                            const DistanceMatrix& dist_a,
                                            const DistanceMatrix& dist_b) {
    const int n = params.n;
    if (n > 4) throw std::invalid_argument("enumeration limited to n <= 4");

    const uint64_t subsets = uint64_t{1} << (n * n);

    // Efficient = minimal exact C_A + C_B over nonempty subsets; the two
    // numerators share a denominator only after cross-multiplying by the
    // other provider's n_f.
    using wide = __int128;
    wide best_sum = 0;
    bool have_best = false;
    std::vector<uint64_t> efficient_masks;

    EnumerationResult result;
    for (uint64_t mask = 0; mask < subsets; ++mask) {
        PeeringSet p = PeeringSet::from_bitmask(mask, n);
        if (!p.empty()) {
            auto [ca, cb] = exact_costs(params, dist_a, dist_b, p);
            wide sum = wide{ca.numerator} * params.nf_b_scaled +
                       wide{cb.numerator} * params.nf_a_scaled;
            if (!have_best || sum < best_sum) {
                best_sum = sum;
                have_best = true;
                efficient_masks.assign(1, mask);
            } else if (sum == best_sum) {
                efficient_masks.push_back(mask);
            }
        }
        if (is_pairwise_stable(params, dist_a, dist_b, p).stable) {
            auto [ca, cb] = total_cost(params, dist_a, dist_b, p);
            result.stable.push_back({std::move(p), ca, cb, false});
        }
    }
    for (uint64_t mask : efficient_masks)
        result.efficient.push_back(PeeringSet::from_bitmask(mask, n));
    for (EnumeratedNetwork& net : result.stable) {
        uint64_t mask = net.p.bitmask(n);
        for (uint64_t eff : efficient_masks)
            if (eff == mask) net.efficient = true;
    }
    return result;
}

}  // namespace peering
