#include "peering/routing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace peering {

PeeringSet::PeeringSet(std::vector<Link> links) : links_(std::move(links)) {
    std::sort(links_.begin(), links_.end());
    if (std::adjacent_find(links_.begin(), links_.end()) != links_.end())
        throw std::invalid_argument("duplicate peering link");
    for (const Link& l : links_)
        if (l.a < 0 || l.b < 0) throw std::invalid_argument("negative link endpoint");
}

PeeringSet PeeringSet::from_bitmask(uint64_t mask, int n) {
    std::vector<Link> links;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mask >> (a * n + b) & 1) links.push_back({a, b});
    return PeeringSet(std::move(links));
}

bool PeeringSet::contains(Link l) const {
    return std::binary_search(links_.begin(), links_.end(), l);
}

void PeeringSet::add(Link l) {
    auto it = std::lower_bound(links_.begin(), links_.end(), l);
    if (it != links_.end() && *it == l) throw std::invalid_argument("link already in P");
    links_.insert(it, l);
}

void PeeringSet::remove(Link l) {
    auto it = std::lower_bound(links_.begin(), links_.end(), l);
    if (it == links_.end() || *it != l) throw std::invalid_argument("link not in P");
    links_.erase(it);
}

uint64_t PeeringSet::bitmask(int n) const {
    uint64_t mask = 0;
    for (const Link& l : links_) mask |= uint64_t{1} << (l.a * n + l.b);
    return mask;
}

TrafficSpec make_traffic(double beta) {
    double scaled = beta * 100.0;
    int centi = static_cast<int>(std::lround(scaled));
    if (centi < 0 || centi > 100 || std::abs(scaled - centi) > 1e-9)
        throw std::invalid_argument("beta must lie on the 1/100 grid within [0,1]");
    return TrafficSpec{centi};
}

std::vector<int> exit_assignment(const DistanceMatrix& dist, const PeeringSet& p, Side side) {
    if (p.empty()) throw std::invalid_argument("exit assignment needs a nonempty peering set");
    const int n = dist.node_count();
    const auto& links = p.links();
    std::vector<int> chosen(n, 0);
    for (int src = 0; src < n; ++src) {
        int best = 0;
        auto key = [&](int idx) {
            const Link& l = links[idx];
            int near = side == Side::A ? l.a : l.b;
            int far = side == Side::A ? l.b : l.a;
            return std::tuple{dist.at(src, near), near, far};
        };
        for (int idx = 1; idx < static_cast<int>(links.size()); ++idx)
            if (key(idx) < key(best)) best = idx;
        chosen[src] = best;
    }
    return chosen;
}

FlowSummary provider_flows(const DistanceMatrix& dist_a, const DistanceMatrix& dist_b,
                           const PeeringSet& p, TrafficSpec traffic) {
    const int n = dist_a.node_count();
    const auto& links = p.links();
    auto exits_a = exit_assignment(dist_a, p, Side::A);
    auto exits_b = exit_assignment(dist_b, p, Side::B);

    // Outgoing: every node on the source->exit segment, endpoints included,
    // once per destination (n destinations per source).
    int64_t out_a = 0, out_b = 0;
    for (int i = 0; i < n; ++i) out_a += int64_t{n} * (dist_a.at(i, links[exits_a[i]].a) + 1);
    for (int j = 0; j < n; ++j) out_b += int64_t{n} * (dist_b.at(j, links[exits_b[j]].b) + 1);

    // Incoming: entry->destination segments, summed over all destinations.
    int64_t in_a = 0, in_b = 0;
    for (int j = 0; j < n; ++j) in_a += dist_a.row_sum(links[exits_b[j]].a) + n;
    for (int i = 0; i < n; ++i) in_b += dist_b.row_sum(links[exits_a[i]].b) + n;

    FlowSummary flows;
    flows.total_a_scaled = 100 * out_a + traffic.beta_centi * in_a;
    flows.total_b_scaled = traffic.beta_centi * out_b + 100 * in_b;
    return flows;
}

namespace {

// Walk the lexicographically least shortest path from u to v, adding
// `weight` to every node on it (endpoints included).
void add_path_visits(const Graph& g, const DistanceMatrix& dist, int u, int v, int64_t weight,
                     std::vector<int64_t>& visits) {
    int cur = u;
    visits[cur] += weight;
    while (cur != v) {
        int next = -1;
        for (int w : g.neighbors(cur)) {  // neighbor lists are sorted
            if (dist.at(w, v) == dist.at(cur, v) - 1) {
                next = w;
                break;
            }
        }
        cur = next;
        visits[cur] += weight;
    }
}

}  // namespace

FlowSummary per_node_flows(const Graph& g_a, const DistanceMatrix& dist_a, const Graph& g_b,
                           const DistanceMatrix& dist_b, const PeeringSet& p,
                           TrafficSpec traffic) {
    const int n = dist_a.node_count();
    const auto& links = p.links();
    auto exits_a = exit_assignment(dist_a, p, Side::A);
    auto exits_b = exit_assignment(dist_b, p, Side::B);

    FlowSummary flows;
    flows.per_node_a.assign(n, 0);
    flows.per_node_b.assign(n, 0);

    // A->B: weight 100 per packet, n packets share each source's A-segment.
    std::vector<int64_t> entry_weight_b(n, 0), entry_weight_a(n, 0);
    for (int i = 0; i < n; ++i) {
        add_path_visits(g_a, dist_a, i, links[exits_a[i]].a, int64_t{100} * n, flows.per_node_a);
        entry_weight_b[links[exits_a[i]].b] += 100;
    }
    for (int b = 0; b < n; ++b)
        if (entry_weight_b[b] > 0)
            for (int j = 0; j < n; ++j)
                add_path_visits(g_b, dist_b, b, j, entry_weight_b[b], flows.per_node_b);

    // B->A: weight beta per packet.
    if (traffic.beta_centi > 0) {
        for (int j = 0; j < n; ++j) {
            add_path_visits(g_b, dist_b, j, links[exits_b[j]].b,
                            int64_t{traffic.beta_centi} * n, flows.per_node_b);
            entry_weight_a[links[exits_b[j]].a] += traffic.beta_centi;
        }
        for (int a = 0; a < n; ++a)
            if (entry_weight_a[a] > 0)
                for (int i = 0; i < n; ++i)
                    add_path_visits(g_a, dist_a, a, i, entry_weight_a[a], flows.per_node_a);
    }

    for (int64_t f : flows.per_node_a) flows.total_a_scaled += f;
    for (int64_t f : flows.per_node_b) flows.total_b_scaled += f;
    return flows;
}

}  // namespace peering
