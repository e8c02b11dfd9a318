#pragma once

// Brute-force packet-path enumerator used as an independent check of the
// routing/cost implementation. Everything here is recomputed from the graph
// adjacency alone: its own BFS, its own exit scan, its own visit counting.

#include <cstdint>
#include <deque>
#include <tuple>
#include <utility>
#include <vector>

#include "peering/graph.hpp"
#include "peering/routing.hpp"

namespace oracle {

inline std::vector<std::vector<int>> bfs_distances(const peering::Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> queue{s};
        dist[s][s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push_back(v);
                }
        }
    }
    return dist;
}

// Exit for one source: scan every link, keep the (distance, near, far)
// minimum.
inline peering::Link pick_exit(const std::vector<std::vector<int>>& dist,
                               const std::vector<peering::Link>& links, int src, bool side_a) {
    peering::Link best = links.front();
    auto key = [&](const peering::Link& l) {
        int near = side_a ? l.a : l.b;
        int far = side_a ? l.b : l.a;
        return std::tuple{dist[src][near], near, far};
    };
    for (const peering::Link& l : links)
        if (key(l) < key(best)) best = l;
    return best;
}

// Walk the lexicographically least shortest path u -> v, one node at a time.
inline std::vector<int> least_path(const peering::Graph& g,
                                   const std::vector<std::vector<int>>& dist, int u, int v) {
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        for (int w : g.neighbors(cur))
            if (dist[w][v] == dist[cur][v] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

struct Flows {
    int64_t total_a = 0;  // centi-packet node visits
    int64_t total_b = 0;
    std::vector<int64_t> per_node_a;
    std::vector<int64_t> per_node_b;
};

// Enumerates every packet of both directions and counts every node it
// visits, endpoints included.
inline Flows flows(const peering::Graph& g, const peering::PeeringSet& p, int beta_centi) {
    const int n = g.node_count();
    auto dist = bfs_distances(g);
    Flows f;
    f.per_node_a.assign(n, 0);
    f.per_node_b.assign(n, 0);

    for (int i = 0; i < n; ++i) {  // A -> B, weight 100 per packet
        peering::Link exit = pick_exit(dist, p.links(), i, true);
        for (int j = 0; j < n; ++j) {
            for (int node : least_path(g, dist, i, exit.a)) f.per_node_a[node] += 100;
            for (int node : least_path(g, dist, exit.b, j)) f.per_node_b[node] += 100;
        }
    }
    for (int j = 0; j < n; ++j) {  // B -> A, weight beta
        peering::Link exit = pick_exit(dist, p.links(), j, false);
        for (int i = 0; i < n; ++i) {
            for (int node : least_path(g, dist, j, exit.b)) f.per_node_b[node] += beta_centi;
            for (int node : least_path(g, dist, exit.a, i)) f.per_node_a[node] += beta_centi;
        }
    }
    for (int64_t x : f.per_node_a) f.total_a += x;
    for (int64_t x : f.per_node_b) f.total_b += x;
    return f;
}

// Worst single-link totals by scanning all n^2 links with the enumerator.
inline std::pair<int64_t, int64_t> worst_case(const peering::Graph& g, int beta_centi) {
    const int n = g.node_count();
    int64_t worst_a = 0, worst_b = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Flows f = flows(g, peering::PeeringSet({{a, b}}), beta_centi);
            worst_a = std::max(worst_a, f.total_a);
            worst_b = std::max(worst_b, f.total_b);
        }
    return {worst_a, worst_b};
}

// Floating-point cost directly from enumerated flows.
inline std::pair<double, double> cost(const peering::Graph& g, const peering::PeeringSet& p,
                                      double alpha, int beta_centi, double penalty = 1e6) {
    if (p.empty()) return {penalty, penalty};
    const int n = g.node_count();
    auto [nf_a, nf_b] = worst_case(g, beta_centi);
    Flows f = flows(g, p, beta_centi);
    double ca = alpha * static_cast<double>(f.total_a) / static_cast<double>(nf_a) +
                (1.0 - alpha) * p.size() / n;
    double cb = alpha * static_cast<double>(f.total_b) / static_cast<double>(nf_b) +
                (1.0 - alpha) * p.size() / n;
    return {ca, cb};
}

}  // namespace oracle
