#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace peering {

// Undirected, connected provider topology. Nodes are 0..n-1.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges canonicalized: u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adjacency_[u]; }

    bool has_edge(int u, int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// All-pairs hop distances of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> d);

    int node_count() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

    // Sum over all v of at(u, v). Precomputed; used by single-link flow totals.
    int64_t row_sum(int u) const { return row_sums_[u]; }

private:
    int n_;
    std::vector<int> d_;
    std::vector<int64_t> row_sums_;
};

enum class RegularKind { path, cycle, complete };

// Barabasi-Albert preferential attachment. Seed is a complete graph on m+1
// nodes; each later node attaches m edges to distinct existing nodes chosen
// with probability proportional to degree at the start of the step.
// Deterministic given seed.
Graph generate_ba(int n, int m, uint64_t seed);

Graph generate_regular(RegularKind kind, int n);

RegularKind parse_regular_kind(const std::string& name);

// BFS from every node. Throws if the graph is disconnected, naming an
// unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g);

// Edge-list text format: header "n m", then m lines "u v".
Graph load_graph(const std::string& text);
std::string save_graph(const Graph& g);

}  // namespace peering
