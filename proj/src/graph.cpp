#include "peering/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peering {

namespace {

void check_connected(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    if (reached != n) {
        int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        throw std::invalid_argument("graph is disconnected: no path from node 0 to node " +
                                    std::to_string(missing));
    }
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    check_connected(n_, adjacency_);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
    row_sums_.resize(n_);
    for (int u = 0; u < n_; ++u)
        row_sums_[u] = std::accumulate(d_.begin() + static_cast<size_t>(u) * n_,
                                       d_.begin() + static_cast<size_t>(u + 1) * n_, int64_t{0});
}

Graph generate_ba(int n, int m, uint64_t seed) {
    if (m < 1) throw std::invalid_argument("ba: m must be >= 1");
    if (n < m + 1) throw std::invalid_argument("ba: need n >= m+1");
    std::mt19937_64 rng(seed);

    std::vector<std::pair<int, int>> edges;
    std::vector<int64_t> degree(n, 0);
    for (int u = 0; u < m + 1; ++u)
        for (int v = u + 1; v < m + 1; ++v) {
            edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }

    std::vector<int64_t> weight;  // degrees frozen at the start of each step
    for (int node = m + 1; node < n; ++node) {
        weight.assign(degree.begin(), degree.begin() + node);
        int64_t total = std::accumulate(weight.begin(), weight.end(), int64_t{0});
        for (int pick = 0; pick < m; ++pick) {
            int64_t r = static_cast<int64_t>(rng() % static_cast<uint64_t>(total));
            int target = 0;
            while (r >= weight[target]) r -= weight[target++];
            edges.emplace_back(target, node);
            total -= weight[target];
            weight[target] = 0;  // without replacement
            ++degree[target];
        }
        degree[node] = m;
    }
    return Graph(n, std::move(edges));
}

Graph generate_regular(RegularKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case RegularKind::path:
            if (n < 2) throw std::invalid_argument("path: need n >= 2");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case RegularKind::cycle:
            if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case RegularKind::complete:
            if (n < 2) throw std::invalid_argument("complete: need n >= 2");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
    }
    return Graph(n, std::move(edges));
}

RegularKind parse_regular_kind(const std::string& name) {
    if (name == "path") return RegularKind::path;
    if (name == "cycle") return RegularKind::cycle;
    if (name == "complete") return RegularKind::complete;
    throw std::invalid_argument("unknown topology kind: " + name);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> d(static_cast<size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        auto* row = d.data() + static_cast<size_t>(s) * n;
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int v : g.neighbors(u)) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (row[v] < 0)
                throw std::invalid_argument("graph is disconnected: no path from node " +
                                            std::to_string(s) + " to node " + std::to_string(v));
    }
    return DistanceMatrix(n, std::move(d));
}

Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: malformed header, expected \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: malformed edge line " + std::to_string(i + 1));
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

std::string save_graph(const Graph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace peering
