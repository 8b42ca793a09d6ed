#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "treehost/errors.hpp"

namespace treehost {

/// Undirected simple graph over dense 0-based vertex ids, stored as a sorted
/// CSR adjacency structure. Immutable after construction; safe to share
/// across threads.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return adj_.size() / 2; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }

    int degree(int v) const { return off_[v + 1] - off_[v]; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && off_ == other.off_ && adj_ == other.adj_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<std::int64_t> off_ = {0};
    std::vector<int> adj_;
};

/// Accumulates edges, then freezes into a Graph. Duplicate edges collapse;
/// self-loops are rejected.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) : n_(n) { insist(n >= 0, "negative vertex count"); }

    int vertex_count() const { return n_; }

    int add_vertex() { return n_++; }

    void add_edge(int u, int v) {
        insist(u >= 0 && v >= 0 && u < n_ && v < n_, "edge endpoint out of range");
        insist(u != v, "self-loop");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }

    const std::vector<std::pair<int, int>>& pending_edges() const { return edges_; }

    Graph freeze() const {
        auto es = edges_;
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        Graph g;
        g.n_ = n_;
        std::vector<int> deg(n_, 0);
        for (auto [u, v] : es) {
            ++deg[u];
            ++deg[v];
        }
        g.off_.assign(n_ + 1, 0);
        for (int v = 0; v < n_; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
        g.adj_.resize(es.size() * 2);
        std::vector<std::int64_t> cursor(g.off_.begin(), g.off_.end() - 1);
        for (auto [u, v] : es) {
            g.adj_[cursor[u]++] = v;
            g.adj_[cursor[v]++] = u;
        }
        // per-vertex lists come out sorted because the edge list is sorted,
        // except for the reverse direction; sort to be safe
        for (int v = 0; v < n_; ++v) {
            auto b = g.adj_.begin() + g.off_[v];
            auto e = g.adj_.begin() + g.off_[v + 1];
            std::sort(b, e);
        }
        return g;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// Convenience: graph from vertex count and edge list.
inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.freeze();
}

/// Injective vertex map from a pattern graph into a host graph.
struct EmbeddingMap {
    int pattern_size = 0;
    std::vector<int> image;  // one host vertex per pattern vertex
};

/// Requires image[pattern_vertex] to be adjacent (in the host) to a fixed
/// host vertex.
struct AdjacencyConstraint {
    int pattern_vertex = 0;
    int required_host_neighbor = 0;
};

using Pin = std::pair<int, int>;  // (pattern vertex, host vertex)

/// Independent certificate checker: true iff `map` is injective, carries every
/// pattern edge to a host edge, and satisfies all pins and adjacency
/// constraints. Never throws; any malformed input yields false.
bool verify_embedding(const Graph& pattern, const Graph& host, const EmbeddingMap& map,
                      const std::vector<Pin>& pins = {},
                      const std::vector<AdjacencyConstraint>& constraints = {});

}  // namespace treehost
