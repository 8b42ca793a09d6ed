#include "treehost/graph.hpp"

#include <unordered_set>

namespace treehost {

bool verify_embedding(const Graph& pattern, const Graph& host, const EmbeddingMap& map,
                      const std::vector<Pin>& pins,
                      const std::vector<AdjacencyConstraint>& constraints) {
    const int np = pattern.vertex_count();
    if (map.pattern_size != np) return false;
    if ((int)map.image.size() != np) return false;
    for (int v = 0; v < np; ++v)
        if (map.image[v] < 0 || map.image[v] >= host.vertex_count()) return false;
    std::unordered_set<int> seen;
    seen.reserve(np * 2);
    for (int v = 0; v < np; ++v)
        if (!seen.insert(map.image[v]).second) return false;
    for (int u = 0; u < np; ++u)
        for (int v : pattern.neighbors(u))
            if (u < v && !host.has_edge(map.image[u], map.image[v])) return false;
    for (auto [p, h] : pins) {
        if (p < 0 || p >= np) return false;
        if (map.image[p] != h) return false;
    }
    for (const auto& c : constraints) {
        if (c.pattern_vertex < 0 || c.pattern_vertex >= np) return false;
        if (!host.has_edge(map.image[c.pattern_vertex], c.required_host_neighbor)) return false;
    }
    return true;
}

}  // namespace treehost
