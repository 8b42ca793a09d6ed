#include "treehost/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <map>
#include <set>

namespace treehost {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g, int extra_apex = 0) {
    const int n = g.vertex_count();
    BoostGraph bg(n + extra_apex);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) boost::add_edge(u, v, bg);
    if (extra_apex)
        for (int v = 0; v < n; ++v) boost::add_edge(n, v, bg);
    auto eidx = boost::get(boost::edge_index, bg);
    int k = 0;
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) boost::put(eidx, *ei, k++);
    return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> planar_rotation(const Graph& g) {
    BoostGraph bg = to_boost(g);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(),
                                              boost::get(boost::vertex_index, bg)));
    if (!ok) return std::nullopt;
    RotationSystem rot;
    rot.order.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const Edge& e : embedding[v]) {
            int u = static_cast<int>(boost::source(e, bg));
            int w = static_cast<int>(boost::target(e, bg));
            rot.order[v].push_back(u == v ? w : u);
        }
    return rot;
}

bool is_outerplanar(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    BoostGraph bg = to_boost(g, 1);
    return boost::boyer_myrvold_planarity_test(bg);
}

int count_faces(const Graph& g, const RotationSystem& rot) {
    // Trace faces: from directed edge (u, v), the next directed edge is
    // (v, w) where w follows u in the rotation at v.
    const int n = g.vertex_count();
    insist((int)rot.order.size() == n, "rotation size mismatch");
    std::map<std::pair<int, int>, int> pos;  // position of u in rotation at v
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < (int)rot.order[v].size(); ++i)
            pos[{v, rot.order[v][i]}] = i;
    std::set<std::pair<int, int>> used;
    int faces = 0;
    for (int u = 0; u < n; ++u)
        for (int v : rot.order[u]) {
            if (used.count({u, v})) continue;
            ++faces;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                auto it = pos.find({b, a});
                insist(it != pos.end(), "rotation is not symmetric");
                const auto& order = rot.order[b];
                int next = order[(it->second + 1) % order.size()];
                a = b;
                b = next;
            }
        }
    return faces;
}

}  // namespace treehost
