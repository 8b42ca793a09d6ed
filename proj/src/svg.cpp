#include "treehost/svg.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace treehost {

namespace {

// Longest face walked from the rotation system; for outerplanar graphs with
// an outerplanar rotation this recovers the outer cycle.
std::vector<int> longest_face(const Graph& g, const RotationSystem& rot) {
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < (int)rot.order[v].size(); ++i) pos[{v, rot.order[v][i]}] = i;
    std::set<std::pair<int, int>> used;
    std::vector<int> best;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : rot.order[u]) {
            if (used.count({u, v})) continue;
            std::vector<int> walk;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                auto it = pos.find({b, a});
                if (it == pos.end()) break;
                const auto& order = rot.order[b];
                int next = order[(it->second + 1) % order.size()];
                a = b;
                b = next;
            }
            std::set<int> distinct(walk.begin(), walk.end());
            if (distinct.size() > best.size()) best.assign(distinct.begin(), distinct.end());
            if (distinct.size() >= best.size()) {
                // keep first-visit order of the walk
                best.clear();
                std::set<int> seen;
                for (int w : walk)
                    if (seen.insert(w).second) best.push_back(w);
            }
        }
    return best;
}

}  // namespace

std::string render_svg(const Graph& g, const std::optional<RotationSystem>& rot,
                       const std::vector<int>& highlight) {
    const int n = g.vertex_count();
    std::vector<int> order;
    if (rot && n > 0) order = longest_face(g, *rot);
    std::set<int> placed(order.begin(), order.end());
    for (int v = 0; v < n; ++v)
        if (!placed.count(v)) order.push_back(v);

    const double size = 720.0, cx = size / 2, cy = size / 2, r = size / 2 - 40;
    std::vector<std::pair<double, double>> pt(n);
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * i / std::max(1, n) - M_PI / 2;
        pt[order[i]] = {cx + r * std::cos(a), cy + r * std::sin(a)};
    }
    std::set<int> hi(highlight.begin(), highlight.end());

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out << "<line x1=\"" << pt[u].first << "\" y1=\"" << pt[u].second
                    << "\" x2=\"" << pt[v].first << "\" y2=\"" << pt[v].second
                    << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    for (int v = 0; v < n; ++v) {
        out << "<circle cx=\"" << pt[v].first << "\" cy=\"" << pt[v].second << "\" r=\""
            << (n > 200 ? 2.5 : 6.0) << "\" fill=\"" << (hi.count(v) ? "#d33" : "#1565c0")
            << "\"/>\n";
        if (n <= 200)
            out << "<text x=\"" << pt[v].first + 7 << "\" y=\"" << pt[v].second - 7
                << "\" font-size=\"10\" fill=\"#222\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace treehost
