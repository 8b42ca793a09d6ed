#include "treehost/canonical.hpp"

#include <algorithm>
#include <map>

namespace treehost {

namespace {

// 1-WL refinement: split color classes by sorted neighbor-color multisets
// until stable. Color ids are dense and ordered, so the refinement is
// isomorphism-invariant.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
    const int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(colors[v]);
            for (int w : g.neighbors(v)) s.push_back(colors[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> dense;
        for (int v = 0; v < n; ++v) dense.emplace(sig[v].first, 0);
        int next = 0;
        for (auto& [k, id] : dense) id = next++;
        std::vector<int> out(n);
        for (int v = 0; v < n; ++v) out[v] = dense[sig[v].first];
        if (out == colors) return out;
        colors = std::move(out);
    }
}

std::string certificate(const Graph& g, const std::vector<int>& base,
                        const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::string cert;
    cert.reserve(4 + n + (n * (n - 1) / 2 + 7) / 8);
    cert.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) cert.push_back(static_cast<char>(base[order[i]] + 1));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
            if (++filled == 8) {
                cert.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) cert.push_back(static_cast<char>(acc << (8 - filled)));
    return cert;
}

struct Canonizer {
    const Graph& g;
    const std::vector<int>& base;  // input colors
    std::string best;
    std::vector<int> best_order;

    void explore(std::vector<int> colors) {
        colors = refine(g, colors);
        const int n = g.vertex_count();
        // find the first non-singleton color class
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < n; ++v) classes[colors[v]].push_back(v);
        const std::vector<int>* cell = nullptr;
        for (auto& [c, vs] : classes)
            if (vs.size() > 1) {
                cell = &vs;
                break;
            }
        if (!cell) {
            std::vector<int> order(n);
            for (auto& [c, vs] : classes) order[c] = vs[0];
            std::string cert = certificate(g, base, order);
            if (best.empty() || cert < best) {
                best = std::move(cert);
                best_order = std::move(order);
            }
            return;
        }
        for (int v : *cell) {
            std::vector<int> next = colors;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (next[u] >= next[v] && u != v) ++next[u];
            explore(std::move(next));
        }
    }
};

std::pair<std::string, std::vector<int>> canonize(const Graph& g, std::vector<int> colors) {
    const int n = g.vertex_count();
    if (colors.empty()) colors.assign(n, 0);
    insist((int)colors.size() == n, "color vector size mismatch");
    if (n == 0) return {std::string(1, '\0'), {}};
    // densify input colors (order-preserving)
    {
        std::map<int, int> dense;
        for (int c : colors) dense.emplace(c, 0);
        int next = 0;
        for (auto& [k, v] : dense) v = next++;
        for (int& c : colors) c = dense[c];
    }
    Canonizer cz{g, colors, {}, {}};
    cz.explore(colors);
    return {cz.best, cz.best_order};
}

}  // namespace

std::string canonical_form(const Graph& g, const std::vector<int>& colors) {
    return canonize(g, colors).first;
}

std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors) {
    auto order = canonize(g, colors).second;
    std::vector<int> pos(g.vertex_count());
    for (int i = 0; i < (int)order.size(); ++i) pos[order[i]] = i;
    return pos;
}

}  // namespace treehost
