#pragma once

// Independent reference implementations used only to cross-check the library:
// exhaustive search over injections, brute-force Kuratowski subdivision
// planarity, tree counting by the cycle-index recurrences, and small-case
// enumerations. Deliberately simple and slow.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treehost/canonical.hpp"
#include "treehost/codec.hpp"
#include "treehost/graph.hpp"
#include "treehost/planarity.hpp"

namespace oracle {

using treehost::AdjacencyConstraint;
using treehost::EmbeddingMap;
using treehost::Graph;
using treehost::GraphBuilder;
using treehost::Pin;

// Complete search over all injective maps, no pruning beyond feasibility.
inline bool exhaustive_embed(const Graph& pattern, const Graph& host,
                             const std::vector<Pin>& pins = {},
                             const std::vector<AdjacencyConstraint>& cs = {}) {
    const int np = pattern.vertex_count(), nh = host.vertex_count();
    if (np > nh) return false;
    std::vector<int> image(np, -1);
    std::vector<bool> used(nh, false);
    auto ok_partial = [&](int p, int v) {
        for (auto [pp, hh] : pins)
            if (pp == p && hh != v) return false;
        for (const auto& c : cs)
            if (c.pattern_vertex == p && !host.has_edge(v, c.required_host_neighbor))
                return false;
        for (int q : pattern.neighbors(p))
            if (image[q] >= 0 && !host.has_edge(v, image[q])) return false;
        return true;
    };
    std::function<bool(int)> go = [&](int p) -> bool {
        if (p == np) return true;
        for (int v = 0; v < nh; ++v) {
            if (used[v] || !ok_partial(p, v)) continue;
            image[p] = v;
            used[v] = true;
            if (go(p + 1)) return true;
            image[p] = -1;
            used[v] = false;
        }
        return false;
    };
    return go(0);
}

// --- Kuratowski subdivision search -----------------------------------------

// Tries to connect the given branch-vertex pairs by internally disjoint paths
// through non-branch vertices.
inline bool connect_pairs(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                          std::size_t idx, std::vector<bool>& used) {
    if (idx == pairs.size()) return true;
    auto [s, t] = pairs[idx];
    // DFS over paths from s to t whose interior vertices are unused non-branch
    std::vector<int> stack;
    std::function<bool(int)> walk = [&](int u) -> bool {
        if (g.has_edge(u, t)) {
            if (connect_pairs(g, pairs, idx + 1, used)) return true;
        }
        for (int w : g.neighbors(u)) {
            if (used[w] || w == t) continue;
            used[w] = true;
            if (walk(w)) {
                used[w] = false;
                return true;
            }
            used[w] = false;
        }
        return false;
    };
    return walk(s);
}

inline bool has_subdivision(const Graph& g, int parts_a, int parts_b) {
    // parts_a = 5, parts_b = 0 searches K5; parts_a = parts_b = 3 searches K33
    const int n = g.vertex_count();
    const int k = parts_a + parts_b;
    std::vector<int> branch;
    std::function<bool(int, int)> choose = [&](int from, int left) -> bool {
        if (left == 0) {
            std::vector<std::pair<int, int>> pairs;
            if (parts_b == 0) {
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) pairs.push_back({branch[i], branch[j]});
            } else {
                for (int i = 0; i < parts_a; ++i)
                    for (int j = 0; j < parts_b; ++j)
                        pairs.push_back({branch[i], branch[parts_a + j]});
            }
            std::vector<bool> used(n, false);
            for (int b : branch) used[b] = true;
            return connect_pairs(g, pairs, 0, used);
        }
        for (int v = from; v < n; ++v) {
            branch.push_back(v);
            if (choose(v + 1, left - 1)) return true;
            branch.pop_back();
        }
        return false;
    };
    if (parts_b == 0) return choose(0, k);
    // bipartition classes are unordered between themselves but the two sides
    // may interleave arbitrarily: choose all k vertices then split
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<int> pick;
    std::function<bool(int, int)> choose6 = [&](int from, int left) -> bool {
        if (left == 0) {
            std::vector<int> side(k, 0);
            std::function<bool(int, int)> split = [&](int i, int ones) -> bool {
                if (i == k) {
                    if (ones != parts_b) return false;
                    branch.clear();
                    for (int j = 0; j < k; ++j)
                        if (!side[j]) branch.push_back(pick[j]);
                    for (int j = 0; j < k; ++j)
                        if (side[j]) branch.push_back(pick[j]);
                    std::vector<std::pair<int, int>> pairs;
                    for (int a = 0; a < parts_a; ++a)
                        for (int b = 0; b < parts_b; ++b)
                            pairs.push_back({branch[a], branch[parts_a + b]});
                    std::vector<bool> used(n, false);
                    for (int b : branch) used[b] = true;
                    return connect_pairs(g, pairs, 0, used);
                }
                side[i] = 0;
                if (split(i + 1, ones)) return true;
                side[i] = 1;
                return split(i + 1, ones + 1);
            };
            return split(0, 0);
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            if (choose6(v + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose6(0, k);
}

inline bool planar_bruteforce(const Graph& g) {
    if (g.vertex_count() >= 5 && has_subdivision(g, 5, 0)) return false;
    if (g.vertex_count() >= 6 && has_subdivision(g, 3, 3)) return false;
    return true;
}

// --- tree counting ----------------------------------------------------------

// r(n): rooted trees; t(n): free trees via the dissimilarity formula.
inline std::vector<long long> rooted_tree_counts(int nmax) {
    std::vector<long long> r(nmax + 1, 0);
    r[1] = 1;
    for (int n = 2; n <= nmax; ++n) {
        long long acc = 0;
        for (int k = 1; k < n; ++k) {
            long long ck = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) ck += d * r[d];
            acc += ck * r[n - k];
        }
        r[n] = acc / (n - 1);
    }
    return r;
}

inline std::vector<long long> free_tree_counts(int nmax) {
    auto r = rooted_tree_counts(nmax);
    std::vector<long long> t(nmax + 1, 0);
    t[1] = 1;
    for (int n = 2; n <= nmax; ++n) {
        long long pairs = 0;
        for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
        if (n % 2 == 0) pairs -= r[n / 2];
        t[n] = r[n] - pairs / 2;
    }
    return t;
}

// --- small enumerations -----------------------------------------------------

inline std::vector<Graph> all_graphs_up_to_iso(int n) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    const int bits = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        GraphBuilder b(n);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                if (mask & (1LL << idx)) b.add_edge(i, j);
        Graph g = b.freeze();
        if (seen.insert(treehost::canonical_form(g)).second) out.push_back(std::move(g));
    }
    return out;
}

// All triangulations of the convex polygon 0..n-1 (as edge sets): the edge
// (first, last) of each sub-polygon forms a triangle with every possible apex.
inline std::vector<std::vector<std::pair<int, int>>> polygon_tris_rec(
    const std::vector<int>& poly) {
    const int m = static_cast<int>(poly.size());
    if (m == 2) return {{{std::min(poly[0], poly[1]), std::max(poly[0], poly[1])}}};
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int k = 1; k <= m - 2; ++k) {
        auto lefts = polygon_tris_rec({poly.begin(), poly.begin() + k + 1});
        auto rights = polygon_tris_rec({poly.begin() + k, poly.end()});
        for (const auto& L : lefts)
            for (const auto& R : rights) {
                auto edges = L;
                edges.insert(edges.end(), R.begin(), R.end());
                edges.push_back({std::min(poly[0], poly[m - 1]), std::max(poly[0], poly[m - 1])});
                out.push_back(std::move(edges));
            }
    }
    return out;
}

inline std::vector<Graph> polygon_triangulations(int n) {
    std::vector<int> poly(n);
    std::iota(poly.begin(), poly.end(), 0);
    std::vector<Graph> out;
    for (auto& es : polygon_tris_rec(poly)) {
        GraphBuilder b(n);
        for (auto [a, bb] : es) b.add_edge(a, bb);
        out.push_back(b.freeze());
    }
    return out;
}

// All n-vertex maximal planar graphs up to isomorphism, by diagonal flips
// from a given start triangulation (the flip graph of triangulations is
// connected).
inline std::vector<Graph> all_triangulations_by_flips(const Graph& start) {
    std::vector<Graph> queue{start};
    std::set<std::string> seen{treehost::canonical_form(start)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Graph g = queue[head];
        auto rot = treehost::planar_rotation(g);
        if (!rot) continue;
        std::map<std::pair<int, int>, int> pos;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int i = 0; i < (int)rot->order[v].size(); ++i) pos[{v, rot->order[v][i]}] = i;
        std::map<std::pair<int, int>, std::vector<int>> edge_apex;
        std::set<std::pair<int, int>> used;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v : rot->order[u]) {
                if (used.count({u, v})) continue;
                std::vector<int> cyc;
                int a = u, b = v;
                while (!used.count({a, b})) {
                    used.insert({a, b});
                    cyc.push_back(a);
                    const auto& order = rot->order[b];
                    int next = order[(pos[{b, a}] + 1) % order.size()];
                    a = b;
                    b = next;
                }
                if (cyc.size() != 3) continue;
                for (int i = 0; i < 3; ++i) {
                    int x = cyc[i], y = cyc[(i + 1) % 3], z = cyc[(i + 2) % 3];
                    edge_apex[{std::min(x, y), std::max(x, y)}].push_back(z);
                }
            }
        for (auto& [e, apexes] : edge_apex) {
            if (apexes.size() != 2) continue;
            int c = apexes[0], d = apexes[1];
            if (c == d || g.has_edge(c, d)) continue;
            GraphBuilder b(g.vertex_count());
            for (auto [x, y] : g.edges())
                if (!(x == e.first && y == e.second)) b.add_edge(x, y);
            b.add_edge(c, d);
            Graph flipped = b.freeze();
            if (flipped.edge_count() != g.edge_count()) continue;
            if (seen.insert(treehost::canonical_form(flipped)).second)
                queue.push_back(flipped);
        }
    }
    return queue;
}

// Is g a 3-tree reachable to K3/K4 by SOME elimination order (backtracking)?
inline bool brute_3tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    if (n == 3) return g.edge_count() == 3;
    if (n == 4) return g.edge_count() == 6;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 3) continue;
        auto nb = g.neighbors(v);
        if (!(g.has_edge(nb[0], nb[1]) && g.has_edge(nb[0], nb[2]) &&
              g.has_edge(nb[1], nb[2])))
            continue;
        GraphBuilder b(n - 1);
        auto idx = [&](int u) { return u < v ? u : u - 1; };
        for (auto [x, y] : g.edges())
            if (x != v && y != v) b.add_edge(idx(x), idx(y));
        if (brute_3tree(b.freeze())) return true;
    }
    return false;
}

// One-page check: with vertices at line positions pos[], arcs must not cross.
inline bool one_page_noncrossing(const Graph& g, const std::vector<int>& pos) {
    auto arcs = g.edges();
    for (auto& [a, b] : arcs) {
        int pa = pos[a], pb = pos[b];
        if (pa > pb) std::swap(pa, pb);
        a = pa;
        b = pb;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            if (a < c && c < b && b < d) return false;
            if (c < a && a < d && d < b) return false;
        }
    return true;
}

}  // namespace oracle
