#include "treehost/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "treehost/canonical.hpp"
#include "treehost/embed_search.hpp"
#include "treehost/limits.hpp"

namespace treehost {

namespace {

// One elimination step: a vertex of degree 3 whose neighborhood is a triangle.
std::vector<int> removable_vertices(const std::vector<std::set<int>>& adj,
                                    const std::vector<bool>& gone) {
    std::vector<int> out;
    for (int v = 0; v < (int)adj.size(); ++v) {
        if (gone[v] || adj[v].size() != 3) continue;
        auto it = adj[v].begin();
        int a = *it++, b = *it++, c = *it;
        if (adj[a].count(b) && adj[a].count(c) && adj[b].count(c)) out.push_back(v);
    }
    return out;
}

bool is_stacked_impl(const Graph& g, std::mt19937_64* rng) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<std::set<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) adj[u].insert(w);
    std::vector<bool> gone(n, false);
    int remaining = n;
    auto complete = [&](int k) {
        // the k remaining vertices must form K_k
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (!gone[v]) vs.push_back(v);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!adj[vs[i]].count(vs[j])) return false;
        return (int)vs.size() == k;
    };
    while (remaining > 4) {
        auto cand = removable_vertices(adj, gone);
        if (cand.empty()) return false;
        int v = cand[0];
        if (rng) v = cand[(*rng)() % cand.size()];
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        gone[v] = true;
        --remaining;
    }
    return complete(remaining);
}

}  // namespace

bool is_stacked(const Graph& g) { return is_stacked_impl(g, nullptr); }

bool is_stacked_randomized(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return is_stacked_impl(g, &rng);
}

std::vector<Graph> enumerate_stacked(int n) {
    insist(n >= 3, "stacked triangulations need n >= 3");
    check_vertex_budget(n, "enumerate_stacked");
    // state: graph edges plus the current face list (sphere faces, so the
    // initial K4 exposes all four triangles)
    struct State {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::array<int, 3>> faces;
        int nv;
    };
    if (n == 3) return {make_graph(3, {{0, 1}, {0, 2}, {1, 2}})};

    State k4;
    k4.nv = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.edges.push_back({i, j});
    k4.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

    std::vector<State> frontier{k4};
    for (int sz = 4; sz < n; ++sz) {
        std::vector<State> next;
        std::unordered_set<std::string> seen;
        for (const State& s : frontier)
            for (std::size_t f = 0; f < s.faces.size(); ++f) {
                State t = s;
                const auto face = t.faces[f];
                const int w = t.nv++;
                for (int u : face) t.edges.push_back({u, w});
                t.faces.erase(t.faces.begin() + f);
                t.faces.push_back({face[0], face[1], w});
                t.faces.push_back({face[0], face[2], w});
                t.faces.push_back({face[1], face[2], w});
                Graph g = make_graph(t.nv, t.edges);
                if (seen.insert(canonical_form(g)).second) next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(frontier.size());
    for (const State& s : frontier) out.push_back(make_graph(s.nv, s.edges));
    return out;
}

namespace {

int tree_diameter(const Tree& t) {
    auto far = [&](int src) {
        std::vector<int> dist(t.size(), -1);
        std::deque<int> q{src};
        dist[src] = 0;
        int best = src;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (dist[u] > dist[best]) best = u;
            for (int w : t.graph.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        return std::pair<int, int>{best, dist[best]};
    };
    auto [a, _] = far(0);
    return far(a).second;
}

std::vector<Tree> hardest_first_family(int n) {
    std::vector<Tree> family = enumerate_trees(n);
    std::vector<int> maxdeg(family.size()), diam(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        int md = 0;
        for (int v = 0; v < family[i].size(); ++v)
            md = std::max(md, family[i].graph.degree(v));
        maxdeg[i] = md;
        diam[i] = tree_diameter(family[i]);
    }
    std::vector<std::size_t> idx(family.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (maxdeg[a] != maxdeg[b]) return maxdeg[a] > maxdeg[b];
        return diam[a] > diam[b];
    });
    std::vector<Tree> out;
    out.reserve(family.size());
    for (auto i : idx) out.push_back(std::move(family[i]));
    return out;
}

SearchCertificate check_against(const Graph& g, const std::vector<Tree>& family, int n) {
    const auto start = std::chrono::steady_clock::now();
    SearchCertificate cert;
    cert.candidate = g;
    cert.n = n;
    cert.trees = family;
    cert.universal = true;
    for (const Tree& t : family) {
        auto map = subgraph_embed(t.graph, g);
        if (!map) {
            cert.universal = false;
            cert.failing_tree = t;
            cert.maps.clear();
            break;
        }
        cert.maps.push_back(std::move(*map));
    }
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return cert;
}

}  // namespace

SearchCertificate universality_check(const Graph& g, int n) {
    insist(g.vertex_count() >= n, "candidate has fewer than n vertices");
    return check_against(g, hardest_first_family(n), n);
}

std::optional<SearchCertificate> find_universal(const std::vector<Graph>& candidates, int n,
                                                int jobs) {
    insist(jobs >= 1, "jobs must be positive");
    const auto family = hardest_first_family(n);
    const int m = static_cast<int>(candidates.size());
    std::vector<std::optional<SearchCertificate>> results(m);
    std::atomic<int> next{0};
    std::atomic<int> first_universal{m};

    auto worker = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= m) return;
            if (i > first_universal.load()) continue;  // a smaller winner is already known
            SearchCertificate cert = check_against(candidates[i], family, n);
            if (cert.universal) {
                int cur = first_universal.load();
                while (i < cur && !first_universal.compare_exchange_weak(cur, i)) {
                }
            }
            results[i] = std::move(cert);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // commit in source order: the first universal candidate, all earlier ones
    // fully decided
    for (int i = 0; i < m; ++i) {
        if (!results[i]) continue;  // skipped: some earlier candidate won
        if (results[i]->universal) return results[i];
    }
    return std::nullopt;
}

}  // namespace treehost
