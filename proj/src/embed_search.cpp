#include "treehost/embed_search.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

namespace treehost {

namespace {

// Fixed-width bitset over host vertices.
struct Domain {
    std::vector<std::uint64_t> bits;

    static Domain full(int n) {
        Domain d;
        d.bits.assign((n + 63) / 64, ~0ull);
        if (n % 64) d.bits.back() = (1ull << (n % 64)) - 1;
        return d;
    }

    bool test(int v) const { return bits[v >> 6] & (1ull << (v & 63)); }
    void reset(int v) { bits[v >> 6] &= ~(1ull << (v & 63)); }

    void restrict_to_neighbors(const Graph& host, int v) {
        Domain mask;
        mask.bits.assign(bits.size(), 0);
        for (int w : host.neighbors(v)) mask.bits[w >> 6] |= 1ull << (w & 63);
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] &= mask.bits[i];
    }

    bool empty() const {
        for (auto b : bits)
            if (b) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto b : bits) c += __builtin_popcountll(b);
        return c;
    }
};

struct Searcher {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> order;           // pattern vertices in assignment order
    std::vector<int> assignment;      // pattern vertex -> host vertex or -1
    std::vector<std::vector<Domain>> saved;  // domain snapshots per depth

    bool run(std::vector<Domain>& domains) {
        const int np = pattern.vertex_count();
        saved.assign(np + 1, {});
        return descend(0, domains);
    }

    bool descend(int depth, std::vector<Domain>& domains) {
        const int np = pattern.vertex_count();
        if (depth == np) return true;
        const int p = order[depth];
        Domain cand = domains[p];
        for (std::size_t blk = 0; blk < cand.bits.size(); ++blk) {
            std::uint64_t word = cand.bits[blk];
            while (word) {
                const int v = static_cast<int>(blk * 64 + __builtin_ctzll(word));
                word &= word - 1;
                saved[depth] = domains;
                assignment[p] = v;
                bool dead = false;
                for (int q = 0; q < np && !dead; ++q) {
                    if (assignment[q] >= 0 || q == p) continue;
                    domains[q].reset(v);
                    if (pattern.has_edge(p, q)) domains[q].restrict_to_neighbors(host, v);
                    if (domains[q].empty()) dead = true;
                }
                if (!dead && descend(depth + 1, domains)) return true;
                assignment[p] = -1;
                domains = saved[depth];
            }
        }
        return false;
    }
};

}  // namespace

std::optional<EmbeddingMap> subgraph_embed(const Graph& pattern, const Graph& host,
                                           const std::vector<Pin>& pins,
                                           const std::vector<AdjacencyConstraint>& constraints) {
    const int np = pattern.vertex_count();
    const int nh = host.vertex_count();

    std::set<int> pinned_p, pinned_h;
    for (auto [p, h] : pins) {
        if (p < 0 || p >= np || h < 0 || h >= nh) throw InvalidPin("pin out of range");
        if (!pinned_p.insert(p).second || !pinned_h.insert(h).second)
            throw InvalidPin("repeated pin");
    }
    for (const auto& c : constraints)
        insist(c.pattern_vertex >= 0 && c.pattern_vertex < np &&
                   c.required_host_neighbor >= 0 && c.required_host_neighbor < nh,
               "adjacency constraint out of range");

    if (np == 0) return EmbeddingMap{0, {}};
    if (np > nh) return std::nullopt;

    std::vector<Domain> domains(np, Domain::full(nh));
    for (int p = 0; p < np; ++p)
        for (int v = 0; v < nh; ++v)
            if (host.degree(v) < pattern.degree(p)) domains[p].reset(v);
    for (auto [p, h] : pins) {
        Domain d;
        d.bits.assign((nh + 63) / 64, 0);
        d.bits[h >> 6] |= 1ull << (h & 63);
        for (std::size_t i = 0; i < domains[p].bits.size(); ++i) domains[p].bits[i] &= d.bits[i];
    }
    for (const auto& c : constraints)
        domains[c.pattern_vertex].restrict_to_neighbors(host, c.required_host_neighbor);
    for (int p = 0; p < np; ++p)
        if (domains[p].empty()) return std::nullopt;

    // Assignment order: BFS from the most-constrained pinned vertex (smallest
    // domain), ties by descending pattern degree; without pins, from the
    // highest-degree vertex. Remaining components appended the same way.
    std::vector<int> order;
    std::vector<bool> queued(np, false);
    auto better_seed = [&](int a, int b) {  // true if a is a better start than b
        if (b < 0) return true;
        const bool pa = pinned_p.count(a) > 0, pb = pinned_p.count(b) > 0;
        if (pa != pb) return pa;
        if (pa && pb) {
            int ca = domains[a].count(), cb = domains[b].count();
            if (ca != cb) return ca < cb;
        }
        if (pattern.degree(a) != pattern.degree(b))
            return pattern.degree(a) > pattern.degree(b);
        return a < b;
    };
    while ((int)order.size() < np) {
        int seed = -1;
        for (int v = 0; v < np; ++v)
            if (!queued[v] && better_seed(v, seed)) seed = v;
        std::deque<int> bfs{seed};
        queued[seed] = true;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            order.push_back(u);
            std::vector<int> next(pattern.neighbors(u).begin(), pattern.neighbors(u).end());
            std::sort(next.begin(), next.end(), [&](int a, int b) {
                if (pattern.degree(a) != pattern.degree(b))
                    return pattern.degree(a) > pattern.degree(b);
                return a < b;
            });
            for (int w : next)
                if (!queued[w]) {
                    queued[w] = true;
                    bfs.push_back(w);
                }
        }
    }

    Searcher s{pattern, host, std::move(order), std::vector<int>(np, -1), {}};
    if (!s.run(domains)) return std::nullopt;
    EmbeddingMap map{np, s.assignment};
    insist(verify_embedding(pattern, host, map, pins, constraints),
           "subgraph_embed produced an invalid map");
    return map;
}

}  // namespace treehost
