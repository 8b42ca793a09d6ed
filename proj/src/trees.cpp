#include "treehost/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <unordered_set>

#include "treehost/limits.hpp"

namespace treehost {

namespace {

std::vector<int> bfs_parents(const Graph& g, int src) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::deque<int> q{src};
    parent[src] = -1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                q.push_back(w);
            }
    }
    return parent;
}

std::vector<int> path_between(const Graph& g, int a, int b) {
    auto parent = bfs_parents(g, a);
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Tree make_tree(const Graph& g) {
    const int n = g.vertex_count();
    insist(n >= 1, "tree must be nonempty");
    insist(g.edge_count() == static_cast<std::size_t>(n - 1), "tree edge count must be n-1");
    auto parent = bfs_parents(g, 0);
    for (int v = 0; v < n; ++v) insist(parent[v] != -2, "tree must be connected");
    return Tree{g};
}

Tree tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return make_tree(make_graph(n, edges));
}

int jordan_separator(const Tree& t) {
    const int n = t.size();
    const Graph& g = t.graph;
    std::vector<int> order = dfs_preorder(t, 0);
    std::vector<int> parent = bfs_parents(g, 0);
    std::vector<int> sub(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    for (int v = 0; v < n; ++v) {
        int worst = n - sub[v];
        for (int w : g.neighbors(v))
            if (w != parent[v]) worst = std::max(worst, sub[w]);
        if (2 * worst <= n) return v;
    }
    insist(false, "no Jordan separator found");
    return -1;
}

int median_vertex(const Tree& t, int a, int b, int c) {
    const Graph& g = t.graph;
    auto pab = path_between(g, a, b);
    auto pac = path_between(g, a, c);
    auto pbc = path_between(g, b, c);
    std::unordered_set<int> sab(pab.begin(), pab.end());
    std::unordered_set<int> sac(pac.begin(), pac.end());
    for (int v : pbc)
        if (sab.count(v) && sac.count(v)) return v;
    insist(false, "median vertex not found");
    return -1;
}

std::vector<int> gyarfas_path(const Tree& t, int v) {
    const int n = t.size();
    const Graph& g = t.graph;
    std::vector<int> path{v};
    std::vector<bool> on_path(n, false);
    on_path[v] = true;
    // Step into the largest remaining component while it exceeds half the
    // remaining vertex count and touches the current endpoint. Components no
    // longer adjacent to the endpoint are already within floor((n-1)/2): two
    // components can never both exceed it, so only the one being walked into
    // ever can.
    while (true) {
        const int remaining = n - static_cast<int>(path.size());
        std::vector<int> comp(n, -1);
        std::vector<int> comp_size, comp_min;
        for (int s = 0; s < n; ++s) {
            if (on_path[s] || comp[s] >= 0) continue;
            int id = static_cast<int>(comp_size.size());
            comp_size.push_back(0);
            comp_min.push_back(s);
            std::deque<int> q{s};
            comp[s] = id;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                ++comp_size[id];
                for (int w : g.neighbors(u))
                    if (!on_path[w] && comp[w] < 0) {
                        comp[w] = id;
                        q.push_back(w);
                    }
            }
        }
        int big = -1;
        for (int id = 0; id < (int)comp_size.size(); ++id)
            if (big < 0 || comp_size[id] > comp_size[big] ||
                (comp_size[id] == comp_size[big] && comp_min[id] < comp_min[big]))
                big = id;
        if (big < 0 || 2 * comp_size[big] <= remaining - 1) break;
        int tail = path.back();
        int next = -1;
        for (int w : g.neighbors(tail))
            if (!on_path[w] && comp[w] == big && (next < 0 || w < next)) next = w;
        if (next < 0) break;  // the big component is frozen away from the endpoint
        path.push_back(next);
        on_path[next] = true;
    }
    return path;
}

namespace {

// Beyer-Hedetniemi successor generation of rooted-tree level sequences,
// root at level 1, in descending lexicographic order.
struct LevelSequences {
    int n;
    std::vector<int> seq;
    bool first = true;

    explicit LevelSequences(int n_) : n(n_) {
        seq.resize(n);
        for (int i = 0; i < n; ++i) seq[i] = i + 1;
    }

    bool next() {
        if (first) {
            first = false;
            return true;
        }
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (seq[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) return false;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (seq[i] == seq[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) seq[i] = seq[i - (p - q)];
        return true;
    }

    Tree tree() const {
        GraphBuilder b(n);
        std::vector<int> last_at_level(n + 2, -1);
        for (int i = 0; i < n; ++i) {
            int lvl = seq[i];
            if (lvl > 1) b.add_edge(i, last_at_level[lvl - 1]);
            last_at_level[lvl] = i;
        }
        return Tree{b.freeze()};
    }
};

std::string ahu_code(const Graph& g, int root, int blocked) {
    std::vector<std::string> codes;
    for (int w : g.neighbors(root))
        if (w != blocked) codes.push_back(ahu_code(g, w, root));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (auto& c : codes) out += c;
    out += ")";
    return out;
}

std::vector<int> centroids(const Tree& t) {
    const int n = t.size();
    const Graph& g = t.graph;
    std::vector<int> order = dfs_preorder(t, 0);
    std::vector<int> parent(n, -1), sub(n, 1);
    {
        std::deque<int> q{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = u;
                    q.push_back(w);
                }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int worst = n - sub[v];
        for (int w : g.neighbors(v))
            if (w != parent[v]) worst = std::max(worst, sub[w]);
        if (2 * worst <= n) out.push_back(v);
    }
    return out;
}

}  // namespace

std::string tree_canonical_string(const Tree& t) {
    auto cs = centroids(t);
    if (cs.size() == 1) return ahu_code(t.graph, cs[0], -1);
    insist(cs.size() == 2, "tree has one or two centroids");
    std::string a = ahu_code(t.graph, cs[0], cs[1]);
    std::string b = ahu_code(t.graph, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

std::vector<Tree> enumerate_trees(int n) {
    insist(n >= 1, "n must be at least 1");
    std::vector<Tree> out;
    std::unordered_set<std::string> seen;
    LevelSequences gen(n);
    while (gen.next()) {
        Tree t = gen.tree();
        if (seen.insert(tree_canonical_string(t)).second) out.push_back(std::move(t));
    }
    return out;
}

Tree caterpillar(int n, int k) {
    insist(k >= 1 && n >= 1, "caterpillar parameters must be positive");
    if (n % k != 0) throw DivisibilityError("k must divide n");
    insist(k > 1 || n >= 2, "C_{n,1} requires n >= 2");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
    const int leaves = n / k - 1;
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < leaves; ++j) b.add_edge(i, next++);
    return Tree{b.freeze()};
}

Tree kary_tree(int k, int h) {
    insist(k >= 1 && h >= 0, "kary_tree parameters out of range");
    long long total = 1, level = 1;
    for (int i = 0; i < h; ++i) {
        level *= k;
        total += level;
        check_vertex_budget(total, "kary_tree");
    }
    GraphBuilder b(static_cast<int>(total));
    for (int v = 1; v < total; ++v) b.add_edge(v, (v - 1) / k);
    return Tree{b.freeze()};
}

Tree random_tree(int n, std::uint64_t seed) {
    insist(n >= 1, "n must be at least 1");
    if (n == 1) return Tree{make_graph(1, {})};
    if (n == 2) return Tree{make_graph(2, {{0, 1}})};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : prufer) ++deg[x];
    GraphBuilder b(n);
    int ptr = 0, leaf = -1;
    for (int x : prufer) {
        if (leaf < 0) {
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
        b.add_edge(leaf, x);
        deg[leaf] = 0;
        if (--deg[x] == 1 && x < ptr)
            leaf = x;
        else
            leaf = -1;
    }
    int a = -1, bv = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
            if (a < 0)
                a = v;
            else
                bv = v;
        }
    b.add_edge(a, bv);
    return Tree{b.freeze()};
}

std::vector<int> dfs_preorder(const Tree& t, int root) {
    const Graph& g = t.graph;
    insist(root >= 0 && root < t.size(), "root out of range");
    std::vector<int> order;
    order.reserve(t.size());
    std::vector<bool> seen(t.size(), false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        auto nb = g.neighbors(u);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it)
            if (!seen[*it]) {
                seen[*it] = true;
                stack.push_back(*it);
            }
    }
    return order;
}

std::vector<int> tree_parent_array(const Tree& t, int root) {
    auto parent = bfs_parents(t.graph, root);
    return parent;
}

Tree tree_from_parent_array(const std::vector<int>& parent) {
    GraphBuilder b(static_cast<int>(parent.size()));
    for (int v = 0; v < (int)parent.size(); ++v)
        if (parent[v] >= 0) b.add_edge(v, parent[v]);
    return make_tree(b.freeze());
}

}  // namespace treehost
