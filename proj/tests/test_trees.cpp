#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "treehost/trees.hpp"

using namespace treehost;

namespace {

// component sizes of t - S, brute force
std::vector<int> component_sizes_without(const Tree& t, const std::set<int>& removed) {
    const int n = t.size();
    std::vector<int> out;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (removed.count(s) || seen[s]) continue;
        int cnt = 0;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int w : t.graph.neighbors(u))
                if (!removed.count(w) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        out.push_back(cnt);
    }
    return out;
}

std::vector<int> path_in_tree(const Tree& t, int a, int b) {
    std::vector<int> parent(t.size(), -2);
    std::vector<int> stack{a};
    parent[a] = -1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : t.graph.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                stack.push_back(w);
            }
    }
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    return path;
}

}  // namespace

TEST_CASE("jordan separator on named trees") {
    Tree p4 = tree_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(jordan_separator(p4) == 1);
    Tree star10 = caterpillar(10, 1);
    CHECK(jordan_separator(star10) == 0);
}

TEST_CASE("jordan separator passes the component-size check") {
    // exhaustively for all trees up to 12 vertices, then random larger ones
    for (int n = 1; n <= 12; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            int j = jordan_separator(t);
            for (int c : component_sizes_without(t, {j})) CHECK(2 * c <= n);
        }
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = 2 + (int)(rng() % 499);
        Tree t = random_tree(n, rng());
        int j = jordan_separator(t);
        for (int c : component_sizes_without(t, {j})) CHECK(2 * c <= n);
    }
    // smallest-qualifying-id property, on a smaller sample (quadratic check)
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 2 + (int)(rng() % 120);
        Tree t = random_tree(n, rng());
        int j = jordan_separator(t);
        for (int v = 0; v < j; ++v) {
            bool ok = true;
            for (int c : component_sizes_without(t, {v}))
                if (2 * c > n) ok = false;
            CHECK_FALSE(ok);
        }
    }
}

TEST_CASE("median vertex") {
    Tree p5 = tree_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(median_vertex(p5, 0, 4, 2) == 2);
    Tree star = caterpillar(4, 1);
    CHECK(median_vertex(star, 1, 2, 3) == 0);
    CHECK(median_vertex(p5, 1, 1, 4) == 1);  // degenerate triple
    // the median lies on all three pairwise paths, random check
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = 3 + (int)(rng() % 200);
        Tree t = random_tree(n, rng());
        int a = (int)(rng() % n), b = (int)(rng() % n), c = (int)(rng() % n);
        int m = median_vertex(t, a, b, c);
        for (auto [x, y] : {std::pair{a, b}, {a, c}, {b, c}}) {
            auto p = path_in_tree(t, x, y);
            CHECK(std::find(p.begin(), p.end(), m) != p.end());
        }
    }
}

TEST_CASE("gyarfas path on named trees") {
    Tree p5 = tree_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(gyarfas_path(p5, 0) == std::vector<int>{0, 1, 2, 3, 4});
    Tree star = caterpillar(6, 1);  // center 0, leaves 1..5
    auto p = gyarfas_path(star, 1);
    CHECK(p == std::vector<int>{1, 0});
}

TEST_CASE("gyarfas path passes the component-size check") {
    for (int n = 1; n <= 12; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int v = 0; v < n; ++v) {
                auto p = gyarfas_path(t, v);
                CHECK(p.front() == v);
                std::set<int> removed(p.begin(), p.end());
                for (int c : component_sizes_without(t, removed)) CHECK(c <= (n - 1) / 2);
            }
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = 1 + (int)(rng() % 500);
        Tree t = random_tree(n, rng());
        const int v = (int)(rng() % n);
        auto p = gyarfas_path(t, v);
        CHECK(p.front() == v);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(t.graph.has_edge(p[i], p[i + 1]));
        std::set<int> removed(p.begin(), p.end());
        for (int c : component_sizes_without(t, removed)) CHECK(c <= (n - 1) / 2);
    }
}

TEST_CASE("enumerate_trees counts match the counting recurrence") {
    auto expect = oracle::free_tree_counts(12);
    for (int n = 1; n <= 12; ++n) CHECK((long long)enumerate_trees(n).size() == expect[n]);
    // the classical values, for the record
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(5).size() == 3);
    CHECK(enumerate_trees(10).size() == 106);
    CHECK(enumerate_trees(11).size() == 235);
}

TEST_CASE("enumerate_trees matches labeled-tree dedup for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> classes;
        if (n <= 2) {
            classes.insert(tree_canonical_string(n == 1 ? Tree{make_graph(1, {})}
                                                        : tree_from_edges(2, {{0, 1}})));
        } else {
            // all Prufer sequences
            std::vector<int> seq(n - 2, 0);
            while (true) {
                GraphBuilder b(n);
                std::vector<int> deg(n, 1);
                for (int x : seq) ++deg[x];
                std::vector<int> degs = deg;
                std::set<int> leaves;
                for (int v = 0; v < n; ++v)
                    if (degs[v] == 1) leaves.insert(v);
                for (int x : seq) {
                    int leaf = *leaves.begin();
                    leaves.erase(leaves.begin());
                    b.add_edge(leaf, x);
                    if (--degs[x] == 1) leaves.insert(x);
                }
                int a = *leaves.begin();
                int bb = *std::next(leaves.begin());
                b.add_edge(a, bb);
                classes.insert(tree_canonical_string(Tree{b.freeze()}));
                int i = 0;
                while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
                if (i == n - 2) break;
                ++seq[i];
            }
        }
        CHECK(classes.size() == enumerate_trees(n).size());
        // our enumeration emits exactly one representative per class
        std::set<std::string> ours;
        for (const Tree& t : enumerate_trees(n)) CHECK(ours.insert(tree_canonical_string(t)).second);
        CHECK(ours == classes);
    }
}

TEST_CASE("caterpillars") {
    Tree star = caterpillar(6, 1);
    CHECK(star.graph.degree(0) == 5);
    Tree c48 = caterpillar(48, 8);
    CHECK(c48.size() == 48);
    for (int i = 0; i < 8; ++i) {
        int expected = (i == 0 || i == 7) ? 6 : 7;  // spine neighbors + 5 leaves
        CHECK(c48.graph.degree(i) == expected);
    }
    for (int i = 0; i + 1 < 8; ++i) CHECK(c48.graph.has_edge(i, i + 1));
    CHECK_THROWS_AS(caterpillar(6, 4), DivisibilityError);
}

TEST_CASE("kary trees") {
    CHECK(kary_tree(2, 0).size() == 1);
    CHECK(kary_tree(2, 3).size() == 15);
    CHECK(kary_tree(3, 2).size() == 13);
    CHECK(kary_tree(1, 4).size() == 5);
}

TEST_CASE("random_tree determinism and small cases") {
    CHECK(random_tree(1, 0).size() == 1);
    CHECK(random_tree(2, 0).graph.has_edge(0, 1));
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(random_tree(37, seed).graph == random_tree(37, seed).graph);
    CHECK_FALSE(random_tree(37, 1).graph == random_tree(37, 2).graph);
}

TEST_CASE("dfs preorder gives one-page layouts") {
    Tree p4 = tree_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(dfs_preorder(p4, 0) == std::vector<int>{0, 1, 2, 3});
    Tree star = caterpillar(5, 1);
    CHECK(dfs_preorder(star, 0) == std::vector<int>{0, 1, 2, 3, 4});
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 2 + (int)(rng() % 60);
        Tree t = random_tree(n, rng());
        auto order = dfs_preorder(t, (int)(rng() % n));
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        CHECK(oracle::one_page_noncrossing(t.graph, pos));
    }
}

TEST_CASE("parent array round trip") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 100; ++iter) {
        Tree t = random_tree(1 + (int)(rng() % 50), rng());
        auto pa = tree_parent_array(t, 0);
        CHECK(tree_from_parent_array(pa).graph == t.graph);
    }
}
