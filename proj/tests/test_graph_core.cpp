#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treehost/codec.hpp"
#include "treehost/embed_search.hpp"
#include "treehost/planarity.hpp"
#include "treehost/trees.hpp"

using namespace treehost;

namespace {

Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.freeze();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder gb(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) gb.add_edge(i, a + j);
    return gb.freeze();
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.freeze();
}

// K4 with one face stacked: the 5-vertex stacked triangulation
Graph stacked5() {
    GraphBuilder b(5);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) b.add_edge(i, j);
    b.add_edge(4, 0);
    b.add_edge(4, 1);
    b.add_edge(4, 2);
    return b.freeze();
}

std::vector<std::pair<Graph, RotationSystem>> codec_samples() {
    std::vector<std::pair<Graph, RotationSystem>> out;
    std::mt19937_64 rng(5);
    while (out.size() < 20) {
        const int n = 3 + (int)(rng() % 8);
        Graph g = random_graph(n, 0.4, rng);
        if (auto rot = planar_rotation(g)) out.push_back({g, *rot});
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 basics") {
    CHECK(graph6_encode(Graph{}) == "?");
    CHECK(graph6_decode("?").vertex_count() == 0);
    // K_3: size byte 'B', adjacency bits 111 padded to 111000
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_decode("Bw") == complete(3));
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + (int)(rng() % 40);
        Graph g = random_graph(n, 0.3, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    // a larger one crossing the 62-vertex size-field boundary
    Graph big = random_graph(200, 0.05, rng);
    CHECK(graph6_decode(graph6_encode(big)) == big);
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(graph6_decode("B"), MalformedGraph6);    // truncated body
    CHECK_THROWS_AS(graph6_decode("Bww"), MalformedGraph6);  // overlong body
    CHECK_THROWS_AS(graph6_decode("B "), MalformedGraph6);   // byte below 63
    CHECK_THROWS_AS(graph6_decode(""), MalformedGraph6);
}

TEST_CASE("graph6 decoder never crashes on fuzz") {
    std::mt19937_64 rng(99);
    int ok = 0, rejected = 0;
    for (int iter = 0; iter < 5000; ++iter) {
        std::string s;
        const int len = (int)(rng() % 12);
        for (int i = 0; i < len; ++i) s.push_back((char)(rng() % 256));
        try {
            graph6_decode(s);
            ++ok;
        } catch (const MalformedGraph6&) {
            ++rejected;
        }
    }
    CHECK(ok + rejected == 5000);
}

TEST_CASE("planar_code triangle record and empty stream") {
    std::vector<std::uint8_t> bytes{3, 2, 3, 0, 3, 1, 0, 1, 2, 0};
    auto graphs = planar_code_decode(bytes);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].first == complete(3));
    CHECK(graphs[0].second.order[0] == std::vector<int>{1, 2});

    const std::string header = ">>planar_code<<";
    std::vector<std::uint8_t> empty(header.begin(), header.end());
    CHECK(planar_code_decode(empty).empty());
}

TEST_CASE("planar_code errors carry offsets and reject non-simple records") {
    std::vector<std::uint8_t> truncated{3, 2, 3, 0, 3};
    CHECK_THROWS_AS(planar_code_decode(truncated), MalformedPlanarCode);
    std::vector<std::uint8_t> selfloop{2, 1, 0, 1, 0};
    CHECK_THROWS_AS(planar_code_decode(selfloop), NonSimpleGraph);
    std::vector<std::uint8_t> multi{2, 2, 2, 0, 1, 1, 0};
    CHECK_THROWS_AS(planar_code_decode(multi), NonSimpleGraph);
    try {
        planar_code_decode(truncated);
        CHECK(false);
    } catch (const MalformedPlanarCode& e) {
        CHECK(e.offset == 5);
    }
}

TEST_CASE("planar_code decoder never crashes on fuzz") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 5000; ++iter) {
        std::vector<std::uint8_t> bytes((std::size_t)(rng() % 20));
        for (auto& b : bytes) b = (std::uint8_t)(rng() % 256);
        try {
            planar_code_decode(bytes);
        } catch (const Error&) {
        }
    }
    CHECK(true);
}

TEST_CASE("planar_code encode/decode round trip, including the wide variant") {
    auto samples = codec_samples();
    auto bytes = planar_code_encode(samples);
    auto back = planar_code_decode(bytes);
    REQUIRE(back.size() == samples.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].first == samples[i].first);
        CHECK(back[i].second.order == samples[i].second.order);
    }
    // wide variant: a path on 300 vertices
    GraphBuilder pb(300);
    for (int i = 0; i + 1 < 300; ++i) pb.add_edge(i, i + 1);
    Graph path = pb.freeze();
    auto rot = planar_rotation(path);
    REQUIRE(rot.has_value());
    auto wide = planar_code_decode(planar_code_encode({{path, *rot}}));
    REQUIRE(wide.size() == 1);
    CHECK(wide[0].first == path);
}

TEST_CASE("is_planar on the classical graphs") {
    CHECK(is_planar(complete(4)));
    CHECK_FALSE(is_planar(complete(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
}

TEST_CASE("planarity agrees with the Kuratowski subdivision brute force, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        for (long long mask = 0; mask < (1LL << bits); ++mask) {
            GraphBuilder b(n);
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++idx)
                    if (mask & (1LL << idx)) b.add_edge(i, j);
            Graph g = b.freeze();
            CHECK(is_planar(g) == oracle::planar_bruteforce(g));
        }
    }
}

TEST_CASE("planarity agrees with the brute force on random graphs, n = 7, 8") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 7 + (int)(rng() % 2);
        Graph g = random_graph(n, 0.45, rng);
        CHECK(is_planar(g) == oracle::planar_bruteforce(g));
    }
}

TEST_CASE("planar rotation witness satisfies Euler's formula per component") {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 3 + (int)(rng() % 10);
        Graph g = random_graph(n, 0.35, rng);
        auto rot = planar_rotation(g);
        CHECK(rot.has_value() == is_planar(g));
        if (!rot) continue;
        std::vector<int> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != n) continue;  // Euler check on connected samples
        ++checked;
        CHECK(count_faces(g, *rot) == (int)g.edge_count() - n + 2);
    }
    CHECK(checked > 20);
}

TEST_CASE("is_outerplanar") {
    CHECK(is_outerplanar(make_graph(1, {})));
    for (int n = 2; n <= 9; ++n) CHECK(is_outerplanar(random_tree(n, n).graph));
    CHECK_FALSE(is_outerplanar(complete(4)));
    CHECK(is_planar(complete(4)));
    Graph c6chord = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK(is_outerplanar(c6chord));
}

TEST_CASE("outerplanar implies planar on random samples") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 300; ++iter) {
        Graph g = random_graph(3 + (int)(rng() % 9), 0.4, rng);
        if (is_outerplanar(g)) CHECK(is_planar(g));
    }
}

TEST_CASE("subgraph_embed basics") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(subgraph_embed(p3, complete(3)).has_value());
    CHECK_FALSE(subgraph_embed(complete_bipartite(1, 4), complete(4)).has_value());
    auto family = enumerate_trees(5);
    CHECK(family.size() == 3);
    for (const Tree& t : family) {
        CHECK(subgraph_embed(t.graph, stacked5()).has_value());
        CHECK(oracle::exhaustive_embed(t.graph, stacked5()));
    }
}

TEST_CASE("subgraph_embed pins and adjacency constraints") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    Graph host = stacked5();
    auto m = subgraph_embed(p3, host, {{0, 3}}, {{2, 3}});
    REQUIRE(m.has_value());
    CHECK(m->image[0] == 3);
    CHECK(host.has_edge(m->image[2], 3));
    CHECK_THROWS_AS((void)subgraph_embed(p3, host, {{0, 99}}), InvalidPin);
    CHECK_THROWS_AS((void)subgraph_embed(p3, host, {{0, 1}, {0, 2}}), InvalidPin);
    CHECK_THROWS_AS((void)subgraph_embed(p3, host, {{0, 1}, {1, 1}}), InvalidPin);
}

TEST_CASE("subgraph_embed equals exhaustive search on random 7-vertex pairs") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 150; ++iter) {
        Graph pat = random_graph(3 + (int)(rng() % 5), 0.45, rng);
        Graph host = random_graph(7, 0.5, rng);
        CHECK(subgraph_embed(pat, host).has_value() == oracle::exhaustive_embed(pat, host));
    }
}

TEST_CASE("verify_embedding accepts solver output and rejects corruption") {
    CHECK(verify_embedding(complete(4), complete(4), EmbeddingMap{4, {0, 1, 2, 3}}));
    CHECK_FALSE(verify_embedding(complete(4), complete(4), EmbeddingMap{4, {0, 1, 2, 2}}));
    std::mt19937_64 rng(53);
    int found = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        Graph pat = random_graph(2 + (int)(rng() % 4), 0.5, rng);
        Graph host = random_graph(4 + (int)(rng() % 4), 0.55, rng);
        auto m = subgraph_embed(pat, host);
        if (!m) continue;
        ++found;
        CHECK(verify_embedding(pat, host, *m));
        if (pat.vertex_count() >= 2) {
            auto bad = *m;
            bad.image[0] = bad.image[1];
            CHECK_FALSE(verify_embedding(pat, host, bad));
        }
    }
    CHECK(found > 2000);
}
