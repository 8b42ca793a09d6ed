#include "treehost/outerplanar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "treehost/limits.hpp"
#include "treehost/planarity.hpp"

namespace treehost {

// ---------------------------------------------------------------------------
// Cores
// ---------------------------------------------------------------------------

PowerPathGraph build_gnp(int n) {
    insist(n >= 3, "build_gnp needs n >= 3");
    PowerPathGraph g;
    g.n = n;
    GraphBuilder b(n);
    g.v.resize(n + 1);
    for (int i = 1; i <= n; ++i) g.v[i] = i - 1;
    for (int i = 1; i < n; ++i) b.add_edge(g.v[i], g.v[i + 1]);
    for (int i = 1; i + 2 <= n; ++i) b.add_edge(g.v[i], g.v[i + 2]);
    g.chain.resize(std::max(0, n - 1));
    for (int i = 1; i + 2 <= n; ++i) {
        g.chain[i].push_back(g.v[i + 2]);
        for (int j = 1; j <= n - 3 - i; ++j) {
            int w = b.add_vertex();
            b.add_edge(w, g.v[i]);
            b.add_edge(w, g.v[i + 1]);
            b.add_edge(w, g.chain[i].back());
            g.chain[i].push_back(w);
        }
    }
    g.graph = b.freeze();
    return g;
}

namespace {

struct CoreRefs {
    std::vector<int> v, x;
    std::vector<std::vector<int>> vchain, xchain;
    std::vector<std::pair<int, int>> edges;  // sorted, deduped
};

// Builds the G_n core into gb. v1/v2 may name existing vertices (gluing) or
// be -1 to create fresh ones.
CoreRefs build_core(GraphBuilder& gb, int n, int v1, int v2) {
    insist(n >= 3, "core needs n >= 3");
    CoreRefs c;
    std::vector<std::pair<int, int>> es;
    auto edge = [&](int a, int bb) {
        es.emplace_back(std::min(a, bb), std::max(a, bb));
    };
    c.v.assign(n + 1, -1);
    c.x.assign(n + 1, -1);
    c.v[1] = v1 >= 0 ? v1 : gb.add_vertex();
    c.v[2] = v2 >= 0 ? v2 : gb.add_vertex();
    for (int i = 3; i <= n; ++i) c.v[i] = gb.add_vertex();
    c.x[1] = c.v[2];
    c.x[2] = c.v[1];
    c.x[3] = c.v[3];
    for (int i = 4; i <= n; ++i) c.x[i] = gb.add_vertex();

    for (int i = 1; i < n; ++i) edge(c.v[i], c.v[i + 1]);
    for (int i = 1; i + 2 <= n; ++i) edge(c.v[i], c.v[i + 2]);
    for (int i = 1; i < n; ++i) edge(c.x[i], c.x[i + 1]);
    for (int i = 1; i + 2 <= n; ++i) edge(c.x[i], c.x[i + 2]);

    c.vchain.resize(std::max(2, n - 1));
    c.xchain.resize(std::max(2, n - 1));
    for (int i = 1; i + 2 <= n; ++i) {
        c.vchain[i].push_back(c.v[i + 2]);
        for (int j = 1; j <= n - 3 - i; ++j) {
            int w = gb.add_vertex();
            edge(w, c.v[i]);
            edge(w, c.v[i + 1]);
            edge(w, c.vchain[i].back());
            c.vchain[i].push_back(w);
        }
    }
    // the chain of the shared first triangle is identified across the halves
    if (n >= 3) c.xchain[1] = c.vchain[1];
    for (int i = 2; i + 2 <= n; ++i) {
        c.xchain[i].push_back(c.x[i + 2]);
        for (int j = 1; j <= n - 3 - i; ++j) {
            int w = gb.add_vertex();
            edge(w, c.x[i]);
            edge(w, c.x[i + 1]);
            edge(w, c.xchain[i].back());
            c.xchain[i].push_back(w);
        }
    }
    for (auto e : es) gb.add_edge(e.first, e.second);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    c.edges = std::move(es);
    return c;
}

}  // namespace

long long gn_vertex_count(int n) {
    insist(n >= 3, "n >= 3 required");
    if (n == 3) return 3;
    long long sum = 0;
    for (int i = 1; i <= n - 5; ++i) sum += i;
    return 3LL * n - 7 + 2 * sum;
}

long long gn_edge_count(int n) {
    insist(n >= 3, "n >= 3 required");
    if (n == 3) return 3;
    const long long ep = (n - 1) + (n - 2) + 3LL * (n - 4) * (n - 3) / 2;
    return 2 * ep - 3 - 3LL * std::max(0, n - 4);
}

PathLikeCore build_gn(int n) {
    insist(n >= 3, "build_gn needs n >= 3");
    check_vertex_budget(gn_vertex_count(n), "build_gn");
    GraphBuilder gb;
    CoreRefs c = build_core(gb, n, -1, -1);
    PathLikeCore core;
    core.n = n;
    core.graph = gb.freeze();
    core.v = std::move(c.v);
    core.x = std::move(c.x);
    core.vchain = std::move(c.vchain);
    core.xchain = std::move(c.xchain);
    insist(core.graph.vertex_count() == gn_vertex_count(n), "G_n vertex count mismatch");
    insist((long long)core.graph.edge_count() == gn_edge_count(n), "G_n edge count mismatch");
    return core;
}

// ---------------------------------------------------------------------------
// Rooted path-like graphs
// ---------------------------------------------------------------------------

Graph RootedPathLike::decode() const {
    insist(n >= 3, "path-like graphs need n >= 3");
    insist((int)choices.size() == std::max(n - 3, 0), "choice string length mismatch");
    GraphBuilder b(n);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    std::pair<int, int> pr{0, 1};  // the two vertices the last vertex attached to
    int last = 2;
    for (int t = 3; t < n; ++t) {
        const int c = choices[t - 3] ? pr.second : pr.first;
        b.add_edge(t, last);
        b.add_edge(t, c);
        pr = {last, c};
        last = t;
    }
    return b.freeze();
}

std::vector<RootedPathLike> enumerate_pathlike(int n) {
    insist(n >= 3, "n >= 3 required");
    std::vector<RootedPathLike> out;
    const int free_bits = std::max(0, n - 5);
    const long long total = 1LL << free_bits;
    for (long long mask = 0; mask < total; ++mask) {
        RootedPathLike h;
        h.n = n;
        h.choices.assign(std::max(n - 3, 0), 0);
        // the first two choices only flip within the rooted isomorphism class
        for (int b = 0; b < free_bits; ++b)
            h.choices[b + 2] = static_cast<std::uint8_t>((mask >> b) & 1);
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

void set_image(std::vector<int>& image, int pattern_v, int host_v) {
    if (image[pattern_v] == -1) {
        image[pattern_v] = host_v;
        return;
    }
    insist(image[pattern_v] == host_v, "conflicting images for a pattern vertex");
}

// Embeds a path-like generation sequence into one half of a core. seq[0] and
// seq[1] land on arr[1], arr[2]; successive fans go onto the stacked chains.
void embed_sequence(const Graph& H, std::vector<int> seq, const std::vector<int>& arr,
                    const std::vector<std::vector<int>>& chains, std::vector<int>& image) {
    int o = 1;
    set_image(image, seq[0], arr[o]);
    set_image(image, seq[1], arr[o + 1]);
    while (true) {
        const int t = static_cast<int>(seq.size());
        insist(o + 2 < (int)arr.size(), "core exhausted");
        if (t == 3) {
            set_image(image, seq[2], arr[o + 2]);
            return;
        }
        // smallest p >= 3 with seq[p+1] not adjacent to seq[1]; else p = t-1
        int p = t - 1;
        for (int j = 3; j + 1 < t; ++j)
            if (!H.has_edge(seq[j + 1], seq[1])) {
                p = j;
                break;
            }
        insist(p - 3 < (int)chains[o].size(), "chain capacity exceeded");
        for (int k = 0; k <= p - 3; ++k) set_image(image, seq[p - 1 - k], chains[o][k]);
        std::vector<int> next;
        next.reserve(t - p + 2);
        next.push_back(seq[1]);
        for (int j = p - 1; j < t; ++j) next.push_back(seq[j]);
        seq = std::move(next);
        ++o;
    }
}

}  // namespace

EmbeddingMap embed_pathlike(const RootedPathLike& h, const PathLikeCore& core) {
    insist(h.n <= core.n, "pattern larger than the core parameter");
    const Graph H = h.decode();
    std::vector<int> image(h.n, -1);
    if (h.n == 3) {
        image = {core.v[1], core.v[2], core.v[3]};
    } else {
        std::vector<int> seq(h.n);
        for (int i = 0; i < h.n; ++i) seq[i] = i;
        if (H.has_edge(3, 1)) {
            embed_sequence(H, seq, core.v, core.vchain, image);
        } else {
            insist(H.has_edge(3, 0), "u4 attaches to u1 or u2");
            std::swap(seq[0], seq[1]);
            embed_sequence(H, seq, core.x, core.xchain, image);
        }
    }
    EmbeddingMap map{h.n, std::move(image)};
    if (!verify_embedding(H, core.graph, map, {{0, core.v[1]}, {1, core.v[2]}}))
        throw EmbeddingFailed("path-like certificate rejected");
    return map;
}

// ---------------------------------------------------------------------------
// Weak dual and triangulation
// ---------------------------------------------------------------------------

WeakDualTree weak_dual(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 3) throw NotMaximalOuterplanar("need at least 3 vertices");
    if (h.edge_count() != static_cast<std::size_t>(2 * n - 3))
        throw NotMaximalOuterplanar("edge count must be 2n-3");
    if (!is_outerplanar(h)) throw NotMaximalOuterplanar("graph is not outerplanar");

    // ear peeling: repeatedly remove a degree-2 vertex with adjacent neighbors
    std::vector<std::set<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int w : h.neighbors(u)) adj[u].insert(w);
    std::vector<bool> gone(n, false);
    std::vector<std::array<int, 3>> faces;
    int remaining = n;
    while (remaining > 3) {
        int ear = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && adj[v].size() == 2) {
                auto it = adj[v].begin();
                int a = *it++, b = *it;
                if (adj[a].count(b)) {
                    ear = v;
                    break;
                }
            }
        if (ear < 0) throw NotMaximalOuterplanar("no removable ear found");
        auto it = adj[ear].begin();
        int a = *it++, b = *it;
        std::array<int, 3> f{ear, a, b};
        std::sort(f.begin(), f.end());
        faces.push_back(f);
        adj[a].erase(ear);
        adj[b].erase(ear);
        adj[ear].clear();
        gone[ear] = true;
        --remaining;
    }
    std::array<int, 3> last{-1, -1, -1};
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) last[k++] = v;
    insist(k == 3, "peeling left a non-triangle");
    if (!(h.has_edge(last[0], last[1]) && h.has_edge(last[1], last[2]) &&
          h.has_edge(last[0], last[2])))
        throw NotMaximalOuterplanar("final three vertices do not form a triangle");
    faces.push_back(last);

    // dual edges: faces sharing an edge
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int f = 0; f < (int)faces.size(); ++f) {
        const auto& fv = faces[f];
        edge_faces[{fv[0], fv[1]}].push_back(f);
        edge_faces[{fv[0], fv[2]}].push_back(f);
        edge_faces[{fv[1], fv[2]}].push_back(f);
    }
    GraphBuilder db(static_cast<int>(faces.size()));
    for (auto& [e, fs] : edge_faces) {
        if (fs.size() > 2) throw NotMaximalOuterplanar("edge on more than two faces");
        if (fs.size() == 2) db.add_edge(fs[0], fs[1]);
    }
    WeakDualTree dual;
    dual.tree = make_tree(db.freeze());
    dual.face_verts = std::move(faces);
    insist(dual.tree.size() == n - 2, "weak dual must have n-2 nodes");
    return dual;
}

Graph triangulate_outerplanar(const Graph& g) {
    if (!is_outerplanar(g)) throw NotOuterplanar("input is not outerplanar");
    const int n = g.vertex_count();
    Graph cur = g;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (cur.has_edge(u, v)) continue;
            GraphBuilder b(n);
            for (auto [a, bb] : cur.edges()) b.add_edge(a, bb);
            b.add_edge(u, v);
            Graph trial = b.freeze();
            if (is_outerplanar(trial)) cur = std::move(trial);
        }
    if (n >= 3)
        insist(cur.edge_count() == static_cast<std::size_t>(2 * n - 3),
               "augmentation did not reach maximal outerplanar");
    return cur;
}

// ---------------------------------------------------------------------------
// Recursive host
// ---------------------------------------------------------------------------

long long script_g_size(int n) {
    insist(n >= 3, "n >= 3 required");
    if (n <= 5) return gn_vertex_count(n);
    return gn_vertex_count(n) + gn_edge_count(n) * (script_g_size((n + 1) / 2) - 2);
}

namespace {

int build_script_node(GraphBuilder& gb, std::vector<ScriptGNode>& nodes, int n, int v1,
                      int v2) {
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    CoreRefs core = build_core(gb, n, v1, v2);
    {
        ScriptGNode& nd = nodes[id];
        nd.n = n;
        nd.v = std::move(core.v);
        nd.x = std::move(core.x);
        nd.vchain = std::move(core.vchain);
        nd.xchain = std::move(core.xchain);
        nd.edge_keys = std::move(core.edges);
    }
    if (n >= 6) {
        const auto edges = nodes[id].edge_keys;
        std::vector<int> kids;
        kids.reserve(edges.size());
        for (auto [p, q] : edges)
            kids.push_back(build_script_node(gb, nodes, (n + 1) / 2, p, q));
        nodes[id].child_of_edge = std::move(kids);
    }
    return id;
}

}  // namespace

RecursiveHost build_script_g(int n) {
    insist(n >= 3, "build_script_g needs n >= 3");
    check_vertex_budget(script_g_size(n), "build_script_g");
    RecursiveHost host;
    host.n = n;
    GraphBuilder gb;
    build_script_node(gb, host.nodes, n, -1, -1);
    host.graph = gb.freeze();
    insist(host.graph.vertex_count() == script_g_size(n), "script-G size mismatch");
    return host;
}

// ---------------------------------------------------------------------------
// Recursive embedding
// ---------------------------------------------------------------------------

namespace {

struct OuterEmbedder {
    const Graph& H;             // triangulated pattern
    const WeakDualTree& dual;   // of H
    const RecursiveHost& host;
    std::vector<int> image;

    OuterEmbedder(const Graph& h, const WeakDualTree& d, const RecursiveHost& hst)
        : H(h), dual(d), host(hst), image(h.vertex_count(), -1) {}

    static std::pair<int, int> shared_edge(const std::array<int, 3>& a,
                                           const std::array<int, 3>& b) {
        std::vector<int> common;
        for (int u : a)
            for (int w : b)
                if (u == w) common.push_back(u);
        insist(common.size() == 2, "adjacent faces must share exactly one edge");
        return {std::min(common[0], common[1]), std::max(common[0], common[1])};
    }

    int third_vertex(const std::array<int, 3>& f, int a, int b) const {
        for (int u : f)
            if (u != a && u != b) return u;
        insist(false, "edge not on face");
        return -1;
    }

    // The generation sequence of the path-like union of faces along `path`,
    // starting from root edge (a, b) of path[0].
    std::vector<int> face_path_sequence(const std::vector<int>& path, int a, int b) const {
        std::vector<int> seq{a, b, third_vertex(dual.face_verts[path[0]], a, b)};
        for (std::size_t i = 1; i < path.size(); ++i) {
            const auto& prev = dual.face_verts[path[i - 1]];
            const auto& cur = dual.face_verts[path[i]];
            for (int u : cur)
                if (u != prev[0] && u != prev[1] && u != prev[2]) seq.push_back(u);
        }
        insist(seq.size() == path.size() + 2, "face path produced a bad sequence");
        return seq;
    }

    void embed_arm(const ScriptGNode& node, const std::vector<int>& seq) {
        if (seq.size() == 3) {
            set_image(image, seq[2], node.v[3]);
            return;
        }
        if (H.has_edge(seq[3], seq[1])) {
            embed_sequence(H, seq, node.v, node.vchain, image);
        } else {
            insist(H.has_edge(seq[3], seq[0]), "fourth vertex attaches to the root edge");
            auto flipped = seq;
            std::swap(flipped[0], flipped[1]);
            embed_sequence(H, flipped, node.x, node.xchain, image);
        }
    }

    // Embeds the sub-pattern formed by the faces in `faces` (a subtree of the
    // dual), rooted at face `root_face` with pattern root edge (a, b) already
    // mapped onto the node's (v1, v2).
    void embed_piece(const std::vector<int>& faces, int root_face, int a, int b,
                     int node_id) {
        const ScriptGNode& node = host.nodes[node_id];
        insist((int)faces.size() + 2 <= node.n, "piece exceeds host parameter");
        insist(image[a] == node.v[1] && image[b] == node.v[2], "root edge misaligned");

        // local dual restricted to the piece
        std::vector<int> local_of(dual.tree.size(), -1);
        for (int i = 0; i < (int)faces.size(); ++i) local_of[faces[i]] = i;
        GraphBuilder lb(static_cast<int>(faces.size()));
        for (int i = 0; i < (int)faces.size(); ++i)
            for (int w : dual.tree.graph.neighbors(faces[i]))
                if (local_of[w] > i) lb.add_edge(i, local_of[w]);
        Tree local{lb.freeze()};
        const int root_local = local_of[root_face];

        if (node.child_of_edge.empty()) {
            // bare core: the dual of the piece must be a path; cover it fully,
            // splitting into two arms when the root lies mid-path
            for (int i = 0; i < local.size(); ++i)
                insist(local.graph.degree(i) <= 2, "piece at a bare core is not path-like");
            auto nb = local.graph.neighbors(root_local);
            std::vector<std::vector<int>> arms;
            for (int start : nb) {
                std::vector<int> arm{root_face};
                int prev = root_local, cur = start;
                while (true) {
                    arm.push_back(faces[cur]);
                    int next = -1;
                    for (int w : local.graph.neighbors(cur))
                        if (w != prev) next = w;
                    if (next < 0) break;
                    prev = cur;
                    cur = next;
                }
                arms.push_back(std::move(arm));
            }
            if (arms.empty()) arms.push_back({root_face});
            if (arms.size() == 1) {
                embed_arm(node, face_path_sequence(arms[0], a, b));
                return;
            }
            insist(arms.size() == 2, "root face has degree > 2 in a path");
            // each arm leaves through a different edge of the root face; the
            // one whose next vertex attaches to b goes to the v half
            auto seq0 = face_path_sequence(arms[0], a, b);
            auto seq1 = face_path_sequence(arms[1], a, b);
            if (!H.has_edge(seq0[3], seq0[1])) std::swap(seq0, seq1);
            insist(H.has_edge(seq0[3], seq0[1]), "no arm attaches to the v side");
            embed_sequence(H, seq0, node.v, node.vchain, image);
            insist(H.has_edge(seq1[3], seq1[0]), "second arm must attach to the x side");
            std::swap(seq1[0], seq1[1]);
            embed_sequence(H, seq1, node.x, node.xchain, image);
            return;
        }

        // recursive case: Gyarfas path from the root face
        std::vector<int> p_local = gyarfas_path(local, root_local);
        std::vector<int> path;
        path.reserve(p_local.size());
        for (int pl : p_local) path.push_back(faces[pl]);
        embed_arm(node, face_path_sequence(path, a, b));

        // hanging components
        std::vector<bool> on_path(local.size(), false);
        for (int pl : p_local) on_path[pl] = true;
        std::vector<int> comp_of(local.size(), -1);
        std::vector<std::vector<int>> comps;
        for (int s = 0; s < local.size(); ++s) {
            if (on_path[s] || comp_of[s] >= 0) continue;
            int id = static_cast<int>(comps.size());
            comps.emplace_back();
            std::deque<int> q{s};
            comp_of[s] = id;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                comps[id].push_back(u);
                for (int w : local.graph.neighbors(u))
                    if (!on_path[w] && comp_of[w] < 0) {
                        comp_of[w] = id;
                        q.push_back(w);
                    }
            }
        }
        std::map<std::pair<int, int>, int> edge_index;
        for (int i = 0; i < (int)node.edge_keys.size(); ++i)
            edge_index[node.edge_keys[i]] = i;
        std::set<std::pair<int, int>> used_edges;
        for (const auto& comp : comps) {
            insist((int)comp.size() + 2 <= (node.n + 1) / 2,
                   "hanging component exceeds half the parameter");
            // root face of the component: adjacent to the path
            int comp_root = -1, path_nb = -1;
            for (int u : comp)
                for (int w : local.graph.neighbors(u))
                    if (on_path[w]) {
                        insist(comp_root < 0 || comp_root == u,
                               "component attaches to the path at two faces");
                        comp_root = u;
                        path_nb = w;
                    }
            insist(comp_root >= 0, "component without a path neighbor");
            auto [ea, eb] = shared_edge(dual.face_verts[faces[comp_root]],
                                        dual.face_verts[faces[path_nb]]);
            std::pair<int, int> himg{std::min(image[ea], image[eb]),
                                     std::max(image[ea], image[eb])};
            insist(used_edges.insert(himg).second,
                   "two components attached at the same core edge");
            auto it = edge_index.find(himg);
            insist(it != edge_index.end(), "attach edge is not a core edge");
            const int child = node.child_of_edge[it->second];
            const ScriptGNode& cn = host.nodes[child];
            // orient the pattern edge onto the child's root edge
            int ca = ea, cb = eb;
            if (image[ca] != cn.v[1]) std::swap(ca, cb);
            insist(image[ca] == cn.v[1] && image[cb] == cn.v[2], "gluing misaligned");
            std::vector<int> comp_faces;
            comp_faces.reserve(comp.size());
            for (int u : comp) comp_faces.push_back(faces[u]);
            embed_piece(comp_faces, faces[comp_root], ca, cb, child);
        }
    }
};

}  // namespace

EmbeddingMap embed_outerplanar(const Graph& h, const RecursiveHost& host) {
    const int n = h.vertex_count();
    insist(n >= 1, "pattern must be nonempty");
    insist(n <= host.n, "pattern larger than the host parameter");
    if (!is_outerplanar(h)) throw NotOuterplanar("pattern is not outerplanar");

    if (n <= 2) {
        EmbeddingMap map{n, {}};
        const ScriptGNode& root = host.nodes[0];
        map.image.push_back(root.v[1]);
        if (n == 2) map.image.push_back(root.v[2]);
        insist(verify_embedding(h, host.graph, map), "tiny certificate invalid");
        return map;
    }

    const Graph ht = triangulate_outerplanar(h);
    const WeakDualTree dual = weak_dual(ht);

    // root at an ear: a leaf of the dual with the lexicographically smallest
    // face triple; root edge = smallest edge of that face lying on one face only
    std::map<std::pair<int, int>, int> edge_face_count;
    for (const auto& f : dual.face_verts) {
        ++edge_face_count[{f[0], f[1]}];
        ++edge_face_count[{f[0], f[2]}];
        ++edge_face_count[{f[1], f[2]}];
    }
    int root_face = -1;
    for (int f = 0; f < dual.tree.size(); ++f) {
        if (dual.tree.graph.degree(f) > 1) continue;
        if (root_face < 0 || dual.face_verts[f] < dual.face_verts[root_face]) root_face = f;
    }
    insist(root_face >= 0, "dual has no leaf");
    std::pair<int, int> root_edge{-1, -1};
    const auto& fv = dual.face_verts[root_face];
    for (auto e : {std::pair<int, int>{fv[0], fv[1]}, {fv[0], fv[2]}, {fv[1], fv[2]}})
        if (edge_face_count[e] == 1 && (root_edge.first < 0 || e < root_edge)) root_edge = e;
    insist(root_edge.first >= 0, "ear face has no outer edge");

    OuterEmbedder emb(ht, dual, host);
    const ScriptGNode& root = host.nodes[0];
    set_image(emb.image, root_edge.first, root.v[1]);
    set_image(emb.image, root_edge.second, root.v[2]);
    std::vector<int> all_faces(dual.tree.size());
    for (int i = 0; i < dual.tree.size(); ++i) all_faces[i] = i;
    emb.embed_piece(all_faces, root_face, root_edge.first, root_edge.second, 0);

    EmbeddingMap map{n, std::move(emb.image)};
    if (!verify_embedding(h, host.graph, map))
        throw EmbeddingFailed("outerplanar certificate rejected");
    return map;
}

}  // namespace treehost
