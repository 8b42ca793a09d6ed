#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "treehost/graph.hpp"
#include "treehost/trees.hpp"

namespace treehost {

/// The second power of a path v_1..v_n with a stacked chain in each triangle
/// (v_i, v_{i+1}): chain vertex j is adjacent to v_i, v_{i+1} and chain
/// vertex j-1, where chain[i][0] = v_{i+2}.
struct PowerPathGraph {
    int n = 0;
    Graph graph;
    std::vector<int> v;                       // 1-based; v[0] unused
    std::vector<std::vector<int>> chain;      // chain[i] for i = 1..n-2
};
PowerPathGraph build_gnp(int n);

/// Two power-path halves glued along the root triangle: x1 = v2, x2 = v1,
/// x3 = v3, with the chains of the shared first triangle identified. The
/// root edge is (v1, v2).
struct PathLikeCore {
    int n = 0;
    Graph graph;
    std::vector<int> v, x;                          // 1-based
    std::vector<std::vector<int>> vchain, xchain;   // xchain[1] == vchain[1]
};
PathLikeCore build_gn(int n);

long long gn_vertex_count(int n);
long long gn_edge_count(int n);

/// A path-like maximal outerplanar graph encoded by its attachment choices:
/// vertex u_i (i >= 4, 0-based id i-1) attaches to u_{i-1} and to one of the
/// two vertices u_{i-1} itself attached to (bit 0 = the older one). The root
/// ear is (u1, u2, u3) = vertices (0, 1, 2), root edge (0, 1).
struct RootedPathLike {
    int n = 0;
    std::vector<std::uint8_t> choices;  // length max(n-3, 0)

    Graph decode() const;
};

/// All rooted path-like graphs on n vertices: a single value for n <= 5 and
/// exactly 2^{n-5} pairwise distinct (graph, rooted ear) pairs for n >= 6.
std::vector<RootedPathLike> enumerate_pathlike(int n);

/// Embeds h into the core with the root edge on (v1, v2); u1 always maps to
/// v1 and u2 to v2 (the mirrored half handles either orientation of u4).
EmbeddingMap embed_pathlike(const RootedPathLike& h, const PathLikeCore& core);

/// Weak dual of a maximal outerplanar graph: one node per bounded triangular
/// face, edges between faces sharing an edge.
struct WeakDualTree {
    Tree tree;
    std::vector<std::array<int, 3>> face_verts;  // sorted vertex triple per node
};
WeakDualTree weak_dual(const Graph& h);  // throws NotMaximalOuterplanar

/// Maximal outerplanar supergraph on the same vertex set (greedy edge
/// augmentation under an outerplanarity filter). Throws NotOuterplanar.
Graph triangulate_outerplanar(const Graph& g);

/// Recursive host: a core G_n with a copy of the host for ceil(n/2) glued at
/// every core edge (for n >= 6), flattened into one graph.
struct ScriptGNode {
    int n = 0;
    std::vector<int> v, x;
    std::vector<std::vector<int>> vchain, xchain;
    std::vector<std::pair<int, int>> edge_keys;  // sorted core edges
    std::vector<int> child_of_edge;              // parallel to edge_keys; empty if bare
};

struct RecursiveHost {
    int n = 0;
    Graph graph;
    std::vector<ScriptGNode> nodes;  // nodes[0] is the root core
};

RecursiveHost build_script_g(int n);
long long script_g_size(int n);

/// Embeds an outerplanar pattern into the recursive host: triangulate,
/// take the weak dual, embed the Gyarfas-path piece into the core and recurse
/// each hanging component into the attachment at its attach edge's image.
EmbeddingMap embed_outerplanar(const Graph& h, const RecursiveHost& host);

}  // namespace treehost
