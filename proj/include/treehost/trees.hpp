#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treehost/graph.hpp"

namespace treehost {

/// Connected acyclic graph. Construction validates the invariants.
struct Tree {
    Graph graph;

    int size() const { return graph.vertex_count(); }
};

Tree make_tree(const Graph& g);  // throws InternalError if not a tree
Tree tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// A vertex whose removal leaves only components of at most floor(n/2)
/// vertices; the smallest-id qualifying vertex is returned.
int jordan_separator(const Tree& t);

/// The unique vertex lying on all three pairwise paths among a, b, c.
int median_vertex(const Tree& t, int a, int b, int c);

/// A path starting at v whose removal leaves components of at most
/// floor((n-1)/2) vertices; grown by stepping into the unique oversized
/// component while one exists.
std::vector<int> gyarfas_path(const Tree& t, int v);

/// All unlabeled trees on n vertices, exactly once each (canonical level
/// sequence generation with free-tree deduplication).
std::vector<Tree> enumerate_trees(int n);

/// Caterpillar C_{n,k}: spine path on vertices 0..k-1, each spine vertex
/// adjacent to n/k - 1 leaves. Throws DivisibilityError when k does not
/// divide n.
Tree caterpillar(int n, int k);

/// Complete k-ary tree of height h, vertices in BFS order (root 0).
Tree kary_tree(int k, int h);

/// Uniform random labeled tree via Prufer sequences; deterministic per seed.
Tree random_tree(int n, std::uint64_t seed);

/// DFS preorder from root, children visited in ascending id order. Placing
/// vertices on a line in this order gives a one-page (non-crossing) layout.
std::vector<int> dfs_preorder(const Tree& t, int root);

/// Canonical string for free-tree isomorphism (centroid-rooted AHU code).
std::string tree_canonical_string(const Tree& t);

/// parent[v] for a rooting at `root` (parent[root] = -1); JSON-friendly.
std::vector<int> tree_parent_array(const Tree& t, int root);
Tree tree_from_parent_array(const std::vector<int>& parent);

}  // namespace treehost
