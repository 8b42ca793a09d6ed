#pragma once

#include <utility>
#include <vector>

#include "treehost/graph.hpp"
#include "treehost/stacked_host.hpp"
#include "treehost/trees.hpp"

namespace treehost {

/// A tree with up to two (not necessarily distinct) marked vertices; -1 means
/// the mark is absent. Mark m1 must be embedded adjacent to o1 of the target
/// copy, m2 adjacent to o2 (variant 2 only).
struct MarkedTree {
    Tree tree;
    int m1 = -1;
    int m2 = -1;
};

struct AllocationRequest {
    int index = 0;       // caller-side id, used for deterministic tie-breaks
    int depth = 0;       // requested depth ceil(log2 |subtree|)
    int mark_count = 0;  // 2 forces a variant-2 copy
};

/// Greedy assignment of requests to internally disjoint copies from the pool,
/// processed in descending depth (ties by request index). A slot of larger
/// depth is split along its o1-chain into depth-(d-1) sub-slots until the
/// requested depth is reached. Returns the copy id per request index.
/// Throws AllocationInfeasible when some request cannot be served.
std::vector<int> allocate(const StackedHost& host, std::vector<AllocationRequest> requests,
                          const std::vector<int>& pool);

struct EmbedResult {
    EmbeddingMap map;
    std::vector<AdjacencyConstraint> obligations;  // root-level mark obligations
};

/// Recursive embedding of a marked tree into the interior of the target copy:
/// tree vertices map to interior vertices only, m1's image is adjacent to
/// o1(target) and m2's image to o2(target). Requires |tree| <= 2^depth and at
/// most one mark for variant-1 targets.
EmbedResult embed_marked(const MarkedTree& task, const StackedHost& host, int target_copy = 0);

/// Builds the depth-ceil(log2 n) variant-1 outerplanar host, marks vertex 0,
/// embeds and verifies.
std::pair<StackedHost, EmbedResult> embed_universal(const Tree& t);

/// Embedding into an existing host (root copy target, vertex 0 marked).
EmbedResult embed_universal_into(const Tree& t, const StackedHost& host);

/// Complete k-ary tree of height h into the uniform stacked triangulation of
/// depth h*(ceil(log2(k/3))+1)+1, root at the center vertex, every level
/// mapped to centers of registered sub-copies.
std::pair<UniformHost, EmbeddingMap> embed_kary(int k, int h);

/// Depth used by embed_kary.
int kary_host_depth(int k, int h);

int ceil_log2(long long n);

}  // namespace treehost
