#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "treehost/graph.hpp"

namespace treehost {

enum class Flavor { triangulated, outerplanar };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

/// One copy in the recursive host. Boundary roles o1/o2/o3 are anchored to
/// vertices owned by enclosing copies; c and c_r are interior. The copy's
/// interior vertices form the contiguous id range [int_begin, int_end).
struct HostCopy {
    std::int32_t int_begin = 0, int_end = 0;
    std::int32_t o1 = -1, o2 = -1, o3 = -1;  // o3 only in the triangulated flavor
    std::int32_t c = -1, cr = -1;            // c_r only for variant 2, depth >= 1
    std::int32_t child_off = 0;
    std::int16_t child_count = 0;
    std::int8_t depth = 0;
    std::int8_t variant = 1;
};

/// A recursively constructed host: the graph plus the copy registry.
/// copies[0] is the root. Immutable after construction.
struct StackedHost {
    Graph graph;
    Flavor flavor = Flavor::outerplanar;
    std::vector<HostCopy> copies;
    std::vector<std::int32_t> child_pool;       // children ids, per-copy contiguous
    std::vector<std::int32_t> anchor_of_vertex; // vertex -> copy whose c/c_r it is, else -1

    const HostCopy& root() const { return copies[0]; }
    long long interior_count() const { return copies[0].int_end - copies[0].int_begin; }

    std::vector<int> children(int copy) const {
        const HostCopy& k = copies[copy];
        return {child_pool.begin() + k.child_off,
                child_pool.begin() + k.child_off + k.child_count};
    }

    /// The child sharing this copy's o1 (the o1-chain) of the given variant.
    int chain_child(int copy, int variant) const;
};

/// Uniform stacked triangulation S_d: every bounded face subdivided
/// simultaneously, d times. Copies at depth 0 are bare triangles.
struct UniformCopy {
    std::int32_t o[3];
    std::int32_t center = -1;   // -1 at depth 0
    std::int32_t child[3] = {-1, -1, -1};
    std::int8_t depth = 0;
};

struct UniformHost {
    Graph graph;
    std::vector<UniformCopy> copies;  // copies[0] is the root
};

UniformHost build_uniform(int d);

/// Copies of depth exactly `target_depth` under `copy` having `vertex` as one
/// of their outer vertices, in deterministic order.
std::vector<int> uniform_copies_at(const UniformHost& host, int copy, int vertex,
                                   int target_depth);

/// Interior vertex count of the depth-d host, by exact recurrence evaluation:
///   triangulated: a1(d) = 5 a1(d-1) +   a2(d-1) + 4
///                 a2(d) = 8 a1(d-1) + 3 a2(d-1) + 6
///   outerplanar:  b1(d) = 4 b1(d-1) +   b2(d-1) + 1 + sum_{j<=d-2} b1(j)
///                 b2(d) = 6 b1(d-1) + 3 b2(d-1) + 2 + b1(d-2) + 2 sum_{j<=d-3} b1(j)
/// with base value 1 and negative-index terms equal to 0.
long long size_s(int d, int variant, Flavor flavor);

/// The recursive host of the given depth, variant and flavor. The root's
/// boundary vertices are created fresh (o1 = 0, o2 = 1, and o3 = 2 for the
/// triangulated flavor).
StackedHost build_host(int d, int variant, Flavor flavor);

/// All maximal unreserved copies whose o1 role sits at `anchor`, in registry
/// id order. A reserved copy is replaced by its o1-chain variant-1 child,
/// recursively, so slots nested inside consumed copies stay reachable.
/// Throws UnknownAnchor if `anchor` is not a role vertex of the registry.
std::vector<int> pool_at(const StackedHost& host, int anchor,
                         const std::unordered_set<int>& reserved);

}  // namespace treehost
