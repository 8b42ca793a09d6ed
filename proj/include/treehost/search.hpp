#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treehost/graph.hpp"
#include "treehost/trees.hpp"

namespace treehost {

/// No n-vertex graph is universal for all n-vertex trees once n reaches this
/// bound; used to validate CLI inputs, not recomputed here.
constexpr int kNoUniversalFrom = 48;

/// True iff g is a stacked triangulation (planar 3-tree): repeatedly remove a
/// degree-3 vertex whose neighborhood induces a triangle; accept iff the
/// reduction reaches K_3 or K_4. The verdict is independent of removal order.
bool is_stacked(const Graph& g);

/// Order-randomized variant for confluence checks.
bool is_stacked_randomized(const Graph& g, std::uint64_t seed);

/// All stacked triangulations on n vertices up to isomorphism, generated by
/// recursive face stacking with canonical-form deduplication.
std::vector<Graph> enumerate_stacked(int n);

/// Universality verdict for one candidate host against all n-vertex trees.
struct SearchCertificate {
    Graph candidate;
    int n = 0;
    bool universal = false;
    std::vector<Tree> trees;             // family order as tested
    std::vector<EmbeddingMap> maps;      // per tree, when universal
    std::optional<Tree> failing_tree;    // first tree with no embedding
    long long elapsed_ms = 0;            // timing metadata; not serialized
};

/// Runs the complete embedding search for every n-vertex tree against g,
/// hardest first (descending max degree, then descending diameter);
/// early-exits on the first failure.
SearchCertificate universality_check(const Graph& g, int n);

/// Scans candidates in source order with a worker pool and returns the first
/// universal one with its certificate; the result is identical for any job
/// count. Returns nullopt when the source is exhausted.
std::optional<SearchCertificate> find_universal(const std::vector<Graph>& candidates, int n,
                                                int jobs = 1);

}  // namespace treehost
