#pragma once

#include <optional>
#include <vector>

#include "treehost/graph.hpp"

namespace treehost {

/// Complete search for an injective map of `pattern` into `host` carrying
/// every pattern edge to a host edge. The constraint system is exactly:
/// injectivity, the binary clauses forbidding a pattern edge to land on a
/// host non-edge, plus the given pins and adjacency constraints.
///
/// Returns a verified EmbeddingMap, or nullopt iff no such map exists.
/// Throws InvalidPin on out-of-range or repeated pins.
std::optional<EmbeddingMap> subgraph_embed(const Graph& pattern, const Graph& host,
                                           const std::vector<Pin>& pins = {},
                                           const std::vector<AdjacencyConstraint>& constraints = {});

}  // namespace treehost
