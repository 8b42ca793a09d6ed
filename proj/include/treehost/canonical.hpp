#pragma once

#include <string>
#include <vector>

#include "treehost/graph.hpp"

namespace treehost {

/// Canonical certificate of a vertex-colored graph: two graphs get equal
/// strings iff they are isomorphic by a color-preserving isomorphism.
/// Iterative refinement plus full individualization-refinement backtracking;
/// intended for small graphs (n <= ~16).
std::string canonical_form(const Graph& g, const std::vector<int>& colors = {});

/// Canonical relabeling permutation realizing canonical_form: new_id[v] is the
/// position of v in the canonical labeling.
std::vector<int> canonical_labeling(const Graph& g, const std::vector<int>& colors = {});

}  // namespace treehost
