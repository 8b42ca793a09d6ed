#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treehost/codec.hpp"
#include "treehost/graph.hpp"

namespace treehost {

/// Presentation-only SVG of a graph from a computed planar rotation: vertices
/// on a circle (ordered along a traced face of the rotation when one is
/// given), straight edges, optional highlighted vertex subset.
std::string render_svg(const Graph& g, const std::optional<RotationSystem>& rot,
                       const std::vector<int>& highlight = {});

}  // namespace treehost
