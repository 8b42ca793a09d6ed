#pragma once

#include <optional>

#include "treehost/codec.hpp"
#include "treehost/graph.hpp"

namespace treehost {

/// True iff g is planar. Total function.
bool is_planar(const Graph& g);

/// Planarity test with witness: a combinatorial embedding (cyclic neighbor
/// order per vertex) when planar, nullopt otherwise.
std::optional<RotationSystem> planar_rotation(const Graph& g);

/// True iff g is outerplanar, tested as is_planar(g plus an apex vertex
/// adjacent to every vertex of g).
bool is_outerplanar(const Graph& g);

/// Number of faces traced from a rotation system; for a connected planar
/// graph with a correct rotation this equals E - V + 2.
int count_faces(const Graph& g, const RotationSystem& rot);

}  // namespace treehost
