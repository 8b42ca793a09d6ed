#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treehost/graph.hpp"

namespace treehost {

/// Cyclic neighbor order per vertex (a combinatorial embedding).
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

/// graph6 text format: 6-bit size field(s) offset by 63, then the upper
/// triangle of the adjacency matrix in column-major order, 6 bits per byte,
/// zero-padded. Supports graphs up to 2^36 vertices.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);  // throws MalformedGraph6

/// planar_code binary format: optional ">>planar_code<<" header, then per
/// graph one vertex-count byte followed by each vertex's clockwise neighbor
/// list as 1-based bytes terminated by 0. A graph whose first byte is 0 uses
/// 2-byte little-endian numbers instead. Multi-edges and loops are rejected.
std::vector<std::pair<Graph, RotationSystem>> planar_code_decode(
    const std::vector<std::uint8_t>& bytes);  // throws MalformedPlanarCode, NonSimpleGraph

/// Inverse of planar_code_decode for round-trip tests and interchange with
/// external enumerators.
std::vector<std::uint8_t> planar_code_encode(
    const std::vector<std::pair<Graph, RotationSystem>>& graphs, bool with_header = true);

}  // namespace treehost
