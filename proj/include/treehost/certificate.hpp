#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "treehost/graph.hpp"
#include "treehost/outerplanar.hpp"
#include "treehost/search.hpp"
#include "treehost/stacked_host.hpp"
#include "treehost/three_trees.hpp"

namespace treehost {

using nlohmann::json;

/// Hosts above this size are referenced by their deterministic build recipe
/// instead of inline graph6 (graph6 is quadratic in the vertex count).
constexpr int kInlineHostLimit = 5000;

json host_ref_stacked(int d, int variant, Flavor flavor);
json host_ref_uniform(int d);
json host_ref_gn(int n);
json host_ref_script_g(int n);

/// Rebuilds the host graph a certificate references (or decodes the inline
/// graph6).
Graph resolve_host(const json& cert);

json certificate_json(const Graph& pattern, const Graph& host, const json& host_ref,
                      const EmbeddingMap& map, const std::vector<Pin>& pins = {},
                      const std::vector<AdjacencyConstraint>& constraints = {});

json triple_host_json(const TripleHost& th, const Tree& t1, const Tree& t2, const Tree& t3);

json search_certificate_json(const SearchCertificate& cert);

json registry_json(const StackedHost& host);
json registry_json(const UniformHost& host);

/// Re-checks any certificate JSON produced by this tool; true iff everything
/// verifies.
bool verify_certificate(const json& cert);

}  // namespace treehost
