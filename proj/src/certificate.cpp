#include "treehost/certificate.hpp"

#include "treehost/codec.hpp"
#include "treehost/embed_search.hpp"

namespace treehost {

json host_ref_stacked(int d, int variant, Flavor flavor) {
    return json{{"builder", "stacked-host"},
                {"d", d},
                {"variant", variant},
                {"flavor", to_string(flavor)}};
}

json host_ref_uniform(int d) { return json{{"builder", "uniform"}, {"d", d}}; }

json host_ref_gn(int n) { return json{{"builder", "gn"}, {"n", n}}; }

json host_ref_script_g(int n) { return json{{"builder", "script-g"}, {"n", n}}; }

Graph resolve_host(const json& cert) {
    if (cert.contains("host")) return graph6_decode(cert.at("host").get<std::string>());
    const json& ref = cert.at("host_ref");
    const std::string builder = ref.at("builder").get<std::string>();
    if (builder == "stacked-host")
        return build_host(ref.at("d").get<int>(), ref.at("variant").get<int>(),
                          flavor_from_string(ref.at("flavor").get<std::string>()))
            .graph;
    if (builder == "uniform") return build_uniform(ref.at("d").get<int>()).graph;
    if (builder == "gn") return build_gn(ref.at("n").get<int>()).graph;
    if (builder == "script-g") return build_script_g(ref.at("n").get<int>()).graph;
    throw InvalidParams("unknown host builder: " + builder);
}

json certificate_json(const Graph& pattern, const Graph& host, const json& host_ref,
                      const EmbeddingMap& map, const std::vector<Pin>& pins,
                      const std::vector<AdjacencyConstraint>& constraints) {
    json j;
    j["pattern"] = graph6_encode(pattern);
    if (host.vertex_count() <= kInlineHostLimit) j["host"] = graph6_encode(host);
    if (!host_ref.is_null()) j["host_ref"] = host_ref;
    insist(j.contains("host") || j.contains("host_ref"),
           "certificate needs an inline host or a host reference");
    j["image"] = map.image;
    j["pins"] = json::array();
    for (auto [p, h] : pins) j["pins"].push_back(json::array({p, h}));
    j["adjacency"] = json::array();
    for (const auto& c : constraints)
        j["adjacency"].push_back(json::array({c.pattern_vertex, c.required_host_neighbor}));
    return j;
}

json triple_host_json(const TripleHost& th, const Tree& t1, const Tree& t2, const Tree& t3) {
    json j;
    j["host"] = graph6_encode(th.host);
    j["trees"] = json::array(
        {graph6_encode(t1.graph), graph6_encode(t2.graph), graph6_encode(t3.graph)});
    j["images"] = json::array();
    for (const auto& m : th.maps) j["images"].push_back(m.image);
    j["sequences"] = json::array({th.sequences.s1, th.sequences.s2, th.sequences.s3});
    return j;
}

json search_certificate_json(const SearchCertificate& cert) {
    json j;
    j["candidate"] = graph6_encode(cert.candidate);
    j["n"] = cert.n;
    j["universal"] = cert.universal;
    if (cert.universal) {
        j["embeddings"] = json::array();
        for (std::size_t i = 0; i < cert.trees.size(); ++i)
            j["embeddings"].push_back(json{{"tree", graph6_encode(cert.trees[i].graph)},
                                           {"image", cert.maps[i].image}});
    } else if (cert.failing_tree) {
        j["failing_tree"] = graph6_encode(cert.failing_tree->graph);
    }
    return j;
}

json registry_json(const StackedHost& host) {
    json copies = json::array();
    for (int i = 0; i < (int)host.copies.size(); ++i) {
        const HostCopy& k = host.copies[i];
        json roles;
        roles["o1"] = k.o1;
        if (k.o2 >= 0) roles["o2"] = k.o2;
        if (k.o3 >= 0) roles["o3"] = k.o3;
        roles["c"] = k.c;
        if (k.cr >= 0) roles["c_r"] = k.cr;
        copies.push_back(json{{"id", i},
                              {"depth", (int)k.depth},
                              {"variant", (int)k.variant},
                              {"roles", roles},
                              {"children", host.children(i)}});
    }
    return json{{"flavor", to_string(host.flavor)}, {"copies", copies}};
}

json registry_json(const UniformHost& host) {
    json copies = json::array();
    for (int i = 0; i < (int)host.copies.size(); ++i) {
        const UniformCopy& k = host.copies[i];
        json roles;
        roles["o1"] = k.o[0];
        roles["o2"] = k.o[1];
        roles["o3"] = k.o[2];
        if (k.center >= 0) roles["c"] = k.center;
        json children = json::array();
        if (k.child[0] >= 0)
            children = json::array({k.child[0], k.child[1], k.child[2]});
        copies.push_back(json{{"id", i},
                              {"depth", (int)k.depth},
                              {"roles", roles},
                              {"children", children}});
    }
    return json{{"copies", copies}};
}

namespace {

bool verify_single(const json& cert) {
    const Graph pattern = graph6_decode(cert.at("pattern").get<std::string>());
    const Graph host = resolve_host(cert);
    EmbeddingMap map;
    map.pattern_size = pattern.vertex_count();
    map.image = cert.at("image").get<std::vector<int>>();
    std::vector<Pin> pins;
    if (cert.contains("pins"))
        for (const auto& p : cert.at("pins")) pins.push_back({p.at(0), p.at(1)});
    std::vector<AdjacencyConstraint> cs;
    if (cert.contains("adjacency"))
        for (const auto& c : cert.at("adjacency")) cs.push_back({c.at(0), c.at(1)});
    return verify_embedding(pattern, host, map, pins, cs);
}

bool verify_triple(const json& cert) {
    const Graph host = graph6_decode(cert.at("host").get<std::string>());
    const auto& trees = cert.at("trees");
    const auto& images = cert.at("images");
    if (trees.size() != images.size()) return false;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const Graph t = graph6_decode(trees[i].get<std::string>());
        EmbeddingMap map{t.vertex_count(), images[i].get<std::vector<int>>()};
        if (!verify_embedding(t, host, map)) return false;
    }
    return true;
}

bool verify_search(const json& cert) {
    const Graph cand = graph6_decode(cert.at("candidate").get<std::string>());
    if (!cert.at("universal").get<bool>()) {
        if (!cert.contains("failing_tree")) return false;
        const Graph t = graph6_decode(cert.at("failing_tree").get<std::string>());
        return !subgraph_embed(t, cand).has_value();
    }
    for (const auto& e : cert.at("embeddings")) {
        const Graph t = graph6_decode(e.at("tree").get<std::string>());
        EmbeddingMap map{t.vertex_count(), e.at("image").get<std::vector<int>>()};
        if (!verify_embedding(t, cand, map)) return false;
    }
    return true;
}

}  // namespace

bool verify_certificate(const json& cert) {
    try {
        if (cert.contains("candidate")) return verify_search(cert);
        if (cert.contains("trees")) return verify_triple(cert);
        return verify_single(cert);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace treehost
