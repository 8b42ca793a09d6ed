#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "treehost/certificate.hpp"
#include "treehost/codec.hpp"
#include "treehost/embed_search.hpp"
#include "treehost/outerplanar.hpp"
#include "treehost/planarity.hpp"
#include "treehost/search.hpp"
#include "treehost/stacked_host.hpp"
#include "treehost/svg.hpp"
#include "treehost/three_trees.hpp"
#include "treehost/tree_embedder.hpp"
#include "treehost/trees.hpp"

namespace th = treehost;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void emit(const th::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw th::InvalidParams("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

th::Tree tree_from_g6(const std::string& g6) { return th::make_tree(th::graph6_decode(g6)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal host graphs for trees and outerplanar graphs"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string out_path;
    app.add_option("--out", out_path, "write data output to a file instead of stdout");

    // build-host
    auto* cmd_build = app.add_subcommand("build-host", "construct a host graph");
    int bh_d = 0, bh_variant = 1;
    std::string bh_flavor = "outerplanar";
    bool bh_uniform = false;
    cmd_build->add_option("--d", bh_d, "depth")->required();
    cmd_build->add_option("--variant", bh_variant, "1 or 2");
    cmd_build->add_option("--flavor", bh_flavor, "triangulated|outerplanar");
    cmd_build->add_flag("--uniform", bh_uniform, "uniform stacked triangulation S_d");

    // embed-tree
    auto* cmd_embed = app.add_subcommand("embed-tree", "embed a tree into the universal host");
    std::string et_tree;
    int et_n = 0;
    cmd_embed->add_option("--tree", et_tree, "tree in graph6")->required();
    cmd_embed->add_option("--n", et_n, "host parameter (default: the tree order)");

    // embed-kary
    auto* cmd_kary = app.add_subcommand("embed-kary", "embed a complete k-ary tree");
    int ek_k = 2, ek_h = 0;
    cmd_kary->add_option("--k", ek_k, "arity")->required();
    cmd_kary->add_option("--height", ek_h, "height")->required();

    // three-trees
    auto* cmd_three = app.add_subcommand("three-trees", "planar host for three trees");
    std::string t1g, t2g, t3g;
    cmd_three->add_option("--t1", t1g, "first tree, graph6")->required();
    cmd_three->add_option("--t2", t2g, "second tree, graph6")->required();
    cmd_three->add_option("--t3", t3g, "third tree, graph6")->required();

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "lower bound for three caterpillars");
    long long bn = 0, bk = 0, bl = 0;
    cmd_bounds->add_option("--n", bn)->required();
    cmd_bounds->add_option("--k", bk)->required();
    cmd_bounds->add_option("--l", bl)->required();

    // outerplanar
    auto* cmd_outer = app.add_subcommand("outerplanar", "outerplanar-universal constructions");
    cmd_outer->require_subcommand(1);
    auto* cmd_gn = cmd_outer->add_subcommand("build-gn", "rooted universal core");
    int gn_n = 0;
    cmd_gn->add_option("--n", gn_n)->required();
    auto* cmd_sg = cmd_outer->add_subcommand("build-script-g", "recursive host");
    int sg_n = 0;
    cmd_sg->add_option("--n", sg_n)->required();
    auto* cmd_oe = cmd_outer->add_subcommand("embed", "embed an outerplanar pattern");
    int oe_n = 0;
    std::string oe_pattern;
    cmd_oe->add_option("--host-n", oe_n)->required();
    cmd_oe->add_option("--pattern", oe_pattern, "pattern in graph6")->required();

    // search
    auto* cmd_search = app.add_subcommand("search", "find a universal candidate");
    int se_n = 0, se_jobs = 0;
    bool se_stacked_only = false;
    std::string se_pc;
    cmd_search->add_option("--n", se_n)->required();
    cmd_search->add_flag("--stacked-only", se_stacked_only,
                         "filter planar_code candidates to stacked triangulations");
    cmd_search->add_option("--planar-code", se_pc, "read candidates from a planar_code file");
    cmd_search->add_option("--jobs", se_jobs, "worker count (default: hardware)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "re-check a certificate JSON");
    std::string vf_path;
    cmd_verify->add_option("file", vf_path, "certificate file")->required();

    // render
    auto* cmd_render = app.add_subcommand("render", "emit an SVG drawing");
    std::string rd_graph, rd_cert;
    cmd_render->add_option("--graph", rd_graph, "graph in graph6");
    cmd_render->add_option("--cert", rd_cert, "certificate JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_build) {
            th::json j;
            if (bh_uniform) {
                th::UniformHost host = th::build_uniform(bh_d);
                j["host_ref"] = th::host_ref_uniform(bh_d);
                if (host.graph.vertex_count() <= th::kInlineHostLimit) {
                    j["host"] = th::graph6_encode(host.graph);
                    j["registry"] = th::registry_json(host);
                }
                j["vertices"] = host.graph.vertex_count();
                j["edges"] = host.graph.edge_count();
            } else {
                th::StackedHost host =
                    th::build_host(bh_d, bh_variant, th::flavor_from_string(bh_flavor));
                j["host_ref"] = th::host_ref_stacked(bh_d, bh_variant, host.flavor);
                if (host.graph.vertex_count() <= th::kInlineHostLimit) {
                    j["host"] = th::graph6_encode(host.graph);
                    j["registry"] = th::registry_json(host);
                }
                j["vertices"] = host.graph.vertex_count();
                j["edges"] = host.graph.edge_count();
                j["interior"] = host.interior_count();
            }
            emit(j, out_path);
            return kExitOk;
        }

        if (*cmd_embed) {
            th::Tree t = tree_from_g6(et_tree);
            const int n = et_n > 0 ? et_n : t.size();
            if (t.size() > n) throw th::InvalidParams("tree larger than the host parameter");
            const int d = th::ceil_log2(n);
            th::StackedHost host = th::build_host(d, 1, th::Flavor::outerplanar);
            th::EmbedResult r = th::embed_universal_into(t, host);
            th::json j = th::certificate_json(
                t.graph, host.graph, th::host_ref_stacked(d, 1, th::Flavor::outerplanar),
                r.map, {}, r.obligations);
            j["depth"] = d;
            j["variant"] = 1;
            j["flavor"] = th::to_string(host.flavor);
            if (host.graph.vertex_count() <= th::kInlineHostLimit)
                j["host_registry"] = th::registry_json(host);
            emit(j, out_path);
            return kExitOk;
        }

        if (*cmd_kary) {
            auto [host, map] = th::embed_kary(ek_k, ek_h);
            th::Tree t = th::kary_tree(ek_k, ek_h);
            const int d = th::kary_host_depth(ek_k, ek_h);
            th::json j = th::certificate_json(t.graph, host.graph, th::host_ref_uniform(d), map);
            j["depth"] = d;
            emit(j, out_path);
            return kExitOk;
        }

        if (*cmd_three) {
            th::Tree t1 = tree_from_g6(t1g), t2 = tree_from_g6(t2g), t3 = tree_from_g6(t3g);
            th::TripleHost host = th::build_three_tree_host(t1, t2, t3);
            if (!th::is_planar(host.host)) {
                std::cerr << "host failed the planarity check\n";
                return kExitVerify;
            }
            emit(th::triple_host_json(host, t1, t2, t3), out_path);
            return kExitOk;
        }

        if (*cmd_bounds) {
            th::Rational r = th::thm8_lower_bound({bn, bk, bl});
            if (out_path.empty()) {
                std::cout << r.str() << "\n";
            } else {
                std::ofstream f(out_path);
                f << r.str() << "\n";
            }
            return kExitOk;
        }

        if (*cmd_outer) {
            if (*cmd_gn) {
                th::PathLikeCore core = th::build_gn(gn_n);
                th::json j;
                j["host_ref"] = th::host_ref_gn(gn_n);
                if (core.graph.vertex_count() <= th::kInlineHostLimit)
                    j["host"] = th::graph6_encode(core.graph);
                j["vertices"] = core.graph.vertex_count();
                j["edges"] = core.graph.edge_count();
                j["roles"] = th::json{{"v", core.v}, {"x", core.x}};
                emit(j, out_path);
                return kExitOk;
            }
            if (*cmd_sg) {
                th::RecursiveHost host = th::build_script_g(sg_n);
                th::json j;
                j["host_ref"] = th::host_ref_script_g(sg_n);
                if (host.graph.vertex_count() <= th::kInlineHostLimit)
                    j["host"] = th::graph6_encode(host.graph);
                j["vertices"] = host.graph.vertex_count();
                j["edges"] = host.graph.edge_count();
                j["nodes"] = host.nodes.size();
                emit(j, out_path);
                return kExitOk;
            }
            if (*cmd_oe) {
                th::Graph pattern = th::graph6_decode(oe_pattern);
                th::RecursiveHost host = th::build_script_g(oe_n);
                th::EmbeddingMap map = th::embed_outerplanar(pattern, host);
                th::json j = th::certificate_json(pattern, host.graph,
                                                  th::host_ref_script_g(oe_n), map);
                emit(j, out_path);
                return kExitOk;
            }
        }

        if (*cmd_search) {
            if (se_n >= th::kNoUniversalFrom) {
                std::cerr << "no universal n-vertex graph for all n-vertex trees exists for n >= "
                          << th::kNoUniversalFrom << "\n";
                return kExitUsage;
            }
            std::vector<th::Graph> candidates;
            if (!se_pc.empty()) {
                const std::string raw = slurp(se_pc);
                const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
                for (auto& [g, rot] : th::planar_code_decode(bytes)) {
                    if (g.vertex_count() != se_n) continue;
                    if (se_stacked_only && !th::is_stacked(g)) continue;
                    candidates.push_back(std::move(g));
                }
            } else {
                candidates = th::enumerate_stacked(se_n);
            }
            const int jobs = se_jobs > 0
                                 ? se_jobs
                                 : std::max(1u, std::thread::hardware_concurrency());
            std::cerr << "scanning " << candidates.size() << " candidates with " << jobs
                      << " worker(s)\n";
            auto res = th::find_universal(candidates, se_n, jobs);
            if (!res) {
                std::cerr << "source exhausted with no universal candidate\n";
                return kExitVerify;
            }
            std::cerr << "winner found in " << res->elapsed_ms << " ms (last candidate)\n";
            emit(th::search_certificate_json(*res), out_path);
            return kExitOk;
        }

        if (*cmd_verify) {
            const th::json j = th::json::parse(slurp(vf_path));
            if (!th::verify_certificate(j)) {
                std::cerr << "certificate verification FAILED\n";
                return kExitVerify;
            }
            std::cerr << "certificate ok\n";
            return kExitOk;
        }

        if (*cmd_render) {
            th::Graph g;
            std::vector<int> highlight;
            if (!rd_graph.empty()) {
                g = th::graph6_decode(rd_graph);
            } else if (!rd_cert.empty()) {
                const th::json j = th::json::parse(slurp(rd_cert));
                g = th::resolve_host(j);
                if (j.contains("image"))
                    highlight = j.at("image").get<std::vector<int>>();
            } else {
                std::cerr << "render needs --graph or --cert\n";
                return kExitUsage;
            }
            auto rot = th::planar_rotation(g);
            const std::string svg = th::render_svg(g, rot, highlight);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream f(out_path);
                f << svg;
            }
            return kExitOk;
        }
    } catch (const th::ResourceLimit& e) {
        std::cerr << e.what() << "\n";
        return kExitResource;
    } catch (const th::InvalidParams& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const th::DivisibilityError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const th::SizeMismatch& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const th::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
