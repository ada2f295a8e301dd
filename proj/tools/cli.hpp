#pragma once

// Command-line front end. `run` is separate from main() so the test suite can
// drive it in-process.
//
// Exit status: 0 success, 1 domain error (unreadable file, unknown vertex,
// failed verification), 2 usage error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "localhom/builtins.hpp"
#include "localhom/complex.hpp"
#include "localhom/homology.hpp"
#include "localhom/io.hpp"
#include "localhom/json.hpp"
#include "localhom/mv.hpp"
#include "localhom/probe.hpp"
#include "localhom/verify.hpp"

namespace localhom::cli {

struct Source {
    std::string builtin;
    std::string path;

    void attach(CLI::App& app) {
        auto* b = app.add_option("--builtin", builtin, "builtin complex name");
        auto* i = app.add_option("--in", path, "facet file (.scx)");
        b->excludes(i);
        i->excludes(b);
    }

    SimplicialComplex load() const {
        if (!builtin.empty()) return localhom::builtin(builtin);
        return read_complex(path);
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require_file(const std::string& path, const char* flag) {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    if (!std::filesystem::is_regular_file(path))
        throw Error(std::string(flag) + ": no such file '" + path + "'");
}

inline void require_source(const Source& s) {
    if (s.builtin.empty() && s.path.empty()) throw UsageError("one of --builtin or --in is required");
    if (!s.path.empty()) require_file(s.path, "--in");
}

inline std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simplicial homology and local-homology manifold probe", "localhom"};
    app.require_subcommand(1);

    Source hom_src;
    bool reduced = false, hom_json = false;
    auto* hom = app.add_subcommand("homology", "homology of a complex");
    hom_src.attach(*hom);
    hom->add_flag("--reduced", reduced, "reduced homology");
    hom->add_flag("--json", hom_json, "JSON output");

    Source loc_src;
    std::string vertex, vertex_list;
    bool loc_json = false;
    auto* loc = app.add_subcommand("local", "local homology at a vertex or separated vertex set");
    loc_src.attach(*loc);
    auto* v1opt = loc->add_option("--vertex", vertex, "vertex label");
    auto* vsopt = loc->add_option("--vertices", vertex_list, "comma-separated vertex labels");
    v1opt->excludes(vsopt);
    vsopt->excludes(v1opt);
    loc->add_flag("--json", loc_json, "JSON output");

    std::string kind, in1, in2, apex = "apex", wv1, wv2, out_path;
    auto* con = app.add_subcommand("construct", "build a cone, wedge, prism or disjoint union");
    con->add_option("--kind", kind, "cone | wedge | prism | union")
        ->check(CLI::IsMember({"cone", "wedge", "prism", "union"}));
    con->add_option("--in", in1, "input facet file");
    con->add_option("--in2", in2, "second input (wedge, union)");
    con->add_option("--apex", apex, "apex label for cones");
    con->add_option("--v1", wv1, "wedge vertex in the first input");
    con->add_option("--v2", wv2, "wedge vertex in the second input");
    con->add_option("--out", out_path, "output facet file");

    Source chk_src;
    bool chk_json = false;
    auto* chk = app.add_subcommand("check", "manifold obstruction report");
    chk_src.attach(*chk);
    chk->add_flag("--json", chk_json, "JSON output");

    std::string mv_k, mv_a, mv_b, mv_c, mv_d;
    int max_degree = 3;
    bool mv_json = false;
    auto* mv = app.add_subcommand("mv", "relative Mayer-Vietoris exactness check");
    mv->add_option("--in", mv_k, "ambient complex K");
    mv->add_option("--a", mv_a, "subcomplex A");
    mv->add_option("--b", mv_b, "subcomplex B");
    mv->add_option("--c", mv_c, "subcomplex C of A");
    mv->add_option("--d", mv_d, "subcomplex D of B");
    mv->add_option("--max-degree", max_degree, "highest degree checked")->check(CLI::NonNegativeNumber);
    mv->add_flag("--json", mv_json, "JSON output");

    std::string only;
    bool ver_json = false;
    auto* ver = app.add_subcommand("verify-paper", "run the reproduction suite");
    ver->add_option("--only", only, "run a single check by id");
    ver->add_flag("--json", ver_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*hom) {
            require_source(hom_src);
            const auto h = homology(hom_src.load(), reduced);
            out << (hom_json ? to_json(h).dump(2) + "\n" : render(h));
        } else if (*loc) {
            require_source(loc_src);
            if (vertex.empty() && vertex_list.empty())
                throw UsageError("one of --vertex or --vertices is required");
            const auto k = loc_src.load();
            HomologySummary h;
            if (!vertex.empty()) {
                h = local_homology(k, vertex);
            } else {
                const auto vs = split_commas(vertex_list);
                h = local_homology_multi(k, vs);
            }
            out << (loc_json ? to_json(h).dump(2) + "\n" : render(h));
        } else if (*con) {
            if (kind.empty()) throw UsageError("--kind is required");
            if (out_path.empty()) throw UsageError("--out is required");
            require_file(in1, "--in");
            const bool binary = kind == "wedge" || kind == "union";
            if (binary) require_file(in2, "--in2");
            if (kind == "wedge" && (wv1.empty() || wv2.empty()))
                throw UsageError("wedge needs --v1 and --v2");
            const auto k1 = read_complex(in1);
            SimplicialComplex result;
            if (kind == "cone") {
                result = cone(k1, apex);
            } else if (kind == "prism") {
                result = prism_product(k1).ambient();
            } else if (kind == "wedge") {
                result = wedge(k1, wv1, read_complex(in2), wv2).complex;
            } else {
                result = disjoint_union(k1, read_complex(in2));
            }
            write_complex(out_path, result);
            out << "wrote " << out_path << " (" << result.count(0) << " vertices, "
                << result.facets().size() << " facets)\n";
        } else if (*chk) {
            require_source(chk_src);
            const auto report = obstruction_report(chk_src.load());
            out << (chk_json ? to_json(report).dump(2) + "\n" : render(report));
        } else if (*mv) {
            require_file(mv_k, "--in");
            require_file(mv_a, "--a");
            require_file(mv_b, "--b");
            if (!mv_c.empty()) require_file(mv_c, "--c");
            if (!mv_d.empty()) require_file(mv_d, "--d");
            const auto k = read_complex(mv_k);
            const MvDecomposition m(k, read_complex(mv_a), read_complex(mv_b),
                                    mv_c.empty() ? SimplicialComplex{} : read_complex(mv_c),
                                    mv_d.empty() ? SimplicialComplex{} : read_complex(mv_d));
            const auto report = mv_exactness_check(m, max_degree);
            out << (mv_json ? to_json(report).dump(2) + "\n" : render(report));
        } else if (*ver) {
            VerifyOptions opts;
            if (!only.empty()) opts.only = only;
            const auto results = run_verification(opts);
            if (ver_json) {
                auto arr = nlohmann::json::array();
                for (const auto& r : results)
                    arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
                out << arr.dump(2) << '\n';
            } else {
                out << render(results);
            }
            for (const auto& r : results)
                if (!r.passed) return 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace localhom::cli
