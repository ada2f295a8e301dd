#pragma once

// The reproduction suite behind `localhom verify-paper`. Each check computes
// the groups from scratch through the public operations and records expected
// versus computed values.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "localhom/builtins.hpp"
#include "localhom/complex.hpp"
#include "localhom/homology.hpp"
#include "localhom/io.hpp"
#include "localhom/linalg.hpp"
#include "localhom/mv.hpp"
#include "localhom/probe.hpp"

namespace localhom {

struct CheckResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::vector<std::string> details;  // failures, then notes

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            details.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

namespace detail {

inline std::string groups_text(const HomologySummary& h, int lo, int hi) {
    std::string out = "(";
    for (int k = lo; k <= hi; ++k) out += (k > lo ? ", " : "") + h.at(k).to_string();
    return out + ")";
}

inline HomologyGroup free_group(std::size_t r) { return HomologyGroup{r, {}}; }

inline HomologySummary summary_of(std::vector<HomologyGroup> groups) {
    HomologySummary h;
    h.groups = std::move(groups);
    return h;
}

/// Regular icosahedron boundary: 12 vertices, 20 triangles.
inline SimplicialComplex icosahedron() {
    const std::vector<std::vector<std::string>> facets{
        {"0", "1", "2"}, {"0", "2", "3"}, {"0", "3", "4"}, {"0", "4", "5"}, {"0", "5", "1"},
        {"1", "2", "6"}, {"2", "3", "7"}, {"3", "4", "8"}, {"4", "5", "9"}, {"5", "1", "10"},
        {"6", "7", "2"}, {"7", "8", "3"}, {"8", "9", "4"}, {"9", "10", "5"}, {"10", "6", "1"},
        {"6", "7", "11"}, {"7", "8", "11"}, {"8", "9", "11"}, {"9", "10", "11"}, {"10", "6", "11"}};
    return SimplicialComplex::from_labeled_facets(facets);
}

// All m-element vertex sets of k with no two members adjacent.
inline std::vector<std::vector<std::string>> independent_sets(const SimplicialComplex& k,
                                                              std::size_t m) {
    const auto labels = k.vertex_labels();
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> current;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        if (current.size() == m) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < labels.size(); ++i) {
            const auto v = k.vertex(labels[i]);
            bool ok = true;
            for (const auto& c : current)
                if (adjacent(k, v, k.vertex(c))) ok = false;
            if (!ok) continue;
            current.push_back(labels[i]);
            grow(i + 1);
            current.pop_back();
        }
    };
    grow(0);
    return out;
}

}  // namespace detail

struct VerifyOptions {
    std::filesystem::path corpus = corpus_dir();
    std::optional<std::string> only;
    unsigned snf_samples = 1000;
    unsigned seed = 20221;
};

inline CheckResult check_builtin_homology(const VerifyOptions& o) {
    CheckResult r{"def2.3-builtins", "homology of the builtin corpus", true, {}};
    using detail::free_group;
    for (int n = 1; n <= 4; ++n) {
        std::vector<HomologyGroup> want(static_cast<std::size_t>(n + 1));
        want.front() = free_group(1);
        want.back() = free_group(1);
        const auto h = homology(builtin("sphere" + std::to_string(n), o.corpus));
        r.expect(h == detail::summary_of(want),
                 "sphere" + std::to_string(n) + " gave " + detail::groups_text(h, 0, n));
    }
    const std::vector<std::pair<std::string, HomologySummary>> surfaces{
        {"octahedron", detail::summary_of({free_group(1), {}, free_group(1)})},
        {"torus7", detail::summary_of({free_group(1), free_group(2), free_group(1)})},
        {"rp2_6", detail::summary_of({free_group(1), HomologyGroup{0, {2}}, {}})},
        {"klein8", detail::summary_of({free_group(1), HomologyGroup{1, {2}}, {}})},
    };
    for (const auto& [name, want] : surfaces) {
        const auto k = builtin(name, o.corpus);
        const auto h = homology(k);
        r.expect(h == want, name + " gave " + detail::groups_text(h, 0, 2) + ", expected " +
                                detail::groups_text(want, 0, 2));
        r.expect(h.euler_characteristic() == k.euler_characteristic(),
                 name + ": Euler characteristic from ranks differs from the f-vector");
    }
    return r;
}

inline CheckResult check_wedge_points(const VerifyOptions& o) {
    CheckResult r{"thm3.1", "wedge point of M v M is not locally Euclidean", true, {}};
    for (const auto& name : {"octahedron", "torus7", "rp2_6"}) {
        const auto m = builtin(name, o.corpus);
        const auto base = m.vertex_labels().front();
        const auto w = wedge(m, base, m, base);
        const auto local = local_homology(w.complex, w.wedge_vertex);
        const std::string tag = std::string(name) + " v " + name;
        r.expect(local.at(2) == detail::free_group(2),
                 tag + ": local H_2 = " + local.at(2).to_string() + ", expected Z^2");
        bool rest_zero = true;
        for (int k = local.first_degree; k <= local.last_degree(); ++k)
            if (k != 2 && !local.at(k).is_zero()) rest_zero = false;
        r.expect(rest_zero, tag + ": local homology " + detail::groups_text(local, 0, 3) +
                                " is not zero outside degree 2");
        const auto report = obstruction_report(w.complex);
        r.expect(report.overall == Overall::not_a_manifold &&
                     report.witness_vertex == w.wedge_vertex,
                 tag + ": report does not name the wedge vertex as witness");
    }
    return r;
}

inline CheckResult check_multi_point(const VerifyOptions& o) {
    CheckResult r{"thm3.1-claim", "H_n(M, M - {p_1..p_m}) = Z^m for separated points", true, {}};
    const std::vector<std::pair<std::string, SimplicialComplex>> spheres{
        {"octahedron", builtin("octahedron", o.corpus)},
        {"sphere3", builtin("sphere3", o.corpus)},
        {"icosahedron", detail::icosahedron()},
    };
    for (const auto& [name, k] : spheres) {
        const int n = k.dimension();
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto sets = detail::independent_sets(k, m);
            for (const auto& s : sets) {
                const auto h = local_homology_multi(k, s);
                auto want = std::vector<HomologyGroup>(static_cast<std::size_t>(n + 1));
                want.back() = detail::free_group(m);
                r.expect(h == detail::summary_of(want),
                         name + " at {" + s.front() + ",...} (m=" + std::to_string(m) + ") gave " +
                             detail::groups_text(h, 0, n));
            }
            r.note(name + ": m=" + std::to_string(m) + " checked on " +
                   std::to_string(sets.size()) + " vertex sets");
        }
    }
    return r;
}

inline CheckResult check_cone_rp2(const VerifyOptions& o) {
    CheckResult r{"ex3.5", "apex of the cone on RP^2", true, {}};
    const auto c = cone(builtin("rp2_6", o.corpus), "apex");
    const auto local = local_homology(c, "apex");
    r.expect(local.at(2) == HomologyGroup{0, {2}}, "apex H_2 = " + local.at(2).to_string());
    r.expect(local.at(3).is_zero(), "apex H_3 = " + local.at(3).to_string());
    const auto report = obstruction_report(c);
    r.expect(report.overall == Overall::not_a_manifold && report.witness_vertex == "apex",
             "report: " + verdict_line(report));
    return r;
}

inline CheckResult check_prism_claims(const VerifyOptions& o) {
    CheckResult r{"thm3.6-claims", "punctured cylinder versus punctured base", true, {}};
    for (const auto& name : builtin_surfaces()) {
        const auto m = builtin(name, o.corpus);
        const auto prism = prism_product(m);
        bool fiber_ok = true;
        for (const auto& x : m.vertex_labels()) {
            const auto base = local_homology(m, x);
            const auto punctured = local_homology(prism.ambient(), bottom_label(x));
            r.expect(punctured == base, name + " at (" + x + ",0): cylinder gives " +
                                            detail::groups_text(punctured, 0, 3) + ", base gives " +
                                            detail::groups_text(base, 0, 3));
            const std::vector<VertexId> fiber{prism.ambient().vertex(bottom_label(x)),
                                              prism.ambient().vertex(top_label(x))};
            const auto tube = relative_homology(
                SubcomplexPair(prism.ambient(), delete_vertices(prism.ambient(), fiber)));
            fiber_ok = fiber_ok && tube == base;
        }
        r.note(name + ": H_*(M x I, (M - x) x I) = H_*(M, M - x) at every vertex: " +
               (fiber_ok ? "yes" : "no"));
    }
    return r;
}

inline CheckResult check_apex_formula(const VerifyOptions& o) {
    CheckResult r{"thm3.6-apex", "apex local homology is shifted reduced homology", true, {}};
    for (const auto& name : builtin_names()) {
        const auto m = builtin(name, o.corpus);
        const auto c = cone(m, "apex");
        const auto local = local_homology(c, "apex");
        const auto formula = apex_local_homology_formula(m);
        r.expect(local == formula, name + ": " + detail::groups_text(local, 0, c.dimension()) +
                                       " vs " + detail::groups_text(formula, 0, c.dimension()));
        r.expect(homology(c, true).is_zero(), name + ": cone is not acyclic");
    }
    return r;
}

/// Builtins plus cones, wedges, unions and a cylinder built from them.
inline std::vector<std::pair<std::string, SimplicialComplex>> excision_corpus(
    const std::filesystem::path& corpus) {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    for (const auto& name : builtin_names()) out.emplace_back(name, builtin(name, corpus));
    for (const auto& name : builtin_surfaces()) {
        const auto m = builtin(name, corpus);
        out.emplace_back("cone(" + name + ")", cone(m, "apex"));
        const auto v = m.vertex_labels().front();
        out.emplace_back(name + " v " + name, wedge(m, v, m, v).complex);
    }
    out.emplace_back("torus7 v rp2_6",
                     wedge(builtin("torus7", corpus), "1", builtin("rp2_6", corpus), "1").complex);
    out.emplace_back("octahedron x I", prism_product(builtin("octahedron", corpus)).ambient());
    out.emplace_back("interval + sphere1",
                     disjoint_union(builtin("interval", corpus), builtin("sphere1", corpus)));
    out.emplace_back("two triangles at a vertex",
                     SimplicialComplex::from_labeled_facets({{"a", "b", "c"}, {"a", "d", "e"}}));
    return out;
}

inline CheckResult check_excision(const VerifyOptions& o) {
    CheckResult r{"thm2.5", "deleted-star local homology equals shifted link homology", true, {}};
    std::size_t vertices = 0;
    for (const auto& [name, k] : excision_corpus(o.corpus)) {
        for (const auto& v : k.vertex_labels()) {
            ++vertices;
            const auto a = local_homology(k, v);
            const auto b = local_homology_via_link(k, v);
            r.expect(a == b, name + " at " + v + ": " + detail::groups_text(a, 0, 4) + " vs " +
                                 detail::groups_text(b, 0, 4));
        }
    }
    r.expect(vertices >= 50, "only " + std::to_string(vertices) + " vertices examined");
    r.note(std::to_string(vertices) + " vertices examined");
    return r;
}

/// The three decompositions used by the exactness check.
struct NamedDecomposition {
    std::string name;
    MvDecomposition decomposition;
};

inline std::vector<NamedDecomposition> mv_test_decompositions(const std::filesystem::path& corpus) {
    std::vector<NamedDecomposition> out;
    {
        const auto k = SimplicialComplex::from_labeled_facets({{"1", "2", "3"}, {"2", "3", "4"}});
        const auto a = SimplicialComplex::from_labeled_facets({{"1", "2", "3"}});
        const auto b = SimplicialComplex::from_labeled_facets({{"2", "3", "4"}});
        out.push_back({"two triangles sharing an edge", MvDecomposition(k, a, b)});
    }
    {
        const auto k = builtin("octahedron", corpus);
        const auto top = star(k, "1");
        const auto bottom = star(k, "6");
        out.push_back({"octahedron hemispheres", MvDecomposition(k, top, bottom)});
    }
    {
        const auto m = builtin("octahedron", corpus);
        const auto w = wedge(m, "1", m, "1");
        std::vector<std::vector<std::string>> lf, rf;
        for (const auto& f : canonical_facets(w.complex)) {
            const bool is_left = std::any_of(f.begin(), f.end(),
                                             [](const std::string& l) { return l.rfind("L.", 0) == 0; });
            (is_left ? lf : rf).push_back(f);
        }
        const auto a = rebase(w.complex, SimplicialComplex::from_labeled_facets(lf));
        const auto b = rebase(w.complex, SimplicialComplex::from_labeled_facets(rf));
        const auto c = deleted(a, w.wedge_vertex);
        const auto d = deleted(b, w.wedge_vertex);
        out.push_back({"wedge of two octahedra", MvDecomposition(w.complex, a, b, c, d)});
    }
    return out;
}

inline CheckResult check_mv(const VerifyOptions& o) {
    CheckResult r{"thm2.9", "relative Mayer-Vietoris exactness over Q", true, {}};
    for (const auto& [name, m] : mv_test_decompositions(o.corpus)) {
        const auto report = mv_exactness_check(m, 3);
        for (const auto& node : report.nodes)
            r.expect(node.exact(), name + ": not exact at " + node.name);
        if (name == "wedge of two octahedra") {
            const auto& beta = report.to_union[2];
            r.expect(beta.source_dimension() == 2 && beta.target_dimension() == 2 && beta.rank() == 2,
                     name + ": degree-2 map into H_2(K, Y) is not a rank-2 isomorphism");
        }
    }
    return r;
}

inline CheckResult check_snf_properties(const VerifyOptions& o) {
    CheckResult r{"def2.3-snf", "Smith normal form properties on random matrices", true, {}};
    std::mt19937 gen(o.seed);
    std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
    unsigned bad = 0;
    for (unsigned s = 0; s < o.snf_samples; ++s) {
        IntegerMatrix a(static_cast<std::size_t>(dim(gen)), static_cast<std::size_t>(dim(gen)));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(gen);
        const auto snf = smith_normal_form(a);
        bool ok = multiply(multiply(snf.u, a), snf.v) == snf.d;
        ok = ok && abs(determinant(snf.u)) == 1 && abs(determinant(snf.v)) == 1;
        const auto diag = snf.diagonal();
        for (std::size_t i = 0; i < snf.d.rows(); ++i)
            for (std::size_t j = 0; j < snf.d.cols(); ++j)
                if (i != j && snf.d(i, j) != 0) ok = false;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0) ok = false;
            if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) ok = false;
            if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) ok = false;
        }
        ok = ok && smith_normal_form(transpose(a)).diagonal() == diag;
        if (!ok && ++bad <= 5) {
            std::ostringstream os;
            os << "matrix " << s << ":\n" << a;
            r.expect(false, os.str());
        }
    }
    r.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(o.snf_samples) + " matrices failed");
    r.note(std::to_string(o.snf_samples) + " random matrices");
    return r;
}

inline CheckResult check_controls(const VerifyOptions& o) {
    CheckResult r{"sec3-controls", "cone on S^2 and interval endpoints", true, {}};
    const auto c = cone(builtin("sphere2", o.corpus), "apex");
    const auto report = obstruction_report(c);
    r.expect(report.overall == Overall::consistent_with_n_manifold_with_boundary &&
                 report.inferred_dimension == 3,
             "cone(sphere2): " + verdict_line(report));
    const auto edge = builtin("interval", o.corpus);
    for (const auto& v : edge.vertex_labels())
        r.expect(vertex_verdict(edge, v).category == VertexCategory::boundary_like,
                 "interval endpoint " + v + " is not boundary_like");
    return r;
}

inline std::vector<std::pair<std::string, std::function<CheckResult(const VerifyOptions&)>>>
verification_checks() {
    return {
        {"def2.3-builtins", check_builtin_homology},
        {"thm3.1", check_wedge_points},
        {"thm3.1-claim", check_multi_point},
        {"ex3.5", check_cone_rp2},
        {"thm3.6-claims", check_prism_claims},
        {"thm3.6-apex", check_apex_formula},
        {"thm2.5", check_excision},
        {"thm2.9", check_mv},
        {"def2.3-snf", check_snf_properties},
        {"sec3-controls", check_controls},
    };
}

/// Runs every check (or only `o.only`). A check that throws, for instance on
/// a corrupted corpus file, is reported as failed with the error message.
inline std::vector<CheckResult> run_verification(const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bool known = !o.only;
    for (const auto& [id, fn] : verification_checks()) {
        if (o.only && *o.only != id) continue;
        known = true;
        try {
            out.push_back(fn(o));
        } catch (const std::exception& e) {
            CheckResult r{id, "error", false, {}};
            r.expect(false, e.what());
            out.push_back(std::move(r));
        }
    }
    if (!known) throw Error("unknown check id '" + *o.only + "'");
    return out;
}

inline std::string render(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.id << "  " << r.title << '\n';
        for (const auto& d : r.details) os << "        " << d << '\n';
        if (!r.passed) ++failed;
    }
    os << (results.size() - failed) << "/" << results.size() << " checks passed\n";
    return os.str();
}

}  // namespace localhom
