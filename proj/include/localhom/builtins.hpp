#pragma once

// Named test complexes. Spheres and the interval are generated; the surfaces
// are read from facet files in the corpus directory and validated before use.

#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "localhom/complex.hpp"
#include "localhom/error.hpp"
#include "localhom/io.hpp"

#ifndef LOCALHOM_CORPUS_DIR
#define LOCALHOM_CORPUS_DIR "data"
#endif

namespace localhom {

/// LOCALHOM_CORPUS_DIR from the environment, else the build-time default.
inline std::filesystem::path corpus_dir() {
    if (const char* env = std::getenv("LOCALHOM_CORPUS_DIR"); env && *env) return env;
    return LOCALHOM_CORPUS_DIR;
}

/// Boundary of the (n+1)-simplex on vertices "1".."n+2".
inline SimplicialComplex sphere(int n) {
    if (n < 0) throw PreconditionError("sphere dimension must be non-negative");
    std::vector<std::string> labels;
    for (int i = 1; i <= n + 2; ++i) labels.push_back(std::to_string(i));
    std::vector<Simplex> gens;
    for (int skip = 0; skip < n + 2; ++skip) {
        std::vector<VertexId> ids;
        for (int i = 0; i < n + 2; ++i)
            if (i != skip) ids.push_back(static_cast<VertexId>(i));
        gens.emplace_back(std::move(ids));
    }
    return SimplicialComplex(std::move(labels), gens);
}

inline SimplicialComplex interval() {
    return SimplicialComplex({"1", "2"}, {Simplex{0, 1}});
}

struct SurfaceExpectation {
    std::vector<std::size_t> f_vector;
    long long euler_characteristic;
    bool two_neighborly;
};

inline const std::map<std::string, SurfaceExpectation, std::less<>>& corpus_surfaces() {
    static const std::map<std::string, SurfaceExpectation, std::less<>> table{
        {"octahedron", {{6, 12, 8}, 2, false}},
        {"torus7", {{7, 21, 14}, 0, true}},
        {"rp2_6", {{6, 15, 10}, 1, true}},
        {"klein8", {{8, 24, 16}, 0, false}},
    };
    return table;
}

/// Throws CorpusError unless k is a closed surface with the expected counts:
/// every edge in exactly two triangles and every vertex link one cycle.
inline void self_check_surface(std::string_view name, const SimplicialComplex& k,
                               const SurfaceExpectation& want) {
    auto fail = [&](const std::string& why) {
        throw CorpusError("builtin '" + std::string(name) + "' failed its self check: " + why);
    };
    if (k.f_vector() != want.f_vector) {
        std::string got;
        for (auto f : k.f_vector()) got += (got.empty() ? "" : ",") + std::to_string(f);
        fail("f-vector is (" + got + ")");
    }
    if (k.euler_characteristic() != want.euler_characteristic)
        fail("Euler characteristic is " + std::to_string(k.euler_characteristic()));
    if (want.two_neighborly && k.count(1) != k.count(0) * (k.count(0) - 1) / 2)
        fail("not every vertex pair is an edge");

    std::map<Simplex, int> edge_use;
    for (const auto& t : k.simplices(2))
        for (std::size_t i = 0; i < 3; ++i) ++edge_use[t.facet_without(i)];
    for (const auto& e : k.simplices(1))
        if (edge_use[e] != 2)
            fail("edge " + k.label(e[0]) + "-" + k.label(e[1]) + " lies in " +
                 std::to_string(edge_use[e]) + " triangles");

    for (auto v : k.vertices()) {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& t : k.simplices(2)) {
            if (!t.contains(v)) continue;
            const auto e = t.without(v);
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        bool cycle = !adj.empty();
        for (const auto& [w, nb] : adj)
            if (nb.size() != 2) cycle = false;
        if (cycle) {
            // Walk the cycle from one end and check it covers the link.
            VertexId prev = adj.begin()->first, cur = adj.begin()->second[0];
            std::size_t steps = 1;
            while (cur != adj.begin()->first && steps <= adj.size()) {
                const auto& nb = adj[cur];
                const VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                ++steps;
            }
            cycle = steps == adj.size();
        }
        if (!cycle) fail("link of vertex " + k.label(v) + " is not a single cycle");
    }
}

inline std::vector<std::string> builtin_names() {
    return {"interval", "sphere0", "sphere1", "sphere2", "sphere3", "sphere4",
            "octahedron", "torus7", "rp2_6", "klein8"};
}

/// The closed surfaces among the builtins.
inline std::vector<std::string> builtin_surfaces() {
    return {"sphere2", "octahedron", "torus7", "rp2_6", "klein8"};
}

/// Looks up a builtin. Accepts "sphereN" and "sphere(N)" for N in 0..4.
inline SimplicialComplex builtin(std::string_view name,
                                 const std::filesystem::path& dir = corpus_dir()) {
    if (name == "interval") return interval();
    for (int n = 0; n <= 4; ++n) {
        const auto k = std::to_string(n);
        if (name == "sphere" + k || name == "sphere(" + k + ")") {
            auto s = sphere(n);
            if (s.euler_characteristic() != (n % 2 == 0 ? 2 : 0))
                throw CorpusError("builtin 'sphere" + k + "' failed its self check");
            return s;
        }
    }
    auto it = corpus_surfaces().find(name);
    if (it == corpus_surfaces().end()) throw Error("unknown builtin '" + std::string(name) + "'");
    const auto path = dir / (std::string(name) + ".scx");
    if (!std::filesystem::exists(path))
        throw CorpusError("builtin '" + std::string(name) + "': missing corpus file " + path.string());
    SimplicialComplex k;
    try {
        k = read_complex(path);
    } catch (const Error& e) {
        throw CorpusError("builtin '" + std::string(name) + "' failed to load: " + e.what());
    }
    self_check_surface(name, k, it->second);
    return k;
}

}  // namespace localhom
