#pragma once

// Per-vertex manifold probe. A vertex whose local homology is not that of a
// Euclidean interior point or a boundary point rules out a manifold
// structure; the converse is not claimed.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "localhom/complex.hpp"
#include "localhom/homology.hpp"

namespace localhom {

enum class VertexCategory { interior_like, boundary_like, not_locally_euclidean };

struct Witness {
    int degree = 0;
    HomologyGroup group;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VertexVerdict {
    std::string vertex;
    VertexCategory category = VertexCategory::boundary_like;
    int dimension = -1;  // meaningful for interior_like only
    std::optional<Witness> witness;
    HomologySummary local;
};

/// Classifies a local homology pattern: Z in exactly one degree n is
/// interior_like(n), all zero is boundary_like, anything else is an
/// obstruction. When the dimension of the vertex star is known it must equal
/// n as well: an open star homeomorphic to R^n has dimension n.
inline VertexVerdict classify_local_homology(std::string vertex, HomologySummary local,
                                             std::optional<int> star_dimension = {}) {
    VertexVerdict v;
    v.vertex = std::move(vertex);
    const auto top = local.top_nonzero_degree();
    if (!top) {
        v.category = VertexCategory::boundary_like;
    } else {
        std::optional<int> lower;
        for (int k = *top - 1; k >= local.first_degree; --k)
            if (!local.at(k).is_zero()) {
                lower = k;
                break;
            }
        if (local.at(*top).is_infinite_cyclic() && !lower) {
            if (star_dimension && *star_dimension != *top) {
                v.category = VertexCategory::not_locally_euclidean;
                v.witness = Witness{*top, local.at(*top)};
            } else {
                v.category = VertexCategory::interior_like;
                v.dimension = *top;
            }
        } else {
            v.category = VertexCategory::not_locally_euclidean;
            // Prefer the top group when it is itself wrong; otherwise the
            // highest stray group below it.
            const int deg = local.at(*top).is_infinite_cyclic() ? *lower : *top;
            v.witness = Witness{deg, local.at(deg)};
        }
    }
    v.local = std::move(local);
    return v;
}

inline VertexVerdict vertex_verdict(const SimplicialComplex& k, std::string_view v) {
    return classify_local_homology(std::string(v), local_homology(k, v), star(k, v).dimension());
}

enum class RidgeMode { closed, with_boundary };

struct PseudomanifoldFlags {
    bool pure = true;
    bool ridge_condition = true;
    bool strongly_connected = true;

    friend bool operator==(const PseudomanifoldFlags&, const PseudomanifoldFlags&) = default;
};

/// pure: all facets share one dimension n. ridge_condition: every
/// (n-1)-simplex lies in exactly two facets (closed) or at most two
/// (with_boundary). strongly_connected: facets connected through ridges.
inline PseudomanifoldFlags pseudomanifold_check(const SimplicialComplex& k,
                                                RidgeMode mode = RidgeMode::with_boundary) {
    PseudomanifoldFlags flags;
    const auto facets = k.facets();
    if (facets.empty()) return flags;
    const int n = k.dimension();
    flags.pure = std::all_of(facets.begin(), facets.end(),
                             [n](const Simplex& f) { return f.dimension() == n; });

    std::map<Simplex, std::vector<std::size_t>> cofaces;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (facets[i].dimension() >= 1)
            for (std::size_t j = 0; j < facets[i].size(); ++j)
                cofaces[facets[i].facet_without(j)].push_back(i);

    if (n >= 1) {
        for (const auto& r : k.simplices(n - 1)) {
            auto it = cofaces.find(r);
            std::size_t deg = 0;
            if (it != cofaces.end())
                deg = static_cast<std::size_t>(std::count_if(
                    it->second.begin(), it->second.end(),
                    [&](std::size_t f) { return facets[f].dimension() == n; }));
            const bool ok = mode == RidgeMode::closed ? deg == 2 : deg <= 2;
            if (!ok) {
                flags.ridge_condition = false;
                break;
            }
        }
    }

    std::vector<bool> seen(facets.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const auto f = todo.front();
        todo.pop();
        if (facets[f].dimension() < 1) continue;
        for (std::size_t j = 0; j < facets[f].size(); ++j)
            for (auto g : cofaces[facets[f].facet_without(j)])
                if (!seen[g]) {
                    seen[g] = true;
                    ++reached;
                    todo.push(g);
                }
    }
    flags.strongly_connected = reached == facets.size();
    return flags;
}

enum class Overall {
    consistent_with_closed_n_manifold,
    consistent_with_n_manifold_with_boundary,
    not_a_manifold
};

struct ObstructionReport {
    std::vector<VertexVerdict> verdicts;  // sorted by vertex label
    std::optional<int> inferred_dimension;
    PseudomanifoldFlags pseudomanifold;
    Overall overall = Overall::consistent_with_closed_n_manifold;
    std::optional<std::string> witness_vertex;
    std::optional<Witness> witness;
    bool dimension_mismatch = false;
};

/// Verdicts for every vertex plus the combinatorial flags. The witness is
/// the lexicographically least offending vertex.
inline ObstructionReport obstruction_report(const SimplicialComplex& k) {
    ObstructionReport r;
    r.pseudomanifold = pseudomanifold_check(k);
    for (const auto& label : k.vertex_labels()) r.verdicts.push_back(vertex_verdict(k, label));

    for (const auto& v : r.verdicts)
        if (v.category == VertexCategory::not_locally_euclidean) {
            r.overall = Overall::not_a_manifold;
            r.witness_vertex = v.vertex;
            r.witness = v.witness;
            return r;
        }

    std::optional<int> dim;
    bool boundary = false;
    for (const auto& v : r.verdicts) {
        if (v.category == VertexCategory::boundary_like) boundary = true;
        if (v.category == VertexCategory::interior_like) dim = std::max(dim.value_or(v.dimension), v.dimension);
    }
    if (dim) {
        for (const auto& v : r.verdicts)
            if (v.category == VertexCategory::interior_like && v.dimension != *dim) {
                r.overall = Overall::not_a_manifold;
                r.dimension_mismatch = true;
                r.witness_vertex = v.vertex;
                r.witness = Witness{v.dimension, v.local.at(v.dimension)};
                return r;
            }
        r.inferred_dimension = dim;
    }
    r.overall = boundary ? Overall::consistent_with_n_manifold_with_boundary
                         : Overall::consistent_with_closed_n_manifold;
    return r;
}

inline std::string category_name(const VertexVerdict& v) {
    switch (v.category) {
        case VertexCategory::interior_like:
            return "interior_like(" + std::to_string(v.dimension) + ")";
        case VertexCategory::boundary_like:
            return "boundary_like";
        case VertexCategory::not_locally_euclidean:
            return "not_locally_euclidean";
    }
    return {};
}

/// One-line verdict, e.g. "NOT A MANIFOLD: vertex 'apex', H_2 local = Z/2".
inline std::string verdict_line(const ObstructionReport& r) {
    std::ostringstream os;
    switch (r.overall) {
        case Overall::not_a_manifold:
            os << "NOT A MANIFOLD: vertex '" << *r.witness_vertex << "', ";
            if (r.dimension_mismatch)
                os << "local dimension " << r.witness->degree << " disagrees with "
                   << "another vertex";
            else
                os << "H_" << r.witness->degree << " local = " << r.witness->group.to_string();
            break;
        case Overall::consistent_with_closed_n_manifold:
            os << "CONSISTENT WITH A CLOSED ";
            if (r.inferred_dimension) os << *r.inferred_dimension << "-";
            os << "MANIFOLD";
            break;
        case Overall::consistent_with_n_manifold_with_boundary:
            os << "CONSISTENT WITH A ";
            if (r.inferred_dimension) os << *r.inferred_dimension << "-";
            os << "MANIFOLD WITH BOUNDARY";
            break;
    }
    return os.str();
}

/// Sorted per-vertex table followed by the verdict line.
inline std::string render(const ObstructionReport& r) {
    std::ostringstream os;
    std::size_t width = 6;
    for (const auto& v : r.verdicts) width = std::max(width, v.vertex.size());
    os << "vertex" << std::string(width - 6 + 2, ' ') << "verdict\n";
    for (const auto& v : r.verdicts) {
        os << v.vertex << std::string(width - v.vertex.size() + 2, ' ') << category_name(v);
        if (v.witness) os << "  (H_" << v.witness->degree << " = " << v.witness->group.to_string() << ")";
        os << '\n';
    }
    os << "pure=" << (r.pseudomanifold.pure ? "yes" : "no")
       << " ridge=" << (r.pseudomanifold.ridge_condition ? "yes" : "no")
       << " strongly_connected=" << (r.pseudomanifold.strongly_connected ? "yes" : "no") << '\n';
    os << verdict_line(r) << '\n';
    return os.str();
}

}  // namespace localhom
