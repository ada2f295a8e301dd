#pragma once

// Chain complexes of simplicial complexes and pairs, and their integral
// homology: absolute, relative, reduced and local.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "localhom/complex.hpp"
#include "localhom/error.hpp"
#include "localhom/linalg.hpp"

namespace localhom {

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    /// Exactly one copy of Z and nothing else.
    bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

    /// "0", "Z", "Z^2", "Z/2", "Z + Z/2", ...
    std::string to_string() const {
        std::vector<std::string> parts;
        if (free_rank == 1)
            parts.emplace_back("Z");
        else if (free_rank > 1)
            parts.push_back("Z^" + std::to_string(free_rank));
        for (const auto& t : torsion) parts.push_back("Z/" + t.str());
        if (parts.empty()) return "0";
        std::string out = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
        return out;
    }
};

/// Homology in every degree from first_degree upward. Degrees outside the
/// stored range are zero.
struct HomologySummary {
    int first_degree = 0;
    std::vector<HomologyGroup> groups;
    bool reduced = false;

    int last_degree() const { return first_degree + static_cast<int>(groups.size()) - 1; }

    HomologyGroup at(int degree) const {
        if (degree < first_degree || degree > last_degree()) return {};
        return groups[static_cast<std::size_t>(degree - first_degree)];
    }

    /// Highest degree with a nonzero group, or nullopt if all vanish.
    std::optional<int> top_nonzero_degree() const {
        for (int k = last_degree(); k >= first_degree; --k)
            if (!at(k).is_zero()) return k;
        return std::nullopt;
    }

    bool is_zero() const { return !top_nonzero_degree().has_value(); }

    /// Alternating sum of free ranks.
    long long euler_characteristic() const {
        long long chi = 0;
        for (int k = first_degree; k <= last_degree(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(at(k).free_rank);
        return chi;
    }

    /// Degreewise equality over the union of both ranges; the reduced flag
    /// is not compared.
    friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
        const int lo = std::min(a.first_degree, b.first_degree);
        const int hi = std::max(a.last_degree(), b.last_degree());
        for (int k = lo; k <= hi; ++k)
            if (a.at(k) != b.at(k)) return false;
        return true;
    }
};

/// Graded free abelian groups on oriented simplices with boundary matrices.
///
/// boundaries[k] presents C_k -> C_{k-1} with rows indexed by bases[k-1];
/// boundaries[0] is the zero map out of C_0.
struct ChainComplex {
    std::vector<std::vector<Simplex>> bases;
    std::vector<IntegerMatrix> boundaries;

    int top_degree() const { return static_cast<int>(bases.size()) - 1; }

    std::size_t rank(int k) const {
        if (k < 0 || k > top_degree()) return 0;
        return bases[static_cast<std::size_t>(k)].size();
    }

    /// Matrix of C_k -> C_{k-1}; zero of the right shape outside the stored range.
    IntegerMatrix boundary(int k) const {
        if (k >= 0 && k <= top_degree()) return boundaries[static_cast<std::size_t>(k)];
        return IntegerMatrix(rank(k - 1), rank(k));
    }

    std::optional<std::size_t> index_of(int k, const Simplex& s) const {
        if (k < 0 || k > top_degree()) return std::nullopt;
        const auto& b = bases[static_cast<std::size_t>(k)];
        auto it = std::lower_bound(b.begin(), b.end(), s);
        if (it == b.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - b.begin());
    }
};

namespace detail {

// Faces not present in the next-lower basis are dropped, which realises the
// quotient by a subcomplex.
inline ChainComplex assemble_chain_complex(std::vector<std::vector<Simplex>> bases) {
    while (!bases.empty() && bases.back().empty()) bases.pop_back();
    ChainComplex c;
    c.bases = std::move(bases);
    for (std::size_t k = 0; k < c.bases.size(); ++k) {
        if (k == 0) {
            c.boundaries.emplace_back(0, c.bases[0].size());
            continue;
        }
        IntegerMatrix d(c.bases[k - 1].size(), c.bases[k].size());
        for (std::size_t j = 0; j < c.bases[k].size(); ++j) {
            const auto& s = c.bases[k][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto row = c.index_of(static_cast<int>(k) - 1, s.facet_without(i));
                if (row) d(*row, j) = (i % 2 == 0) ? 1 : -1;
            }
        }
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

}  // namespace detail

/// Simplicial chain complex of k with lexicographically ordered bases.
inline ChainComplex chain_complex(const SimplicialComplex& k) {
    std::vector<std::vector<Simplex>> bases;
    for (int d = 0; d <= k.dimension(); ++d)
        bases.emplace_back(k.simplices(d).begin(), k.simplices(d).end());
    return detail::assemble_chain_complex(std::move(bases));
}

/// Chains of the ambient complex modulo chains of the subcomplex: the basis in
/// each degree is the set of ambient simplices not in the subcomplex.
inline ChainComplex relative_chain_complex(const SubcomplexPair& p) {
    std::vector<std::vector<Simplex>> bases;
    const auto& sub = p.sub();
    for (int d = 0; d <= p.ambient().dimension(); ++d) {
        std::vector<Simplex> layer;
        for (const auto& s : p.ambient().simplices(d))
            if (!sub.contains(s)) layer.push_back(s);
        bases.push_back(std::move(layer));
    }
    return detail::assemble_chain_complex(std::move(bases));
}

/// ker d_k / im d_{k+1} in every degree. With `reduced`, degree 0 is
/// augmented by the sum-of-coefficients map, adding degree -1.
inline HomologySummary homology(const ChainComplex& c, bool reduced = false) {
    const int top = c.top_degree();
    for (int k = 1; k <= top; ++k) {
        const auto dk = c.boundary(k);
        const auto dk1 = c.boundary(k + 1);
        if (dk.rows() != c.rank(k - 1) || dk.cols() != c.rank(k))
            throw ConsistencyError("boundary matrix in degree " + std::to_string(k) +
                                   " has the wrong shape");
        if (k + 1 <= top && !multiply(dk, dk1).is_zero())
            throw ConsistencyError("boundary operator does not square to zero in degree " +
                                   std::to_string(k + 1));
    }

    const int lo = reduced ? -1 : 0;
    auto dim = [&](int k) -> std::size_t {
        if (k == -1) return reduced ? 1 : 0;
        return c.rank(k);
    };
    auto matrix = [&](int k) -> IntegerMatrix {
        if (k == 0 && reduced) {
            IntegerMatrix aug(1, c.rank(0));
            for (std::size_t j = 0; j < c.rank(0); ++j) aug(0, j) = 1;
            return aug;
        }
        if (k <= lo) return IntegerMatrix(0, dim(k));
        return c.boundary(k);
    };

    // factors[i] belongs to the map out of degree lo + i.
    const int hi = std::max(top, lo);
    std::vector<std::vector<Integer>> factors;
    for (int k = lo; k <= hi + 1; ++k) factors.push_back(invariant_factors(matrix(k)));

    HomologySummary out;
    out.first_degree = lo;
    out.reduced = reduced;
    for (int k = lo; k <= hi; ++k) {
        const auto& out_map = factors[static_cast<std::size_t>(k - lo)];
        const auto& in_map = factors[static_cast<std::size_t>(k - lo + 1)];
        HomologyGroup g;
        g.free_rank = dim(k) - out_map.size() - in_map.size();
        for (const auto& t : in_map)
            if (t > 1) g.torsion.push_back(t);
        out.groups.push_back(std::move(g));
    }
    return out;
}

inline HomologySummary homology(const SimplicialComplex& k, bool reduced = false) {
    return homology(chain_complex(k), reduced);
}

inline HomologySummary relative_homology(const SubcomplexPair& p) {
    return homology(relative_chain_complex(p));
}

/// H_*(k, k - v), computed against the deleted star of v.
inline HomologySummary local_homology(const SimplicialComplex& k, std::string_view v) {
    return relative_homology(SubcomplexPair(k, deleted(k, v)));
}

/// H_*(k, k - S) for a set S of pairwise non-adjacent vertices.
inline HomologySummary local_homology_multi(const SimplicialComplex& k,
                                            std::span<const std::string> vertices) {
    if (vertices.empty()) throw PreconditionError("vertex set is empty");
    std::vector<VertexId> ids;
    for (const auto& l : vertices) {
        const auto id = k.vertex(l);
        if (std::find(ids.begin(), ids.end(), id) != ids.end())
            throw PreconditionError("vertex '" + l + "' listed twice");
        ids.push_back(id);
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (adjacent(k, ids[i], ids[j]))
                throw PreconditionError("vertices '" + vertices[i] + "' and '" + vertices[j] +
                                        "' are adjacent; their deleted stars overlap");
    return relative_homology(SubcomplexPair(k, delete_vertices(k, ids)));
}

namespace detail {

// Degree k of the result is degree k-1 of the reduced input.
inline HomologySummary shift_up(const HomologySummary& reduced) {
    HomologySummary out;
    out.first_degree = reduced.first_degree + 1;
    out.groups = reduced.groups;
    out.reduced = false;
    return out;
}

}  // namespace detail

/// Local homology from the link: degree k is reduced H_{k-1}(link(k, v)),
/// with reduced H_{-1} of the empty link equal to Z.
inline HomologySummary local_homology_via_link(const SimplicialComplex& k, std::string_view v) {
    return detail::shift_up(homology(link(k, v), true));
}

/// Predicted local homology at the apex of a cone over m: reduced homology
/// of m shifted up one degree.
inline HomologySummary apex_local_homology_formula(const SimplicialComplex& m) {
    return detail::shift_up(homology(m, true));
}

/// Multi-line "H_k = ..." rendering over degrees first..last.
inline std::string render(const HomologySummary& h) {
    std::ostringstream os;
    for (int k = h.first_degree; k <= h.last_degree(); ++k) {
        if (k < 0 && h.at(k).is_zero()) continue;
        os << "H_" << k << " = " << h.at(k).to_string() << '\n';
    }
    return os.str();
}

}  // namespace localhom
