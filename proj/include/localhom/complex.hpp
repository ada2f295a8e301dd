#pragma once

// Finite abstract simplicial complexes and the constructions used to model
// cones, wedges, cylinders and punctured neighbourhoods.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "localhom/error.hpp"

namespace localhom {

using VertexId = std::uint32_t;

/// An oriented simplex: a nonempty, strictly increasing list of vertex ids.
class Simplex {
public:
    /// Sorts `vertices`; throws PreconditionError on empty input or repeats.
    explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw PreconditionError("a simplex needs at least one vertex");
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw PreconditionError("a simplex may not repeat a vertex");
    }
    Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Codimension-one face obtained by dropping the i-th vertex.
    /// Only valid for dimension >= 1.
    Simplex facet_without(std::size_t i) const {
        std::vector<VertexId> out;
        out.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j)
            if (j != i) out.push_back(vertices_[j]);
        return Simplex(sorted_tag{}, std::move(out));
    }

    Simplex with(VertexId v) const {
        auto out = vertices_;
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return Simplex(std::move(out));
    }

    /// Removes v; the result must stay nonempty.
    Simplex without(VertexId v) const {
        std::vector<VertexId> out;
        for (auto w : vertices_)
            if (w != v) out.push_back(w);
        return Simplex(sorted_tag{}, std::move(out));
    }

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    struct sorted_tag {};
    Simplex(sorted_tag, std::vector<VertexId> v) : vertices_(std::move(v)) {
        if (vertices_.empty()) throw PreconditionError("a simplex needs at least one vertex");
    }

    std::vector<VertexId> vertices_;
};

/// A finite abstract simplicial complex, closed under faces.
///
/// Vertices carry text labels. The label table may hold labels that no
/// simplex uses: subcomplexes (links, deleted stars) keep the ambient table so
/// that their simplices are directly comparable with the ambient ones.
/// Values are immutable once constructed.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of `generators`. Every vertex id must index `labels`;
    /// labels must be pairwise distinct.
    SimplicialComplex(std::vector<std::string> labels, std::span<const Simplex> generators)
        : labels_(std::move(labels)) {
        for (VertexId i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw LabelCollision("duplicate vertex label '" + labels_[i] + "'");
        }
        for (const auto& s : generators) {
            for (auto v : s.vertices())
                if (v >= labels_.size())
                    throw PreconditionError("simplex refers to vertex id " + std::to_string(v) +
                                            " outside the label table");
            insert_closed(s);
        }
    }

    SimplicialComplex(std::vector<std::string> labels, std::initializer_list<Simplex> generators)
        : SimplicialComplex(std::move(labels),
                            std::span<const Simplex>(generators.begin(), generators.size())) {}

    /// Builds a complex from facets given by label lists; labels are numbered
    /// in order of first appearance.
    static SimplicialComplex from_labeled_facets(
        const std::vector<std::vector<std::string>>& facets) {
        std::vector<std::string> labels;
        std::map<std::string, VertexId, std::less<>> seen;
        std::vector<Simplex> gens;
        for (const auto& facet : facets) {
            std::vector<VertexId> ids;
            for (const auto& l : facet) {
                auto [it, fresh] = seen.emplace(l, static_cast<VertexId>(labels.size()));
                if (fresh) labels.push_back(l);
                ids.push_back(it->second);
            }
            gens.emplace_back(std::move(ids));
        }
        return SimplicialComplex(std::move(labels), gens);
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }

    std::optional<VertexId> find(std::string_view label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Id of a vertex that is a 0-simplex of this complex.
    VertexId vertex(std::string_view label) const {
        auto v = find(label);
        if (!v || !contains(Simplex{*v})) throw UnknownVertex(std::string(label));
        return *v;
    }

    bool has_vertex(std::string_view label) const {
        auto v = find(label);
        return v && contains(Simplex{*v});
    }

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return by_dim_.empty(); }

    const std::set<Simplex>& simplices(int dim) const {
        static const std::set<Simplex> none;
        if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
        return by_dim_[static_cast<std::size_t>(dim)];
    }

    std::size_t count(int dim) const { return simplices(dim).size(); }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& s : by_dim_) n += s.size();
        return n;
    }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (const auto& s : by_dim_) f.push_back(s.size());
        return f;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t d = 0; d < by_dim_.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
        return chi;
    }

    bool contains(const Simplex& s) const {
        const auto& layer = simplices(s.dimension());
        return layer.find(s) != layer.end();
    }

    /// Ids of the 0-simplices, ascending.
    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (const auto& s : simplices(0)) out.push_back(s[0]);
        return out;
    }

    /// Labels of the 0-simplices, sorted lexicographically.
    std::vector<std::string> vertex_labels() const {
        std::vector<std::string> out;
        for (auto v : vertices()) out.push_back(labels_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Maximal simplices, in (dimension, lexicographic) order.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (int d = 0; d <= dimension(); ++d) {
            for (const auto& s : simplices(d)) {
                bool maximal = true;
                for (const auto& t : simplices(d + 1)) {
                    if (std::includes(t.vertices().begin(), t.vertices().end(),
                                      s.vertices().begin(), s.vertices().end())) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) out.push_back(s);
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each_simplex(Fn&& fn) const {
        for (const auto& layer : by_dim_)
            for (const auto& s : layer) fn(s);
    }

    /// Same label table and same simplices.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.by_dim_ == b.by_dim_;
    }

private:
    void insert_closed(const Simplex& s) {
        auto d = static_cast<std::size_t>(s.dimension());
        if (by_dim_.size() <= d) by_dim_.resize(d + 1);
        if (!by_dim_[d].insert(s).second) return;
        if (d == 0) return;
        for (std::size_t i = 0; i < s.size(); ++i) insert_closed(s.facet_without(i));
    }

    std::vector<std::string> labels_;
    std::map<std::string, VertexId, std::less<>> index_;
    std::vector<std::set<Simplex>> by_dim_;
};

/// Returns `k` re-expressed over the label table of `onto`. Every label used
/// by a simplex of `k` must exist in `onto`.
inline SimplicialComplex rebase(const SimplicialComplex& onto, const SimplicialComplex& k) {
    if (onto.labels() == k.labels()) return k;
    std::vector<Simplex> gens;
    k.for_each_simplex([&](const Simplex& s) {
        std::vector<VertexId> ids;
        for (auto v : s.vertices()) {
            auto id = onto.find(k.label(v));
            if (!id) throw UnknownVertex(k.label(v));
            ids.push_back(*id);
        }
        gens.emplace_back(std::move(ids));
    });
    return SimplicialComplex(onto.labels(), gens);
}

/// A complex together with a subcomplex over the same vertex labels.
class SubcomplexPair {
public:
    /// Rebases `sub` onto the labels of `ambient` and checks containment.
    SubcomplexPair(SimplicialComplex ambient, const SimplicialComplex& sub)
        : ambient_(std::move(ambient)) {
        try {
            sub_ = rebase(ambient_, sub);
        } catch (const UnknownVertex& e) {
            throw PreconditionError("subcomplex is not contained in the ambient complex: " +
                                    std::string(e.what()));
        }
        sub_.for_each_simplex([&](const Simplex& s) {
            if (!ambient_.contains(s))
                throw PreconditionError(
                    "subcomplex is not contained in the ambient complex: simplex of dimension " +
                    std::to_string(s.dimension()) + " missing");
        });
    }

    const SimplicialComplex& ambient() const noexcept { return ambient_; }
    const SimplicialComplex& sub() const noexcept { return sub_; }

private:
    SimplicialComplex ambient_;
    SimplicialComplex sub_;
};

/// Bijective renaming of vertex labels.
struct VertexMap {
    std::map<std::string, std::string> image;
};

// ---------------------------------------------------------------------------
// Constructions

/// Simplicial cone: every simplex of k, every simplex joined with the apex,
/// and the apex itself.
inline SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex_label) {
    if (k.find(apex_label))
        throw LabelCollision("apex label '" + apex_label + "' already names a vertex");
    auto labels = k.labels();
    const auto apex = static_cast<VertexId>(labels.size());
    labels.push_back(apex_label);
    std::vector<Simplex> gens{Simplex{apex}};
    for (const auto& f : k.facets()) gens.push_back(f.with(apex));
    return SimplicialComplex(std::move(labels), gens);
}

namespace detail {

// Copies the used vertices of k into a fresh label table with a prefix,
// optionally sending one vertex to an existing id.
inline std::vector<Simplex> import_prefixed(const SimplicialComplex& k, const std::string& prefix,
                                            std::vector<std::string>& labels,
                                            std::optional<std::pair<VertexId, VertexId>> glue) {
    std::map<VertexId, VertexId> remap;
    for (auto v : k.vertices()) {
        if (glue && glue->first == v) {
            remap[v] = glue->second;
            continue;
        }
        remap[v] = static_cast<VertexId>(labels.size());
        labels.push_back(prefix + k.label(v));
    }
    std::vector<Simplex> gens;
    for (const auto& f : k.facets()) {
        std::vector<VertexId> ids;
        for (auto v : f.vertices()) ids.push_back(remap.at(v));
        gens.emplace_back(std::move(ids));
    }
    return gens;
}

}  // namespace detail

/// Disjoint union; labels become "L.<label>" and "R.<label>".
inline SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    std::vector<std::string> labels;
    auto gens = detail::import_prefixed(k1, "L.", labels, std::nullopt);
    auto right = detail::import_prefixed(k2, "R.", labels, std::nullopt);
    gens.insert(gens.end(), right.begin(), right.end());
    return SimplicialComplex(std::move(labels), gens);
}

struct Wedge {
    SimplicialComplex complex;
    std::string wedge_vertex;
};

inline constexpr std::string_view kWedgeLabel = "w";

/// One-point union identifying v1 in k1 with v2 in k2. The glued vertex is
/// labelled "w"; all others are prefixed "L." or "R.".
inline Wedge wedge(const SimplicialComplex& k1, std::string_view v1, const SimplicialComplex& k2,
                   std::string_view v2) {
    const auto a = k1.vertex(v1);
    const auto b = k2.vertex(v2);
    std::vector<std::string> labels{std::string(kWedgeLabel)};
    auto gens = detail::import_prefixed(k1, "L.", labels, std::pair{a, VertexId{0}});
    auto right = detail::import_prefixed(k2, "R.", labels, std::pair{b, VertexId{0}});
    gens.insert(gens.end(), right.begin(), right.end());
    return {SimplicialComplex(std::move(labels), gens), std::string(kWedgeLabel)};
}

inline std::string bottom_label(std::string_view label) { return std::string(label) + "@0"; }
inline std::string top_label(std::string_view label) { return std::string(label) + "@1"; }

/// Staircase triangulation of |k| x [0,1]. Vertex x becomes "x@0" (bottom)
/// and "x@1" (top); the bottom copy is the distinguished subcomplex.
inline SubcomplexPair prism_product(const SimplicialComplex& k) {
    const auto n = static_cast<VertexId>(k.labels().size());
    std::vector<std::string> labels;
    labels.reserve(2 * n);
    for (const auto& l : k.labels()) labels.push_back(bottom_label(l));
    for (const auto& l : k.labels()) labels.push_back(top_label(l));

    std::vector<Simplex> prisms;
    std::vector<Simplex> bottom;
    for (const auto& f : k.facets()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::vector<VertexId> ids;
            for (std::size_t j = 0; j <= i; ++j) ids.push_back(vs[j]);
            for (std::size_t j = i; j < vs.size(); ++j) ids.push_back(vs[j] + n);
            prisms.emplace_back(std::move(ids));
        }
        bottom.push_back(f);
    }
    SimplicialComplex ambient(labels, prisms);
    SimplicialComplex base(std::move(labels), bottom);
    return SubcomplexPair(std::move(ambient), base);
}

/// Simplices s with v not in s and s + v in k.
inline SimplicialComplex link(const SimplicialComplex& k, std::string_view v) {
    const auto id = k.vertex(v);
    std::vector<Simplex> gens;
    for (int d = 1; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
            if (s.contains(id)) gens.push_back(s.without(id));
    return SimplicialComplex(k.labels(), gens);
}

/// Closed star: face closure of all simplices containing v.
inline SimplicialComplex star(const SimplicialComplex& k, std::string_view v) {
    const auto id = k.vertex(v);
    std::vector<Simplex> gens;
    k.for_each_simplex([&](const Simplex& s) {
        if (s.contains(id)) gens.push_back(s);
    });
    return SimplicialComplex(k.labels(), gens);
}

/// Full subcomplex on every vertex except those in `removed`.
inline SimplicialComplex delete_vertices(const SimplicialComplex& k,
                                         std::span<const VertexId> removed) {
    std::vector<Simplex> gens;
    k.for_each_simplex([&](const Simplex& s) {
        for (auto r : removed)
            if (s.contains(r)) return;
        gens.push_back(s);
    });
    return SimplicialComplex(k.labels(), gens);
}

/// All simplices of k not containing v: the compact model of |k| minus v.
inline SimplicialComplex deleted(const SimplicialComplex& k, std::string_view v) {
    const VertexId id = k.vertex(v);
    return delete_vertices(k, std::span<const VertexId>(&id, 1));
}

/// Isomorphic copy with vertices renamed through `m`, which must be a
/// bijection from the vertex labels of k.
inline SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& m) {
    const auto used = k.vertex_labels();
    std::set<std::string> targets;
    for (const auto& [from, to] : m.image) {
        if (!k.has_vertex(from))
            throw PreconditionError("relabeling mentions '" + from + "', which is not a vertex");
        if (!targets.insert(to).second)
            throw PreconditionError("relabeling is not injective: '" + to + "' is hit twice");
    }
    if (m.image.size() != used.size())
        throw PreconditionError("relabeling is not total on the vertices");

    std::vector<std::string> labels;
    std::map<VertexId, VertexId> remap;
    for (auto v : k.vertices()) {
        remap[v] = static_cast<VertexId>(labels.size());
        labels.push_back(m.image.at(k.label(v)));
    }
    std::vector<Simplex> gens;
    for (const auto& f : k.facets()) {
        std::vector<VertexId> ids;
        for (auto v : f.vertices()) ids.push_back(remap.at(v));
        gens.emplace_back(std::move(ids));
    }
    return SimplicialComplex(std::move(labels), gens);
}

/// Simplices common to both complexes; b is rebased onto the labels of a.
inline SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    const auto rb = rebase(a, b);
    std::vector<Simplex> gens;
    a.for_each_simplex([&](const Simplex& s) {
        if (rb.contains(s)) gens.push_back(s);
    });
    return SimplicialComplex(a.labels(), gens);
}

/// Union of two complexes; b is rebased onto the labels of a.
inline SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    const auto rb = rebase(a, b);
    auto gens = a.facets();
    for (auto& f : rb.facets()) gens.push_back(std::move(f));
    return SimplicialComplex(a.labels(), gens);
}

/// True when the two vertices span an edge of k.
inline bool adjacent(const SimplicialComplex& k, VertexId a, VertexId b) {
    return a != b && k.contains(Simplex{a, b});
}

}  // namespace localhom
